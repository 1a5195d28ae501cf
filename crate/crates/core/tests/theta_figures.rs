//! The three worked Theta pictures, stored as fixtures.

use std::collections::BTreeSet;

use bernstein_degree::plane_partitions::{c_statistic, HermitianType, PlanePartition};
use bernstein_degree::poset_paths::{corners, theta, theta_inverse, Point, RootPoset};

struct Figure {
    ty: HermitianType,
    k: u32,
    rows: Vec<String>,
    facet: BTreeSet<Point>,
}

fn parse_point(s: &str) -> Point {
    let (i, j) = s.trim_matches(|c| c == '(' || c == ')').split_once(',').expect("point");
    (i.parse().unwrap(), j.parse().unwrap())
}

fn load(name: &str) -> Figure {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap();
    let (mut ty, mut k, mut rows, mut facet) = (None, None, Vec::new(), BTreeSet::new());
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "group" => {
                let w: Vec<&str> = words.collect();
                let num = |i: usize| w[i].parse::<u32>().unwrap();
                ty = Some(match w[0] {
                    "upq" => HermitianType::UnitaryPQ { p: num(1), q: num(2) },
                    "mp" => HermitianType::Metaplectic { n: num(1) },
                    "ostar" => HermitianType::StarOrthogonal { n: num(1) },
                    other => panic!("unknown group {other}"),
                });
            }
            "k" => k = Some(words.next().unwrap().parse().unwrap()),
            "row" => rows.push(words.next().unwrap().to_string()),
            "facet" => facet.extend(words.map(parse_point)),
            other => panic!("unknown key {other}"),
        }
    }
    Figure {
        ty: ty.unwrap(),
        k: k.unwrap(),
        rows,
        facet,
    }
}

fn check(name: &str, size: usize) {
    let fig = load(name);
    let rows: Vec<&str> = fig.rows.iter().map(String::as_str).collect();
    let p = PlanePartition::from_rows(&rows, fig.k).unwrap();
    let poset = RootPoset::new(fig.ty).unwrap();
    let f = theta(fig.ty, fig.k, &p).unwrap();
    let native: BTreeSet<Point> = f.points.iter().map(|&x| poset.to_native(x)).collect();
    assert_eq!(native.len(), size);
    assert_eq!(native, fig.facet, "{name}");
    assert_eq!(theta_inverse(fig.ty, fig.k, &f).unwrap(), p);
    assert_eq!(corners(fig.ty, &f).len() as u32, c_statistic(&p));
    assert!(poset.width(&f.points) <= fig.k as usize);
}

#[test]
fn unitary_figure() {
    check("theta_upq_7_9_k3.txt", 39);
}

#[test]
fn metaplectic_figure() {
    check("theta_mp_7_k3.txt", 18);
}

#[test]
fn star_orthogonal_figure() {
    check("theta_ostar_11_k3.txt", 45);
}
