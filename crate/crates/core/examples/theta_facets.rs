use bernstein_degree::plane_partitions::{c_statistic, HermitianType, PlanePartition};
use bernstein_degree::poset_paths::{corners, enumerate_facets, theta, theta_inverse, RootPoset};

fn main() -> bernstein_degree::Result<()> {
    let ty = HermitianType::StarOrthogonal { n: 11 };
    let p = PlanePartition::from_rows(&["1233", ".122", "..02", "...1"], 3)?;
    let f = theta(ty, 3, &p)?;
    println!(
        "{p}-> {} points, {} corners, c(P) = {}",
        f.len(),
        corners(ty, &f).len(),
        c_statistic(&p)
    );
    for path in f.paths.iter().flatten() {
        println!("  {path:?}");
    }
    assert_eq!(theta_inverse(ty, 3, &f)?, p);

    let small = HermitianType::UnitaryPQ { p: 3, q: 4 };
    let poset = RootPoset::new(small)?;
    let facets = enumerate_facets(small, 2)?;
    let brute = poset.brute_force_facets(2, 16)?;
    println!(
        "{small} k=2: {} facets, exhaustive search finds {}",
        facets.len(),
        brute.len()
    );
    Ok(())
}
