use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

const BUILTIN: [(&str, &str); 4] = [
    ("B3", include_str!("../../data/roots/b3.txt")),
    ("G2", include_str!("../../data/roots/g2.txt")),
    ("B4", include_str!("../../data/roots/b4.txt")),
    ("F4", include_str!("../../data/roots/f4.txt")),
];

/// Positive roots and fundamental weights in epsilon coordinates, stored doubled
/// so that half-integers stay integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub name: String,
    pub positive_roots: Vec<Vec<i64>>,
    pub fundamental_weights: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DominantWeight {
    /// Coefficients of the fundamental weights, in Bourbaki order.
    Fundamental(Vec<u32>),
    /// Epsilon coordinates, doubled.
    Epsilon(Vec<i64>),
}

impl DominantWeight {
    pub fn from_epsilon(coords: &[i64]) -> Self {
        DominantWeight::Epsilon(coords.iter().map(|x| 2 * x).collect())
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootSystemData {
    /// Parses `name`, `root` and `fundamental` lines; `#` starts a comment.
    pub fn parse(file: &str, text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| Error::Data {
            file: file.to_string(),
            line,
            msg: msg.to_string(),
        };
        let (mut name, mut roots, mut fund) = (None, Vec::new(), Vec::new());
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let key = words.next().unwrap_or_default();
            let rest: Vec<&str> = words.collect();
            match key {
                "name" => name = rest.first().map(|s| s.to_string()),
                "root" | "fundamental" => {
                    let v = rest
                        .iter()
                        .map(|w| w.parse::<i64>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|e| err(idx + 1, &e.to_string()))?;
                    if key == "root" {
                        roots.push(v)
                    } else {
                        fund.push(v)
                    }
                }
                other => return Err(err(idx + 1, &format!("unknown key {other:?}"))),
            }
        }
        let name = name.ok_or_else(|| err(0, "missing name"))?;
        let dim = roots.first().map(Vec::len).ok_or_else(|| err(0, "no roots"))?;
        if roots.iter().chain(&fund).any(|v| v.len() != dim) {
            return Err(err(0, "inconsistent coordinate lengths"));
        }
        Ok(RootSystemData {
            name,
            positive_roots: roots,
            fundamental_weights: fund,
        })
    }

    /// One of the shipped tables: B3, G2, B4, F4.
    pub fn builtin(name: &str) -> Result<Self> {
        let (_, text) = BUILTIN
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::Unsupported(format!("no root data for {name}")))?;
        Self::parse(&format!("{}.txt", name.to_lowercase()), text)
    }

    /// Type C_k: roots `e_i +- e_j` and `2 e_i`; fundamentals `e_1 + ... + e_i`.
    pub fn type_c(k: usize) -> Self {
        let unit = |i: usize, c: i64| {
            let mut v = vec![0; k];
            v[i] = c;
            v
        };
        let mut roots = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                for s in [2, -2] {
                    let mut v = unit(i, 2);
                    v[j] = s;
                    roots.push(v);
                }
            }
            roots.push(unit(i, 4));
        }
        let fund = (1..=k)
            .map(|i| (0..k).map(|j| if j < i { 2 } else { 0 }).collect())
            .collect();
        RootSystemData {
            name: format!("C{k}"),
            positive_roots: roots,
            fundamental_weights: fund,
        }
    }

    pub fn rank(&self) -> usize {
        self.fundamental_weights.len()
    }

    /// Twice the sum of the positive roots in doubled coordinates, i.e. `4 rho`.
    pub fn four_rho(&self) -> Vec<i64> {
        let dim = self.positive_roots[0].len();
        (0..dim)
            .map(|c| self.positive_roots.iter().map(|r| r[c]).sum())
            .collect()
    }

    /// Positive roots that are not a sum of two positive roots.
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        let pos = &self.positive_roots;
        pos.iter()
            .filter(|r| {
                !pos.iter().any(|a| {
                    let diff: Vec<i64> = r.iter().zip(a).map(|(x, y)| x - y).collect();
                    pos.contains(&diff)
                })
            })
            .cloned()
            .collect()
    }

    fn doubled(&self, weight: &DominantWeight) -> Result<Vec<i64>> {
        match weight {
            DominantWeight::Fundamental(c) => {
                if c.len() != self.rank() {
                    return Err(Error::NotDominant(format!(
                        "{c:?} has the wrong length for {}",
                        self.name
                    )));
                }
                let dim = self.positive_roots[0].len();
                Ok((0..dim)
                    .map(|j| {
                        c.iter()
                            .zip(&self.fundamental_weights)
                            .map(|(&a, w)| a as i64 * w[j])
                            .sum()
                    })
                    .collect())
            }
            DominantWeight::Epsilon(v) => {
                if v.len() != self.positive_roots[0].len() || self.positive_roots.iter().any(|a| dot(v, a) < 0) {
                    return Err(Error::NotDominant(format!("{v:?} for {}", self.name)));
                }
                Ok(v.clone())
            }
        }
    }
}

/// `prod (lambda + rho, alpha) / (rho, alpha)` over positive roots, exact.
pub fn dim_weyl(rs: &RootSystemData, weight: &DominantWeight) -> Result<BigInt> {
    let lam = rs.doubled(weight)?;
    let rho4 = rs.four_rho();
    let shifted: Vec<i64> = lam.iter().zip(&rho4).map(|(l, r)| 2 * l + r).collect();
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for a in &rs.positive_roots {
        num *= dot(&shifted, a);
        den *= dot(&rho4, a);
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fundamental(v: &[u32]) -> DominantWeight {
        DominantWeight::Fundamental(v.to_vec())
    }

    #[test]
    fn root_counts_and_rho() {
        for (name, count, rank) in [("B3", 9, 3), ("G2", 6, 2), ("B4", 16, 4), ("F4", 24, 4)] {
            let rs = RootSystemData::builtin(name).unwrap();
            assert_eq!(rs.positive_roots.len(), count);
            let simple = rs.simple_roots();
            assert_eq!(simple.len(), rank);
            let rho4 = rs.four_rho();
            // <rho, alpha^vee> = 1 on simple roots
            for a in &simple {
                assert_eq!(dot(&rho4, a), dot(a, a), "{name}");
            }
        }
        assert_eq!(RootSystemData::type_c(3).simple_roots().len(), 3);
    }

    #[test]
    fn small_dimensions() {
        let g2 = RootSystemData::builtin("G2").unwrap();
        assert_eq!(dim_weyl(&g2, &fundamental(&[0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(dim_weyl(&g2, &fundamental(&[1, 0])).unwrap(), BigInt::from(7));
        assert_eq!(dim_weyl(&g2, &fundamental(&[0, 1])).unwrap(), BigInt::from(14));
        let b3 = RootSystemData::builtin("B3").unwrap();
        assert_eq!(dim_weyl(&b3, &fundamental(&[1, 0, 0])).unwrap(), BigInt::from(7));
        assert_eq!(dim_weyl(&b3, &fundamental(&[0, 0, 1])).unwrap(), BigInt::from(8));
        let f4 = RootSystemData::builtin("F4").unwrap();
        let dims: Vec<BigInt> = (0..4)
            .map(|i| {
                let mut c = vec![0; 4];
                c[i] = 1;
                dim_weyl(&f4, &fundamental(&c)).unwrap()
            })
            .collect();
        assert_eq!(dims, [52, 1274, 273, 26].map(BigInt::from));
    }

    #[test]
    fn rejects_non_dominant() {
        let c2 = RootSystemData::type_c(2);
        assert!(dim_weyl(&c2, &DominantWeight::from_epsilon(&[0, 1])).is_err());
        assert_eq!(
            dim_weyl(&c2, &DominantWeight::from_epsilon(&[1, 0])).unwrap(),
            BigInt::from(4)
        );
    }

    #[test]
    fn parse_errors_carry_line() {
        let e = RootSystemData::parse("x.txt", "name X\nroot 1 z\n").unwrap_err();
        assert!(matches!(e, Error::Data { line: 2, .. }));
        assert!(RootSystemData::builtin("E8").is_err());
    }
}
