use std::fmt;

use serde::Serialize;

use super::setting::{require_sigma, Family, Setting, SigmaLabel};
use crate::error::Result;

/// Highest weight as integer blocks over a common denominator (1, or 2 for Mp).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    pub blocks: Vec<Vec<i64>>,
    pub denominator: u32,
}

impl WeightVector {
    /// Block entries as exact `(numerator, denominator)` strings such as `-1/2`.
    pub fn render_entry(&self, x: i64) -> String {
        if self.denominator == 1 || x % self.denominator as i64 == 0 {
            (x / self.denominator as i64).to_string()
        } else {
            format!("{x}/{}", self.denominator)
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| self.render_entry(x)).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "({})", blocks.join(" | "))
    }
}

fn neg_rev_shift(parts: Vec<i64>, shift: i64) -> Vec<i64> {
    parts.iter().rev().map(|&x| -x - shift).collect()
}

/// `lambda(sigma)` in the arrow coordinates of the noncompact side.
pub fn highest_weight(setting: &Setting, sigma: &SigmaLabel) -> Result<WeightVector> {
    require_sigma(setting, sigma)?;
    let k = setting.k as i64;
    Ok(match setting.family {
        Family::UnitaryPQ { p, q } => {
            let s = sigma.signed()?;
            WeightVector {
                blocks: vec![neg_rev_shift(s.minus.padded(p as usize), k), s.plus.padded(q as usize)],
                denominator: 1,
            }
        }
        Family::Metaplectic { n } => {
            let doubled: Vec<i64> = sigma.single()?.padded(n as usize).iter().map(|x| 2 * x).collect();
            WeightVector {
                blocks: vec![neg_rev_shift(doubled, k)],
                denominator: 2,
            }
        }
        Family::StarOrthogonal { n } => WeightVector {
            blocks: vec![neg_rev_shift(sigma.single()?.padded(n as usize), k)],
            denominator: 1,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Partition, SignedPartitionPair};

    #[test]
    fn star_orthogonal() {
        let s = Setting::ostar(3, 1).unwrap();
        let w = highest_weight(&s, &SigmaLabel::Single(Partition::new(vec![1]).unwrap())).unwrap();
        assert_eq!(w.blocks, vec![vec![-1, -1, -2]]);
    }

    #[test]
    fn metaplectic_half_shift() {
        let s = Setting::mp(2, 1).unwrap();
        let w = highest_weight(&s, &SigmaLabel::Single(Partition::empty())).unwrap();
        assert_eq!(w.to_string(), "(-1/2,-1/2)");
    }

    #[test]
    fn unitary() {
        let s = Setting::upq(2, 2, 1).unwrap();
        let sig = SigmaLabel::Signed(SignedPartitionPair::new(
            Partition::new(vec![1]).unwrap(),
            Partition::empty(),
        ));
        let w = highest_weight(&s, &sig).unwrap();
        assert_eq!(w.to_string(), "(-1,-1 | 1,0)");
    }

    #[test]
    fn rejects_outside_sigma() {
        let s = Setting::ostar(2, 3).unwrap();
        assert!(highest_weight(&s, &SigmaLabel::Single(Partition::new(vec![1, 1, 1]).unwrap())).is_err());
    }
}
