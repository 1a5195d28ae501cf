use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::dual_pair::Family;
use crate::error::{Error, Result};

const E6_DATA: &str = include_str!("../../data/diagrams/e6.txt");
const E7_DATA: &str = include_str!("../../data/diagrams/e7.txt");

/// A finite set of unit boxes `(row, col)`; rows grow downward.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Diagram {
    boxes: BTreeSet<(i32, i32)>,
}

impl Diagram {
    /// Builds a diagram and shifts it so its smallest row and column are 1.
    pub fn new<I: IntoIterator<Item = (i32, i32)>>(boxes: I) -> Self {
        let mut d = Diagram {
            boxes: boxes.into_iter().collect(),
        };
        d.normalize();
        d
    }

    pub fn empty() -> Self {
        Diagram::default()
    }

    /// `rows` x `cols` rectangle.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        Diagram::new((1..=rows as i32).flat_map(|i| (1..=cols as i32).map(move |j| (i, j))))
    }

    /// Left-justified rows of lengths `m, m-1, ..., 1`.
    pub fn staircase(m: u32) -> Self {
        let m = m as i32;
        Diagram::new((1..=m).flat_map(|i| (1..=m + 1 - i).map(move |j| (i, j))))
    }

    /// The staircase reflected horizontally: row `i` covers columns `i..=m`.
    pub fn shifted_staircase(m: u32) -> Self {
        let m = m as i32;
        Diagram::new((1..=m).flat_map(|i| (i..=m).map(move |j| (i, j))))
    }

    /// Parses `row col` lines; `#` starts a comment.
    pub fn parse(file: &str, text: &str) -> Result<Self> {
        let mut boxes = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<i32> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|e: std::num::ParseIntError| Error::Data {
                    file: file.into(),
                    line: idx + 1,
                    msg: e.to_string(),
                })?;
            if nums.len() != 2 {
                return Err(Error::Data {
                    file: file.into(),
                    line: idx + 1,
                    msg: "expected `row col`".into(),
                });
            }
            boxes.push((nums[0], nums[1]));
        }
        Ok(Diagram::new(boxes))
    }

    fn normalize(&mut self) {
        let (Some(r0), Some(c0)) = (
            self.boxes.iter().map(|b| b.0).min(),
            self.boxes.iter().map(|b| b.1).min(),
        ) else {
            return;
        };
        self.boxes = self.boxes.iter().map(|&(r, c)| (r - r0 + 1, c - c0 + 1)).collect();
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, row: i32, col: i32) -> bool {
        self.boxes.contains(&(row, col))
    }

    /// Boxes in reading order: by row, then column.
    pub fn boxes(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.boxes.iter().copied()
    }

    pub fn rows(&self) -> i32 {
        self.boxes.iter().map(|b| b.0).max().unwrap_or(0)
    }

    pub fn cols(&self) -> i32 {
        self.boxes.iter().map(|b| b.1).max().unwrap_or(0)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.rows() {
            let line: String = (1..=self.cols())
                .map(|c| if self.contains(r, c) { '#' } else { '.' })
                .collect();
            writeln!(f, "{}", line.trim_end_matches('.'))?;
        }
        Ok(())
    }
}

/// The boxes of `d` that have a box of `d` directly to their southwest.
pub fn interior(d: &Diagram) -> Diagram {
    Diagram::new(d.boxes().filter(|&(i, j)| d.contains(i + 1, j - 1)))
}

/// The seven Hermitian symmetric types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum HermitianType {
    UnitaryPQ {
        p: u32,
        q: u32,
    },
    Metaplectic {
        n: u32,
    },
    StarOrthogonal {
        n: u32,
    },
    /// SO(2, 2n-2), n >= 3.
    SoEven {
        n: u32,
    },
    /// SO(2, 2n-1), n >= 2.
    SoOdd {
        n: u32,
    },
    E6,
    E7,
}

impl From<Family> for HermitianType {
    fn from(f: Family) -> Self {
        match f {
            Family::UnitaryPQ { p, q } => HermitianType::UnitaryPQ { p, q },
            Family::Metaplectic { n } => HermitianType::Metaplectic { n },
            Family::StarOrthogonal { n } => HermitianType::StarOrthogonal { n },
        }
    }
}

impl fmt::Display for HermitianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HermitianType::UnitaryPQ { p, q } => write!(f, "U({p},{q})"),
            HermitianType::Metaplectic { n } => write!(f, "Mp({},R)", 2 * n),
            HermitianType::StarOrthogonal { n } => write!(f, "O*({})", 2 * n),
            HermitianType::SoEven { n } => write!(f, "SO(2,{})", 2 * n - 2),
            HermitianType::SoOdd { n } => write!(f, "SO(2,{})", 2 * n - 1),
            HermitianType::E6 => f.write_str("E6(-14)"),
            HermitianType::E7 => f.write_str("E7(-25)"),
        }
    }
}

impl HermitianType {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            HermitianType::UnitaryPQ { p, q } => p >= 1 && q >= 1,
            HermitianType::Metaplectic { n } | HermitianType::StarOrthogonal { n } => n >= 1,
            HermitianType::SoEven { n } => n >= 3,
            HermitianType::SoOdd { n } => n >= 2,
            HermitianType::E6 | HermitianType::E7 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSetting(format!("parameters out of range for {self:?}")))
        }
    }

    pub fn real_rank(&self) -> u32 {
        match *self {
            HermitianType::UnitaryPQ { p, q } => p.min(q),
            HermitianType::Metaplectic { n } => n,
            HermitianType::StarOrthogonal { n } => n / 2,
            HermitianType::SoEven { .. } | HermitianType::SoOdd { .. } | HermitianType::E6 => 2,
            HermitianType::E7 => 3,
        }
    }

    /// `dim p+`, the number of noncompact positive roots.
    pub fn dim_p_plus(&self) -> u32 {
        match *self {
            HermitianType::UnitaryPQ { p, q } => p * q,
            HermitianType::Metaplectic { n } => n * (n + 1) / 2,
            HermitianType::StarOrthogonal { n } => n * (n - 1) / 2,
            HermitianType::SoEven { n } => 2 * n - 2,
            HermitianType::SoOdd { n } => 2 * n - 1,
            HermitianType::E6 => 16,
            HermitianType::E7 => 27,
        }
    }

    pub fn is_dual_pair(&self) -> bool {
        matches!(
            self,
            HermitianType::UnitaryPQ { .. } | HermitianType::Metaplectic { .. } | HermitianType::StarOrthogonal { .. }
        )
    }

    /// `D_0`: generated for the parametric types, loaded from data for E6 and E7.
    pub fn d0(&self) -> Diagram {
        match *self {
            HermitianType::UnitaryPQ { p, q } => Diagram::rectangle(p, q),
            HermitianType::Metaplectic { n } => Diagram::staircase(n),
            HermitianType::StarOrthogonal { n } => Diagram::shifted_staircase(n.saturating_sub(1)),
            HermitianType::SoEven { n } => {
                let n = n as i32;
                let mut boxes: Vec<(i32, i32)> = (1..n).map(|j| (1, j)).collect();
                boxes.extend([(2, n - 2), (2, n - 1)]);
                boxes.extend((3..n).map(|i| (i, n - 1)));
                Diagram::new(boxes)
            }
            HermitianType::SoOdd { n } => {
                let n = n as i32;
                let mut boxes: Vec<(i32, i32)> = (1..=n).map(|j| (1, j)).collect();
                boxes.push((2, n - 1));
                Diagram::new(boxes)
            }
            HermitianType::E6 => Diagram::parse("e6.txt", E6_DATA).expect("shipped E6 data parses"),
            HermitianType::E7 => Diagram::parse("e7.txt", E7_DATA).expect("shipped E7 data parses"),
        }
    }
}

/// `D_k` as the k-fold interior of `D_0`.
pub fn diagram_d_recursive(ty: &HermitianType, k: u32) -> Diagram {
    let mut d = ty.d0();
    for _ in 0..k {
        if d.is_empty() {
            break;
        }
        d = interior(&d);
    }
    d
}

/// `D_k`: the closed form for the dual-pair types, the recursion otherwise.
pub fn diagram_d(ty: &HermitianType, k: u32) -> Diagram {
    match *ty {
        HermitianType::UnitaryPQ { p, q } => Diagram::rectangle(p.saturating_sub(k), q.saturating_sub(k)),
        HermitianType::Metaplectic { n } => Diagram::staircase(n.saturating_sub(k)),
        HermitianType::StarOrthogonal { n } => Diagram::shifted_staircase(n.saturating_sub(2 * k + 1)),
        _ => diagram_d_recursive(ty, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_examples() {
        assert_eq!(interior(&Diagram::staircase(3)), Diagram::staircase(2));
        assert_eq!(interior(&Diagram::rectangle(1, 1)), Diagram::empty());
        assert_eq!(interior(&Diagram::rectangle(2, 3)), Diagram::rectangle(1, 2));
        assert_eq!(interior(&Diagram::shifted_staircase(4)), Diagram::shifted_staircase(2));
    }

    #[test]
    fn closed_forms_match_recursion() {
        for a in 1..=8 {
            let mut types = vec![
                HermitianType::Metaplectic { n: a },
                HermitianType::StarOrthogonal { n: a },
            ];
            types.extend((1..=8).map(|b| HermitianType::UnitaryPQ { p: a, q: b }));
            for ty in types {
                for k in 0..=ty.real_rank() + 1 {
                    assert_eq!(diagram_d(&ty, k), diagram_d_recursive(&ty, k), "{ty} k={k}");
                }
            }
        }
    }

    #[test]
    fn exceptional_sizes() {
        let sizes = |ty: HermitianType| {
            (0..=ty.real_rank())
                .map(|k| diagram_d(&ty, k).len())
                .collect::<Vec<_>>()
        };
        assert_eq!(sizes(HermitianType::E6), [16, 5, 0]);
        assert_eq!(sizes(HermitianType::E7), [27, 10, 1, 0]);
        assert_eq!(sizes(HermitianType::SoEven { n: 5 }), [8, 1, 0]);
        assert_eq!(sizes(HermitianType::SoOdd { n: 4 }), [5, 1, 0]);
        assert_eq!(
            diagram_d(&HermitianType::UnitaryPQ { p: 7, q: 9 }, 3),
            Diagram::rectangle(4, 6)
        );
        assert!(diagram_d(&HermitianType::Metaplectic { n: 5 }, 5).is_empty());
    }

    #[test]
    fn rank_kills_every_type() {
        let mut types = vec![HermitianType::E6, HermitianType::E7];
        for n in 1..=8 {
            types.push(HermitianType::Metaplectic { n });
            types.push(HermitianType::StarOrthogonal { n });
            types.push(HermitianType::SoOdd { n: n + 1 });
            types.push(HermitianType::SoEven { n: n + 2 });
        }
        for ty in types {
            assert!(diagram_d_recursive(&ty, ty.real_rank()).is_empty(), "{ty}");
            assert!(!diagram_d_recursive(&ty, ty.real_rank().saturating_sub(1)).is_empty() || ty.real_rank() == 0);
        }
    }

    #[test]
    fn so_even_three_is_a_square() {
        assert_eq!(HermitianType::SoEven { n: 3 }.d0(), Diagram::rectangle(2, 2));
    }
}
