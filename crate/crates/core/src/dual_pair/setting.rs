use std::fmt;

use serde::Serialize;

use crate::combinatorics::{Partition, SignedPartitionPair};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    UnitaryPQ { p: u32, q: u32 },
    Metaplectic { n: u32 },
    StarOrthogonal { n: u32 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::UnitaryPQ { .. } => "upq",
            Family::Metaplectic { .. } => "mp",
            Family::StarOrthogonal { .. } => "ostar",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::UnitaryPQ { p, q } => write!(f, "U({p},{q})"),
            Family::Metaplectic { n } => write!(f, "Mp({},R)", 2 * n),
            Family::StarOrthogonal { n } => write!(f, "O*({})", 2 * n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Setting {
    pub family: Family,
    pub k: u32,
}

/// Where `k` sits relative to the real rank `r` and the free threshold `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    #[serde(rename = "k<=r")]
    AtMostRank,
    #[serde(rename = "r<k<s")]
    Interpolating,
    #[serde(rename = "k>=s")]
    Free,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::AtMostRank => "k<=r",
            Regime::Interpolating => "r<k<s",
            Regime::Free => "k>=s",
        })
    }
}

impl Setting {
    pub fn new(family: Family, k: u32) -> Result<Self> {
        let ok = match family {
            Family::UnitaryPQ { p, q } => p >= 1 && q >= 1,
            Family::Metaplectic { n } | Family::StarOrthogonal { n } => n >= 1,
        };
        if !ok {
            return Err(Error::InvalidSetting(format!("{family}: parameters must be positive")));
        }
        if k == 0 {
            return Err(Error::InvalidSetting("k must be positive".into()));
        }
        Ok(Setting { family, k })
    }

    pub fn upq(p: u32, q: u32, k: u32) -> Result<Self> {
        Self::new(Family::UnitaryPQ { p, q }, k)
    }

    pub fn mp(n: u32, k: u32) -> Result<Self> {
        Self::new(Family::Metaplectic { n }, k)
    }

    pub fn ostar(n: u32, k: u32) -> Result<Self> {
        Self::new(Family::StarOrthogonal { n }, k)
    }

    pub fn with_k(&self, k: u32) -> Result<Self> {
        Self::new(self.family, k)
    }

    pub fn real_rank(&self) -> u32 {
        match self.family {
            Family::UnitaryPQ { p, q } => p.min(q),
            Family::Metaplectic { n } => n,
            Family::StarOrthogonal { n } => n / 2,
        }
    }

    pub fn free_threshold(&self) -> u32 {
        match self.family {
            Family::UnitaryPQ { p, q } => p + q - 1,
            Family::Metaplectic { n } => 2 * n - 1,
            Family::StarOrthogonal { n } => n - 1,
        }
    }

    pub fn regime(&self) -> Regime {
        if self.k <= self.real_rank() {
            Regime::AtMostRank
        } else if self.k >= self.free_threshold() {
            Regime::Free
        } else {
            Regime::Interpolating
        }
    }

    /// True inside the Mp window `n+1 <= k <= 2n-2`, where the degree formula is only conjectural.
    pub fn is_conjectural(&self) -> bool {
        matches!(self.family, Family::Metaplectic { n } if self.k > n && self.k + 1 < 2 * n)
    }

    /// Every sigma label in the family with `|sigma| <= max_size`, lying in `H^(k)`.
    pub fn labels_up_to(&self, max_size: u32) -> Vec<SigmaLabel> {
        let mut out = Vec::new();
        match self.family {
            Family::UnitaryPQ { .. } => {
                for m in 0..=max_size {
                    for a in 0..=m {
                        for plus in Partition::all_of_size(a) {
                            for minus in Partition::all_of_size(m - a) {
                                out.push(SigmaLabel::Signed(SignedPartitionPair::new(plus.clone(), minus)));
                            }
                        }
                    }
                }
            }
            _ => out.extend(Partition::all_up_to(max_size).into_iter().map(SigmaLabel::Single)),
        }
        out.retain(|s| sigma_admissible(self, s) != Admissibility::NotInHhat);
        out
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, k={}", self.family, self.k)
    }
}

/// `sigma` for O_k and Sp_2k, or `(sigma+, sigma-)` for GL_k.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum SigmaLabel {
    Single(Partition),
    Signed(SignedPartitionPair),
}

impl SigmaLabel {
    pub fn zero_for(family: Family) -> Self {
        match family {
            Family::UnitaryPQ { .. } => SigmaLabel::Signed(SignedPartitionPair::default()),
            _ => SigmaLabel::Single(Partition::empty()),
        }
    }

    pub fn size(&self) -> u32 {
        match self {
            SigmaLabel::Single(s) => s.size(),
            SigmaLabel::Signed(s) => s.size(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 0
    }

    pub(crate) fn single(&self) -> Result<&Partition> {
        match self {
            SigmaLabel::Single(s) => Ok(s),
            SigmaLabel::Signed(_) => Err(Error::Inadmissible("expected a single partition".into())),
        }
    }

    pub(crate) fn signed(&self) -> Result<&SignedPartitionPair> {
        match self {
            SigmaLabel::Signed(s) => Ok(s),
            SigmaLabel::Single(_) => Err(Error::Inadmissible("expected a pair (sigma+, sigma-)".into())),
        }
    }
}

impl fmt::Display for SigmaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaLabel::Single(s) => write!(f, "{s}"),
            SigmaLabel::Signed(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Admissibility {
    NotInHhat,
    InHhatNotSigma,
    InSigma,
}

/// Classifies `sigma` against `H^(k)` and the nonvanishing set `Sigma`.
/// A label of the wrong kind for the family counts as `NotInHhat`.
pub fn sigma_admissible(setting: &Setting, sigma: &SigmaLabel) -> Admissibility {
    let k = setting.k as usize;
    let (in_hhat, in_sigma) = match (setting.family, sigma) {
        (Family::UnitaryPQ { p, q }, SigmaLabel::Signed(s)) => (
            s.plus.len() + s.minus.len() <= k,
            s.plus.len() <= q as usize && s.minus.len() <= p as usize,
        ),
        (Family::Metaplectic { n }, SigmaLabel::Single(s)) => (
            (s.conjugate_part(1) + s.conjugate_part(2)) as usize <= k,
            s.len() <= n as usize,
        ),
        (Family::StarOrthogonal { n }, SigmaLabel::Single(s)) => (s.len() <= k, s.len() <= n as usize),
        _ => (false, false),
    };
    match (in_hhat, in_sigma) {
        (false, _) => Admissibility::NotInHhat,
        (true, false) => Admissibility::InHhatNotSigma,
        (true, true) => Admissibility::InSigma,
    }
}

pub(crate) fn require_sigma(setting: &Setting, sigma: &SigmaLabel) -> Result<()> {
    match sigma_admissible(setting, sigma) {
        Admissibility::InSigma => Ok(()),
        other => Err(Error::Inadmissible(format!("{sigma} for {setting}: {other:?}"))),
    }
}

pub(crate) fn require_hhat(setting: &Setting, sigma: &SigmaLabel) -> Result<()> {
    match sigma_admissible(setting, sigma) {
        Admissibility::NotInHhat => Err(Error::Inadmissible(format!("{sigma} is not in H^(k) for {setting}"))),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(v: &[u32]) -> SigmaLabel {
        SigmaLabel::Single(Partition::new(v.to_vec()).unwrap())
    }

    #[test]
    fn ranks_and_thresholds() {
        assert_eq!(Setting::upq(3, 5, 5).unwrap().real_rank(), 3);
        assert_eq!(Setting::mp(4, 5).unwrap().real_rank(), 4);
        assert_eq!(Setting::ostar(7, 4).unwrap().real_rank(), 3);
        assert_eq!(Setting::upq(3, 5, 5).unwrap().free_threshold(), 7);
        assert_eq!(Setting::mp(4, 5).unwrap().free_threshold(), 7);
        assert_eq!(Setting::ostar(7, 4).unwrap().free_threshold(), 6);
    }

    #[test]
    fn admissibility_examples() {
        let mp = Setting::mp(2, 1).unwrap();
        assert_eq!(sigma_admissible(&mp, &single(&[1, 1])), Admissibility::NotInHhat);
        let os = Setting::ostar(3, 5).unwrap();
        assert_eq!(
            sigma_admissible(&os, &single(&[1, 1, 1, 1])),
            Admissibility::InHhatNotSigma
        );
        let u = Setting::upq(3, 5, 5).unwrap();
        let s = SigmaLabel::Signed(SignedPartitionPair::new(
            Partition::new(vec![2, 1]).unwrap(),
            Partition::new(vec![1]).unwrap(),
        ));
        assert_eq!(sigma_admissible(&u, &s), Admissibility::InSigma);
        assert_eq!(sigma_admissible(&u, &single(&[1])), Admissibility::NotInHhat);
    }

    #[test]
    fn conjectural_window() {
        assert!(!Setting::mp(2, 2).unwrap().is_conjectural());
        assert!(!Setting::mp(2, 3).unwrap().is_conjectural());
        assert!(Setting::mp(3, 4).unwrap().is_conjectural());
        assert!(!Setting::mp(3, 5).unwrap().is_conjectural());
        assert!(!Setting::ostar(5, 3).unwrap().is_conjectural());
    }

    #[test]
    fn rejects_degenerate() {
        assert!(Setting::upq(0, 2, 1).is_err());
        assert!(Setting::mp(2, 0).is_err());
    }

    #[test]
    fn label_sweep_respects_hhat() {
        let s = Setting::mp(3, 2).unwrap();
        let labels = s.labels_up_to(3);
        assert!(labels.contains(&single(&[3])));
        assert!(labels.contains(&single(&[1, 1])));
        assert!(!labels.contains(&single(&[2, 1])));
        assert!(!labels.contains(&single(&[1, 1, 1])));
    }
}
