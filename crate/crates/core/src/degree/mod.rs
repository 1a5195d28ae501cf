//! Bernstein degrees as `#Q_k(sigma) * #P_k`, together with the checks that tie
//! the counts to representation dimensions.

mod exceptional;
mod hilbert;
pub mod verify;

pub use exceptional::{exceptional_degree, exceptional_rows, ExceptionalDegree, ExceptionalFamilyRow, LinearFactor};
pub use hilbert::{hilbert_report, HilbertReport};
pub use verify::{
    check_theta, corner_mismatches, run_suite, spot_checks, verify_all, SpotReport, Suite, SuiteResult, VerifyLimits,
    VerifyReport,
};

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinatorics::Partition;
use crate::dual_pair::{
    count_q_determinant, enumerate_q, q_collapse_check, sigma_admissible, Admissibility, Family, Regime, Setting,
    SigmaLabel,
};
use crate::error::{Error, Result};
use crate::jellyfish::{jellyfish_with, PathFamilies};
use crate::plane_partitions::{count_p_product, enumerate_p, HermitianType};
use crate::poset_paths::RootPoset;
use crate::rep_dimensions::{dim_f_lambda, dim_u_sigma};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Instance too large for the oracle.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CrossCheck {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        let status = if passed { CheckStatus::Pass } else { CheckStatus::Fail };
        CrossCheck {
            name: name.into(),
            status,
            detail,
        }
    }

    fn skipped(name: &str, detail: String) -> Self {
        CrossCheck {
            name: name.into(),
            status: CheckStatus::Skipped,
            detail,
        }
    }
}

/// Caps on brute-force oracles run alongside the formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest set the tableau or plane partition oracles may enumerate.
    pub max_enumeration: u64,
    /// Largest poset the jellyfish oracle may run on.
    pub max_poset_points: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_enumeration: 20_000,
            max_poset_points: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub setting: Setting,
    pub sigma: SigmaLabel,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub q_count: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub p_count: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub degree: BigInt,
    pub regime: Regime,
    pub conjectural: bool,
    pub cross_checks: Vec<CrossCheck>,
}

impl DegreeReport {
    pub fn passed(&self) -> bool {
        self.cross_checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

pub(crate) fn require_sigma_in(setting: &Setting, sigma: &SigmaLabel) -> Result<()> {
    match sigma_admissible(setting, sigma) {
        Admissibility::InSigma => Ok(()),
        other => Err(Error::Inadmissible(format!("{sigma} for {setting}: {other:?}"))),
    }
}

/// `(#Q_k(sigma), #P_k, product)` by the determinant and product formulas.
pub fn formula_degree(setting: &Setting, sigma: &SigmaLabel) -> Result<(BigInt, BigInt, BigInt)> {
    require_sigma_in(setting, sigma)?;
    let q = count_q_determinant(setting, sigma)?;
    let p = count_p_product(&HermitianType::from(setting.family), setting.k)?;
    let d = &q * &p;
    Ok((q, p, d))
}

/// The degree by the formulas, with every oracle that fits under `limits`.
pub fn bernstein_degree_with(setting: &Setting, sigma: &SigmaLabel, limits: &OracleLimits) -> Result<DegreeReport> {
    let (q_count, p_count, degree) = formula_degree(setting, sigma)?;
    let ty = HermitianType::from(setting.family);
    let cap = BigInt::from(limits.max_enumeration);
    let t_size = dim_f_lambda(setting, sigma)?;
    let mut checks = Vec::new();

    if t_size <= cap {
        let n = enumerate_q(setting, sigma)?.len();
        checks.push(CrossCheck::new(
            "q_determinant",
            BigInt::from(n) == q_count,
            format!("enumerated {n}"),
        ));
        if setting.regime() != Regime::Interpolating {
            let c = q_collapse_check(setting, sigma)?;
            checks.push(CrossCheck::new("q_collapse", c.passed, c.note));
        }
    } else {
        checks.push(CrossCheck::skipped(
            "q_determinant",
            format!("#T = {t_size} exceeds the oracle cap"),
        ));
    }

    if p_count <= cap {
        let n = enumerate_p(&ty, setting.k)?.len();
        checks.push(CrossCheck::new(
            "p_product",
            BigInt::from(n) == p_count,
            format!("enumerated {n}"),
        ));
    } else {
        checks.push(CrossCheck::skipped(
            "p_product",
            format!("#P = {p_count} exceeds the oracle cap"),
        ));
    }

    let jelly_family = !matches!(setting.family, Family::Metaplectic { .. });
    if jelly_family && setting.k < setting.free_threshold() {
        let points = RootPoset::from_family(setting.family)?.len();
        if points <= limits.max_poset_points && t_size <= cap {
            let families = PathFamilies::new(setting)?;
            let jhat = jellyfish_with(setting, sigma, &families, true)?.len();
            let fhat = families.maximal().len();
            let ok = BigInt::from(jhat) == degree && BigInt::from(fhat) == p_count;
            checks.push(CrossCheck::new("jellyfish", ok, format!("#J^ = {jhat}, #F^ = {fhat}")));
        } else {
            checks.push(CrossCheck::skipped(
                "jellyfish",
                format!("{points} poset points exceed the oracle cap"),
            ));
        }
    }

    Ok(DegreeReport {
        setting: *setting,
        sigma: sigma.clone(),
        q_count,
        p_count,
        degree,
        regime: setting.regime(),
        conjectural: setting.is_conjectural(),
        cross_checks: checks,
    })
}

pub fn bernstein_degree(setting: &Setting, sigma: &SigmaLabel) -> Result<DegreeReport> {
    bernstein_degree_with(setting, sigma, &OracleLimits::default())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotIdentityCheck {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub q_count: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub dim_u_sigma: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub p_count: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub degree: BigInt,
    pub passed: bool,
}

/// For `k <= r`: `#Q_k(sigma) = dim U_sigma`, so the degree is `dim U_sigma * #P_k`.
pub fn not_identity_check(setting: &Setting, sigma: &SigmaLabel) -> Result<NotIdentityCheck> {
    if setting.k > setting.real_rank() {
        return Err(Error::KOutOfRange {
            k: setting.k,
            reason: format!("need k <= r = {}", setting.real_rank()),
        });
    }
    let (q_count, p_count, degree) = formula_degree(setting, sigma)?;
    let dim = dim_u_sigma(setting, sigma)?;
    Ok(NotIdentityCheck {
        passed: dim == q_count && degree == &dim * &p_count,
        q_count,
        dim_u_sigma: dim,
        p_count,
        degree,
    })
}

/// The degree computed through the representation side, available where the
/// collapse is proven: `dim U_sigma * #P_k` for `k <= r` and `dim F_lambda` for `k >= s`.
pub fn proven_regime_degree(setting: &Setting, sigma: &SigmaLabel) -> Result<BigInt> {
    require_sigma_in(setting, sigma)?;
    match setting.regime() {
        Regime::AtMostRank => {
            Ok(dim_u_sigma(setting, sigma)? * count_p_product(&HermitianType::from(setting.family), setting.k)?)
        }
        Regime::Free => dim_f_lambda(setting, sigma),
        Regime::Interpolating => Err(Error::KOutOfRange {
            k: setting.k,
            reason: "no representation-side value for r < k < s".into(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeEntry {
    pub sigma: Partition,
    pub k: u32,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub q_count: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub p_count: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub value: BigInt,
    pub conjectural: bool,
    /// Determinant against enumeration, when small enough.
    pub determinant_check: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCheck {
    pub sigma: Partition,
    pub k: u32,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub probe_value: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub proven_value: BigInt,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub n: u32,
    pub k: u32,
    pub entries: Vec<ProbeEntry>,
    /// The same path evaluated at `k = n` and `k = 2n-1`.
    pub boundary: Vec<BoundaryCheck>,
    pub passed: bool,
}

fn probe_entry(setting: &Setting, sigma: &Partition, limits: &OracleLimits) -> Result<ProbeEntry> {
    let label = SigmaLabel::Single(sigma.clone());
    let (q_count, p_count, value) = formula_degree(setting, &label)?;
    let determinant_check = if dim_f_lambda(setting, &label)? <= BigInt::from(limits.max_enumeration) {
        if BigInt::from(enumerate_q(setting, &label)?.len()) == q_count {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    } else {
        CheckStatus::Skipped
    };
    Ok(ProbeEntry {
        sigma: sigma.clone(),
        k: setting.k,
        q_count,
        p_count,
        value,
        conjectural: setting.is_conjectural(),
        determinant_check,
    })
}

/// `#Q_k(sigma) * #P_k` for Mp(2n,R) with `n+1 <= k <= 2n-2`, where no proof
/// covers it. Values are reported, not verified.
pub fn mp_conjecture_probe(n: u32, k: u32, sigmas: &[Partition], limits: &OracleLimits) -> Result<ProbeReport> {
    let setting = Setting::mp(n, k)?;
    if !setting.is_conjectural() {
        return Err(Error::KOutOfRange {
            k,
            reason: format!("the window n+1..=2n-2 for n = {n} does not contain k"),
        });
    }
    let entries = sigmas
        .iter()
        .map(|s| probe_entry(&setting, s, limits))
        .collect::<Result<Vec<_>>>()?;
    let boundary = probe_boundary(n, sigmas)?;
    let passed = entries.iter().all(|e| e.determinant_check != CheckStatus::Fail) && boundary.iter().all(|b| b.passed);
    Ok(ProbeReport {
        n,
        k,
        entries,
        boundary,
        passed,
    })
}

/// Evaluates the probe path at the proven endpoints `k = n` and `k = 2n-1` for
/// every sigma admissible there.
pub fn probe_boundary(n: u32, sigmas: &[Partition]) -> Result<Vec<BoundaryCheck>> {
    let mut out = Vec::new();
    let mut ks = vec![n, 2 * n - 1];
    ks.dedup();
    for k in ks {
        let setting = Setting::mp(n, k)?;
        for s in sigmas {
            let label = SigmaLabel::Single(s.clone());
            if sigma_admissible(&setting, &label) != Admissibility::InSigma {
                continue;
            }
            let (_, _, probe_value) = formula_degree(&setting, &label)?;
            let proven_value = proven_regime_degree(&setting, &label)?;
            out.push(BoundaryCheck {
                sigma: s.clone(),
                k,
                passed: probe_value == proven_value,
                probe_value,
                proven_value,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::SignedPartitionPair;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn single(v: &[u32]) -> SigmaLabel {
        SigmaLabel::Single(part(v))
    }

    #[test]
    fn degree_examples() {
        let r = bernstein_degree(&Setting::ostar(3, 1).unwrap(), &single(&[1])).unwrap();
        assert_eq!(
            (r.q_count.clone(), r.p_count.clone(), r.degree.clone()),
            (2.into(), 1.into(), 2.into())
        );
        assert!(r.passed());
        let r = bernstein_degree(
            &Setting::upq(4, 5, 2).unwrap(),
            &SigmaLabel::Signed(SignedPartitionPair::default()),
        )
        .unwrap();
        assert_eq!(r.degree, BigInt::from(50));
        assert!(r
            .cross_checks
            .iter()
            .any(|c| c.name == "jellyfish" && c.status == CheckStatus::Pass));
        for s in [
            Setting::upq(2, 3, 2).unwrap(),
            Setting::mp(3, 5).unwrap(),
            Setting::ostar(5, 2).unwrap(),
        ] {
            let r = bernstein_degree(&s, &SigmaLabel::zero_for(s.family)).unwrap();
            assert_eq!(r.degree, BigInt::from(1), "{s}");
            assert_eq!(r.degree, &r.q_count * &r.p_count);
        }
        assert!(bernstein_degree(&Setting::ostar(3, 1).unwrap(), &single(&[1, 1])).is_err());
    }

    #[test]
    fn conjectural_flag() {
        let r = bernstein_degree(&Setting::mp(3, 4).unwrap(), &single(&[1])).unwrap();
        assert!(r.conjectural);
        assert!(
            !bernstein_degree(&Setting::mp(3, 3).unwrap(), &single(&[1]))
                .unwrap()
                .conjectural
        );
    }

    #[test]
    fn not_identity_examples() {
        let c = not_identity_check(&Setting::ostar(3, 1).unwrap(), &single(&[1])).unwrap();
        assert!(c.passed);
        assert_eq!(c.dim_u_sigma, BigInt::from(2));
        let c = not_identity_check(&Setting::mp(2, 1).unwrap(), &single(&[1])).unwrap();
        assert!(c.passed);
        assert_eq!(c.dim_u_sigma, BigInt::from(1));
        assert!(not_identity_check(&Setting::mp(2, 3).unwrap(), &single(&[])).is_err());
    }

    #[test]
    fn probe_examples() {
        let lim = OracleLimits::default();
        assert!(mp_conjecture_probe(2, 2, &[part(&[])], &lim).is_err());
        assert!(mp_conjecture_probe(3, 3, &[part(&[])], &lim).is_err());
        let r = mp_conjecture_probe(3, 4, &[part(&[1]), part(&[])], &lim).unwrap();
        assert!(r.passed);
        assert!(r.entries.iter().all(|e| e.conjectural && e.p_count == BigInt::from(1)));
        assert_eq!(r.entries[1].value, BigInt::from(1));
        assert_eq!(r.entries[0].determinant_check, CheckStatus::Pass);
        assert!(!r.boundary.is_empty());
    }

    #[test]
    fn report_serializes_big_integers_as_strings() {
        let r = bernstein_degree(
            &Setting::upq(4, 5, 2).unwrap(),
            &SigmaLabel::Signed(SignedPartitionPair::default()),
        )
        .unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["degree"], "50");
        assert_eq!(v["regime"], "k<=r");
    }
}
