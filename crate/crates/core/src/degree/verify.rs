//! Cross-module property suites, one per release criterion.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    bernstein_degree_with, exceptional_degree, exceptional_rows, formula_degree, probe_boundary, proven_regime_degree,
    OracleLimits,
};
use crate::combinatorics::{IntPolynomial, Partition};
use crate::dual_pair::{
    count_q_determinant, enumerate_q, enumerate_t, in_q_criteria, in_q_definition, q_collapse_check, sigma_admissible,
    Admissibility, Family, Regime, Setting, SigmaLabel,
};
use crate::error::{Error, Result};
use crate::jellyfish::{factorization_holds, PathFamilies};
use crate::plane_partitions::{
    c_statistic, count_p_product, diagram_d, enumerate_p, hilbert_series_orbit, HermitianType, PlanePartition,
};
use crate::poset_paths::{corners, enumerate_facets, theta, theta_inverse, PathFamily, RootPoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Criteria,
    Determinant,
    Product,
    Theta,
    Corners,
    Jellyfish,
    Collapse,
    Pinned,
    Exceptional,
    Width,
    Probe,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Criteria,
        Suite::Determinant,
        Suite::Product,
        Suite::Theta,
        Suite::Corners,
        Suite::Jellyfish,
        Suite::Collapse,
        Suite::Pinned,
        Suite::Exceptional,
        Suite::Width,
        Suite::Probe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Criteria => "criteria",
            Suite::Determinant => "determinant",
            Suite::Product => "product",
            Suite::Theta => "theta",
            Suite::Corners => "corners",
            Suite::Jellyfish => "jellyfish",
            Suite::Collapse => "collapse",
            Suite::Pinned => "pinned",
            Suite::Exceptional => "exceptional",
            Suite::Width => "width",
            Suite::Probe => "probe",
        }
    }

    /// Position in the release checklist.
    pub fn criterion(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).unwrap() + 1
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Criteria => "membership criteria agree with the definition of Q",
            Suite::Determinant => "determinant count of Q equals enumeration",
            Suite::Product => "product count of P equals enumeration",
            Suite::Theta => "theta is a bijection onto the facets with inverse",
            Suite::Corners => "corners of theta(P) equal c(P)",
            Suite::Jellyfish => "maximal jellyfish factor as Q x F^",
            Suite::Collapse => "#Q equals dim U_sigma for k <= r and dim F_lambda for k >= s",
            Suite::Pinned => "pinned Hilbert numerators and orbit degrees",
            Suite::Exceptional => "Weyl dimensions match the exceptional polynomials",
            Suite::Width => "width of the full poset equals the real rank",
            Suite::Probe => "Mp probe agrees with proven values at the window ends",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidSetting(format!("unknown suite {s:?}")))
    }
}

/// Sweep bounds. The defaults are the release limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyLimits {
    pub q_max_pq: u32,
    pub q_max_mp_n: u32,
    pub q_max_ostar_n: u32,
    pub q_max_sigma: u32,
    pub max_diagram: usize,
    /// Largest p, q, n in the product sweep (2x that for O*(2n)).
    pub product_max_param: u32,
    pub max_poset_points: usize,
    pub max_theta_k: u32,
    /// Facets are also compared with exhaustive search up to this many points.
    pub brute_force_points: usize,
    pub jelly_points: usize,
    pub jelly_k: u32,
    pub jelly_sigma: u32,
    pub probe_max_n: u32,
    pub probe_sigma: u32,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        VerifyLimits {
            q_max_pq: 4,
            q_max_mp_n: 4,
            q_max_ostar_n: 6,
            q_max_sigma: 4,
            max_diagram: 12,
            product_max_param: 10,
            max_poset_points: 28,
            max_theta_k: 3,
            brute_force_points: 16,
            jelly_points: 20,
            jelly_k: 2,
            jelly_sigma: 3,
            probe_max_n: 4,
            probe_sigma: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub criterion: usize,
    pub cases: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpotReport {
    pub seed: u64,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub limits: VerifyLimits,
    pub suites: Vec<SuiteResult>,
    pub spot_checks: Option<SpotReport>,
    pub passed: bool,
}

const KEEP_FAILURES: usize = 10;

struct Tally {
    cases: u64,
    failures: Vec<String>,
    failure_count: u64,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < KEEP_FAILURES {
                self.failures.push(what());
            }
        }
    }

    /// An error inside a case counts as a failure of that case.
    fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                let msg = what();
                self.check(false, || format!("{msg}: {e}"))
            }
        }
    }

    fn finish(self, suite: Suite) -> SuiteResult {
        SuiteResult {
            suite,
            criterion: suite.criterion(),
            cases: self.cases,
            passed: self.failure_count == 0 && self.cases > 0,
            failure_count: self.failure_count,
            failures: self.failures,
        }
    }
}

fn sigma_labels(setting: &Setting, max_size: u32) -> Vec<SigmaLabel> {
    setting
        .labels_up_to(max_size)
        .into_iter()
        .filter(|s| sigma_admissible(setting, s) == Admissibility::InSigma)
        .collect()
}

/// The tableau sweep: every family up to the limits and every `k <= s + 1`.
pub fn q_sweep(limits: &VerifyLimits) -> Vec<Setting> {
    let mut families = Vec::new();
    for p in 1..=limits.q_max_pq {
        for q in 1..=limits.q_max_pq {
            families.push(Family::UnitaryPQ { p, q });
        }
    }
    families.extend((1..=limits.q_max_mp_n).map(|n| Family::Metaplectic { n }));
    families.extend((1..=limits.q_max_ostar_n).map(|n| Family::StarOrthogonal { n }));
    let mut out = Vec::new();
    for family in families {
        let s = Setting::new(family, 1).map(|s| s.free_threshold()).unwrap_or(1);
        out.extend((1..=s + 1).filter_map(|k| Setting::new(family, k).ok()));
    }
    out
}

fn dual_types_up_to_points(max_points: usize) -> Vec<HermitianType> {
    let mut out = Vec::new();
    for p in 1..=max_points as u32 {
        for q in 1..=max_points as u32 {
            if (p * q) as usize <= max_points {
                out.push(HermitianType::UnitaryPQ { p, q });
            }
        }
    }
    out.extend(
        (1..)
            .map(|n| HermitianType::Metaplectic { n })
            .take_while(|t| RootPoset::new(*t).is_ok_and(|p| p.len() <= max_points)),
    );
    out.extend(
        (2..)
            .map(|n| HermitianType::StarOrthogonal { n })
            .take_while(|t| RootPoset::new(*t).is_ok_and(|p| p.len() <= max_points)),
    );
    out
}

fn suite_criteria(limits: &VerifyLimits) -> SuiteResult {
    let mut t = Tally::new();
    for setting in q_sweep(limits) {
        for sigma in sigma_labels(&setting, limits.q_max_sigma) {
            match enumerate_t(&setting, &sigma) {
                Ok(ts) => {
                    for tab in ts {
                        t.check(in_q_definition(&setting, &tab) == in_q_criteria(&setting, &tab), || {
                            format!("{setting} sigma={sigma} T={tab}")
                        });
                    }
                }
                Err(e) => t.check(false, || format!("{setting} sigma={sigma}: {e}")),
            }
        }
    }
    t.finish(Suite::Criteria)
}

fn suite_determinant(limits: &VerifyLimits) -> SuiteResult {
    let mut t = Tally::new();
    for setting in q_sweep(limits) {
        for sigma in sigma_labels(&setting, limits.q_max_sigma) {
            let r = count_q_determinant(&setting, &sigma)
                .and_then(|d| Ok(d == BigInt::from(enumerate_q(&setting, &sigma)?.len())));
            t.check_result(r, || format!("{setting} sigma={sigma}"));
        }
    }
    t.finish(Suite::Determinant)
}

fn suite_collapse(limits: &VerifyLimits) -> SuiteResult {
    let mut t = Tally::new();
    for setting in q_sweep(limits) {
        if setting.regime() == Regime::Interpolating {
            continue;
        }
        for sigma in sigma_labels(&setting, limits.q_max_sigma) {
            t.check_result(q_collapse_check(&setting, &sigma).map(|c| c.passed), || {
                format!("{setting} sigma={sigma}")
            });
        }
    }
    t.finish(Suite::Collapse)
}

fn suite_product(limits: &VerifyLimits) -> SuiteResult {
    let mut t = Tally::new();
    let m = limits.product_max_param;
    let mut types = Vec::new();
    for p in 1..=m {
        for q in 1..=m {
            types.push(HermitianType::UnitaryPQ { p, q });
        }
    }
    types.extend((1..=m).map(|n| HermitianType::Metaplectic { n }));
    types.extend((2..=2 * m).map(|n| HermitianType::StarOrthogonal { n }));
    for ty in types {
        for k in 1..=ty.real_rank() {
            if diagram_d(&ty, k).len() > limits.max_diagram {
                continue;
            }
            let r = count_p_product(&ty, k).and_then(|c| Ok(c == BigInt::from(enumerate_p(&ty, k)?.len())));
            t.check_result(r, || format!("{ty} k={k}"));
        }
    }
    t.finish(Suite::Product)
}

fn theta_instances(limits: &VerifyLimits) -> Vec<(HermitianType, u32)> {
    dual_types_up_to_points(limits.max_poset_points)
        .into_iter()
        .flat_map(|ty| (1..=limits.max_theta_k).map(move |k| (ty, k)))
        .collect()
}

/// Theta lands in the facets, inverts, and hits every facet once. Facets are
/// compared with exhaustive search when the poset has at most `brute_points` points.
pub fn check_theta(ty: HermitianType, k: u32, brute_points: usize) -> Result<bool> {
    let facets: BTreeSet<_> = enumerate_facets(ty, k)?.into_iter().map(|f| f.points).collect();
    let poset = RootPoset::new(ty)?;
    if poset.len() <= brute_points {
        let brute: BTreeSet<_> = poset
            .brute_force_facets(k as usize, brute_points)?
            .into_iter()
            .collect();
        if brute != facets {
            return Ok(false);
        }
    }
    let ps = enumerate_p(&ty, k)?;
    let mut image = BTreeSet::new();
    for p in &ps {
        let f = theta(ty, k, p)?;
        if !facets.contains(&f.points) || theta_inverse(ty, k, &f)? != *p {
            return Ok(false);
        }
        image.insert(f.points);
    }
    Ok(image.len() == ps.len() && image == facets)
}

fn suite_theta(limits: &VerifyLimits) -> SuiteResult {
    let mut t = Tally::new();
    for (ty, k) in theta_instances(limits) {
        t.check_result(check_theta(ty, k, limits.brute_force_points), || format!("{ty} k={k}"));
    }
    t.finish(Suite::Theta)
}

/// Plane partitions whose corner count differs from the c-statistic.
pub fn corner_mismatches(ty: HermitianType, k: u32) -> Result<Vec<PlanePartition>> {
    let mut out = Vec::new();
    for p in enumerate_p(&ty, k)? {
        if corners(ty, &theta(ty, k, &p)?).len() as u32 != c_statistic(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

fn suite_corners(limits: &VerifyLimits) -> SuiteResult {
    let mut t = Tally::new();
    for (ty, k) in theta_instances(limits) {
        match enumerate_p(&ty, k) {
            Ok(ps) => {
                for p in ps {
                    let r = theta(ty, k, &p).map(|f: PathFamily| corners(ty, &f).len() as u32 == c_statistic(&p));
                    t.check_result(r, || format!("{ty} k={k} P={p}"));
                }
            }
            Err(e) => t.check(false, || format!("{ty} k={k}: {e}")),
        }
    }
    t.finish(Suite::Corners)
}

fn suite_width(limits: &VerifyLimits) -> SuiteResult {
    let mut t = Tally::new();
    for ty in dual_types_up_to_points(limits.max_poset_points) {
        let r = RootPoset::new(ty).map(|p| p.full_width() == ty.real_rank() as usize);
        t.check_result(r, || format!("{ty}"));
    }
    t.finish(Suite::Width)
}

fn jellyfish_case(setting: &Setting, max_sigma: u32, t: &mut Tally) -> Result<()> {
    let families = PathFamilies::new(setting)?;
    let facets: BTreeSet<_> = enumerate_facets(setting.family.into(), setting.k)?
        .into_iter()
        .map(|f| f.points)
        .collect();
    t.check(families.maximal() == facets, || {
        format!("{setting}: F^ differs from the facets")
    });
    let poset = RootPoset::from_family(setting.family)?;
    t.check(
        families.all().iter().all(|f| poset.width(f) <= setting.k as usize),
        || format!("{setting}: a path family has width above k"),
    );
    for sigma in sigma_labels(setting, max_sigma) {
        t.check_result(factorization_holds(setting, &sigma, &families), || {
            format!("{setting} sigma={sigma}")
        });
    }
    Ok(())
}

fn suite_jellyfish(limits: &VerifyLimits) -> SuiteResult {
    let mut t = Tally::new();
    for ty in dual_types_up_to_points(limits.jelly_points) {
        let family = match ty {
            HermitianType::UnitaryPQ { p, q } => Family::UnitaryPQ { p, q },
            HermitianType::StarOrthogonal { n } => Family::StarOrthogonal { n },
            _ => continue,
        };
        for k in 1..=limits.jelly_k {
            let Ok(setting) = Setting::new(family, k) else { continue };
            if k >= setting.free_threshold() {
                continue;
            }
            if let Err(e) = jellyfish_case(&setting, limits.jelly_sigma, &mut t) {
                t.check(false, || format!("{setting}: {e}"));
            }
        }
    }
    t.finish(Suite::Jellyfish)
}

fn suite_pinned() -> SuiteResult {
    let mut t = Tally::new();
    for n in 3..=5 {
        let ty = HermitianType::SoOdd { n };
        let r = hilbert_series_orbit(&ty, 1).map(|(num, e)| num == IntPolynomial::from_i64(&[1, 1]) && e == 2 * n - 2);
        t.check_result(r, || format!("{ty} k=1"));
    }
    for (ty, k, want) in [
        (HermitianType::E6, 2, 1),
        (HermitianType::E7, 2, 3),
        (HermitianType::E7, 3, 1),
    ] {
        t.check_result(enumerate_p(&ty, k).map(|ps| ps.len() == want), || format!("{ty} k={k}"));
    }
    t.finish(Suite::Pinned)
}

fn suite_exceptional() -> SuiteResult {
    let mut t = Tally::new();
    for row in exceptional_rows() {
        let bs = if row.uses_b { 0..=4 } else { 0..=0 };
        for b in bs {
            for a in 0..=4 {
                t.check_result(exceptional_degree(&row, a, b).map(|d| d.agrees), || {
                    format!("{} a={a} b={b}", row.h_group)
                });
            }
        }
    }
    t.finish(Suite::Exceptional)
}

fn suite_probe(limits: &VerifyLimits) -> SuiteResult {
    let mut t = Tally::new();
    let sigmas: Vec<Partition> = Partition::all_up_to(limits.probe_sigma);
    for n in 1..=limits.probe_max_n {
        match probe_boundary(n, &sigmas) {
            Ok(checks) => {
                for c in checks {
                    t.check(c.passed, || format!("n={n} k={} sigma={}", c.k, c.sigma));
                }
            }
            Err(e) => t.check(false, || format!("n={n}: {e}")),
        }
        for k in n + 1..2 * n - 1 {
            let setting = Setting::mp(n, k).expect("positive parameters");
            for sigma in sigma_labels(&setting, limits.probe_sigma) {
                let r = formula_degree(&setting, &sigma)
                    .map(|_| setting.is_conjectural() && proven_regime_degree(&setting, &sigma).is_err());
                t.check_result(r, || format!("n={n} k={k} sigma={sigma} not flagged"));
            }
        }
    }
    t.finish(Suite::Probe)
}

pub fn run_suite(suite: Suite, limits: &VerifyLimits) -> SuiteResult {
    match suite {
        Suite::Criteria => suite_criteria(limits),
        Suite::Determinant => suite_determinant(limits),
        Suite::Product => suite_product(limits),
        Suite::Theta => suite_theta(limits),
        Suite::Corners => suite_corners(limits),
        Suite::Jellyfish => suite_jellyfish(limits),
        Suite::Collapse => suite_collapse(limits),
        Suite::Pinned => suite_pinned(),
        Suite::Exceptional => suite_exceptional(),
        Suite::Width => suite_width(limits),
        Suite::Probe => suite_probe(limits),
    }
}

/// Runs `bernstein_degree` with every oracle on `cases` random instances from
/// the tableau sweep. The same seed gives the same instances.
pub fn spot_checks(seed: u64, cases: usize, limits: &VerifyLimits) -> SpotReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let settings = q_sweep(limits);
    let mut t = Tally::new();
    for _ in 0..cases {
        let Some(setting) = settings.choose(&mut rng) else {
            break;
        };
        let labels = sigma_labels(setting, limits.q_max_sigma);
        let Some(sigma) = labels.choose(&mut rng) else { continue };
        let r = bernstein_degree_with(setting, sigma, &OracleLimits::default())
            .map(|r| r.passed() && r.degree == &r.q_count * &r.p_count);
        t.check_result(r, || format!("{setting} sigma={sigma}"));
    }
    SpotReport {
        seed,
        cases: t.cases,
        failure_count: t.failure_count,
        passed: t.failure_count == 0,
        failures: t.failures,
    }
}

/// Runs the selected suites (all when `only` is empty), plus seeded spot
/// checks when a seed is given.
pub fn verify_all(limits: &VerifyLimits, only: &[Suite], seed: Option<u64>) -> VerifyReport {
    let suites: Vec<SuiteResult> = Suite::ALL
        .into_iter()
        .filter(|s| only.is_empty() || only.contains(s))
        .map(|s| run_suite(s, limits))
        .collect();
    let spot = seed.map(|s| spot_checks(s, 50, limits));
    let passed = suites.iter().all(|s| s.passed) && spot.as_ref().is_none_or(|s| s.passed);
    VerifyReport {
        limits: *limits,
        suites,
        spot_checks: spot,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyLimits {
        VerifyLimits {
            q_max_pq: 2,
            q_max_mp_n: 2,
            q_max_ostar_n: 4,
            q_max_sigma: 2,
            max_diagram: 4,
            product_max_param: 4,
            max_poset_points: 8,
            max_theta_k: 2,
            brute_force_points: 8,
            jelly_points: 8,
            jelly_k: 2,
            jelly_sigma: 2,
            probe_max_n: 3,
            probe_sigma: 2,
        }
    }

    #[test]
    fn small_sweep_passes() {
        let r = verify_all(&small(), &[], Some(7));
        assert!(r.spot_checks.as_ref().unwrap().passed);
        for s in &r.suites {
            assert!(s.passed, "{} {:?}", s.suite, s.failures);
        }
    }

    #[test]
    fn only_restricts() {
        let r = verify_all(&small(), &[Suite::Theta], None);
        assert_eq!(r.suites.len(), 1);
        assert_eq!(r.suites[0].criterion, 4);
        assert_eq!("width".parse::<Suite>().unwrap(), Suite::Width);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn seed_is_reproducible() {
        let a = spot_checks(11, 10, &small());
        assert_eq!(a, spot_checks(11, 10, &small()));
        assert_eq!(a.cases, 10);
    }
}
