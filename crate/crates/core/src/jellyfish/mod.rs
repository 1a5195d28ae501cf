//! Jellyfish for U(p,q) and O*(2n): a tableau paired with a family of lattice
//! paths whose endpoints it dictates. Maximal jellyfish index the Stanley spaces
//! of top Krull dimension, so their number is the Bernstein degree.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::dual_pair::{enumerate_q, enumerate_t, Family, Setting, SigmaLabel, TableauLabel};
use crate::error::{Error, Result};
use crate::poset_paths::{Point, RootPoset};

/// Endpoints in increasing order; duplicates mark an unrealizable set.
pub type EndpointSet = Vec<Point>;

pub type PointSet = BTreeSet<Point>;

/// The region `A` above an antidiagonal and its boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryData {
    pub region_a: PointSet,
    /// Starting points of the free paths.
    pub delta_a: PointSet,
    /// Where free paths may end.
    pub delta_p: PointSet,
}

fn require_jellyfish_setting(setting: &Setting) -> Result<()> {
    if matches!(setting.family, Family::Metaplectic { .. }) {
        return Err(Error::Unsupported(
            "jellyfish are defined for U(p,q) and O*(2n) only".into(),
        ));
    }
    if setting.k >= setting.free_threshold() {
        return Err(Error::KOutOfRange {
            k: setting.k,
            reason: format!("jellyfish need k < s = {}", setting.free_threshold()),
        });
    }
    Ok(())
}

pub fn boundary_data(setting: &Setting) -> Result<BoundaryData> {
    require_jellyfish_setting(setting)?;
    let poset = RootPoset::from_family(setting.family)?;
    let k = setting.k as i32;
    let (region_a, delta_a, delta_p): (PointSet, PointSet, PointSet) = match setting.family {
        Family::UnitaryPQ { p, q } => {
            let (p, q) = (p as i32, q as i32);
            let a: PointSet = poset
                .points()
                .iter()
                .copied()
                .filter(|&(i, j)| i + j <= k + 1)
                .collect();
            let da = a
                .iter()
                .copied()
                .filter(|&(i, j)| i + j == k + 1 || i == p || j == q)
                .collect();
            let dp = poset
                .points()
                .iter()
                .copied()
                .filter(|&(i, j)| i == p || j == q)
                .collect();
            (a, da, dp)
        }
        Family::StarOrthogonal { n } => {
            let n = n as i32;
            let a: PointSet = poset
                .points()
                .iter()
                .copied()
                .filter(|&(i, j)| i + j <= 2 * (k + 1))
                .collect();
            let da = a
                .iter()
                .copied()
                .filter(|&(i, j)| i + j == 2 * (k + 1) || j == n)
                .collect();
            let dp = poset.points().iter().copied().filter(|&(_, j)| j == n).collect();
            (a, da, dp)
        }
        Family::Metaplectic { .. } => unreachable!(),
    };
    Ok(BoundaryData {
        region_a,
        delta_a,
        delta_p,
    })
}

/// `k+ = max(l(sigma+), k - p)` and `k- = k - k+` for U(p,q).
pub fn k_plus_minus(setting: &Setting, sigma: &SigmaLabel) -> Result<(u32, u32)> {
    let (Family::UnitaryPQ { p, .. }, SigmaLabel::Signed(s)) = (setting.family, sigma) else {
        return Err(Error::Unsupported("k+ and k- are defined for U(p,q) labels".into()));
    };
    let kp = (s.plus.len() as u32).max(setting.k.saturating_sub(p));
    Ok((kp, setting.k - kp))
}

/// Largest attainable endpoint rows `i^_t` for O*(2n), `t = 1..k`.
pub fn i_hat_ostar(n: u32, k: u32) -> Vec<i32> {
    let (n, k) = (n as i32, k as i32);
    (1..=k)
        .map(|t| if t < 2 * (k + 1) - n { t } else { n + 2 * (t - k) - 1 })
        .collect()
}

/// Largest attainable endpoint rows `i^_t` for U(p,q), `t = 1..k-`, given the
/// southern endpoint columns `j_u`.
pub fn i_hat_upq(p: u32, q: u32, k: u32, k_minus: u32, j: &[i32]) -> Vec<i32> {
    let (p, q, k) = (p as i32, q as i32, k as i32);
    let singles = (k - q).clamp(0, k_minus as i32);
    let mut out: Vec<i32> = (1..=singles).collect();
    let free: Vec<i32> = (1..=p).filter(|&i| !j.contains(&(q - p + i))).collect();
    let need = (k_minus as i32 - singles) as usize;
    out.extend(free[free.len().saturating_sub(need)..].iter().copied());
    out
}

/// `end(T)`: the endpoints lining up with the first column(s) of `T`.
pub fn end_map(setting: &Setting, sigma: &SigmaLabel, t: &TableauLabel) -> Result<EndpointSet> {
    require_jellyfish_setting(setting)?;
    let k = setting.k;
    let mut out = match (setting.family, t) {
        (Family::StarOrthogonal { n }, TableauLabel::Single(tab)) => {
            let col = tab.first_column();
            i_hat_ostar(n, k)
                .into_iter()
                .enumerate()
                .map(|(idx, hat)| (col.get(idx).map_or(hat, |&x| (x as i32).min(hat)), n as i32))
                .collect::<Vec<_>>()
        }
        (Family::UnitaryPQ { p, q }, TableauLabel::Pair { plus, minus }) => {
            let (kp, km) = k_plus_minus(setting, sigma)?;
            let plus_col = plus.first_column();
            let j: Vec<i32> = (1..=kp as i32)
                .map(|u| {
                    if u <= k as i32 - p as i32 {
                        u
                    } else {
                        plus_col[u as usize - 1] as i32
                    }
                })
                .collect();
            let minus_col = minus.first_column();
            let hats = i_hat_upq(p, q, k, km, &j);
            let mut e: Vec<Point> = j.iter().map(|&c| (p as i32, c)).collect();
            e.extend(
                hats.iter()
                    .enumerate()
                    .map(|(idx, &hat)| (minus_col.get(idx).map_or(hat, |&x| (x as i32).min(hat)), q as i32)),
            );
            e
        }
        _ => return Err(Error::Inadmissible(format!("tableau {t} does not match {setting}"))),
    };
    out.sort();
    Ok(out)
}

/// All families of vertex-disjoint southeast paths, one from each point of
/// `delta(A)`, each ending somewhere in `delta(P)`, keyed by endpoint set.
#[derive(Debug, Clone)]
pub struct PathFamilies {
    pub boundary: BoundaryData,
    pub by_endpoints: BTreeMap<EndpointSet, BTreeSet<PointSet>>,
    pub d_k: usize,
}

impl PathFamilies {
    pub fn new(setting: &Setting) -> Result<Self> {
        let boundary = boundary_data(setting)?;
        let poset = RootPoset::from_family(setting.family)?;
        let base: PointSet = boundary.region_a.difference(&boundary.delta_a).copied().collect();
        let starts: Vec<Point> = boundary.delta_a.iter().copied().collect();
        let mut by_endpoints: BTreeMap<EndpointSet, BTreeSet<PointSet>> = BTreeMap::new();
        let mut used = base.clone();
        used.extend(starts.iter().copied());
        let mut ends = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn path(
            idx: usize,
            cur: Point,
            starts: &[Point],
            poset: &RootPoset,
            dp: &PointSet,
            used: &mut PointSet,
            ends: &mut Vec<Point>,
            out: &mut BTreeMap<EndpointSet, BTreeSet<PointSet>>,
        ) {
            if dp.contains(&cur) {
                ends.push(cur);
                next_path(idx + 1, starts, poset, dp, used, ends, out);
                ends.pop();
            }
            for step in [(cur.0, cur.1 + 1), (cur.0 + 1, cur.1)] {
                if poset.contains(step) && !used.contains(&step) {
                    used.insert(step);
                    path(idx, step, starts, poset, dp, used, ends, out);
                    used.remove(&step);
                }
            }
        }
        fn next_path(
            idx: usize,
            starts: &[Point],
            poset: &RootPoset,
            dp: &PointSet,
            used: &mut PointSet,
            ends: &mut Vec<Point>,
            out: &mut BTreeMap<EndpointSet, BTreeSet<PointSet>>,
        ) {
            if idx == starts.len() {
                let mut e = ends.clone();
                e.sort();
                out.entry(e).or_default().insert(used.clone());
                return;
            }
            path(idx, starts[idx], starts, poset, dp, used, ends, out);
        }
        next_path(
            0,
            &starts,
            &poset,
            &boundary.delta_p,
            &mut used,
            &mut ends,
            &mut by_endpoints,
        );
        let d_k = by_endpoints.values().flatten().map(|f| f.len()).max().unwrap_or(0);
        Ok(PathFamilies {
            boundary,
            by_endpoints,
            d_k,
        })
    }

    /// `F_k`: every family, forgetting endpoints.
    pub fn all(&self) -> BTreeSet<PointSet> {
        self.by_endpoints.values().flatten().cloned().collect()
    }

    /// `F^_k`: families of the maximal size `d_k`.
    pub fn maximal(&self) -> BTreeSet<PointSet> {
        self.all().into_iter().filter(|f| f.len() == self.d_k).collect()
    }

    /// `E^_k`: endpoint sets all of whose families are maximal.
    pub fn maximal_endpoints(&self) -> Vec<EndpointSet> {
        self.by_endpoints
            .iter()
            .filter(|(_, fs)| fs.iter().all(|f| f.len() == self.d_k))
            .map(|(e, _)| e.clone())
            .collect()
    }

    /// `F_E`; an endpoint set that no path family reaches is rejected.
    pub fn f_e(&self, e: &EndpointSet) -> Result<&BTreeSet<PointSet>> {
        self.by_endpoints
            .get(e)
            .ok_or_else(|| Error::InvalidBounds(format!("endpoint set {e:?} is not realizable")))
    }
}

pub fn enumerate_f_e(setting: &Setting, e: &EndpointSet) -> Result<Vec<PointSet>> {
    Ok(PathFamilies::new(setting)?.f_e(e)?.iter().cloned().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Jellyfish {
    pub tableau: TableauLabel,
    pub family: PointSet,
}

/// `J_k(sigma)`: pairs `(T, F)` with `F` in `F_end(T)`.
pub fn enumerate_jellyfish(setting: &Setting, sigma: &SigmaLabel) -> Result<Vec<Jellyfish>> {
    let families = PathFamilies::new(setting)?;
    jellyfish_with(setting, sigma, &families, false)
}

/// `J^_k(sigma)`: the jellyfish whose family has maximal size.
pub fn enumerate_maximal_jellyfish(setting: &Setting, sigma: &SigmaLabel) -> Result<Vec<Jellyfish>> {
    let families = PathFamilies::new(setting)?;
    jellyfish_with(setting, sigma, &families, true)
}

pub fn jellyfish_with(
    setting: &Setting,
    sigma: &SigmaLabel,
    families: &PathFamilies,
    maximal_only: bool,
) -> Result<Vec<Jellyfish>> {
    require_jellyfish_setting(setting)?;
    let mut out = Vec::new();
    for t in enumerate_t(setting, sigma)? {
        let e = end_map(setting, sigma, &t)?;
        let Some(fs) = families.by_endpoints.get(&e) else {
            continue;
        };
        out.extend(
            fs.iter()
                .filter(|f| !maximal_only || f.len() == families.d_k)
                .map(|f| Jellyfish {
                    tableau: t.clone(),
                    family: f.clone(),
                }),
        );
    }
    out.sort();
    Ok(out)
}

/// `#J^_k(sigma)`, the multiplicity read off the Stanley decomposition.
pub fn multiplicity_from_jellyfish(setting: &Setting, sigma: &SigmaLabel) -> Result<BigInt> {
    Ok(BigInt::from(enumerate_maximal_jellyfish(setting, sigma)?.len()))
}

/// Whether `J^_k(sigma) = Q_k(sigma) x F^_k` as sets of pairs.
pub fn factorization_holds(setting: &Setting, sigma: &SigmaLabel, families: &PathFamilies) -> Result<bool> {
    let jhat: BTreeSet<Jellyfish> = jellyfish_with(setting, sigma, families, true)?.into_iter().collect();
    let fhat = families.maximal();
    let q = enumerate_q(setting, sigma)?;
    if jhat.len() != q.len() * fhat.len() {
        return Ok(false);
    }
    Ok(q.iter().all(|t| {
        fhat.iter().all(|f| {
            jhat.contains(&Jellyfish {
                tableau: t.clone(),
                family: f.clone(),
            })
        })
    }))
}
