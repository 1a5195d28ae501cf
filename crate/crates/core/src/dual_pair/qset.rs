use std::fmt;

use serde::Serialize;

use super::setting::{require_hhat, Family, Setting, SigmaLabel};
use crate::combinatorics::{enumerate_ssyt, Tableau};
use crate::error::Result;

/// An element of `T(sigma)`: one tableau, or a pair `(T+, T-)` for U(p,q).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum TableauLabel {
    Single(Tableau),
    Pair { plus: Tableau, minus: Tableau },
}

impl fmt::Display for TableauLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauLabel::Single(t) => write!(f, "{t}"),
            TableauLabel::Pair { plus, minus } => write!(f, "({plus}, {minus})"),
        }
    }
}

/// The base set `T(sigma)`, before any constraint.
pub fn enumerate_t(setting: &Setting, sigma: &SigmaLabel) -> Result<Vec<TableauLabel>> {
    require_hhat(setting, sigma)?;
    Ok(match setting.family {
        Family::UnitaryPQ { p, q } => {
            let s = sigma.signed()?;
            let minus = enumerate_ssyt(&s.minus, p);
            let mut out = Vec::new();
            for tp in enumerate_ssyt(&s.plus, q) {
                for tm in &minus {
                    out.push(TableauLabel::Pair {
                        plus: tp.clone(),
                        minus: tm.clone(),
                    });
                }
            }
            out
        }
        Family::Metaplectic { n } | Family::StarOrthogonal { n } => enumerate_ssyt(sigma.single()?, n)
            .into_iter()
            .map(TableauLabel::Single)
            .collect(),
    })
}

fn count_below(xs: &[u32], bound: i64) -> i64 {
    xs.iter().filter(|&&x| (x as i64) < bound).count() as i64
}

/// `alpha_i(T)` for `1 <= i <= k`.
///
/// Panics if the tableau label does not match the family.
pub fn alpha(setting: &Setting, t: &TableauLabel, i: u32) -> i64 {
    let (k, i) = (setting.k as i64, i as i64);
    match (setting.family, t) {
        (Family::UnitaryPQ { p, q }, TableauLabel::Pair { plus, minus }) => {
            count_below(&plus.first_column(), q as i64 - k + i) + count_below(&minus.first_column(), p as i64 - k + i)
        }
        (Family::Metaplectic { n }, TableauLabel::Single(t)) => count_below(&t.first_two_columns(), n as i64 - k + i),
        (Family::StarOrthogonal { n }, TableauLabel::Single(t)) => {
            count_below(&t.first_column(), n as i64 - 1 - 2 * k + 2 * i)
        }
        _ => panic!("tableau label does not match {setting}"),
    }
}

/// `alpha_i(T) < i` for every `k - r < i <= k`.
pub fn in_q_definition(setting: &Setting, t: &TableauLabel) -> bool {
    let lo = setting.k.saturating_sub(setting.real_rank()) + 1;
    (lo..=setting.k).all(|i| alpha(setting, t, i) < i as i64)
}

/// The `j`-th smallest (1-based) element of `universe` not in `taken`.
fn jth_missing(universe: std::ops::RangeInclusive<i64>, taken: &[i64], j: usize) -> Option<i64> {
    universe.filter(|x| !taken.contains(x)).nth(j - 1)
}

/// The case-by-case first-column criterion equivalent to `in_q_definition`.
pub fn in_q_criteria(setting: &Setting, t: &TableauLabel) -> bool {
    let k = setting.k as i64;
    match (setting.family, t) {
        (Family::UnitaryPQ { p, q }, TableauLabel::Pair { plus, minus }) => {
            // eps side A carries the larger of p, q; the other side is B
            let (a, shift_a, b, shift_b) = if p <= q {
                (plus, k - q as i64, minus, k - p as i64)
            } else {
                (minus, k - p as i64, plus, k - q as i64)
            };
            let r = p.min(q) as i64;
            let b1: Vec<i64> = b.first_column().iter().map(|&x| x as i64 + shift_b).collect();
            if b1.first().is_some_and(|&x| x < 1) {
                return false;
            }
            let a1: Vec<i64> = a.first_column().iter().map(|&x| x as i64 + shift_a).collect();
            let start = (k - r).max(0) + 1;
            (start..=a1.len() as i64).all(|j| match jth_missing(1..=k, &b1, j as usize) {
                Some(m) => a1[j as usize - 1] >= m,
                None => false,
            })
        }
        (Family::Metaplectic { n }, TableauLabel::Single(t)) => {
            let (n, lo) = (n as i64, n as i64 - k + 1);
            let t1: Vec<i64> = t.first_column().iter().map(|&x| x as i64).collect();
            if t1.first().is_some_and(|&x| x < lo) {
                return false;
            }
            let t2 = t.column(2);
            t2.iter()
                .enumerate()
                .all(|(j, &x)| match jth_missing(lo..=n, &t1, j + 1) {
                    Some(m) => x as i64 >= m,
                    None => false,
                })
        }
        (Family::StarOrthogonal { n }, TableauLabel::Single(t)) => t
            .first_column()
            .iter()
            .enumerate()
            .all(|(j, &x)| x as i64 >= n as i64 + 2 * (j as i64 + 1 - k) - 1),
        _ => false,
    }
}

/// `Q_k(sigma)`: the elements of `T(sigma)` passing the definition.
pub fn enumerate_q(setting: &Setting, sigma: &SigmaLabel) -> Result<Vec<TableauLabel>> {
    Ok(enumerate_t(setting, sigma)?
        .into_iter()
        .filter(|t| in_q_definition(setting, t))
        .collect())
}
