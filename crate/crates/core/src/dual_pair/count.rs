use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use super::setting::{require_sigma, Family, Setting, SigmaLabel};
use crate::combinatorics::{binomial, count_skew_ssyt_bounded, determinant, Partition};
use crate::error::Result;

/// `#Q_k(sigma)` by the lattice-path determinant formulas.
pub fn count_q_determinant(setting: &Setting, sigma: &SigmaLabel) -> Result<BigInt> {
    require_sigma(setting, sigma)?;
    let k = setting.k as i64;
    match setting.family {
        Family::UnitaryPQ { p, q } => {
            let s = sigma.signed()?;
            let (top, bottom) = if p <= q {
                (&s.plus, &s.minus)
            } else {
                (&s.minus, &s.plus)
            };
            let (r, big_r) = (p.min(q) as i64, p.max(q) as i64);
            let mut tau = top.padded(top.len());
            tau.extend(std::iter::repeat_n(0, k as usize - top.len() - bottom.len()));
            tau.extend(bottom.parts().iter().rev().map(|&x| -(x as i64)));
            let b1 = bottom.part(1) as i64;
            let c = |j: i64| if j <= k - r { 0 } else { b1 };
            let d = |j: i64| -1 + if j <= k - r { big_r } else { k.min(r) };
            let matrix: Vec<Vec<BigInt>> = (1..=k)
                .map(|i| {
                    (1..=k)
                        .map(|j| {
                            let m = tau[i as usize - 1] - i + j + c(j);
                            binomial(m + d(j), m)
                        })
                        .collect()
                })
                .collect();
            Ok(determinant(&matrix))
        }
        Family::Metaplectic { n } => {
            let sigma = sigma.single()?;
            let n = n as i64;
            let rest = sigma.without_first_column();
            let (c1, c2) = (sigma.conjugate_part(1) as usize, sigma.conjugate_part(2) as usize);
            let interval: Vec<i64> = (n - k + 1..=n).collect();
            let mut total = BigInt::zero();
            for chosen in ((n - k + 1).max(1)..=n).combinations(c1) {
                let others: Vec<i64> = interval.iter().copied().filter(|x| !chosen.contains(x)).collect();
                let lower: Vec<i64> = (0..c2).map(|j| chosen[j].max(others[j])).collect();
                total += if c2 == 0 {
                    BigInt::from(1)
                } else {
                    count_skew_ssyt_bounded(&rest, &Partition::empty(), &lower, &[n], c2)?
                };
            }
            Ok(total)
        }
        Family::StarOrthogonal { n } => {
            let n = n as i64;
            let lower: Vec<i64> = (1..=k).map(|j| (n + 2 * (j - k) - 1).max(1)).collect();
            count_skew_ssyt_bounded(sigma.single()?, &Partition::empty(), &lower, &[n], k as usize)
        }
    }
}
