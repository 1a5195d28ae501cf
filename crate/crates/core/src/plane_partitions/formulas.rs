use num_bigint::BigInt;
use num_traits::One;

use super::diagram::{diagram_d, HermitianType};
use super::partition::{c_statistic, enumerate_plane_partitions, PlanePartition};
use crate::combinatorics::IntPolynomial;
use crate::error::{Error, Result};

/// `P_k`: plane partitions bounded by `k` in `D_k`.
pub fn enumerate_p(ty: &HermitianType, k: u32) -> Result<Vec<PlanePartition>> {
    ty.validate()?;
    if k == 0 {
        return Err(Error::KOutOfRange {
            k,
            reason: "k must be positive".into(),
        });
    }
    Ok(enumerate_plane_partitions(&diagram_d(ty, k), k))
}

fn ratio_product<I: Iterator<Item = (i64, i64)>>(factors: I) -> BigInt {
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for (a, b) in factors {
        num *= a;
        den *= b;
    }
    num / den
}

/// `#P_k` by the product formulas for the three dual-pair types.
pub fn count_p_product(ty: &HermitianType, k: u32) -> Result<BigInt> {
    ty.validate()?;
    if k == 0 {
        return Err(Error::KOutOfRange {
            k,
            reason: "k must be positive".into(),
        });
    }
    let k64 = k as i64;
    Ok(match *ty {
        HermitianType::UnitaryPQ { p, q } => {
            let (a, b) = (p.saturating_sub(k) as i64, q.saturating_sub(k) as i64);
            ratio_product((1..=a).flat_map(|i| (1..=b).map(move |j| (k64 + i + j - 1, i + j - 1))))
        }
        HermitianType::Metaplectic { n } => {
            let m = n.saturating_sub(k) as i64;
            ratio_product((1..=m).flat_map(|i| (i..=m).map(move |j| (k64 + i + j - 1, i + j - 1))))
        }
        HermitianType::StarOrthogonal { n } => {
            let m = n.saturating_sub(2 * k + 1) as i64;
            ratio_product((1..=m).flat_map(|i| (i..=m).map(move |j| (2 * k64 + i + j, i + j))))
        }
        _ => return Err(Error::Unsupported(format!("no product formula for {ty}"))),
    })
}

fn require_k_in_rank(ty: &HermitianType, k: u32) -> Result<()> {
    ty.validate()?;
    if k == 0 || k > ty.real_rank() {
        return Err(Error::KOutOfRange {
            k,
            reason: format!("need 1 <= k <= r = {}", ty.real_rank()),
        });
    }
    Ok(())
}

/// `sum_P t^c(P)` over `P_k`.
pub fn numerator_polynomial(ty: &HermitianType, k: u32) -> Result<IntPolynomial> {
    require_k_in_rank(ty, k)?;
    Ok(IntPolynomial::from_exponents(
        enumerate_p(ty, k)?.iter().map(|p| c_statistic(p) as usize),
    ))
}

/// Hilbert series of the orbit closure: numerator and the exponent of `(1-t)`
/// in the denominator.
pub fn hilbert_series_orbit(ty: &HermitianType, k: u32) -> Result<(IntPolynomial, u32)> {
    let num = numerator_polynomial(ty, k)?;
    Ok((num, ty.dim_p_plus() - diagram_d(ty, k).len() as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_examples() {
        let cases = [
            (HermitianType::UnitaryPQ { p: 4, q: 5 }, 2, 50),
            (HermitianType::Metaplectic { n: 3 }, 1, 4),
            (HermitianType::StarOrthogonal { n: 6 }, 1, 14),
            (HermitianType::StarOrthogonal { n: 3 }, 1, 1),
        ];
        for (ty, k, want) in cases {
            assert_eq!(count_p_product(&ty, k).unwrap(), BigInt::from(want));
            assert_eq!(enumerate_p(&ty, k).unwrap().len(), want);
        }
        assert!(count_p_product(&HermitianType::E6, 1).is_err());
    }

    #[test]
    fn exceptional_counts() {
        assert_eq!(enumerate_p(&HermitianType::E6, 2).unwrap().len(), 1);
        assert_eq!(enumerate_p(&HermitianType::E7, 2).unwrap().len(), 3);
        assert_eq!(enumerate_p(&HermitianType::E7, 3).unwrap().len(), 1);
        assert_eq!(enumerate_p(&HermitianType::SoOdd { n: 4 }, 1).unwrap().len(), 2);
    }

    #[test]
    fn hilbert_examples() {
        let (num, e) = hilbert_series_orbit(&HermitianType::SoOdd { n: 3 }, 1).unwrap();
        assert_eq!((num.to_string(), e), ("1+t".to_string(), 4));
        let (num, e) = hilbert_series_orbit(&HermitianType::UnitaryPQ { p: 2, q: 2 }, 2).unwrap();
        assert!(num.is_one());
        assert_eq!(e, 4);
        let (num, e) = hilbert_series_orbit(&HermitianType::E7, 2).unwrap();
        assert_eq!((num.to_string(), e), ("1+t+t^2".to_string(), 26));
        let (_, e) = hilbert_series_orbit(&HermitianType::E6, 1).unwrap();
        assert_eq!(e, 11);
        assert!(hilbert_series_orbit(&HermitianType::E6, 3).is_err());
    }

    #[test]
    fn numerator_at_one_counts_p() {
        for ty in [
            HermitianType::UnitaryPQ { p: 3, q: 4 },
            HermitianType::Metaplectic { n: 4 },
            HermitianType::E6,
        ] {
            for k in 1..=ty.real_rank() {
                let n = numerator_polynomial(&ty, k).unwrap();
                assert_eq!(n.at_one(), BigInt::from(enumerate_p(&ty, k).unwrap().len()));
            }
        }
    }
}
