use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{enumerate_ssyt, Partition};
use crate::dual_pair::{Family, Setting, SigmaLabel};
use crate::error::{Error, Result};

/// Weyl dimension of the GL_n irrep with weakly decreasing highest weight.
pub fn dim_gl(n: usize, weight: &[i64]) -> Result<BigInt> {
    if weight.len() != n || weight.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDominant(format!("{weight:?} for GL_{n}")));
    }
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for i in 0..n {
        for j in i + 1..n {
            num *= weight[i] - weight[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    Ok(num / den)
}

/// Proctor's orthogonal tableaux: SSYT(sigma, k) whose first two columns
/// hold at most `i` entries `<= i` for every `i`.
pub fn dim_o(k: u32, sigma: &Partition) -> Result<BigInt> {
    if sigma.conjugate_part(1) + sigma.conjugate_part(2) > k {
        return Err(Error::Inadmissible(format!("{sigma} for O_{k}")));
    }
    let n = enumerate_ssyt(sigma, k)
        .into_iter()
        .filter(|t| {
            let cols = t.first_two_columns();
            (1..=k).all(|i| cols.iter().filter(|&&x| x <= i).count() as u32 <= i)
        })
        .count();
    Ok(BigInt::from(n))
}

/// Proctor's symplectic tableaux: SSYT(sigma, 2k) whose first column holds
/// at most `i` entries `<= 2i` for every `i`.
pub fn dim_sp(k: u32, sigma: &Partition) -> Result<BigInt> {
    if sigma.len() > k as usize {
        return Err(Error::Inadmissible(format!("{sigma} for Sp_{}", 2 * k)));
    }
    let n = enumerate_ssyt(sigma, 2 * k)
        .into_iter()
        .filter(|t| {
            let col = t.first_column();
            (1..=k).all(|i| col.iter().filter(|&&x| x <= 2 * i).count() as u32 <= i)
        })
        .count();
    Ok(BigInt::from(n))
}

/// `dim U_sigma` for the compact member of the pair.
pub fn dim_u_sigma(setting: &Setting, sigma: &SigmaLabel) -> Result<BigInt> {
    let k = setting.k;
    match (setting.family, sigma) {
        (Family::UnitaryPQ { .. }, SigmaLabel::Signed(s)) => dim_gl(k as usize, &s.to_tuple(k as usize)?),
        (Family::Metaplectic { .. }, SigmaLabel::Single(s)) => dim_o(k, s),
        (Family::StarOrthogonal { .. }, SigmaLabel::Single(s)) => dim_sp(k, s),
        _ => Err(Error::Inadmissible(format!("{sigma} does not match {setting}"))),
    }
}

/// `dim F_lambda(sigma)`, the K-type generated by the highest weight vector.
pub fn dim_f_lambda(setting: &Setting, sigma: &SigmaLabel) -> Result<BigInt> {
    match (setting.family, sigma) {
        (Family::UnitaryPQ { p, q }, SigmaLabel::Signed(s)) => {
            Ok(dim_gl(p as usize, &s.minus.padded(p as usize))? * dim_gl(q as usize, &s.plus.padded(q as usize))?)
        }
        (Family::Metaplectic { n } | Family::StarOrthogonal { n }, SigmaLabel::Single(s)) => {
            dim_gl(n as usize, &s.padded(n as usize))
        }
        _ => Err(Error::Inadmissible(format!("{sigma} does not match {setting}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::SignedPartitionPair;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn gl_examples() {
        assert_eq!(dim_gl(2, &[1, 0]).unwrap(), BigInt::from(2));
        assert_eq!(dim_gl(3, &[2, 1, 0]).unwrap(), BigInt::from(8));
        assert_eq!(dim_gl(4, &[-3, -3, -3, -3]).unwrap(), BigInt::from(1));
        assert!(dim_gl(2, &[0, 1]).is_err());
    }

    #[test]
    fn gl_matches_ssyt() {
        for n in 1..=5u32 {
            for s in Partition::all_up_to(6) {
                if s.len() > n as usize {
                    continue;
                }
                let count = enumerate_ssyt(&s, n).len();
                assert_eq!(dim_gl(n as usize, &s.padded(n as usize)).unwrap(), BigInt::from(count));
            }
        }
    }

    #[test]
    fn compact_examples() {
        assert_eq!(dim_sp(1, &part(&[1])).unwrap(), BigInt::from(2));
        assert_eq!(dim_o(1, &part(&[1])).unwrap(), BigInt::from(1));
        assert_eq!(dim_o(3, &Partition::empty()).unwrap(), BigInt::from(1));
        assert_eq!(dim_sp(3, &Partition::empty()).unwrap(), BigInt::from(1));
        // vector and adjoint representations
        assert_eq!(dim_o(5, &part(&[1])).unwrap(), BigInt::from(5));
        assert_eq!(dim_o(5, &part(&[1, 1])).unwrap(), BigInt::from(10));
        assert_eq!(dim_sp(2, &part(&[2])).unwrap(), BigInt::from(10));
        assert_eq!(dim_sp(2, &part(&[1, 1])).unwrap(), BigInt::from(5));
        assert!(dim_sp(1, &part(&[1, 1])).is_err());
    }

    #[test]
    fn f_lambda_examples() {
        let s = Setting::ostar(3, 1).unwrap();
        assert_eq!(
            dim_f_lambda(&s, &SigmaLabel::Single(part(&[1]))).unwrap(),
            BigInt::from(3)
        );
        let u = Setting::upq(2, 3, 2).unwrap();
        let pair = SigmaLabel::Signed(SignedPartitionPair::new(part(&[1]), part(&[1])));
        assert_eq!(dim_f_lambda(&u, &pair).unwrap(), BigInt::from(6));
    }
}
