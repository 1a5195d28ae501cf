use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::plane_partitions::{enumerate_p, HermitianType};
use crate::rep_dimensions::{dim_weyl, DominantWeight, RootSystemData};

/// `(c + x a + y b)^m` as `(c, x, y, m)`.
pub type LinearFactor = (i64, i64, i64, u32);

/// One row of the exceptional table: a family `L_lambda(a, b)` whose degree
/// factors as `dim U_sigma * deg O_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalFamilyRow {
    pub group: HermitianType,
    /// Fundamental-weight coordinates of lambda.
    pub lambda: &'static str,
    pub k: u32,
    pub deg_orbit: u32,
    pub h_group: &'static str,
    pub sigma: &'static str,
    pub uses_b: bool,
    #[serde(skip)]
    pub factors: &'static [LinearFactor],
    pub denominator: u64,
}

const B3_POLY: &[LinearFactor] = &[(1, 1, 0, 1), (2, 1, 0, 1), (3, 1, 0, 1), (4, 1, 0, 1), (5, 2, 0, 1)];

const B4_POLY: &[LinearFactor] = &[
    (1, 1, 0, 1),
    (2, 1, 0, 1),
    (3, 1, 0, 1),
    (4, 1, 0, 1),
    (5, 1, 0, 1),
    (6, 1, 0, 1),
    (7, 2, 0, 1),
];

const F4_POLY: &[LinearFactor] = &[
    (1, 1, 0, 1),
    (2, 1, 0, 1),
    (3, 1, 0, 2),
    (4, 1, 0, 1),
    (5, 1, 0, 1),
    (1, 0, 1, 1),
    (2, 1, 1, 1),
    (3, 1, 1, 1),
    (4, 1, 1, 2),
    (5, 1, 1, 1),
    (6, 1, 1, 1),
    (5, 2, 1, 1),
    (6, 2, 1, 1),
    (7, 2, 1, 2),
    (8, 2, 1, 1),
    (9, 2, 1, 1),
    (10, 3, 1, 1),
    (11, 3, 2, 1),
];

pub fn exceptional_rows() -> Vec<ExceptionalFamilyRow> {
    let row = |group, lambda, k, deg_orbit, h_group, sigma, uses_b, factors, denominator| ExceptionalFamilyRow {
        group,
        lambda,
        k,
        deg_orbit,
        h_group,
        sigma,
        uses_b,
        factors,
        denominator,
    };
    vec![
        row(
            HermitianType::E6,
            "[0,0,0,0,a,-2a-6]",
            2,
            1,
            "B3",
            "[a,0,0]",
            false,
            B3_POLY,
            120,
        ),
        row(
            HermitianType::E6,
            "[0,0,0,0,a,-2a-6]",
            2,
            1,
            "G2",
            "[a,0]",
            false,
            B3_POLY,
            120,
        ),
        row(
            HermitianType::E7,
            "[0,0,0,0,0,a,-2a-8]",
            2,
            3,
            "B4",
            "[a,0,0,0]",
            false,
            B4_POLY,
            5040,
        ),
        row(
            HermitianType::E7,
            "[0,0,0,0,a,b,-3a-2b-12]",
            3,
            1,
            "F4",
            "[0,0,a,b]",
            true,
            F4_POLY,
            12_070_840_320_000,
        ),
    ]
}

impl ExceptionalFamilyRow {
    /// `sigma(a, b)` in fundamental-weight coordinates.
    pub fn sigma_weight(&self, a: u32, b: u32) -> DominantWeight {
        DominantWeight::Fundamental(match self.h_group {
            "B3" => vec![a, 0, 0],
            "G2" => vec![a, 0],
            "B4" => vec![a, 0, 0, 0],
            _ => vec![0, 0, a, b],
        })
    }

    /// The closed-form dimension polynomial at `(a, b)`.
    pub fn polynomial_value(&self, a: u32, b: u32) -> BigInt {
        let (a, b) = (a as i64, b as i64);
        let num = self.factors.iter().fold(BigInt::one(), |acc, &(c, x, y, m)| {
            acc * BigInt::from(c + x * a + y * b).pow(m)
        });
        num / self.denominator
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalDegree {
    pub h_group: &'static str,
    pub a: u32,
    pub b: u32,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub dim_u_sigma: BigInt,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub polynomial: BigInt,
    pub deg_orbit: u32,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub degree: BigInt,
    /// Weyl dimension equals the closed-form polynomial, and `deg_orbit = #P_k`.
    pub agrees: bool,
}

/// `dim U_sigma(a,b) * deg O_k`, with the Weyl dimension checked against the
/// closed-form polynomial and `deg O_k` against `#P_k`.
pub fn exceptional_degree(row: &ExceptionalFamilyRow, a: u32, b: u32) -> Result<ExceptionalDegree> {
    if b != 0 && !row.uses_b {
        return Err(Error::InvalidSetting(format!(
            "the {} row has no parameter b",
            row.h_group
        )));
    }
    let rs = RootSystemData::builtin(row.h_group)?;
    let dim = dim_weyl(&rs, &row.sigma_weight(a, b))?;
    let polynomial = row.polynomial_value(a, b);
    let p_count = enumerate_p(&row.group, row.k)?.len();
    Ok(ExceptionalDegree {
        h_group: row.h_group,
        a,
        b,
        agrees: dim == polynomial && p_count == row.deg_orbit as usize,
        degree: &dim * row.deg_orbit,
        dim_u_sigma: dim,
        polynomial,
        deg_orbit: row.deg_orbit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let rows = exceptional_rows();
        assert_eq!(exceptional_degree(&rows[0], 0, 0).unwrap().degree, BigInt::from(1));
        assert_eq!(exceptional_degree(&rows[0], 1, 0).unwrap().degree, BigInt::from(7));
        assert_eq!(exceptional_degree(&rows[2], 0, 0).unwrap().degree, BigInt::from(3));
        assert!(exceptional_degree(&rows[0], 1, 1).is_err());
    }

    #[test]
    fn polynomials_match_weyl() {
        for row in exceptional_rows() {
            let bs = if row.uses_b { 0..=4 } else { 0..=0 };
            for b in bs {
                for a in 0..=4 {
                    let d = exceptional_degree(&row, a, b).unwrap();
                    assert!(
                        d.agrees,
                        "{} a={a} b={b}: {} vs {}",
                        row.h_group, d.dim_u_sigma, d.polynomial
                    );
                }
            }
        }
    }
}
