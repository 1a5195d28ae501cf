use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::plane_partitions::{hilbert_series_orbit, HermitianType};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub group: HermitianType,
    pub k: u32,
    pub numerator: String,
    pub denominator_exponent: u32,
    /// Numerator at `t = 1`.
    #[serde(serialize_with = "crate::ser::bigint")]
    pub p_count: BigInt,
    pub rendered: String,
}

/// Hilbert series of the k-th orbit closure, `N(t) / (1-t)^e`.
pub fn hilbert_report(ty: &HermitianType, k: u32) -> Result<HilbertReport> {
    let (num, e) = hilbert_series_orbit(ty, k)?;
    let numerator = num.to_string();
    let rendered = if num.is_one() {
        format!("1/(1-t)^{e}")
    } else {
        format!("({numerator})/(1-t)^{e}")
    };
    Ok(HilbertReport {
        group: *ty,
        k,
        p_count: num.at_one(),
        numerator,
        denominator_exponent: e,
        rendered,
    })
}
