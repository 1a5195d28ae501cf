use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)`, zero when `a < 0`, `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 7), BigInt::from(1));
        assert_eq!(binomial(-1, 0), BigInt::from(0));
        assert_eq!(binomial(3, -1), BigInt::from(0));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn pascal() {
        for a in 1..40 {
            for b in 1..=a {
                assert_eq!(binomial(a, b), binomial(a - 1, b) + binomial(a - 1, b - 1));
            }
        }
    }

    #[test]
    fn large_value_is_exact() {
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
    }
}
