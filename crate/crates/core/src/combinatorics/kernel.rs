use num_bigint::BigInt;

use super::binomial::binomial;
use super::determinant::determinant;
use super::partition::Partition;
use crate::error::{Error, Result};

fn pad_bounds(v: &[i64], size: usize, name: &str) -> Result<Vec<i64>> {
    if size == 0 {
        return Ok(Vec::new());
    }
    let last = *v
        .last()
        .ok_or_else(|| Error::InvalidBounds(format!("{name} bounds are empty")))?;
    let mut out: Vec<i64> = v.iter().take(size).copied().collect();
    out.resize(size, last);
    Ok(out)
}

/// Number of semistandard fillings of `lambda / mu` whose row `i` entries lie
/// in `[lower_i, upper_i]`, as a `size x size` determinant of binomials.
///
/// Short bound vectors are padded by repeating their last value.
pub fn count_skew_ssyt_bounded(
    lambda: &Partition,
    mu: &Partition,
    lower: &[i64],
    upper: &[i64],
    size: usize,
) -> Result<BigInt> {
    if lambda.len() > size || mu.len() > size {
        return Err(Error::InvalidBounds(format!(
            "size {size} is smaller than the number of rows"
        )));
    }
    let lam = lambda.padded(size);
    let mu = mu.padded(size);
    if lam.iter().zip(&mu).any(|(l, m)| m > l) {
        return Err(Error::InvalidBounds("mu is not contained in lambda".into()));
    }
    let a = pad_bounds(lower, size, "lower")?;
    let b = pad_bounds(upper, size, "upper")?;
    if a.windows(2).any(|w| w[0] > w[1]) || b.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidBounds("bounds must be weakly increasing".into()));
    }
    if a.iter().zip(&b).any(|(x, y)| x > y) {
        return Err(Error::InvalidBounds("lower bound exceeds upper bound".into()));
    }
    let matrix: Vec<Vec<BigInt>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let m = lam[i] - mu[j] - i as i64 + j as i64;
                    binomial(m + b[i] - a[j], m)
                })
                .collect()
        })
        .collect();
    Ok(determinant(&matrix))
}

/// Brute-force count of the same fillings, cell by cell.
pub fn count_skew_ssyt_brute(lambda: &Partition, mu: &Partition, lower: &[i64], upper: &[i64]) -> u64 {
    let rows = lambda.len();
    let lam = lambda.padded(rows);
    let mu = mu.padded(rows);
    let lo = |i: usize| lower.get(i).or(lower.last()).copied().unwrap_or(1);
    let hi = |i: usize| upper.get(i).or(upper.last()).copied().unwrap_or(0);
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (mu[r] as usize..lam[r] as usize).map(move |c| (r, c)))
        .collect();
    let width = lam.first().copied().unwrap_or(0) as usize;
    let mut grid: Vec<Vec<Option<i64>>> = vec![vec![None; width]; rows];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<Option<i64>>>,
        lo: &dyn Fn(usize) -> i64,
        hi: &dyn Fn(usize) -> i64,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut min = lo(r);
        if c > 0 {
            if let Some(x) = grid[r][c - 1] {
                min = min.max(x);
            }
        }
        if r > 0 {
            if let Some(x) = grid[r - 1][c] {
                min = min.max(x + 1);
            }
        }
        let mut total = 0;
        for v in min..=hi(r) {
            grid[r][c] = Some(v);
            total += go(idx + 1, cells, grid, lo, hi);
        }
        grid[r][c] = None;
        total
    }
    go(0, &cells, &mut grid, &lo, &hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_ssyt;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_one_in_three() {
        let n = count_skew_ssyt_bounded(&p(&[2, 1]), &Partition::empty(), &[1, 1], &[3, 3], 2).unwrap();
        assert_eq!(n, BigInt::from(8));
    }

    #[test]
    fn empty_determinant() {
        let n = count_skew_ssyt_bounded(&Partition::empty(), &Partition::empty(), &[], &[], 0).unwrap();
        assert_eq!(n, BigInt::from(1));
    }

    #[test]
    fn single_box_with_bounds() {
        let n = count_skew_ssyt_bounded(&p(&[1]), &Partition::empty(), &[2], &[3], 1).unwrap();
        assert_eq!(n, BigInt::from(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(count_skew_ssyt_bounded(&p(&[1]), &p(&[2]), &[1], &[2], 1).is_err());
        assert!(count_skew_ssyt_bounded(&p(&[1, 1]), &Partition::empty(), &[2, 1], &[3], 2).is_err());
        assert!(count_skew_ssyt_bounded(&p(&[1]), &Partition::empty(), &[3], &[2], 1).is_err());
        assert!(count_skew_ssyt_bounded(&p(&[1, 1]), &Partition::empty(), &[1], &[2], 1).is_err());
    }

    #[test]
    fn straight_shapes_match_enumeration() {
        for m in 0..=6 {
            for shape in Partition::all_of_size(m) {
                for n in 1..=4u32 {
                    let size = shape.len().max(1);
                    let det = count_skew_ssyt_bounded(&shape, &Partition::empty(), &[1], &[n as i64], size).unwrap();
                    assert_eq!(det, BigInt::from(enumerate_ssyt(&shape, n).len()), "{shape} n={n}");
                }
            }
        }
    }

    #[test]
    fn skew_flagged_matches_brute() {
        let cases: &[(&[u32], &[u32], &[i64], &[i64])] = &[
            (&[3, 2, 1], &[1], &[1, 2, 2], &[3, 4, 5]),
            (&[2, 2], &[1], &[1, 1], &[2, 3]),
            (&[3, 3, 1], &[2, 1], &[2, 2, 3], &[4, 4, 4]),
            (&[1, 1], &[1], &[1, 2], &[1, 2]),
        ];
        for (l, m, lo, hi) in cases {
            let lam = p(l);
            let mu = Partition::from_padded(m).unwrap();
            let det = count_skew_ssyt_bounded(&lam, &mu, lo, hi, lam.len()).unwrap();
            assert_eq!(det, BigInt::from(count_skew_ssyt_brute(&lam, &mu, lo, hi)));
        }
    }
}
