use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Panics on a non-square matrix.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Laplace expansion along the first row. Exponential; an oracle only.
pub fn determinant_cofactor(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if matrix[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &matrix[0][j] * determinant_cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn identity_and_two_by_two() {
        assert_eq!(determinant(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), BigInt::from(1));
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(determinant(&[]), BigInt::from(1));
    }

    #[test]
    fn needs_pivoting() {
        let a = m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(determinant(&a), determinant_cofactor(&a));
        assert_eq!(determinant(&m(&[&[0, 0], &[1, 2]])), BigInt::from(0));
    }

    #[test]
    fn singular() {
        assert_eq!(determinant(&m(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]])), BigInt::from(0));
    }
}
