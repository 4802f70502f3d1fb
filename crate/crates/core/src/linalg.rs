//! Exact dense integer linear algebra.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0i64; cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn transpose(a: &[Vec<i64>]) -> IntMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

pub fn is_upper_unitriangular(a: &[Vec<i64>]) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.len() == a.len() && row[i] == 1 && row[..i].iter().all(|&x| x == 0)
    })
}

/// Inverse of an upper unitriangular integer matrix by back substitution.
/// The result is again upper unitriangular with integer entries.
///
/// Panics if `a` is not upper unitriangular.
pub fn unitriangular_inverse(a: &[Vec<i64>]) -> IntMatrix {
    assert!(is_upper_unitriangular(a), "matrix is not upper unitriangular");
    let n = a.len();
    let mut inv = identity(n);
    for j in 0..n {
        for i in (0..j).rev() {
            let mut s = 0i64;
            for k in i + 1..=j {
                if a[i][k] != 0 {
                    s += a[i][k] * inv[k][j];
                }
            }
            inv[i][j] = -s;
        }
    }
    inv
}

fn to_big(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Fraction-free (Bareiss) elimination. Returns the rank and, for square
/// input, the determinant.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            m.swap(pivot, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    let det = if rows == cols && rank == rows {
        if rows == 0 {
            BigInt::one()
        } else {
            prev * sign
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

/// Rank over the rationals of the given row vectors.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    bareiss(to_big(rows)).0
}

pub fn determinant(a: &[Vec<i64>]) -> BigInt {
    assert!(a.iter().all(|r| r.len() == a.len()), "matrix is not square");
    bareiss(to_big(a)).1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
        assert_eq!(rank(&[vec![0, 1], vec![1, 0], vec![1, 1]]), 2);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 1]]), BigInt::from(1));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(
            determinant(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
            BigInt::from(4)
        );
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
    }

    #[test]
    fn unitriangular_inverse_roundtrip() {
        let a = vec![vec![1, 3, -2], vec![0, 1, 5], vec![0, 0, 1]];
        let inv = unitriangular_inverse(&a);
        assert_eq!(matmul(&a, &inv), identity(3));
        assert_eq!(matmul(&inv, &a), identity(3));
    }
}
