//! Exact linear algebra over the rationals and the integers.
//!
//! * Gauss-Jordan inversion over `BigRational`;
//! * determinants by fraction-free (Bareiss) elimination over `BigInt`;
//! * inversion of unimodular integer matrices, used to solve the
//!   reconstruction systems exactly.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type QMatrix = Vec<Vec<BigRational>>;
pub type ZMatrix = Vec<Vec<BigInt>>;

pub fn identity_q(n: usize) -> QMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

pub fn matmul_q(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let m = if k == 0 { 0 } else { b[0].len() };
    assert_eq!(k, b.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

pub fn matmul_z(a: &ZMatrix, b: &ZMatrix) -> ZMatrix {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let m = if k == 0 { 0 } else { b[0].len() };
    assert_eq!(k, b.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose_z(a: &ZMatrix) -> ZMatrix {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn to_rational(a: &ZMatrix) -> QMatrix {
    a.iter()
        .map(|row| row.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect()
}

/// Inverts a square rational matrix by Gauss-Jordan elimination.
pub fn invert_rational(a: &QMatrix) -> Result<QMatrix> {
    let n = a.len();
    for row in a {
        if row.len() != n {
            return Err(Error::SizeMismatch(row.len(), n));
        }
    }
    let mut m = a.clone();
    let mut inv = identity_q(n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Inconsistent(format!("singular matrix at column {col}")))?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                let t = &f * &m[col][j];
                m[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Ok(inv)
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn det_z(a: &ZMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Inverts an integer matrix with determinant plus or minus one.
///
/// Fails if the matrix is singular, has a different determinant, or (as a
/// safety net) if the rational inverse is not integral.
pub fn invert_unimodular(a: &ZMatrix) -> Result<ZMatrix> {
    let d = det_z(a);
    if !d.abs().is_one() {
        return Err(Error::Inconsistent(format!(
            "matrix is not unimodular: determinant {d}"
        )));
    }
    let inv = invert_rational(&to_rational(a))?;
    inv.iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    if c.is_integer() {
                        Ok(c.to_integer())
                    } else {
                        Err(Error::Inconsistent(format!(
                            "inverse of unimodular matrix has entry {c}"
                        )))
                    }
                })
                .collect()
        })
        .collect()
}

/// Solves `A x = y` for a unimodular integer matrix `A`.
pub fn solve_unimodular(a: &ZMatrix, y: &[BigInt]) -> Result<Vec<BigInt>> {
    let inv = invert_unimodular(a)?;
    if y.len() != inv.len() {
        return Err(Error::SizeMismatch(y.len(), inv.len()));
    }
    Ok(inv
        .iter()
        .map(|row| row.iter().zip(y).map(|(c, v)| c * v).sum())
        .collect())
}

pub fn z_from_i64(rows: &[&[i64]]) -> ZMatrix {
    rows.iter()
        .map(|row| row.iter().map(|&c| BigInt::from(c)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_rational_roundtrip() {
        let a = to_rational(&z_from_i64(&[&[2, 1], &[7, 4]]));
        let inv = invert_rational(&a).unwrap();
        assert_eq!(matmul_q(&a, &inv), identity_q(2));
    }

    #[test]
    fn invert_rational_rejects_singular() {
        let a = to_rational(&z_from_i64(&[&[1, 2], &[2, 4]]));
        assert!(invert_rational(&a).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(det_z(&z_from_i64(&[&[3, 2], &[1, 1]])), BigInt::from(1));
        assert_eq!(
            det_z(&z_from_i64(&[&[4, 1, 0], &[6, 4, 3], &[1, 1, 1]])),
            BigInt::from(1)
        );
        assert_eq!(det_z(&z_from_i64(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_z(&z_from_i64(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        // 4x4 with a zero pivot partway through.
        let m = z_from_i64(&[
            &[1, 1, 1, 1],
            &[1, 1, 2, 0],
            &[0, 0, 1, 5],
            &[2, 3, 0, 1],
        ]);
        assert_eq!(det_z(&m), BigInt::from(6));
    }

    #[test]
    fn unimodular_inverse_is_integral() {
        let a = z_from_i64(&[&[4, 1, 0], &[6, 4, 3], &[1, 1, 1]]);
        let inv = invert_unimodular(&a).unwrap();
        let prod = matmul_z(&a, &inv);
        let id: ZMatrix = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        assert_eq!(prod, id);
        assert!(invert_unimodular(&z_from_i64(&[&[2, 0], &[0, 1]])).is_err());
    }

    #[test]
    fn solve_matches_multiplication() {
        let a = z_from_i64(&[&[3, 2], &[1, 1]]);
        let x = vec![BigInt::from(5), BigInt::from(-2)];
        let y: Vec<BigInt> = a
            .iter()
            .map(|row| row.iter().zip(&x).map(|(c, v)| c * v).sum())
            .collect();
        assert_eq!(solve_unimodular(&a, &y).unwrap(), x);
    }
}
