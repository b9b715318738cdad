//! The coronal `Γ_M(x) = 1ᵀ (xI - M)⁻¹ 1` of a square matrix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{DenseMatrix, IntMatrix, LinalgError, Result};

/// Coronal by a dense linear solve of `(xI - M) y = 1`.
///
/// A pivot below `1e-12` of the matrix scale means `x` is (numerically) an
/// eigenvalue; that is reported as [`LinalgError::PoleOrNearPole`].
pub fn coronal_generic(m: &IntMatrix, x: f64) -> Result<f64> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(0.0);
    }
    let dense = m.to_dense();
    let shifted = DenseMatrix::from_fn(n, n, |i, j| {
        if i == j {
            x - dense[(i, j)]
        } else {
            -dense[(i, j)]
        }
    });
    match shifted.solve(&vec![1.0; n]) {
        Ok(y) => Ok(y.iter().sum()),
        Err(LinalgError::Singular) => Err(LinalgError::PoleOrNearPole(x)),
        Err(e) => Err(e),
    }
}

/// `n / (x - t)`: the coronal of any `n × n` matrix whose rows all sum to `t`.
pub fn coronal_row_regular(n: usize, t: f64, x: f64) -> Result<f64> {
    let d = x - t;
    if d.abs() <= f64::EPSILON * t.abs().max(1.0) {
        return Err(LinalgError::PoleOrNearPole(x));
    }
    Ok(n as f64 / d)
}

/// `((p+q)x + 2pq) / (x² - pq)`: the adjacency coronal of `K_{p,q}`.
pub fn coronal_complete_bipartite(p: usize, q: usize, x: f64) -> Result<f64> {
    let pq = (p * q) as f64;
    let den = x * x - pq;
    if den.abs() <= 1e-12 * pq.max(1.0) {
        return Err(LinalgError::PoleOrNearPole(x));
    }
    Ok(((p + q) as f64 * x + 2.0 * pq) / den)
}

/// Exact coronal at a rational point by Gaussian elimination over the rationals.
pub fn coronal_exact(m: &IntMatrix, x: &BigRational) -> Result<BigRational> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..n)
                .map(|j| {
                    let v = BigRational::from_integer(-m.get(i, j).clone());
                    if i == j {
                        v + x
                    } else {
                        v
                    }
                })
                .collect();
            row.push(BigRational::from_integer(BigInt::from(1)));
            row
        })
        .collect();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Err(LinalgError::PoleOrNearPole(x.to_f64().unwrap_or(f64::NAN)));
        };
        a.swap(k, p);
        let pivot = a[k][k].clone();
        for v in &mut a[k][k..] {
            *v = &*v / &pivot;
        }
        let pivot_row = a[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for (v, p) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                *v -= &f * p;
            }
        }
    }
    Ok(a.iter().map(|row| row[n].clone()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> IntMatrix {
        IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn k2_at_three() {
        assert!((coronal_generic(&k2(), 3.0).unwrap() - 1.0).abs() < 1e-14);
        assert_eq!(coronal_row_regular(2, 1.0, 3.0).unwrap(), 1.0);
    }

    #[test]
    fn row_regular_values() {
        assert_eq!(coronal_row_regular(4, 2.0, 3.0).unwrap(), 4.0);
        assert!(coronal_row_regular(4, 2.0, 2.0).is_err());
    }

    #[test]
    fn star_k12_at_two() {
        // K_{1,2}: centre 0
        let m = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]).unwrap();
        assert!((coronal_generic(&m, 2.0).unwrap() - 5.0).abs() < 1e-12);
        assert!((coronal_complete_bipartite(1, 2, 2.0).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn pole_is_detected() {
        assert_eq!(
            coronal_generic(&k2(), 1.0),
            Err(LinalgError::PoleOrNearPole(1.0))
        );
        let one = BigRational::from_integer(BigInt::from(1));
        assert!(coronal_exact(&k2(), &one).is_err());
    }

    #[test]
    fn exact_matches_float() {
        let x = BigRational::new(BigInt::from(7), BigInt::from(2));
        let exact = coronal_exact(&k2(), &x).unwrap();
        // 2 / (7/2 - 1) = 4/5
        assert_eq!(exact, BigRational::new(BigInt::from(4), BigInt::from(5)));
    }
}
