use super::{DenseMatrix, LinalgError, Result};

/// Default convergence threshold: off-diagonal Frobenius norm relative to `‖M‖_F`.
pub const DEFAULT_JACOBI_TOL: f64 = 1e-13;

const MAX_SWEEPS: usize = 100;
const SYMMETRY_TOL: f64 = 1e-12;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
///
/// Sweeps run over the strict upper triangle in row order until the off-diagonal
/// Frobenius norm drops below `tol · ‖M‖_F`.
pub fn sym_eigenvalues(m: &DenseMatrix, tol: f64) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.rows(), m.cols()));
    }
    if m.as_slice().iter().any(|v| !v.is_finite()) {
        return Err(LinalgError::NonFinite);
    }
    if let Some((i, j)) = m.first_asymmetry(SYMMETRY_TOL) {
        return Err(LinalgError::NotSymmetric(i, j));
    }
    let n = m.rows();
    // symmetrise exactly so row and column updates stay consistent
    let mut a: Vec<f64> = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            0.5 * (m[(i, j)] + m[(j, i)])
        })
        .collect();
    let norm = m.frobenius_norm();
    if norm == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let target = tol * norm;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) >= target {
        if sweeps == MAX_SWEEPS {
            return Err(LinalgError::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Annihilates `a[p][q]` with one Jacobi rotation (Rutishauser's update).
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let g = 100.0 * apq.abs();
    // below the resolution of both diagonal entries: drop it
    if app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        return;
    }
    let h = aqq - app;
    let t = if h.abs() + g == h.abs() {
        apq / h
    } else {
        let theta = 0.5 * h / apq;
        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = akp - s * (akq + akp * tau);
        let new_kq = akq + s * (akp - akq * tau);
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(rows: &[Vec<f64>]) -> Vec<f64> {
        sym_eigenvalues(&DenseMatrix::from_rows(rows).unwrap(), DEFAULT_JACOBI_TOL).unwrap()
    }

    #[test]
    fn k2_adjacency() {
        let e = eig(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert!((e[0] + 1.0).abs() < 1e-14 && (e[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn p3_laplacian() {
        // det(xI - L) = x(x-1)(x-3) by expansion along the first row
        let e = eig(&[
            vec![1.0, -1.0, 0.0],
            vec![-1.0, 2.0, -1.0],
            vec![0.0, -1.0, 1.0],
        ]);
        for (got, want) in e.iter().zip([0.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-13, "{e:?}");
        }
    }

    #[test]
    fn zero_and_one_by_one() {
        assert_eq!(eig(&[vec![0.0, 0.0], vec![0.0, 0.0]]), vec![0.0, 0.0]);
        assert_eq!(eig(&[vec![-4.5]]), vec![-4.5]);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(
            sym_eigenvalues(&m, DEFAULT_JACOBI_TOL),
            Err(LinalgError::NotSymmetric(0, 1))
        );
    }
}
