use super::{DenseMatrix, LinalgError, Result};

/// Determinant of the block matrix `[[M1, M2], [M3, M4]]` evaluated through both
/// Schur complements.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchurDeterminants {
    /// `det(M4) · det(M1 - M2 M4⁻¹ M3)`
    pub via_m4: f64,
    /// `det(M1) · det(M4 - M3 M1⁻¹ M2)`
    pub via_m1: f64,
}

pub fn schur_det(
    m1: &DenseMatrix,
    m2: &DenseMatrix,
    m3: &DenseMatrix,
    m4: &DenseMatrix,
) -> Result<SchurDeterminants> {
    let (p, q) = (m1.rows(), m4.rows());
    if !m1.is_square() || !m4.is_square() {
        return Err(LinalgError::DimensionMismatch(
            "diagonal blocks must be square".into(),
        ));
    }
    if m2.rows() != p || m2.cols() != q || m3.rows() != q || m3.cols() != p {
        return Err(LinalgError::DimensionMismatch(format!(
            "off-diagonal blocks must be {p}x{q} and {q}x{p}"
        )));
    }
    let m4_inv = m4.inverse()?;
    let m1_inv = m1.inverse()?;
    let comp_m4 = m1.sub(&m2.matmul(&m4_inv)?.matmul(m3)?)?;
    let comp_m1 = m4.sub(&m3.matmul(&m1_inv)?.matmul(m2)?)?;
    Ok(SchurDeterminants {
        via_m4: m4.determinant()? * comp_m4.determinant()?,
        via_m1: m1.determinant()? * comp_m1.determinant()?,
    })
}

/// Assembles `[[M1, M2], [M3, M4]]`.
pub fn block_matrix(
    m1: &DenseMatrix,
    m2: &DenseMatrix,
    m3: &DenseMatrix,
    m4: &DenseMatrix,
) -> DenseMatrix {
    let p = m1.rows();
    let n = p + m4.rows();
    DenseMatrix::from_fn(n, n, |i, j| match (i < p, j < p) {
        (true, true) => m1[(i, j)],
        (true, false) => m2[(i, j - p)],
        (false, true) => m3[(i - p, j)],
        (false, false) => m4[(i - p, j - p)],
    })
}
