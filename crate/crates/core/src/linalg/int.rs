use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{DenseMatrix, LinalgError, Result};

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i64::from(i == j))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(BigInt::from(f(i, j)));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i * self.cols + j] = v.into();
    }

    /// Entry as `i64`; panics if it does not fit, which never happens for graph matrices.
    pub fn get_i64(&self, i: usize, j: usize) -> i64 {
        self.get(i, j).to_i64().expect("entry exceeds i64")
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: i64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        let (p, q) = (other.rows, other.cols);
        let mut out = Self::zeros(self.rows * p, self.cols * q);
        for i in 0..out.rows {
            for j in 0..out.cols {
                let a = self.get(i / p, j / q);
                if !a.is_zero() {
                    out.data[i * out.cols + j] = a * other.get(i % p, j % q);
                }
            }
        }
        out
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].iter().sum())
            .collect()
    }

    /// Constant row sum, if every row sums to the same value.
    pub fn constant_row_sum(&self) -> Option<BigInt> {
        let sums = self.row_sums();
        let first = sums.first()?.clone();
        sums.iter().all(|s| *s == first).then_some(first)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Copy with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.data.clone();
        let mut sign = 1;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let lead = a[i * n + k].clone();
                for j in k + 1..n {
                    let num = &pivot * &a[i * n + j] - &lead * &a[k * n + j];
                    // Sylvester's identity guarantees exactness.
                    a[i * n + j] = num / &prev;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let det = a[n * n - 1].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Exact coefficients of `det(xI - M)`, lowest degree first (monic, length n+1).
    pub fn char_poly(&self) -> Result<Vec<BigInt>> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        Ok(super::modular::char_poly_multimodular(self))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Evaluates an integer polynomial (lowest degree first) at an integer point.
pub(crate) fn eval_int_poly(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Divides by `(x - root)` if it is a factor; returns the quotient.
pub(crate) fn deflate_int_root(coeffs: &[BigInt], root: &BigInt) -> Option<Vec<BigInt>> {
    if coeffs.len() < 2 || !eval_int_poly(coeffs, root).is_zero() {
        return None;
    }
    let d = coeffs.len() - 1;
    let mut q = vec![BigInt::zero(); d];
    let mut carry = BigInt::zero();
    for i in (0..d).rev() {
        carry = &coeffs[i + 1] + carry * root;
        q[i] = carry.clone();
    }
    Some(q)
}

/// Multiplicity of `root` as a root of the integer polynomial.
pub(crate) fn int_root_multiplicity(coeffs: &[BigInt], root: &BigInt) -> usize {
    let mut p = coeffs.to_vec();
    let mut k = 0;
    while let Some(q) = deflate_int_root(&p, root) {
        p = q;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_determinant_is_one() {
        assert_eq!(IntMatrix::identity(5).determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn zero_row_gives_zero_determinant() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![0, 0, 0], vec![4, 5, 7]]).unwrap();
        assert!(m.determinant().unwrap().is_zero());
    }

    #[test]
    fn bareiss_matches_hand_expansion() {
        // det by cofactor expansion: 2(3*4-1*0) - 1(1*4-1*2) + 0 = 24 - 2 = 22
        let m = IntMatrix::from_rows(&[vec![2, 1, 0], vec![1, 3, 1], vec![2, 0, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(22));
        // pivot at (0,0) is zero
        let p = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(p.determinant().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn char_poly_of_k2_and_c4() {
        let k2 = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(k2.char_poly().unwrap(), ints(&[-1, 0, 1]));
        let c4 = IntMatrix::from_rows(&[
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
        ])
        .unwrap();
        assert_eq!(c4.char_poly().unwrap(), ints(&[0, 0, -4, 0, 1]));
    }

    #[test]
    fn char_poly_of_non_symmetric_matrix() {
        // [[1,2],[3,4]]: x^2 - 5x - 2
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.char_poly().unwrap(), ints(&[-2, -5, 1]));
    }

    #[test]
    fn root_multiplicity_by_deflation() {
        // x^2 (x - 2)^3
        let p = ints(&[0, 0, -8, 12, -6, 1]);
        assert_eq!(int_root_multiplicity(&p, &BigInt::from(0)), 2);
        assert_eq!(int_root_multiplicity(&p, &BigInt::from(2)), 3);
        assert_eq!(int_root_multiplicity(&p, &BigInt::from(1)), 0);
    }
}
