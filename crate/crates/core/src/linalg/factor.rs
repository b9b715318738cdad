use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{coronal_generic, DenseMatrix, IntMatrix, Polynomial, Result};

/// Root of a linear factor.
#[derive(Clone, Debug, PartialEq)]
pub enum Root {
    Rational(BigRational),
    Real(f64),
}

impl Root {
    pub fn integer(k: i64) -> Self {
        Root::Rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// Exact when `exact` is given, otherwise the float.
    pub fn from_parts(value: f64, exact: Option<i64>) -> Self {
        exact.map_or(Root::Real(value), Root::integer)
    }

    pub fn value(&self) -> f64 {
        match self {
            Root::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Root::Real(v) => *v,
        }
    }
}

/// `(x - root)^multiplicity`; the multiplicity may be negative before normalisation.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFactor {
    pub root: Root,
    pub multiplicity: i64,
    pub tag: String,
}

/// A polynomial of degree ≤ 4 raised to `repeat`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyFactor {
    pub poly: Polynomial,
    /// Integer coefficients when every input to the factor was an integer.
    pub exact: Option<Vec<BigInt>>,
    pub repeat: usize,
    pub tag: String,
}

/// `det((x - shift) I - M)^power`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPolyPower {
    pub matrix: IntMatrix,
    pub shift: f64,
    pub power: usize,
    pub tag: String,
}

/// `[(x - alpha)(x - beta) - (1 + (x - shift) Γ_M(x - shift)) · weight]^repeat`,
/// the per-eigenvalue factor of a corona characteristic polynomial before the
/// coronal's denominator is cleared.
#[derive(Clone, Debug, PartialEq)]
pub struct CoronalFactor {
    pub matrix: IntMatrix,
    pub alpha: f64,
    pub beta: f64,
    pub shift: f64,
    pub weight: f64,
    pub repeat: usize,
    pub tag: String,
}

/// Symbolic product mirroring the right-hand side of a corona spectrum formula.
///
/// Explicit factorizations hold only linear and low-degree polynomial factors and
/// can be turned into a spectrum. Coronal-form factorizations (used when no closed
/// form of the coronal is available) carry characteristic-polynomial powers and
/// coronal factors, and only support point evaluation.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CharPolyFactorization {
    /// Order of the matrix whose characteristic polynomial this is.
    pub order: usize,
    pub linear: Vec<LinearFactor>,
    pub polys: Vec<PolyFactor>,
    pub charpoly_powers: Vec<CharPolyPower>,
    pub coronals: Vec<CoronalFactor>,
}

impl CharPolyFactorization {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            ..Self::default()
        }
    }

    pub fn push_linear(&mut self, root: Root, multiplicity: i64, tag: impl Into<String>) {
        if multiplicity != 0 {
            self.linear.push(LinearFactor {
                root,
                multiplicity,
                tag: tag.into(),
            });
        }
    }

    pub fn push_poly(
        &mut self,
        coeffs: Vec<f64>,
        exact: Option<Vec<BigInt>>,
        repeat: usize,
        tag: impl Into<String>,
    ) {
        if repeat > 0 {
            self.polys.push(PolyFactor {
                poly: Polynomial::new(coeffs),
                exact,
                repeat,
                tag: tag.into(),
            });
        }
    }

    pub fn is_explicit(&self) -> bool {
        self.charpoly_powers.is_empty() && self.coronals.is_empty()
    }

    pub fn has_negative_multiplicity(&self) -> bool {
        self.linear.iter().any(|f| f.multiplicity < 0)
    }

    /// Degree of the explicit part (linear and polynomial factors).
    pub fn explicit_degree(&self) -> i64 {
        let lin: i64 = self.linear.iter().map(|f| f.multiplicity).sum();
        let poly: i64 = self
            .polys
            .iter()
            .map(|f| (f.poly.degree() * f.repeat) as i64)
            .sum();
        lin + poly
    }

    /// Value of the product at `x`; coronal factors fail near their poles.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        let mut acc = 1.0;
        for f in &self.linear {
            acc *= (x - f.root.value()).powi(f.multiplicity as i32);
        }
        for f in &self.polys {
            acc *= f.poly.eval(x).powi(f.repeat as i32);
        }
        for f in &self.charpoly_powers {
            let n = f.matrix.rows();
            let m = f.matrix.to_dense();
            let y = x - f.shift;
            let shifted =
                DenseMatrix::from_fn(n, n, |i, j| if i == j { y - m[(i, j)] } else { -m[(i, j)] });
            acc *= shifted.determinant()?.powi(f.power as i32);
        }
        for f in &self.coronals {
            let y = x - f.shift;
            let gamma = coronal_generic(&f.matrix, y)?;
            let v = (x - f.alpha) * (x - f.beta) - (1.0 + y * gamma) * f.weight;
            acc *= v.powi(f.repeat as i32);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_mixed_factors() {
        let mut f = CharPolyFactorization::new(4);
        f.push_linear(Root::integer(1), 2, "a");
        f.push_poly(vec![-4.0, 0.0, 1.0], None, 1, "b");
        // (3-1)^2 (9-4) = 20
        assert!((f.evaluate(3.0).unwrap() - 20.0).abs() < 1e-12);
        assert_eq!(f.explicit_degree(), 4);
        assert!(f.is_explicit());
    }

    #[test]
    fn negative_multiplicity_divides() {
        let mut f = CharPolyFactorization::new(1);
        f.push_linear(Root::integer(0), -1, "x^-1");
        f.push_poly(vec![0.0, 0.0, 1.0], None, 1, "x^2");
        assert!(f.has_negative_multiplicity());
        assert!((f.evaluate(5.0).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn coronal_factor_uses_the_matrix() {
        // K2, alpha = beta = shift = 0, weight 2: x^2 - (1 + x·2/(x-1))·2 at x=3 → 9 - 8 = 1
        let k2 = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let mut f = CharPolyFactorization::new(0);
        f.coronals.push(CoronalFactor {
            matrix: k2,
            alpha: 0.0,
            beta: 0.0,
            shift: 0.0,
            weight: 2.0,
            repeat: 1,
            tag: String::new(),
        });
        assert!((f.evaluate(3.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(!f.is_explicit());
    }
}
