//! Numeric and exact linear algebra used by the closed forms and their oracles.
//!
//! Floating-point work (Jacobi eigenvalues, LU determinants, coronal solves) lives
//! next to exact integer work (Bareiss determinants, characteristic polynomials)
//! so every numeric claim in the crate has an exact counterpart to check against.

mod coronal;
mod dense;
mod factor;
mod int;
mod jacobi;
mod modular;
mod poly;
mod schur;
mod spectrum;

pub use coronal::{
    coronal_complete_bipartite, coronal_exact, coronal_generic, coronal_row_regular,
};
pub use dense::DenseMatrix;
pub use factor::{
    CharPolyFactorization, CharPolyPower, CoronalFactor, LinearFactor, PolyFactor, Root,
};
pub use int::IntMatrix;
pub use jacobi::{sym_eigenvalues, DEFAULT_JACOBI_TOL};
pub use poly::{exact_real_roots, real_roots_low_degree, ExactRoot, Polynomial};
pub use schur::{block_matrix, schur_det, SchurDeterminants};
pub use spectrum::{
    cluster_to_spectrum, exact_eigenvalues, Eigenvalue, Spectrum, SpectrumEntry,
    DEFAULT_CLUSTER_TOL,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("matrix is not square: {0} x {1}")]
    NotSquare(usize, usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric (entry ({0}, {1}))")]
    NotSymmetric(usize, usize),

    #[error("matrix has a non-finite entry")]
    NonFinite,

    #[error("matrix is singular to working precision")]
    Singular,

    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("polynomial of degree {0} is outside the closed-form solver's range")]
    DegreeTooHigh(usize),

    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,

    #[error("complex root detected: {re} ± {im}i")]
    ComplexRootDetected { re: f64, im: f64 },

    #[error("x = {0} is a pole (or numerically too close to one) of the coronal")]
    PoleOrNearPole(f64),
}

pub type Result<T> = std::result::Result<T, LinalgError>;
