//! Spanning-tree counts, algebraic connectivity, the expander iteration
//! `G ↦ G ⊡ (r/2 - 1)K1`, and exhaustive isoperimetric numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::closed_form::{ClosedFormError, RegularGraphView};
use crate::corona::{corona, svnc, CoronaError, CoronaOp};
use crate::graph::Graph;
use crate::linalg::{sym_eigenvalues, IntMatrix, LinalgError, DEFAULT_JACOBI_TOL};

/// Largest graph accepted by [`isoperimetric_bruteforce`].
pub const MAX_ISOPERIMETRIC_N: usize = 14;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InvariantError {
    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph has odd degree {0}")]
    OddDegree(usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph needs at least {min} vertices, has {n}")]
    TooSmall { n: usize, min: usize },

    #[error("graph on {n} vertices exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("argument out of domain: {0}")]
    OutOfDomain(String),

    #[error("complete graph has no non-adjacent pair")]
    NoNonAdjacentPair,

    #[error("tree-count formula produced the non-integer {0}")]
    NonIntegerResult(String),

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl From<ClosedFormError> for InvariantError {
    fn from(e: ClosedFormError) -> Self {
        match e {
            ClosedFormError::NotRegular => InvariantError::NotRegular,
            ClosedFormError::EmptyG1 => InvariantError::NoEdges,
            ClosedFormError::Linalg(l) => InvariantError::Linalg(l),
            other => InvariantError::OutOfDomain(other.to_string()),
        }
    }
}

impl From<CoronaError> for InvariantError {
    fn from(_: CoronaError) -> Self {
        InvariantError::NoEdges
    }
}

pub type Result<T> = std::result::Result<T, InvariantError>;

/// Number of spanning trees, by the Matrix-Tree theorem (0 when disconnected).
pub fn tree_count_direct(g: &Graph) -> BigInt {
    if g.n() == 0 || !g.is_connected() {
        return BigInt::zero();
    }
    g.laplacian()
        .minor(0, 0)
        .determinant()
        .expect("reduced Laplacian is square")
}

fn shifted_laplacian_det(g2: &Graph, shift: i64) -> BigInt {
    let l = g2.laplacian();
    let s = IntMatrix::identity(g2.n()).scale(shift);
    l.add(&s)
        .expect("same order")
        .determinant()
        .expect("square")
}

fn pow_rational(base: i64, exp: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(base));
    if exp >= 0 {
        num_traits::pow(b, exp as usize)
    } else {
        num_traits::pow(b.recip(), (-exp) as usize)
    }
}

fn integral(r: BigRational) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(InvariantError::NonIntegerResult(r.to_string()))
    }
}

fn connected_view(g1: &RegularGraphView) -> Result<()> {
    if g1.graph().is_connected() {
        Ok(())
    } else {
        Err(InvariantError::NotConnected)
    }
}

/// Spanning trees of `G1 ⊡ G2` from the closed form, in exact arithmetic.
///
/// The eigenvalue products are rewritten as `∏(r1 + μ_i(G2)) = det(r1 I + L(G2))`
/// and `∏_{i≥2} μ_i(G1) = n1 · t(G1)`.
pub fn svnc_tree_count(g1: &RegularGraphView, g2: &Graph) -> Result<BigInt> {
    connected_view(g1)?;
    let (n1, m1, n2, r1) = (g1.n() as i64, g1.m() as i64, g2.n() as i64, g1.r() as i64);
    let mut v = BigRational::from_integer(BigInt::from(2 + 2 * n2 + r1));
    v *= pow_rational(2 + 2 * n2, m1 - n1);
    v *= BigRational::from_integer(num_traits::pow(shifted_laplacian_det(g2, r1), n1 as usize));
    v *= pow_rational(1 + n2, n1 - 1);
    v *= BigRational::from_integer(BigInt::from(n1) * tree_count_direct(g1.graph()));
    v /= BigRational::from_integer(BigInt::from(n1 + m1 + n1 * n2));
    integral(v)
}

/// Spanning trees of `G1 ⊟ G2` from the closed form, in exact arithmetic.
pub fn senc_tree_count(g1: &RegularGraphView, g2: &Graph) -> Result<BigInt> {
    connected_view(g1)?;
    let (n1, m1, n2, r1) = (g1.n() as i64, g1.m() as i64, g2.n() as i64, g1.r() as i64);
    let mut v = pow_rational(2, m1 - n1);
    v *= BigRational::from_integer(BigInt::from(2 + r1 + r1 * n2));
    v *= BigRational::from_integer(num_traits::pow(shifted_laplacian_det(g2, 2), m1 as usize));
    v *= pow_rational(1 + n2, n1 - 1);
    v *= BigRational::from_integer(BigInt::from(n1) * tree_count_direct(g1.graph()));
    v /= BigRational::from_integer(BigInt::from(n1 + m1 + m1 * n2));
    integral(v)
}

pub fn tree_count(op: CoronaOp, g1: &RegularGraphView, g2: &Graph) -> Result<BigInt> {
    match op {
        CoronaOp::Svnc => svnc_tree_count(g1, g2),
        CoronaOp::Senc => senc_tree_count(g1, g2),
    }
}

/// Matrix-Tree count of the constructed corona.
pub fn corona_tree_count_direct(op: CoronaOp, g1: &Graph, g2: &Graph) -> Result<BigInt> {
    Ok(tree_count_direct(&corona(op, g1, g2)?.graph))
}

/// Laplacian eigenvalues, ascending.
pub fn laplacian_eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    Ok(sym_eigenvalues(
        &g.laplacian().to_dense(),
        DEFAULT_JACOBI_TOL,
    )?)
}

/// Second-smallest Laplacian eigenvalue.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(InvariantError::TooSmall { n: g.n(), min: 2 });
    }
    Ok(laplacian_eigenvalues(g)?[1])
}

/// `r - √(r² - r·a/2)`: algebraic connectivity of `G ⊡ (r/2 - 1)K1` for an
/// `r`-regular `G` with algebraic connectivity `a`.
pub fn svnc_alg_conn_formula(r: usize, a: f64) -> Result<f64> {
    if r < 2 || !r.is_multiple_of(2) {
        return Err(InvariantError::OutOfDomain(format!(
            "r = {r} must be even and ≥ 2"
        )));
    }
    let r = r as f64;
    if !(0.0..=2.0 * r).contains(&a) {
        return Err(InvariantError::OutOfDomain(format!(
            "a = {a} outside [0, {}]",
            2.0 * r
        )));
    }
    Ok(r - (r * r - r * a / 2.0).sqrt())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpanderLevel {
    pub j: usize,
    pub n: usize,
    pub m: usize,
    /// Common degree, `None` if the level is not regular.
    pub degree: Option<usize>,
    pub a_numeric: f64,
    pub f_j: f64,
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpanderFamilyReport {
    pub r: usize,
    pub n0: usize,
    /// `a(G)` of the starting graph.
    pub epsilon: f64,
    pub levels: Vec<ExpanderLevel>,
    pub warnings: Vec<String>,
}

impl ExpanderFamilyReport {
    pub fn all_regular(&self) -> bool {
        self.levels.iter().all(|l| l.degree == Some(self.r))
    }

    pub fn sizes_increasing(&self) -> bool {
        let mut prev = self.n0;
        self.levels.iter().all(|l| {
            let ok = l.n > prev;
            prev = l.n;
            ok
        })
    }

    /// `f^j(ε)` strictly decreasing in `j`, starting from `f^0 = ε`.
    pub fn f_decreasing(&self) -> bool {
        let mut prev = self.epsilon;
        self.levels.iter().all(|l| {
            let ok = l.f_j < prev;
            prev = l.f_j;
            ok
        })
    }

    pub fn max_gap(&self) -> f64 {
        self.levels.iter().map(|l| l.gap).fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.all_regular()
            && self.sizes_increasing()
            && self.f_decreasing()
            && self.max_gap() <= tol
    }
}

/// Iterates `G ↦ G ⊡ (r/2 - 1)K1` `j` times, comparing the algebraic connectivity
/// of every level with `f^j(a(G))`, `f(x) = r - √(r² - r·x/2)`.
///
/// Complete inputs and `r = 2` run with a warning.
pub fn expander_iterate(g: &Graph, j: usize) -> Result<ExpanderFamilyReport> {
    let r = g.is_regular().ok_or(InvariantError::NotRegular)?;
    if g.m() == 0 {
        return Err(InvariantError::NoEdges);
    }
    if r % 2 != 0 {
        return Err(InvariantError::OddDegree(r));
    }
    if j == 0 {
        return Err(InvariantError::OutOfDomain(
            "iteration count must be ≥ 1".into(),
        ));
    }
    let mut warnings = Vec::new();
    if g.is_complete() {
        warnings.push("input is complete; the family is built anyway".to_string());
    }
    if r == 2 {
        warnings.push("r = 2: the iteration is repeated subdivision".to_string());
    }
    if !g.is_connected() {
        warnings.push("input is disconnected, so every level has a = 0".to_string());
    }
    let h = Graph::empty(r / 2 - 1);
    let epsilon = algebraic_connectivity(g)?;
    let mut f = epsilon;
    let mut cur = g.clone();
    let mut levels = Vec::with_capacity(j);
    for step in 1..=j {
        cur = svnc(&cur, &h)?.graph;
        f = svnc_alg_conn_formula(r, f.clamp(0.0, 2.0 * r as f64))?;
        let a = algebraic_connectivity(&cur)?;
        levels.push(ExpanderLevel {
            j: step,
            n: cur.n(),
            m: cur.m(),
            degree: cur.is_regular(),
            a_numeric: a,
            f_j: f,
            gap: (a - f).abs(),
        });
    }
    Ok(ExpanderFamilyReport {
        r,
        n0: g.n(),
        epsilon,
        levels,
        warnings,
    })
}

/// `min |∂S| / |S|` over vertex sets `1 ≤ |S| ≤ n/2`, by enumeration.
pub fn isoperimetric_bruteforce(g: &Graph) -> Result<BigRational> {
    let n = g.n();
    if n > MAX_ISOPERIMETRIC_N {
        return Err(InvariantError::TooLarge {
            n,
            max: MAX_ISOPERIMETRIC_N,
        });
    }
    if n < 2 {
        return Err(InvariantError::TooSmall { n, min: 2 });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut best: (u64, u64) = (u64::MAX, 1);
    for s in 1u32..(1 << n) {
        let size = s.count_ones() as u64;
        if size as usize > n / 2 {
            continue;
        }
        let boundary: u64 = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .map(|v| (nbr[v] & !s).count_ones() as u64)
            .sum();
        if boundary * best.1 < best.0 * size {
            best = (boundary, size);
        }
    }
    Ok(BigRational::new(BigInt::from(best.0), BigInt::from(best.1)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SandwichCheck {
    pub a: f64,
    pub i: BigRational,
    pub lower: f64,
    pub upper: f64,
    pub holds: bool,
}

/// Checks `a/2 ≤ i(G) ≤ √(a(2Δ - a))`, with `slack` absorbing eigensolver error.
pub fn sandwich_check(g: &Graph, slack: f64) -> Result<SandwichCheck> {
    let i = isoperimetric_bruteforce(g)?;
    let a = algebraic_connectivity(g)?;
    let iv = i.to_f64().unwrap_or(f64::NAN);
    let delta = g.max_degree() as f64;
    let lower = a / 2.0;
    let upper = (a * (2.0 * delta - a)).max(0.0).sqrt();
    Ok(SandwichCheck {
        holds: lower <= iv + slack && iv <= upper + slack,
        a,
        i,
        lower,
        upper,
    })
}

/// Whether `a(G) ≤ (d_u + d_v)/2` for every non-adjacent pair `u, v`.
pub fn degree_sum_bound_check(g: &Graph) -> Result<bool> {
    let d = g.degrees();
    let pairs: Vec<(usize, usize)> = (0..g.n())
        .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    if pairs.is_empty() {
        return Err(InvariantError::NoNonAdjacentPair);
    }
    let a = algebraic_connectivity(g)?;
    let bound = pairs
        .iter()
        .map(|&(u, v)| (d[u] + d[v]) as f64 / 2.0)
        .fold(f64::INFINITY, f64::min);
    Ok(a <= bound + 1e-9 * bound.abs().max(1.0))
}
