//! Characteristic polynomials of `G1 ⊡ G2` and `G1 ⊟ G2` for regular `G1`,
//! assembled from the spectra of the operands without building the corona.
//!
//! Every factorization is a product of
//!
//! * linear factors `(x - ρ)^k` coming from `G1`'s edge excess `m1 - n1` and from
//!   the spectrum of `G2`;
//! * one low-degree factor per eigenvalue of `G1`, obtained by clearing the
//!   denominator of the coronal of `G2`.
//!
//! For `A` and `Q` the per-eigenvalue factor needs a closed form for the coronal
//! of `G2`; that exists when `G2` is regular (and for `A` also when `G2` is
//! complete bipartite). Otherwise the factorization is returned in coronal form,
//! which supports point evaluation only.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::corona::{corona, CoronaError, CoronaOp};
use crate::graph::{Graph, MatrixKind};
use crate::linalg::{
    cluster_to_spectrum, exact_eigenvalues, exact_real_roots, real_roots_low_degree,
    sym_eigenvalues, CharPolyFactorization, CharPolyPower, CoronalFactor, DenseMatrix, Eigenvalue,
    LinalgError, Root, Spectrum, DEFAULT_CLUSTER_TOL, DEFAULT_JACOBI_TOL,
};

/// Roots closer than this are taken to be the same root when a negative
/// multiplicity is cancelled.
pub const CANCELLATION_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClosedFormError {
    #[error("the first operand is not regular")]
    NotRegular,

    #[error("the first operand has no edges")]
    EmptyG1,

    #[error("no closed form for this second operand: {0}")]
    NotAssemblable(String),

    #[error("cannot cancel (x - {root})^{missing}: no matching root among the other factors")]
    CancellationFailure { root: f64, missing: i64 },

    #[error("factorization has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl From<CoronaError> for ClosedFormError {
    fn from(e: CoronaError) -> Self {
        match e {
            CoronaError::EmptyG1 => ClosedFormError::EmptyG1,
        }
    }
}

pub type Result<T> = std::result::Result<T, ClosedFormError>;

/// How to build the per-eigenvalue factors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FormMode {
    /// Explicit polynomials whenever `G2` allows it.
    #[default]
    Auto,
    /// Always the coronal form, even when an explicit form exists.
    Coronal,
}

/// A regular graph together with its adjacency spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularGraphView {
    graph: Graph,
    r: usize,
    /// Distinct adjacency eigenvalues, descending.
    eigenvalues: Vec<Eigenvalue>,
}

impl RegularGraphView {
    pub fn new(graph: &Graph) -> Result<Self> {
        let r = graph.is_regular().ok_or(ClosedFormError::NotRegular)?;
        if graph.m() == 0 {
            return Err(ClosedFormError::EmptyG1);
        }
        let mut eigenvalues = exact_eigenvalues(&graph.adjacency())?;
        eigenvalues.reverse();
        Ok(Self {
            graph: graph.clone(),
            r,
            eigenvalues,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Distinct `λ_i`, descending.
    pub fn adjacency_eigenvalues(&self) -> &[Eigenvalue] {
        &self.eigenvalues
    }

    pub fn spectrum(&self, kind: MatrixKind) -> Spectrum {
        let r = self.r as f64;
        let vals: Vec<f64> = self
            .eigenvalues
            .iter()
            .flat_map(|e| {
                let v = match kind {
                    MatrixKind::A => e.value,
                    MatrixKind::L => r - e.value,
                    MatrixKind::Q => r + e.value,
                };
                std::iter::repeat_n(v, e.multiplicity)
            })
            .collect();
        let mut vals = vals;
        vals.sort_by(f64::total_cmp);
        cluster_to_spectrum(&vals, DEFAULT_CLUSTER_TOL)
    }
}

/// A real number that is an integer when `exact` is set.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Val {
    value: f64,
    exact: Option<i64>,
}

impl Val {
    fn of(e: &Eigenvalue) -> Self {
        Val {
            value: e.value,
            exact: e.exact,
        }
    }

    fn shift(self, k: i64) -> Self {
        Val {
            value: self.value + k as f64,
            exact: self.exact.map(|e| e + k),
        }
    }

    /// `k - self`
    fn subtracted_from(self, k: i64) -> Self {
        Val {
            value: k as f64 - self.value,
            exact: self.exact.map(|e| k - e),
        }
    }

    fn root(self) -> Root {
        Root::from_parts(self.value, self.exact)
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "{:.6}", self.value),
        }
    }
}

/// Pushes the polynomial with coefficients `u + c·v` (lowest degree first).
fn push_affine(
    fact: &mut CharPolyFactorization,
    u: &[i64],
    v: &[i64],
    c: Val,
    repeat: usize,
    tag: String,
) {
    let coeffs = u
        .iter()
        .zip(v)
        .map(|(&a, &b)| a as f64 + b as f64 * c.value)
        .collect();
    let exact = c.exact.map(|k| {
        u.iter()
            .zip(v)
            .map(|(&a, &b)| BigInt::from(a) + BigInt::from(b) * BigInt::from(k))
            .collect()
    });
    fact.push_poly(coeffs, exact, repeat, tag);
}

/// `(x-α)(x-β)(x-γ) - ((1+n2)x - γ - n2·s)·c`: the cleared per-eigenvalue factor
/// when the coronal of `G2` is `n2/(y - (γ - s))` evaluated at `y = x - s`.
fn push_regular_cubic(
    fact: &mut CharPolyFactorization,
    (alpha, beta, gamma, s): (i64, i64, i64, i64),
    n2: i64,
    c: Val,
    repeat: usize,
    tag: String,
) {
    let u = [
        -alpha * beta * gamma,
        alpha * beta + alpha * gamma + beta * gamma,
        -(alpha + beta + gamma),
        1,
    ];
    let v = [gamma + n2 * s, -(1 + n2), 0, 0];
    push_affine(fact, &u, &v, c, repeat, tag);
}

/// `(x-α)(x-β) - c`: the per-eigenvalue factor when `G2` has no vertices.
fn push_bare_quadratic(
    fact: &mut CharPolyFactorization,
    (alpha, beta): (i64, i64),
    c: Val,
    repeat: usize,
    tag: String,
) {
    push_affine(
        fact,
        &[alpha * beta, -(alpha + beta), 1],
        &[-1, 0, 0],
        c,
        repeat,
        tag,
    );
}

/// Eigenvalues of `M` with one copy of `drop` removed.
fn without_one(mut eigs: Vec<Eigenvalue>, drop: i64) -> Vec<Eigenvalue> {
    let pos = eigs
        .iter()
        .position(|e| e.exact == Some(drop))
        .or_else(|| {
            eigs.iter()
                .position(|e| (e.value - drop as f64).abs() < CANCELLATION_TOL)
        })
        .expect("a regular graph has its degree as an eigenvalue");
    eigs[pos].multiplicity -= 1;
    if eigs[pos].multiplicity == 0 {
        eigs.remove(pos);
    }
    eigs
}

/// Shape of `G2` as far as the `A` and `Q` closed forms are concerned.
enum Shape {
    NoVertices,
    Regular(usize),
    CompleteBipartite(usize, usize),
    General,
}

fn shape(g2: &Graph) -> Shape {
    if g2.n() == 0 {
        Shape::NoVertices
    } else if let Some(r2) = g2.is_regular() {
        Shape::Regular(r2)
    } else if let Some((p, q)) = g2.complete_bipartite_parts() {
        Shape::CompleteBipartite(p, q)
    } else {
        Shape::General
    }
}

/// Characteristic polynomial of `A(G1 ⊡ G2)` or `A(G1 ⊟ G2)`.
pub fn adjacency_factorization(
    op: CoronaOp,
    g1: &RegularGraphView,
    g2: &Graph,
    mode: FormMode,
) -> Result<CharPolyFactorization> {
    let (n1, m1, n2) = (g1.n() as i64, g1.m() as i64, g2.n() as i64);
    let r1 = g1.r() as i64;
    let copies = match op {
        CoronaOp::Svnc => n1,
        CoronaOp::Senc => m1,
    };
    let mut f = CharPolyFactorization::new((n1 + m1 + copies * n2) as usize);
    f.push_linear(Root::integer(0), m1 - n1, "0 (edge excess)");
    let per_eigen =
        |f: &mut CharPolyFactorization,
         push: &dyn Fn(&mut CharPolyFactorization, Val, usize, String)| {
            for e in g1.adjacency_eigenvalues() {
                let lam = Val::of(e);
                push(f, lam.shift(r1), e.multiplicity, format!("λ(G1)={lam}"));
            }
        };
    match (mode, shape(g2)) {
        (FormMode::Auto, Shape::NoVertices) => {
            per_eigen(&mut f, &|f, c, k, tag| {
                push_bare_quadratic(f, (0, 0), c, k, format!("quadratic, {tag}"))
            });
        }
        (FormMode::Auto, Shape::Regular(r2)) => {
            let r2 = r2 as i64;
            let eigs = exact_eigenvalues(&g2.adjacency())?;
            if op == CoronaOp::Senc {
                f.push_linear(Root::integer(r2), m1 - n1, "r2 (edge excess)");
            }
            for e in without_one(eigs, r2) {
                let lam = Val::of(&e);
                f.push_linear(
                    lam.root(),
                    copies * e.multiplicity as i64,
                    format!("λ(G2)={lam}"),
                );
            }
            per_eigen(&mut f, &|f, c, k, tag| {
                push_regular_cubic(f, (0, 0, r2, 0), n2, c, k, format!("cubic, {tag}"))
            });
        }
        (FormMode::Auto, Shape::CompleteBipartite(p, q)) => {
            let (p, q) = (p as i64, q as i64);
            let pq = p * q;
            f.push_linear(Root::integer(0), (p + q - 2) * copies, "0 (from K_{p,q})");
            if op == CoronaOp::Senc {
                let s = (pq as f64).sqrt();
                let sr = s.round() as i64;
                let (pos, neg) = if sr * sr == pq {
                    (Root::integer(sr), Root::integer(-sr))
                } else {
                    (Root::Real(s), Root::Real(-s))
                };
                f.push_linear(pos, m1 - n1, "√pq (edge excess)");
                f.push_linear(neg, m1 - n1, "-√pq (edge excess)");
            }
            per_eigen(&mut f, &|f, c, k, tag| {
                let u = [0, 0, -pq, 0, 1];
                let v = [pq, -2 * pq, -(1 + p + q), 0, 0];
                push_affine(f, &u, &v, c, k, format!("quartic, {tag}"))
            });
        }
        (_, _) => {
            let a2 = g2.adjacency();
            f.charpoly_powers.push(CharPolyPower {
                matrix: a2.clone(),
                shift: 0.0,
                power: copies as usize,
                tag: "φ(A(G2))".into(),
            });
            for e in g1.adjacency_eigenvalues() {
                f.coronals.push(CoronalFactor {
                    matrix: a2.clone(),
                    alpha: 0.0,
                    beta: 0.0,
                    shift: 0.0,
                    weight: e.value + r1 as f64,
                    repeat: e.multiplicity,
                    tag: format!("coronal, λ(G1)={}", Val::of(e)),
                });
            }
        }
    }
    Ok(f)
}

/// Characteristic polynomial of `L(G1 ⊡ G2)` or `L(G1 ⊟ G2)`; explicit for every `G2`.
pub fn laplacian_factorization(
    op: CoronaOp,
    g1: &RegularGraphView,
    g2: &Graph,
) -> Result<CharPolyFactorization> {
    let (n1, m1, n2) = (g1.n() as i64, g1.m() as i64, g2.n() as i64);
    let r1 = g1.r() as i64;
    let (copies, top, excess_root, shift) = match op {
        CoronaOp::Svnc => (n1, 2 + 2 * n2 + r1, 2 + 2 * n2, r1),
        CoronaOp::Senc => (m1, 2 + r1 + r1 * n2, 2, 2),
    };
    let mut f = CharPolyFactorization::new((n1 + m1 + copies * n2) as usize);
    f.push_linear(Root::integer(0), 1, "0");
    f.push_linear(Root::integer(top), 1, format!("{top}"));
    f.push_linear(
        Root::integer(excess_root),
        m1 - n1,
        format!("{excess_root} (edge excess)"),
    );
    for e in exact_eigenvalues(&g2.laplacian())? {
        let mu = Val::of(&e);
        f.push_linear(
            mu.shift(shift).root(),
            copies * e.multiplicity as i64,
            format!("{shift}+μ(G2), μ={mu}"),
        );
    }
    // μ_1(G1) = 0 is covered by the two linear factors above
    let mut skipped_zero = false;
    for e in g1.adjacency_eigenvalues() {
        let mu = Val::of(e).subtracted_from(r1);
        let mut k = e.multiplicity;
        if !skipped_zero && e.exact == Some(r1) {
            skipped_zero = true;
            k -= 1;
        }
        let u = [0, -top, 1];
        let v = [1 + n2, 0, 0];
        push_affine(&mut f, &u, &v, mu, k, format!("quadratic, μ(G1)={mu}"));
    }
    Ok(f)
}

/// Characteristic polynomial of `Q(G1 ⊡ G2)` or `Q(G1 ⊟ G2)`.
pub fn signless_factorization(
    op: CoronaOp,
    g1: &RegularGraphView,
    g2: &Graph,
    mode: FormMode,
) -> Result<CharPolyFactorization> {
    let (n1, m1, n2) = (g1.n() as i64, g1.m() as i64, g2.n() as i64);
    let r1 = g1.r() as i64;
    // per-eigenvalue factor (x-α)(x-β) - (1 + (x-s)Γ_Q(G2)(x-s))·ν
    let (copies, alpha, beta, s) = match op {
        CoronaOp::Svnc => (n1, 2 + 2 * n2, r1, r1),
        CoronaOp::Senc => (m1, r1 + r1 * n2, 2, 2),
    };
    let mut f = CharPolyFactorization::new((n1 + m1 + copies * n2) as usize);
    let excess_root = match op {
        CoronaOp::Svnc => 2 + 2 * n2,
        CoronaOp::Senc => 2,
    };
    f.push_linear(
        Root::integer(excess_root),
        m1 - n1,
        format!("{excess_root} (edge excess)"),
    );
    let nus = || {
        g1.adjacency_eigenvalues()
            .iter()
            .map(|e| (Val::of(e).shift(r1), e.multiplicity))
    };
    match (mode, shape(g2)) {
        (FormMode::Auto, Shape::NoVertices) => {
            for (nu, k) in nus() {
                push_bare_quadratic(
                    &mut f,
                    (alpha, beta),
                    nu,
                    k,
                    format!("quadratic, ν(G1)={nu}"),
                );
            }
        }
        (FormMode::Auto, Shape::Regular(r2)) => {
            let r2 = r2 as i64;
            let eigs = exact_eigenvalues(&g2.adjacency())?;
            if op == CoronaOp::Senc {
                f.push_linear(
                    Root::integer(2 + 2 * r2),
                    m1 - n1,
                    format!("{} (edge excess)", 2 + 2 * r2),
                );
            }
            for e in without_one(eigs, r2) {
                let nu2 = Val::of(&e).shift(r2);
                f.push_linear(
                    nu2.shift(s).root(),
                    copies * e.multiplicity as i64,
                    format!("{s}+ν(G2), ν={nu2}"),
                );
            }
            for (nu, k) in nus() {
                push_regular_cubic(
                    &mut f,
                    (alpha, beta, s + 2 * r2, s),
                    n2,
                    nu,
                    k,
                    format!("cubic, ν(G1)={nu}"),
                );
            }
        }
        (_, _) => {
            let q2 = g2.signless_laplacian();
            f.charpoly_powers.push(CharPolyPower {
                matrix: q2.clone(),
                shift: s as f64,
                power: copies as usize,
                tag: "φ(Q(G2); x-s)".into(),
            });
            for (nu, k) in nus() {
                f.coronals.push(CoronalFactor {
                    matrix: q2.clone(),
                    alpha: alpha as f64,
                    beta: beta as f64,
                    shift: s as f64,
                    weight: nu.value,
                    repeat: k,
                    tag: format!("coronal, ν(G1)={nu}"),
                });
            }
        }
    }
    Ok(f)
}

pub fn factorization(
    op: CoronaOp,
    kind: MatrixKind,
    g1: &RegularGraphView,
    g2: &Graph,
    mode: FormMode,
) -> Result<CharPolyFactorization> {
    match kind {
        MatrixKind::A => adjacency_factorization(op, g1, g2, mode),
        MatrixKind::L => laplacian_factorization(op, g1, g2),
        MatrixKind::Q => signless_factorization(op, g1, g2, mode),
    }
}

pub fn svnc_a(g1: &RegularGraphView, g2: &Graph) -> Result<CharPolyFactorization> {
    adjacency_factorization(CoronaOp::Svnc, g1, g2, FormMode::Auto)
}

pub fn svnc_l(g1: &RegularGraphView, g2: &Graph) -> Result<CharPolyFactorization> {
    laplacian_factorization(CoronaOp::Svnc, g1, g2)
}

pub fn svnc_q(g1: &RegularGraphView, g2: &Graph) -> Result<CharPolyFactorization> {
    signless_factorization(CoronaOp::Svnc, g1, g2, FormMode::Auto)
}

pub fn senc_a(g1: &RegularGraphView, g2: &Graph) -> Result<CharPolyFactorization> {
    adjacency_factorization(CoronaOp::Senc, g1, g2, FormMode::Auto)
}

pub fn senc_l(g1: &RegularGraphView, g2: &Graph) -> Result<CharPolyFactorization> {
    laplacian_factorization(CoronaOp::Senc, g1, g2)
}

pub fn senc_q(g1: &RegularGraphView, g2: &Graph) -> Result<CharPolyFactorization> {
    signless_factorization(CoronaOp::Senc, g1, g2, FormMode::Auto)
}

/// Whether [`assemble_spectrum`] can succeed for this `kind` and `G2`.
pub fn is_assemblable(kind: MatrixKind, g2: &Graph) -> bool {
    matches!(
        (kind, shape(g2)),
        (MatrixKind::L, _)
            | (_, Shape::NoVertices | Shape::Regular(_))
            | (MatrixKind::A, Shape::CompleteBipartite(..))
    )
}

struct TaggedRoot {
    value: f64,
    exact: Option<BigInt>,
    tag: String,
}

/// Roots of an explicit factorization, with negative multiplicities cancelled.
pub fn assemble_spectrum(fact: &CharPolyFactorization) -> Result<Spectrum> {
    if !fact.is_explicit() {
        return Err(ClosedFormError::NotAssemblable(
            "factorization is in coronal form".into(),
        ));
    }
    let mut roots: Vec<TaggedRoot> = Vec::new();
    for lf in fact.linear.iter().filter(|l| l.multiplicity > 0) {
        let exact = match &lf.root {
            Root::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        };
        for _ in 0..lf.multiplicity {
            roots.push(TaggedRoot {
                value: lf.root.value(),
                exact: exact.clone(),
                tag: lf.tag.clone(),
            });
        }
    }
    for pf in &fact.polys {
        let found: Vec<(f64, Option<BigInt>)> = match &pf.exact {
            Some(c) => exact_real_roots(c)?
                .into_iter()
                .map(|r| (r.value, r.exact))
                .collect(),
            None => real_roots_low_degree(&pf.poly)?
                .into_iter()
                .map(|v| (v, None))
                .collect(),
        };
        for _ in 0..pf.repeat {
            roots.extend(found.iter().map(|(v, e)| TaggedRoot {
                value: *v,
                exact: e.clone(),
                tag: pf.tag.clone(),
            }));
        }
    }
    for lf in fact.linear.iter().filter(|l| l.multiplicity < 0) {
        let target = lf.root.value();
        let exact = match &lf.root {
            Root::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        };
        for done in 0..-lf.multiplicity {
            let pos = exact
                .as_ref()
                .and_then(|k| roots.iter().position(|r| r.exact.as_ref() == Some(k)))
                .or_else(|| {
                    roots
                        .iter()
                        .enumerate()
                        .filter(|(_, r)| {
                            (r.value - target).abs() < CANCELLATION_TOL * target.abs().max(1.0)
                        })
                        .min_by(|a, b| {
                            (a.1.value - target)
                                .abs()
                                .total_cmp(&(b.1.value - target).abs())
                        })
                        .map(|(i, _)| i)
                });
            match pos {
                Some(i) => {
                    roots.swap_remove(i);
                }
                None => {
                    return Err(ClosedFormError::CancellationFailure {
                        root: target,
                        missing: -lf.multiplicity - done,
                    })
                }
            }
        }
    }
    if roots.len() != fact.order {
        return Err(ClosedFormError::DegreeMismatch {
            expected: fact.order,
            got: roots.len(),
        });
    }
    Ok(Spectrum::from_tagged(
        roots.into_iter().map(|r| (r.value, r.tag)).collect(),
        DEFAULT_CLUSTER_TOL,
    ))
}

/// Spectrum of the corona from its closed form.
pub fn closed_spectrum(op: CoronaOp, kind: MatrixKind, g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    let view = RegularGraphView::new(g1)?;
    if !is_assemblable(kind, g2) {
        return Err(ClosedFormError::NotAssemblable(format!(
            "{kind}-spectrum needs a regular{} second operand",
            if kind == MatrixKind::A {
                " or complete bipartite"
            } else {
                ""
            }
        )));
    }
    assemble_spectrum(&factorization(op, kind, &view, g2, FormMode::Auto)?)
}

/// Spectrum of the constructed corona by Jacobi eigendecomposition.
pub fn direct_spectrum(op: CoronaOp, kind: MatrixKind, g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    let c = corona(op, g1, g2)?;
    let m = c.graph.matrix(kind).to_dense();
    let vals = sym_eigenvalues(&m, DEFAULT_JACOBI_TOL)?;
    Ok(cluster_to_spectrum(&vals, DEFAULT_CLUSTER_TOL))
}

/// Value of a factorization at `x`.
pub fn evaluate(fact: &CharPolyFactorization, x: f64) -> Result<f64> {
    Ok(fact.evaluate(x)?)
}

/// `det(xI - M)` for the constructed corona's matrix.
pub fn charpoly_eval_direct(
    op: CoronaOp,
    kind: MatrixKind,
    g1: &Graph,
    g2: &Graph,
    x: f64,
) -> Result<f64> {
    let c = corona(op, g1, g2)?;
    let m = c.graph.matrix(kind).to_dense();
    let n = m.rows();
    let shifted =
        DenseMatrix::from_fn(n, n, |i, j| if i == j { x - m[(i, j)] } else { -m[(i, j)] });
    Ok(shifted.determinant()?)
}
