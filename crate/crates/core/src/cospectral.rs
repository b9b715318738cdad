//! Exact cospectrality certificates, coronal equality, cospectral corona pairs and
//! an exhaustive search for cospectral pairs on few vertices.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::corona::{corona, CoronaError, CoronaOp, CoronaResult};
use crate::graph::{Graph, MatrixKind};
use crate::linalg::{coronal_exact, IntMatrix, LinalgError};

/// Largest order accepted by [`bruteforce_search`].
pub const MAX_SEARCH_N: usize = 7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CospectralError {
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("certificate failed: {0}")]
    CertificateFailed(String),

    #[error("search bound {0} exceeds {max}", max = MAX_SEARCH_N)]
    TooLarge(usize),

    #[error(transparent)]
    Corona(#[from] CoronaError),

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T> = std::result::Result<T, CospectralError>;

/// Exact evaluations of both coronals at the same rational points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoronalWitness {
    pub kind: MatrixKind,
    #[serde(serialize_with = "ser_rationals")]
    pub points: Vec<BigRational>,
    #[serde(serialize_with = "ser_rationals")]
    pub first: Vec<BigRational>,
    #[serde(serialize_with = "ser_rationals")]
    pub second: Vec<BigRational>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CospectralCertificate {
    pub kind: MatrixKind,
    #[serde(skip)]
    pub first: Graph,
    #[serde(skip)]
    pub second: Graph,
    /// `det(xI - M)`, lowest degree first.
    #[serde(serialize_with = "ser_ints")]
    pub first_poly: Vec<BigInt>,
    #[serde(serialize_with = "ser_ints")]
    pub second_poly: Vec<BigInt>,
    pub verdict: bool,
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn ser_rationals<S: serde::Serializer>(
    v: &[BigRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn char_poly(g: &Graph, kind: MatrixKind) -> Vec<BigInt> {
    g.matrix(kind)
        .char_poly()
        .expect("graph matrices are square")
}

/// Compares the exact characteristic polynomials of the chosen matrix.
pub fn are_cospectral(g: &Graph, h: &Graph, kind: MatrixKind) -> CospectralCertificate {
    let first_poly = char_poly(g, kind);
    let second_poly = char_poly(h, kind);
    CospectralCertificate {
        kind,
        first: g.clone(),
        second: h.clone(),
        verdict: first_poly == second_poly,
        first_poly,
        second_poly,
    }
}

fn row_bound(m: &IntMatrix) -> BigInt {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).abs()).sum::<BigInt>())
        .max()
        .unwrap_or_default()
}

/// Compares `Γ_M(H1)` and `Γ_M(H2)` at `2n + 1` integer points beyond both
/// spectral radii.
///
/// Each coronal is `p(x)/φ(x)` with `deg p < n = deg φ`, so the difference
/// vanishes identically as soon as `p1 φ2 - p2 φ1` (degree `< 2n`) has `2n` roots.
/// Graphs of different orders are reported unequal.
pub fn coronal_equal(h1: &Graph, h2: &Graph, kind: MatrixKind) -> Result<CoronalWitness> {
    let (m1, m2) = (h1.matrix(kind), h2.matrix(kind));
    let n = h1.n();
    if n != h2.n() {
        return Ok(CoronalWitness {
            kind,
            points: vec![],
            first: vec![],
            second: vec![],
            equal: false,
        });
    }
    let start = row_bound(&m1).max(row_bound(&m2)) + 1;
    let points: Vec<BigRational> = (0..2 * n + 1)
        .map(|k| BigRational::from_integer(&start + BigInt::from(k)))
        .collect();
    let first = points
        .iter()
        .map(|x| coronal_exact(&m1, x))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let second = points
        .iter()
        .map(|x| coronal_exact(&m2, x))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(CoronalWitness {
        kind,
        equal: first == second,
        points,
        first,
        second,
    })
}

/// Which cospectrality construction to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairVariant {
    /// Cospectral regular `G1, G2` with a common `H`.
    A,
    /// A common regular `G` with cospectral `H1, H2` (equal coronals for `A`, `Q`).
    B,
    /// Both at once; stated for `L` only.
    C,
}

impl std::str::FromStr for PairVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "a" | "A" => Ok(PairVariant::A),
            "b" | "B" => Ok(PairVariant::B),
            "c" | "C" => Ok(PairVariant::C),
            _ => Err(format!("unknown variant '{s}' (expected a, b or c)")),
        }
    }
}

/// Operands of the two coronae `G1 ∘ H1` and `G2 ∘ H2`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairSeeds {
    pub g1: Graph,
    pub g2: Graph,
    pub h1: Graph,
    pub h2: Graph,
}

impl PairSeeds {
    /// Variant (a): `G1 ∘ H` and `G2 ∘ H`.
    pub fn with_common_h(g1: Graph, g2: Graph, h: Graph) -> Self {
        Self {
            g1,
            g2,
            h1: h.clone(),
            h2: h,
        }
    }

    /// Variant (b): `G ∘ H1` and `G ∘ H2`.
    pub fn with_common_g(g: Graph, h1: Graph, h2: Graph) -> Self {
        Self {
            g1: g.clone(),
            g2: g,
            h1,
            h2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoronaPair {
    pub first: CoronaResult,
    pub second: CoronaResult,
    pub certificate: CospectralCertificate,
    pub coronal_witness: Option<CoronalWitness>,
}

fn unmet(msg: impl Into<String>) -> CospectralError {
    CospectralError::PreconditionUnmet(msg.into())
}

/// Checks the hypotheses of `variant`, builds both coronae and certifies them.
pub fn corona_pair(
    variant: PairVariant,
    op: CoronaOp,
    kind: MatrixKind,
    seeds: &PairSeeds,
) -> Result<CoronaPair> {
    let PairSeeds { g1, g2, h1, h2 } = seeds;
    match variant {
        PairVariant::A if h1 != h2 => return Err(unmet("variant a uses one common H")),
        PairVariant::B if g1 != g2 => return Err(unmet("variant b uses one common G")),
        PairVariant::C if kind != MatrixKind::L => {
            return Err(unmet("variant c is stated for the Laplacian only"))
        }
        _ => {}
    }
    for (name, g) in [("G1", g1), ("G2", g2)] {
        if g.is_regular().is_none() {
            return Err(unmet(format!("{name} is not regular")));
        }
        if g.m() == 0 {
            return Err(unmet(format!("{name} has no edges")));
        }
    }
    if matches!(variant, PairVariant::A | PairVariant::C) && !are_cospectral(g1, g2, kind).verdict {
        return Err(unmet(format!("G1 and G2 are not {kind}-cospectral")));
    }
    let mut coronal_witness = None;
    if matches!(variant, PairVariant::B | PairVariant::C) {
        if !are_cospectral(h1, h2, kind).verdict {
            return Err(unmet(format!("H1 and H2 are not {kind}-cospectral")));
        }
        if kind != MatrixKind::L {
            let w = coronal_equal(h1, h2, kind)?;
            if !w.equal {
                return Err(unmet(format!("H1 and H2 have different {kind}-coronals")));
            }
            coronal_witness = Some(w);
        }
    }
    let first = corona(op, g1, h1)?;
    let second = corona(op, g2, h2)?;
    let certificate = are_cospectral(&first.graph, &second.graph, kind);
    if !certificate.verdict {
        return Err(CospectralError::CertificateFailed(format!(
            "{kind}-characteristic polynomials of the two coronae differ"
        )));
    }
    Ok(CoronaPair {
        first,
        second,
        certificate,
        coronal_witness,
    })
}

/// Whether the search pair can serve as `(H1, H2)` for variant (b).
pub fn usable_for_variant_b(h1: &Graph, h2: &Graph, kind: MatrixKind) -> Result<bool> {
    Ok(kind == MatrixKind::L || coronal_equal(h1, h2, kind)?.equal)
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    // bit of pair (i, j), i < j, in row-major order of the upper triangle
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn encode(g: &Graph, order: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(order[a], order[b]) {
                code |= 1 << pair_index(n, a, b);
            }
        }
    }
    code
}

/// Stable colour classes of 1-dimensional Weisfeiler-Leman refinement, in
/// canonical order.
fn colour_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut colour: Vec<usize> = g.degrees();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| distinct.binary_search(k).expect("present"))
            .collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colour) {
            colour = next;
            break;
        }
        colour = next;
    }
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colour.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    cells.into_values().collect()
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        v.reverse();
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Canonical upper-triangle code: the minimum over all labelings that list the
/// colour classes in canonical order.
pub fn canonical_code(g: &Graph) -> u64 {
    let mut cells = colour_cells(g);
    let mut best = u64::MAX;
    loop {
        let order: Vec<usize> = cells.iter().flatten().copied().collect();
        best = best.min(encode(g, &order));
        // odometer over the per-cell permutations
        let mut k = 0;
        while k < cells.len() && !next_permutation(&mut cells[k]) {
            k += 1;
        }
        if k == cells.len() {
            return best;
        }
    }
}

fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if code >> pair_index(n, a, b) & 1 == 1 {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("decoded codes are simple graphs")
}

/// One representative (in canonical labeling) of every isomorphism class of
/// graphs on `n` vertices, ordered by canonical code.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut seen: HashSet<u64> = HashSet::new();
    for g in nonisomorphic_graphs(n - 1) {
        let base = g.edges().to_vec();
        for mask in 0u32..(1 << (n - 1)) {
            let mut edges = base.clone();
            edges.extend(
                (0..n - 1)
                    .filter(|&v| mask >> v & 1 == 1)
                    .map(|v| (v, n - 1)),
            );
            let h = Graph::from_edge_list(n, &edges).expect("new vertex adds fresh edges");
            seen.insert(canonical_code(&h));
        }
    }
    let mut codes: Vec<u64> = seen.into_iter().collect();
    codes.sort_unstable();
    codes.into_iter().map(|c| decode(n, c)).collect()
}

/// All unordered pairs of non-isomorphic graphs on the same `n ≤ n_max` vertices
/// with identical characteristic polynomials of the chosen matrix.
///
/// Pairs are ordered by `n`, then by canonical code of the first graph, then of
/// the second.
pub fn bruteforce_search(n_max: usize, kind: MatrixKind) -> Result<Vec<(Graph, Graph)>> {
    if n_max > MAX_SEARCH_N {
        return Err(CospectralError::TooLarge(n_max));
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut groups: BTreeMap<Vec<BigInt>, Vec<Graph>> = BTreeMap::new();
        for g in nonisomorphic_graphs(n) {
            groups.entry(char_poly(&g, kind)).or_default().push(g);
        }
        let mut pairs: Vec<(u64, u64, Graph, Graph)> = Vec::new();
        for class in groups.values() {
            for (i, a) in class.iter().enumerate() {
                for b in &class[i + 1..] {
                    pairs.push((canonical_code(a), canonical_code(b), a.clone(), b.clone()));
                }
            }
        }
        pairs.sort_by_key(|p| (p.0, p.1));
        out.extend(pairs.into_iter().map(|p| (p.2, p.3)));
    }
    Ok(out)
}
