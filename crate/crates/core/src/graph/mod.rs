//! Simple undirected graphs with canonical labels, standard generators and the
//! integer matrices attached to them.

mod generators;
mod io;

use std::collections::VecDeque;
use std::fmt;
use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::IntMatrix;

pub use generators::generate;
pub use io::{load_graph, parse_edge_list, write_edge_list};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),

    #[error("bad generator parameter: {0}")]
    BadParameter(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// Which integer matrix of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MatrixKind {
    /// Adjacency `A`.
    A,
    /// Laplacian `L = D - A`.
    L,
    /// Signless Laplacian `Q = D + A`.
    Q,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::A, MatrixKind::L, MatrixKind::Q];
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
        })
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v` in lexicographic order. The order is
/// part of the graph's identity: it fixes the labels of the vertices inserted by
/// [`Graph::subdivision`] and the column order of [`Graph::incidence`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// `𝒮(G)` with its vertex partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    pub original: Range<usize>,
    /// Vertex `original.end + k` sits on edge `k` of the source graph.
    pub inserted: Range<usize>,
}

impl Graph {
    /// Normalises each pair to `u < v` and sorts; loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, norm))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, edges, adj }
    }

    /// Edgeless graph on `n` vertices (`n = 0` allowed).
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.adj[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(r)` iff every vertex has degree `r`. Edgeless graphs, including the
    /// one on zero vertices, are 0-regular.
    pub fn is_regular(&self) -> Option<usize> {
        let r = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == r).then_some(r)
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Graphs on at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.components().iter().all(|&c| c == 0)
    }

    /// Component index of every vertex, numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Two-colouring (`false` on the smallest vertex of each component), if any.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("coloured");
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// `Some((p, q))` with `p ≤ q` when the graph is `K_{p,q}` for `p, q ≥ 1`.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        if self.n < 2 || !self.is_connected() {
            return None;
        }
        let side = self.bipartition()?;
        let p = side.iter().filter(|&&s| s).count();
        let q = self.n - p;
        (p * q == self.m()).then_some((p.min(q), p.max(q)))
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a.set(u, v, 1);
            a.set(v, u, 1);
        }
        a
    }

    pub fn laplacian(&self) -> IntMatrix {
        self.with_diagonal(-1)
    }

    pub fn signless_laplacian(&self) -> IntMatrix {
        self.with_diagonal(1)
    }

    fn with_diagonal(&self, off: i64) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for (v, nb) in self.adj.iter().enumerate() {
            a.set(v, v, nb.len() as i64);
        }
        for &(u, v) in &self.edges {
            a.set(u, v, off);
            a.set(v, u, off);
        }
        a
    }

    pub fn matrix(&self, kind: MatrixKind) -> IntMatrix {
        match kind {
            MatrixKind::A => self.adjacency(),
            MatrixKind::L => self.laplacian(),
            MatrixKind::Q => self.signless_laplacian(),
        }
    }

    /// Vertex-edge incidence matrix `R` (`n × m`), columns in edge order.
    pub fn incidence(&self) -> IntMatrix {
        let mut r = IntMatrix::zeros(self.n, self.m());
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            r.set(u, k, 1);
            r.set(v, k, 1);
        }
        r
    }

    /// Inserts vertex `n + k` on edge `k`.
    pub fn subdivision(&self) -> Subdivision {
        let n = self.n;
        let mut edges = Vec::with_capacity(2 * self.m());
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            edges.push((u, n + k));
            edges.push((v, n + k));
        }
        edges.sort_unstable();
        Subdivision {
            graph: Self::from_sorted(n + self.m(), edges),
            original: 0..n,
            inserted: n..n + self.m(),
        }
    }

    /// Vertex `k` of the line graph is edge `k` of `self`.
    pub fn line_graph(&self) -> Graph {
        let m = self.m();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(k);
            incident[v].push(k);
        }
        let mut edges = Vec::new();
        for list in &incident {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
        // two edges share at most one endpoint in a simple graph
        edges.sort_unstable();
        Self::from_sorted(m, edges)
    }

    /// `self` on `0..n`, then `other` shifted by `n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        edges.sort_unstable();
        Self::from_sorted(self.n + other.n, edges)
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted(self.n, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        let mut edges = edges;
        edges.sort_unstable();
        Self::from_sorted(self.n, edges)
    }
}
