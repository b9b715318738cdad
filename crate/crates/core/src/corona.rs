//! Construction of `G1 ⊡ G2` (subdivision-vertex neighbourhood corona) and
//! `G1 ⊟ G2` (subdivision-edge neighbourhood corona).
//!
//! Both start from the subdivision `𝒮(G1)` and attach copies of `G2`:
//!
//! * `⊡` attaches one copy per original vertex `v_i` and joins every neighbour of
//!   `v_i` in `𝒮(G1)` (the inserted vertices on edges at `v_i`) to all of copy `i`;
//! * `⊟` attaches one copy per inserted vertex `e_k` and joins both endpoints of
//!   edge `k` to all of copy `k`.
//!
//! Vertex labels follow the partition `V(G1) ∪ I(G1) ∪ V¹(G2) ∪ V²(G2) ∪ …`:
//! originals first, inserted vertices in edge order, then the copies in order,
//! each copy keeping `G2`'s labels.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoronaError {
    #[error("the first operand has no edges")]
    EmptyG1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoronaOp {
    /// `G1 ⊡ G2`
    Svnc,
    /// `G1 ⊟ G2`
    Senc,
}

impl CoronaOp {
    pub const ALL: [CoronaOp; 2] = [CoronaOp::Svnc, CoronaOp::Senc];

    pub fn symbol(self) -> &'static str {
        match self {
            CoronaOp::Svnc => "⊡",
            CoronaOp::Senc => "⊟",
        }
    }
}

impl fmt::Display for CoronaOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoronaOp::Svnc => "svnc",
            CoronaOp::Senc => "senc",
        })
    }
}

impl FromStr for CoronaOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "svnc" => Ok(CoronaOp::Svnc),
            "senc" => Ok(CoronaOp::Senc),
            _ => Err(format!(
                "unknown corona operation '{s}' (expected svnc or senc)"
            )),
        }
    }
}

/// One block of the corona's vertex partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Original,
    Inserted,
    /// Copy of `G2` attached to original vertex `i` (`⊡`) or edge `i` (`⊟`), 0-based.
    Copy(usize),
}

/// Vertex partition of a corona and the map from `(block, local index)` to labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoronaLabels {
    pub n1: usize,
    pub m1: usize,
    pub n2: usize,
    pub copies: usize,
}

impl CoronaLabels {
    pub fn original(&self) -> Range<usize> {
        0..self.n1
    }

    pub fn inserted(&self) -> Range<usize> {
        self.n1..self.n1 + self.m1
    }

    pub fn copy(&self, c: usize) -> Range<usize> {
        let start = self.n1 + self.m1 + c * self.n2;
        start..start + self.n2
    }

    pub fn total(&self) -> usize {
        self.n1 + self.m1 + self.copies * self.n2
    }

    /// Global label of a vertex, or `None` if the local index is out of range.
    pub fn global(&self, block: Block, local: usize) -> Option<usize> {
        let r = match block {
            Block::Original => self.original(),
            Block::Inserted => self.inserted(),
            Block::Copy(c) if c < self.copies => self.copy(c),
            Block::Copy(_) => return None,
        };
        (local < r.len()).then_some(r.start + local)
    }

    /// Inverse of [`CoronaLabels::global`].
    pub fn locate(&self, v: usize) -> Option<(Block, usize)> {
        if v < self.n1 {
            Some((Block::Original, v))
        } else if v < self.n1 + self.m1 {
            Some((Block::Inserted, v - self.n1))
        } else if v < self.total() {
            let off = v - self.n1 - self.m1;
            Some((Block::Copy(off / self.n2), off % self.n2))
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaResult {
    pub op: CoronaOp,
    pub graph: Graph,
    pub labels: CoronaLabels,
    pub expected_n: usize,
    pub expected_m: usize,
}

impl CoronaResult {
    pub fn counts_match(&self) -> bool {
        self.graph.n() == self.expected_n && self.graph.m() == self.expected_m
    }
}

/// Vertex and edge counts of the corona from the operand sizes.
pub fn expected_counts(op: CoronaOp, n1: usize, m1: usize, n2: usize, m2: usize) -> (usize, usize) {
    match op {
        CoronaOp::Svnc => (n1 + m1 + n1 * n2, 2 * m1 + n1 * m2 + 2 * m1 * n2),
        CoronaOp::Senc => (n1 + m1 + m1 * n2, 2 * m1 + m1 * m2 + 2 * m1 * n2),
    }
}

/// Degree of every corona vertex predicted from the operands' degrees.
pub fn expected_degrees(op: CoronaOp, g1: &Graph, g2: &Graph) -> Vec<usize> {
    let n2 = g2.n();
    let d1 = g1.degrees();
    let d2 = g2.degrees();
    let mut out = Vec::new();
    match op {
        CoronaOp::Svnc => {
            out.extend(d1.iter().copied());
            out.extend(std::iter::repeat_n(2 + 2 * n2, g1.m()));
            for &dv in &d1 {
                out.extend(d2.iter().map(|&du| du + dv));
            }
        }
        CoronaOp::Senc => {
            out.extend(d1.iter().map(|&dv| dv * (1 + n2)));
            out.extend(std::iter::repeat_n(2, g1.m()));
            for _ in 0..g1.m() {
                out.extend(d2.iter().map(|&du| du + 2));
            }
        }
    }
    out
}

pub fn corona(op: CoronaOp, g1: &Graph, g2: &Graph) -> Result<CoronaResult, CoronaError> {
    match op {
        CoronaOp::Svnc => svnc(g1, g2),
        CoronaOp::Senc => senc(g1, g2),
    }
}

/// `G1 ⊡ G2`. `G2` may have no vertices, giving `𝒮(G1)`.
pub fn svnc(g1: &Graph, g2: &Graph) -> Result<CoronaResult, CoronaError> {
    build(CoronaOp::Svnc, g1, g2)
}

/// `G1 ⊟ G2`. `G2` may have no vertices, giving `𝒮(G1)`.
pub fn senc(g1: &Graph, g2: &Graph) -> Result<CoronaResult, CoronaError> {
    build(CoronaOp::Senc, g1, g2)
}

fn build(op: CoronaOp, g1: &Graph, g2: &Graph) -> Result<CoronaResult, CoronaError> {
    if g1.m() == 0 {
        return Err(CoronaError::EmptyG1);
    }
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    let labels = CoronaLabels {
        n1,
        m1,
        n2,
        copies: match op {
            CoronaOp::Svnc => n1,
            CoronaOp::Senc => m1,
        },
    };
    let (expected_n, expected_m) = expected_counts(op, n1, m1, n2, g2.m());
    let mut edges = g1.subdivision().graph.edges().to_vec();
    edges.reserve(expected_m - edges.len());
    for c in 0..labels.copies {
        let base = labels.copy(c).start;
        edges.extend(g2.edges().iter().map(|&(u, v)| (base + u, base + v)));
    }
    for (k, &(u, v)) in g1.edges().iter().enumerate() {
        let e = n1 + k;
        match op {
            CoronaOp::Svnc => {
                for i in [u, v] {
                    edges.extend(labels.copy(i).map(|w| (e, w)));
                }
            }
            CoronaOp::Senc => {
                for w in labels.copy(k) {
                    edges.push((u, w));
                    edges.push((v, w));
                }
            }
        }
    }
    let graph = Graph::from_edge_list(labels.total(), &edges)
        .expect("corona construction produces a simple graph");
    Ok(CoronaResult {
        op,
        graph,
        labels,
        expected_n,
        expected_m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn gen(d: &str) -> Graph {
        generate(d).unwrap()
    }

    #[test]
    fn p4_p2_counts() {
        let s = svnc(&gen("path:4"), &gen("path:2")).unwrap();
        assert_eq!((s.graph.n(), s.graph.m()), (15, 22));
        let e = senc(&gen("path:4"), &gen("path:2")).unwrap();
        assert_eq!((e.graph.n(), e.graph.m()), (13, 21));
        assert!(s.counts_match() && e.counts_match());
    }

    #[test]
    fn empty_second_operand_gives_subdivision() {
        let k2 = gen("path:2");
        for op in CoronaOp::ALL {
            let r = corona(op, &k2, &Graph::empty(0)).unwrap();
            assert_eq!(r.graph, gen("path:3").permuted(&[0, 2, 1]));
            assert_eq!(r.graph, k2.subdivision().graph);
        }
    }

    #[test]
    fn degrees_follow_the_vertex_lists() {
        let c4 = gen("cycle:4");
        let k2 = gen("complete:2");
        let s = svnc(&c4, &k2).unwrap();
        assert!(s.labels.inserted().all(|e| s.graph.degree(e) == Ok(6)));
        let e = senc(&c4, &k2).unwrap();
        assert!(e.labels.original().all(|v| e.graph.degree(v) == Ok(6)));
        assert!(e.labels.inserted().all(|v| e.graph.degree(v) == Ok(2)));
        for r in [&s, &e] {
            assert_eq!(r.graph.degrees(), expected_degrees(r.op, &c4, &k2));
        }
    }

    #[test]
    fn rejects_edgeless_first_operand() {
        assert_eq!(
            svnc(&Graph::empty(3), &gen("path:2")),
            Err(CoronaError::EmptyG1)
        );
    }

    #[test]
    fn labels_round_trip() {
        let l = svnc(&gen("cycle:3"), &gen("path:2")).unwrap().labels;
        for v in 0..l.total() {
            let (b, i) = l.locate(v).unwrap();
            assert_eq!(l.global(b, i), Some(v));
        }
        assert_eq!(l.locate(l.total()), None);
        assert_eq!(l.global(Block::Copy(3), 0), None);
    }
}
