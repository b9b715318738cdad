#![allow(dead_code)]

use corona_spectra::graph::{generate, Graph};

/// Regular first operands.
pub const G1_FIXTURES: &[&str] = &[
    "cycle:3",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "cycle:7",
    "cycle:8",
    "complete:4",
    "complete:5",
    "hypercube:3",
    "petersen",
    "circulant:6,1,2",
];

/// Second operands, including the edgeless and complete bipartite cases.
pub const G2_FIXTURES: &[&str] = &[
    "empty:1",
    "empty:2",
    "complete:1",
    "complete:2",
    "complete:3",
    "path:3",
    "complete_bipartite:1,2",
    "cycle:4",
];

pub fn gen(desc: &str) -> Graph {
    generate(desc).unwrap_or_else(|e| panic!("{desc}: {e}"))
}
