//! Subdivision-vertex (`⊡`) and subdivision-edge (`⊟`) neighbourhood coronae of
//! graphs.
//!
//! * [`graph`]: graphs, generators, edge-list I/O and integer matrices.
//! * [`linalg`]: Jacobi eigenvalues, exact determinants and characteristic
//!   polynomials, low-degree root finding, coronals.
//! * [`corona`]: construction of `G1 ⊡ G2` and `G1 ⊟ G2`.
//! * [`closed_form`]: `A`, `L` and `Q` spectra of coronae from the operands' spectra.
//! * [`invariants`]: spanning-tree counts, algebraic connectivity, expander families.
//! * [`cospectral`]: exact cospectrality certificates and cospectral corona pairs.
//! * [`cli`]: the `corona` command-line tool.

pub mod cli;
pub mod closed_form;
pub mod corona;
pub mod cospectral;
pub mod graph;
pub mod invariants;
pub mod linalg;
