//! Adjacency, Laplacian and signless Laplacian spectra of `C5 ⊡ K_{1,2}` and
//! `C5 ⊟ K2` from the closed forms, checked against Jacobi on the full matrix.
//!
//! ```bash
//! cargo run --example spectrum
//! ```

use corona_spectra::closed_form::{closed_spectrum, direct_spectrum, is_assemblable};
use corona_spectra::corona::CoronaOp;
use corona_spectra::graph::{generate, MatrixKind};

fn main() {
    let cases = [
        (CoronaOp::Svnc, "cycle:5", "complete_bipartite:1,2"),
        (CoronaOp::Senc, "cycle:5", "complete:2"),
    ];
    for (op, d1, d2) in cases {
        let g1 = generate(d1).unwrap();
        let g2 = generate(d2).unwrap();
        for kind in MatrixKind::ALL {
            if !is_assemblable(kind, &g2) {
                println!(
                    "{d1} {} {d2}, {kind}: no closed form for this second operand",
                    op.symbol()
                );
                continue;
            }
            let closed = closed_spectrum(op, kind, &g1, &g2).unwrap();
            let direct = direct_spectrum(op, kind, &g1, &g2).unwrap();
            println!(
                "{d1} {} {d2}, {kind}: {} eigenvalues, distance to Jacobi {:.1e}",
                op.symbol(),
                closed.total_count(),
                closed.max_distance(&direct).unwrap()
            );
            for e in closed.entries() {
                println!(
                    "  {:>12.8} x{:<3} {}",
                    e.value,
                    e.multiplicity,
                    e.provenance.join("; ")
                );
            }
        }
    }
}
