//! Builds `P4 ⊡ P2` and `P4 ⊟ P2` and shows where each block of vertices lives.
//!
//! ```bash
//! cargo run --example construct
//! ```

use corona_spectra::corona::{corona, Block, CoronaOp};
use corona_spectra::graph::generate;

fn main() {
    let g1 = generate("path:4").unwrap();
    let g2 = generate("path:2").unwrap();

    for op in CoronaOp::ALL {
        let c = corona(op, &g1, &g2).unwrap();
        println!(
            "P4 {} P2: n={} m={} (formula n={} m={})",
            op.symbol(),
            c.graph.n(),
            c.graph.m(),
            c.expected_n,
            c.expected_m
        );
        println!(
            "  originals {:?}, inserted {:?}",
            c.labels.original(),
            c.labels.inserted()
        );
        for k in 0..c.labels.copies {
            println!("  copy {k}: {:?}", c.labels.copy(k));
        }

        // the first inserted vertex subdivides edge (0, 1)
        let e0 = c.labels.global(Block::Inserted, 0).unwrap();
        println!(
            "  neighbours of inserted vertex {e0}: {:?}",
            c.graph.neighbors(e0)
        );
    }
}
