//! Spanning trees of coronae from the Laplacian spectra of the operands, checked
//! with the Matrix-Tree theorem on the constructed graph.
//!
//! ```bash
//! cargo run --example treecount
//! ```

use corona_spectra::closed_form::RegularGraphView;
use corona_spectra::corona::CoronaOp;
use corona_spectra::graph::generate;
use corona_spectra::invariants::{corona_tree_count_direct, tree_count, tree_count_direct};

fn main() {
    let pairs = [
        ("cycle:3", "path:2"),
        ("cycle:4", "path:2"),
        ("petersen", "complete:3"),
    ];
    for (d1, d2) in pairs {
        let g1 = generate(d1).unwrap();
        let g2 = generate(d2).unwrap();
        let view = RegularGraphView::new(&g1).unwrap();
        println!("t({d1}) = {}", tree_count_direct(&g1));
        for op in CoronaOp::ALL {
            let t = tree_count(op, &view, &g2).unwrap();
            let direct = corona_tree_count_direct(op, &g1, &g2).unwrap();
            println!(
                "  t({d1} {} {d2}) = {t}  (matrix-tree {direct})",
                op.symbol()
            );
        }
    }
}
