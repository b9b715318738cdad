//! Certified cospectral coronae from each construction:
//!
//! * a: the Shrikhande graph and the 4x4 rook's graph (both srg(16,6,2,2)) with a
//!   common `H`;
//! * b: a common `G` with Laplacian-cospectral `H1, H2` on six vertices;
//! * c: both pairs at once, Laplacian only.
//!
//! ```bash
//! cargo run --release --example cospectral_pairs
//! ```

use corona_spectra::corona::CoronaOp;
use corona_spectra::cospectral::{bruteforce_search, corona_pair, PairSeeds, PairVariant};
use corona_spectra::graph::{generate, MatrixKind};

fn main() {
    let shrikhande = generate("shrikhande").unwrap();
    let rook = generate("rook:4").unwrap();
    let (h1, h2) = bruteforce_search(6, MatrixKind::L).unwrap().remove(0);
    println!("L-cospectral seeds: {h1:?}\n                    {h2:?}");

    let runs = [
        (
            PairVariant::A,
            MatrixKind::A,
            PairSeeds::with_common_h(
                shrikhande.clone(),
                rook.clone(),
                generate("path:2").unwrap(),
            ),
        ),
        (
            PairVariant::B,
            MatrixKind::L,
            PairSeeds::with_common_g(generate("cycle:4").unwrap(), h1.clone(), h2.clone()),
        ),
        (
            PairVariant::C,
            MatrixKind::L,
            PairSeeds {
                g1: shrikhande,
                g2: rook,
                h1,
                h2,
            },
        ),
    ];
    for (variant, kind, seeds) in runs {
        for op in CoronaOp::ALL {
            let pair = corona_pair(variant, op, kind, &seeds).unwrap();
            println!(
                "variant {variant:?} with {}, {kind}-cospectral: {} vertices, isomorphic copies: {}, certified {}",
                op.symbol(),
                pair.first.graph.n(),
                pair.first.graph == pair.second.graph,
                pair.certificate.verdict
            );
        }
    }
}
