//! Exhaustive search for cospectral pairs on at most `n` vertices, and which of
//! them also share their coronal.
//!
//! ```bash
//! cargo run --release --example search -- 6
//! ```

use corona_spectra::cospectral::{bruteforce_search, coronal_equal, nonisomorphic_graphs};
use corona_spectra::graph::MatrixKind;

fn main() {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    for n in 1..=n_max {
        println!(
            "{n} vertices: {} graphs up to isomorphism",
            nonisomorphic_graphs(n).len()
        );
    }
    for kind in MatrixKind::ALL {
        let pairs = bruteforce_search(n_max, kind).unwrap();
        let equal = pairs
            .iter()
            .filter(|(a, b)| coronal_equal(a, b, kind).unwrap().equal)
            .count();
        println!(
            "{kind}: {} cospectral pairs, {equal} with equal coronals",
            pairs.len()
        );
        if let Some((a, b)) = pairs.first() {
            println!("  smallest: {:?}\n            {:?}", a.edges(), b.edges());
        }
    }
}
