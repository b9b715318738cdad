//! An expander family from the circulant `C6(1,2)`: each step replaces `G` by
//! `G ⊡ (r/2 - 1)K1`, which stays `r`-regular while the algebraic connectivity
//! follows `f(x) = r - sqrt(r^2 - r x / 2)`.
//!
//! ```bash
//! cargo run --example expander -- 3
//! ```

use corona_spectra::graph::generate;
use corona_spectra::invariants::expander_iterate;

fn main() {
    let steps = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let g = generate("circulant:6,1,2").unwrap();
    let report = expander_iterate(&g, steps).unwrap();

    println!("r={} n0={} epsilon={}", report.r, report.n0, report.epsilon);
    println!(
        "{:>3} {:>6} {:>7} {:>18} {:>18} {:>9}",
        "j", "n", "m", "a(G_j)", "f^j(a0)", "gap"
    );
    for l in &report.levels {
        println!(
            "{:>3} {:>6} {:>7} {:>18.12} {:>18.12} {:>9.1e}",
            l.j, l.n, l.m, l.a_numeric, l.f_j, l.gap
        );
    }
    for w in &report.warnings {
        println!("warning: {w}");
    }
    println!("family checks pass: {}", report.passes(1e-8));
}
