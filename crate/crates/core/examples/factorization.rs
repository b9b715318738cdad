//! The characteristic polynomial of a corona as a product of factors, evaluated at
//! a few points and compared with `det(xI - M)` of the constructed matrix.
//!
//! ```bash
//! cargo run --example factorization
//! ```

use corona_spectra::closed_form::{
    charpoly_eval_direct, evaluate, factorization, FormMode, RegularGraphView,
};
use corona_spectra::corona::CoronaOp;
use corona_spectra::graph::{generate, MatrixKind};

fn main() {
    let g1 = generate("petersen").unwrap();
    let g2 = generate("path:3").unwrap();

    // Coronal mode keeps the non-regular second operand as a coronal factor.
    let view = RegularGraphView::new(&g1).unwrap();
    let f = factorization(CoronaOp::Senc, MatrixKind::A, &view, &g2, FormMode::Coronal).unwrap();
    println!("order {}", f.order);
    for l in &f.linear {
        println!(
            "  (x - {:.6})^{}  [{}]",
            l.root.value(),
            l.multiplicity,
            l.tag
        );
    }
    for p in &f.polys {
        println!("  {:?}^{}  [{}]", p.poly.coeffs(), p.repeat, p.tag);
    }
    for c in &f.coronals {
        println!("  coronal factor x{}  [{}]", c.repeat, c.tag);
    }

    for x in [-3.5, 0.25, 4.75] {
        let closed = evaluate(&f, x).unwrap();
        let direct = charpoly_eval_direct(CoronaOp::Senc, MatrixKind::A, &g1, &g2, x).unwrap();
        println!("x={x:>5}: factored {closed:.6e}, direct {direct:.6e}");
    }
}
