//! Round trip through the edge-list format: `n m` on the first line, then one
//! `u v` pair per line, `#` starting a comment.
//!
//! ```bash
//! cargo run --example edge_list
//! ```

use corona_spectra::corona::svnc;
use corona_spectra::graph::{generate, load_graph, parse_edge_list, write_edge_list};

fn main() {
    let text = "# a triangle with a pendant vertex\n4 4\n0 1\n1 2\n0 2\n2 3\n";
    let g = parse_edge_list(text).unwrap();
    println!("parsed n={} m={} degrees {:?}", g.n(), g.m(), g.degrees());

    let c = svnc(&generate("cycle:3").unwrap(), &g).unwrap();
    let dir = std::env::temp_dir().join("corona-edge-list-example");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c3_svnc.txt");
    std::fs::write(&path, write_edge_list(&c.graph)).unwrap();

    let back = load_graph(path.to_str().unwrap()).unwrap();
    println!(
        "wrote and reloaded {}: identical = {}",
        path.display(),
        back == c.graph
    );

    match parse_edge_list("3 1\n0 0\n") {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("rejected: {e}"),
    }
}
