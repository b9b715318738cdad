use std::fmt::Write as _;
use std::path::Path;

use super::{generate, Graph, GraphError, Result};

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        msg: "missing 'n m' header".into(),
    })?;
    let [n, m] = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = pair(line, l)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let err = |msg: String| GraphError::Parse { line, msg };
    let toks: Vec<&str> = l.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(err(format!("expected two integers, got '{l}'")));
    }
    let mut out = [0; 2];
    for (o, t) in out.iter_mut().zip(&toks) {
        *o = t
            .parse()
            .map_err(|_| err(format!("'{t}' is not a nonnegative integer")))?;
    }
    Ok(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// `gen:<descriptor>` or a path to an edge-list file.
pub fn load_graph(source: &str) -> Result<Graph> {
    if let Some(desc) = source.strip_prefix("gen:") {
        return generate(desc);
    }
    let text = std::fs::read_to_string(Path::new(source))
        .map_err(|e| GraphError::Io(format!("{source}: {e}")))?;
    parse_edge_list(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = generate("petersen").unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_edge_list("# P3\n3 2\n0 1\n\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert_eq!(parse_edge_list("2 1\n1 1\n"), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn gen_prefix() {
        assert_eq!(load_graph("gen:path:4").unwrap().m(), 3);
        assert!(matches!(
            load_graph("/nonexistent/x"),
            Err(GraphError::Io(_))
        ));
    }
}
