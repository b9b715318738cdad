use super::{Graph, GraphError, Result};

/// Builds a graph from a descriptor.
///
/// Descriptors: `path:k`, `cycle:k`, `complete:k`, `complete_bipartite:p,q`,
/// `empty:k`, `hypercube:d`, `petersen`, `circulant:n,{s1,s2,..}`, `shrikhande`,
/// `rook:k` (the `k × k` rook's graph). `a+b` is the disjoint union of `a` and `b`.
pub fn generate(desc: &str) -> Result<Graph> {
    let mut parts = desc.split('+');
    let first = single(parts.next().unwrap_or_default().trim())?;
    parts.try_fold(first, |acc, p| Ok(acc.disjoint_union(&single(p.trim())?)))
}

fn single(desc: &str) -> Result<Graph> {
    let (name, params) = desc.split_once(':').unwrap_or((desc, ""));
    match name {
        "path" => path(count(params)?),
        "cycle" => cycle(count(params)?),
        "complete" => complete(count(params)?),
        "complete_bipartite" => {
            let (p, q) = params
                .split_once(',')
                .ok_or_else(|| bad("complete_bipartite needs p,q"))?;
            complete_bipartite(count(p)?, count(q)?)
        }
        "empty" => Ok(Graph::empty(count(params)?)),
        "hypercube" => hypercube(count(params)?),
        "petersen" => no_params(params, petersen()),
        "circulant" => {
            let (n, jumps) = params
                .split_once(',')
                .ok_or_else(|| bad("circulant needs n,{jumps}"))?;
            let jumps = jumps.trim().trim_start_matches('{').trim_end_matches('}');
            let jumps = jumps
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(count)
                .collect::<Result<Vec<_>>>()?;
            circulant(count(n)?, &jumps)
        }
        "shrikhande" => no_params(params, shrikhande()),
        "rook" => rook(count(params)?),
        _ => Err(GraphError::UnknownGenerator(desc.to_string())),
    }
}

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::BadParameter(msg.into())
}

fn count(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| bad(format!("'{s}' is not a nonnegative integer")))
}

fn no_params(params: &str, g: Result<Graph>) -> Result<Graph> {
    if params.is_empty() {
        g
    } else {
        Err(bad(format!("unexpected parameters '{params}'")))
    }
}

pub(crate) fn path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(bad("path:k needs k ≥ 1"));
    }
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(k, &edges)
}

pub(crate) fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(bad(format!("cycle:{k} needs k ≥ 3")));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edge_list(k, &edges)
}

pub(crate) fn complete(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(bad("complete:k needs k ≥ 1"));
    }
    let edges: Vec<_> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(k, &edges)
}

/// Part of size `p` on `0..p`, part of size `q` on `p..p+q`.
pub(crate) fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(bad("complete_bipartite:p,q needs p, q ≥ 1"));
    }
    let edges: Vec<_> = (0..p)
        .flat_map(|u| (p..p + q).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(p + q, &edges)
}

fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 16 {
        return Err(bad("hypercube:d needs 1 ≤ d ≤ 16"));
    }
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::from_edge_list(n, &edges)
}

fn petersen() -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edge_list(10, &edges)
}

pub(crate) fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(bad("circulant needs n ≥ 1"));
    }
    let mut sorted = jumps.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(bad("circulant jumps must be distinct"));
    }
    let mut edges = Vec::new();
    for &s in jumps {
        if s == 0 || s > n / 2 {
            return Err(bad(format!("circulant:{n} jump {s} outside 1..={}", n / 2)));
        }
        for i in 0..n {
            let j = (i + s) % n;
            edges.push((i.min(j), i.max(j)));
        }
    }
    // the jump n/2 reaches every edge twice
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edge_list(n, &edges)
}

/// Cayley graph on `Z4 × Z4` with connection set `±(1,0), ±(0,1), ±(1,1)`.
fn shrikhande() -> Result<Graph> {
    let id = |a: usize, b: usize| 4 * (a % 4) + b % 4;
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                let (u, v) = (id(a, b), id(a + da, b + db));
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::from_edge_list(16, &edges)
}

/// `K_k □ K_k`: cells of a `k × k` board, adjacent when in the same row or column.
fn rook(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(bad("rook:k needs k ≥ 2"));
    }
    let mut edges = Vec::new();
    for u in 0..k * k {
        for v in u + 1..k * k {
            if u / k == v / k || u % k == v % k {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(k * k, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_descriptors() {
        let k23 = generate("complete_bipartite:2,3").unwrap();
        assert_eq!((k23.n(), k23.m()), (5, 6));
        let e2 = generate("empty:2").unwrap();
        assert_eq!((e2.n(), e2.m()), (2, 0));
        let c = generate("circulant:6,{1,2}").unwrap();
        assert_eq!(c.is_regular(), Some(4));
        assert_eq!(c.n(), 6);
        assert_eq!(generate("petersen").unwrap().is_regular(), Some(3));
        assert_eq!(generate("hypercube:3").unwrap().is_regular(), Some(3));
    }

    #[test]
    fn bad_descriptors() {
        assert!(matches!(
            generate("cycle:2"),
            Err(GraphError::BadParameter(_))
        ));
        assert!(matches!(
            generate("wheel:5"),
            Err(GraphError::UnknownGenerator(_))
        ));
        assert!(matches!(
            generate("circulant:6,{1,1}"),
            Err(GraphError::BadParameter(_))
        ));
        assert!(matches!(
            generate("circulant:6,{4}"),
            Err(GraphError::BadParameter(_))
        ));
        assert!(generate("path:x").is_err());
    }

    #[test]
    fn strongly_regular_pair() {
        let s = generate("shrikhande").unwrap();
        let r = generate("rook:4").unwrap();
        assert_eq!(s.is_regular(), Some(6));
        assert_eq!(r.is_regular(), Some(6));
        assert_eq!((s.m(), r.m()), (48, 48));
        assert_ne!(s, r);
    }

    #[test]
    fn unions() {
        let g = generate("cycle:4+complete:1").unwrap();
        assert_eq!((g.n(), g.m()), (5, 4));
        assert_eq!(g.degree(4), Ok(0));
    }
}
