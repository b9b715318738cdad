//! Command-line front end; [`run`] is the whole program behind the `corona` binary.
//!
//! Exit statuses: 0 success, 2 bad input, 3 count-formula mismatch, 4 a
//! hypothesis of the closed forms fails (irregular or disconnected input, odd
//! degree, no closed form for the second operand), 5 verification mismatch, 6
//! cospectral construction precondition unmet, 7 cospectral certificate failed.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::closed_form::{self, ClosedFormError, RegularGraphView};
use crate::corona::{corona, CoronaError, CoronaOp, CoronaResult};
use crate::cospectral::{
    bruteforce_search, corona_pair, usable_for_variant_b, CospectralError, PairSeeds, PairVariant,
};
use crate::graph::{load_graph, write_edge_list, Graph, MatrixKind};
use crate::invariants::{self, InvariantError};
use crate::linalg::{Spectrum, DEFAULT_CLUSTER_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_FORMULA: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;
pub const EXIT_COSPECTRAL_PRECONDITION: i32 = 6;
pub const EXIT_CERTIFICATE: i32 = 7;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "corona",
    version,
    about = "Subdivision-vertex and subdivision-edge neighbourhood coronae"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a corona and write it as an edge list.
    Construct(ConstructArgs),
    /// Spectrum of a corona from the closed form, directly, or both.
    Spectrum(SpectrumArgs),
    /// Number of spanning trees of a corona.
    Treecount(TreecountArgs),
    /// Build a certified pair of cospectral coronae.
    Cospectral(CospectralArgs),
    /// Iterate G -> G svnc (r/2-1)K1 and track algebraic connectivity.
    Expander(ExpanderArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OpArg {
    Svnc,
    Senc,
}

impl From<OpArg> for CoronaOp {
    fn from(o: OpArg) -> Self {
        match o {
            OpArg::Svnc => CoronaOp::Svnc,
            OpArg::Senc => CoronaOp::Senc,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    #[value(name = "A")]
    A,
    #[value(name = "L")]
    L,
    #[value(name = "Q")]
    Q,
}

impl From<KindArg> for MatrixKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::A => MatrixKind::A,
            KindArg::L => MatrixKind::L,
            KindArg::Q => MatrixKind::Q,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Direct,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    A,
    B,
    C,
}

impl From<VariantArg> for PairVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::A => PairVariant::A,
            VariantArg::B => PairVariant::B,
            VariantArg::C => PairVariant::C,
        }
    }
}

#[derive(Args, Debug)]
struct Operands {
    #[arg(long, value_enum)]
    op: OpArg,
    /// First operand: edge-list path or gen:<descriptor>.
    #[arg(long)]
    g1: String,
    /// Second operand: edge-list path or gen:<descriptor>.
    #[arg(long)]
    g2: String,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(flatten)]
    operands: Operands,
    /// Write the edge list here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[command(flatten)]
    operands: Operands,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, value_enum, default_value = "both")]
    method: Method,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<String>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args, Debug)]
struct TreecountArgs {
    #[command(flatten)]
    operands: Operands,
    /// Also count spanning trees of the constructed corona and compare.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct CospectralArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long, value_enum)]
    op: OpArg,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Variant a: G1 G2 H. Variant b: G H1 H2. Variant c: G1 G2 H1 H2.
    /// With --search the searched pair replaces the last two (b, c) or the
    /// first two (a) graphs.
    #[arg(long, num_args = 1..)]
    inputs: Vec<String>,
    /// Take the seed pair from an exhaustive search up to this many vertices.
    #[arg(long)]
    search: Option<usize>,
    #[arg(long)]
    json: Option<String>,
}

#[derive(Args, Debug)]
struct ExpanderArgs {
    #[arg(long)]
    g: String,
    #[arg(long, default_value_t = 1)]
    j: usize,
    #[arg(long)]
    json: Option<String>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

/// Error carrying its exit status.
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Self {
            code,
            msg: msg.into(),
        }
    }
}

impl From<ClosedFormError> for Failure {
    fn from(e: ClosedFormError) -> Self {
        let code = match e {
            ClosedFormError::EmptyG1 => EXIT_INPUT,
            ClosedFormError::NotRegular | ClosedFormError::NotAssemblable(_) => EXIT_PRECONDITION,
            _ => EXIT_MISMATCH,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<CoronaError> for Failure {
    fn from(e: CoronaError) -> Self {
        Failure::new(EXIT_INPUT, e.to_string())
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        let code = match e {
            InvariantError::NoEdges | InvariantError::TooSmall { .. } => EXIT_INPUT,
            InvariantError::NonIntegerResult(_) | InvariantError::Linalg(_) => EXIT_MISMATCH,
            _ => EXIT_PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<CospectralError> for Failure {
    fn from(e: CospectralError) -> Self {
        let code = match e {
            CospectralError::PreconditionUnmet(_) => EXIT_COSPECTRAL_PRECONDITION,
            CospectralError::CertificateFailed(_) => EXIT_CERTIFICATE,
            CospectralError::TooLarge(_) | CospectralError::Corona(_) => EXIT_INPUT,
            CospectralError::Linalg(_) => EXIT_MISMATCH,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct(a) => construct(a, out, err),
        Command::Spectrum(a) => spectrum(a, out),
        Command::Treecount(a) => treecount(a, out),
        Command::Cospectral(a) => cospectral(a, out, err),
        Command::Expander(a) => expander(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn load(source: &str) -> std::result::Result<Graph, Failure> {
    load_graph(source).map_err(|e| Failure::new(EXIT_INPUT, format!("{source}: {e}")))
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(EXIT_INPUT, e.to_string())
}

fn emit_json(
    value: &Value,
    path: Option<&str>,
    out: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    match path {
        Some(p) => std::fs::write(p, text + "\n").map_err(io_failure),
        None => writeln!(out, "{text}").map_err(io_failure),
    }
}

/// Rounds to 15 significant digits.
pub fn round_sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { 0.0 } else { v };
    }
    format!("{v:.14e}").parse().unwrap_or(v)
}

fn construct(a: ConstructArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g1 = load(&a.operands.g1)?;
    let g2 = load(&a.operands.g2)?;
    let c = corona(a.operands.op.into(), &g1, &g2)?;
    let summary = format!(
        "n={} m={} (formula n={} m={})",
        c.graph.n(),
        c.graph.m(),
        c.expected_n,
        c.expected_m
    );
    match &a.out {
        Some(path) => {
            std::fs::write(path, write_edge_list(&c.graph)).map_err(io_failure)?;
            writeln!(out, "{summary}").map_err(io_failure)?;
        }
        None => {
            writeln!(out, "# {summary}").map_err(io_failure)?;
            write!(out, "{}", write_edge_list(&c.graph)).map_err(io_failure)?;
        }
    }
    if c.counts_match() {
        Ok(EXIT_OK)
    } else {
        let _ = writeln!(err, "error: constructed counts differ from the formula");
        Ok(EXIT_FORMULA)
    }
}

#[derive(Serialize)]
struct EigenvalueRow {
    value: f64,
    multiplicity: String,
    provenance: Vec<String>,
}

fn rows(s: &Spectrum) -> Vec<EigenvalueRow> {
    s.entries()
        .iter()
        .map(|e| EigenvalueRow {
            value: round_sig(e.value),
            multiplicity: e.multiplicity.to_string(),
            provenance: e.provenance.clone(),
        })
        .collect()
}

fn spectrum(a: SpectrumArgs, out: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let op: CoronaOp = a.operands.op.into();
    let kind: MatrixKind = a.kind.into();
    let g1 = load(&a.operands.g1)?;
    let g2 = load(&a.operands.g2)?;
    if g1.m() == 0 {
        return Err(Failure::new(EXIT_INPUT, "the first operand has no edges"));
    }
    let closed = match a.method {
        Method::Direct => None,
        _ => Some(closed_form::closed_spectrum(op, kind, &g1, &g2)?),
    };
    let direct = match a.method {
        Method::Closed => None,
        _ => Some(closed_form::direct_spectrum(op, kind, &g1, &g2)?),
    };
    let shown = closed.as_ref().or(direct.as_ref()).expect("one method ran");
    let mut report = json!({
        "schema": SCHEMA_VERSION,
        "command": "spectrum",
        "op": op,
        "kind": kind,
        "method": format!("{:?}", a.method).to_lowercase(),
        "inputs": { "g1": a.operands.g1, "g2": a.operands.g2 },
        "order": shown.total_count().to_string(),
        "eigenvalues": rows(shown),
    });
    let mut code = EXIT_OK;
    if let (Some(c), Some(d)) = (&closed, &direct) {
        let distance = c.max_distance(d);
        let max_abs = (c.total_count() == d.total_count()).then(|| {
            c.expanded()
                .iter()
                .zip(d.expanded())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max)
        });
        let passed = distance.is_some_and(|x| x <= a.tol);
        if !passed {
            code = EXIT_MISMATCH;
        }
        report["verification"] = json!({
            "oracle": "jacobi",
            "multiset_distance": distance.map(round_sig),
            "max_residual": max_abs.map(round_sig),
            "tolerance": a.tol,
            "cluster_tolerance": DEFAULT_CLUSTER_TOL,
            "passed": passed,
        });
    }
    report["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    emit_json(&report, a.json.as_deref(), out)?;
    Ok(code)
}

fn treecount(a: TreecountArgs, out: &mut dyn Write) -> Outcome {
    let op: CoronaOp = a.operands.op.into();
    let g1 = load(&a.operands.g1)?;
    let g2 = load(&a.operands.g2)?;
    let view = RegularGraphView::new(&g1)?;
    let t = invariants::tree_count(op, &view, &g2)?;
    writeln!(out, "{t}").map_err(io_failure)?;
    if a.verify {
        let direct = invariants::corona_tree_count_direct(op, &g1, &g2)?;
        writeln!(out, "matrix-tree: {direct}").map_err(io_failure)?;
        if direct != t {
            return Ok(EXIT_MISMATCH);
        }
    }
    Ok(EXIT_OK)
}

fn corona_json(c: &CoronaResult) -> Value {
    json!({
        "n": c.graph.n(),
        "m": c.graph.m(),
        "edges": c.graph.edges(),
    })
}

fn cospectral(a: CospectralArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let variant: PairVariant = a.variant.into();
    let op: CoronaOp = a.op.into();
    let kind: MatrixKind = a.kind.into();
    let mut graphs = a
        .inputs
        .iter()
        .map(|s| load(s))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let needed = match variant {
        PairVariant::A | PairVariant::B => 3,
        PairVariant::C => 4,
    };
    let mut searched = None;
    if let Some(n_max) = a.search {
        let pairs = bruteforce_search(n_max, kind)?;
        let pick = pairs.into_iter().find(|(x, y)| match variant {
            PairVariant::A => x.m() > 0 && x.is_regular().is_some() && y.is_regular().is_some(),
            _ => usable_for_variant_b(x, y, kind).unwrap_or(false),
        });
        let Some((x, y)) = pick else {
            return Err(Failure::new(
                EXIT_COSPECTRAL_PRECONDITION,
                format!(
                    "search up to {n_max} vertices found no {kind}-cospectral pair meeting the hypotheses of variant {}",
                    variant_name(variant)
                ),
            ));
        };
        let _ = writeln!(err, "search: using {:?} and {:?}", x, y);
        searched = Some((write_edge_list(&x), write_edge_list(&y)));
        match variant {
            PairVariant::A => {
                graphs.insert(0, y);
                graphs.insert(0, x);
            }
            _ => {
                graphs.push(x);
                graphs.push(y);
            }
        }
    }
    if graphs.len() != needed {
        return Err(Failure::new(
            EXIT_INPUT,
            format!(
                "variant {} needs {needed} graphs, got {}",
                variant_name(variant),
                graphs.len()
            ),
        ));
    }
    let seeds = match variant {
        PairVariant::A => {
            PairSeeds::with_common_h(graphs[0].clone(), graphs[1].clone(), graphs[2].clone())
        }
        PairVariant::B => {
            PairSeeds::with_common_g(graphs[0].clone(), graphs[1].clone(), graphs[2].clone())
        }
        PairVariant::C => PairSeeds {
            g1: graphs[0].clone(),
            g2: graphs[1].clone(),
            h1: graphs[2].clone(),
            h2: graphs[3].clone(),
        },
    };
    let pair = corona_pair(variant, op, kind, &seeds)?;
    let report = json!({
        "schema": SCHEMA_VERSION,
        "command": "cospectral",
        "variant": variant,
        "op": op,
        "kind": kind,
        "inputs": a.inputs,
        "search": a.search.map(|n| json!({ "n_max": n, "pair": searched })),
        "first": corona_json(&pair.first),
        "second": corona_json(&pair.second),
        "identical": pair.first.graph == pair.second.graph,
        "certificate": pair.certificate,
        "coronal_witness": pair.coronal_witness,
        "timing_ms": start.elapsed().as_secs_f64() * 1e3,
    });
    emit_json(&report, a.json.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn variant_name(v: PairVariant) -> &'static str {
    match v {
        PairVariant::A => "a",
        PairVariant::B => "b",
        PairVariant::C => "c",
    }
}

fn expander(a: ExpanderArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let g = load(&a.g)?;
    let rep = invariants::expander_iterate(&g, a.j)?;
    for w in &rep.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let passed = rep.passes(a.tol);
    let mut report = serde_json::to_value(&rep).expect("report serializes");
    report["schema"] = json!(SCHEMA_VERSION);
    report["command"] = json!("expander");
    report["input"] = json!(a.g);
    report["tolerance"] = json!(a.tol);
    report["passed"] = json!(passed);
    report["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    emit_json(&report, a.json.as_deref(), out)?;
    Ok(if passed { EXIT_OK } else { EXIT_MISMATCH })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("corona").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn round_to_fifteen_digits() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333333);
        assert_eq!(round_sig(0.0), 0.0);
        assert_eq!(round_sig(-2.0), -2.0);
    }

    #[test]
    fn construct_reports_counts() {
        let (code, out, _) = run_args(&[
            "construct",
            "--op",
            "svnc",
            "--g1",
            "gen:path:4",
            "--g2",
            "gen:path:2",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("# n=15 m=22"));
        let (code, _, _) = run_args(&[
            "construct",
            "--op",
            "svnc",
            "--g1",
            "gen:empty:3",
            "--g2",
            "gen:path:2",
        ]);
        assert_eq!(code, EXIT_INPUT);
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(run_args(&["spectrum", "--op", "svnc"]).0, EXIT_INPUT);
        assert_eq!(
            run_args(&["construct", "--op", "x", "--g1", "a", "--g2", "b"]).0,
            EXIT_INPUT
        );
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }
}
