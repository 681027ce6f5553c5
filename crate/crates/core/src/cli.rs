//! The `lplab` command line. [`run`] takes the argument list and two
//! writers so it can be driven from tests; `main` only forwards to it.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::connectivity::{
    full_report, restricted_edge_connectivity, ConnectivityReport, CutWitness, ExtCount, Limits,
};
use crate::constructors::{
    emit_graph6, erdos_renyi, parse_graph6_lines, CorpusItem, CorpusSpec, DirectProduct, Family,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::{
    edge_term, inequality_hypothesis, layer_term, parse_claims, sweep, ClaimCheckResult, ClaimId, Factor, HarnessConfig,
};

/// Largest oracle budget a `u64` subset mask supports.
const MAX_ORACLE_BUDGET: usize = 63;
const DEFAULT_CORPUS: &str = "exhaustive:5;connected";
const WORKERS_VAR: &str = "LPLAB_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "lplab",
    version,
    about = "Edge-connectivity and restricted edge-connectivity of graphs and direct products"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON (one object per line) instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest order handled by the brute-force cut oracle.
    #[arg(long, global = true, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..=MAX_ORACLE_BUDGET as u64))]
    pub budget: u64,
    /// Per-instance time cap in seconds.
    #[arg(long = "time-cap", global = true, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    pub time_cap: u64,
    /// Seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report λ, λ′ and the super classifications of a graph.
    Analyze(AnalyzeArgs),
    /// Build G × K_n or G × T_n and report on it.
    Product(ProductArgs),
    /// Emit graphs from a family, a random model or a corpus spec.
    Gen(GenArgs),
    /// Check claims over a corpus; one result per (claim, graph, n).
    Verify(VerifyArgs),
    /// Like `verify` with all claims by default and a per-claim table.
    Sweep(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// A graph6 or edge-list file.
    pub file: Option<PathBuf>,
    /// A family name (`petersen`, `cycle`, `cycle:5`, `K4`, ...).
    #[arg(long, conflicts_with_all = ["file", "graph6"])]
    pub family: Option<String>,
    /// Parameter for `--family`.
    #[arg(long, requires = "family")]
    pub n: Option<String>,
    /// A graph6 string.
    #[arg(long, conflicts_with = "file")]
    pub graph6: Option<String>,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    /// First factor: a graph file or a family (`cycle:4`, `P3`, ...).
    #[arg(long)]
    pub left: String,
    /// Second factor: `K<n>` or `T<n>`.
    #[arg(long)]
    pub right: String,
    /// Print the product graph instead of its report.
    #[arg(long, value_enum)]
    pub emit: Option<GraphFormat>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// A family name (`cycle`, `cycle:5`, `petersen`, ...).
    #[arg(long, conflicts_with_all = ["corpus", "random"])]
    pub family: Option<String>,
    /// Parameter for `--family`.
    #[arg(long, requires = "family")]
    pub n: Option<String>,
    /// A corpus spec such as `exhaustive:5;connected`.
    #[arg(long, conflicts_with = "random")]
    pub corpus: Option<String>,
    /// `N:P`: G(N, P) graphs seeded from `--seed`, `--seed + 1`, ...
    #[arg(long)]
    pub random: Option<String>,
    /// Number of random graphs.
    #[arg(long, default_value_t = 1, requires = "random")]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A claim id or a comma list (`THM_1_1,LEM_2_1`), or `all`.
    #[arg(long)]
    pub claim: Option<String>,
    /// Corpus spec for the claims that take a graph.
    #[arg(long, default_value = DEFAULT_CORPUS)]
    pub corpus: String,
    /// Comma list of n values; defaults to each claim's own.
    #[arg(long, value_delimiter = ',')]
    pub n: Option<Vec<usize>>,
    /// Products above this order are skipped.
    #[arg(long = "max-product-order", default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_product_order: u64,
    /// Also run n below each claim's range, reported as exploratory.
    #[arg(long = "probe-small-n")]
    pub probe_small_n: bool,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0, 1 on a counterexample, 2 on usage
/// or input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Runs a parsed config, in a pool of `LPLAB_WORKERS` threads if set.
pub fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let workers =
        match std::env::var(WORKERS_VAR) {
            Ok(v) => Some(v.trim().parse::<usize>().ok().filter(|&w| w > 0).ok_or_else(|| {
                Error::InvalidParameter(format!("{WORKERS_VAR} must be a positive integer, got `{v}`"))
            })?),
            Err(_) => None,
        };
    let pool = match workers {
        Some(w) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?,
        ),
        None => None,
    };
    dispatch(config, pool.as_ref(), out, err)
}

fn in_pool<R: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

fn dispatch(
    config: &RunConfig,
    pool: Option<&rayon::ThreadPool>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let limits = Limits::with_oracle_order(config.budget as usize);
    match &config.command {
        Command::Analyze(a) => analyze(config, a, &limits, pool, out),
        Command::Product(p) => product(config, p, &limits, pool, out),
        Command::Gen(g) => generate(config, g, out),
        Command::Verify(v) => verify(config, v, false, pool, out, err),
        Command::Sweep(v) => verify(config, v, true, pool, out, err),
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), message: e.to_string() }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| io_err(Path::new("<stdout>"), e))
}

/// Reads an edge-list file (its first data line is `n m`) or a graph6
/// file (one graph per line).
pub fn read_graph_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| Error::Precondition(format!("{} contains no graph", path.display())))?;
    let looks_like_edges = first.split_whitespace().all(|t| t.parse::<usize>().is_ok());
    if looks_like_edges {
        Ok(vec![Graph::parse_edge_list(&text)?])
    } else {
        parse_graph6_lines(&text)
    }
}

fn family_graph(name: &str, n: Option<&str>) -> Result<(String, Graph)> {
    let family = match n {
        Some(p) => Family::from_parts(name, Some(p))?,
        None => name.parse::<Family>()?,
    };
    Ok((family.to_string(), family.build()?))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AnalyzeRecord<'a> {
    input: &'a str,
    graph6: Option<String>,
    #[serde(flatten)]
    report: &'a ConnectivityReport,
}

fn analyze(
    config: &RunConfig,
    a: &AnalyzeArgs,
    limits: &Limits,
    pool: Option<&rayon::ThreadPool>,
    out: &mut dyn Write,
) -> Result<i32> {
    let inputs: Vec<(String, Graph)> = if let Some(name) = &a.family {
        vec![family_graph(name, a.n.as_deref())?]
    } else if let Some(code) = &a.graph6 {
        parse_graph6_lines(code)?.into_iter().map(|g| (code.trim().to_string(), g)).collect()
    } else if let Some(path) = &a.file {
        let graphs = read_graph_file(path)?;
        let many = graphs.len() > 1;
        graphs
            .into_iter()
            .enumerate()
            .map(|(i, g)| (if many { format!("{}#{i}", path.display()) } else { path.display().to_string() }, g))
            .collect()
    } else {
        return Err(Error::Precondition("analyze needs a file, --family or --graph6".into()));
    };
    for (label, g) in &inputs {
        let report = in_pool(pool, || full_report(g, limits));
        let text = if config.json {
            let record = AnalyzeRecord { input: label, graph6: emit_graph6(g).ok(), report: &report };
            serde_json::to_string(&record).expect("report serializes") + "\n"
        } else {
            report_table(label, &report)
        };
        emit(out, &text)?;
    }
    Ok(0)
}

fn show<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

fn witness_line(name: &str, w: &CutWitness) -> String {
    format!("  {name:<18} value {} {} A={:?}\n", w.value, w.kind.as_str(), w.side_a())
}

/// Plain-text rendering of a report.
pub fn report_table(label: &str, r: &ConnectivityReport) -> String {
    let mut s = String::new();
    let rows: [(&str, String); 14] = [
        ("graph", label.to_string()),
        ("order", r.order.to_string()),
        ("size", r.size.to_string()),
        ("loops", r.loops.to_string()),
        ("connected", r.connected.to_string()),
        ("min degree", show(r.min_degree)),
        ("min edge degree", show(r.min_edge_degree)),
        ("lambda", show(r.lambda)),
        ("lambda'", show(r.lambda_prime)),
        ("lambda-optimal", show(r.lambda_optimal)),
        ("super-lambda", show(r.super_lambda)),
        ("lambda'-optimal", show(r.lambda_prime_optimal)),
        ("super-lambda'", show(r.super_lambda_prime)),
        ("certification", show(r.super_lambda_prime_certification.map(|c| format!("{c:?}").to_lowercase()))),
    ];
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<18}{v}");
    }
    let w = &r.witnesses;
    let named = [
        ("lambda", &w.lambda),
        ("lambda'", &w.lambda_prime),
        ("super-lambda", &w.super_lambda),
        ("super-lambda'", &w.super_lambda_prime),
    ];
    if named.iter().any(|(_, w)| w.is_some()) {
        s.push_str("witnesses\n");
        for (name, wit) in named {
            if let Some(wit) = wit {
                s.push_str(&witness_line(name, wit));
            }
        }
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

fn parse_right(s: &str) -> Result<(Factor, usize)> {
    let bad = || Error::InvalidParameter(format!("--right must be K<n> or T<n>, got `{s}`"));
    let s = s.trim();
    let factor = match s.chars().next() {
        Some('K' | 'k') => Factor::Complete,
        Some('T' | 't') => Factor::Total,
        _ => return Err(bad()),
    };
    let n = s[1..].parse::<usize>().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    Ok((factor, n))
}

fn read_left(s: &str) -> Result<(String, Graph)> {
    let path = Path::new(s);
    if path.is_file() {
        let mut graphs = read_graph_file(path)?;
        if graphs.len() != 1 {
            return Err(Error::Precondition(format!("{s} holds {} graphs; --left needs one", graphs.len())));
        }
        return Ok((s.to_string(), graphs.remove(0)));
    }
    family_graph(s, None)
}

/// The closed-form prediction for `λ′(G × F_n)`.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Formula {
    xi: usize,
    lambda_prime_left: ExtCount,
    edge_term: ExtCount,
    layer_term: ExtCount,
    predicted: ExtCount,
    inequality_hypothesis: bool,
}

fn formula(g: &Graph, factor: Factor, n: usize) -> Option<Formula> {
    if g.order() < 2 || !g.is_connected() || n < 2 {
        return None;
    }
    let xi = g.min_edge_degree().ok()?;
    let lp = restricted_edge_connectivity(g).ok()?;
    let edge = ExtCount::from(edge_term(factor, n as u64, xi as u64));
    let layer = layer_term(factor, n as u64, lp);
    Some(Formula {
        xi,
        lambda_prime_left: lp,
        edge_term: edge,
        layer_term: layer,
        predicted: edge.min(layer),
        inequality_hypothesis: inequality_hypothesis(factor, n, xi, lp),
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ProductRecord<'a> {
    left: &'a str,
    right: &'a str,
    formula: Option<Formula>,
    #[serde(flatten)]
    report: &'a ConnectivityReport,
}

fn product(
    config: &RunConfig,
    p: &ProductArgs,
    limits: &Limits,
    pool: Option<&rayon::ThreadPool>,
    out: &mut dyn Write,
) -> Result<i32> {
    let (label, left) = read_left(&p.left)?;
    let (factor, n) = parse_right(&p.right)?;
    let right_label = factor.symbol(n);
    let g = DirectProduct::new(&left, &factor.build(n)?)?.into_graph();
    if let Some(format) = p.emit {
        emit(out, &render_graph(&g, format)?)?;
        return Ok(0);
    }
    let report = in_pool(pool, || full_report(&g, limits));
    let prediction = formula(&left, factor, n);
    let text = if config.json {
        let record = ProductRecord { left: &label, right: &right_label, formula: prediction, report: &report };
        serde_json::to_string(&record).expect("report serializes") + "\n"
    } else {
        let mut s = report_table(&format!("{label} x {right_label}"), &report);
        if let Some(f) = prediction {
            let _ = writeln!(
                s,
                "formula           min({}, {}) = {}  (xi {}, lambda'(G) {})",
                f.edge_term, f.layer_term, f.predicted, f.xi, f.lambda_prime_left
            );
        }
        s
    };
    emit(out, &text)?;
    Ok(0)
}

fn render_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    Ok(match format {
        GraphFormat::Graph6 => emit_graph6(g)? + "\n",
        GraphFormat::EdgeList => g.to_edge_list(),
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GenRecord<'a> {
    index: usize,
    label: &'a str,
    order: usize,
    size: usize,
    graph6: String,
}

fn generate(config: &RunConfig, a: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let items: Vec<CorpusItem> = if let Some(name) = &a.family {
        let (label, graph) = family_graph(name, a.n.as_deref())?;
        vec![CorpusItem { index: 0, label, graph }]
    } else if let Some(spec) = &a.corpus {
        spec.parse::<CorpusSpec>()?.items()?
    } else if let Some(r) = &a.random {
        let bad = || Error::InvalidParameter(format!("--random must be N:P, got `{r}`"));
        let (n, p) = r.split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let p: f64 = p.trim().parse().map_err(|_| bad())?;
        (0..a.count)
            .map(|i| {
                let seed = config.seed.wrapping_add(i as u64);
                Ok(CorpusItem { index: i, label: format!("random:{n}:{p}:{seed}"), graph: erdos_renyi(n, p, seed)? })
            })
            .collect::<Result<_>>()?
    } else {
        return Err(Error::Precondition("gen needs --family, --corpus or --random".into()));
    };
    let mut text = String::new();
    for item in &items {
        if config.json {
            let record = GenRecord {
                index: item.index,
                label: &item.label,
                order: item.graph.order(),
                size: item.graph.size(),
                graph6: emit_graph6(&item.graph)?,
            };
            text += &(serde_json::to_string(&record).expect("record serializes") + "\n");
        } else {
            if a.format == GraphFormat::EdgeList && items.len() > 1 {
                let _ = writeln!(text, "# {} {}", item.index, item.label);
            }
            text += &render_graph(&item.graph, a.format)?;
        }
    }
    emit(out, &text)?;
    Ok(0)
}

fn verify(
    config: &RunConfig,
    v: &VerifyArgs,
    table: bool,
    pool: Option<&rayon::ThreadPool>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let claims = match (&v.claim, table) {
        (Some(c), _) => parse_claims(c)?,
        (None, true) => ClaimId::ALL.to_vec(),
        (None, false) => return Err(Error::Precondition("verify needs --claim=<id|all>".into())),
    };
    if claims.is_empty() {
        return Err(Error::Precondition("no claims selected".into()));
    }
    let corpus =
        if claims.iter().any(|c| c.takes_graph()) { v.corpus.parse::<CorpusSpec>()?.items()? } else { Vec::new() };
    let harness = HarnessConfig {
        limits: Limits::with_oracle_order(config.budget as usize),
        max_product_order: v.max_product_order as usize,
        time_cap: Some(Duration::from_secs(config.time_cap)),
        probe_small_n: v.probe_small_n,
    };
    let (summary, results) = in_pool(pool, || sweep(&corpus, &claims, v.n.as_deref(), &harness))?;
    let mut text = String::new();
    if config.json {
        for r in &results {
            text += &r.to_json_line();
            text.push('\n');
        }
    } else if table {
        text = claim_table(&claims, &results);
    } else {
        for r in &results {
            text += &result_line(r);
        }
    }
    emit(out, &text)?;
    let _ = writeln!(
        err,
        "total {} | verified {} | counterexample {} | hypothesis-not-met {} | skipped {} | exploratory {} ({} counterexample)",
        summary.total,
        summary.verified,
        summary.counterexample,
        summary.hypothesis_not_met,
        summary.skipped_over_budget,
        summary.exploratory,
        summary.exploratory_counterexample
    );
    Ok(summary.exit_code())
}

fn verdict_name(r: &ClaimCheckResult) -> String {
    serde_json::to_value(r.verdict).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

/// One human-readable line per result; counterexamples carry the graph6
/// string and the full detail.
pub fn result_line(r: &ClaimCheckResult) -> String {
    let mut s = format!(
        "{:<8} n={:<3} {:<24} {:<20} lhs={} rhs={}",
        r.claim_id,
        r.instance.n,
        r.instance.graph,
        verdict_name(r) + if r.exploratory { " (exploratory)" } else { "" },
        show(r.detail.lhs),
        show(r.detail.rhs)
    );
    if r.verdict == crate::harness::Verdict::Counterexample {
        let _ = write!(
            s,
            " graph6={} detail={}",
            r.instance.graph6,
            serde_json::to_string(&r.detail).expect("detail serializes")
        );
    }
    s.push('\n');
    s
}

fn claim_table(claims: &[ClaimId], results: &[ClaimCheckResult]) -> String {
    let mut order: Vec<ClaimId> = claims.to_vec();
    order.sort();
    order.dedup();
    let mut s = format!(
        "{:<8} {:>9} {:>15} {:>19} {:>8} {:>12}\n",
        "claim", "verified", "counterexample", "hypothesis-not-met", "skipped", "exploratory"
    );
    for c in order {
        let mine: Vec<_> = results.iter().filter(|r| r.claim_id == c).cloned().collect();
        let t = crate::harness::SweepSummary::from_results(&mine);
        let _ = writeln!(
            s,
            "{:<8} {:>9} {:>15} {:>19} {:>8} {:>12}",
            c.as_str(),
            t.verified,
            t.counterexample,
            t.hypothesis_not_met,
            t.skipped_over_budget,
            t.exploratory
        );
    }
    for r in results.iter().filter(|r| r.verdict == crate::harness::Verdict::Counterexample) {
        s += &result_line(r);
    }
    s
}
