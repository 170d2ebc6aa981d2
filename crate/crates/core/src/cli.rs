//! Command-line front end.
//!
//! Exit codes: 0 success (SAT for `search`), 1 certification failure,
//! 20 UNSAT, 30 search budget exhausted, 64 usage error, 65 unreadable or
//! invalid input document, 74 output could not be written.

use std::collections::BTreeSet;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::coloring::{c_fn, sigma_hk, Color, EdgeColoring};
use crate::constructions::{
    build_fixture, build_fn, build_hk, Fixture, FnParams, HkParams, LabeledTriangulation,
};
use crate::graph::{enumerate_cycles, is_separating_cycle, ConnectivityOptions};
use crate::io::{
    bundle_value, graph_value, outcome_value, to_dot, to_json_text, ColoringDocument,
    DocumentError, InputDocument, ProblemDocument,
};
use crate::search::{decide, Budget, SearchProblem, SearchStatus};
use crate::verifier::{certify, count_rainbow_cycles, CertifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFICATION_FAILED: i32 = 1;
pub const EXIT_UNSAT: i32 = 20;
pub const EXIT_BUDGET: i32 = 30;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_IO: i32 = 74;

pub const ENV_BUDGET_NODES: &str = "PLANAR_RAINBOW_BUDGET_NODES";
pub const ENV_BUDGET_SECONDS: &str = "PLANAR_RAINBOW_BUDGET_SECONDS";

#[derive(Debug, Parser)]
#[command(
    name = "planar-rainbow",
    version,
    about = "Edge-colored planar triangulations without rainbow cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a triangulation and emit its graph document
    Construct(ConstructArgs),
    /// Build a family member together with its canonical coloring
    Color(ConstructArgs),
    /// Certify a coloring against a set of forbidden cycle lengths
    Verify(VerifyArgs),
    /// Decide whether a rainbow-free proper coloring exists
    Search(SearchArgs),
    /// Count cycles of one length
    Count(CountArgs),
    /// Re-emit a graph (and coloring) in another format
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Hk,
    Fn,
    Fixture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Args)]
struct Output {
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Ring-family parameter (k >= 5)
    #[arg(long)]
    k: Option<usize>,
    /// Strip-family order (n >= 3)
    #[arg(long)]
    n: Option<usize>,
    /// Fixture name
    #[arg(long)]
    name: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct Input {
    /// Graph document or graph+coloring bundle; standard input when omitted
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Coloring document, overriding any coloring in the bundle
    #[arg(long)]
    coloring: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    /// Forbidden cycle lengths, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    forbid: Vec<usize>,
    /// Enumerate every length even when the pigeonhole bound settles it
    #[arg(long)]
    no_pigeonhole: bool,
    /// Skip the brute-force connectivity cross-check
    #[arg(long)]
    no_connectivity_oracle: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Graph document or bundle; standard input when neither this nor --problem is given
    #[arg(long, conflicts_with = "problem")]
    graph: Option<PathBuf>,
    /// Problem document with graph, palette, forbid and budgets
    #[arg(long)]
    problem: Option<PathBuf>,
    #[arg(long)]
    palette: Option<Color>,
    #[arg(long, value_delimiter = ',')]
    forbid: Option<Vec<usize>>,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<u64>,
    #[arg(long)]
    no_symmetry_breaking: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    length: usize,
    /// Include every cycle in the output
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Data(_) => EXIT_DATA,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Io(m) => m,
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Data(e.to_string())
    }
}

struct Env<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let mut env = Env { stdin, stdout };
    let result = match cli.command {
        Command::Construct(a) => construct(&mut env, a, false),
        Command::Color(a) => construct(&mut env, a, true),
        Command::Verify(a) => verify(&mut env, a),
        Command::Search(a) => search(&mut env, a),
        Command::Count(a) => count(&mut env, a),
        Command::Export(a) => export(&mut env, a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

fn construct(env: &mut Env, args: ConstructArgs, with_coloring: bool) -> Result<i32, Failure> {
    let usage = |e: crate::constructions::ConstructionError| Failure::Usage(e.to_string());
    let graph = match args.family {
        Family::Hk => {
            let k = args
                .k
                .ok_or_else(|| Failure::Usage("--family hk needs --k".into()))?;
            build_hk(HkParams::new(k).map_err(usage)?).map_err(usage)?
        }
        Family::Fn => {
            let n = args
                .n
                .ok_or_else(|| Failure::Usage("--family fn needs --n".into()))?;
            build_fn(FnParams::new(n).map_err(usage)?).map_err(usage)?
        }
        Family::Fixture => {
            if with_coloring {
                return Err(Failure::Usage("fixtures have no canonical coloring".into()));
            }
            let name = args
                .name
                .ok_or_else(|| Failure::Usage("--family fixture needs --name".into()))?;
            build_fixture(name.parse::<Fixture>().map_err(usage)?)
        }
    };
    let coloring = if with_coloring {
        let c = match args.family {
            Family::Hk => sigma_hk(&graph),
            _ => c_fn(&graph),
        };
        Some(c.map_err(|e| Failure::Data(e.to_string()))?)
    } else {
        None
    };
    let text = match args.output.format {
        Format::Json => match &coloring {
            Some(c) => to_json_text(&bundle_value(&graph, Some(c))),
            None => to_json_text(&graph_value(&graph)),
        },
        Format::Dot => to_dot(&graph, coloring.as_ref()),
        Format::Text => graph_text(&graph, coloring.as_ref()),
    };
    emit(env, &args.output, &text)?;
    Ok(EXIT_OK)
}

fn verify(env: &mut Env, args: VerifyArgs) -> Result<i32, Failure> {
    let lengths: BTreeSet<usize> = args.forbid.iter().copied().collect();
    if let Some(l) = lengths.iter().find(|&&l| l < 3) {
        return Err(Failure::Usage(format!("cycle length {l} is below 3")));
    }
    let (graph, coloring) = load_input(env, &args.input)?;
    let coloring = coloring
        .ok_or_else(|| Failure::Usage("verify needs a coloring (--coloring or a bundle)".into()))?;
    let options = CertifyOptions {
        pigeonhole_shortcut: !args.no_pigeonhole,
        connectivity: ConnectivityOptions {
            run_oracle: !args.no_connectivity_oracle,
            ..ConnectivityOptions::default()
        },
    };
    let report = certify(graph.graph(), &coloring, &lengths, &options)
        .map_err(|e| Failure::Data(e.to_string()))?;
    let text = match args.output.format {
        Format::Json => to_json_text(&report),
        Format::Text => {
            let mut s = String::new();
            for (claim, ok) in &report.verdict.claims {
                s.push_str(&format!("{claim}: {}\n", if *ok { "PASS" } else { "FAIL" }));
            }
            s.push_str(&format!("all_pass: {}\n", report.passes()));
            s
        }
        Format::Dot => return Err(Failure::Usage("verify has no dot output".into())),
    };
    emit(env, &args.output, &text)?;
    Ok(if report.passes() {
        EXIT_OK
    } else {
        EXIT_CERTIFICATION_FAILED
    })
}

fn search(env: &mut Env, args: SearchArgs) -> Result<i32, Failure> {
    if args.output.format == Format::Dot {
        return Err(Failure::Usage("search has no dot output".into()));
    }
    let env_budget = env_budget()?;
    let (graph, palette, forbid, doc_budget) = match &args.problem {
        Some(path) => {
            let text = read_path(path)?;
            let doc: ProblemDocument = serde_json::from_str(&text)
                .map_err(|e| Failure::Data(format!("schema error: {e}")))?;
            let budget = doc.budget();
            let graph = doc.graph.into_graph()?;
            (
                graph,
                args.palette.unwrap_or(doc.palette),
                args.forbid.clone().unwrap_or(doc.forbid),
                Some(budget),
            )
        }
        None => {
            let palette = args
                .palette
                .ok_or_else(|| Failure::Usage("search needs --palette".into()))?;
            let forbid = args
                .forbid
                .clone()
                .ok_or_else(|| Failure::Usage("search needs --forbid".into()))?;
            let input = Input {
                graph: args.graph.clone(),
                coloring: None,
            };
            let (graph, _) = load_input(env, &input)?;
            (graph, palette, forbid, None)
        }
    };
    let base = doc_budget.unwrap_or(env_budget);
    let budget = Budget {
        nodes: args.budget_nodes.unwrap_or(base.nodes),
        seconds: args.budget_seconds.unwrap_or(base.seconds),
    };
    let problem = SearchProblem::new(graph.into_graph(), palette, forbid)
        .map_err(|e| Failure::Usage(e.to_string()))?
        .with_budget(budget)
        .with_symmetry_breaking(!args.no_symmetry_breaking);
    let outcome = decide(&problem);
    let text = match args.output.format {
        Format::Text => {
            let mut s = format!(
                "{}\nnodes: {}\nmax_depth: {}\nwall_ms: {}\n",
                outcome.status, outcome.stats.nodes, outcome.stats.max_depth, outcome.stats.wall_ms
            );
            if let Some(r) = &outcome.reason {
                s.push_str(&format!("reason: {r}\n"));
            }
            s
        }
        _ => to_json_text(&outcome_value(&outcome)),
    };
    emit(env, &args.output, &text)?;
    Ok(match outcome.status {
        SearchStatus::Sat => EXIT_OK,
        SearchStatus::Unsat => EXIT_UNSAT,
        SearchStatus::BudgetExceeded => EXIT_BUDGET,
    })
}

fn count(env: &mut Env, args: CountArgs) -> Result<i32, Failure> {
    if args.length < 3 {
        return Err(Failure::Usage(format!(
            "cycle length {} is below 3",
            args.length
        )));
    }
    if args.output.format == Format::Dot {
        return Err(Failure::Usage("count has no dot output".into()));
    }
    let (graph, coloring) = load_input(env, &args.input)?;
    let g = graph.graph();
    let cycles = enumerate_cycles(g, args.length);
    let mut separating = 0;
    for c in &cycles {
        if c.len() < g.vertex_count()
            && is_separating_cycle(g, c).map_err(|e| Failure::Data(e.to_string()))?
        {
            separating += 1;
        }
    }
    let rainbow = match &coloring {
        Some(col) => Some(
            count_rainbow_cycles(g, col, args.length).map_err(|e| Failure::Data(e.to_string()))?,
        ),
        None => None,
    };
    let text = match args.output.format {
        Format::Text => {
            let mut s = format!("{}\n", cycles.len());
            if args.list {
                for c in &cycles {
                    s.push_str(&format!("{c}\n"));
                }
            }
            s
        }
        _ => {
            let mut doc = json!({
                "length": args.length,
                "cycles": cycles.len(),
                "separating": separating,
            });
            if let Some(r) = rainbow {
                doc["rainbow"] = json!(r);
            }
            if args.list {
                doc["list"] = json!(cycles);
            }
            to_json_text(&doc)
        }
    };
    emit(env, &args.output, &text)?;
    Ok(EXIT_OK)
}

fn export(env: &mut Env, args: ExportArgs) -> Result<i32, Failure> {
    let (graph, coloring) = load_input(env, &args.input)?;
    let text = match args.output.format {
        Format::Dot => to_dot(&graph, coloring.as_ref()),
        Format::Text => graph_text(&graph, coloring.as_ref()),
        Format::Json => match &coloring {
            Some(c) => to_json_text(&bundle_value(&graph, Some(c))),
            None => to_json_text(&graph_value(&graph)),
        },
    };
    emit(env, &args.output, &text)?;
    Ok(EXIT_OK)
}

fn graph_text(graph: &LabeledTriangulation, coloring: Option<&EdgeColoring>) -> String {
    let g = graph.graph();
    let mut s = format!("n {} edges {}\n", g.vertex_count(), g.edge_count());
    for v in g.vertices() {
        let rot: Vec<String> = g.rotation(v).iter().map(|&w| graph.name(w)).collect();
        s.push_str(&format!("{}: {}\n", graph.name(v), rot.join(" ")));
    }
    if let Some(col) = coloring {
        for (e, c) in col.iter() {
            s.push_str(&format!(
                "{} {} {c}\n",
                graph.name(e.low()),
                graph.name(e.high())
            ));
        }
    }
    s
}

fn load_input(
    env: &mut Env,
    input: &Input,
) -> Result<(LabeledTriangulation, Option<EdgeColoring>), Failure> {
    let text = match &input.graph {
        Some(path) => read_path(path)?,
        None => {
            let mut s = String::new();
            env.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Data(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    let (graph_doc, bundled) = InputDocument::parse(&text)?.into_parts();
    let graph = graph_doc.into_graph()?;
    let coloring_doc = match &input.coloring {
        Some(path) => Some(
            serde_json::from_str::<ColoringDocument>(&read_path(path)?)
                .map_err(|e| Failure::Data(format!("schema error: {e}")))?,
        ),
        None => bundled,
    };
    let coloring = coloring_doc.map(|d| d.into_coloring()).transpose()?;
    Ok((graph, coloring))
}

fn read_path(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Data(format!("cannot read {}: {e}", path.display())))
}

fn emit(env: &mut Env, output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => env
            .stdout
            .write_all(text.as_bytes())
            .and_then(|_| env.stdout.flush())
            .map_err(|e| Failure::Io(format!("cannot write output: {e}"))),
    }
}

fn env_budget() -> Result<Budget, Failure> {
    let read = |name: &str, default: u64| -> Result<u64, Failure> {
        match std::env::var(name) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{name}={v} is not an integer"))),
            Err(_) => Ok(default),
        }
    };
    let d = Budget::default();
    Ok(Budget {
        nodes: read(ENV_BUDGET_NODES, d.nodes)?,
        seconds: read(ENV_BUDGET_SECONDS, d.seconds)?,
    })
}
