mod error;
mod report;
mod run;
mod spec;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use error::{exit, CliError};
use report::{ErrorBody, ErrorReport, RunReport};
use spec::{GraphSpec, Layers};

#[derive(Parser, Debug)]
#[command(
    name = "pmcount",
    version,
    about = "Exact perfect-matching counts for products of paths and cycles with trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Vertex limit for exponential steps (brute-force counting, cycle
    /// enumeration). Defaults to 40 for counting and 24 for cycles.
    #[arg(long, global = true, env = "PMCOUNT_MAX_VERTICES")]
    max_vertices: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count perfect matchings of a graph or a product with a tree.
    Count(CountArgs),
    /// Print a Pfaffian orientation of a product as an oriented edge list.
    Orient(OrientArgs),
    /// Check Pfaffian-ness of an orientation and the counting identities.
    Verify(VerifyArgs),
    /// Print the Cartesian product of two graphs as an edge list.
    Product(ProductArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Auto,
    Brute,
    Pfaffian,
    Formula,
    NarumiHosoya,
    Kasteleyn,
}

fn graph_spec(s: &str) -> Result<GraphSpec, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

/// Where the graph comes from. `--tree` additionally insists on a tree.
#[derive(Args, Debug, Serialize)]
pub struct Source {
    /// Input graph: path:N, cycle:N, star:N, tree-random:N:SEED, or an edge-list file.
    #[arg(long, value_parser = graph_spec, conflicts_with = "tree")]
    #[serde(serialize_with = "display")]
    pub graph: Option<GraphSpec>,

    /// Input tree, in the same forms as --graph.
    #[arg(long, value_parser = graph_spec)]
    #[serde(serialize_with = "display")]
    pub tree: Option<GraphSpec>,
}

fn display<S: serde::Serializer>(v: &Option<GraphSpec>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(g) => s.collect_str(g),
        None => s.serialize_none(),
    }
}

#[derive(Args, Debug, Serialize)]
pub struct CountArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: Source,

    /// Multiply the input by pN or cN (layer-major numbering).
    #[arg(long)]
    pub product: Option<Layers>,

    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,

    /// Oriented edge list of the counted graph for the Pfaffian route.
    #[arg(long)]
    pub orient_file: Option<String>,
}

#[derive(Args, Debug, Default, Serialize)]
pub struct Construction {
    /// Orientation of C4 × T.
    #[arg(long)]
    pub c4: bool,

    /// Orientation of P_N × T.
    #[arg(long, value_name = "N")]
    pub layers: Option<usize>,

    /// Orientation of P2 × G (any graph).
    #[arg(long)]
    pub double: bool,

    /// Orient the input at random with this seed instead of lexicographically.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl Construction {
    fn chosen(&self) -> usize {
        usize::from(self.c4) + usize::from(self.layers.is_some()) + usize::from(self.double)
    }
}

#[derive(Args, Debug, Serialize)]
pub struct OrientArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: Source,

    #[command(flatten)]
    #[serde(flatten)]
    pub construction: Construction,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: Source,

    /// Check that every nice even cycle is oddly oriented.
    #[arg(long)]
    pub pfaffian: bool,

    /// Check the squarish, square and brute-force identities for a tree.
    #[arg(long)]
    pub identities: bool,

    #[command(flatten)]
    #[serde(flatten)]
    pub construction: Construction,

    /// Oriented edge list to check instead of a constructed orientation.
    #[arg(long)]
    pub orient_file: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct ProductArgs {
    /// Left factor (its copies are the layers).
    #[arg(value_parser = graph_spec)]
    #[serde(serialize_with = "display_one")]
    pub left: GraphSpec,

    /// Right factor.
    #[arg(value_parser = graph_spec)]
    #[serde(serialize_with = "display_one")]
    pub right: GraphSpec,
}

fn display_one<S: serde::Serializer>(v: &GraphSpec, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn request(cli: &Cli) -> Value {
    let (name, args) = match &cli.command {
        Command::Count(a) => ("count", serde_json::to_value(a)),
        Command::Orient(a) => ("orient", serde_json::to_value(a)),
        Command::Verify(a) => ("verify", serde_json::to_value(a)),
        Command::Product(a) => ("product", serde_json::to_value(a)),
    };
    let mut map = serde_json::Map::new();
    map.insert("subcommand".into(), name.into());
    if let Ok(Value::Object(fields)) = args {
        map.extend(fields);
    }
    map.insert("max_vertices".into(), cli.max_vertices.into());
    Value::Object(map)
}

fn dispatch(cli: &Cli) -> Result<RunReport, CliError> {
    let limits = run::Limits {
        max_vertices: cli.max_vertices,
    };
    match &cli.command {
        Command::Count(a) => run::count(a, limits),
        Command::Orient(a) => run::orient(a),
        Command::Verify(a) => run::verify(a, limits),
        Command::Product(a) => run::product(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = dispatch(&cli);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let req = request(&cli);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();

    let code = match outcome {
        Ok(mut report) => {
            report.elapsed_ms = elapsed_ms;
            report.request = req;
            let code = if report.failed() {
                exit::VIOLATION
            } else {
                exit::OK
            };
            let written = match cli.format {
                Format::Human => out.write_all(report.human.as_bytes()),
                Format::Json => serde_json::to_writer_pretty(&mut out, &report)
                    .map_err(std::io::Error::from)
                    .and_then(|_| writeln!(out)),
            };
            if written.is_err() {
                exit::OTHER
            } else {
                code
            }
        }
        Err(e) => {
            if cli.format == Format::Json {
                let body = ErrorReport {
                    request: &req,
                    error: ErrorBody::from_error(&e),
                    elapsed_ms,
                };
                let _ = serde_json::to_writer_pretty(&mut out, &body);
                let _ = writeln!(out);
            }
            eprintln!("pmcount: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code)
}
