use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hyperembed::bounds::{self, BwSource};
use hyperembed::constructions::{self, AntiMatching};
use hyperembed::oracle;
use hyperembed::table::table1;
use hyperembed::verify::{self, Scope};
use hyperembed::{metrics, Embedding, Error, Family, FamilyDescriptor, Graph};

#[derive(Parser)]
#[command(
    name = "hyperembed",
    version,
    about = "Embeddings of graphs into hypercubes: constructions, metrics, bounds and exhaustive oracles"
)]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include per-edge detail in metric reports.
    #[arg(long, global = true)]
    full: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Hypercube,
    Folded,
    Multipartite,
    Wheel,
    CliqueProduct,
    Complete,
    Cycle,
    Custom,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph of a named family.
    Gen(GenArgs),
    /// Build one of the embedding constructions.
    Embed {
        #[command(subcommand)]
        kind: EmbedKind,
    },
    /// Evaluate dilation, wirelength and congestion of an embedding file.
    Eval {
        #[arg(long)]
        embedding: PathBuf,
    },
    /// Lower bounds for embedding a graph of order 2^n into Q_n.
    Bounds {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        host_dim: Option<u32>,
        /// Guest bisection width, or `auto`.
        #[arg(long, default_value = "auto")]
        bw: String,
    },
    /// Exhaustive optima for small instances.
    Oracle {
        #[command(subcommand)]
        quantity: OracleKind,
    },
    /// Recompute the summary table at dimension n.
    Table1 {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        p: u32,
    },
    /// Run the verification checks.
    Verify {
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Dimension, for hypercube and folded.
    #[arg(long)]
    n: Option<usize>,
    /// Vertex count, for wheel, complete and cycle.
    #[arg(long)]
    order: Option<usize>,
    /// Comma-separated part or clique sizes.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Graph JSON file, for custom.
    #[arg(long)]
    source: Option<PathBuf>,
}

#[derive(Subcommand)]
enum EmbedKind {
    Multipartite {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
    },
    Folded {
        #[arg(long)]
        n: u32,
    },
    Wheel {
        #[arg(long)]
        n: u32,
    },
    CliqueProduct {
        #[arg(long)]
        n: u32,
    },
    /// Pairs each anti-matching edge onto an antipodal pair of Q_n.
    Antimatching {
        #[arg(long)]
        graph: PathBuf,
        /// JSON list of [u, v] pairs; computed when absent.
        #[arg(long)]
        pairs: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OracleTarget {
    #[arg(long)]
    graph: PathBuf,
    /// Defaults to the smallest cube holding the graph.
    #[arg(long)]
    host_dim: Option<u32>,
}

#[derive(Subcommand)]
enum OracleKind {
    Dilation(OracleTarget),
    Wirelength(OracleTarget),
    Bw {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Maximum induced edge counts in a product of cliques, for every subset size.
    Lindsey {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) => Failure::Io(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = std::result::Result<String, Failure>;

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Accepts a graph JSON object or a family descriptor.
fn load_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    let text = read(path)?;
    match Graph::from_json(&text) {
        Ok(g) => Ok(g),
        Err(graph_err) => match serde_json::from_str::<FamilyDescriptor>(&text) {
            Ok(d) => Ok(d.build()?),
            Err(_) => Err(graph_err.into()),
        },
    }
}

fn unsupported(format: Format, cmd: &str) -> Failure {
    let name = match format {
        Format::Json => "json",
        Format::Text => "text",
        Format::Dot => "dot",
    };
    Failure::Usage(format!("{cmd} does not support --format {name}"))
}

fn graph_text(g: &Graph) -> String {
    let mut out = format!(
        "{}: order {}, {} edges\n",
        g.name(),
        g.order(),
        g.edge_count()
    );
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn gen(a: &GenArgs, format: Format) -> CliResult {
    let need = |x: Option<usize>, flag: &str| {
        x.map(|v| vec![v])
            .ok_or_else(|| Failure::Usage(format!("this family needs --{flag}")))
    };
    let d = match a.family {
        FamilyArg::Hypercube => FamilyDescriptor::new(Family::Hypercube, need(a.n, "n")?),
        FamilyArg::Folded => FamilyDescriptor::new(Family::Folded, need(a.n, "n")?),
        FamilyArg::Wheel => FamilyDescriptor::new(Family::Wheel, need(a.order, "order")?),
        FamilyArg::Complete => FamilyDescriptor::new(Family::Complete, need(a.order, "order")?),
        FamilyArg::Cycle => FamilyDescriptor::new(Family::Cycle, need(a.order, "order")?),
        FamilyArg::Multipartite => FamilyDescriptor::new(Family::Multipartite, a.parts.clone()),
        FamilyArg::CliqueProduct => FamilyDescriptor::new(Family::CliqueProduct, a.parts.clone()),
        FamilyArg::Custom => FamilyDescriptor::custom(
            a.source
                .clone()
                .ok_or_else(|| Failure::Usage("custom needs --source".into()))?,
        ),
    };
    if let Some(src) = &d.source {
        read(src)?;
    }
    let g = d.build()?;
    Ok(match format {
        Format::Json => g.to_json() + "\n",
        Format::Dot => g.to_dot(),
        Format::Text => graph_text(&g),
    })
}

fn embed(kind: &EmbedKind, format: Format, full: bool) -> CliResult {
    let e = match kind {
        EmbedKind::Multipartite { n, p } => constructions::multipartite_embedding(*n, *p)?,
        EmbedKind::Folded { n } => constructions::folded_identity_embedding(*n)?,
        EmbedKind::Wheel { n } => constructions::wheel_gray_embedding(*n)?,
        EmbedKind::CliqueProduct { n } => constructions::clique_product_embedding(*n)?,
        EmbedKind::Antimatching { graph, pairs } => {
            let g = load_graph(graph)?;
            let am = match pairs {
                Some(path) => {
                    serde_json::from_str::<AntiMatching>(&read(path)?).map_err(Error::from)?
                }
                None => bounds::has_perfect_antimatching(&g).ok_or_else(|| {
                    Failure::Usage(format!("{} has no perfect anti-matching", g.name()))
                })?,
            };
            constructions::antimatching_embedding(&g, &am)?
        }
    };
    Ok(match format {
        Format::Json => e.to_json() + "\n",
        Format::Dot => e.to_dot(),
        Format::Text => metrics::evaluate(&e).to_text(),
    })
    .map(|s| {
        if full && format == Format::Text {
            s + &e.to_json() + "\n"
        } else {
            s
        }
    })
}

fn eval(path: &Path, format: Format, full: bool) -> CliResult {
    let e = Embedding::from_json(&read(path)?)?;
    let report = metrics::evaluate(&e);
    match format {
        Format::Json => Ok(json(&report.to_json_value(full))),
        Format::Text => Ok(report.to_text()),
        Format::Dot => Ok(e.to_dot()),
    }
}

fn smallest_dim(g: &Graph) -> u32 {
    g.order().next_power_of_two().trailing_zeros()
}

fn run_bounds(path: &Path, host_dim: Option<u32>, bw: &str, format: Format) -> CliResult {
    let g = load_graph(path)?;
    let bw: BwSource = bw.parse()?;
    let report = bounds::bound_report(&g, host_dim.unwrap_or_else(|| smallest_dim(&g)), bw)?;
    match format {
        Format::Json => Ok(json(&report)),
        Format::Text => {
            let v = serde_json::to_value(&report).map_err(Error::from)?;
            let mut out = String::new();
            for (k, val) in v.as_object().expect("struct") {
                out.push_str(&format!("{k}: {val}\n"));
            }
            Ok(out)
        }
        Format::Dot => Err(unsupported(format, "bounds")),
    }
}

fn run_oracle(kind: &OracleKind, format: Format) -> CliResult {
    if format == Format::Dot {
        return Err(unsupported(format, "oracle"));
    }
    let cert = match kind {
        OracleKind::Dilation(t) => {
            let g = load_graph(&t.graph)?;
            oracle::oracle_dilation(&g, t.host_dim.unwrap_or_else(|| smallest_dim(&g)))?
        }
        OracleKind::Wirelength(t) => {
            let g = load_graph(&t.graph)?;
            oracle::oracle_wirelength(&g, t.host_dim.unwrap_or_else(|| smallest_dim(&g)))?
        }
        OracleKind::Bw { graph } => oracle::oracle_bisection_width(&load_graph(graph)?)?,
        OracleKind::Lindsey { parts } => {
            let profile = oracle::oracle_lindsey_profile(parts)?;
            return Ok(match format {
                Format::Json => {
                    json(&serde_json::json!({ "parts": parts, "max_induced_edges": profile }))
                }
                _ => profile
                    .iter()
                    .enumerate()
                    .map(|(m, v)| format!("{m} {v}\n"))
                    .collect(),
            });
        }
    };
    Ok(match format {
        Format::Json => json(&cert),
        _ => format!(
            "{:?} = {} ({} search nodes)\nwitness: {}\n",
            cert.quantity,
            cert.value,
            cert.search_space,
            serde_json::to_string(&cert.witness).map_err(Error::from)?
        ),
    })
}

fn run(cli: &Cli) -> CliResult {
    let fmt = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Gen(a) => gen(a, fmt(Format::Json)),
        Command::Embed { kind } => embed(kind, fmt(Format::Json), cli.full),
        Command::Eval { embedding } => eval(embedding, fmt(Format::Json), cli.full),
        Command::Bounds {
            graph,
            host_dim,
            bw,
        } => run_bounds(graph, *host_dim, bw, fmt(Format::Json)),
        Command::Oracle { quantity } => run_oracle(quantity, fmt(Format::Json)),
        Command::Table1 { n, p } => {
            let t = table1(*n, *p)?;
            let out = match fmt(Format::Text) {
                Format::Text => t.to_text(),
                Format::Json => json(&t),
                f => return Err(unsupported(f, "table1")),
            };
            if t.ok {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Verify { scope, max_n } => {
            let scope: Scope = scope.parse()?;
            let r = verify::run(scope, *max_n, cli.seed)?;
            let out = match fmt(Format::Json) {
                Format::Json => json(&r),
                Format::Text => r.to_text(),
                f => return Err(unsupported(f, "verify")),
            };
            if r.ok() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
