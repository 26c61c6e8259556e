use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use emdim::report::{
    construction_certificate, decomposition_report, render_table, table, verification_certificate, StructureSidecar,
    TableOptions, TableReport,
};
use emdim::{
    exact_edge_metric_dimension, exact_metric_dimension, Collision, Family, Graph, LandmarkSet, SilicateSpec,
    SolveOptions, Status, Target,
};

const EXIT_NOT_RESOLVING: u8 = 1;
const EXIT_PARTIAL: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "emdim",
    version,
    about = "Edge metric dimension of chain and cyclic silicate networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of CS_n or CC_n
    Generate(GenerateArgs),
    /// Check whether a landmark set resolves a graph
    Verify(VerifyArgs),
    /// Find a minimum resolving set
    Solve(SolveArgs),
    /// Compare bounds, constructions and exact values over a range of n
    Table(TableArgs),
    /// Report the tetrahedra and twins of a silicate graph
    Analyze(AnalyzeArgs),
    /// Build the labeled edge resolving set for CS_n or CC_n
    Construct(SpecArgs),
}

#[derive(Args)]
struct SpecArgs {
    #[arg(value_name = "FAMILY", conflicts_with = "family")]
    family_pos: Option<Family>,
    #[arg(value_name = "N", conflicts_with = "n")]
    n_pos: Option<usize>,
    #[arg(long)]
    family: Option<Family>,
    #[arg(short = 'n')]
    n: Option<usize>,
}

impl SpecArgs {
    fn spec(&self) -> Result<SilicateSpec, String> {
        let family = self
            .family
            .or(self.family_pos)
            .ok_or("missing family (chain or cyclic)")?;
        let n = self.n.or(self.n_pos).ok_or("missing n")?;
        if family == Family::Skeleton {
            return Err("skeleton networks are built from a base graph, not from n".into());
        }
        let spec = SilicateSpec { family, n };
        spec.validate().map_err(|e| e.to_string())?;
        Ok(spec)
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Edge-list output; the structure sidecar goes to `<path>.structure.json`
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print the structure sidecar instead of the edge list
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Edge-list file, or `-` for stdin
    graph: PathBuf,
    /// Landmark ids separated by commas or spaces
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    #[arg(long, default_value = "edge")]
    target: Target,
    /// Include every code in the certificate
    #[arg(long)]
    codes: bool,
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    #[arg(long, default_value = "edge")]
    target: Target,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    budget_subsets: Option<u64>,
    #[arg(long)]
    start_size: Option<usize>,
    #[arg(long)]
    max_size: Option<usize>,
    /// Only search degree-3 vertices
    #[arg(long)]
    cubic_only: bool,
    /// Write the certificate here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    /// Per-row solver budget; 0 skips the exact column
    #[arg(long)]
    budget_subsets: Option<u64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    graph: PathBuf,
    /// Candidate landmark set to check against the cubic-set conditions
    #[arg(long, allow_hyphen_values = true)]
    set: Option<String>,
}

enum Failure {
    Usage(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Solve(a) => solve(a),
        Command::Table(a) => run_table(a),
        Command::Analyze(a) => analyze(a),
        Command::Construct(a) => construct(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let graph = if path == Path::new("-") {
        Graph::parse_edge_list(io::stdin().lock())
    } else {
        let file = fs::File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        Graph::parse_edge_list(BufReader::new(file))
    };
    graph.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_set(text: &str, vertex_count: usize) -> Result<LandmarkSet, Failure> {
    let ids = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad vertex id {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LandmarkSet::new(ids, vertex_count)?)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn generate(a: GenerateArgs) -> CmdResult {
    let spec = a.spec.spec().map_err(Failure::Usage)?;
    let sil = spec.generate()?;
    let sidecar = json(&StructureSidecar::from(&sil));
    match a.output {
        Some(path) => {
            emit(&sil.graph.to_edge_list(), Some(&path))?;
            let mut side = path.into_os_string();
            side.push(".structure.json");
            emit(&sidecar, Some(Path::new(&side)))?;
        }
        None if a.json => emit(&sidecar, None)?,
        None => emit(&sil.graph.to_edge_list(), None)?,
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let set = parse_set(&a.set, g.vertex_count())?;
    let d = g.all_pairs_distances()?;
    let cert = verification_certificate(&g, &d, &set, a.target, a.codes);
    emit(&json(&cert), None)?;
    if cert.resolving {
        return Ok(0);
    }
    match &cert.witness {
        Some(Collision::Edges(e, f)) => eprintln!("edges {e} and {f} share a code"),
        Some(Collision::Vertices(u, v)) => eprintln!("vertices {u} and {v} share a code"),
        None => {}
    }
    Ok(EXIT_NOT_RESOLVING)
}

fn solve(a: SolveArgs) -> CmdResult {
    let g = read_graph(&a.graph)?;
    if a.workers == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    let opts = SolveOptions {
        target: a.target,
        start_size: a.start_size,
        max_size: a.max_size,
        restrict_to_cubic: a.cubic_only,
        workers: a.workers,
        budget_subsets: a.budget_subsets,
        ..SolveOptions::default()
    };
    let started = Instant::now();
    let cert = match a.target {
        Target::Edge => exact_edge_metric_dimension(&g, &opts)?,
        Target::Vertex => exact_metric_dimension(&g, &opts)?,
    };
    eprintln!(
        "{:?} after {} subsets in {:.3}s",
        cert.status,
        cert.stats.subsets_examined,
        started.elapsed().as_secs_f64()
    );
    emit(&format!("{}\n", cert.to_json()), a.output.as_deref())?;
    Ok(match cert.status {
        Status::Optimal => 0,
        Status::UpperBoundConditional | Status::Partial => EXIT_PARTIAL,
    })
}

fn run_table(a: TableArgs) -> CmdResult {
    if a.family == Family::Skeleton {
        return Err(Failure::Usage("table covers chain and cyclic only".into()));
    }
    if a.from > a.to {
        return Err(Failure::Usage(format!("empty range {}..{}", a.from, a.to)));
    }
    let opts = TableOptions {
        budget_subsets: a.budget_subsets,
        workers: a.workers.max(1),
    };
    let rows = table(a.family, a.from, a.to, opts)?;
    if a.json {
        emit(&json(&TableReport::new(rows)), None)?;
    } else {
        emit(&render_table(&rows), None)?;
    }
    Ok(0)
}

fn analyze(a: AnalyzeArgs) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let set = a.set.as_deref().map(|s| parse_set(s, g.vertex_count())).transpose()?;
    let report = decomposition_report(&g, set.as_ref())?;
    emit(&json(&report), None)?;
    Ok(0)
}

fn construct(a: SpecArgs) -> CmdResult {
    let spec = a.spec().map_err(Failure::Usage)?;
    let cert = construction_certificate(spec)?;
    emit(&json(&cert), None)?;
    Ok(if cert.resolving { 0 } else { EXIT_NOT_RESOLVING })
}
