use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use idindex::format::{
    class_docs, parse_coloring, parse_ranks, to_json, AnalysisDoc, CertificateDoc, CodeReport,
    IdNumberDoc, RanksDoc, StringReport,
};
use idindex::input::{from_edge_list_file, from_family, read_text, LoadedGraph};
use idindex::sweep::SweepError;
use idindex::{id_index_parallel, run_sweep, RandomSpec, SweepConfig, SweepFamily, SweepSource};
use idindex_core::{
    all_pairs_distances, code_table, construct_assignment, distance_profile, expected_id_index,
    greedy_upper_bound, id_index_exact, id_number_exact, idi_lower_bound, is_distinguishing,
    is_id_coloring, multipartite_binomial_bound, string_table, tuplet_classes,
    universal_assignment, FamilySpec, Limits, SolveError,
};

/// Exact ID-index and ID-number computations on small graphs.
#[derive(Parser)]
#[command(name = "idindex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the ID-index (default), the ID-number, or a heuristic bound.
    Compute(ComputeArgs),
    /// Check a rank assignment or coloring and print its strings or codes.
    Verify(VerifyArgs),
    /// Print twin classes, lower bounds and the distance profile.
    Analyze(AnalyzeArgs),
    /// Print the closed-form rank assignment for a family member.
    Construct(ConstructArgs),
    /// Compare the exact solver against known values over many graphs.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Edgelist,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Family spec such as `petersen`, `grid:3x4` or `caterpillar:2,4,2,2,4,2`.
    #[arg(long)]
    family: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    source: Source,
    /// Format of `--input`.
    #[arg(long, value_enum, default_value = "edgelist")]
    format: InputFormat,
}

impl GraphArgs {
    fn load(&self) -> anyhow::Result<LoadedGraph> {
        let InputFormat::Edgelist = self.format;
        Ok(match (&self.source.family, &self.source.input) {
            (Some(spec), _) => from_family(spec)?,
            (_, Some(path)) => from_edge_list_file(path)?,
            _ => unreachable!("clap requires one source"),
        })
    }
}

#[derive(Args)]
struct SolverArgs {
    /// Partition-search node budget.
    #[arg(long, default_value_t = Limits::default().max_nodes)]
    budget_nodes: u64,
    /// Single-threaded search with lexicographically least certificates.
    #[arg(long, default_value_t = true, num_args = 0..=1, default_missing_value = "true", action = clap::ArgAction::Set)]
    deterministic: bool,
}

impl SolverArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_nodes: self.budget_nodes,
            ..Limits::default()
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Compute the ID-number instead.
    #[arg(long, conflicts_with = "heuristic")]
    id_number: bool,
    /// Greedy upper bound instead of the exact search.
    #[arg(long)]
    heuristic: bool,
    /// Seed for `--heuristic`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    solver: SolverArgs,
    /// Write the JSON here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
#[group(id = "assignment", required = true, multiple = false)]
struct AssignmentSource {
    /// JSON file `{"ranks": [...]}`.
    #[arg(long)]
    ranks: Option<PathBuf>,
    /// JSON file `{"red": [...]}`.
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Use the closed-form construction for the family.
    #[arg(long)]
    construct: bool,
    /// Use powers of two.
    #[arg(long)]
    universal: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    assignment: AssignmentSource,
    /// Write the JSON here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Write the JSON here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Powers of two, valid for any graph.
    #[arg(long)]
    universal: bool,
    /// Write the JSON here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// `path`, `cycle`, `complete`, `prism`, `bipartite` or `grid:<m>`.
    #[arg(long, requires_all = ["from", "to"], conflicts_with = "random")]
    family: Option<String>,
    /// First parameter.
    #[arg(long)]
    from: Option<usize>,
    /// Last parameter.
    #[arg(long)]
    to: Option<usize>,
    /// Random connected graphs: `n=6..8,count=200,seed=7[,p=0.5]`.
    #[arg(long, required_unless_present = "family")]
    random: Option<String>,
    #[command(flatten)]
    solver: SolverArgs,
    /// Record wall-clock milliseconds per row.
    #[arg(long)]
    timing: bool,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Also write the rows as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

enum Failure {
    Usage(anyhow::Error),
    Budget(String),
    Invariant(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Invariant(_) => 4,
            Failure::Mismatch(_) => 5,
        }
    }
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

fn solve_failure(e: SolveError) -> Failure {
    match e {
        SolveError::Graph(g) => Failure::Usage(g.into()),
        SolveError::BudgetExceeded {
            lower,
            upper,
            nodes,
        } => {
            let upper = upper.map_or_else(|| "?".to_owned(), |u| u.to_string());
            Failure::Budget(format!(
                "budget exceeded after {nodes} nodes; answer lies in [{lower}, {upper}]"
            ))
        }
        SolveError::Invariant(msg) => Failure::Invariant(msg),
    }
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(path) => {
            fs::write(path, text).map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn family_of(g: &LoadedGraph, what: &str) -> Result<FamilySpec, Failure> {
    g.spec
        .clone()
        .ok_or_else(|| Failure::Usage(anyhow!("{what} needs --family")))
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let g = args.graph.load()?.graph;
    let text = if args.id_number {
        let r = id_number_exact(&g, args.solver.limits()).map_err(solve_failure)?;
        to_json(&IdNumberDoc::new(&r))
    } else if args.heuristic {
        let cert = greedy_upper_bound(&g, args.seed).map_err(|e| Failure::Usage(e.into()))?;
        to_json(&CertificateDoc::new(&cert))
    } else {
        let cert = if args.solver.deterministic {
            id_index_exact(&g, args.solver.limits())
        } else {
            id_index_parallel(&g, args.solver.limits())
        }
        .map_err(solve_failure)?;
        to_json(&CertificateDoc::new(&cert))
    };
    emit(&text, args.json.as_deref())
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let loaded = args.graph.load()?;
    let g = &loaded.graph;
    let dm = all_pairs_distances(g)?;
    let a = &args.assignment;
    let text = if let Some(path) = &a.coloring {
        let c = parse_coloring(&read_text(path)?, g.n())?;
        let table = code_table(&dm, &c)?;
        to_json(&CodeReport::new(&c, &table, is_id_coloring(&table)))
    } else {
        let f = if let Some(path) = &a.ranks {
            parse_ranks(&read_text(path)?)?
        } else if a.universal {
            universal_assignment(g.n())
        } else {
            construct_assignment(&family_of(&loaded, "--construct")?)?
        };
        let table = string_table(&dm, &f)?;
        to_json(&StringReport::new(&f, &table, is_distinguishing(&table)))
    };
    emit(&text, args.json.as_deref())
}

fn analyze(args: &AnalyzeArgs) -> Result<(), Failure> {
    let loaded = args.graph.load()?;
    let g = &loaded.graph;
    let dm = all_pairs_distances(g)?;
    let t = tuplet_classes(g);
    let multipartite_bound = match &loaded.spec {
        Some(FamilySpec::Multipartite(parts)) => {
            let mut counts = BTreeMap::new();
            for &p in parts {
                *counts.entry(p).or_insert(0) += 1;
            }
            multipartite_binomial_bound(&counts).ok()
        }
        _ => None,
    };
    let doc = AnalysisDoc {
        n: g.n(),
        edges: g.edge_count(),
        diameter: dm.diameter(),
        t: t.largest(),
        lower_bound: idi_lower_bound(g),
        multipartite_bound,
        tuplets: class_docs(&t),
        distance_profile: distance_profile(&dm).0,
        expected_id_index: loaded.spec.as_ref().and_then(expected_id_index),
    };
    emit(&to_json(&doc), args.json.as_deref())
}

fn construct(args: &ConstructArgs) -> Result<(), Failure> {
    let loaded = args.graph.load()?;
    all_pairs_distances(&loaded.graph)?;
    let f = if args.universal {
        universal_assignment(loaded.graph.n())
    } else {
        construct_assignment(&family_of(&loaded, "construct")?)?
    };
    emit(&to_json(&RanksDoc::new(&f)), args.json.as_deref())
}

fn sweep(args: &SweepArgs) -> Result<(), Failure> {
    let source = match (&args.family, &args.random) {
        (Some(family), _) => SweepSource::Family {
            family: family.parse::<SweepFamily>()?,
            from: args.from.expect("clap requires --from"),
            to: args.to.expect("clap requires --to"),
        },
        (_, Some(spec)) => SweepSource::Random(spec.parse::<RandomSpec>()?),
        _ => unreachable!("clap requires a source"),
    };
    let config = SweepConfig {
        source,
        limits: args.solver.limits(),
        parallel: !args.solver.deterministic,
        timing: args.timing,
    };
    let report = run_sweep(&config).map_err(|e| match e {
        SweepError::Usage(msg) => Failure::Usage(anyhow!(msg)),
        SweepError::Solver(e) => solve_failure(e),
    })?;
    emit(&report.to_csv(), args.csv.as_deref())?;
    if let Some(path) = &args.json {
        emit(&to_json(&report), Some(path))?;
    }
    match (report.mismatches(), report.budget_overruns()) {
        (0, 0) => Ok(()),
        (0, b) => Err(Failure::Budget(format!(
            "{b} graph(s) exceeded the node budget"
        ))),
        (m, _) => Err(Failure::Mismatch(format!(
            "{m} graph(s) disagree with the expected ID-index"
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Analyze(a) => analyze(a),
        Command::Construct(a) => construct(a),
        Command::Sweep(a) => sweep(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Usage(e) => eprintln!("error: {e:#}"),
                Failure::Budget(msg) | Failure::Invariant(msg) | Failure::Mismatch(msg) => {
                    eprintln!("error: {msg}")
                }
            }
            ExitCode::from(failure.code())
        }
    }
}
