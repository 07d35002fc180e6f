//! `lly`: verification runs for exact graph curvature, connectivity, and
//! the small-graph censuses, with JSON (and some CSV) reports.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a checked assertion
//! found a counterexample (including a negative edge in curvature scan
//! mode), 3 an exact-arithmetic enumeration budget was exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lly_core::bipartite::enumerate_bipartite_census;
use lly_core::connectivity::{analyze_cut, edge_connectivity, CutAnalysis, CutCertificate};
use lly_core::curvature::{curvature_profile, kappa_lly};
use lly_core::enumerate::connected_census;
use lly_core::families::{generate, interior_vertices, verify_family, FamilyCutReport, FamilySpec};
use lly_core::io::{from_adj_text, from_graph6_line};
use lly_core::rational::Rational;
use lly_core::{Error, Graph};

const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lly",
    version,
    about = "Exact edge curvature, minimum cuts, and exhaustive small-graph checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Edge curvature, for every edge or one chosen pair
    Curvature(CurvatureArgs),
    /// Edge connectivity with a minimum cut certificate
    Connectivity(ConnectivityArgs),
    /// Minimum cut structure: cut graph, edge counts, cost and transport bounds
    CutAnalyze(CutAnalyzeArgs),
    /// Sweep all connected graph classes up to a vertex bound
    Census(CensusArgs),
    /// Sweep all bipartite graph classes up to an edge bound
    BipartiteCensus(BipartiteCensusArgs),
    /// Generate a family window, certify its interior, and verify it
    Family(FamilyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file to read
    #[arg(long)]
    input: PathBuf,
    /// Input format; inferred from the extension when omitted
    #[arg(long, value_parser = ["graph6", "adj"])]
    format: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads; reports are byte-identical for any value
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CurvatureArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Only this vertex pair instead of the whole profile
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    edge: Option<Vec<usize>>,
    /// Stop the scan at the first negative edge
    #[arg(long)]
    early_exit: bool,
    /// Emit JSON (the default)
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV rows instead of JSON
    #[arg(long)]
    csv: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct ConnectivityArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct CutAnalyzeArgs {
    /// Graph file to analyze directly
    #[arg(long, required_unless_present = "spec", conflicts_with = "spec")]
    input: Option<PathBuf>,
    /// Input format; inferred from the extension when omitted
    #[arg(long, value_parser = ["graph6", "adj"])]
    format: Option<String>,
    /// Family window description: also restrict cuts to the certified interior
    #[arg(long)]
    spec: Option<PathBuf>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct CensusArgs {
    /// Largest vertex count to sweep
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Allow the long seven-vertex sweep
    #[arg(long)]
    extended: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct BipartiteCensusArgs {
    /// Largest edge count to sweep
    #[arg(long, default_value_t = 8)]
    max_edges: usize,
    /// Emit JSON (the default)
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV rows instead of JSON
    #[arg(long)]
    csv: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family description file (JSON)
    #[arg(long)]
    spec: PathBuf,
    /// Override the layer count of the description
    #[arg(long)]
    layers: Option<usize>,
    #[command(flatten)]
    run: RunArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 1 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": e.to_string() }));
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(EXIT_BUDGET),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Curvature(args) => cmd_curvature(args),
        Command::Connectivity(args) => cmd_connectivity(args),
        Command::CutAnalyze(args) => cmd_cut_analyze(args),
        Command::Census(args) => cmd_census(args),
        Command::BipartiteCensus(args) => cmd_bipartite_census(args),
        Command::Family(args) => cmd_family(args),
    }
}

fn set_jobs(jobs: Option<usize>) -> Result<(), Error> {
    let Some(n) = jobs else { return Ok(()) };
    if n == 0 {
        return Err(Error::InvalidSpec("--jobs must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::InvalidSpec(format!("worker pool: {e}")))
}

fn read_graph(path: &Path, format: Option<&str>) -> Result<Graph, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let fmt = match format {
        Some(f) => f.to_string(),
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("g6") | Some("graph6") => "graph6".to_string(),
            _ => "adj".to_string(),
        },
    };
    match fmt.as_str() {
        "graph6" => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Error::Parse("empty graph6 file".into()))?;
            from_graph6_line(line.trim())
        }
        _ => from_adj_text(&text),
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct EdgeCurvatureOut {
    edge: (usize, usize),
    #[serde(with = "lly_core::rational::serde_repr")]
    kappa_lly: Rational,
}

fn cmd_curvature(args: CurvatureArgs) -> Result<u8, Error> {
    set_jobs(args.run.jobs)?;
    let g = read_graph(&args.input.input, args.input.format.as_deref())?;
    if let Some(pair) = &args.edge {
        let (u, v) = (pair[0], pair[1]);
        let kappa = kappa_lly(&g, u, v)?;
        let out = EdgeCurvatureOut {
            edge: (u, v),
            kappa_lly: kappa.clone(),
        };
        let text = if args.csv {
            format!(
                "u,v,kappa_lly\n{u},{v},{}\n",
                lly_core::rational::display(&kappa)
            )
        } else {
            serde_json::to_string_pretty(&out).expect("report serializes")
        };
        emit(&args.run.output, &text)?;
        return Ok(0);
    }
    let report = curvature_profile(&g, args.early_exit)?;
    let text = if args.csv {
        report.to_csv()
    } else {
        report.to_json()
    };
    emit(&args.run.output, &text)?;
    Ok(if report.nonnegative {
        0
    } else {
        EXIT_COUNTEREXAMPLE
    })
}

#[derive(Serialize)]
struct ConnectivityReport {
    vertex_count: usize,
    edge_count: usize,
    min_degree: usize,
    edge_connectivity: u64,
    matches_min_degree: bool,
    cut: CutCertificate,
}

fn cmd_connectivity(args: ConnectivityArgs) -> Result<u8, Error> {
    set_jobs(args.run.jobs)?;
    let g = read_graph(&args.input.input, args.input.format.as_deref())?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let (kappa, cert) = edge_connectivity(&g);
    let report = ConnectivityReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        min_degree: g.min_degree(),
        edge_connectivity: kappa,
        matches_min_degree: kappa as usize == g.min_degree(),
        cut: cert,
    };
    emit(
        &args.run.output,
        &serde_json::to_string_pretty(&report).expect("report serializes"),
    )?;
    Ok(0)
}

/// Whole-graph analysis of a family window: the raw minimum cut, which is
/// usually a boundary artifact, next to the certified interior cuts.
#[derive(Serialize)]
struct TruncationCutReport {
    global: CutAnalysis,
    global_cut_touches_boundary: bool,
    claimed_interior_degree: Option<usize>,
    interior_cuts: Vec<FamilyCutReport>,
}

fn analysis_clean(analysis: &CutAnalysis) -> bool {
    analysis
        .edges
        .iter()
        .all(|e| e.prose_agrees && e.claim_holds.unwrap_or(true) && e.star_holds.unwrap_or(true))
}

fn cmd_cut_analyze(args: CutAnalyzeArgs) -> Result<u8, Error> {
    set_jobs(args.run.jobs)?;
    if let Some(spec_path) = &args.spec {
        let text = std::fs::read_to_string(spec_path)
            .map_err(|e| Error::Io(format!("{}: {e}", spec_path.display())))?;
        let spec = FamilySpec::from_json(&text)?;
        let t = generate(&spec)?;
        let global = analyze_cut(&t.graph)?;
        let inner = interior_vertices(&t.graph, &t.interior_edges);
        let global_cut_touches_boundary = global
            .cut_edges
            .iter()
            .any(|&(u, v)| !inner.contains(&u) || !inner.contains(&v));
        let family = verify_family(&spec)?;
        let ok = analysis_clean(&global) && family.cuts.iter().all(|c| c.ok);
        let report = TruncationCutReport {
            global,
            global_cut_touches_boundary,
            claimed_interior_degree: family.claimed_degree,
            interior_cuts: family.cuts,
        };
        emit(
            &args.run.output,
            &serde_json::to_string_pretty(&report).expect("report serializes"),
        )?;
        return Ok(if ok { 0 } else { EXIT_COUNTEREXAMPLE });
    }
    let input = args.input.as_ref().expect("clap enforces input xor spec");
    let g = read_graph(input, args.format.as_deref())?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let analysis = analyze_cut(&g)?;
    let ok = analysis_clean(&analysis);
    emit(
        &args.run.output,
        &serde_json::to_string_pretty(&analysis).expect("report serializes"),
    )?;
    Ok(if ok { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_census(args: CensusArgs) -> Result<u8, Error> {
    set_jobs(args.run.jobs)?;
    if args.max_n >= 7 && !args.extended {
        return Err(Error::InvalidSpec(
            "sweeps past 6 vertices take a while; pass --extended to allow".into(),
        ));
    }
    let report = connected_census(args.max_n, true)?;
    emit(&args.run.output, &report.to_json())?;
    Ok(if report.ok() { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_bipartite_census(args: BipartiteCensusArgs) -> Result<u8, Error> {
    set_jobs(args.run.jobs)?;
    let census = enumerate_bipartite_census(args.max_edges)?;
    let text = if args.csv {
        census.to_csv()
    } else {
        census.to_json()
    };
    emit(&args.run.output, &text)?;
    Ok(if census.ok() { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_family(args: FamilyArgs) -> Result<u8, Error> {
    set_jobs(args.run.jobs)?;
    let text = std::fs::read_to_string(&args.spec)
        .map_err(|e| Error::Io(format!("{}: {e}", args.spec.display())))?;
    let mut spec = FamilySpec::from_json(&text)?;
    if let Some(layers) = args.layers {
        spec.layers = layers;
        spec.validate()?;
    }
    let report = verify_family(&spec)?;
    emit(&args.run.output, &report.to_json())?;
    Ok(if report.ok { 0 } else { EXIT_COUNTEREXAMPLE })
}
