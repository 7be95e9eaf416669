//! Batch command-line surface over the `ftbfs` library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 resource limit (oracle search space too large).
//! `FTBFS_THREADS` caps worker parallelism.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ftbfs::*;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ftbfs",
    version,
    about = "Build, verify, approximate, and stress-test fault-tolerant BFS structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Approx,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Fault {
    Edge,
    Vertex,
}

impl From<Fault> for FaultModel {
    fn from(f: Fault) -> FaultModel {
        match f {
            Fault::Edge => FaultModel::EdgeFailure,
            Fault::Vertex => FaultModel::VertexFailure,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    LbSingle,
    LbMulti,
    Reduction,
    BadExample,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Build a fault-tolerant structure and write it to a file
    Build {
        /// Graph file ("n m" header then one "u v" line per edge)
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated source vertices, e.g. 0,4,9
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<usize>,
        /// exact: replay every tree fault; approx: greedy cover rounds
        #[arg(long, value_enum)]
        mode: Mode,
        /// Which single failures the structure must tolerate
        #[arg(long, value_enum, default_value = "edge")]
        fault: Fault,
        /// Output structure file
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a candidate structure against the defining condition
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Structure file with one "u v" line per kept edge
        #[arg(long)]
        candidate: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<usize>,
        #[arg(long, value_enum, default_value = "edge")]
        fault: Fault,
    },
    /// Generate an instance family
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Depth parameter (lb-single, lb-multi, bad-example)
        #[arg(long)]
        d: Option<usize>,
        /// Number of gadget copies / sources (lb-multi)
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        /// Set-cover file for the reduction family ("N M" header,
        /// then one line of element indices per set)
        #[arg(long)]
        setcover: Option<PathBuf>,
        /// Fan-out of the reduction's replication block
        #[arg(long = "R", default_value_t = 2)]
        r: usize,
        /// Vertex count (random)
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability (random)
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// PRNG seed (random)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output graph file
        #[arg(long)]
        out: PathBuf,
        /// Optional metadata sidecar (groups, forced families, targets)
        #[arg(long)]
        meta: Option<PathBuf>,
    },
    /// Exhaustive minimum structure size on a small instance
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sources: Vec<usize>,
        #[arg(long, value_enum, default_value = "edge")]
        fault: Fault,
        /// Abort if more than this many edges are left undecided
        #[arg(long, default_value_t = DEFAULT_FREE_LIMIT)]
        free_limit: usize,
    },
    /// Sweep a family over a parameter range and write a CSV table
    Experiment {
        /// lb-single, lb-multi, bad-example, or random
        #[arg(long)]
        family: String,
        /// Inclusive parameter range LO:HI (d for constructed families,
        /// n for random)
        #[arg(long)]
        range: String,
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "edge")]
        fault: Fault,
        /// Output CSV file
        #[arg(long)]
        csv: PathBuf,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn limit(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_LIMIT,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    if let Err(e) = init_threads() {
        eprintln!("error: {}", e.message);
        return ExitCode::from(e.code);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn init_threads() -> Result<(), CliError> {
    if let Ok(raw) = std::env::var("FTBFS_THREADS") {
        let threads: usize = raw.parse().ok().filter(|&t| t > 0).ok_or_else(|| {
            CliError::usage(format!(
                "FTBFS_THREADS must be a positive integer, got {raw:?}"
            ))
        })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::usage(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Build {
            graph,
            sources,
            mode,
            fault,
            out,
        } => cmd_build(&graph, &sources, mode, fault.into(), &out),
        Command::Verify {
            graph,
            candidate,
            sources,
            fault,
        } => cmd_verify(&graph, &candidate, &sources, fault.into()),
        Command::Gen {
            family,
            d,
            sigma,
            setcover,
            r,
            n,
            p,
            seed,
            out,
            meta,
        } => cmd_gen(family, d, sigma, setcover, r, n, p, seed, &out, meta),
        Command::Oracle {
            graph,
            sources,
            fault,
            free_limit,
        } => cmd_oracle(&graph, &sources, fault.into(), free_limit),
        Command::Experiment {
            family,
            range,
            sigma,
            p,
            seed,
            fault,
            csv,
        } => cmd_experiment(&family, &range, sigma, p, seed, fault.into(), &csv),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read_file(path)?;
    parse_graph(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn cmd_build(
    graph: &Path,
    sources: &[usize],
    mode: Mode,
    model: FaultModel,
    out: &Path,
) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    let ft = match mode {
        Mode::Exact => build_ftmbfs(&g, sources, model),
        Mode::Approx => build_approx(&g, sources, model),
    }
    .map_err(|e| CliError::usage(e.to_string()))?;
    let bound = if sources.len() == 1 {
        single_source_size_bound(g.vertex_count(), ft.stats.depths[0])
    } else {
        multi_source_size_bound(g.vertex_count(), sources.len())
    };
    write_file(out, &ft.write(&g))?;
    println!("edges={} bound={bound}", ft.size());
    Ok(0)
}

fn cmd_verify(
    graph: &Path,
    candidate: &Path,
    sources: &[usize],
    model: FaultModel,
) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    let text = read_file(candidate)?;
    let edges = parse_edge_set(&text, &g)
        .map_err(|e| CliError::usage(format!("{}: {e}", candidate.display())))?;
    match verify_ft(&g, sources, &edges, model).map_err(|e| CliError::usage(e.to_string()))? {
        None => {
            println!("OK");
            Ok(0)
        }
        Some(violation) => {
            println!("{violation}");
            Ok(EXIT_VIOLATION)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: Family,
    d: Option<usize>,
    sigma: usize,
    setcover: Option<PathBuf>,
    r: usize,
    n: Option<usize>,
    p: f64,
    seed: u64,
    out: &Path,
    meta: Option<PathBuf>,
) -> Result<u8, CliError> {
    let need_d = || d.ok_or_else(|| CliError::usage("this family requires --d"));
    let gen_err = |e: GenError| CliError::usage(e.to_string());
    let instance = match family {
        Family::LbSingle => Some(gen_lb_single(need_d()?).map_err(gen_err)?),
        Family::LbMulti => Some(gen_lb_multi(need_d()?, sigma).map_err(gen_err)?),
        Family::BadExample => Some(gen_bad_example(need_d()?).map_err(gen_err)?),
        Family::Reduction => {
            let path = setcover
                .ok_or_else(|| CliError::usage("the reduction family requires --setcover"))?;
            let text = read_file(&path)?;
            let sc = parse_setcover(&text)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            Some(gen_setcover_reduction(&sc, r).map_err(gen_err)?)
        }
        Family::Random => None,
    };

    match instance {
        Some(inst) => {
            write_file(out, &write_graph(&inst.graph))?;
            if let Some(meta_path) = meta {
                write_file(&meta_path, &inst.metadata_text())?;
            }
            let sources = inst
                .sources
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",");
            println!(
                "wrote {}: n={} m={} sources={sources}",
                out.display(),
                inst.graph.vertex_count(),
                inst.graph.edge_count()
            );
        }
        None => {
            let n = n.ok_or_else(|| CliError::usage("the random family requires --n"))?;
            let g = gen_random(n, p, seed).map_err(gen_err)?;
            if meta.is_some() {
                return Err(CliError::usage(
                    "--meta applies only to constructed families",
                ));
            }
            write_file(out, &write_graph(&g))?;
            println!(
                "wrote {}: n={} m={}",
                out.display(),
                g.vertex_count(),
                g.edge_count()
            );
        }
    }
    Ok(0)
}

fn cmd_oracle(
    graph: &Path,
    sources: &[usize],
    model: FaultModel,
    free_limit: usize,
) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    let (forced, free) =
        default_partition(&g, sources, model).map_err(|e| CliError::usage(e.to_string()))?;
    let min: BTreeSet<EdgeId> = match brute_min_ft(&g, sources, model, &forced, &free, free_limit) {
        Ok(min) => min,
        Err(e @ OracleError::SearchSpaceTooLarge { .. }) => {
            return Err(CliError::limit(e.to_string()))
        }
        Err(e) => return Err(CliError::usage(e.to_string())),
    };
    println!("minimum {}", min.len());
    for &e in &min {
        let (u, v) = g.endpoints(e);
        println!("{u} {v}");
    }
    Ok(0)
}

fn cmd_experiment(
    family: &str,
    range: &str,
    sigma: usize,
    p: f64,
    seed: u64,
    model: FaultModel,
    csv: &Path,
) -> Result<u8, CliError> {
    let family: ExperimentFamily = family.parse().map_err(CliError::usage)?;
    let (lo, hi) = range
        .split_once(':')
        .and_then(|(lo, hi)| Some((lo.parse().ok()?, hi.parse().ok()?)))
        .ok_or_else(|| CliError::usage(format!("--range must be LO:HI, got {range:?}")))?;
    let mut cfg = ExperimentConfig::new(family, lo, hi);
    cfg.sigma = sigma;
    cfg.p = p;
    cfg.seed = seed;
    cfg.model = model;
    let rows = run_experiment(&cfg).map_err(|e| CliError::usage(e.to_string()))?;
    write_file(csv, &rows_to_csv(&rows))?;
    println!("wrote {}: {} rows", csv.display(), rows.len());
    Ok(0)
}
