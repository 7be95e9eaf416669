//! Batch experiment runner: generate, build (exact and approximate), verify,
//! and record one CSV row per parameter value, plus a log-log slope fit for
//! empirical scaling checks.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::builder::{
    build_ftmbfs, multi_source_size_bound, single_source_size_bound, FtStructure,
};
use crate::cover::build_approx;
use crate::generate::{gen_bad_example, gen_lb_multi, gen_lb_single, gen_random, GenError};
use crate::graph::{FaultModel, Graph, VertexId};
use crate::oracle::{verify_ft, OracleError};

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("empty parameter range {lo}:{hi}")]
    EmptyRange { lo: usize, hi: usize },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Error, PartialEq)]
pub enum FitError {
    #[error("need at least 4 rows for a fit, got {0}")]
    TooFewRows(usize),
    #[error("log-log fit needs positive values")]
    NonPositive,
}

/// One experiment cell. `params` is a space-separated `key=value` list that
/// carries the family parameters plus secondary measurements (approximate
/// build size, forced-family count).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentRow {
    pub family: String,
    pub params: String,
    pub n: usize,
    pub m: usize,
    pub built_edges: usize,
    pub bound: usize,
    pub verified: bool,
    pub wall_ms: u128,
}

/// Fixed CSV schema, stable column order.
pub const CSV_HEADER: &str = "family,params,n,m,built_edges,bound,verified,wall_ms";

pub fn rows_to_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.family, r.params, r.n, r.m, r.built_edges, r.bound, r.verified, r.wall_ms
        )
        .unwrap();
    }
    out
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum ExperimentFamily {
    LbSingle,
    LbMulti,
    BadExample,
    Random,
}

impl ExperimentFamily {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentFamily::LbSingle => "lb-single",
            ExperimentFamily::LbMulti => "lb-multi",
            ExperimentFamily::BadExample => "bad-example",
            ExperimentFamily::Random => "random",
        }
    }
}

impl FromStr for ExperimentFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lb-single" => Ok(ExperimentFamily::LbSingle),
            "lb-multi" => Ok(ExperimentFamily::LbMulti),
            "bad-example" => Ok(ExperimentFamily::BadExample),
            "random" => Ok(ExperimentFamily::Random),
            other => Err(format!(
                "unknown experiment family {other:?} (expected lb-single, lb-multi, bad-example, or random)"
            )),
        }
    }
}

/// Sweep configuration. The range parameter is `d` for the constructed
/// families and `n` for random graphs.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub family: ExperimentFamily,
    pub lo: usize,
    pub hi: usize,
    pub sigma: usize,
    pub p: f64,
    pub seed: u64,
    pub model: FaultModel,
}

impl ExperimentConfig {
    pub fn new(family: ExperimentFamily, lo: usize, hi: usize) -> ExperimentConfig {
        ExperimentConfig {
            family,
            lo,
            hi,
            sigma: 2,
            p: 0.3,
            seed: 1,
            model: FaultModel::EdgeFailure,
        }
    }
}

/// Runs one cell per parameter value; cells are independent and run in
/// parallel, rows come back in parameter order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRow>, ExperimentError> {
    if cfg.lo > cfg.hi {
        return Err(ExperimentError::EmptyRange {
            lo: cfg.lo,
            hi: cfg.hi,
        });
    }
    let params: Vec<usize> = (cfg.lo..=cfg.hi).collect();
    let cells: Vec<Result<ExperimentRow, ExperimentError>> = params
        .par_iter()
        .map(|&value| run_cell(cfg, value))
        .collect();
    cells.into_iter().collect()
}

fn run_cell(cfg: &ExperimentConfig, value: usize) -> Result<ExperimentRow, ExperimentError> {
    let start = Instant::now();
    let (graph, sources, family_params, forced_label, forced_count) = match cfg.family {
        ExperimentFamily::LbSingle => {
            let inst = gen_lb_single(value)?;
            let forced = inst.forced_families["B"].len();
            (
                inst.graph,
                inst.sources,
                format!("d={value}"),
                "forced_B",
                Some(forced),
            )
        }
        ExperimentFamily::LbMulti => {
            let inst = gen_lb_multi(value, cfg.sigma)?;
            let forced = inst.forced_families["cross"].len();
            (
                inst.graph,
                inst.sources,
                format!("d={value} sigma={}", cfg.sigma),
                "forced_cross",
                Some(forced),
            )
        }
        ExperimentFamily::BadExample => {
            let inst = gen_bad_example(value)?;
            let block = inst.targets["B"] as usize;
            (
                inst.graph,
                inst.sources,
                format!("d={value}"),
                "B",
                Some(block),
            )
        }
        ExperimentFamily::Random => {
            let graph = gen_random(value, cfg.p, cfg.seed.wrapping_add(value as u64))?;
            (
                graph,
                vec![0],
                format!("n={value} p={} seed={}", cfg.p, cfg.seed),
                "",
                None,
            )
        }
    };

    let exact = build_ftmbfs(&graph, &sources, cfg.model).expect("generated sources are valid");
    let approx = build_approx(&graph, &sources, cfg.model).expect("generated sources are valid");
    let exact_ok = verify_ft(&graph, &sources, &exact.edge_ids, cfg.model)?.is_none();
    let approx_ok = verify_ft(&graph, &sources, &approx.edge_ids, cfg.model)?.is_none();
    let bound = structure_bound(&graph, &sources, &exact);

    let mut params = family_params;
    if let Some(count) = forced_count {
        write!(params, " {forced_label}={count}").unwrap();
    }
    write!(params, " approx_edges={}", approx.size()).unwrap();

    Ok(ExperimentRow {
        family: cfg.family.name().to_string(),
        params,
        n: graph.vertex_count(),
        m: graph.edge_count(),
        built_edges: exact.size(),
        bound,
        verified: exact_ok && approx_ok,
        wall_ms: start.elapsed().as_millis(),
    })
}

fn structure_bound(g: &Graph, sources: &[VertexId], exact: &FtStructure) -> usize {
    if sources.len() == 1 {
        single_source_size_bound(g.vertex_count(), exact.stats.depths[0])
    } else {
        multi_source_size_bound(g.vertex_count(), sources.len())
    }
}

/// Least-squares slope of `log y` against `log x`.
pub fn fit_scaling(xs: &[f64], ys: &[f64]) -> Result<f64, FitError> {
    if xs.len() != ys.len() || xs.len() < 4 {
        return Err(FitError::TooFewRows(xs.len().min(ys.len())));
    }
    if xs.iter().chain(ys).any(|&v| v <= 0.0 || !v.is_finite()) {
        return Err(FitError::NonPositive);
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / lx.len() as f64;
    let my = ly.iter().sum::<f64>() / ly.len() as f64;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(FitError::NonPositive);
    }
    Ok(sxy / sxx)
}
