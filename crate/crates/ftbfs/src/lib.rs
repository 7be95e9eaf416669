//! Sparse fault-tolerant BFS structures for single edge or vertex failures.
//!
//! A fault-tolerant BFS structure for sources `S` in a graph `G` is an edge
//! subset `T` such that after any single failure `f`, distances from every
//! source survive intact: `dist(s, v, T \ f) = dist(s, v, G \ f)` for all
//! `s` in `S` and all `v`, with unreachable-on-both-sides counting as equal.
//!
//! The crate provides:
//!
//! - [`graph`]: simple graphs with stable edge ids, fault views, text I/O;
//! - [`canon`]: unique shortest paths under an edge-id tie-break and the
//!   per-(source, fault) distance tables;
//! - [`builder`]: the deterministic exact constructions (single- and
//!   multi-source) with explicit size bounds;
//! - [`cover`]: greedy set cover and the cover-based approximate builder;
//! - [`oracle`]: the literal fault-tolerance verifier, forced-edge probing,
//!   and exhaustive minimum search for tiny instances;
//! - [`generate`]: parametric instance families with checkable metadata;
//! - [`experiment`]: CSV sweeps and log-log scaling fits.

#![forbid(unsafe_code)]

pub mod builder;
pub mod canon;
pub mod cover;
pub mod experiment;
pub mod generate;
pub mod graph;
pub mod oracle;

pub use builder::{
    build_ftbfs, build_ftmbfs, multi_source_size_bound, new_edge_profile, parse_edge_set,
    single_source_size_bound, BuildError, FtStats, FtStructure,
};
pub use canon::{bfs_distances, canonical_tree, compare_costs, CanonCost, DistTables, SpTree, INF};
pub use cover::{
    brute_min_cover, build_approx, coverage_sets, greedy_set_cover, harmonic, parse_setcover,
    write_setcover, CoverError, CoverageInstance, SetCoverInstance,
};
pub use experiment::{
    fit_scaling, rows_to_csv, run_experiment, ExperimentConfig, ExperimentFamily, ExperimentRow,
};
pub use generate::{
    gen_bad_example, gen_lb_multi, gen_lb_single, gen_random, gen_setcover_reduction, GenError,
    GeneratedInstance,
};
pub use graph::{
    fault_scenarios, parse_graph, write_graph, EdgeId, FaultModel, FaultScenario, Graph,
    GraphError, GraphView, ParseError, VertexId,
};
pub use oracle::{
    brute_min_ft, default_partition, necessary_edges, verify_ft, OracleError, Violation,
    DEFAULT_FREE_LIMIT,
};
