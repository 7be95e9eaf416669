//! Shared fixtures for the benchmark targets.

use ftbfs::{gen_lb_single, gen_random, Graph};

/// Forced-density instance at depth `d`.
pub fn dense_family(d: usize) -> Graph {
    gen_lb_single(d).expect("valid depth").graph
}

/// Sparse seeded random graph.
pub fn sparse_random(n: usize) -> Graph {
    gen_random(n, 8.0 / n as f64, 42).expect("valid parameters")
}
