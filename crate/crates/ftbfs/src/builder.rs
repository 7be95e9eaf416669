//! Deterministic fault-tolerant BFS construction.
//!
//! The structure for one source is the union of the canonical shortest-path
//! tree of the intact graph with the canonical trees recomputed under each
//! single failure of a tree element (tree edges in the edge model, non-root
//! tree vertices in the vertex model). Failures outside the tree never move
//! any distance from the source, so enumerating tree elements suffices; the
//! verifier still quantifies over all faults and keeps this honest.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_tree, SpTree, INF};
use crate::graph::{EdgeId, FaultModel, FaultScenario, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("source list is empty")]
    EmptySources,
    #[error("duplicate source {0}")]
    DuplicateSource(VertexId),
    #[error("source {v} out of range for graph with {n} vertices")]
    SourceOutOfRange { v: VertexId, n: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructParseError {
    #[error("line {line}: malformed edge line, expected \"u v\"")]
    BadEdge { line: usize },
    #[error("line {line}: edge {{{u}, {v}}} is not in the graph")]
    UnknownEdge {
        line: usize,
        u: VertexId,
        v: VertexId,
    },
}

/// Size and shape counters recorded with every built structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FtStats {
    pub n: usize,
    pub m: usize,
    pub edge_count: usize,
    /// Depth of the fault-free tree of each source, in source order.
    pub depths: Vec<u32>,
}

/// A fault-tolerant BFS structure: an edge subset of the host graph plus
/// per-vertex diagnostics of the edges that only replacement trees needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FtStructure {
    pub sources: Vec<VertexId>,
    pub fault_model: FaultModel,
    pub edge_ids: BTreeSet<EdgeId>,
    /// `new_edges[v]` holds the edges incident to `v` that first entered the
    /// union as `v`'s parent in some replacement tree and lie outside the
    /// union of the fault-free trees. Merge order is fixed (sources in order,
    /// faults ascending), so the attribution is deterministic.
    pub new_edges: Vec<BTreeSet<EdgeId>>,
    pub stats: FtStats,
}

impl FtStructure {
    pub fn size(&self) -> usize {
        self.edge_ids.len()
    }

    /// Text form: comment header, one `u v` line per included edge in id
    /// order, then the nonzero new-edge counts as trailing comments.
    pub fn write(&self, g: &Graph) -> String {
        let mut out = String::new();
        let sources = self
            .sources
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "# sources: {sources}").unwrap();
        writeln!(out, "# fault-model: {}", self.fault_model).unwrap();
        writeln!(out, "# n: {}", self.stats.n).unwrap();
        writeln!(out, "# m: {}", self.stats.m).unwrap();
        writeln!(out, "# edges: {}", self.edge_ids.len()).unwrap();
        for &e in &self.edge_ids {
            let (u, v) = g.endpoints(e);
            writeln!(out, "{u} {v}").unwrap();
        }
        for (v, edges) in self.new_edges.iter().enumerate() {
            if !edges.is_empty() {
                writeln!(out, "# new {v}: {}", edges.len()).unwrap();
            }
        }
        out
    }
}

/// Reads the edge set back from the text form, resolving endpoint pairs to
/// ids through the host graph. Comment lines are skipped.
pub fn parse_edge_set(text: &str, g: &Graph) -> Result<BTreeSet<EdgeId>, StructParseError> {
    let mut edges = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.starts_with('#') || raw.trim().is_empty() {
            continue;
        }
        let mut tokens = raw.split_whitespace();
        let u: VertexId = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(StructParseError::BadEdge { line })?;
        let v: VertexId = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(StructParseError::BadEdge { line })?;
        if tokens.next().is_some() {
            return Err(StructParseError::BadEdge { line });
        }
        let e = g
            .edge_between(u, v)
            .ok_or(StructParseError::UnknownEdge { line, u, v })?;
        edges.insert(e);
    }
    Ok(edges)
}

/// Faults the construction must replay for one source: the elements of its
/// fault-free tree. The root is skipped in the vertex model since distances
/// from a failed source are undefined.
fn tree_faults(tree: &SpTree, model: FaultModel) -> Vec<FaultScenario> {
    match model {
        FaultModel::EdgeFailure => {
            let mut edges: Vec<EdgeId> = tree.tree_edges().collect();
            edges.sort_unstable();
            edges.into_iter().map(FaultScenario::EdgeFault).collect()
        }
        FaultModel::VertexFailure => (0..tree.vertex_count())
            .filter(|&v| v != tree.root() && tree.dist(v) != INF)
            .map(FaultScenario::VertexFault)
            .collect(),
    }
}

/// Single-source fault-tolerant BFS structure.
pub fn build_ftbfs(g: &Graph, s: VertexId, model: FaultModel) -> FtStructure {
    assert!(s < g.vertex_count(), "source out of range");
    build_ftmbfs(g, &[s], model).expect("singleton source list is valid")
}

/// Multi-source structure: the union of the per-source structures, with
/// new-edge diagnostics taken relative to the union of fault-free trees.
pub fn build_ftmbfs(
    g: &Graph,
    sources: &[VertexId],
    model: FaultModel,
) -> Result<FtStructure, BuildError> {
    if sources.is_empty() {
        return Err(BuildError::EmptySources);
    }
    let mut seen_sources = HashSet::new();
    for &s in sources {
        if s >= g.vertex_count() {
            return Err(BuildError::SourceOutOfRange {
                v: s,
                n: g.vertex_count(),
            });
        }
        if !seen_sources.insert(s) {
            return Err(BuildError::DuplicateSource(s));
        }
    }

    let n = g.vertex_count();
    let base_trees: Vec<SpTree> = sources
        .iter()
        .map(|&s| canonical_tree(g.full_view(), s))
        .collect();

    let mut union: BTreeSet<EdgeId> = BTreeSet::new();
    for tree in &base_trees {
        union.extend(tree.tree_edges());
    }

    let mut new_edges: Vec<BTreeSet<EdgeId>> = vec![BTreeSet::new(); n];
    for (tree, &s) in base_trees.iter().zip(sources) {
        let faults = tree_faults(tree, model);
        // independent recomputations; merged below in fault order
        let parents: Vec<Vec<Option<EdgeId>>> = faults
            .par_iter()
            .map(|&f| {
                let view = g.view(f).expect("tree fault is in range");
                let replacement = canonical_tree(view, s);
                (0..n).map(|v| replacement.parent_edge(v)).collect()
            })
            .collect();
        for parent in &parents {
            for (v, pe) in parent.iter().enumerate() {
                if let Some(e) = *pe {
                    if union.insert(e) {
                        new_edges[v].insert(e);
                    }
                }
            }
        }
    }

    let stats = FtStats {
        n,
        m: g.edge_count(),
        edge_count: union.len(),
        depths: base_trees.iter().map(|t| t.depth()).collect(),
    };
    Ok(FtStructure {
        sources: sources.to_vec(),
        fault_model: model,
        edge_ids: union,
        new_edges,
        stats,
    })
}

/// Per-vertex count of edges added beyond the fault-free trees.
pub fn new_edge_profile(ft: &FtStructure) -> Vec<usize> {
    ft.new_edges.iter().map(|s| s.len()).collect()
}

/// Explicit single-source, edge-model size bound:
/// `min(n * (depth + 1), (n - 1) + n * ceil(sqrt(2n)))`.
pub fn single_source_size_bound(n: usize, depth: u32) -> usize {
    let per_depth = n * (depth as usize + 1);
    let per_sqrt = (n.saturating_sub(1)) + n * ceil_sqrt(2 * n);
    per_depth.min(per_sqrt)
}

/// Loose multi-source bound: `sigma * (n - 1) + n * ceil(sqrt(2 * sigma * n))
/// + sigma * n`.
pub fn multi_source_size_bound(n: usize, sigma: usize) -> usize {
    sigma * n.saturating_sub(1) + n * ceil_sqrt(2 * sigma * n) + sigma * n
}

fn ceil_sqrt(x: usize) -> usize {
    let r = x.isqrt();
    if r * r < x {
        r + 1
    } else {
        r
    }
}
