//! Greedy set cover and the cover-based structure approximation.
//!
//! For each vertex, the pairs (source, fault) whose shortest paths could end
//! at that vertex form a universe, and each neighbor covers the pairs for
//! which it lies one hop earlier under that fault. A greedy cover of every
//! universe yields a fault-tolerant structure whose size is within a
//! logarithmic factor of the optimum. The no-fault scenario rides along as an
//! ordinary universe element, which forces a true shortest-path predecessor
//! per (source, vertex). The membership tests use plain hop distances; the
//! uniqueness tie-break plays no role here.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::builder::{BuildError, FtStats, FtStructure};
use crate::canon::{canonical_tree, DistTables, INF};
use crate::graph::{fault_scenarios, EdgeId, FaultModel, FaultScenario, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("element {element} is not covered by any set")]
    Uncoverable { element: usize },
    #[error("set {set} contains element {element} outside universe of size {universe}")]
    ElementOutOfRange {
        set: usize,
        element: usize,
        universe: usize,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetCoverParseError {
    #[error("missing header line \"N M\"")]
    MissingHeader,
    #[error("line {line}: malformed header, expected \"N M\"")]
    BadHeader { line: usize },
    #[error("line {line}: malformed element index")]
    BadElement { line: usize },
    #[error("header declares {expected} sets but {found} were given")]
    SetCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Invalid(#[from] CoverError),
}

/// A coverable set-cover instance over the dense universe `0..N`.
///
/// Each set carries an external key: the neighbor vertex for per-vertex
/// instances, the set index for standalone instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe: usize,
    sets: Vec<Vec<usize>>,
    keys: Vec<usize>,
}

impl SetCoverInstance {
    /// Builds an instance with keys equal to set indices. Verifies that set
    /// elements are in range and that the sets cover the universe.
    pub fn new(universe: usize, sets: Vec<Vec<usize>>) -> Result<SetCoverInstance, CoverError> {
        let keys = (0..sets.len()).collect();
        SetCoverInstance::with_keys(universe, sets, keys)
    }

    pub fn with_keys(
        universe: usize,
        sets: Vec<Vec<usize>>,
        keys: Vec<usize>,
    ) -> Result<SetCoverInstance, CoverError> {
        assert_eq!(sets.len(), keys.len());
        let mut covered = vec![false; universe];
        let mut cleaned = Vec::with_capacity(sets.len());
        for (i, mut set) in sets.into_iter().enumerate() {
            set.sort_unstable();
            set.dedup();
            for &x in &set {
                if x >= universe {
                    return Err(CoverError::ElementOutOfRange {
                        set: i,
                        element: x,
                        universe,
                    });
                }
                covered[x] = true;
            }
            cleaned.push(set);
        }
        if let Some(element) = covered.iter().position(|&c| !c) {
            return Err(CoverError::Uncoverable { element });
        }
        Ok(SetCoverInstance {
            universe,
            sets: cleaned,
            keys,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn key(&self, i: usize) -> usize {
        self.keys[i]
    }
}

/// Classical greedy cover: repeatedly pick the set covering the most still
/// uncovered elements, ties to the lowest set index. Returns set indices in
/// pick order; the size is at most `H(N)` times the optimum.
pub fn greedy_set_cover(inst: &SetCoverInstance) -> Vec<usize> {
    let mut covered = vec![false; inst.universe];
    let mut remaining = inst.universe;
    let mut picks = Vec::new();
    while remaining > 0 {
        let mut best: Option<(usize, usize)> = None; // (gain, index)
        for (i, set) in inst.sets.iter().enumerate() {
            let gain = set.iter().filter(|&&x| !covered[x]).count();
            if gain > 0 && best.is_none_or(|(bg, _)| gain > bg) {
                best = Some((gain, i));
            }
        }
        let (_, i) = best.expect("instance is coverable by construction");
        picks.push(i);
        for &x in &inst.sets[i] {
            if !covered[x] {
                covered[x] = true;
                remaining -= 1;
            }
        }
    }
    picks
}

/// Exhaustive minimum cover by subset size, then lexicographic set indices.
/// Exponential in the set count; callers gate on small instances.
pub fn brute_min_cover(inst: &SetCoverInstance) -> Vec<usize> {
    let m = inst.set_count();
    for k in 0..=m {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut covered = vec![false; inst.universe];
            for &i in &idx {
                for &x in inst.set(i) {
                    covered[x] = true;
                }
            }
            if covered.iter().all(|&c| c) {
                return idx;
            }
            // advance the k-combination
            let mut i = k;
            let mut exhausted = true;
            while i > 0 {
                i -= 1;
                if idx[i] != i + m - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    exhausted = false;
                    break;
                }
            }
            if exhausted {
                break;
            }
        }
    }
    unreachable!("instance is coverable by construction")
}

/// `H(n) = 1 + 1/2 + ... + 1/n`, the greedy guarantee factor.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}

/// Standalone file format: header `N M`, then `M` lines of space-separated
/// 0-based element indices (an empty line is an empty set).
pub fn parse_setcover(text: &str) -> Result<SetCoverInstance, SetCoverParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (header_line, header) = lines.next().ok_or(SetCoverParseError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    let n: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(SetCoverParseError::BadHeader { line: header_line })?;
    let m: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(SetCoverParseError::BadHeader { line: header_line })?;
    if tokens.next().is_some() {
        return Err(SetCoverParseError::BadHeader { line: header_line });
    }
    let mut sets = Vec::with_capacity(m);
    let mut found = 0usize;
    for (line, raw) in lines {
        found += 1;
        if found > m {
            continue;
        }
        let mut set = Vec::new();
        for token in raw.split_whitespace() {
            set.push(
                token
                    .parse()
                    .map_err(|_| SetCoverParseError::BadElement { line })?,
            );
        }
        sets.push(set);
    }
    if found != m {
        return Err(SetCoverParseError::SetCountMismatch { expected: m, found });
    }
    Ok(SetCoverInstance::new(n, sets)?)
}

pub fn write_setcover(inst: &SetCoverInstance) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", inst.universe_size(), inst.set_count()).unwrap();
    for i in 0..inst.set_count() {
        let line = inst
            .set(i)
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "{line}").unwrap();
    }
    out
}

/// The per-vertex cover instance: universe elements are (source, fault)
/// pairs, sets belong to graph neighbors.
#[derive(Debug, Clone)]
pub struct CoverageInstance {
    pub instance: SetCoverInstance,
    /// Universe element `i` is the pair `pairs[i]`.
    pub pairs: Vec<(VertexId, FaultScenario)>,
    /// Set `j` of the instance belongs to `neighbors[j]`, ascending ids.
    pub neighbors: Vec<VertexId>,
}

/// Builds the cover instance of `target`: a pair (source s, fault f) is in
/// the universe iff `dist(s, target, G \ f)` is finite, and neighbor `u`
/// covers it iff `dist(s, u, G \ f) == dist(s, target, G \ f) - 1` and the
/// connecting edge itself survives `f` (a shortest path through `u` must end
/// with that edge, so a pair whose failed edge is exactly `(u, target)` is
/// never covered by `u`). Vertex faults hitting the source or the target are
/// excluded; pairs with the source equal to the target have nothing to cover.
pub fn coverage_sets(
    g: &Graph,
    sources: &[VertexId],
    target: VertexId,
    tables: &DistTables,
) -> CoverageInstance {
    let faults = fault_scenarios(g, tables.model());
    let mut pairs = Vec::new();
    let mut pair_dist = Vec::new();
    let mut pair_source_idx = Vec::new();
    for (si, &s) in sources.iter().enumerate() {
        if s == target {
            continue;
        }
        for &fault in &faults {
            match fault {
                FaultScenario::VertexFault(w) if w == s || w == target => continue,
                _ => {}
            }
            let d = tables.dist(si, fault, target);
            if d == INF {
                continue;
            }
            pairs.push((s, fault));
            pair_dist.push(d);
            pair_source_idx.push(si);
        }
    }

    let mut neighbors: Vec<VertexId> = g.neighbors(target).iter().map(|&(u, _)| u).collect();
    neighbors.sort_unstable();
    let sets: Vec<Vec<usize>> = neighbors
        .iter()
        .map(|&u| {
            let own_edge = g.edge_between(u, target).expect("neighbor edge exists");
            (0..pairs.len())
                .filter(|&p| {
                    let (_, fault) = pairs[p];
                    fault != FaultScenario::EdgeFault(own_edge)
                        && tables.dist(pair_source_idx[p], fault, u) == pair_dist[p] - 1
                })
                .collect()
        })
        .collect();

    let instance = SetCoverInstance::with_keys(pairs.len(), sets, neighbors.clone())
        .expect("every finite-distance pair has a shortest-path predecessor");
    CoverageInstance {
        instance,
        pairs,
        neighbors,
    }
}

/// Cover-based construction: one greedy cover round per vertex, adding the
/// edge to each chosen neighbor. Rounds are independent given the distance
/// tables and run in parallel; the union is order-independent.
pub fn build_approx(
    g: &Graph,
    sources: &[VertexId],
    model: FaultModel,
) -> Result<FtStructure, BuildError> {
    if sources.is_empty() {
        return Err(BuildError::EmptySources);
    }
    let mut seen = std::collections::HashSet::new();
    for &s in sources {
        if s >= g.vertex_count() {
            return Err(BuildError::SourceOutOfRange {
                v: s,
                n: g.vertex_count(),
            });
        }
        if !seen.insert(s) {
            return Err(BuildError::DuplicateSource(s));
        }
    }

    let tables = DistTables::build(g, sources, model);
    let picks_per_vertex: Vec<Vec<EdgeId>> = (0..g.vertex_count())
        .into_par_iter()
        .map(|v| {
            let coverage = coverage_sets(g, sources, v, &tables);
            greedy_set_cover(&coverage.instance)
                .into_iter()
                .map(|i| {
                    let u = coverage.neighbors[i];
                    g.edge_between(u, v).expect("neighbor edge exists")
                })
                .collect()
        })
        .collect();

    let mut edge_ids: BTreeSet<EdgeId> = BTreeSet::new();
    for picks in &picks_per_vertex {
        edge_ids.extend(picks.iter().copied());
    }

    // diagnostics relative to the fault-free canonical trees, attributed to
    // the first round that introduced each edge
    let base_trees: Vec<_> = sources
        .iter()
        .map(|&s| canonical_tree(g.full_view(), s))
        .collect();
    let mut attributed: BTreeSet<EdgeId> = BTreeSet::new();
    for tree in &base_trees {
        attributed.extend(tree.tree_edges());
    }
    let mut new_edges: Vec<BTreeSet<EdgeId>> = vec![BTreeSet::new(); g.vertex_count()];
    for (v, picks) in picks_per_vertex.iter().enumerate() {
        for &e in picks {
            if attributed.insert(e) {
                new_edges[v].insert(e);
            }
        }
    }

    let stats = FtStats {
        n: g.vertex_count(),
        m: g.edge_count(),
        edge_count: edge_ids.len(),
        depths: base_trees.iter().map(|t| t.depth()).collect(),
    };
    Ok(FtStructure {
        sources: sources.to_vec(),
        fault_model: model,
        edge_ids,
        new_edges,
        stats,
    })
}
