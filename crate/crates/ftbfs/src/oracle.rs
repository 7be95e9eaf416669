//! Ground truth for fault tolerance.
//!
//! [`verify_ft`] executes the defining condition literally: for every source,
//! every single failure (including the no-fault case) and every target, the
//! candidate subgraph must preserve the hop distance of the host graph, with
//! unreachable-on-both-sides counting as preserved. Everything else in the
//! crate ultimately answers to this check. On top of it sit a sound
//! forced-edge probe and an exhaustive minimum search for tiny instances.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{DistTables, INF};
use crate::graph::{fault_scenarios, EdgeId, FaultModel, FaultScenario, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("candidate edge {e} not in graph with {m} edges")]
    CandidateEdgeOutOfRange { e: EdgeId, m: usize },
    #[error("source {v} out of range for graph with {n} vertices")]
    SourceOutOfRange { v: VertexId, n: usize },
    #[error("forced and free sets must partition the edge set")]
    InvalidPartition,
    #[error("free edge set too large for exhaustive search: {size} > {limit}")]
    SearchSpaceTooLarge { size: usize, limit: usize },
}

/// Witness that a candidate is not fault tolerant: under `fault`, the
/// candidate's distance from `source` to `target` exceeds the graph's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub source: VertexId,
    pub fault: FaultScenario,
    pub target: VertexId,
    pub dist_in_candidate: u32,
    pub dist_in_graph: u32,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |d: u32| {
            if d == INF {
                "inf".to_string()
            } else {
                d.to_string()
            }
        };
        write!(
            f,
            "VIOLATION s={} fault={} v={} cand={} graph={}",
            self.source,
            self.fault,
            self.target,
            show(self.dist_in_candidate),
            show(self.dist_in_graph)
        )
    }
}

/// Candidate subgraph indexed for traversal, keeping the host edge ids.
struct CandidateAdj {
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    endpoints: Vec<(VertexId, VertexId)>,
    has_edge: Vec<bool>,
}

impl CandidateAdj {
    fn new(g: &Graph, candidate: &BTreeSet<EdgeId>) -> CandidateAdj {
        let mut adj = vec![Vec::new(); g.vertex_count()];
        let mut has_edge = vec![false; g.edge_count()];
        for &e in candidate {
            let (u, v) = g.endpoints(e);
            adj[u].push((v, e));
            adj[v].push((u, e));
            has_edge[e] = true;
        }
        CandidateAdj {
            adj,
            endpoints: g.edges().collect(),
            has_edge,
        }
    }

    fn bfs(&self, s: VertexId, fault: FaultScenario) -> Vec<u32> {
        let mut dist = vec![INF; self.adj.len()];
        if matches!(fault, FaultScenario::VertexFault(w) if w == s) {
            return dist;
        }
        dist[s] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &(w, e) in &self.adj[u] {
                let dead = match fault {
                    FaultScenario::NoFault => false,
                    FaultScenario::EdgeFault(f) => e == f,
                    FaultScenario::VertexFault(x) => {
                        let (a, b) = self.endpoints[e];
                        a == x || b == x
                    }
                };
                if !dead && dist[w] == INF {
                    dist[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Exact skip: a fault that removes nothing the candidate's shortest
    /// paths could use leaves its distance vector untouched.
    fn fault_is_trivial(&self, base: &[u32], s: VertexId, fault: FaultScenario) -> bool {
        match fault {
            FaultScenario::NoFault => true,
            FaultScenario::EdgeFault(e) => {
                if !self.has_edge[e] {
                    return true;
                }
                let (a, b) = self.endpoints[e];
                base[a] == INF || base[b] == INF || base[a].abs_diff(base[b]) != 1
            }
            FaultScenario::VertexFault(w) => w != s && base[w] == INF,
        }
    }
}

fn validate_sources(g: &Graph, sources: &[VertexId]) -> Result<(), OracleError> {
    for &s in sources {
        if s >= g.vertex_count() {
            return Err(OracleError::SourceOutOfRange {
                v: s,
                n: g.vertex_count(),
            });
        }
    }
    Ok(())
}

fn validate_candidate(g: &Graph, candidate: &BTreeSet<EdgeId>) -> Result<(), OracleError> {
    if let Some(&e) = candidate.iter().next_back() {
        if e >= g.edge_count() {
            return Err(OracleError::CandidateEdgeOutOfRange {
                e,
                m: g.edge_count(),
            });
        }
    }
    Ok(())
}

/// Checks the fault-tolerance condition for every source, fault, and target.
/// Returns `None` when the candidate passes, otherwise the first violation
/// in (source order, fault order, target id) with `NoFault` enumerated first.
pub fn verify_ft(
    g: &Graph,
    sources: &[VertexId],
    candidate: &BTreeSet<EdgeId>,
    model: FaultModel,
) -> Result<Option<Violation>, OracleError> {
    validate_sources(g, sources)?;
    validate_candidate(g, candidate)?;
    let tables = DistTables::build(g, sources, model);
    let cand = CandidateAdj::new(g, candidate);
    Ok(verify_candidate(g, sources, &cand, &tables, model))
}

/// Core check against prebuilt graph-side tables; shared by the probes below
/// so repeated candidates pay only their own BFS.
fn verify_candidate(
    g: &Graph,
    sources: &[VertexId],
    cand: &CandidateAdj,
    tables: &DistTables,
    model: FaultModel,
) -> Option<Violation> {
    let faults = fault_scenarios(g, model);
    for (si, &s) in sources.iter().enumerate() {
        let cand_base = cand.bfs(s, FaultScenario::NoFault);
        let found = faults.par_iter().find_map_first(|&fault| {
            if fault == FaultScenario::VertexFault(s) {
                return None;
            }
            let cand_dist: Option<Vec<u32>> = if cand.fault_is_trivial(&cand_base, s, fault) {
                None
            } else {
                Some(cand.bfs(s, fault))
            };
            let cd = |v: VertexId| cand_dist.as_ref().map_or(cand_base[v], |d| d[v]);
            for v in 0..g.vertex_count() {
                if matches!(fault, FaultScenario::VertexFault(w) if w == v) {
                    continue;
                }
                let in_graph = tables.dist(si, fault, v);
                let in_cand = cd(v);
                debug_assert!(in_cand >= in_graph, "candidate beat the host graph");
                if in_cand > in_graph {
                    return Some(Violation {
                        source: s,
                        fault,
                        target: v,
                        dist_in_candidate: in_cand,
                        dist_in_graph: in_graph,
                    });
                }
            }
            None
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Edges whose single removal already breaks fault tolerance. Sound: every
/// valid structure is a subgraph of `G`, so each returned edge is contained
/// in every valid structure.
pub fn necessary_edges(
    g: &Graph,
    sources: &[VertexId],
    model: FaultModel,
) -> Result<BTreeSet<EdgeId>, OracleError> {
    validate_sources(g, sources)?;
    let tables = DistTables::build(g, sources, model);
    let all: BTreeSet<EdgeId> = (0..g.edge_count()).collect();
    let needed: Vec<EdgeId> = (0..g.edge_count())
        .into_par_iter()
        .filter(|&e| {
            let mut candidate = all.clone();
            candidate.remove(&e);
            let cand = CandidateAdj::new(g, &candidate);
            verify_candidate(g, sources, &cand, &tables, model).is_some()
        })
        .collect();
    Ok(needed.into_iter().collect())
}

/// Exhaustive minimum: enumerates `forced + (subsets of free)` by subset
/// size, then lexicographically, and returns the first passing candidate.
/// That order makes the result a minimum-cardinality structure with the
/// lexicographically smallest edge set among ties.
pub fn brute_min_ft(
    g: &Graph,
    sources: &[VertexId],
    model: FaultModel,
    forced: &BTreeSet<EdgeId>,
    free: &BTreeSet<EdgeId>,
    free_limit: usize,
) -> Result<BTreeSet<EdgeId>, OracleError> {
    validate_sources(g, sources)?;
    validate_candidate(g, forced)?;
    validate_candidate(g, free)?;
    if forced.len() + free.len() != g.edge_count() || forced.intersection(free).next().is_some() {
        return Err(OracleError::InvalidPartition);
    }
    if free.len() > free_limit {
        return Err(OracleError::SearchSpaceTooLarge {
            size: free.len(),
            limit: free_limit,
        });
    }

    let tables = DistTables::build(g, sources, model);
    let free: Vec<EdgeId> = free.iter().copied().collect();
    // lexicographic chunks checked in parallel; taking the first hit of the
    // first hitting chunk keeps the result identical to a sequential scan
    const CHUNK: usize = 1024;
    for k in 0..=free.len() {
        let mut combo = Combinations::new(free.len(), k);
        loop {
            let mut chunk: Vec<Vec<usize>> = Vec::with_capacity(CHUNK);
            while chunk.len() < CHUNK {
                match combo.next() {
                    Some(picked) => chunk.push(picked.to_vec()),
                    None => break,
                }
            }
            if chunk.is_empty() {
                break;
            }
            let hit = chunk.par_iter().find_map_first(|picked| {
                let mut candidate = forced.clone();
                candidate.extend(picked.iter().map(|&i| free[i]));
                let cand = CandidateAdj::new(g, &candidate);
                verify_candidate(g, sources, &cand, &tables, model)
                    .is_none()
                    .then_some(candidate)
            });
            if let Some(candidate) = hit {
                return Ok(candidate);
            }
        }
    }
    unreachable!("the full edge set is always fault tolerant")
}

/// Default free-set ceiling for the exhaustive search.
pub const DEFAULT_FREE_LIMIT: usize = 25;

/// The default forced/free split: forced edges are the provably necessary
/// ones, everything else is free.
pub fn default_partition(
    g: &Graph,
    sources: &[VertexId],
    model: FaultModel,
) -> Result<(BTreeSet<EdgeId>, BTreeSet<EdgeId>), OracleError> {
    let forced = necessary_edges(g, sources, model)?;
    let free = (0..g.edge_count())
        .filter(|e| !forced.contains(e))
        .collect();
    Ok((forced, free))
}

/// Lexicographic k-combinations of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        if k == 0 {
            self.done = true;
            return None;
        }
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] != i + self.n - k {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}
