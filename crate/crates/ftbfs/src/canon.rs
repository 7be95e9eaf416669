//! Exact shortest paths under a uniqueness-forcing tie-break.
//!
//! Hop counts alone leave shortest paths ambiguous. Assigning edge `k` the
//! weight `2^(m+1) + 2^k` makes every weighted shortest path unique and still
//! hop-minimal: a path's weight is `hops * 2^(m+1) + sum(2^k)`, hops dominate,
//! and distinct edge sets give distinct low-order sums. [`CanonCost`] realizes
//! exactly that order as `(hops, edge-id set)` without big integers: the edge
//! set is compared as a binary numeral, i.e. by the largest id present in
//! exactly one of the two sets.

use std::cmp::Ordering;
use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::{
    fault_scenarios, EdgeId, FaultModel, FaultScenario, Graph, GraphView, VertexId,
};

/// Distance marker for unreachable vertices. `INF == INF` compares equal,
/// which is precisely the convention the fault-tolerance check needs.
pub const INF: u32 = u32::MAX;

/// Exact cost of a path: hop count first, then the edge-id set interpreted
/// as the integer `sum(2^k)`.
///
/// The key is kept sorted descending so the derived lexicographic order on
/// the vector coincides with comparing those integers: at the first position
/// where two keys differ, the larger id belongs to the larger sum, and a
/// strict prefix is the smaller sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonCost {
    hops: u32,
    key: Vec<u32>,
}

impl CanonCost {
    /// Cost of the empty path.
    pub fn source() -> CanonCost {
        CanonCost {
            hops: 0,
            key: Vec::new(),
        }
    }

    /// Builds a cost from an explicit edge set (mostly for tests/oracles).
    pub fn from_edges<I: IntoIterator<Item = EdgeId>>(edges: I) -> CanonCost {
        let mut key: Vec<u32> = edges.into_iter().map(|e| e as u32).collect();
        key.sort_unstable_by(|a, b| b.cmp(a));
        key.dedup();
        CanonCost {
            hops: key.len() as u32,
            key,
        }
    }

    pub fn hops(&self) -> u32 {
        self.hops
    }

    /// Edge ids of the path, largest first.
    pub fn tie_key(&self) -> &[u32] {
        &self.key
    }

    /// Cost of this path extended by one more edge. Strictly increases.
    pub fn extend(&self, e: EdgeId) -> CanonCost {
        let e = e as u32;
        let pos = self.key.partition_point(|&k| k > e);
        debug_assert!(self.key.get(pos) != Some(&e), "edge repeated on a path");
        let mut key = Vec::with_capacity(self.key.len() + 1);
        key.extend_from_slice(&self.key[..pos]);
        key.push(e);
        key.extend_from_slice(&self.key[pos..]);
        CanonCost {
            hops: self.hops + 1,
            key,
        }
    }
}

/// Total order over path costs; `Equal` only for identical hop counts and
/// identical edge sets.
pub fn compare_costs(a: &CanonCost, b: &CanonCost) -> Ordering {
    a.cmp(b)
}

/// Compares `a + ea` against `b + eb` without materializing the extended
/// keys. Hot path of the tree construction.
fn cmp_extended(a: &CanonCost, ea: EdgeId, b: &CanonCost, eb: EdgeId) -> Ordering {
    match (a.hops + 1).cmp(&(b.hops + 1)) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let mut ia = InsertDesc::new(&a.key, ea as u32);
    let mut ib = InsertDesc::new(&b.key, eb as u32);
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => match x.cmp(&y) {
                Ordering::Equal => continue,
                ord => return ord,
            },
        }
    }
}

/// Yields a descending slice with one extra element merged in.
struct InsertDesc<'a> {
    rest: &'a [u32],
    pending: Option<u32>,
}

impl<'a> InsertDesc<'a> {
    fn new(rest: &'a [u32], extra: u32) -> Self {
        InsertDesc {
            rest,
            pending: Some(extra),
        }
    }
}

impl Iterator for InsertDesc<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        match (self.pending, self.rest.first()) {
            (Some(p), Some(&head)) if p > head => {
                self.pending = None;
                Some(p)
            }
            (_, Some(&head)) => {
                self.rest = &self.rest[1..];
                Some(head)
            }
            (Some(p), None) => {
                self.pending = None;
                Some(p)
            }
            (None, None) => None,
        }
    }
}

/// The unique minimum-cost shortest-path tree from one root in one view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpTree {
    root: VertexId,
    parent_edge: Vec<Option<EdgeId>>,
    dist: Vec<u32>,
    cost: Vec<Option<CanonCost>>,
}

impl SpTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    pub fn dist(&self, v: VertexId) -> u32 {
        self.dist[v]
    }

    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.parent_edge[v]
    }

    pub fn cost(&self, v: VertexId) -> Option<&CanonCost> {
        self.cost[v].as_ref()
    }

    /// Depth of the tree: the largest finite distance.
    pub fn depth(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != INF)
            .max()
            .unwrap_or(0)
    }

    /// Parent edges, ascending by child vertex.
    pub fn tree_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.parent_edge.iter().filter_map(|e| *e)
    }

    /// Root-to-`v` path as edge ids, or `None` when `v` is unreachable.
    pub fn path_to(&self, g: &Graph, v: VertexId) -> Option<Vec<EdgeId>> {
        if self.dist[v] == INF {
            return None;
        }
        let mut path = Vec::with_capacity(self.dist[v] as usize);
        let mut cur = v;
        while let Some(e) = self.parent_edge[cur] {
            path.push(e);
            let (a, b) = g.endpoints(e);
            cur = if a == cur { b } else { a };
        }
        path.reverse();
        Some(path)
    }
}

/// Hop distances from `s` in the view; `INF` for unreachable vertices.
pub fn bfs_distances(view: GraphView<'_>, s: VertexId) -> Vec<u32> {
    assert!(s < view.vertex_count(), "source out of range");
    let mut dist = vec![INF; view.vertex_count()];
    if !view.is_vertex_live(s) {
        return dist;
    }
    dist[s] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for (w, _) in view.live_neighbors(u) {
            if dist[w] == INF {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Builds the canonical shortest-path tree: BFS fixes the layers; a forward
/// pass over the tight edges (those with `dist(u) + 1 == dist(v)`) picks for
/// each vertex the predecessor minimizing the extended [`CanonCost`]. The
/// minimum over tight predecessors is the global minimum because extending
/// by a common edge preserves key order.
pub fn canonical_tree(view: GraphView<'_>, s: VertexId) -> SpTree {
    let n = view.vertex_count();
    let dist = bfs_distances(view, s);
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut cost: Vec<Option<CanonCost>> = vec![None; n];

    // counting sort by layer
    let depth = dist
        .iter()
        .copied()
        .filter(|&d| d != INF)
        .max()
        .unwrap_or(0) as usize;
    let mut layers: Vec<Vec<VertexId>> = vec![Vec::new(); depth + 1];
    for v in 0..n {
        if dist[v] != INF {
            layers[dist[v] as usize].push(v);
        }
    }

    if dist[s] == 0 {
        cost[s] = Some(CanonCost::source());
    } else {
        return SpTree {
            root: s,
            parent_edge,
            dist,
            cost,
        };
    }

    for layer in layers.iter().skip(1) {
        for &v in layer {
            let dv = dist[v];
            let mut best: Option<(VertexId, EdgeId)> = None;
            for (u, e) in view.live_neighbors(v) {
                if dist[u] != INF && dist[u] + 1 == dv {
                    best = match best {
                        None => Some((u, e)),
                        Some((bu, be)) => {
                            let cu = cost[u].as_ref().expect("predecessor layer finished");
                            let cb = cost[bu].as_ref().expect("predecessor layer finished");
                            if cmp_extended(cu, e, cb, be) == Ordering::Less {
                                Some((u, e))
                            } else {
                                Some((bu, be))
                            }
                        }
                    };
                }
            }
            let (u, e) = best.expect("reachable vertex has a tight predecessor");
            parent_edge[v] = Some(e);
            cost[v] = Some(cost[u].as_ref().unwrap().extend(e));
        }
    }

    SpTree {
        root: s,
        parent_edge,
        dist,
        cost,
    }
}

/// Per-(source, fault) hop-distance tables.
///
/// One BFS per pair, except that a fault provably not touching any shortest
/// path from the source (an edge between equal layers, an edge or vertex in
/// an unreachable region, or the source itself as a vertex fault) reuses the
/// fault-free table. That skip is exact, not a heuristic.
pub struct DistTables {
    sources: Vec<VertexId>,
    model: FaultModel,
    no_fault: Vec<Vec<u32>>,
    per_fault: Vec<Vec<FaultDist>>,
}

enum FaultDist {
    Unchanged,
    Dist(Vec<u32>),
}

impl DistTables {
    pub fn build(g: &Graph, sources: &[VertexId], model: FaultModel) -> DistTables {
        let no_fault: Vec<Vec<u32>> = sources
            .iter()
            .map(|&s| bfs_distances(g.full_view(), s))
            .collect();
        let fault_count = match model {
            FaultModel::EdgeFailure => g.edge_count(),
            FaultModel::VertexFailure => g.vertex_count(),
        };
        let per_fault: Vec<Vec<FaultDist>> = sources
            .iter()
            .zip(&no_fault)
            .map(|(&s, base)| {
                (0..fault_count)
                    .into_par_iter()
                    .map(|k| {
                        let fault = match model {
                            FaultModel::EdgeFailure => FaultScenario::EdgeFault(k),
                            FaultModel::VertexFailure => FaultScenario::VertexFault(k),
                        };
                        if fault_touches_shortest_paths(g, base, s, fault) {
                            FaultDist::Dist(bfs_distances(g.view(fault).unwrap(), s))
                        } else {
                            FaultDist::Unchanged
                        }
                    })
                    .collect()
            })
            .collect();
        DistTables {
            sources: sources.to_vec(),
            model,
            no_fault,
            per_fault,
        }
    }

    pub fn sources(&self) -> &[VertexId] {
        &self.sources
    }

    pub fn model(&self) -> FaultModel {
        self.model
    }

    pub fn no_fault_dist(&self, source_idx: usize, v: VertexId) -> u32 {
        self.no_fault[source_idx][v]
    }

    pub fn dist(&self, source_idx: usize, fault: FaultScenario, v: VertexId) -> u32 {
        match fault {
            FaultScenario::NoFault => self.no_fault[source_idx][v],
            FaultScenario::EdgeFault(e) => {
                debug_assert_eq!(self.model, FaultModel::EdgeFailure);
                match &self.per_fault[source_idx][e] {
                    FaultDist::Unchanged => self.no_fault[source_idx][v],
                    FaultDist::Dist(d) => d[v],
                }
            }
            FaultScenario::VertexFault(w) => {
                debug_assert_eq!(self.model, FaultModel::VertexFailure);
                match &self.per_fault[source_idx][w] {
                    FaultDist::Unchanged => self.no_fault[source_idx][v],
                    FaultDist::Dist(d) => d[v],
                }
            }
        }
    }

    /// Scenario list matching this table, `NoFault` first.
    pub fn scenarios(&self, g: &Graph) -> Vec<FaultScenario> {
        fault_scenarios(g, self.model)
    }
}

/// Whether removing `fault` can change any distance from `s`, judged from
/// the fault-free distances `base`. Shortest paths only use edges between
/// consecutive layers, so anything else is invisible to them.
fn fault_touches_shortest_paths(
    g: &Graph,
    base: &[u32],
    s: VertexId,
    fault: FaultScenario,
) -> bool {
    match fault {
        FaultScenario::NoFault => false,
        FaultScenario::EdgeFault(e) => {
            let (a, b) = g.endpoints(e);
            base[a] != INF && base[b] != INF && base[a].abs_diff(base[b]) == 1
        }
        FaultScenario::VertexFault(w) => w != s && base[w] != INF,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use std::cmp::Ordering;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn bfs_on_a_line() {
        let g = path(3);
        assert_eq!(bfs_distances(g.full_view(), 0), vec![0, 1, 2]);
    }

    #[test]
    fn bfs_on_a_cycle() {
        let g = cycle(5);
        assert_eq!(bfs_distances(g.full_view(), 0), vec![0, 1, 2, 2, 1]);
    }

    #[test]
    fn bfs_reports_disconnection() {
        let g = path(3);
        let view = g.view(FaultScenario::EdgeFault(1)).unwrap();
        assert_eq!(bfs_distances(view, 0), vec![0, 1, INF]);
    }

    #[test]
    fn cost_order_matches_frozen_examples() {
        let c = |hops: u32, ids: &[EdgeId]| {
            let mut c = CanonCost::from_edges(ids.iter().copied());
            assert_eq!(c.hops, ids.len() as u32);
            c.hops = hops;
            c
        };
        // 2^0 + 2^1 = 3  <  2^2 + 2^3 = 12
        assert_eq!(
            compare_costs(&c(2, &[0, 1]), &c(2, &[2, 3])),
            Ordering::Less
        );
        // hops dominate any key
        assert_eq!(compare_costs(&c(1, &[5]), &c(2, &[0, 1])), Ordering::Less);
        // 2^0 + 2^3 = 9  >  2^1 + 2^2 = 6
        assert_eq!(
            compare_costs(&c(2, &[0, 3]), &c(2, &[1, 2])),
            Ordering::Greater
        );
    }

    #[test]
    fn extend_strictly_increases_cost() {
        let base = CanonCost::from_edges([4, 1]);
        let bigger = base.extend(7);
        assert_eq!(bigger.hops(), 3);
        assert!(compare_costs(&base, &bigger) == Ordering::Less);
        assert_eq!(bigger.tie_key(), &[7, 4, 1]);
    }

    #[test]
    fn cmp_extended_agrees_with_materialized_extend() {
        let a = CanonCost::from_edges([9, 2]);
        let b = CanonCost::from_edges([9, 3]);
        assert_eq!(cmp_extended(&a, 5, &b, 1), a.extend(5).cmp(&b.extend(1)));
        assert_eq!(cmp_extended(&a, 10, &b, 0), a.extend(10).cmp(&b.extend(0)));
        assert_eq!(cmp_extended(&a, 3, &b, 2), a.extend(3).cmp(&b.extend(2)));
    }

    #[test]
    fn square_tree_prefers_low_edge_ids() {
        // edges: e0={0,1}, e1={1,2}, e2={2,3}, e3={3,0}
        let g = cycle(4);
        let tree = canonical_tree(g.full_view(), 0);
        // vertex 2 is reached via {e0,e1} (key 3) not {e3,e2} (key 12)
        assert_eq!(tree.parent_edge(2), Some(1));
        assert_eq!(tree.dist(2), 2);
        assert_eq!(tree.path_to(&g, 2), Some(vec![0, 1]));
    }

    #[test]
    fn stored_costs_match_the_reconstructed_paths() {
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (2, 5),
                (5, 4),
                (4, 6),
            ],
        )
        .unwrap();
        for fault in fault_scenarios(&g, FaultModel::EdgeFailure) {
            let tree = canonical_tree(g.view(fault).unwrap(), 0);
            for v in 0..g.vertex_count() {
                match tree.path_to(&g, v) {
                    Some(path) => {
                        assert_eq!(
                            tree.cost(v),
                            Some(&CanonCost::from_edges(path.iter().copied()))
                        );
                        assert_eq!(path.len() as u32, tree.dist(v));
                    }
                    None => assert!(tree.cost(v).is_none()),
                }
            }
        }
    }

    #[test]
    fn tree_input_reproduces_itself() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (0, 5)]).unwrap();
        let tree = canonical_tree(g.full_view(), 0);
        let edges: Vec<EdgeId> = tree.tree_edges().collect();
        assert_eq!(edges.len(), 5);
        for e in 0..g.edge_count() {
            assert!(edges.contains(&e));
        }
    }

    #[test]
    fn tree_hops_match_bfs_under_faults() {
        let g = cycle(6);
        for fault in fault_scenarios(&g, FaultModel::EdgeFailure) {
            let view = g.view(fault).unwrap();
            let tree = canonical_tree(view, 0);
            assert_eq!(
                (0..6).map(|v| tree.dist(v)).collect::<Vec<_>>(),
                bfs_distances(view, 0)
            );
        }
    }

    #[test]
    fn tree_from_dead_source_is_empty() {
        let g = cycle(4);
        let view = g.view(FaultScenario::VertexFault(0)).unwrap();
        let tree = canonical_tree(view, 0);
        assert_eq!(tree.dist(0), INF);
        assert!(tree.tree_edges().next().is_none());
    }

    #[test]
    fn dist_tables_match_direct_bfs() {
        let g = cycle(6);
        let tables = DistTables::build(&g, &[0, 3], FaultModel::EdgeFailure);
        for (si, &s) in [0usize, 3].iter().enumerate() {
            for fault in fault_scenarios(&g, FaultModel::EdgeFailure) {
                let direct = bfs_distances(g.view(fault).unwrap(), s);
                for (v, &d) in direct.iter().enumerate() {
                    assert_eq!(tables.dist(si, fault, v), d);
                }
            }
        }
    }

    #[test]
    fn dist_tables_vertex_model_match_direct_bfs() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        let tables = DistTables::build(&g, &[0], FaultModel::VertexFailure);
        for fault in fault_scenarios(&g, FaultModel::VertexFailure) {
            if fault == FaultScenario::VertexFault(0) {
                continue; // consumers never query distances from a dead source
            }
            let direct = bfs_distances(g.view(fault).unwrap(), 0);
            for (v, &d) in direct.iter().enumerate() {
                assert_eq!(tables.dist(0, fault, v), d, "fault {fault} v {v}");
            }
        }
    }
}
