//! Brute-force oracles shared by the integration suites, deliberately
//! independent of the library's algorithm paths: plain DFS enumeration and
//! wide-integer arithmetic only.

#![allow(dead_code)]

use ftbfs::*;

/// All simple `s`-to-`t` paths in the view, as edge-id lists, by exhaustive
/// DFS. Exponential; callers keep `n` tiny.
pub fn enumerate_simple_paths(view: GraphView<'_>, s: VertexId, t: VertexId) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::new();
    if !view.is_vertex_live(s) {
        return out;
    }
    let mut visited = vec![false; view.vertex_count()];
    visited[s] = true;
    let mut path = Vec::new();
    dfs_paths(view, s, t, &mut visited, &mut path, &mut out);
    out
}

fn dfs_paths(
    view: GraphView<'_>,
    u: VertexId,
    t: VertexId,
    visited: &mut Vec<bool>,
    path: &mut Vec<EdgeId>,
    out: &mut Vec<Vec<EdgeId>>,
) {
    if u == t {
        out.push(path.clone());
        return;
    }
    let neighbors: Vec<(VertexId, EdgeId)> = view.live_neighbors(u).collect();
    for (w, e) in neighbors {
        if !visited[w] {
            visited[w] = true;
            path.push(e);
            dfs_paths(view, w, t, visited, path, out);
            path.pop();
            visited[w] = false;
        }
    }
}

/// Path weight under the explicit scheme "edge k weighs 2^(m+1) + 2^k",
/// summed in exact 128-bit arithmetic. Valid for `m <= 120` and paths of at
/// most `n - 1` edges.
pub fn explicit_path_weight(m: usize, edges: &[EdgeId]) -> u128 {
    let base = 1u128 << (m + 1);
    edges.iter().map(|&e| base + (1u128 << e)).sum()
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() > 0 && bfs_distances(g.full_view(), 0).iter().all(|&d| d != INF)
}

/// Deterministic stream of seeded connected random graphs: attempt `i` draws
/// `gen_random(ns[i % ns.len()], ps[i % ps.len()], base_seed + i)` and keeps
/// the connected ones until `count` are collected.
pub fn connected_sample(
    count: usize,
    ns: &[usize],
    ps: &[f64],
    base_seed: u64,
) -> Vec<(Graph, u64)> {
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count {
        let n = ns[(i as usize) % ns.len()];
        let p = ps[(i as usize) % ps.len()];
        let seed = base_seed + i;
        let g = gen_random(n, p, seed).expect("valid parameters");
        if is_connected(&g) {
            out.push((g, seed));
        }
        i += 1;
    }
    out
}
