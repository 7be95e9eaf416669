//! Instance generators with machine-checkable metadata.
//!
//! Each constructor returns the graph together with named vertex groups,
//! edge families expected to be forced (present in every valid structure),
//! and integer targets recomputed from the built graph. Edge emission order
//! is part of each recipe: ids drive every tie-break, so the generators can
//! steer which shortest path the canonical builder prefers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cover::{brute_min_cover, SetCoverInstance};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("d must be at least 2, got {0}")]
    DepthTooSmall(usize),
    #[error("sigma must be at least 1, got {0}")]
    SigmaTooSmall(usize),
    #[error("R must be at least 1, got {0}")]
    ReplicationTooSmall(usize),
    #[error("set-cover instance must have at least one element and one set")]
    EmptyInstance,
    #[error("edge probability must be in [0, 1], got {0}")]
    BadEdgeProbability(f64),
    #[error("vertex count must be positive")]
    EmptyGraph,
}

/// A generated graph plus everything a test or experiment needs to check it.
#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub family: String,
    pub graph: Graph,
    pub sources: Vec<VertexId>,
    pub groups: BTreeMap<String, Vec<VertexId>>,
    pub forced_families: BTreeMap<String, Vec<EdgeId>>,
    pub targets: BTreeMap<String, i64>,
    pub notes: Vec<String>,
}

impl GeneratedInstance {
    /// Sidecar text: groups as vertex lists, forced families as edge lists,
    /// targets as `key = value` pairs.
    pub fn metadata_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# ftbfs instance metadata").unwrap();
        writeln!(out, "family: {}", self.family).unwrap();
        writeln!(out, "n: {}", self.graph.vertex_count()).unwrap();
        writeln!(out, "m: {}", self.graph.edge_count()).unwrap();
        writeln!(out, "sources: {}", join(&self.sources)).unwrap();
        for (name, vertices) in &self.groups {
            writeln!(out, "group {name}: {}", join(vertices)).unwrap();
        }
        for (name, edges) in &self.forced_families {
            writeln!(out, "forced {name}: {}", join(edges)).unwrap();
        }
        for (name, value) in &self.targets {
            writeln!(out, "target {name} = {value}").unwrap();
        }
        for note in &self.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        out
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Hanging-path length parameter: `6 + 2 * (d - j)` for `j` in `1..=d`.
fn path_param(d: usize, j: usize) -> usize {
    6 + 2 * (d - j)
}

/// How many spoke vertices the single-source family uses. Large enough that
/// the spoke block dominates the vertex count at every generated size, which
/// keeps the forced-edge growth close to its limiting power law over the
/// small-`d` sweep.
fn spoke_count(d: usize) -> usize {
    18 * d * d
}

/// Single-source forced-density family.
///
/// A trunk `v_1 .. v_{d+1}` carries `d` hanging paths of strictly decreasing
/// length from `v_j` down to a terminal `z_j`; a spoke set `X` hangs off the
/// trunk end `v*`; `X` and `Z` are completely joined. Cutting the `j`-th
/// trunk edge makes the full `j`-th hanging path the unique detour to every
/// spoke, so all `d * |X|` bipartite edges are forced. Within each terminal's
/// bipartite block the edge to the same-index spoke is emitted first, which
/// puts exactly that edge in the fault-free canonical tree.
pub fn gen_lb_single(d: usize) -> Result<GeneratedInstance, GenError> {
    if d < 2 {
        return Err(GenError::DepthTooSmall(d));
    }
    let x_count = spoke_count(d);
    let q_size = d * d + 7 * d;
    let n = (d + 1) + (q_size - d) + x_count; // trunk + fresh path vertices + spokes

    let mut g = Graph::new(n);
    let vstar = d;
    let mut next = d + 1;

    // hanging paths: t_j interior vertices then the terminal z_j
    let mut path_vertices: Vec<Vec<VertexId>> = Vec::with_capacity(d);
    let mut zs = Vec::with_capacity(d);
    for j in 1..=d {
        let t = path_param(d, j);
        let mut verts = vec![j - 1]; // v_j
        for _ in 0..t {
            verts.push(next);
            next += 1;
        }
        verts.push(next); // z_j
        zs.push(next);
        next += 1;
        path_vertices.push(verts);
    }
    let xs: Vec<VertexId> = (next..next + x_count).collect();

    // trunk edges first: failing edge j-1 is the j-th scenario the verifier
    // reaches, so forced-edge probes terminate early
    for j in 1..=d {
        g.add_edge(j - 1, j).unwrap();
    }
    for verts in &path_vertices {
        for w in verts.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
    }
    for &x in &xs {
        g.add_edge(vstar, x).unwrap();
    }
    let mut bipartite = Vec::with_capacity(d * x_count);
    for (j, &z) in zs.iter().enumerate() {
        bipartite.push(g.add_edge(xs[j], z).unwrap()); // same-index spoke first
        for (i, &x) in xs.iter().enumerate() {
            if i != j {
                bipartite.push(g.add_edge(x, z).unwrap());
            }
        }
    }

    let mut q_vertices: Vec<VertexId> = path_vertices.iter().flatten().copied().collect();
    q_vertices.sort_unstable();
    q_vertices.dedup();
    assert_eq!(q_vertices.len(), q_size);
    assert_eq!(g.vertex_count(), n);

    let mut groups = BTreeMap::new();
    groups.insert("pi".to_string(), (0..=d).collect());
    groups.insert("Q".to_string(), q_vertices);
    groups.insert("X".to_string(), xs.clone());
    groups.insert("Z".to_string(), zs);
    groups.insert("vstar".to_string(), vec![vstar]);

    let mut targets = BTreeMap::new();
    targets.insert("d".to_string(), d as i64);
    targets.insert("Q".to_string(), q_size as i64);
    targets.insert("X".to_string(), x_count as i64);
    targets.insert("B".to_string(), (d * x_count) as i64);
    targets.insert("Ehat".to_string(), (d * x_count) as i64);
    for j in 1..=d {
        targets.insert(format!("t_{j}"), path_param(d, j) as i64);
    }

    let mut forced = BTreeMap::new();
    forced.insert("B".to_string(), bipartite);

    Ok(GeneratedInstance {
        family: "lb-single".to_string(),
        graph: g,
        sources: vec![0],
        groups,
        forced_families: forced,
        targets,
        notes: vec![
            "Ehat counts the complete bipartite block |Z| * |X| = d * |X|; \
             the per-path vertex total Q * |X| would differ"
                .to_string(),
        ],
    })
}

/// Multi-source forced-density family: `sigma` copies of the trunk-and-paths
/// gadget share one hub `v*` and one spoke set `X`; each copy's source sits
/// at the far end of its trunk, the hub attaches at the near end, and `X` is
/// completely joined to the union of the copies' terminals. Per copy, the
/// single-source argument forces all of its `d * |X|` cross edges.
pub fn gen_lb_multi(d: usize, sigma: usize) -> Result<GeneratedInstance, GenError> {
    if d < 2 {
        return Err(GenError::DepthTooSmall(d));
    }
    if sigma < 1 {
        return Err(GenError::SigmaTooSmall(sigma));
    }
    let copy_size = d * d + 7 * d;
    let x_count = spoke_count(d);
    let n = sigma * copy_size + 1 + x_count;
    let mut g = Graph::new(n);
    let vstar = sigma * copy_size;
    let xs: Vec<VertexId> = (vstar + 1..vstar + 1 + x_count).collect();

    // vertex layout per copy: u_1..u_d, then per path its interiors + leaf
    let mut copy_us: Vec<Vec<VertexId>> = Vec::with_capacity(sigma);
    let mut copy_leaves: Vec<Vec<VertexId>> = Vec::with_capacity(sigma);
    let mut copy_paths: Vec<Vec<Vec<VertexId>>> = Vec::with_capacity(sigma);
    for c in 0..sigma {
        let base = c * copy_size;
        let us: Vec<VertexId> = (base..base + d).collect();
        let mut next = base + d;
        let mut leaves = Vec::with_capacity(d);
        let mut paths = Vec::with_capacity(d);
        for j in 1..=d {
            let t = path_param(d, j);
            let mut verts = vec![us[j - 1]];
            for _ in 0..t {
                verts.push(next);
                next += 1;
            }
            verts.push(next);
            leaves.push(next);
            next += 1;
            paths.push(verts);
        }
        assert_eq!(next, base + copy_size);
        copy_us.push(us);
        copy_leaves.push(leaves);
        copy_paths.push(paths);
    }

    // trunk edges of every copy first, for early forced-edge witnesses
    for us in &copy_us {
        for w in us.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
    }
    for paths in &copy_paths {
        for verts in paths {
            for w in verts.windows(2) {
                g.add_edge(w[0], w[1]).unwrap();
            }
        }
    }
    for us in &copy_us {
        g.add_edge(vstar, us[d - 1]).unwrap(); // hub attaches at the near end
    }
    for &x in &xs {
        g.add_edge(vstar, x).unwrap();
    }
    let mut cross = Vec::with_capacity(sigma * d * x_count);
    for leaves in &copy_leaves {
        for (j, &z) in leaves.iter().enumerate() {
            cross.push(g.add_edge(xs[j], z).unwrap());
            for (i, &x) in xs.iter().enumerate() {
                if i != j {
                    cross.push(g.add_edge(x, z).unwrap());
                }
            }
        }
    }

    let sources: Vec<VertexId> = copy_us.iter().map(|us| us[0]).collect();

    let mut groups = BTreeMap::new();
    groups.insert("X".to_string(), xs);
    groups.insert("vstar".to_string(), vec![vstar]);
    let mut all_leaves = Vec::new();
    for (c, leaves) in copy_leaves.iter().enumerate() {
        groups.insert(format!("leaves_{c}"), leaves.clone());
        groups.insert(
            format!("copy_{c}"),
            (c * copy_size..(c + 1) * copy_size).collect(),
        );
        all_leaves.extend_from_slice(leaves);
    }
    groups.insert("leaves".to_string(), all_leaves);

    let mut targets = BTreeMap::new();
    targets.insert("d".to_string(), d as i64);
    targets.insert("sigma".to_string(), sigma as i64);
    targets.insert("X".to_string(), x_count as i64);
    targets.insert("copy_size".to_string(), copy_size as i64);
    targets.insert("leaves_per_copy".to_string(), d as i64);
    targets.insert("cross".to_string(), (sigma * d * x_count) as i64);

    let mut forced = BTreeMap::new();
    forced.insert("cross".to_string(), cross);

    Ok(GeneratedInstance {
        family: "lb-multi".to_string(),
        graph: g,
        sources,
        groups,
        forced_families: forced,
        targets,
        notes: Vec::new(),
    })
}

/// Embeds a set-cover instance into a graph whose minimum structure size is
/// `|Etilde| + kappa* * R`: elements become terminals reached by hanging
/// paths off a trunk, sets become spoke vertices adjacent to their elements'
/// terminals, and an `R`-fold fan `Y` multiplies the cost of connecting the
/// chosen spokes. Every edge outside the complete `X x Y` block is forced.
pub fn gen_setcover_reduction(
    inst: &SetCoverInstance,
    r: usize,
) -> Result<GeneratedInstance, GenError> {
    if r < 1 {
        return Err(GenError::ReplicationTooSmall(r));
    }
    let n_elems = inst.universe_size();
    let m_sets = inst.set_count();
    if n_elems < 1 || m_sets < 1 {
        return Err(GenError::EmptyInstance);
    }

    let interior: usize = (1..=n_elems).map(|i| 6 + 2 * (n_elems - i) - 1).sum();
    let n = (n_elems + 2) + 1 + r + interior + n_elems + m_sets;
    let mut g = Graph::new(n);

    // trunk p_0 .. p_{N+1}
    let p: Vec<VertexId> = (0..=n_elems + 1).collect();
    let vprime = n_elems + 2;
    let ys: Vec<VertexId> = (vprime + 1..vprime + 1 + r).collect();
    let mut next = vprime + 1 + r;
    let mut q_interiors = Vec::new();
    let mut path_vertices: Vec<Vec<VertexId>> = Vec::with_capacity(n_elems);
    let mut zs = Vec::with_capacity(n_elems);
    for i in 1..=n_elems {
        let t = 6 + 2 * (n_elems - i);
        let mut verts = vec![p[i - 1]];
        for _ in 0..t - 1 {
            verts.push(next);
            q_interiors.push(next);
            next += 1;
        }
        verts.push(next);
        zs.push(next);
        next += 1;
        path_vertices.push(verts);
    }
    let xs: Vec<VertexId> = (next..next + m_sets).collect();
    assert_eq!(next + m_sets, n);

    for w in p.windows(2) {
        g.add_edge(w[0], w[1]).unwrap();
    }
    g.add_edge(p[n_elems], vprime).unwrap();
    for &y in &ys {
        g.add_edge(p[n_elems + 1], y).unwrap();
    }
    for verts in &path_vertices {
        for w in verts.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
    }
    for &x in &xs {
        g.add_edge(vprime, x).unwrap();
    }
    for &x in &xs {
        g.add_edge(p[n_elems + 1], x).unwrap();
    }
    for (j, &x) in xs.iter().enumerate() {
        for &elem in inst.set(j) {
            g.add_edge(x, zs[elem]).unwrap();
        }
    }
    let xy_start = g.edge_count();
    let mut xy = Vec::with_capacity(m_sets * r);
    for &x in &xs {
        for &y in &ys {
            xy.push(g.add_edge(x, y).unwrap());
        }
    }
    let etilde: Vec<EdgeId> = (0..xy_start).collect();

    let mut groups = BTreeMap::new();
    groups.insert("P".to_string(), p);
    groups.insert("vprime".to_string(), vec![vprime]);
    groups.insert("Y".to_string(), ys);
    groups.insert("Q".to_string(), q_interiors);
    groups.insert("Z".to_string(), zs);
    groups.insert("X".to_string(), xs);

    let mut targets = BTreeMap::new();
    targets.insert("N".to_string(), n_elems as i64);
    targets.insert("M".to_string(), m_sets as i64);
    targets.insert("R".to_string(), r as i64);
    targets.insert("Etilde".to_string(), etilde.len() as i64);
    targets.insert("n".to_string(), n as i64);
    if m_sets <= 20 {
        targets.insert("kappa".to_string(), brute_min_cover(inst).len() as i64);
    }

    let mut forced = BTreeMap::new();
    forced.insert("Etilde".to_string(), etilde);

    Ok(GeneratedInstance {
        family: "reduction".to_string(),
        graph: g,
        sources: vec![0],
        groups,
        forced_families: forced,
        targets,
        notes: Vec::new(),
    })
}

/// Adversarial variant of the single-source family: one extra terminal `z_0`
/// adjacent to every spoke and to a relay `r_j` spliced into each hanging
/// path. Each trunk failure now has two equal-length detours per spoke; the
/// `z_0` edges are emitted last, so the id tie-break always picks the detour
/// through the per-terminal bipartite edge and the exact builder keeps the
/// whole block, while `z_0` alone would cover every spoke. Nothing in the
/// block is forced anymore.
pub fn gen_bad_example(d: usize) -> Result<GeneratedInstance, GenError> {
    if d < 2 {
        return Err(GenError::DepthTooSmall(d));
    }
    let x_count = spoke_count(d);
    let q_size = d * d + 7 * d + d; // one relay per path
    let n = (d + 1) + (q_size - d) + x_count + 1;

    let mut g = Graph::new(n);
    let vstar = d;
    let mut next = d + 1;
    let mut path_vertices: Vec<Vec<VertexId>> = Vec::with_capacity(d);
    let mut zs = Vec::with_capacity(d);
    let mut rs = Vec::with_capacity(d);
    for j in 1..=d {
        let t = path_param(d, j);
        let mut verts = vec![j - 1];
        for _ in 0..t {
            verts.push(next);
            next += 1;
        }
        verts.push(next); // relay r_j replaces the last edge
        rs.push(next);
        next += 1;
        verts.push(next); // z_j
        zs.push(next);
        next += 1;
        path_vertices.push(verts);
    }
    let xs: Vec<VertexId> = (next..next + x_count).collect();
    let z0 = next + x_count;

    for j in 1..=d {
        g.add_edge(j - 1, j).unwrap();
    }
    for verts in &path_vertices {
        for w in verts.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
    }
    for &x in &xs {
        g.add_edge(vstar, x).unwrap();
    }
    let mut bipartite = Vec::with_capacity(d * x_count);
    for (j, &z) in zs.iter().enumerate() {
        bipartite.push(g.add_edge(xs[j], z).unwrap());
        for (i, &x) in xs.iter().enumerate() {
            if i != j {
                bipartite.push(g.add_edge(x, z).unwrap());
            }
        }
    }
    // the shortcut edges get the largest ids and therefore lose every tie
    for &rj in &rs {
        g.add_edge(z0, rj).unwrap();
    }
    for &x in &xs {
        g.add_edge(z0, x).unwrap();
    }

    let mut groups = BTreeMap::new();
    groups.insert("pi".to_string(), (0..=d).collect());
    groups.insert("Q".to_string(), {
        let mut q: Vec<VertexId> = path_vertices.iter().flatten().copied().collect();
        q.sort_unstable();
        q.dedup();
        q
    });
    groups.insert("X".to_string(), xs);
    groups.insert("Z".to_string(), zs);
    groups.insert("r".to_string(), rs);
    groups.insert("z0".to_string(), vec![z0]);
    groups.insert("vstar".to_string(), vec![vstar]);

    let mut targets = BTreeMap::new();
    targets.insert("d".to_string(), d as i64);
    targets.insert("X".to_string(), x_count as i64);
    targets.insert("B".to_string(), (d * x_count) as i64);

    Ok(GeneratedInstance {
        family: "bad-example".to_string(),
        graph: g,
        sources: vec![0],
        groups,
        forced_families: BTreeMap::new(),
        targets,
        notes: vec!["no bipartite edge is forced: z0 offers an equal-length detour".to_string()],
    })
}

/// Seeded Erdos-Renyi graph: every pair independently with probability `p`,
/// pairs scanned in ascending order, driven by ChaCha8 so identical
/// `(n, p, seed)` give identical bytes on every platform.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::EmptyGraph);
    }
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GenError::BadEdgeProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, write_graph};

    #[test]
    fn small_d_is_rejected() {
        assert_eq!(gen_lb_single(1).unwrap_err(), GenError::DepthTooSmall(1));
        assert_eq!(gen_bad_example(0).unwrap_err(), GenError::DepthTooSmall(0));
        assert_eq!(gen_lb_multi(3, 0).unwrap_err(), GenError::SigmaTooSmall(0));
    }

    #[test]
    fn degenerate_reduction_inputs_are_rejected() {
        let empty = SetCoverInstance::new(0, vec![]).unwrap();
        assert_eq!(
            gen_setcover_reduction(&empty, 2).unwrap_err(),
            GenError::EmptyInstance
        );
        let sc = SetCoverInstance::new(1, vec![vec![0]]).unwrap();
        assert_eq!(
            gen_setcover_reduction(&sc, 0).unwrap_err(),
            GenError::ReplicationTooSmall(0)
        );
    }

    #[test]
    fn single_source_family_counts_recompute() {
        let inst = gen_lb_single(4).unwrap();
        assert_eq!(inst.targets["Q"], 16 + 28);
        assert_eq!(inst.groups["Q"].len(), 44);
        assert_eq!(inst.forced_families["B"].len() as i64, inst.targets["B"]);
        assert_eq!(
            inst.graph.vertex_count(),
            inst.groups["Q"].len() + inst.groups["X"].len() + 1
        );

        let inst = gen_lb_single(3).unwrap();
        assert_eq!(inst.targets["t_1"], 10);
        assert_eq!(inst.targets["t_2"], 8);
        assert_eq!(inst.targets["t_3"], 6);
    }

    #[test]
    fn generated_graphs_round_trip_through_text() {
        for inst in [
            gen_lb_single(2).unwrap(),
            gen_lb_multi(2, 2).unwrap(),
            gen_bad_example(2).unwrap(),
        ] {
            assert_eq!(parse_graph(&write_graph(&inst.graph)).unwrap(), inst.graph);
        }
    }

    #[test]
    fn multi_family_counts_recompute() {
        let inst = gen_lb_multi(3, 2).unwrap();
        assert_eq!(inst.sources.len(), 2);
        for c in 0..2 {
            assert_eq!(inst.groups[&format!("leaves_{c}")].len(), 3);
            assert_eq!(inst.groups[&format!("copy_{c}")].len() as i64, 9 + 21);
        }
        assert_eq!(
            inst.forced_families["cross"].len() as i64,
            inst.targets["cross"]
        );
    }

    #[test]
    fn reduction_matches_hand_counts() {
        let sc = SetCoverInstance::new(2, vec![vec![0], vec![1]]).unwrap();
        let inst = gen_setcover_reduction(&sc, 2).unwrap();
        // 4 trunk + 1 relay + 2 fan + (7 + 5) interiors + 2 terminals + 2 spokes
        assert_eq!(inst.graph.vertex_count(), 23);
        assert_eq!(inst.targets["n"], 23);
        assert_eq!(inst.targets["kappa"], 2);
        assert_eq!(
            inst.forced_families["Etilde"].len() + 2 * 2,
            inst.graph.edge_count()
        );
    }

    #[test]
    fn five_set_reduction_has_cover_number_two() {
        let sc = SetCoverInstance::new(
            4,
            vec![vec![0, 2, 3], vec![0, 2], vec![1, 3], vec![2], vec![0, 3]],
        )
        .unwrap();
        let inst = gen_setcover_reduction(&sc, 2).unwrap();
        assert_eq!(inst.targets["kappa"], 2);
    }

    #[test]
    fn bad_example_shortcut_edges_come_last() {
        let inst = gen_bad_example(3).unwrap();
        let g = &inst.graph;
        let z0 = inst.groups["z0"][0];
        let first_shortcut = g.edge_count() - inst.groups["X"].len() - inst.groups["r"].len();
        for e in 0..g.edge_count() {
            let (u, v) = g.endpoints(e);
            let touches_z0 = u == z0 || v == z0;
            assert_eq!(touches_z0, e >= first_shortcut, "edge {e}");
        }
    }

    #[test]
    fn random_extremes() {
        let k5 = gen_random(5, 1.0, 7).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let empty = gen_random(5, 0.0, 7).unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn random_generation_is_deterministic() {
        let a = gen_random(40, 0.3, 12345).unwrap();
        let b = gen_random(40, 0.3, 12345).unwrap();
        assert_eq!(write_graph(&a), write_graph(&b));
        let c = gen_random(40, 0.3, 12346).unwrap();
        assert_ne!(write_graph(&a), write_graph(&c));
    }

    #[test]
    fn bad_probability_is_rejected() {
        assert!(matches!(
            gen_random(3, 1.5, 0),
            Err(GenError::BadEdgeProbability(_))
        ));
        assert!(matches!(
            gen_random(3, f64::NAN, 0),
            Err(GenError::BadEdgeProbability(_))
        ));
    }

    #[test]
    fn metadata_lists_groups_families_and_targets() {
        let inst = gen_lb_single(2).unwrap();
        let text = inst.metadata_text();
        assert!(text.contains("family: lb-single"));
        assert!(text.contains("group X:"));
        assert!(text.contains("forced B:"));
        assert!(text.contains("target d = 2"));
    }
}
