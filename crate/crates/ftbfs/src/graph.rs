//! Undirected simple graphs with stable edge identities and fault views.
//!
//! Vertices are dense integers `0..n`. Edges carry dense ids `0..m` assigned
//! in insertion order. Every tie-break in this crate runs through edge ids,
//! so the id assignment is part of a graph's identity and survives the text
//! format round trip bit-exactly.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph with {n} vertices")]
    VertexOutOfRange { v: VertexId, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: VertexId },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("edge fault {e} out of range for graph with {m} edges")]
    EdgeFaultOutOfRange { e: EdgeId, m: usize },
    #[error("vertex fault {v} out of range for graph with {n} vertices")]
    VertexFaultOutOfRange { v: VertexId, n: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: malformed header, expected \"n m\"")]
    BadHeader { line: usize },
    #[error("line {line}: malformed edge line, expected \"u v\"")]
    BadEdge { line: usize },
    #[error("line {line}: self-loop")]
    SelfLoop { line: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error("line {line}: vertex index out of range")]
    VertexOutOfRange { line: usize },
    #[error("header declares {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// A single failure scenario. `NoFault` is a first-class scenario so that
/// fault enumerations can uniformly include the intact graph.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaultScenario {
    NoFault,
    EdgeFault(EdgeId),
    VertexFault(VertexId),
}

impl fmt::Display for FaultScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaultScenario::NoFault => write!(f, "none"),
            FaultScenario::EdgeFault(e) => write!(f, "edge:{e}"),
            FaultScenario::VertexFault(v) => write!(f, "vertex:{v}"),
        }
    }
}

/// Which kind of single failure a structure must tolerate.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum FaultModel {
    EdgeFailure,
    VertexFailure,
}

impl fmt::Display for FaultModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaultModel::EdgeFailure => write!(f, "edge"),
            FaultModel::VertexFailure => write!(f, "vertex"),
        }
    }
}

/// All failure scenarios of a model, `NoFault` first, then ids ascending.
/// This order defines "first violation" everywhere.
pub fn fault_scenarios(g: &Graph, model: FaultModel) -> Vec<FaultScenario> {
    let mut out = Vec::with_capacity(
        1 + match model {
            FaultModel::EdgeFailure => g.edge_count(),
            FaultModel::VertexFailure => g.vertex_count(),
        },
    );
    out.push(FaultScenario::NoFault);
    match model {
        FaultModel::EdgeFailure => out.extend((0..g.edge_count()).map(FaultScenario::EdgeFault)),
        FaultModel::VertexFailure => {
            out.extend((0..g.vertex_count()).map(FaultScenario::VertexFault));
        }
    }
    out
}

/// Simple undirected graph. Immutable once built; views are cheap handles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    /// Adds an edge; its id is the number of edges added before it.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v: u });
        }
        let key = (u.min(v), u.max(v));
        if self.index.contains_key(&key) {
            return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        self.index.insert(key, id);
        Ok(id)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of an edge, normalized so the smaller vertex comes first.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Neighbors of `v` with the connecting edge ids, in insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Read-only view of the graph with one failure applied.
    pub fn view(&self, fault: FaultScenario) -> Result<GraphView<'_>, GraphError> {
        match fault {
            FaultScenario::NoFault => {}
            FaultScenario::EdgeFault(e) => {
                if e >= self.edges.len() {
                    return Err(GraphError::EdgeFaultOutOfRange {
                        e,
                        m: self.edges.len(),
                    });
                }
            }
            FaultScenario::VertexFault(v) => {
                if v >= self.n {
                    return Err(GraphError::VertexFaultOutOfRange { v, n: self.n });
                }
            }
        }
        Ok(GraphView { graph: self, fault })
    }

    /// The fault-free view.
    pub fn full_view(&self) -> GraphView<'_> {
        GraphView {
            graph: self,
            fault: FaultScenario::NoFault,
        }
    }
}

/// A graph with one failed element hidden from traversal. Copy-cheap;
/// surviving edges keep their original ids.
#[derive(Debug, Copy, Clone)]
pub struct GraphView<'a> {
    graph: &'a Graph,
    fault: FaultScenario,
}

impl<'a> GraphView<'a> {
    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn fault(&self) -> FaultScenario {
        self.fault
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.n
    }

    pub fn is_vertex_live(&self, v: VertexId) -> bool {
        !matches!(self.fault, FaultScenario::VertexFault(w) if w == v)
    }

    pub fn is_edge_live(&self, e: EdgeId) -> bool {
        match self.fault {
            FaultScenario::NoFault => true,
            FaultScenario::EdgeFault(f) => e != f,
            FaultScenario::VertexFault(w) => {
                let (a, b) = self.graph.edges[e];
                a != w && b != w
            }
        }
    }

    /// Traversable neighbors of `v`. A failed vertex has none, and edges
    /// incident to a failed vertex are invisible from both sides.
    pub fn live_neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        let view = *self;
        self.graph.adj[v]
            .iter()
            .copied()
            .filter(move |&(_, e)| view.is_edge_live(e))
    }

    pub fn live_edge_count(&self) -> usize {
        (0..self.graph.edge_count())
            .filter(|&e| self.is_edge_live(e))
            .count()
    }
}

/// Parses the text format: optional `#` comment lines, a header `n m`, then
/// exactly `m` lines `u v`. Edge ids follow line order.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'));

    let (header_line, header) = data_lines.next().ok_or(ParseError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    let n: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::BadHeader { line: header_line })?;
    let m: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::BadHeader { line: header_line })?;
    if tokens.next().is_some() {
        return Err(ParseError::BadHeader { line: header_line });
    }

    let mut g = Graph::new(n);
    let mut found = 0usize;
    for (line, raw) in data_lines {
        let mut tokens = raw.split_whitespace();
        let u: VertexId = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadEdge { line })?;
        let v: VertexId = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadEdge { line })?;
        if tokens.next().is_some() {
            return Err(ParseError::BadEdge { line });
        }
        found += 1;
        if found > m {
            continue; // keep counting for the mismatch report
        }
        g.add_edge(u, v).map_err(|e| match e {
            GraphError::SelfLoop { .. } => ParseError::SelfLoop { line },
            GraphError::DuplicateEdge { .. } => ParseError::DuplicateEdge { line },
            _ => ParseError::VertexOutOfRange { line },
        })?;
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found });
    }
    Ok(g)
}

/// Canonical text form: `n m` then one `u v` line per edge in id order,
/// endpoints ascending, LF newlines. `parse_graph(write_graph(g)) == g`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
