//! Weighted undirected graphs with loops, the edge-list text format, walk
//! matrices, connectivity and cut-edge (bridge) detection.
//!
//! Degree convention: `d = A·1`, so a loop of weight `w` at vertex `k`
//! contributes `w` to `d_k` exactly once. This is the convention under which
//! removing an edge `(i, j)` and adding loops of the same weight at `i` and
//! `j` leaves every degree unchanged. It differs from the "loops count twice"
//! convention common in graph theory texts.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tol;

/// An edge between vertex indices `u <= v`; `u == v` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeId {
    pub u: usize,
    pub v: usize,
}

impl EdgeId {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            EdgeId { u: a, v: b }
        } else {
            EdgeId { u: b, v: a }
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Weighted undirected graph stored as a dense symmetric adjacency matrix.
///
/// Diagonal entries are loop weights. Vertex labels are the integers the
/// graph was read with (or `1..=n` for generated graphs) and are only used
/// for input and output.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    adjacency: DMatrix<f64>,
    labels: Vec<u64>,
}

/// `d = A·1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeVector(pub Vec<f64>);

impl DegreeVector {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Row-stochastic walk matrix `P = D⁻¹A` together with the degrees it was
/// built from.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    p: DMatrix<f64>,
    degrees: DegreeVector,
}

impl Graph {
    /// Graph on `n` vertices with no edges, labelled `1..=n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: DMatrix::zeros(n, n),
            labels: (1..=n as u64).collect(),
        }
    }

    pub fn from_adjacency(adjacency: DMatrix<f64>) -> Result<Self> {
        if !adjacency.is_square() {
            return Err(Error::InvalidAdjacency(format!(
                "matrix is {}x{}",
                adjacency.nrows(),
                adjacency.ncols()
            )));
        }
        let n = adjacency.nrows();
        for i in 0..n {
            for j in 0..n {
                let a = adjacency[(i, j)];
                if !a.is_finite() || a < 0.0 {
                    return Err(Error::InvalidAdjacency(format!(
                        "entry ({i}, {j}) = {a} is not a nonnegative weight"
                    )));
                }
                if a != adjacency[(j, i)] {
                    return Err(Error::InvalidAdjacency(format!(
                        "entries ({i}, {j}) and ({j}, {i}) differ"
                    )));
                }
            }
        }
        Ok(Graph {
            adjacency,
            labels: (1..=n as u64).collect(),
        })
    }

    /// Builds a graph from `(u, v, weight)` triples over vertices `0..n`.
    /// Repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut g = Graph::empty(n);
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidAdjacency(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidAdjacency(format!(
                    "edge ({u}, {v}) has non-positive weight {w}"
                )));
            }
            if g.adjacency[(u, v)] != 0.0 {
                return Err(Error::InvalidAdjacency(format!("edge ({u}, {v}) repeated")));
            }
            g.adjacency[(u, v)] = w;
            g.adjacency[(v, u)] = w;
        }
        Ok(g)
    }

    /// Unit-weight graph from an edge list.
    pub fn from_unit_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(n, edges.iter().map(|&(u, v)| (u, v, 1.0)))
    }

    pub fn with_labels(mut self, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Inconsistent(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adjacency.nrows()
    }

    pub fn adjacency(&self) -> &DMatrix<f64> {
        &self.adjacency
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, vertex: usize) -> u64 {
        self.labels[vertex]
    }

    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.adjacency[(u, v)]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adjacency[(u, v)] > 0.0
    }

    /// Non-loop edges in lexicographic order.
    pub fn edges(&self) -> Vec<EdgeId> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacency[(u, v)] > 0.0 {
                    out.push(EdgeId { u, v });
                }
            }
        }
        out
    }

    /// `(vertex, weight)` for every loop.
    pub fn loops(&self) -> Vec<(usize, f64)> {
        (0..self.n())
            .filter_map(|k| {
                let w = self.adjacency[(k, k)];
                (w > 0.0).then_some((k, w))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n()).any(|k| self.adjacency[(k, k)] > 0.0)
    }

    /// True when there are no loops and every edge has weight exactly one.
    pub fn is_simple_unweighted(&self) -> bool {
        !self.has_loops() && self.adjacency.iter().all(|&a| a == 0.0 || a == 1.0)
    }

    /// Neighbours of `u`, excluding `u` itself.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| v != u && self.adjacency[(u, v)] > 0.0)
    }

    pub fn degrees(&self) -> DegreeVector {
        DegreeVector(self.adjacency.row_iter().map(|row| row.sum()).collect())
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        support_components(&self.adjacency)
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.connected_components().len() == 1
    }

    /// Subgraph induced by `vertices` (in the given order), keeping loop
    /// weights and labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let adjacency = DMatrix::from_fn(k, k, |i, j| self.adjacency[(vertices[i], vertices[j])]);
        Graph {
            adjacency,
            labels: vertices.iter().map(|&v| self.labels[v]).collect(),
        }
    }

    /// Copy of the graph with `w` added to the loop weight at `k`.
    pub fn add_loop(&self, k: usize, w: f64) -> Result<Graph> {
        if k >= self.n() {
            return Err(crate::error::invalid(
                "k",
                format!("vertex {k} out of range"),
            ));
        }
        if !(w.is_finite() && w > 0.0) {
            return Err(crate::error::invalid(
                "w",
                format!("loop weight {w} must be positive"),
            ));
        }
        let mut g = self.clone();
        g.adjacency[(k, k)] += w;
        Ok(g)
    }

    /// Canonical edge-list text: one `u v [w]` line per edge (loops
    /// included), labels as stored, weight omitted when equal to one.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let n = self.n();
        for u in 0..n {
            for v in u..n {
                let w = self.adjacency[(u, v)];
                if w > 0.0 {
                    if w == 1.0 {
                        let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
                    } else {
                        let _ = writeln!(out, "{} {} {}", self.labels[u], self.labels[v], w);
                    }
                }
            }
        }
        out
    }

    /// Whitespace-separated dense adjacency matrix, one row per line.
    pub fn to_dense_string(&self) -> String {
        let mut out = String::new();
        for row in self.adjacency.row_iter() {
            let line: Vec<String> = row.iter().map(|a| a.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses the edge-list format: one `u v [w]` per line, `#` starts a
/// comment, `w` defaults to 1 and must be positive, `u u w` is a loop.
///
/// Labels are non-negative integers, compacted in ascending order to
/// indices `0..n`. With `one_based` the label 0 is rejected.
pub fn parse_edge_list(text: &str, one_based: bool) -> Result<Graph> {
    let mut raw: Vec<(u64, u64, f64)> = Vec::new();
    let mut seen: HashMap<(u64, u64), usize> = HashMap::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() < 2 || tokens.len() > 3 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `u v [w]`, found {} fields", tokens.len()),
            });
        }
        let parse_label = |tok: &str| -> Result<u64> {
            let label: u64 = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex label `{tok}`"),
            })?;
            if one_based && label == 0 {
                return Err(Error::Parse {
                    line: line_no,
                    message: "label 0 in one-based input".into(),
                });
            }
            Ok(label)
        };
        let a = parse_label(tokens[0])?;
        let b = parse_label(tokens[1])?;
        let w = match tokens.get(2) {
            None => 1.0,
            Some(tok) => tok.parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid weight `{tok}`"),
            })?,
        };
        if !(w.is_finite() && w > 0.0) {
            return Err(Error::NonPositiveWeight {
                line: line_no,
                weight: w,
            });
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key, line_no).is_some() {
            return Err(Error::DuplicateEdge {
                line: line_no,
                u: a,
                v: b,
            });
        }
        raw.push((a, b, w));
    }

    if raw.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no edges in input".into(),
        });
    }

    let labels: Vec<u64> = raw
        .iter()
        .flat_map(|&(a, b, _)| [a, b])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: HashMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let n = labels.len();
    let mut adjacency = DMatrix::zeros(n, n);
    for (a, b, w) in raw {
        let (i, j) = (index[&a], index[&b]);
        adjacency[(i, j)] = w;
        adjacency[(j, i)] = w;
    }
    Ok(Graph { adjacency, labels })
}

impl TransitionMatrix {
    pub fn p(&self) -> &DMatrix<f64> {
        &self.p
    }

    pub fn degrees(&self) -> &DegreeVector {
        &self.degrees
    }

    pub fn n(&self) -> usize {
        self.p.nrows()
    }

    /// Connected components of the support of `P`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        support_components(&self.p)
    }

    pub fn is_irreducible(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// `D^{1/2} P D^{-1/2} = D^{-1/2} A D^{-1/2}`, symmetrised exactly.
    pub fn symmetrized(&self) -> DMatrix<f64> {
        let n = self.n();
        let sq: Vec<f64> = self.degrees.0.iter().map(|d| d.sqrt()).collect();
        let mut s = DMatrix::from_fn(n, n, |i, j| self.p[(i, j)] * sq[i] / sq[j]);
        for i in 0..n {
            for j in i + 1..n {
                let m = 0.5 * (s[(i, j)] + s[(j, i)]);
                s[(i, j)] = m;
                s[(j, i)] = m;
            }
        }
        s
    }
}

/// `P = D⁻¹A`. Fails when some vertex has zero degree.
pub fn transition_matrix(g: &Graph) -> Result<TransitionMatrix> {
    let degrees = g.degrees();
    if let Some(k) = degrees.0.iter().position(|&d| d <= 0.0) {
        return Err(Error::IsolatedVertex(k));
    }
    let n = g.n();
    let p = DMatrix::from_fn(n, n, |i, j| g.adjacency[(i, j)] / degrees.0[i]);
    debug_assert!(p
        .row_iter()
        .all(|row| (row.sum() - 1.0).abs() <= tol::ROW_SUM));
    Ok(TransitionMatrix { p, degrees })
}

pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    g.connected_components()
}

/// All bridges of a connected graph, found by one iterative low-link DFS.
/// Loops are never bridges.
pub fn find_cut_edges(g: &Graph) -> Result<BTreeSet<EdgeId>> {
    let n = g.n();
    let comps = g.connected_components();
    if comps.len() != 1 {
        return Err(Error::Disconnected {
            components: comps.len(),
        });
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = BTreeSet::new();
    let mut timer = 0;

    // (vertex, parent, next neighbour position)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    while let Some(top) = stack.last_mut() {
        let (v, parent) = (top.0, top.1);
        if top.2 < adj[v].len() {
            let w = adj[v][top.2];
            top.2 += 1;
            if w == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if low[v] > disc[parent] {
                    bridges.insert(EdgeId::new(parent, v));
                }
            }
        }
    }
    Ok(bridges)
}

/// `Â = A + a_ij (e_i − e_j)(e_i − e_j)ᵀ`: the edge is removed and its
/// weight is added to the loops at both endpoints. Degrees are unchanged.
pub fn remove_edge_add_loops(g: &Graph, e: EdgeId) -> Result<Graph> {
    if e.is_loop() {
        return Err(Error::LoopEdge(e.u));
    }
    if !g.has_edge(e.u, e.v) {
        return Err(Error::MissingEdge(e.u, e.v));
    }
    let w = g.adjacency[(e.u, e.v)];
    let mut out = g.clone();
    out.adjacency[(e.u, e.v)] = 0.0;
    out.adjacency[(e.v, e.u)] = 0.0;
    out.adjacency[(e.u, e.u)] += w;
    out.adjacency[(e.v, e.v)] += w;
    Ok(out)
}

/// Components of the undirected support `{(i, j) : m_ij > 0 or m_ji > 0}`,
/// each sorted ascending, ordered by smallest vertex.
pub(crate) fn support_components(m: &DMatrix<f64>) -> Vec<Vec<usize>> {
    let n = m.nrows();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if comp[v] == usize::MAX && (m[(u, v)] > 0.0 || m[(v, u)] > 0.0) {
                    comp[v] = id;
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}
