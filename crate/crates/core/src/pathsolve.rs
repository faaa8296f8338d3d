//! Efficient s-t paths on graphs whose edges carry a category and a length.
//!
//! A path is summarised by its counting vector (total length per category).
//! The search runs a multi-label setting algorithm on Pareto-transformed
//! costs: every edge cost is `length * T[:, category]` where `T` is the
//! facet matrix (composed with the category lift for merged weights), so
//! cone efficiency of counting vectors becomes Pareto efficiency of labels.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::cone::{facet_matrix, merge_degenerate, MergedWeights, Weights};
use crate::error::{Error, Result};
use crate::exactnum::{RatMatrix, RatVector, Rational};

/// Default bound on the number of paths a search may return.
pub const DEFAULT_PATH_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub id: String,
    pub lat: Option<f64>,
    pub lon: Option<f64>,
}

impl Node {
    pub fn new(id: impl Into<String>) -> Node {
        Node { id: id.into(), lat: None, lon: None }
    }
}

/// Directed edge; `category` is 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub category: usize,
    pub length: Rational,
}

#[derive(Clone, Debug)]
pub struct CategoryGraph {
    k: usize,
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
    out: Vec<Vec<usize>>,
}

impl CategoryGraph {
    pub fn new(k: usize, nodes: Vec<Node>, edges: Vec<Edge>) -> Result<CategoryGraph> {
        if k == 0 {
            return Err(Error::NoCategories);
        }
        let mut index = HashMap::new();
        for (i, n) in nodes.iter().enumerate() {
            if index.insert(n.id.clone(), i).is_some() {
                return Err(Error::DuplicateNode(n.id.clone()));
            }
        }
        let mut out = vec![Vec::new(); nodes.len()];
        for (e, edge) in edges.iter().enumerate() {
            for end in [edge.from, edge.to] {
                if end >= nodes.len() {
                    return Err(Error::UnknownNode(format!("#{end}")));
                }
            }
            if edge.category == 0 || edge.category > k {
                return Err(Error::BadCategory { edge: e, category: edge.category, k });
            }
            if edge.length <= Rational::from_integer(0.into()) {
                return Err(Error::NonPositiveLength(e));
            }
            out[edge.from].push(e);
        }
        // neighbours in order of target id, then edge index
        for list in &mut out {
            list.sort_by(|&a, &b| nodes[edges[a].to].id.cmp(&nodes[edges[b].to].id).then(a.cmp(&b)));
        }
        Ok(CategoryGraph { k, nodes, edges, index, out })
    }

    /// Builds a graph from `(from, to, category, length)` tuples; nodes are
    /// created in order of first appearance.
    pub fn from_edge_list(k: usize, list: &[(&str, &str, usize, Rational)]) -> Result<CategoryGraph> {
        let mut nodes: Vec<Node> = Vec::new();
        let mut seen: HashMap<&str, usize> = HashMap::new();
        let mut edges = Vec::with_capacity(list.len());
        for (from, to, category, length) in list {
            let mut ends = [0; 2];
            for (slot, name) in ends.iter_mut().zip([*from, *to]) {
                *slot = *seen.entry(name).or_insert_with(|| {
                    nodes.push(Node::new(name));
                    nodes.len() - 1
                });
            }
            edges.push(Edge { from: ends[0], to: ends[1], category: *category, length: length.clone() });
        }
        CategoryGraph::new(k, nodes, edges)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node_index(&self, id: &str) -> Result<usize> {
        self.index.get(id).copied().ok_or_else(|| Error::UnknownNode(id.to_string()))
    }

    /// Outgoing edges of `v`, ordered by target id and then edge index.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Counting vector of a single edge.
    pub fn edge_counts(&self, e: usize) -> RatVector {
        let edge = &self.edges[e];
        let mut c = vec![Rational::from_integer(0.into()); self.k];
        c[edge.category - 1] = edge.length.clone();
        c.into()
    }
}

/// Total length per category along a path given as edge indices.
pub fn counting_vector(path: &[usize], g: &CategoryGraph) -> Result<RatVector> {
    let mut c = RatVector::zeros(g.k());
    let mut prev: Option<usize> = None;
    for (pos, &e) in path.iter().enumerate() {
        let edge = g.edges().get(e).ok_or(Error::UnknownEdge(e))?;
        if let Some(p) = prev {
            if g.edges()[p].to != edge.from {
                return Err(Error::DisconnectedPath { prev: path[pos - 1], edge: e });
            }
        }
        c = c.add_scaled(&edge.length, &RatVector::unit(g.k(), edge.category - 1));
        prev = Some(e);
    }
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SearchMode {
    /// One representative path per efficient counting vector.
    #[default]
    OnePerVector,
    /// Every efficient path, including ties.
    AllPaths,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EfficientPath {
    pub nodes: Vec<usize>,
    pub edges: Vec<usize>,
    pub counts: RatVector,
    pub transformed: RatVector,
}

struct Label {
    node: usize,
    cost: RatVector,
    pred: Option<usize>,
    edge: Option<usize>,
}

/// All efficient s-t paths under the cone of `w`, which must be pointed.
pub fn efficient_paths(
    g: &CategoryGraph,
    s: &str,
    t: &str,
    w: &Weights,
    mode: SearchMode,
    cap: usize,
) -> Result<Vec<EfficientPath>> {
    check_k(g, w.k())?;
    let a = facet_matrix(w)?;
    search(g, s, t, a.matrix(), mode, cap)
}

/// Same as [`efficient_paths`] for weights whose degenerate categories were merged.
pub fn efficient_paths_merged(
    g: &CategoryGraph,
    s: &str,
    t: &str,
    merged: &MergedWeights,
    mode: SearchMode,
    cap: usize,
) -> Result<Vec<EfficientPath>> {
    check_k(g, merged.lift.ncols())?;
    let a = facet_matrix(&merged.weights)?;
    let transform = a.matrix().mat_mul(&merged.lift)?;
    search(g, s, t, &transform, mode, cap)
}

fn check_k(g: &CategoryGraph, k: usize) -> Result<()> {
    if g.k() != k {
        return Err(Error::DimensionMismatch { expected: g.k(), found: k });
    }
    Ok(())
}

/// Multi-label setting with Pareto dominance on `transform * counts`.
pub fn search(
    g: &CategoryGraph,
    s: &str,
    t: &str,
    transform: &RatMatrix,
    mode: SearchMode,
    cap: usize,
) -> Result<Vec<EfficientPath>> {
    let s = g.node_index(s)?;
    let t = g.node_index(t)?;
    check_k(g, transform.ncols())?;
    let edge_cost: Vec<RatVector> =
        (0..g.edges().len()).map(|e| transform.mat_vec(&g.edge_counts(e))).collect::<Result<_>>()?;

    let mut labels = vec![Label { node: s, cost: RatVector::zeros(transform.nrows()), pred: None, edge: None }];
    let mut permanent: Vec<Vec<usize>> = vec![Vec::new(); g.nodes().len()];
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((labels[0].cost.clone(), s, 0usize)));

    // `true` when `cost` must not enter node `v`'s permanent set.
    let rejected = |labels: &[Label], perm: &[usize], cost: &RatVector| {
        perm.iter().any(|&p| {
            let other = &labels[p].cost;
            other.le_componentwise(cost) && (other != cost || mode == SearchMode::OnePerVector)
        })
    };

    while let Some(Reverse((cost, v, id))) = heap.pop() {
        if rejected(&labels, &permanent[v], &cost) {
            continue;
        }
        permanent[v].push(id);
        if v == t {
            if permanent[t].len() > cap {
                return Err(Error::PathCapExceeded(cap));
            }
            continue;
        }
        for &e in g.out_edges(v) {
            let w = g.edges()[e].to;
            if on_path(&labels, id, w) {
                continue;
            }
            let next = &cost + &edge_cost[e];
            if rejected(&labels, &permanent[w], &next) {
                continue;
            }
            if w != t && permanent[t].iter().any(|&p| labels[p].cost.le_componentwise(&next)) {
                continue;
            }
            labels.push(Label { node: w, cost: next.clone(), pred: Some(id), edge: Some(e) });
            heap.push(Reverse((next, w, labels.len() - 1)));
        }
    }

    let mut paths: Vec<EfficientPath> = permanent[t]
        .iter()
        .map(|&id| {
            let mut edges = Vec::new();
            let mut nodes = vec![labels[id].node];
            let mut cur = id;
            while let (Some(p), Some(e)) = (labels[cur].pred, labels[cur].edge) {
                edges.push(e);
                nodes.push(labels[p].node);
                cur = p;
            }
            edges.reverse();
            nodes.reverse();
            let counts = counting_vector(&edges, g).expect("labels follow edges");
            EfficientPath { nodes, edges, counts, transformed: labels[id].cost.clone() }
        })
        .collect();
    paths.sort_by(|a, b| a.transformed.cmp(&b.transformed).then_with(|| a.nodes.cmp(&b.nodes)));
    Ok(paths)
}

fn on_path(labels: &[Label], mut id: usize, v: usize) -> bool {
    loop {
        if labels[id].node == v {
            return true;
        }
        match labels[id].pred {
            Some(p) => id = p,
            None => return false,
        }
    }
}

/// Number of distinct counting vectors among the paths.
pub fn distinct_vectors(paths: &[EfficientPath]) -> usize {
    let mut v: Vec<&RatVector> = paths.iter().map(|p| &p.counts).collect();
    v.sort();
    v.dedup();
    v.len()
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub weights: Weights,
    /// Efficient paths, or the error that stopped this grid point.
    pub outcome: Result<Vec<EfficientPath>>,
    /// Whether degenerate weights were merged before searching.
    pub merged: bool,
    pub elapsed: Duration,
}

/// Runs the search for every weight vector of the grid in parallel. Rows
/// come back in grid order. Degenerate weights are merged when `merge` is
/// set and reported as `NotPointed` otherwise.
pub fn weight_sweep(
    g: &CategoryGraph,
    s: &str,
    t: &str,
    grid: &[Weights],
    mode: SearchMode,
    cap: usize,
    merge: bool,
) -> Vec<SweepRow> {
    grid.par_iter()
        .map(|w| {
            let start = Instant::now();
            let degenerate = !w.is_pointed();
            let outcome = if degenerate && merge {
                merge_degenerate(w).and_then(|m| efficient_paths_merged(g, s, t, &m, mode, cap))
            } else {
                efficient_paths(g, s, t, w, mode, cap)
            };
            SweepRow { weights: w.clone(), outcome, merged: degenerate && merge, elapsed: start.elapsed() }
        })
        .collect()
}
