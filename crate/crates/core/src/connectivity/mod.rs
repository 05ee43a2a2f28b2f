//! Components, separating-set verdicts and exact vertex connectivity.
//!
//! Three independent routes compute `kappa`:
//!
//! * [`vertex_connectivity`] runs unit-capacity max-flow on the vertex-split
//!   graph over an Esfahanian-Hakimi pair family.
//! * [`vertex_connectivity_via_quotient`] runs weighted max-flow on the class
//!   quotient, where each class of equal cyclic subgroups is one node.
//! * [`brute_force_min_sepset`] searches subsets by ascending size.
//!
//! Graph sizes are capped by [`Caps`]; exceeding a cap is an error.

mod brute;
mod flow;

pub use brute::{brute_force_min_sepset, enumerate_minimal_sepsets};

use crate::powergraph::{quotient_graph, ClassPartition, Graph, PowerGraphError};
use fixedbitset::FixedBitSet;
use flow::SplitNetwork;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("{what} needs at most {cap} vertices, graph has {size}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("candidate set covers every vertex")]
    AllVertices,
    #[error("candidate set is empty")]
    EmptySet,
    #[error("local connectivity needs two distinct vertices")]
    SameVertex,
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),
    #[error("graph is complete, it has no vertex cut")]
    Complete,
    #[error(transparent)]
    Quotient(#[from] PowerGraphError),
}

/// Size limits, in vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub flow: usize,
    pub brute: usize,
    pub enumerate: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            flow: 2000,
            brute: 22,
            enumerate: 22,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DirectFlow,
    QuotientCut,
    BruteForce,
}

/// `kappa` with a minimum separating set. The witness is empty when the graph
/// is complete, trivial, null or already disconnected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityResult {
    pub kappa: usize,
    pub witness: Vec<usize>,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SepSetReport {
    pub candidate: Vec<usize>,
    pub is_separating: bool,
    pub is_minimal: bool,
    pub components_before: usize,
    pub components_after_removal: usize,
}

fn count_components(graph: &Graph, alive: &FixedBitSet) -> usize {
    let mut unvisited = alive.clone();
    let mut count = 0;
    let mut stack = Vec::new();
    while let Some(start) = unvisited.minimum() {
        count += 1;
        unvisited.set(start, false);
        stack.push(start);
        while let Some(v) = stack.pop() {
            let mut fresh = graph.neighbors(v).clone();
            fresh.intersect_with(&unvisited);
            unvisited.difference_with(&fresh);
            stack.extend(fresh.ones());
        }
    }
    count
}

fn all_vertices(graph: &Graph) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(graph.vertex_count());
    s.insert_range(..);
    s
}

fn components_without(graph: &Graph, removed: &[usize]) -> usize {
    let mut alive = all_vertices(graph);
    for &v in removed {
        alive.set(v, false);
    }
    count_components(graph, &alive)
}

pub fn is_connected(graph: &Graph) -> bool {
    count_components(graph, &all_vertices(graph)) <= 1
}

/// Maximal connected vertex sets, each ascending, ordered by least vertex.
pub fn components(graph: &Graph) -> Vec<Vec<usize>> {
    let mut unvisited = all_vertices(graph);
    let mut out = Vec::new();
    while let Some(start) = unvisited.minimum() {
        unvisited.set(start, false);
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let mut fresh = graph.neighbors(v).clone();
            fresh.intersect_with(&unvisited);
            unvisited.difference_with(&fresh);
            comp.extend(fresh.ones());
            stack.extend(fresh.ones());
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn normalize(graph: &Graph, s: &[usize]) -> Result<Vec<usize>, ConnectivityError> {
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&v) = set.iter().find(|&&v| v >= graph.vertex_count()) {
        return Err(ConnectivityError::OutOfRange(v));
    }
    if set.len() == graph.vertex_count() {
        return Err(ConnectivityError::AllVertices);
    }
    Ok(set)
}

/// Deletes `s` and compares component counts. Minimality is decided by the
/// single-removal test: `s` is minimal iff it separates and no `s - {x}` does.
pub fn is_separating(graph: &Graph, s: &[usize]) -> Result<SepSetReport, ConnectivityError> {
    let set = normalize(graph, s)?;
    let before = components_without(graph, &[]);
    let after = components_without(graph, &set);
    let separating = after > before;
    let minimal = separating
        && (0..set.len()).all(|i| {
            let mut rest = set.clone();
            rest.remove(i);
            components_without(graph, &rest) <= before
        });
    Ok(SepSetReport {
        candidate: set,
        is_separating: separating,
        is_minimal: minimal,
        components_before: before,
        components_after_removal: after,
    })
}

pub fn is_minimal_separating(graph: &Graph, s: &[usize]) -> Result<SepSetReport, ConnectivityError> {
    if s.is_empty() {
        return Err(ConnectivityError::EmptySet);
    }
    is_separating(graph, s)
}

fn split_network(graph: &Graph) -> SplitNetwork {
    SplitNetwork::new(&vec![1; graph.vertex_count()], graph.edges())
}

/// Maximum number of internally vertex-disjoint `u,v`-paths, which equals the
/// minimum `u,v` vertex cut.
pub fn local_connectivity(graph: &Graph, u: usize, v: usize) -> Result<usize, ConnectivityError> {
    Ok(local_cut(graph, u, v)?.len())
}

/// A minimum vertex set separating non-adjacent `u` and `v`.
pub fn local_cut(graph: &Graph, u: usize, v: usize) -> Result<Vec<usize>, ConnectivityError> {
    let n = graph.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(ConnectivityError::OutOfRange(x));
        }
    }
    if u == v {
        return Err(ConnectivityError::SameVertex);
    }
    if graph.is_adjacent(u, v) {
        return Err(ConnectivityError::Adjacent(u, v));
    }
    let (_, cut) = split_network(graph).min_cut(u, v, i64::MAX);
    Ok(cut.expect("unbounded flow always yields a cut"))
}

fn trivial_result(graph: &Graph, method: Method) -> Option<ConnectivityResult> {
    let n = graph.vertex_count();
    if n <= 1 || !is_connected(graph) {
        return Some(ConnectivityResult {
            kappa: 0,
            witness: Vec::new(),
            method,
        });
    }
    graph.is_complete().then(|| ConnectivityResult {
        kappa: n - 1,
        witness: Vec::new(),
        method,
    })
}

/// Twin class of every vertex, keyed by closed neighbourhood.
fn closed_twin_ids(graph: &Graph) -> Vec<usize> {
    let mut ids = std::collections::HashMap::new();
    (0..graph.vertex_count())
        .map(|v| {
            let mut closed = graph.neighbors(v).clone();
            closed.insert(v);
            let next = ids.len();
            *ids.entry(closed).or_insert(next)
        })
        .collect()
}

/// Exact `kappa` by max-flow on the vertex-split graph.
///
/// Takes a minimum-degree vertex `u` and evaluates `u` against each of its
/// non-neighbours, plus every non-adjacent pair inside `N(u)`, keeping one
/// pair per combination of closed-twin classes. Pairs whose common
/// neighbourhood already reaches the current best are skipped, and each flow
/// stops once it reaches the current best.
pub fn vertex_connectivity(graph: &Graph, caps: &Caps) -> Result<ConnectivityResult, ConnectivityError> {
    let n = graph.vertex_count();
    if n > caps.flow {
        return Err(ConnectivityError::CapExceeded {
            what: "direct flow",
            size: n,
            cap: caps.flow,
        });
    }
    if let Some(r) = trivial_result(graph, Method::DirectFlow) {
        return Ok(r);
    }
    let u = (0..n).min_by_key(|&v| graph.degree(v)).unwrap();
    let mut best = graph.degree(u);
    let mut witness: Vec<usize> = graph.neighbors(u).ones().collect();

    let nbrs: Vec<usize> = graph.neighbors(u).ones().collect();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter(|&w| w != u && !graph.is_adjacent(u, w))
        .map(|w| (u, w))
        .collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !graph.is_adjacent(x, y) {
                pairs.push((x, y));
            }
        }
    }

    // Transposing two closed twins (equal closed neighbourhoods) is an
    // automorphism, so one pair per combination of twin classes suffices.
    let twin = closed_twin_ids(graph);
    let mut seen = std::collections::HashSet::new();
    pairs.retain(|&(x, y)| seen.insert((twin[x].min(twin[y]), twin[x].max(twin[y]))));

    let mut net = split_network(graph);
    for (x, y) in pairs {
        if best == 0 {
            break;
        }
        if graph.neighbors(x).intersection_count(graph.neighbors(y)) >= best {
            continue;
        }
        if let (flow, Some(cut)) = net.min_cut(x, y, best as i64) {
            debug_assert_eq!(flow as usize, cut.len());
            if cut.len() < best || (cut.len() == best && cut < witness) {
                best = cut.len();
                witness = cut;
            }
        }
    }
    Ok(ConnectivityResult {
        kappa: best,
        witness,
        method: Method::DirectFlow,
    })
}

/// Exact `kappa` as a weighted minimum cut on the class quotient.
///
/// Every minimal separating set of a power graph (or of an induced subgraph on
/// a union of classes) is a union of classes, so it suffices to cut between
/// non-adjacent classes with each class weighted by its size.
pub fn vertex_connectivity_via_quotient(
    graph: &Graph,
    classes: &ClassPartition,
) -> Result<ConnectivityResult, ConnectivityError> {
    let quotient = quotient_graph(graph, classes)?;
    if graph.is_complete() {
        return Err(ConnectivityError::Complete);
    }
    if !is_connected(graph) {
        return Ok(ConnectivityResult {
            kappa: 0,
            witness: Vec::new(),
            method: Method::QuotientCut,
        });
    }
    let k = quotient.node_count();
    let weights: Vec<i64> = quotient.weights().iter().map(|&w| w as i64).collect();
    let mut net = SplitNetwork::new(&weights, quotient.edges().into_iter());
    let mut best: Option<(usize, Vec<usize>)> = None;
    for a in 0..k {
        for b in a + 1..k {
            if quotient.is_adjacent(a, b) {
                continue;
            }
            let (flow, cut) = net.min_cut(a, b, i64::MAX);
            let cut = classes.expand(cut.expect("unbounded flow").into_iter().map(|i| quotient.node_block(i)));
            debug_assert_eq!(flow as usize, cut.len());
            let better = match &best {
                None => true,
                Some((size, w)) => cut.len() < *size || (cut.len() == *size && cut < *w),
            };
            if better {
                best = Some((cut.len(), cut));
            }
        }
    }
    let (kappa, witness) = best.expect("a non-complete connected graph has non-adjacent classes");
    Ok(ConnectivityResult {
        kappa,
        witness,
        method: Method::QuotientCut,
    })
}

#[cfg(test)]
mod tests;
