//! Power graphs `G(G)`, proper power graphs `G*(G)`, and the reduced graph of
//! `Z_n` obtained by deleting the identity and all generators.
//!
//! Distinct `u`, `v` are adjacent when one lies in the cyclic subgroup
//! generated by the other.

mod classes;
mod graph;

pub use classes::{equiv_classes, quotient_graph, ClassPartition, QuotientGraph};
pub use graph::Graph;

use crate::groups::{build_cyclic, FiniteGroup};
use crate::numtheory::{self, gcd};
use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PowerGraphError {
    #[error("n must be positive")]
    ZeroOrder,
    #[error("the reduced graph of Z_{0} is the null graph")]
    NullReducedGraph(u64),
    #[error("{a} is the identity or a generator of Z_{n}")]
    NotInReducedSet { n: u64, a: u64 },
    #[error("partition covers {partition} vertices but the graph has {graph}")]
    PartitionMismatch { partition: usize, graph: usize },
    #[error("class is not a clique: vertices {u} and {v} are not adjacent")]
    ClassNotClique { u: usize, v: usize },
    #[error("vertex {u} is adjacent to part of class {block} only")]
    NotUniform { u: usize, block: usize },
}

pub fn build_power_graph(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    for x in 0..n {
        for y in g.cyclic_subgroup(x) {
            rows[x].insert(y);
            rows[y].insert(x);
        }
    }
    Graph::from_rows(rows, (0..n).collect(), (0..n).map(|x| g.label(x)).collect())
}

/// `G(Z_n)` via the divisor rule: `a ~ b` iff `gcd(a,n) | gcd(b,n)` or the
/// reverse. Rows are assembled per divisor.
pub fn build_power_graph_zn_fast(n: u64) -> Result<Graph, PowerGraphError> {
    if n == 0 {
        return Err(PowerGraphError::ZeroOrder);
    }
    let size = n as usize;
    let divs = numtheory::divisors(n).expect("n > 0");
    let g: Vec<u64> = (0..n).map(|a| gcd(a, n)).collect();
    let mut row_for = std::collections::HashMap::with_capacity(divs.len());
    for &d in &divs {
        let mut row = FixedBitSet::with_capacity(size);
        for (b, &gb) in g.iter().enumerate() {
            if gb % d == 0 || d % gb == 0 {
                row.insert(b);
            }
        }
        row_for.insert(d, row);
    }
    let rows = g.iter().map(|gb| row_for[gb].clone()).collect();
    Ok(Graph::from_rows(
        rows,
        (0..size).collect(),
        (0..size).map(|a| a.to_string()).collect(),
    ))
}

/// `G*(G)`: the power graph minus the identity.
pub fn build_proper_power_graph(g: &FiniteGroup) -> Graph {
    build_power_graph(g).without(&[g.identity()])
}

/// `S(Z_n)`: the identity together with every generator, ascending.
pub fn generator_set_szn(n: u64) -> Vec<usize> {
    let mut out = vec![0usize];
    out.extend((1..n).filter(|&a| gcd(a, n) == 1).map(|a| a as usize));
    out
}

/// `G(Z_n) - S(Z_n)`. Its vertices keep their residues as elements.
pub fn build_reduced_graph(n: u64) -> Result<Graph, PowerGraphError> {
    let full = build_power_graph_zn_fast(n)?;
    reduced_from_full(&full, n)
}

pub(crate) fn reduced_from_full(full: &Graph, n: u64) -> Result<Graph, PowerGraphError> {
    let removed = generator_set_szn(n);
    if removed.len() as u64 == n {
        return Err(PowerGraphError::NullReducedGraph(n));
    }
    Ok(full.without(&removed))
}

/// `N([x])` in `graph` for the class containing vertex `x`.
pub fn class_neighborhood(graph: &Graph, classes: &ClassPartition, x: usize) -> Vec<usize> {
    graph.neighborhood(classes.block(classes.class_of(x)))
}

/// `N~([a]) = N([a]) - S(Z_n)`, read off the adjacency of `G(Z_n)`.
/// Returned as residues, ascending.
pub fn reduced_class_neighborhood(n: u64, a: u64) -> Result<Vec<usize>, PowerGraphError> {
    let full = build_power_graph_zn_fast(n)?;
    reduced_class_neighborhood_in(&full, n, a)
}

/// As [`reduced_class_neighborhood`] with a prebuilt `G(Z_n)`.
pub fn reduced_class_neighborhood_in(full: &Graph, n: u64, a: u64) -> Result<Vec<usize>, PowerGraphError> {
    if a >= n || a == 0 || gcd(a, n) == 1 {
        return Err(PowerGraphError::NotInReducedSet { n, a });
    }
    let b = gcd(a, n);
    let class: Vec<usize> = (0..n).filter(|&x| gcd(x, n) == b).map(|x| x as usize).collect();
    let mut nbd = full.set_of(&full.neighborhood(&class));
    for s in generator_set_szn(n) {
        nbd.set(s, false);
    }
    Ok(nbd.ones().collect())
}

/// Class-union form of `N~([a])`: with `b = gcd(a, n)`, the classes `[c]` for
/// `c | b, 1 < c < b` together with `[d]` for `b | d | n, b < d < n`.
pub fn nbd_union_formula(n: u64, a: u64) -> Result<Vec<usize>, PowerGraphError> {
    if a >= n || a == 0 || gcd(a, n) == 1 {
        return Err(PowerGraphError::NotInReducedSet { n, a });
    }
    let b = gcd(a, n);
    let divs = numtheory::divisors(n).expect("n > 0");
    let picked: Vec<u64> = divs
        .iter()
        .copied()
        .filter(|&c| (b.is_multiple_of(c) && 1 < c && c < b) || (c % b == 0 && b < c && c < n))
        .collect();
    let mut out: Vec<usize> = (1..n)
        .filter(|&x| picked.contains(&gcd(x, n)))
        .map(|x| x as usize)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `G(Z_n)` built through the generic group path.
pub fn build_power_graph_zn_generic(n: u64) -> Result<Graph, PowerGraphError> {
    let g = build_cyclic(n).map_err(|_| PowerGraphError::ZeroOrder)?;
    Ok(build_power_graph(&g))
}

#[cfg(test)]
mod tests;
