//! Exhaustive subset search on graphs of at most 64 vertices, used as an
//! oracle for the flow-based routines.

use super::{ConnectivityError, ConnectivityResult, Method};
use crate::powergraph::Graph;

const MASK_BITS: usize = 64;

struct MaskGraph {
    adj: Vec<u64>,
}

impl MaskGraph {
    fn new(graph: &Graph) -> Self {
        let adj = (0..graph.vertex_count())
            .map(|v| graph.neighbors(v).ones().fold(0u64, |m, w| m | (1 << w)))
            .collect();
        MaskGraph { adj }
    }

    fn full(&self) -> u64 {
        if self.adj.len() == MASK_BITS {
            u64::MAX
        } else {
            (1u64 << self.adj.len()) - 1
        }
    }

    fn components(&self, alive: u64) -> usize {
        let mut left = alive;
        let mut count = 0;
        while left != 0 {
            count += 1;
            let mut frontier = left & left.wrapping_neg();
            left &= !frontier;
            while frontier != 0 {
                let mut reach = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    reach |= self.adj[v];
                }
                frontier = reach & left;
                left &= !frontier;
            }
        }
        count
    }
}

fn check_cap(graph: &Graph, cap: usize, what: &'static str) -> Result<(), ConnectivityError> {
    let size = graph.vertex_count();
    let cap = cap.min(MASK_BITS);
    if size > cap {
        return Err(ConnectivityError::CapExceeded { what, size, cap });
    }
    Ok(())
}

/// Calls `visit` with every `k`-subset of `0..n` as a bitmask, in
/// lexicographic order of the sorted index lists. Stops when `visit` returns false.
fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(u64, &[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | (1 << i));
        if !visit(mask, &idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact minimum separating set by ascending-size subset search; the witness
/// is the lexicographically least one.
pub fn brute_force_min_sepset(graph: &Graph, cap: usize) -> Result<ConnectivityResult, ConnectivityError> {
    check_cap(graph, cap, "brute force")?;
    if let Some(r) = super::trivial_result(graph, Method::BruteForce) {
        return Ok(r);
    }
    let n = graph.vertex_count();
    let mg = MaskGraph::new(graph);
    let full = mg.full();
    for k in 1..n - 1 {
        let mut found = None;
        for_each_subset(n, k, |mask, idx| {
            if mg.components(full & !mask) > 1 {
                found = Some(idx.to_vec());
                false
            } else {
                true
            }
        });
        if let Some(witness) = found {
            return Ok(ConnectivityResult {
                kappa: k,
                witness,
                method: Method::BruteForce,
            });
        }
    }
    unreachable!("a connected non-complete graph has a separating set of size <= n - 2")
}

/// Every minimal separating set with at most `max_size` vertices, ordered by
/// size and then lexicographically.
pub fn enumerate_minimal_sepsets(
    graph: &Graph,
    max_size: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>, ConnectivityError> {
    check_cap(graph, cap, "minimal separating set enumeration")?;
    let n = graph.vertex_count();
    let mg = MaskGraph::new(graph);
    let full = mg.full();
    let before = mg.components(full);
    let mut out = Vec::new();
    for k in 1..=max_size.min(n.saturating_sub(1)) {
        for_each_subset(n, k, |mask, idx| {
            if mg.components(full & !mask) > before {
                let minimal = idx
                    .iter()
                    .all(|&x| mg.components(full & !(mask & !(1 << x))) <= before);
                if minimal {
                    out.push(idx.to_vec());
                }
            }
            true
        });
    }
    Ok(out)
}
