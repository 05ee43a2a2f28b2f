use super::{Graph, PowerGraphError};
use crate::groups::{FiniteGroup, GroupKind};
use crate::numtheory::gcd;
use fixedbitset::FixedBitSet;
use std::collections::HashMap;

/// Partition of a graph's vertices into classes of elements generating the
/// same cyclic subgroup.
///
/// Blocks are ordered by their least vertex, which is also the block's
/// representative. In `Z_n` that least member is the divisor `gcd(a, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    blocks: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ClassPartition {
    /// Groups `0..keys.len()` by equal key, blocks in order of first appearance.
    pub fn from_keys<K: std::hash::Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut index: HashMap<K, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut class_of = Vec::new();
        for (v, key) in keys.into_iter().enumerate() {
            let b = *index.entry(key).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(v);
            class_of.push(b);
        }
        ClassPartition { blocks, class_of }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn representative(&self, b: usize) -> usize {
        self.blocks[b][0]
    }

    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }

    /// Restricts an element-level partition to the vertices of `graph`
    /// (an induced subgraph of the full power graph).
    pub fn on_graph(&self, graph: &Graph) -> ClassPartition {
        ClassPartition::from_keys(graph.elements().iter().map(|&e| self.class_of[e]))
    }

    /// True when `set` is a union of whole blocks.
    pub fn is_union_of_blocks(&self, set: &[usize]) -> bool {
        let mut hits = vec![0usize; self.blocks.len()];
        for &v in set {
            hits[self.class_of[v]] += 1;
        }
        hits.iter()
            .zip(&self.blocks)
            .all(|(&h, b)| h == 0 || h == b.len())
    }

    /// Union of the given blocks, ascending.
    pub fn expand(&self, block_ids: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = block_ids
            .into_iter()
            .flat_map(|b| self.blocks[b].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

/// The partition of `g`'s elements by equality of cyclic subgroups.
pub fn equiv_classes(g: &FiniteGroup) -> ClassPartition {
    match g.kind() {
        GroupKind::Cyclic(n) => {
            let n = *n;
            ClassPartition::from_keys((0..n).map(|a| gcd(a, n)))
        }
        _ => ClassPartition::from_keys((0..g.order()).map(|x| g.cyclic_subgroup(x))),
    }
}

/// Vertex-weighted graph on the classes of a [`ClassPartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    weight: Vec<usize>,
    adjacency: Vec<FixedBitSet>,
}

impl QuotientGraph {
    pub fn node_count(&self) -> usize {
        self.weight.len()
    }

    /// Node `i` is block `i` of the partition it was built from.
    pub fn node_block(&self, node: usize) -> usize {
        node
    }

    pub fn weight(&self, node: usize) -> usize {
        self.weight[node]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weight
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn neighbors(&self, a: usize) -> &FixedBitSet {
        &self.adjacency[a]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.node_count())
            .flat_map(|a| self.adjacency[a].ones().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }
}

/// Collapses each class to a node weighted by its size.
///
/// Fails if a class is not a clique or if two classes are neither fully
/// adjacent nor fully non-adjacent.
pub fn quotient_graph(graph: &Graph, classes: &ClassPartition) -> Result<QuotientGraph, PowerGraphError> {
    let n = graph.vertex_count();
    if classes.vertex_count() != n {
        return Err(PowerGraphError::PartitionMismatch {
            partition: classes.vertex_count(),
            graph: n,
        });
    }
    let k = classes.len();
    let members: Vec<FixedBitSet> = classes.blocks().iter().map(|b| graph.set_of(b)).collect();
    let mut adjacency = vec![FixedBitSet::with_capacity(k); k];
    for (a, block) in classes.blocks().iter().enumerate() {
        for &u in block {
            let row = graph.neighbors(u);
            if row.intersection_count(&members[a]) + 1 != block.len() {
                let v = block.iter().copied().find(|&v| v != u && !row.contains(v)).unwrap();
                return Err(PowerGraphError::ClassNotClique { u, v });
            }
            for b in (0..k).filter(|&b| b != a) {
                let hits = row.intersection_count(&members[b]);
                let full = hits == members[b].count_ones(..);
                if hits != 0 && !full {
                    return Err(PowerGraphError::NotUniform { u, block: b });
                }
                if u == block[0] {
                    adjacency[a].set(b, full);
                } else if adjacency[a].contains(b) != full {
                    return Err(PowerGraphError::NotUniform { u, block: b });
                }
            }
        }
    }
    Ok(QuotientGraph {
        weight: classes.blocks().iter().map(Vec::len).collect(),
        adjacency,
    })
}
