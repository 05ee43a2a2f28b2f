use fixedbitset::FixedBitSet;
use std::fmt::Write as _;

/// Simple undirected graph with bit-packed adjacency rows.
///
/// Each vertex remembers the group element it came from, so induced subgraphs
/// keep speaking in elements. `elements` is strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
    elements: Vec<usize>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph from symmetric rows. Diagonal bits are cleared.
    pub(crate) fn from_rows(mut rows: Vec<FixedBitSet>, elements: Vec<usize>, labels: Vec<String>) -> Self {
        let n = rows.len();
        assert_eq!(elements.len(), n);
        assert_eq!(labels.len(), n);
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        for (v, row) in rows.iter_mut().enumerate() {
            debug_assert_eq!(row.len(), n);
            row.set(v, false);
        }
        debug_assert!((0..n).all(|u| rows[u].ones().all(|v| rows[v].contains(u))));
        Graph { rows, elements, labels }
    }

    /// Graph on `0..n` labelled by index.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            if u != v {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
        Self::from_rows(rows, (0..n).collect(), (0..n).map(|v| v.to_string()).collect())
    }

    pub fn complete(n: usize) -> Self {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for row in &mut rows {
            row.insert_range(..);
        }
        Self::from_rows(rows, (0..n).collect(), (0..n).map(|v| v.to_string()).collect())
    }

    pub fn null() -> Self {
        Graph {
            rows: Vec::new(),
            elements: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn is_null(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.rows.iter().all(|r| r.count_ones(..) + 1 == n)
    }

    pub fn element(&self, v: usize) -> usize {
        self.elements[v]
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn vertex_of(&self, element: usize) -> Option<usize> {
        self.elements.binary_search(&element).ok()
    }

    /// Maps elements to vertices; `None` if any element is absent.
    pub fn vertices_of(&self, elements: &[usize]) -> Option<Vec<usize>> {
        let mut out: Vec<usize> = elements.iter().map(|&e| self.vertex_of(e)).collect::<Option<_>>()?;
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    pub fn elements_of(&self, vertices: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = vertices.iter().map(|&v| self.elements[v]).collect();
        out.sort_unstable();
        out
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn set_of(&self, vertices: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.vertex_count());
        s.extend(vertices.iter().copied());
        s
    }

    /// Subgraph induced by `keep`, preserving elements and labels.
    pub fn induced(&self, keep: &FixedBitSet) -> Graph {
        let kept: Vec<usize> = keep.ones().filter(|&v| v < self.vertex_count()).collect();
        let m = kept.len();
        let rows = kept
            .iter()
            .map(|&u| {
                let mut row = FixedBitSet::with_capacity(m);
                for (i, &v) in kept.iter().enumerate() {
                    if self.rows[u].contains(v) {
                        row.insert(i);
                    }
                }
                row
            })
            .collect();
        Graph::from_rows(
            rows,
            kept.iter().map(|&v| self.elements[v]).collect(),
            kept.iter().map(|&v| self.labels[v].clone()).collect(),
        )
    }

    /// `self - removed`.
    pub fn without(&self, removed: &[usize]) -> Graph {
        let mut keep = FixedBitSet::with_capacity(self.vertex_count());
        keep.insert_range(..);
        for &v in removed {
            keep.set(v, false);
        }
        self.induced(&keep)
    }

    /// `N(A)`: vertices outside `a` adjacent to some member of `a`, ascending.
    pub fn neighborhood(&self, a: &[usize]) -> Vec<usize> {
        let mut acc = FixedBitSet::with_capacity(self.vertex_count());
        for &v in a {
            acc.union_with(&self.rows[v]);
        }
        for &v in a {
            acc.set(v, false);
        }
        acc.ones().collect()
    }

    /// Graphviz DOT, vertices and edges in index order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", quote(name));
        for label in &self.labels {
            let _ = writeln!(out, "  {};", quote(label));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {} -- {};", quote(&self.labels[u]), quote(&self.labels[v]));
        }
        out.push_str("}\n");
        out
    }

    /// One `u v` line per edge, by label.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_null() {
        let k4 = Graph::complete(4);
        assert!(k4.is_complete());
        assert_eq!(k4.edge_count(), 6);
        let null = Graph::null();
        assert!(null.is_null());
        assert!(null.is_complete());
        assert_eq!(null.to_edge_list(), "");
    }

    #[test]
    fn induced_keeps_elements() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let sub = path.without(&[1]);
        assert_eq!(sub.elements(), &[0, 2, 3]);
        assert_eq!(sub.vertex_of(2), Some(1));
        assert_eq!(sub.vertex_of(1), None);
        assert!(sub.is_adjacent(1, 2));
        assert!(!sub.is_adjacent(0, 1));
        assert_eq!(sub.label(2), "3");
    }

    #[test]
    fn neighborhood_excludes_set() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(path.neighborhood(&[1, 2]), vec![0, 3]);
        assert_eq!(path.neighborhood(&[0, 1, 2, 3]), Vec::<usize>::new());
    }

    #[test]
    fn exports_are_sorted() {
        let g = Graph::from_edges(3, &[(2, 1), (0, 2)]);
        assert_eq!(g.to_edge_list(), "0 2\n1 2\n");
        assert_eq!(
            g.to_dot("g"),
            "graph \"g\" {\n  \"0\";\n  \"1\";\n  \"2\";\n  \"0\" -- \"2\";\n  \"1\" -- \"2\";\n}\n"
        );
    }
}
