//! Dinic max-flow on a vertex-split network.
//!
//! Every vertex `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined by an arc
//! of capacity `weight(v)`. Each undirected edge `{a, b}` becomes the two
//! uncapacitated arcs `out(a) -> in(b)` and `out(b) -> in(a)`. A minimum cut
//! then consists of vertex arcs only.

use std::collections::VecDeque;

const UNBOUNDED: i64 = i64::MAX / 4;

#[derive(Debug, Clone)]
pub(crate) struct SplitNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    initial: Vec<i64>,
    level: Vec<i32>,
    cursor: Vec<usize>,
}

impl SplitNetwork {
    /// `weights[v]` is the capacity of vertex `v`; `edges` lists undirected edges.
    pub(crate) fn new(weights: &[i64], edges: impl Iterator<Item = (usize, usize)>) -> Self {
        let nodes = 2 * weights.len();
        let mut net = SplitNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
            level: vec![-1; nodes],
            cursor: vec![0; nodes],
        };
        for (v, &w) in weights.iter().enumerate() {
            net.add_arc(2 * v, 2 * v + 1, w);
        }
        for (a, b) in edges {
            net.add_arc(2 * a + 1, 2 * b, UNBOUNDED);
            net.add_arc(2 * b + 1, 2 * a, UNBOUNDED);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.adj[from].push(self.to.len());
        self.to.push(to);
        self.initial.push(cap);
        self.adj[to].push(self.to.len());
        self.to.push(from);
        self.initial.push(0);
    }

    /// Maximum number of vertex-weighted disjoint paths from `s` to `t`
    /// (both excluded), stopping early once `limit` is reached.
    ///
    /// Returns the flow value and, when the flow stayed below `limit`, the
    /// minimum vertex cut closest to `s`.
    pub(crate) fn min_cut(&mut self, s: usize, t: usize, limit: i64) -> (i64, Option<Vec<usize>>) {
        self.cap.clone_from(&self.initial);
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit && self.bfs(source, sink) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let pushed = self.dfs(source, sink, limit - flow);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow >= limit {
                    break;
                }
            }
        }
        if flow >= limit {
            return (flow, None);
        }
        // `bfs` left the residual reachability from the source in `level`.
        let cut = (0..self.adj.len() / 2)
            .filter(|&v| self.level[2 * v] >= 0 && self.level[2 * v + 1] < 0)
            .collect();
        (flow, Some(cut))
    }

    fn bfs(&mut self, source: usize, sink: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[sink] >= 0
    }

    fn dfs(&mut self, u: usize, sink: usize, pushed: i64) -> i64 {
        if u == sink {
            return pushed;
        }
        while self.cursor[u] < self.adj[u].len() {
            let e = self.adj[u][self.cursor[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let got = self.dfs(v, sink, pushed.min(self.cap[e]));
                if got > 0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }
}
