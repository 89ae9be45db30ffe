//! Simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a simple graph; loops and repeated edges are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Precondition(format!("edge ({a},{b}) outside 0..{n}")));
            }
            if a == b {
                return Err(Error::Precondition(format!("loop at vertex {a}")));
            }
            if adj[a].contains(&b) {
                return Err(Error::Precondition(format!("repeated edge ({a},{b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    /// BFS distances from `root`; `None` for unreachable vertices.
    pub fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The graph joining vertices at distance exactly `d`.
    pub fn distance_graph(&self, d: usize) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for a in 0..n {
            let dist = self.distances_from(a);
            edges.extend((a + 1..n).filter(|&b| dist[b] == Some(d)).map(|b| (a, b)));
        }
        Graph::new(n, &edges).expect("distance graph is simple")
    }

    /// Two-colouring `0/1` when the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Length of a shortest cycle, `None` for forests.
    ///
    /// Runs a BFS from every vertex; a non-tree edge `(u, w)` closes a
    /// closed walk of length `d(u) + d(w) + 1` through the root, and the
    /// minimum over all roots is the girth.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Whether `map` (image of each vertex) is an automorphism.
    pub fn is_automorphism(&self, map: &[usize]) -> bool {
        let n = self.vertex_count();
        if map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        if !map
            .iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        {
            return false;
        }
        self.edges()
            .into_iter()
            .all(|(a, b)| self.has_edge(map[a], map[b]))
    }
}
