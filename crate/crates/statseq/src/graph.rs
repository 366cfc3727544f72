//! Undirected simple graphs on vertices `0..n`, stored as adjacency sets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// An undirected simple graph. Adjacency is kept symmetric and loop-free;
/// vertex indices are exactly `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    edges: usize,
}

/// Connectivity/cycle classification of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    Tree,
    Unicyclic,
    OtherConnected,
    Disconnected,
}

impl Graph {
    /// Edgeless graph of order `n` (n >= 1).
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "graph order must be at least 1");
        Graph {
            adj: vec![BTreeSet::new(); n],
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts edge `uv`. Re-inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n {
            return Err(Error::VertexOutOfRange { index: u, order: n });
        }
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, order: n });
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.edges += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// Tree iff connected with `m = n - 1`; unicyclic iff connected with
    /// `m = n`; other-connected iff connected with `m > n`.
    pub fn classify(&self) -> GraphClass {
        if !self.is_connected() {
            return GraphClass::Disconnected;
        }
        let n = self.n();
        let m = self.edges;
        if m == n - 1 {
            GraphClass::Tree
        } else if m == n {
            GraphClass::Unicyclic
        } else {
            GraphClass::OtherConnected
        }
    }

    /// Applies a permutation: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation image");
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_edge_rejects_loops_and_range() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop { vertex: 1 }));
        assert_eq!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange { index: 3, order: 3 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let mut g = Graph::new(2);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
    }

    #[test]
    fn classify_small_cases() {
        let path4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path4.classify(), GraphClass::Tree);

        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.classify(), GraphClass::Unicyclic);

        let k4_minus = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(k4_minus.classify(), GraphClass::OtherConnected);

        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.classify(), GraphClass::Disconnected);

        assert_eq!(Graph::new(1).classify(), GraphClass::Tree);
    }

    #[test]
    fn edges_are_sorted_upper() {
        let g = Graph::from_edges(4, &[(2, 0), (3, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3)]);
    }
}
