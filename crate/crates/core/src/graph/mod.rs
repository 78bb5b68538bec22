//! Undirected simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Each vertex keeps its neighbourhood as a `u64` bit set, so the order is
//! capped at 64. Graphs are values: every edit returns a modified copy and
//! leaves the receiver untouched.

mod cycles;
mod distance;
pub mod edgelist;

pub use cycles::{Cycle, MAX_CYCLE_RANK};
pub use distance::{Distances, EccProfile, Path};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// Iterate over the positions of set bits, lowest first.
pub(crate) fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Structural class by edge count and connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Tree,
    Unicyclic,
    Bicyclic,
    Other,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::Tree => "tree",
            GraphClass::Unicyclic => "unicyclic",
            GraphClass::Bicyclic => "bicyclic",
            GraphClass::Other => "other",
        })
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge { n, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build a graph from an edge list. Repeated pairs collapse into one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.set(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn clear(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit set.
    pub fn neighbor_set(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Vertices of degree one.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Non-adjacent distinct pairs `(u, v)` with `u < v`, sorted.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy with the edge `uv` added. Fails if `uv` is already present.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u, v));
        }
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    /// Copy with the edge `uv` removed. Fails if `uv` is absent.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.clear(u, v);
        Ok(g)
    }

    /// Replace edge `removed` by edge `added` in one step.
    pub fn move_edge(&self, removed: (usize, usize), added: (usize, usize)) -> Result<Self> {
        self.remove_edge(removed.0, removed.1)?
            .add_edge(added.0, added.1)
    }

    /// Delete vertex `v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        Ok(self.induced(&keep))
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph {
            n: vertices.len(),
            adj: vec![0; vertices.len()],
        };
        for (i, &v) in vertices.iter().enumerate() {
            for w in bits(self.adj[v]) {
                if pos[w] != usize::MAX {
                    g.adj[i] |= 1 << pos[w];
                }
            }
        }
        g
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.size() + 1 == self.n && self.is_connected()
    }

    /// Error unless the graph is a tree.
    pub fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree {
                n: self.n,
                m: self.size(),
            })
        }
    }

    /// Tree / unicyclic / bicyclic by connectivity and `m - n`.
    pub fn classify(&self) -> GraphClass {
        if !self.is_connected() {
            return GraphClass::Other;
        }
        let (n, m) = (self.n, self.size());
        if m + 1 == n {
            GraphClass::Tree
        } else if m == n {
            GraphClass::Unicyclic
        } else if m == n + 1 {
            GraphClass::Bicyclic
        } else {
            GraphClass::Other
        }
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn builds_small_graphs() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(k2.size(), 1);
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.size(), 3);
        assert_eq!(p4.degrees(), vec![1, 2, 2, 1]);
        assert!(p4.is_tree());
    }

    #[test]
    fn rejects_bad_pairs() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(Graph::empty(65), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn edits_are_copies() {
        let p3 = path(3);
        let c3 = p3.add_edge(0, 2).unwrap();
        assert_eq!(c3.size(), 3);
        assert_eq!(p3.size(), 2);
        assert_eq!(c3.classify(), GraphClass::Unicyclic);
        let back = c3.remove_edge(0, 1).unwrap();
        assert!(back.is_tree());
        assert_eq!(p3.add_edge(0, 1), Err(Error::EdgeExists(0, 1)));
        assert_eq!(p3.remove_edge(0, 2), Err(Error::MissingEdge(0, 2)));
    }

    #[test]
    fn classification() {
        assert_eq!(path(7).classify(), GraphClass::Tree);
        let c5 = path(5).add_edge(0, 4).unwrap();
        assert_eq!(c5.classify(), GraphClass::Unicyclic);
        let c4_chord = path(4).add_edge(0, 3).unwrap().add_edge(0, 2).unwrap();
        assert_eq!(c4_chord.size(), 5);
        assert_eq!(c4_chord.classify(), GraphClass::Bicyclic);
        let two_k1 = Graph::empty(2).unwrap();
        assert_eq!(two_k1.classify(), GraphClass::Other);
    }

    #[test]
    fn vertex_removal_relabels() {
        let p4 = path(4);
        let g = p4.remove_vertex(0).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let g = p4.remove_vertex(1).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn full_width_graph() {
        let g = path(64);
        assert!(g.is_connected());
        assert!(g.is_tree());
    }
}
