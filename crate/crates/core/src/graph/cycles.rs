//! Simple cycles of sparse connected graphs via the cycle space.
//!
//! Every simple cycle is a non-empty sum of fundamental cycles of a BFS
//! spanning tree. With cycle-space dimension `d` there are `2^d - 1` sums to
//! test, which is tiny for the unicyclic and bicyclic graphs handled here.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

/// Largest cycle-space dimension [`simple_cycles`] will expand.
pub const MAX_CYCLE_RANK: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    /// Vertices in cyclic order starting from the smallest id.
    pub vertices: Vec<usize>,
    /// Edges as `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl Graph {
    /// Number of independent cycles, `m - n + 1` for a connected graph.
    pub fn cycle_rank(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.size() + 1 - self.order())
    }

    /// Every simple cycle, sorted.
    pub fn simple_cycles(&self) -> Result<Vec<Cycle>> {
        let rank = self.cycle_rank()?;
        if rank > MAX_CYCLE_RANK {
            return Err(Error::TooLarge {
                n: rank,
                max: MAX_CYCLE_RANK,
            });
        }
        let n = self.order();
        // BFS tree from vertex 0.
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0]);
        seen[0] = true;
        let mut tree_edges = BTreeSet::new();
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    tree_edges.insert(norm(v, w));
                    queue.push_back(w);
                }
            }
        }
        let fundamental: Vec<BTreeSet<(usize, usize)>> = self
            .edges()
            .into_iter()
            .filter(|e| !tree_edges.contains(e))
            .map(|(a, b)| {
                let mut set = BTreeSet::from([(a, b)]);
                let (mut x, mut y) = (a, b);
                while x != y {
                    if depth[x] >= depth[y] {
                        set.insert(norm(x, parent[x]));
                        x = parent[x];
                    } else {
                        set.insert(norm(y, parent[y]));
                        y = parent[y];
                    }
                }
                set
            })
            .collect();

        let mut cycles = Vec::new();
        for mask in 1u32..(1 << rank) {
            let mut sum: BTreeSet<(usize, usize)> = BTreeSet::new();
            for (i, f) in fundamental.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    sum = sum.symmetric_difference(f).copied().collect();
                }
            }
            if let Some(c) = as_cycle(&sum) {
                cycles.push(c);
            }
        }
        cycles.sort();
        Ok(cycles)
    }
}

/// The edge set as a single cycle, if it is one.
fn as_cycle(edges: &BTreeSet<(usize, usize)>) -> Option<Cycle> {
    if edges.len() < 3 {
        return None;
    }
    let mut adj: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    if adj.values().any(|nb| nb.len() != 2) {
        return None;
    }
    let start = *adj.keys().next()?;
    let mut vertices = vec![start];
    let (mut prev, mut cur) = (start, adj[&start][0].min(adj[&start][1]));
    while cur != start {
        vertices.push(cur);
        let nb = &adj[&cur];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    (vertices.len() == adj.len()).then(|| Cycle {
        vertices,
        edges: edges.iter().copied().collect(),
    })
}
