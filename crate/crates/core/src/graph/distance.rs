use super::{bits, Graph};
use crate::error::{Error, Result};

/// Hop distances from one source. `None` marks an unreachable vertex.
pub type Distances = Vec<Option<u32>>;

/// A simple path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub vertices: Vec<usize>,
}

impl Path {
    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("path has at least one vertex")
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// Eccentricities of every vertex of a connected graph together with the
/// radius, diameter, center and periphery derived from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccProfile {
    pub ecc: Vec<u32>,
    pub rad: u32,
    pub diam: u32,
    pub center: Vec<usize>,
    pub peripheral: Vec<usize>,
}

impl EccProfile {
    pub fn total(&self) -> u64 {
        self.ecc.iter().map(|&e| u64::from(e)).sum()
    }
}

impl Graph {
    pub fn bfs_distances(&self, src: usize) -> Result<Distances> {
        self.check_vertex(src)?;
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            d += 1;
            for v in bits(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        Ok(dist)
    }

    /// Distances from `src`, failing if some vertex is unreachable.
    pub(crate) fn connected_distances(&self, src: usize) -> Result<Vec<u32>> {
        self.bfs_distances(src)?
            .into_iter()
            .map(|d| d.ok_or(Error::Disconnected))
            .collect()
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Option<u32>> {
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)?[v])
    }

    /// Eccentricity of one vertex.
    pub fn eccentricity(&self, v: usize) -> Result<u32> {
        if self.n == 0 {
            return Err(Error::Empty);
        }
        Ok(self.connected_distances(v)?.into_iter().max().unwrap_or(0))
    }

    pub fn ecc_profile(&self) -> Result<EccProfile> {
        if self.n == 0 {
            return Err(Error::Empty);
        }
        let ecc = (0..self.n)
            .map(|v| self.eccentricity(v))
            .collect::<Result<Vec<_>>>()?;
        let rad = *ecc.iter().min().expect("non-empty");
        let diam = *ecc.iter().max().expect("non-empty");
        let center = (0..self.n).filter(|&v| ecc[v] == rad).collect();
        let peripheral = (0..self.n).filter(|&v| ecc[v] == diam).collect();
        Ok(EccProfile {
            ecc,
            rad,
            diam,
            center,
            peripheral,
        })
    }

    /// Vertices at maximum distance from `u`.
    pub fn eccentric_set(&self, u: usize) -> Result<Vec<usize>> {
        if self.n == 0 {
            return Err(Error::Empty);
        }
        let dist = self.connected_distances(u)?;
        let e = *dist.iter().max().expect("non-empty");
        Ok((0..self.n).filter(|&v| dist[v] == e).collect())
    }

    /// Lexicographically least shortest path from `u` to `v`.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Path> {
        self.check_vertex(u)?;
        let to_v = self.bfs_distances(v)?;
        let Some(mut left) = to_v[u] else {
            return Err(Error::Disconnected);
        };
        let mut vertices = vec![u];
        let mut cur = u;
        while left > 0 {
            left -= 1;
            cur = self
                .neighbors(cur)
                .find(|&w| to_v[w] == Some(left))
                .expect("a BFS predecessor exists on a shortest path");
            vertices.push(cur);
        }
        Ok(Path { vertices })
    }

    /// A diametrical path chosen deterministically: the smallest peripheral
    /// vertex, the smallest vertex at diameter distance from it, and the
    /// lexicographically least shortest path between them.
    pub fn diametrical_path(&self) -> Result<Path> {
        let profile = self.ecc_profile()?;
        let u = profile.peripheral[0];
        let dist = self.connected_distances(u)?;
        let v = (0..self.n)
            .find(|&w| dist[w] == profile.diam)
            .expect("a peripheral vertex has a vertex at diameter distance");
        self.shortest_path(u, v)
    }

    /// Every shortest path from `u` to `v`, in lexicographic order.
    pub fn all_shortest_paths(&self, u: usize, v: usize) -> Result<Vec<Path>> {
        self.check_vertex(u)?;
        let to_v = self.bfs_distances(v)?;
        if to_v[u].is_none() {
            return Err(Error::Disconnected);
        }
        let mut out = Vec::new();
        let mut stack = vec![u];
        self.extend_shortest(&to_v, &mut stack, &mut out);
        Ok(out)
    }

    fn extend_shortest(&self, to_v: &Distances, stack: &mut Vec<usize>, out: &mut Vec<Path>) {
        let cur = *stack.last().expect("non-empty stack");
        let d = to_v[cur].expect("on a shortest path");
        if d == 0 {
            out.push(Path {
                vertices: stack.clone(),
            });
            return;
        }
        for w in self.neighbors(cur) {
            if to_v[w] == Some(d - 1) {
                stack.push(w);
                self.extend_shortest(to_v, stack, out);
                stack.pop();
            }
        }
    }

    /// Unordered pairs `(u, v)`, `u < v`, at diameter distance.
    pub fn diametrical_pairs(&self) -> Result<Vec<(usize, usize)>> {
        let profile = self.ecc_profile()?;
        let mut pairs = Vec::new();
        for &u in &profile.peripheral {
            let dist = self.connected_distances(u)?;
            for v in u + 1..self.n {
                if dist[v] == profile.diam {
                    pairs.push((u, v));
                }
            }
        }
        Ok(pairs)
    }
}
