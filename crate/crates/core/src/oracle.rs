//! Slow, obviously-correct reference implementations used to cross-check the
//! fast paths: filtering every labeled graph, Floyd-Warshall distances and
//! depth-first cycle search.

use std::collections::BTreeSet;

use crate::enumerate::{canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order [`filtered_class_keys`] will enumerate (`2^21` edge sets).
pub const FILTER_MAX_ORDER: usize = 7;

/// Canonical keys of every connected graph on `n` vertices with
/// `n - 1 + extra` edges, found by testing all edge subsets of `K_n`.
pub fn filtered_class_keys(n: usize, extra: usize) -> Result<BTreeSet<CanonicalKey>> {
    if n == 0 || n > FILTER_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            n,
            constraint: format!("the filter oracle handles 1..={FILTER_MAX_ORDER} vertices"),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = n - 1 + extra;
    let mut keys = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        if mask.count_ones() as usize != m {
            continue;
        }
        let g = Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )?;
        if g.is_connected() {
            keys.insert(canonical_key(&g)?);
        }
    }
    Ok(keys)
}

/// All-pairs hop distances by Floyd-Warshall; `None` when unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
        for v in g.neighbors(u) {
            row[v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Eccentricities from [`floyd_warshall`], or `None` if disconnected.
pub fn brute_eccentricities(g: &Graph) -> Option<Vec<u32>> {
    floyd_warshall(g)
        .into_iter()
        .map(|row| row.into_iter().try_fold(0, |m, d| d.map(|d| m.max(d))))
        .collect()
}

/// Edge sets of all simple cycles, by extending paths from their smallest
/// vertex.
pub fn dfs_cycles(g: &Graph) -> BTreeSet<Vec<(usize, usize)>> {
    fn extend(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<(usize, usize)>>,
    ) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                let mut edges: Vec<(usize, usize)> = path
                    .windows(2)
                    .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
                    .collect();
                edges.push((start.min(last), start.max(last)));
                edges.sort_unstable();
                out.insert(edges);
            } else if w > start && !path.contains(&w) {
                path.push(w);
                extend(g, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.order() {
        extend(g, s, &mut vec![s], &mut out);
    }
    out
}
