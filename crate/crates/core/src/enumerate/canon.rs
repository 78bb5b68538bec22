//! Canonical keys for small graphs.
//!
//! The general key is the least upper-triangle adjacency bit string over the
//! leaves of an individualisation-refinement search tree. Cells are refined
//! to an equitable ordered partition; the search branches on the first
//! non-singleton cell and skips vertices that are twins (same neighbourhood
//! apart from each other) of an already tried vertex, since swapping twins
//! is an automorphism that fixes everything individualised so far.
//!
//! Trees additionally have a linear encoding rooted at the center.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order accepted by [`canonical_key`].
pub const CANON_MAX_ORDER: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({self})")
    }
}

type Cells = Vec<Vec<usize>>;

/// Split cells until every vertex of a cell has the same number of
/// neighbours in each cell. Groups are ordered by their count vectors, so the
/// result depends only on the isomorphism type of (graph, partition).
fn refine(g: &Graph, cells: &mut Cells) {
    let n = g.order();
    loop {
        let mut masks = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            masks.push(cell.iter().fold(0u64, |m, &v| m | 1 << v));
        }
        let mut next: Cells = Vec::with_capacity(n);
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbor_set(v);
                    (masks.iter().map(|m| (nb & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        let changed = next.len() != cells.len();
        *cells = next;
        if !changed {
            return;
        }
    }
}

/// Upper-triangle adjacency bits under `order` (position `i` holds vertex
/// `order[i]`), prefixed by the vertex count.
fn encode(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(1 + (n * n / 2).div_ceil(8));
    out.push(n as u8);
    let (mut byte, mut used) = (0u8, 0);
    for i in 0..n {
        for j in i + 1..n {
            byte = byte << 1 | g.has_edge(order[i], order[j]) as u8;
            used += 1;
            if used == 8 {
                out.push(byte);
                byte = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(byte << (8 - used));
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn twins(&self, u: usize, v: usize) -> bool {
        let (nu, nv) = (self.g.neighbor_set(u), self.g.neighbor_set(v));
        nu & !(1 << v) == nv & !(1 << u)
    }

    fn run(&mut self, mut cells: Cells) {
        refine(self.g, &mut cells);
        let Some(idx) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let code = encode(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = cells[idx].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..idx]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[idx + 1..]);
            self.run(next);
        }
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > CANON_MAX_ORDER {
        Err(Error::TooLarge {
            n: g.order(),
            max: CANON_MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

/// Canonical key plus a canonical labeling: `labeling[i]` is the vertex that
/// takes position `i`.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalKey, Vec<usize>)> {
    check_order(g)?;
    if g.order() == 0 {
        return Ok((CanonicalKey(vec![0]), Vec::new()));
    }
    let mut search = Search { g, best: None };
    search.run(vec![(0..g.order()).collect()]);
    let (code, order) = search.best.expect("search reaches at least one leaf");
    Ok((CanonicalKey(code), order))
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    Ok(canonical_form(g)?.0)
}

/// Copy of `g` relabeled into its canonical labeling.
pub fn canonical_graph(g: &Graph) -> Result<(CanonicalKey, Graph)> {
    let (key, order) = canonical_form(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((key, g.permute(&perm)))
}

/// Center-rooted parenthesis encoding of a tree. Isomorphic trees and only
/// isomorphic trees share a key. Keys from this function are not comparable
/// with [`canonical_key`] output.
pub fn tree_key(t: &Graph) -> Result<CanonicalKey> {
    t.require_tree()?;
    let center = t.ecc_profile()?.center;
    let mut out = vec![b'T', t.order() as u8];
    match center[..] {
        [c] => out.extend(rooted_code(t, c, None)),
        [a, b] => {
            let mut sides = [rooted_code(t, a, Some(b)), rooted_code(t, b, Some(a))];
            sides.sort();
            out.push(b'=');
            out.extend(sides.concat());
        }
        _ => unreachable!("a tree has one or two central vertices"),
    }
    Ok(CanonicalKey(out))
}

fn rooted_code(t: &Graph, v: usize, parent: Option<usize>) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = bits(t.neighbor_set(v))
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(t, w, Some(v)))
        .collect();
    children.sort();
    let mut out = vec![b'('];
    for c in children {
        out.extend(c);
    }
    out.push(b')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn relabeled_paths_match() {
        let a = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
        assert_eq!(tree_key(&a).unwrap(), tree_key(&b).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Family::Path(4).construct().unwrap();
        let s4 = Family::Star(4).construct().unwrap();
        assert_ne!(canonical_key(&p4).unwrap(), canonical_key(&s4).unwrap());
        assert_ne!(tree_key(&p4).unwrap(), tree_key(&s4).unwrap());
    }

    #[test]
    fn canonical_graph_has_same_key() {
        let g = Family::B2(8).construct().unwrap();
        let (key, cg) = canonical_graph(&g).unwrap();
        assert_eq!(canonical_key(&cg).unwrap(), key);
        let (key2, cg2) = canonical_graph(&cg).unwrap();
        assert_eq!(key, key2);
        assert_eq!(cg, cg2);
    }

    #[test]
    fn symmetric_graphs_finish() {
        for f in [
            Family::Complete(16),
            Family::Star(16),
            Family::CompleteBipartite { m: 8, n: 8 },
            Family::Cycle(16),
            Family::SubdividedStar(15),
        ] {
            canonical_key(&f.construct().unwrap()).unwrap();
        }
    }

    #[test]
    fn order_limit() {
        let g = Family::Path(17).construct().unwrap();
        assert!(matches!(canonical_key(&g), Err(Error::TooLarge { .. })));
        assert!(tree_key(&g).is_ok());
    }

    #[test]
    fn cospectral_style_pair_distinguished() {
        // C6 and two disjoint triangles: both 2-regular on 6 vertices.
        let c6 = Family::Cycle(6).construct().unwrap();
        let two_c3 =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_key(&c6).unwrap(), canonical_key(&two_c3).unwrap());
    }
}
