//! Perfect matchings of trees by leaf peeling.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// A set of pairwise disjoint edges, stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: BTreeSet<(usize, usize)>,
    pub perfect: bool,
}

impl Matching {
    /// Partner of `v`, if `v` is covered.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// True if every edge lies in `g` and every vertex of `g` is covered once.
    pub fn is_perfect_matching_of(&self, g: &Graph) -> bool {
        let mut covered = 0u64;
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || covered >> u & 1 == 1 || covered >> v & 1 == 1 {
                return false;
            }
            covered |= 1 << u | 1 << v;
        }
        covered.count_ones() as usize == g.order()
    }
}

/// The perfect matching of a tree, or `None` if it has none.
///
/// Leaves are peeled in ascending id order: the smallest live leaf is matched
/// to its unique live neighbour and both are deleted. A leaf whose neighbour
/// is already gone, or an isolated leftover vertex, means no perfect
/// matching exists. On trees the result is unique when it exists.
pub fn tree_perfect_matching(t: &Graph) -> Result<Option<Matching>> {
    peel(t, &mut |live_leaves| live_leaves.trailing_zeros() as usize)
}

/// Leaf peeling with a caller-chosen leaf at every step. `pick` receives the
/// bit set of current leaves and returns one of them.
pub fn tree_perfect_matching_by(
    t: &Graph,
    pick: &mut dyn FnMut(u64) -> usize,
) -> Result<Option<Matching>> {
    peel(t, pick)
}

fn peel(t: &Graph, pick: &mut dyn FnMut(u64) -> usize) -> Result<Option<Matching>> {
    t.require_tree()?;
    let n = t.order();
    if n % 2 == 1 {
        return Ok(None);
    }
    let mut live: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut edges = BTreeSet::new();
    while live != 0 {
        let mut leaves = 0u64;
        for v in bits(live) {
            let d = (t.neighbor_set(v) & live).count_ones();
            if d == 0 {
                return Ok(None);
            }
            if d == 1 {
                leaves |= 1 << v;
            }
        }
        let x = pick(leaves);
        debug_assert!(leaves >> x & 1 == 1);
        let y = (t.neighbor_set(x) & live).trailing_zeros() as usize;
        edges.insert((x.min(y), x.max(y)));
        live &= !(1 << x | 1 << y);
    }
    Ok(Some(Matching {
        edges,
        perfect: true,
    }))
}

/// A tree is conjugated when it has a perfect matching.
pub fn is_conjugated(t: &Graph) -> Result<bool> {
    Ok(tree_perfect_matching(t)?.is_some())
}

/// Perfect matching of a tree, as an error when absent.
pub fn require_perfect_matching(t: &Graph) -> Result<Matching> {
    tree_perfect_matching(t)?.ok_or(Error::NoPerfectMatching)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn build(f: Family) -> Graph {
        f.construct().unwrap()
    }

    #[test]
    fn path_six() {
        let m = tree_perfect_matching(&build(Family::Path(6)))
            .unwrap()
            .unwrap();
        assert_eq!(
            m.edges.into_iter().collect::<Vec<_>>(),
            vec![(0, 1), (2, 3), (4, 5)]
        );
    }

    #[test]
    fn star_has_none() {
        assert_eq!(
            tree_perfect_matching(&build(Family::Star(5))).unwrap(),
            None
        );
        assert_eq!(
            require_perfect_matching(&build(Family::Star(6))),
            Err(Error::NoPerfectMatching)
        );
    }

    #[test]
    fn s_star_eight() {
        let t = build(Family::SStar(8));
        let m = tree_perfect_matching(&t).unwrap().unwrap();
        assert_eq!(
            m.edges.iter().copied().collect::<Vec<_>>(),
            vec![(0, 7), (1, 2), (3, 4), (5, 6)]
        );
        assert!(m.is_perfect_matching_of(&t));
        assert_eq!(m.partner(0), Some(7));
    }

    #[test]
    fn conjugated_predicate() {
        assert!(!is_conjugated(&build(Family::Path(7))).unwrap());
        assert!(is_conjugated(&build(Family::Path(8))).unwrap());
        assert!(!is_conjugated(&build(Family::DoubleStar { n: 6, k: 2 })).unwrap());
        assert!(is_conjugated(&build(Family::Path(2))).unwrap());
    }

    #[test]
    fn non_tree_rejected() {
        assert!(matches!(
            tree_perfect_matching(&build(Family::Cycle(4))),
            Err(Error::NotATree { .. })
        ));
    }

    #[test]
    fn largest_leaf_first_agrees() {
        let t = build(Family::SStar(10));
        let a = tree_perfect_matching(&t).unwrap();
        let b = tree_perfect_matching_by(&t, &mut |l| 63 - l.leading_zeros() as usize).unwrap();
        assert_eq!(a, b);
    }
}
