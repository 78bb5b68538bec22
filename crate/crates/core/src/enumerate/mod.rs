//! Exhaustive generation of small trees, unicyclic, bicyclic and conjugated
//! trees up to isomorphism, and exact extremal scans of the total
//! eccentricity over them.
//!
//! Unicyclic (bicyclic) graphs are produced by adding one (two) non-edges to
//! every free tree and deduplicating by canonical key. Deleting cycle edges
//! from such a graph always leaves a spanning tree, so nothing is missed.
//! Base trees are processed in parallel; results are merged in key order and
//! do not depend on the thread count.

mod canon;
mod trees;

pub use canon::{
    canonical_form, canonical_graph, canonical_key, tree_key, CanonicalKey, CANON_MAX_ORDER,
};
pub use trees::{labeled_tree, labeled_tree_count, labeled_trees, prufer_decode, FreeTrees};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::is_conjugated;
use crate::metrics::tau;

/// Largest orders the generators accept.
pub const MAX_TREE_ORDER: usize = CANON_MAX_ORDER;
pub const MAX_UNICYCLIC_ORDER: usize = 12;
pub const MAX_BICYCLIC_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScanClass {
    Tree,
    Unicyclic,
    Bicyclic,
    ConjugatedTree,
}

impl ScanClass {
    pub const ALL: [ScanClass; 4] = [
        ScanClass::Tree,
        ScanClass::Unicyclic,
        ScanClass::Bicyclic,
        ScanClass::ConjugatedTree,
    ];

    /// Smallest and largest order the generator for this class accepts.
    pub fn order_range(&self) -> (usize, usize) {
        match self {
            ScanClass::Tree => (1, MAX_TREE_ORDER),
            ScanClass::Unicyclic => (3, MAX_UNICYCLIC_ORDER),
            ScanClass::Bicyclic => (4, MAX_BICYCLIC_ORDER),
            ScanClass::ConjugatedTree => (2, MAX_TREE_ORDER),
        }
    }

    /// Whether `n` is a valid order for this class's generator.
    pub fn accepts(&self, n: usize) -> bool {
        let (lo, hi) = self.order_range();
        (lo..=hi).contains(&n) && (*self != ScanClass::ConjugatedTree || n.is_multiple_of(2))
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.accepts(n) {
            return Ok(());
        }
        let (lo, hi) = self.order_range();
        let parity = if *self == ScanClass::ConjugatedTree {
            "even "
        } else {
            ""
        };
        Err(Error::OrderOutOfRange {
            n,
            constraint: format!("{self} generation needs {parity}order in {lo}..={hi}"),
        })
    }
}

impl fmt::Display for ScanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanClass::Tree => "tree",
            ScanClass::Unicyclic => "unicyclic",
            ScanClass::Bicyclic => "bicyclic",
            ScanClass::ConjugatedTree => "conjugated-tree",
        })
    }
}

impl FromStr for ScanClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tree" => Ok(ScanClass::Tree),
            "unicyclic" => Ok(ScanClass::Unicyclic),
            "bicyclic" => Ok(ScanClass::Bicyclic),
            "conjugated-tree" | "conjugated" => Ok(ScanClass::ConjugatedTree),
            other => Err(format!(
                "unknown class `{other}` (expected tree, unicyclic, bicyclic or conjugated-tree)"
            )),
        }
    }
}

/// A graph in canonical labeling together with its canonical key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyedGraph {
    pub key: CanonicalKey,
    pub graph: Graph,
}

impl KeyedGraph {
    pub fn new(g: &Graph) -> Result<Self> {
        let (key, graph) = canonical_graph(g)?;
        Ok(KeyedGraph { key, graph })
    }
}

/// Non-isomorphic trees on `n` vertices, `1 <= n <= MAX_TREE_ORDER`.
pub fn gen_trees(n: usize) -> Result<FreeTrees> {
    ScanClass::Tree.check(n)?;
    Ok(FreeTrees::new(n))
}

/// Add every `extra`-subset of non-edges to every tree and keep one graph per
/// isomorphism class, sorted by key.
fn extend_trees(n: usize, extra: usize) -> Result<Vec<KeyedGraph>> {
    let bases: Vec<Graph> = FreeTrees::new(n).collect();
    let found: Vec<Vec<KeyedGraph>> = bases
        .par_iter()
        .map(|t| {
            let non = t.non_edges();
            let mut local = BTreeMap::new();
            let mut add = |g: Graph| -> Result<()> {
                let kg = KeyedGraph::new(&g)?;
                local.entry(kg.key.clone()).or_insert(kg);
                Ok(())
            };
            match extra {
                1 => {
                    for &(u, v) in &non {
                        add(t.add_edge(u, v)?)?;
                    }
                }
                2 => {
                    for (i, &(a, b)) in non.iter().enumerate() {
                        let g1 = t.add_edge(a, b)?;
                        for &(c, d) in &non[i + 1..] {
                            add(g1.add_edge(c, d)?)?;
                        }
                    }
                }
                _ => unreachable!("only one or two extra edges are generated"),
            }
            Ok(local.into_values().collect())
        })
        .collect::<Result<_>>()?;
    let mut merged = BTreeMap::new();
    for kg in found.into_iter().flatten() {
        merged.entry(kg.key.clone()).or_insert(kg);
    }
    Ok(merged.into_values().collect())
}

/// Non-isomorphic connected unicyclic graphs on `n` vertices.
pub fn gen_unicyclic(n: usize) -> Result<Vec<KeyedGraph>> {
    ScanClass::Unicyclic.check(n)?;
    extend_trees(n, 1)
}

/// Non-isomorphic connected bicyclic graphs on `n` vertices.
pub fn gen_bicyclic(n: usize) -> Result<Vec<KeyedGraph>> {
    ScanClass::Bicyclic.check(n)?;
    extend_trees(n, 2)
}

/// Non-isomorphic trees on `n` vertices that have a perfect matching.
pub fn gen_conjugated_trees(n: usize) -> Result<Vec<Graph>> {
    ScanClass::ConjugatedTree.check(n)?;
    FreeTrees::new(n)
        .filter_map(|t| match is_conjugated(&t) {
            Ok(true) => Some(Ok(t)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

/// Every graph of `class` on `n` vertices, in canonical labeling, sorted by
/// key.
pub fn gen_class(class: ScanClass, n: usize) -> Result<Vec<KeyedGraph>> {
    class.check(n)?;
    let mut out: Vec<KeyedGraph> = match class {
        ScanClass::Tree => gen_trees(n)?
            .collect::<Vec<_>>()
            .par_iter()
            .map(KeyedGraph::new)
            .collect::<Result<_>>()?,
        ScanClass::ConjugatedTree => gen_conjugated_trees(n)?
            .par_iter()
            .map(KeyedGraph::new)
            .collect::<Result<_>>()?,
        ScanClass::Unicyclic => gen_unicyclic(n)?,
        ScanClass::Bicyclic => gen_bicyclic(n)?,
    };
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

/// Exact minimum and maximum total eccentricity over one class and order,
/// with every graph attaining each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub class: ScanClass,
    pub n: usize,
    pub count: usize,
    pub min_tau: u64,
    pub max_tau: u64,
    pub min_witnesses: Vec<KeyedGraph>,
    pub max_witnesses: Vec<KeyedGraph>,
}

impl ExtremalReport {
    /// Scan an explicit list of graphs, which must be non-empty and
    /// connected.
    pub fn from_graphs(class: ScanClass, n: usize, graphs: &[KeyedGraph]) -> Result<Self> {
        let taus: Vec<u64> = graphs
            .par_iter()
            .map(|kg| tau(&kg.graph))
            .collect::<Result<_>>()?;
        let (Some(&min_tau), Some(&max_tau)) = (taus.iter().min(), taus.iter().max()) else {
            return Err(Error::OrderOutOfRange {
                n,
                constraint: format!("no {class} graphs on {n} vertices"),
            });
        };
        let pick = |target: u64| {
            graphs
                .iter()
                .zip(&taus)
                .filter(|&(_, &t)| t == target)
                .map(|(kg, _)| kg.clone())
                .collect()
        };
        Ok(ExtremalReport {
            class,
            n,
            count: graphs.len(),
            min_tau,
            max_tau,
            min_witnesses: pick(min_tau),
            max_witnesses: pick(max_tau),
        })
    }

    pub fn min_has(&self, key: &CanonicalKey) -> bool {
        self.min_witnesses.iter().any(|w| &w.key == key)
    }

    pub fn max_has(&self, key: &CanonicalKey) -> bool {
        self.max_witnesses.iter().any(|w| &w.key == key)
    }
}

pub fn extremal_scan(class: ScanClass, n: usize) -> Result<ExtremalReport> {
    let graphs = gen_class(class, n)?;
    ExtremalReport::from_graphs(class, n, &graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn key(f: Family) -> CanonicalKey {
        canonical_key(&f.construct().unwrap()).unwrap()
    }

    #[test]
    fn tree_counts() {
        assert_eq!(gen_trees(4).unwrap().count(), 2);
        assert_eq!(gen_trees(7).unwrap().count(), 11);
        assert_eq!(gen_trees(10).unwrap().count(), 106);
        assert!(gen_trees(0).is_err());
        assert!(gen_trees(17).is_err());
    }

    #[test]
    fn four_vertex_trees_from_labeled() {
        let keys: std::collections::BTreeSet<_> = labeled_trees(4)
            .map(|t| canonical_key(&t).unwrap())
            .collect();
        assert_eq!(keys.len(), 2);
    }

    #[test]
    fn unicyclic_small() {
        let c3 = gen_unicyclic(3).unwrap();
        assert_eq!(c3.len(), 1);
        assert_eq!(c3[0].key, key(Family::Cycle(3)));
        // Unicyclic counts from the networkx cross-check: 1, 2, 5, 13, 33, 89, 240.
        let counts: Vec<usize> = (3..=9).map(|n| gen_unicyclic(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89, 240]);
    }

    #[test]
    fn bicyclic_counts() {
        let counts: Vec<usize> = (4..=8).map(|n| gen_bicyclic(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 5, 19, 67, 236]);
        assert!(gen_bicyclic(3).is_err());
    }

    #[test]
    fn conjugated_small() {
        assert_eq!(gen_conjugated_trees(2).unwrap().len(), 1);
        let four = gen_conjugated_trees(4).unwrap();
        assert_eq!(four.len(), 1);
        assert_eq!(canonical_key(&four[0]).unwrap(), key(Family::Path(4)));
        let six: Vec<_> = gen_conjugated_trees(6)
            .unwrap()
            .iter()
            .map(|t| canonical_key(t).unwrap())
            .collect();
        assert!(six.contains(&key(Family::Path(6))));
        assert!(six.contains(&key(Family::SStar(6))));
        assert!(!six.contains(&key(Family::Star(6))));
        assert!(matches!(
            gen_conjugated_trees(7),
            Err(Error::OrderOutOfRange { .. })
        ));
    }

    #[test]
    fn scan_examples() {
        let r = extremal_scan(ScanClass::Tree, 7).unwrap();
        assert_eq!((r.min_tau, r.max_tau), (13, 33));
        assert!(r.min_has(&key(Family::Star(7))));
        assert!(r.max_has(&key(Family::Path(7))));

        let r = extremal_scan(ScanClass::Unicyclic, 5).unwrap();
        assert_eq!((r.min_tau, r.max_tau), (9, 13));
        assert!(r.max_has(&key(Family::U2(5))));

        let r = extremal_scan(ScanClass::Bicyclic, 6).unwrap();
        assert_eq!((r.min_tau, r.max_tau), (11, 19));
        assert!(r.min_has(&key(Family::B1(6))));
        assert!(r.min_has(&key(Family::B1Prime(6))));
        assert_eq!(r.max_witnesses.len(), 1);
        assert!(r.max_has(&key(Family::B2Prime(6))));

        let r = extremal_scan(ScanClass::ConjugatedTree, 8).unwrap();
        assert_eq!((r.min_tau, r.max_tau), (26, 44));
        assert!(r.min_has(&key(Family::SStar(8))));
        assert!(r.max_has(&key(Family::Path(8))));
    }

    #[test]
    fn class_names_round_trip() {
        for c in ScanClass::ALL {
            assert_eq!(c.to_string().parse::<ScanClass>().unwrap(), c);
        }
    }
}
