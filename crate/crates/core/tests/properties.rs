use proptest::prelude::*;

use ecc_core::enumerate::{canonical_key, prufer_decode, tree_key};
use ecc_core::graph::edgelist;
use ecc_core::metrics::{tau, xi};
use ecc_core::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..n, n - 2).prop_map(move |seq| prufer_decode(n, &seq))
    })
}

fn relabeled(g: Graph) -> impl Strategy<Value = (Graph, Graph)> {
    let perm: Vec<usize> = (0..g.order()).collect();
    Just(perm)
        .prop_shuffle()
        .prop_map(move |p| (g.clone(), g.permute(&p)))
}

proptest! {
    #[test]
    fn canonical_key_ignores_labels((g, h) in graph(9).prop_flat_map(relabeled)) {
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
    }

    #[test]
    fn tree_key_ignores_labels((g, h) in tree(16).prop_flat_map(relabeled)) {
        prop_assert_eq!(tree_key(&g).unwrap(), tree_key(&h).unwrap());
    }

    #[test]
    fn tree_key_and_general_key_agree(a in tree(9), b in tree(9)) {
        let same_tree = tree_key(&a).unwrap() == tree_key(&b).unwrap();
        let same_general = canonical_key(&a).unwrap() == canonical_key(&b).unwrap();
        prop_assert_eq!(same_tree, same_general);
    }

    #[test]
    fn edge_list_round_trips(g in graph(12)) {
        prop_assert_eq!(edgelist::parse(&edgelist::write(&g)).unwrap(), g);
    }

    #[test]
    fn indices_ignore_labels((g, h) in tree(20).prop_flat_map(relabeled)) {
        prop_assert_eq!(tau(&g).unwrap(), tau(&h).unwrap());
        prop_assert_eq!(xi(&g).unwrap(), xi(&h).unwrap());
    }
}
