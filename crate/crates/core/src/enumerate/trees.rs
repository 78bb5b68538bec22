//! Free trees: one representative per isomorphism class, and all labeled
//! trees via Prüfer sequences.
//!
//! Unlabeled generation follows Wright, Richmond, Odlyzko and McKay: trees are
//! level sequences of rooted trees, rooted at a center, and the successor
//! function skips sequences that are not the canonical rooting of their free
//! tree.

use crate::graph::Graph;

fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &level)| level == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn next_rooted(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = pred.len() - 1;
        while pred[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn next_free(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().max().copied().unwrap_or(0);
    let rest_height = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let height = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - height - 1..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), edges).expect("level sequence yields a tree")
}

/// Iterator over pairwise non-isomorphic trees of one order.
pub struct FreeTrees {
    state: State,
}

enum State {
    Single(Option<Graph>),
    Layout(Option<Vec<usize>>),
}

impl FreeTrees {
    pub(crate) fn new(n: usize) -> Self {
        let state = if n <= 1 {
            State::Single(Some(Graph::empty(n).expect("small order")))
        } else {
            let layout = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
            State::Layout(Some(layout))
        };
        FreeTrees { state }
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match &mut self.state {
            State::Single(g) => g.take(),
            State::Layout(slot) => {
                let layout = next_free(slot.take()?)?;
                let g = layout_to_graph(&layout);
                *slot = next_rooted(&layout, None);
                Some(g)
            }
        }
    }
}

/// Decode a Prüfer sequence over `0..n` into a labeled tree on `n` vertices.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len() + 2, n.max(2));
    if n <= 1 {
        return Graph::empty(n).expect("small order");
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

/// Number of labeled trees on `n` vertices, `n^(n-2)`.
pub fn labeled_tree_count(n: usize) -> usize {
    if n <= 2 {
        1
    } else {
        n.pow(n as u32 - 2)
    }
}

/// The labeled tree whose Prüfer sequence has base-`n` digits `code`, least
/// significant first; `code < labeled_tree_count(n)`.
pub fn labeled_tree(n: usize, mut code: usize) -> Graph {
    let mut seq = vec![0; n.saturating_sub(2)];
    for s in seq.iter_mut() {
        *s = code % n;
        code /= n;
    }
    prufer_decode(n, &seq)
}

/// Every labeled tree on `n` vertices.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    (0..labeled_tree_count(n)).map(move |code| labeled_tree(n, code))
}
