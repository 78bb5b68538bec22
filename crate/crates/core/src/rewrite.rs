//! Guarded edge-move procedures on trees.
//!
//! * [`algorithm1`] grows a diametrical path one pendant at a time until the
//!   tree is a path; `tau` strictly increases at every move.
//! * [`algorithm2`] re-attaches every vertex at radius distance from a fixed
//!   central vertex `c` to `c`, round after round, until the tree is a star;
//!   `tau` strictly decreases across every round.
//! * [`algorithm3`] does the same for trees with a perfect matching, moving
//!   matched pendant pairs instead of single leaves, and stops at radius 2.
//!
//! Every choice is deterministic: the smallest peripheral or central vertex,
//! and the smallest candidate edge first.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::Graph;
use crate::matching::{require_perfect_matching, Matching};
use crate::metrics::tau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Tree to path.
    ToPath,
    /// Tree to star.
    ToStar,
    /// Conjugated tree to the conjugated minimum.
    ToConjugatedMin,
}

impl Algorithm {
    pub fn number(&self) -> u8 {
        match self {
            Algorithm::ToPath => 1,
            Algorithm::ToStar => 2,
            Algorithm::ToConjugatedMin => 3,
        }
    }

    pub fn from_number(k: u8) -> Option<Self> {
        match k {
            1 => Some(Algorithm::ToPath),
            2 => Some(Algorithm::ToStar),
            3 => Some(Algorithm::ToConjugatedMin),
            _ => None,
        }
    }

    pub fn run(&self, t: &Graph) -> Result<RewriteTrace> {
        match self {
            Algorithm::ToPath => algorithm1(t),
            Algorithm::ToStar => algorithm2(t),
            Algorithm::ToConjugatedMin => algorithm3(t),
        }
    }

    /// The tree every run on `n` vertices must end at, up to isomorphism.
    /// On four vertices the conjugated minimum is the path itself.
    pub fn target(&self, n: usize) -> Result<Graph> {
        match self {
            Algorithm::ToPath => Family::Path(n).construct(),
            Algorithm::ToStar => Family::Star(n).construct(),
            Algorithm::ToConjugatedMin if n == 4 => Family::Path(4).construct(),
            Algorithm::ToConjugatedMin => Family::SStar(n).construct(),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// One edge move: `removed` is `(moved vertex, old neighbour)` and `added` is
/// `(anchor, moved vertex)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub iteration: usize,
    pub round: usize,
    pub removed: (usize, usize),
    pub added: (usize, usize),
    pub tau_after: u64,
    pub rad_after: u32,
    pub snapshot: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteTrace {
    pub algorithm: Algorithm,
    pub initial: Graph,
    pub initial_tau: u64,
    pub initial_rad: u32,
    pub steps: Vec<RewriteStep>,
    pub final_graph: Graph,
    /// The perfect matching carried through algorithm 3.
    pub matching: Option<Matching>,
}

impl RewriteTrace {
    fn new(algorithm: Algorithm, initial: &Graph, matching: Option<Matching>) -> Result<Self> {
        let profile = initial.ecc_profile()?;
        Ok(RewriteTrace {
            algorithm,
            initial: initial.clone(),
            initial_tau: profile.total(),
            initial_rad: profile.rad,
            steps: Vec::new(),
            final_graph: initial.clone(),
            matching,
        })
    }

    fn push(&mut self, round: usize, removed: (usize, usize), added: (usize, usize)) -> Result<()> {
        let snapshot = self.final_graph.move_edge(removed, added)?;
        if !snapshot.is_tree() {
            return Err(Error::RewriteInvariant(format!(
                "moving {removed:?} to {added:?} broke the tree"
            )));
        }
        let profile = snapshot.ecc_profile()?;
        self.steps.push(RewriteStep {
            iteration: self.steps.len() + 1,
            round,
            removed,
            added,
            tau_after: profile.total(),
            rad_after: profile.rad,
            snapshot: snapshot.clone(),
        });
        self.final_graph = snapshot;
        Ok(())
    }

    pub fn final_tau(&self) -> u64 {
        self.steps.last().map_or(self.initial_tau, |s| s.tau_after)
    }

    /// `tau` after each completed round, starting with the initial value.
    pub fn round_taus(&self) -> Vec<u64> {
        let mut out = vec![self.initial_tau];
        for (i, s) in self.steps.iter().enumerate() {
            let last_of_round = self
                .steps
                .get(i + 1)
                .is_none_or(|next| next.round != s.round);
            if last_of_round {
                out.push(s.tau_after);
            }
        }
        out
    }

    pub fn round_count(&self) -> usize {
        self.round_taus().len() - 1
    }

    /// Check the monotonicity guarantee: strictly increasing `tau` per step
    /// for algorithm 1, strictly decreasing `tau` per round otherwise.
    pub fn check_monotone(&self) -> Result<()> {
        let seq = match self.algorithm {
            Algorithm::ToPath => {
                let mut seq = vec![self.initial_tau];
                seq.extend(self.steps.iter().map(|s| s.tau_after));
                seq
            }
            _ => self.round_taus(),
        };
        let ok = seq.windows(2).all(|w| match self.algorithm {
            Algorithm::ToPath => w[0] < w[1],
            _ => w[0] > w[1],
        });
        if ok {
            Ok(())
        } else {
            Err(Error::RewriteInvariant(format!(
                "tau sequence {seq:?} is not strictly monotone"
            )))
        }
    }

    /// Plain-text trace: a header, one `step` record per move and a `final`
    /// record.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let final_rad = self.steps.last().map_or(self.initial_rad, |s| s.rad_after);
        writeln!(out, "algorithm {}", self.algorithm).unwrap();
        writeln!(out, "order {}", self.initial.order()).unwrap();
        writeln!(
            out,
            "initial tau {} rad {}",
            self.initial_tau, self.initial_rad
        )
        .unwrap();
        for s in &self.steps {
            writeln!(
                out,
                "step {} round {} remove {}-{} add {}-{} tau {} rad {}",
                s.iteration,
                s.round,
                s.removed.0,
                s.removed.1,
                s.added.0,
                s.added.1,
                s.tau_after,
                s.rad_after
            )
            .unwrap();
        }
        writeln!(
            out,
            "final tau {} rad {} steps {} rounds {}",
            self.final_tau(),
            final_rad,
            self.steps.len(),
            self.round_count()
        )
        .unwrap();
        out
    }
}

fn require_order(t: &Graph, min: usize) -> Result<()> {
    t.require_tree()?;
    if t.order() < min {
        return Err(Error::OrderOutOfRange {
            n: t.order(),
            constraint: format!("rewriting needs at least {min} vertices"),
        });
    }
    Ok(())
}

/// Pendant edges `(x, y)` with `x` a leaf other than the diametrical
/// endpoints `u` and `v`, sorted.
pub fn pendant_move_candidates(t: &Graph, u: usize, v: usize) -> Result<Vec<(usize, usize)>> {
    t.require_tree()?;
    let diam = t.ecc_profile()?.diam;
    if t.distance(u, v)? != Some(diam) {
        return Err(Error::NotDiametrical { u, v });
    }
    Ok(t.pendant_vertices()
        .into_iter()
        .filter(|&x| x != u && x != v)
        .map(|x| (x, t.neighbors(x).next().expect("pendant has a neighbour")))
        .collect())
}

fn require_central(t: &Graph, c: usize) -> Result<(u32, Vec<u32>)> {
    let profile = t.ecc_profile()?;
    if profile.ecc.get(c) != Some(&profile.rad) {
        return Err(Error::NotCentral {
            vertex: c,
            ecc: profile.ecc.get(c).copied().unwrap_or(0),
            rad: profile.rad,
        });
    }
    let dist = t.connected_distances(c)?;
    Ok((profile.rad, dist))
}

/// Edges `(x, y)` where `x` is at radius distance from the central vertex
/// `c` and `y` is its neighbour towards `c`, sorted.
pub fn radial_candidates(t: &Graph, c: usize) -> Result<Vec<(usize, usize)>> {
    t.require_tree()?;
    let (rad, dist) = require_central(t, c)?;
    if rad == 0 {
        return Ok(Vec::new());
    }
    Ok((0..t.order())
        .filter(|&x| dist[x] == rad)
        .map(|x| {
            let y = t
                .neighbors(x)
                .find(|&y| dist[y] + 1 == rad)
                .expect("a vertex at distance rad has a neighbour closer to c");
            (x, y)
        })
        .collect())
}

/// Edges `(u, v)` on paths `u-v-w` where `w` is a leaf at radius distance
/// from the central vertex `c` and `vw` is in the perfect matching `m`,
/// sorted.
pub fn matched_pair_candidates(t: &Graph, c: usize, m: &Matching) -> Result<Vec<(usize, usize)>> {
    t.require_tree()?;
    if !m.is_perfect_matching_of(t) {
        return Err(Error::MatchingNotPerfect);
    }
    let (rad, dist) = require_central(t, c)?;
    let mut out = Vec::new();
    for w in (0..t.order()).filter(|&w| dist[w] == rad && t.degree(w) == 1) {
        let v = m.partner(w).expect("perfect matching covers w");
        for u in t.neighbors(v).filter(|&u| u != w) {
            out.push((u, v));
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn algorithm1(t: &Graph) -> Result<RewriteTrace> {
    require_order(t, 4)?;
    let mut trace = RewriteTrace::new(Algorithm::ToPath, t, None)?;
    let diametrical = t.diametrical_path()?;
    let (mut u, v) = (diametrical.start(), diametrical.end());
    loop {
        let candidates = pendant_move_candidates(&trace.final_graph, u, v)?;
        let Some(&(x, y)) = candidates.first() else {
            break;
        };
        if trace.steps.len() >= t.order() {
            return Err(Error::RewriteInvariant(
                "algorithm 1 exceeded n moves".into(),
            ));
        }
        let round = trace.steps.len() + 1;
        trace.push(round, (x, y), (u, x))?;
        u = x;
    }
    if trace.final_graph.degrees().iter().any(|&d| d > 2) {
        return Err(Error::RewriteInvariant(
            "algorithm 1 stopped before reaching a path".into(),
        ));
    }
    Ok(trace)
}

pub fn algorithm2(t: &Graph) -> Result<RewriteTrace> {
    require_order(t, 4)?;
    let mut trace = RewriteTrace::new(Algorithm::ToStar, t, None)?;
    let c = t.ecc_profile()?.center[0];
    let mut round = 0;
    loop {
        let (rad, _) = require_central(&trace.final_graph, c)?;
        if rad <= 1 {
            break;
        }
        round += 1;
        if round > t.order() {
            return Err(Error::RewriteInvariant(
                "algorithm 2 exceeded n rounds".into(),
            ));
        }
        for (x, y) in radial_candidates(&trace.final_graph, c)? {
            trace.push(round, (x, y), (c, x))?;
        }
    }
    Ok(trace)
}

pub fn algorithm3(t: &Graph) -> Result<RewriteTrace> {
    require_order(t, 4)?;
    let m = require_perfect_matching(t)?;
    let mut trace = RewriteTrace::new(Algorithm::ToConjugatedMin, t, Some(m.clone()))?;
    let c = t.ecc_profile()?.center[0];
    let mut round = 0;
    loop {
        let (rad, _) = require_central(&trace.final_graph, c)?;
        if rad <= 2 {
            break;
        }
        round += 1;
        if round > t.order() {
            return Err(Error::RewriteInvariant(
                "algorithm 3 exceeded n rounds".into(),
            ));
        }
        for (u, v) in matched_pair_candidates(&trace.final_graph, c, &m)? {
            trace.push(round, (v, u), (c, v))?;
            if !m.is_perfect_matching_of(&trace.final_graph) {
                return Err(Error::RewriteInvariant(format!(
                    "moving {v} lost the perfect matching"
                )));
            }
        }
    }
    Ok(trace)
}

/// Shorthand for `tau` of the final tree of a trace, recomputed from scratch.
pub fn recomputed_final_tau(trace: &RewriteTrace) -> Result<u64> {
    tau(&trace.final_graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::canonical_key;

    fn g(f: Family) -> Graph {
        f.construct().unwrap()
    }

    /// Three legs of length two on a hub `0`: legs `0-1-2`, `0-3-4`, `0-5-6`.
    fn spider3x2() -> Graph {
        Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn pendant_candidates() {
        assert!(pendant_move_candidates(&g(Family::Path(6)), 0, 5)
            .unwrap()
            .is_empty());
        assert_eq!(
            pendant_move_candidates(&g(Family::Star(5)), 1, 2).unwrap(),
            vec![(3, 0), (4, 0)]
        );
        assert_eq!(
            pendant_move_candidates(&spider3x2(), 2, 4).unwrap(),
            vec![(6, 5)]
        );
        assert_eq!(
            pendant_move_candidates(&g(Family::Path(6)), 0, 4),
            Err(Error::NotDiametrical { u: 0, v: 4 })
        );
        assert!(matches!(
            pendant_move_candidates(&g(Family::Cycle(5)), 0, 2),
            Err(Error::NotATree { .. })
        ));
    }

    #[test]
    fn radial() {
        assert_eq!(
            radial_candidates(&g(Family::Path(5)), 2).unwrap(),
            vec![(0, 1), (4, 3)]
        );
        assert_eq!(
            radial_candidates(&g(Family::Star(5)), 0).unwrap(),
            vec![(1, 0), (2, 0), (3, 0), (4, 0)]
        );
        assert_eq!(
            radial_candidates(&spider3x2(), 0).unwrap(),
            vec![(2, 1), (4, 3), (6, 5)]
        );
        assert!(matches!(
            radial_candidates(&g(Family::Path(5)), 1),
            Err(Error::NotCentral { vertex: 1, .. })
        ));
    }

    #[test]
    fn matched_pairs() {
        let p6 = g(Family::Path(6));
        let m = require_perfect_matching(&p6).unwrap();
        assert_eq!(matched_pair_candidates(&p6, 2, &m).unwrap(), vec![(3, 4)]);

        let s = g(Family::SStar(6));
        let ms = require_perfect_matching(&s).unwrap();
        assert_eq!(s.ecc_profile().unwrap().rad, 2);
        assert_eq!(
            matched_pair_candidates(&s, 0, &ms).unwrap(),
            vec![(0, 1), (0, 3)]
        );

        // Spine 0-1-2-3 with matched pendants 4,5,6,7 on 0,1,2,3: the
        // deepest matched leaves from center 1 are 7 (via 3) only.
        let comb =
            Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let mc = require_perfect_matching(&comb).unwrap();
        let c = comb.ecc_profile().unwrap().center[0];
        assert_eq!(c, 1);
        assert_eq!(
            matched_pair_candidates(&comb, c, &mc).unwrap(),
            vec![(2, 3)]
        );

        let bad = Matching {
            edges: [(0, 1)].into_iter().collect(),
            perfect: false,
        };
        assert_eq!(
            matched_pair_candidates(&p6, 2, &bad),
            Err(Error::MatchingNotPerfect)
        );
    }

    #[test]
    fn algorithm1_fixed_point_and_star() {
        let p7 = g(Family::Path(7));
        let tr = algorithm1(&p7).unwrap();
        assert!(tr.steps.is_empty());
        assert_eq!(tr.final_graph, p7);

        let tr = algorithm1(&g(Family::Star(5))).unwrap();
        let taus: Vec<u64> = tr.steps.iter().map(|s| s.tau_after).collect();
        assert_eq!(tr.initial_tau, 9);
        assert_eq!(taus, vec![13, 16]);
        assert_eq!(
            canonical_key(&tr.final_graph).unwrap(),
            canonical_key(&g(Family::Path(5))).unwrap()
        );
        tr.check_monotone().unwrap();
    }

    #[test]
    fn algorithm2_examples() {
        let tr = algorithm2(&g(Family::Star(6))).unwrap();
        assert!(tr.steps.is_empty());

        let tr = algorithm2(&g(Family::Path(4))).unwrap();
        assert_eq!(tr.round_taus(), vec![10, 7]);
        assert_eq!(tr.final_graph.degree(1), 3);
        tr.check_monotone().unwrap();
    }

    #[test]
    fn algorithm3_examples() {
        let s8 = g(Family::SStar(8));
        assert!(algorithm3(&s8).unwrap().steps.is_empty());

        let tr = algorithm3(&g(Family::Path(6))).unwrap();
        assert_eq!(tr.final_tau(), 19);
        assert_eq!(
            canonical_key(&tr.final_graph).unwrap(),
            canonical_key(&s8.remove_vertex(6).unwrap().remove_vertex(5).unwrap()).unwrap()
        );

        let tr = algorithm3(&g(Family::Path(8))).unwrap();
        assert_eq!(tr.final_tau(), 26);
        assert_eq!(
            canonical_key(&tr.final_graph).unwrap(),
            canonical_key(&s8).unwrap()
        );
        tr.check_monotone().unwrap();

        assert_eq!(
            algorithm3(&g(Family::Star(6))),
            Err(Error::NoPerfectMatching)
        );
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            algorithm1(&g(Family::Path(3))),
            Err(Error::OrderOutOfRange { .. })
        ));
        assert!(matches!(
            algorithm2(&g(Family::Cycle(5))),
            Err(Error::NotATree { .. })
        ));
        assert_eq!(
            algorithm3(&g(Family::Path(7))),
            Err(Error::NoPerfectMatching)
        );
    }

    #[test]
    fn text_format() {
        let tr = algorithm2(&g(Family::Path(4))).unwrap();
        assert_eq!(
            tr.to_text(),
            "algorithm 2\norder 4\ninitial tau 10 rad 2\n\
             step 1 round 1 remove 3-2 add 1-3 tau 7 rad 1\n\
             final tau 7 rad 1 steps 1 rounds 1\n"
        );
    }
}
