//! Constructors for the named graph families.
//!
//! Every family has a fixed vertex layout so that traces, golden files and
//! canonical keys stay stable:
//!
//! | family             | layout                                                            |
//! |--------------------|-------------------------------------------------------------------|
//! | `path`             | `0-1-…-(n-1)`                                                     |
//! | `cycle`            | path plus `(n-1)-0`                                               |
//! | `star`             | center `0`, leaves `1..n`                                         |
//! | `complete`         | all pairs                                                         |
//! | `complete_bipartite` | parts `0..m` and `m..m+n`                                       |
//! | `U1`               | star plus leaf edge `1-2`                                         |
//! | `U2`               | triangle `0,1,2` with the path `2-3-…-(n-1)` hanging off `2`      |
//! | `B1`               | star plus leaf edges `1-2` and `3-4`                              |
//! | `B1prime`          | star plus leaf edges `1-2` and `2-3`                              |
//! | `B2`               | triangles `0,1,2` and `n-3,n-2,n-1` joined by the path `2-…-(n-3)`|
//! | `B2prime`          | path `0-…-(n-2)` plus apex `n-1` adjacent to `0,1,2`              |
//! | `subdivided_star`  | center `0`, arms `0-(2i-1)-(2i)`                                  |
//! | `S_star`           | subdivided star arms plus one pendant `n-1` on the center          |
//! | `double_star`      | centers `0` and `k`, leaves `1..k` on `0` and `k+1..n` on `k`     |
//!
//! For `subdivided_star` and `S_star` the parameter is the order of the graph,
//! not the order of the underlying star.

use std::fmt;

use crate::enumerate::canonical_key;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphClass};
use crate::matching::tree_perfect_matching;
use crate::metrics::tau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite { m: usize, n: usize },
    U1(usize),
    U2(usize),
    B1(usize),
    B1Prime(usize),
    B2(usize),
    B2Prime(usize),
    SubdividedStar(usize),
    SStar(usize),
    DoubleStar { n: usize, k: usize },
}

/// Every family name accepted by [`Family::parse`].
pub const FAMILY_NAMES: [&str; 14] = [
    "path",
    "cycle",
    "star",
    "complete",
    "complete_bipartite",
    "U1",
    "U2",
    "B1",
    "B1prime",
    "B2",
    "B2prime",
    "subdivided_star",
    "S_star",
    "double_star",
];

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Star(_) => "star",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::U1(_) => "U1",
            Family::U2(_) => "U2",
            Family::B1(_) => "B1",
            Family::B1Prime(_) => "B1prime",
            Family::B2(_) => "B2",
            Family::B2Prime(_) => "B2prime",
            Family::SubdividedStar(_) => "subdivided_star",
            Family::SStar(_) => "S_star",
            Family::DoubleStar { .. } => "double_star",
        }
    }

    /// Build a family from its name, `n`, and the optional second parameter
    /// (`k` for `double_star`, the first part size `m` for
    /// `complete_bipartite`).
    pub fn parse(name: &str, n: usize, k: Option<usize>) -> Result<Self> {
        let second = |family: &'static str| {
            k.ok_or(Error::InvalidFamily {
                family,
                constraint: "requires a second parameter (--k)".into(),
            })
        };
        let family = match name {
            "path" => Family::Path(n),
            "cycle" => Family::Cycle(n),
            "star" => Family::Star(n),
            "complete" => Family::Complete(n),
            "complete_bipartite" => Family::CompleteBipartite {
                m: second("complete_bipartite")?,
                n,
            },
            "U1" => Family::U1(n),
            "U2" => Family::U2(n),
            "B1" => Family::B1(n),
            "B1prime" => Family::B1Prime(n),
            "B2" => Family::B2(n),
            "B2prime" => Family::B2Prime(n),
            "subdivided_star" => Family::SubdividedStar(n),
            "S_star" => Family::SStar(n),
            "double_star" => Family::DoubleStar {
                n,
                k: second("double_star")?,
            },
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        family.validate()?;
        Ok(family)
    }

    /// Number of vertices of the constructed graph.
    pub fn order(&self) -> usize {
        match *self {
            Family::CompleteBipartite { m, n } => m + n,
            Family::DoubleStar { n, .. } => n,
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Star(n)
            | Family::Complete(n)
            | Family::U1(n)
            | Family::U2(n)
            | Family::B1(n)
            | Family::B1Prime(n)
            | Family::B2(n)
            | Family::B2Prime(n)
            | Family::SubdividedStar(n)
            | Family::SStar(n) => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |constraint: &str| {
            Err(Error::InvalidFamily {
                family: self.name(),
                constraint: constraint.to_string(),
            })
        };
        let ok = match *self {
            Family::Path(n) | Family::Star(n) | Family::Complete(n) => n >= 1,
            Family::Cycle(n) => n >= 3,
            Family::CompleteBipartite { m, n } => m >= 2 && n >= 2,
            Family::U1(n) | Family::U2(n) => n >= 4,
            Family::B1(n) | Family::B1Prime(n) | Family::B2Prime(n) => n >= 5,
            Family::B2(n) => n >= 6,
            Family::SubdividedStar(n) => n >= 5 && n % 2 == 1,
            Family::SStar(n) => n >= 6 && n % 2 == 0,
            Family::DoubleStar { n, k } => n >= 4 && k >= 2 && k + 2 <= n,
        };
        if !ok {
            return fail(self.constraint());
        }
        if self.order() > crate::graph::MAX_ORDER {
            return Err(Error::TooLarge {
                n: self.order(),
                max: crate::graph::MAX_ORDER,
            });
        }
        Ok(())
    }

    /// Human-readable validity range.
    pub fn constraint(&self) -> &'static str {
        match self {
            Family::Path(_) | Family::Star(_) | Family::Complete(_) => "n >= 1",
            Family::Cycle(_) => "n >= 3",
            Family::CompleteBipartite { .. } => "m >= 2 and n >= 2",
            Family::U1(_) | Family::U2(_) => "n >= 4",
            Family::B1(_) | Family::B1Prime(_) | Family::B2Prime(_) => "n >= 5",
            Family::B2(_) => "n >= 6",
            Family::SubdividedStar(_) => "odd order n >= 5",
            Family::SStar(_) => "even order n >= 6",
            Family::DoubleStar { .. } => "n >= 4 and 2 <= k <= n - 2",
        }
    }

    /// Class the constructed graph must fall in, if it is one of the three
    /// tracked classes.
    pub fn expected_class(&self) -> Option<GraphClass> {
        match *self {
            Family::Path(_) | Family::Star(_) | Family::SubdividedStar(_) | Family::SStar(_) => {
                Some(GraphClass::Tree)
            }
            Family::DoubleStar { .. } => Some(GraphClass::Tree),
            Family::Cycle(_) | Family::U1(_) | Family::U2(_) => Some(GraphClass::Unicyclic),
            Family::B1(_) | Family::B1Prime(_) | Family::B2(_) | Family::B2Prime(_) => {
                Some(GraphClass::Bicyclic)
            }
            Family::Complete(n) => match n {
                1 | 2 => Some(GraphClass::Tree),
                3 => Some(GraphClass::Unicyclic),
                _ => None,
            },
            Family::CompleteBipartite { m, n } => {
                (m == 2 && n == 2).then_some(GraphClass::Unicyclic)
            }
        }
    }

    pub fn construct(&self) -> Result<Graph> {
        self.validate()?;
        let edges = self.edge_list();
        Graph::from_edges(self.order(), edges)
    }

    fn edge_list(&self) -> Vec<(usize, usize)> {
        let path = |n: usize| (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>();
        let star = |n: usize| (1..n).map(|i| (0, i)).collect::<Vec<_>>();
        let arms = |count: usize| {
            (1..=count)
                .flat_map(|i| [(0, 2 * i - 1), (2 * i - 1, 2 * i)])
                .collect::<Vec<_>>()
        };
        match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => {
                let mut e = path(n);
                e.push((n - 1, 0));
                e
            }
            Family::Star(n) => star(n),
            Family::Complete(n) => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            Family::CompleteBipartite { m, n } => (0..m)
                .flat_map(|u| (m..m + n).map(move |v| (u, v)))
                .collect(),
            Family::U1(n) => {
                let mut e = star(n);
                e.push((1, 2));
                e
            }
            Family::U2(n) => {
                let mut e = vec![(0, 1), (0, 2), (1, 2)];
                e.extend((3..n).map(|i| (i - 1, i)));
                e
            }
            Family::B1(n) => {
                let mut e = star(n);
                e.extend([(1, 2), (3, 4)]);
                e
            }
            Family::B1Prime(n) => {
                let mut e = star(n);
                e.extend([(1, 2), (2, 3)]);
                e
            }
            Family::B2(n) => {
                let (a, b, c) = (n - 3, n - 2, n - 1);
                let mut e = vec![(0, 1), (0, 2), (1, 2)];
                e.extend((3..=a).map(|i| (i - 1, i)));
                e.extend([(a, b), (a, c), (b, c)]);
                e
            }
            Family::B2Prime(n) => {
                let mut e = path(n - 1);
                e.extend([(0, n - 1), (1, n - 1), (2, n - 1)]);
                e
            }
            Family::SubdividedStar(n) => arms((n - 1) / 2),
            Family::SStar(n) => {
                let mut e = arms(n / 2 - 1);
                e.push((0, n - 1));
                e
            }
            Family::DoubleStar { n, k } => {
                let mut e: Vec<_> = (1..k).map(|i| (0, i)).collect();
                e.extend((k + 1..n).map(|i| (k, i)));
                e.push((0, k));
                e
            }
        }
    }

    /// Every valid parameter choice of every family with order at most
    /// `max_order`.
    pub fn all_up_to(max_order: usize) -> Vec<Family> {
        let mut out = Vec::new();
        for n in 1..=max_order {
            out.extend([
                Family::Path(n),
                Family::Cycle(n),
                Family::Star(n),
                Family::Complete(n),
                Family::U1(n),
                Family::U2(n),
                Family::B1(n),
                Family::B1Prime(n),
                Family::B2(n),
                Family::B2Prime(n),
                Family::SubdividedStar(n),
                Family::SStar(n),
            ]);
            out.extend((0..=n).map(|k| Family::DoubleStar { n, k }));
            out.extend((0..=n).map(|m| Family::CompleteBipartite { m, n: n - m }));
        }
        out.retain(|f| f.validate().is_ok());
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::CompleteBipartite { m, n } => write!(f, "complete_bipartite(m={m}, n={n})"),
            Family::DoubleStar { n, k } => write!(f, "double_star(n={n}, k={k})"),
            _ => write!(f, "{}(n={})", self.name(), self.order()),
        }
    }
}

/// Outcome of one structural identity check on a family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Identity {
    fn new(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Identity {
            name: name.into(),
            holds,
            detail: detail.into(),
        }
    }
}

/// Structural identities of `family` using the built-in constructors.
pub fn family_identities(family: Family) -> Result<Vec<Identity>> {
    family_identities_with(family, &|f: Family| f.construct())
}

/// Structural identities with a caller-supplied constructor. The reference
/// graphs on the right-hand sides (paths, smaller `U2`) come from the same
/// constructor, so a corrupted constructor shows up as a failed identity.
pub fn family_identities_with(
    family: Family,
    construct: &dyn Fn(Family) -> Result<Graph>,
) -> Result<Vec<Identity>> {
    family.validate()?;
    let g = construct(family)?;
    let n = family.order();
    let mut out = Vec::new();

    let class = g.classify();
    if let Some(expected) = family.expected_class() {
        out.push(Identity::new(
            format!("{family} is {expected}"),
            class == expected,
            format!("classified as {class}"),
        ));
    }

    match family {
        Family::U2(_) => {
            // Dropping the cycle edge opposite the attachment vertex leaves a
            // path on n-1 vertices with one extra pendant at its second vertex.
            let t1 = g.remove_edge(0, 1)?;
            let reference = construct(Family::Path(n - 1))?;
            let second = 1;
            let mut t1_ref = Graph::empty(n)?;
            for (u, v) in reference.edges() {
                t1_ref = t1_ref.add_edge(u, v)?;
            }
            t1_ref = t1_ref.add_edge(second, n - 1)?;
            out.push(Identity::new(
                format!(
                    "{family} minus a cycle edge is P{} plus a pendant at its second vertex",
                    n - 1
                ),
                t1.is_tree() && canonical_key(&t1)? == canonical_key(&t1_ref)?,
                format!("edges {:?}", t1.edges()),
            ));
            let (t_u2, t_t1) = (tau(&g)?, tau(&t1)?);
            out.push(Identity::new(
                format!("tau({family}) = tau(T1)"),
                t_u2 == t_t1,
                format!("{t_u2} vs {t_t1}"),
            ));
        }
        Family::B2(_) => {
            let reduced = g.remove_vertex(n - 1)?;
            let u2 = construct(Family::U2(n - 1))?;
            out.push(Identity::new(
                format!("{family} minus a far triangle vertex is U2(n={})", n - 1),
                canonical_key(&reduced)? == canonical_key(&u2)?,
                format!("edges {:?}", reduced.edges()),
            ));
            let (lhs, rhs) = (tau(&g)?, tau(&u2)? + n as u64 - 3);
            out.push(Identity::new(
                format!("tau({family}) = tau(U2(n={})) + n - 3", n - 1),
                lhs == rhs,
                format!("{lhs} vs {rhs}"),
            ));
        }
        Family::B2Prime(_) => {
            let reduced = g.remove_vertex(n - 1)?;
            let path = construct(Family::Path(n - 1))?;
            out.push(Identity::new(
                format!("{family} minus its apex is P{}", n - 1),
                canonical_key(&reduced)? == canonical_key(&path)?,
                format!("edges {:?}", reduced.edges()),
            ));
            let (lhs, rhs) = (tau(&g)?, tau(&path)? + n as u64 - 3);
            out.push(Identity::new(
                format!("tau({family}) = tau(P{}) + n - 3", n - 1),
                lhs == rhs,
                format!("{lhs} vs {rhs}"),
            ));
        }
        Family::SStar(_) => {
            let pendants = g.pendant_vertices().len();
            out.push(Identity::new(
                format!("{family} has n/2 pendant vertices"),
                pendants == n / 2,
                format!("{pendants} pendant vertices"),
            ));
            let conjugated = g.is_tree() && tree_perfect_matching(&g)?.is_some();
            out.push(Identity::new(
                format!("{family} has a perfect matching"),
                conjugated,
                String::new(),
            ));
        }
        Family::DoubleStar { .. } => {
            let diam = g.ecc_profile()?.diam;
            out.push(Identity::new(
                format!("{family} has diameter 3"),
                diam == 3,
                format!("diameter {diam}"),
            ));
        }
        _ => {}
    }
    Ok(out)
}
