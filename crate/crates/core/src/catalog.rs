//! Named graphs and the forbidden families for square-path packing.

use std::fmt;
use std::str::FromStr;

use crate::embed::find_embedding;
use crate::error::{out_of_range, Error, Result};
use crate::graph::Graph;

/// A named graph or parametric family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// Two independent edges.
    M2,
    /// `C4` plus a hub joined to all four cycle vertices.
    W5,
    /// Case-analysis graphs `G1`..`G8`.
    G(u8),
    K33,
    /// `K_k` minus one edge.
    CompleteMinus(usize),
    /// `K_k` with one pendant vertex.
    CompletePlus(usize),
    Star(usize),
    Complete(usize),
    Cycle(usize),
    Path(usize),
    PathSquare(usize),
    Union(Box<NamedGraph>, Box<NamedGraph>),
}

impl NamedGraph {
    pub fn union(a: NamedGraph, b: NamedGraph) -> NamedGraph {
        NamedGraph::Union(Box::new(a), Box::new(b))
    }

    pub fn graph(&self) -> Result<Graph> {
        use NamedGraph::*;
        match self {
            M2 => Graph::build(4, [(0, 1), (2, 3)]),
            W5 => Graph::build(
                5,
                [
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (4, 0),
                    (4, 1),
                    (4, 2),
                    (4, 3),
                ],
            ),
            G(i) => case_graph(*i),
            K33 => Graph::complete_bipartite(3, 3),
            CompleteMinus(k) => {
                if *k < 2 {
                    return out_of_range("k", *k, "2..=32");
                }
                Graph::complete(*k)?.remove_edge(0, 1)
            }
            CompletePlus(k) => Graph::complete(*k)?.add_vertex(1),
            Star(k) => Graph::star(*k),
            Complete(k) => Graph::complete(*k),
            Cycle(k) => Graph::cycle(*k),
            Path(k) => Graph::path(*k),
            PathSquare(k) => Graph::path_square(*k),
            Union(a, b) => a.graph()?.disjoint_union(&b.graph()?),
        }
    }

    /// Lower-case tag accepted by [`FromStr`], e.g. `s5+k2`, `k4minus`.
    pub fn tag(&self) -> String {
        use NamedGraph::*;
        match self {
            M2 => "m2".into(),
            W5 => "w5".into(),
            G(i) => format!("g{i}"),
            K33 => "k33".into(),
            CompleteMinus(k) => format!("k{k}minus"),
            CompletePlus(k) => format!("k{k}plus"),
            Star(k) => format!("s{k}"),
            Complete(k) => format!("k{k}"),
            Cycle(k) => format!("c{k}"),
            Path(k) => format!("p{k}"),
            PathSquare(k) => format!("psq{k}"),
            Union(a, b) => format!("{}+{}", a.tag(), b.tag()),
        }
    }
}

/// `K3+` and `K4+` extended by one more pendant-style vertex, `K4` plus a
/// vertex of degree two, and the triangular prism.
fn case_graph(i: u8) -> Result<Graph> {
    let k3_plus = Graph::complete(3)?.add_vertex(1)?;
    let k4_plus = Graph::complete(4)?.add_vertex(1)?;
    match i {
        // K3+ has degrees (3, 2, 2, 1) on vertices (0, 1, 2, 3)
        1 => k3_plus.add_vertex(1 << 3),
        2 => k3_plus.add_vertex(1 << 1),
        3 => k3_plus.add_vertex(1 << 0),
        // K4+ has degrees (4, 3, 3, 3, 1) on vertices (0, 1, 2, 3, 4)
        4 => k4_plus.add_vertex(1 << 4),
        5 => k4_plus.add_vertex(1 << 1),
        6 => k4_plus.add_vertex(1 << 0),
        7 => Graph::complete(4)?.add_vertex(0b11),
        8 => Graph::build(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        ),
        _ => Err(Error::UnknownTag(format!("g{i}"))),
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            M2 => f.write_str("M2"),
            W5 => f.write_str("W5"),
            G(i) => write!(f, "G{i}"),
            K33 => f.write_str("K3,3"),
            CompleteMinus(k) => write!(f, "K{k}^-"),
            CompletePlus(k) => write!(f, "K{k}^+"),
            Star(k) => write!(f, "S{k}"),
            Complete(k) => write!(f, "K{k}"),
            Cycle(k) => write!(f, "C{k}"),
            Path(k) => write!(f, "P{k}"),
            PathSquare(k) => write!(f, "P{k}^2"),
            Union(a, b) => write!(f, "{a} ∪ {b}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if let Some((a, b)) = t.split_once('+') {
            return Ok(NamedGraph::union(a.parse()?, b.parse()?));
        }
        let unknown = || Error::UnknownTag(s.to_string());
        let num = |rest: &str| rest.parse::<usize>().map_err(|_| unknown());
        let named = match t.as_str() {
            "m2" => NamedGraph::M2,
            "w5" => NamedGraph::W5,
            "k33" => NamedGraph::K33,
            _ if t.starts_with("psq") => NamedGraph::PathSquare(num(&t[3..])?),
            _ if t.starts_with('p') && t.ends_with("^2") => {
                NamedGraph::PathSquare(num(&t[1..t.len() - 2])?)
            }
            _ if t.starts_with('k') && t.ends_with("minus") => {
                NamedGraph::CompleteMinus(num(&t[1..t.len() - 5])?)
            }
            _ if t.starts_with('k') && t.ends_with("plus") => {
                NamedGraph::CompletePlus(num(&t[1..t.len() - 4])?)
            }
            _ if t.starts_with('g') => {
                let i = num(&t[1..])?;
                if !(1..=8).contains(&i) {
                    return Err(unknown());
                }
                NamedGraph::G(i as u8)
            }
            _ if t.starts_with('s') => NamedGraph::Star(num(&t[1..])?),
            _ if t.starts_with('k') => NamedGraph::Complete(num(&t[1..])?),
            _ if t.starts_with('c') => NamedGraph::Cycle(num(&t[1..])?),
            _ if t.starts_with('p') => NamedGraph::Path(num(&t[1..])?),
            _ => return Err(unknown()),
        };
        Ok(named)
    }
}

/// Every fixed named graph, for dumps and fingerprint checks.
pub fn named_graphs() -> Vec<NamedGraph> {
    use NamedGraph::*;
    let mut v = vec![M2, W5];
    v.extend((1..=8).map(G));
    v.extend([
        K33,
        CompleteMinus(4),
        CompleteMinus(5),
        CompleteMinus(6),
        CompletePlus(3),
        CompletePlus(4),
        CompletePlus(5),
    ]);
    v
}

pub fn named(id: &NamedGraph) -> Result<Graph> {
    id.graph()
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub id: NamedGraph,
    pub graph: Graph,
}

/// A forbidden family at order `n`, unstarred or starred.
#[derive(Debug, Clone)]
pub struct ForbiddenFamily {
    pub n: usize,
    pub members: Vec<FamilyMember>,
    pub starred: bool,
    pub t: usize,
}

pub fn t_of(n: usize) -> usize {
    n / 4
}

/// The edge count shared by every member of the unstarred family.
pub fn base_edge_count(n: usize) -> Result<usize> {
    Ok(match n {
        6 => 3,
        7 => 5,
        8 | 9 => 6,
        10..=13 => n - 2,
        _ if n >= 14 => n - 2,
        _ => return out_of_range("n", n, "6..=32"),
    })
}

fn star_pair(n: usize) -> [NamedGraph; 2] {
    [
        NamedGraph::union(NamedGraph::Star(n - 2), NamedGraph::Complete(2)),
        NamedGraph::Star(n - 1),
    ]
}

fn family(n: usize, ids: Vec<NamedGraph>, starred: bool) -> Result<ForbiddenFamily> {
    let members = ids
        .into_iter()
        .map(|id| id.graph().map(|graph| FamilyMember { id, graph }))
        .collect::<Result<_>>()?;
    Ok(ForbiddenFamily {
        n,
        members,
        starred,
        t: t_of(n),
    })
}

fn check_order(n: usize) -> Result<()> {
    if !(6..=32).contains(&n) {
        return out_of_range("n", n, "6..=32");
    }
    Ok(())
}

/// The unstarred family.
pub fn forbidden_base(n: usize) -> Result<ForbiddenFamily> {
    use NamedGraph::*;
    check_order(n)?;
    let mut ids = match n {
        6 => vec![Complete(3)],
        7 => vec![CompleteMinus(4)],
        8 => vec![Complete(4)],
        9 => vec![Complete(4)],
        12 => vec![Complete(5)],
        _ => vec![],
    };
    if !matches!(n, 6 | 9) {
        ids.extend(star_pair(n));
    }
    family(n, ids, false)
}

/// The starred family: the star pair is added back at `n = 6` and `n = 9`.
pub fn forbidden_starred(n: usize) -> Result<ForbiddenFamily> {
    let mut fam = forbidden_base(n)?;
    fam.starred = true;
    if matches!(n, 6 | 9) {
        for id in star_pair(n) {
            let graph = id.graph()?;
            fam.members.push(FamilyMember { id, graph });
        }
    }
    Ok(fam)
}

/// Whether no member of `fam` is a subgraph of `g`.
pub fn is_family_free(g: &Graph, fam: &ForbiddenFamily) -> bool {
    first_contained_member(g, fam).is_none()
}

/// The first member of `fam` contained in `g`, if any.
pub fn first_contained_member<'a>(g: &Graph, fam: &'a ForbiddenFamily) -> Option<&'a FamilyMember> {
    fam.members
        .iter()
        .find(|m| m.graph.n() <= g.n() && find_embedding(&m.graph, g).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fingerprint(id: NamedGraph) -> (usize, usize, Vec<usize>) {
        let g = id.graph().unwrap();
        (g.n(), g.edge_count(), g.degree_sequence())
    }

    #[test]
    fn named_fingerprints() {
        use NamedGraph::*;
        let expected: Vec<(NamedGraph, usize, usize, Vec<usize>)> = vec![
            (M2, 4, 2, vec![1, 1, 1, 1]),
            (W5, 5, 8, vec![4, 3, 3, 3, 3]),
            (G(1), 5, 5, vec![3, 2, 2, 2, 1]),
            (G(2), 5, 5, vec![3, 3, 2, 1, 1]),
            (G(3), 5, 5, vec![4, 2, 2, 1, 1]),
            (G(4), 6, 8, vec![4, 3, 3, 3, 2, 1]),
            (G(5), 6, 8, vec![4, 4, 3, 3, 1, 1]),
            (G(6), 6, 8, vec![5, 3, 3, 3, 1, 1]),
            (G(7), 5, 8, vec![4, 4, 3, 3, 2]),
            (G(8), 6, 9, vec![3; 6]),
            (K33, 6, 9, vec![3; 6]),
            (CompleteMinus(4), 4, 5, vec![3, 3, 2, 2]),
            (CompleteMinus(5), 5, 9, vec![4, 4, 4, 3, 3]),
            (CompleteMinus(6), 6, 14, vec![5, 5, 5, 5, 4, 4]),
            (CompletePlus(3), 4, 4, vec![3, 2, 2, 1]),
            (CompletePlus(4), 5, 7, vec![4, 3, 3, 3, 1]),
        ];
        for (id, n, e, deg) in expected {
            assert_eq!(fingerprint(id.clone()), (n, e, deg), "{id}");
        }
        assert!(!crate::canon::is_isomorphic(
            &G(8).graph().unwrap(),
            &K33.graph().unwrap()
        ));
    }

    #[test]
    fn prism_and_bipartite() {
        let k33 = NamedGraph::K33.graph().unwrap();
        // bipartite: no triangle
        assert!(find_embedding(&Graph::complete(3).unwrap(), &k33).is_none());
        let prism = NamedGraph::G(8).graph().unwrap();
        assert!(find_embedding(&Graph::complete(3).unwrap(), &prism).is_some());
    }

    #[test]
    fn tags_round_trip() {
        for id in named_graphs() {
            let parsed: NamedGraph = id.tag().parse().unwrap();
            assert_eq!(parsed, id);
        }
        let u: NamedGraph = "S5+K2".parse().unwrap();
        assert_eq!(u.graph().unwrap().n(), 7);
        assert_eq!(
            "p6^2".parse::<NamedGraph>().unwrap(),
            NamedGraph::PathSquare(6)
        );
        assert!("g9".parse::<NamedGraph>().is_err());
        assert!("zz".parse::<NamedGraph>().is_err());
        assert_eq!(NamedGraph::CompleteMinus(4).to_string(), "K4^-");
    }

    #[test]
    fn table_rows() {
        let sizes = [
            (6, 1),
            (7, 3),
            (8, 3),
            (9, 1),
            (10, 2),
            (11, 2),
            (12, 3),
            (13, 2),
        ];
        for (n, size) in sizes {
            let fam = forbidden_base(n).unwrap();
            assert_eq!(fam.members.len(), size, "n={n}");
            for m in &fam.members {
                assert_eq!(
                    m.graph.edge_count(),
                    base_edge_count(n).unwrap(),
                    "n={n} {}",
                    m.id
                );
                assert!(m.graph.n() <= n);
            }
        }
        let f12 = forbidden_base(12).unwrap();
        assert!(f12.members.iter().any(|m| m.id == NamedGraph::Complete(5)));
        let f20 = forbidden_base(20).unwrap();
        assert_eq!(f20.members.len(), 2);
        assert!(f20.members.iter().all(|m| m.graph.edge_count() == 18));
        assert!(forbidden_base(5).is_err());
        assert!(forbidden_starred(5).is_err());
    }

    #[test]
    fn starred_closure() {
        let s6: Vec<String> = forbidden_starred(6)
            .unwrap()
            .members
            .iter()
            .map(|m| m.id.tag())
            .collect();
        assert_eq!(s6, vec!["k3", "s4+k2", "s5"]);
        let s9: Vec<String> = forbidden_starred(9)
            .unwrap()
            .members
            .iter()
            .map(|m| m.id.tag())
            .collect();
        assert_eq!(s9, vec!["k4", "s7+k2", "s8"]);
        for n in [7, 8, 10, 11, 12, 13, 14, 20] {
            let a = forbidden_base(n).unwrap();
            let b = forbidden_starred(n).unwrap();
            assert_eq!(a.members.len(), b.members.len());
        }
        for n in 6..=32 {
            for id in star_pair(n) {
                assert_eq!(id.graph().unwrap().edge_count(), n - 2);
            }
        }
    }

    #[test]
    fn t_values() {
        assert_eq!(t_of(7), 1);
        assert_eq!(t_of(12), 3);
        assert_eq!(t_of(8), 2);
    }

    #[test]
    fn family_freeness() {
        let c5 = Graph::cycle(5).unwrap().pad_to(7).unwrap();
        assert!(is_family_free(&c5, &forbidden_starred(7).unwrap()));
        let k3p3 = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::path(3).unwrap())
            .unwrap()
            .pad_to(7)
            .unwrap();
        assert!(is_family_free(&k3p3, &forbidden_starred(7).unwrap()));
        let k4 = Graph::complete(4).unwrap().pad_to(8).unwrap();
        assert!(!is_family_free(&k4, &forbidden_starred(8).unwrap()));
    }
}
