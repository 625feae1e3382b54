//! Backtracking solvers that return checkable certificates.
//!
//! An [`Embedding`] of `H` into the complement of `P_n²` is exactly a packing
//! of `H` with `P_n²`; an [`Ordering`] is a spanning path, cycle or square
//! path. Every solver result can be re-checked with [`verify_certificate`]
//! in time linear in the number of edges.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{bits, full_mask, Graph};

/// Injective vertex map from a guest graph into a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    map: Vec<u8>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding {
            map: map.into_iter().map(|v| v as u8).collect(),
        }
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v] as usize
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize).collect()
    }

    /// Checks injectivity and that every guest edge lands on a host edge.
    pub fn verify(&self, guest: &Graph, host: &Graph) -> bool {
        if self.map.len() != guest.n() {
            return false;
        }
        let mut used = 0u32;
        for &h in &self.map {
            if h as usize >= host.n() || used >> h & 1 == 1 {
                return false;
            }
            used |= 1 << h;
        }
        guest
            .edges()
            .all(|e| host.has_edge(self.image(e.u()), self.image(e.v())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderingKind {
    HamPath,
    HamCycle,
    PathSquare,
}

/// A vertex permutation witnessing a spanning structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    pub kind: OrderingKind,
    seq: Vec<u8>,
}

impl Ordering {
    pub fn new(kind: OrderingKind, seq: Vec<usize>) -> Self {
        Ordering {
            kind,
            seq: seq.into_iter().map(|v| v as u8).collect(),
        }
    }

    pub fn seq(&self) -> Vec<usize> {
        self.seq.iter().map(|&v| v as usize).collect()
    }

    pub fn verify(&self, host: &Graph) -> bool {
        let n = host.n();
        if self.seq.len() != n {
            return false;
        }
        let mut used = 0u32;
        for &v in &self.seq {
            if v as usize >= n || used >> v & 1 == 1 {
                return false;
            }
            used |= 1 << v;
        }
        let s = self.seq();
        let steps_ok = s.windows(2).all(|w| host.has_edge(w[0], w[1]));
        match self.kind {
            OrderingKind::HamPath => steps_ok,
            OrderingKind::HamCycle => n >= 3 && steps_ok && host.has_edge(s[n - 1], s[0]),
            OrderingKind::PathSquare => steps_ok && s.windows(3).all(|w| host.has_edge(w[0], w[2])),
        }
    }
}

/// Serializable certificate, `{"kind": …, "map" | "seq": […]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Embedding { map: Vec<usize> },
    HamPath { seq: Vec<usize> },
    HamCycle { seq: Vec<usize> },
    PathSquare { seq: Vec<usize> },
}

impl From<&Embedding> for Certificate {
    fn from(e: &Embedding) -> Self {
        Certificate::Embedding { map: e.map() }
    }
}

impl From<&Ordering> for Certificate {
    fn from(o: &Ordering) -> Self {
        let seq = o.seq();
        match o.kind {
            OrderingKind::HamPath => Certificate::HamPath { seq },
            OrderingKind::HamCycle => Certificate::HamCycle { seq },
            OrderingKind::PathSquare => Certificate::PathSquare { seq },
        }
    }
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Re-checks a certificate without touching any search code.
///
/// `guest` is only consulted for embeddings; orderings are checked against
/// `host` alone.
pub fn verify_certificate(cert: &Certificate, guest: Option<&Graph>, host: &Graph) -> bool {
    let fits = |v: &Vec<usize>| v.iter().all(|&x| x < 256);
    match cert {
        Certificate::Embedding { map } => match guest {
            Some(g) if fits(map) => Embedding::new(map.clone()).verify(g, host),
            _ => false,
        },
        Certificate::HamPath { seq } if fits(seq) => {
            Ordering::new(OrderingKind::HamPath, seq.clone()).verify(host)
        }
        Certificate::HamCycle { seq } if fits(seq) => {
            Ordering::new(OrderingKind::HamCycle, seq.clone()).verify(host)
        }
        Certificate::PathSquare { seq } if fits(seq) => {
            Ordering::new(OrderingKind::PathSquare, seq.clone()).verify(host)
        }
        _ => false,
    }
}

/// Finds a (not necessarily induced) copy of `guest` in `host`.
///
/// Guest vertices are placed greedily by degree, preferring vertices with
/// many already-placed neighbours; candidates are filtered by host degree and
/// adjacency to the images of placed neighbours. Twin vertices (equal open or
/// closed neighbourhoods) are forced onto increasing host labels. Isolated
/// guest vertices take the lowest unused hosts at the end.
pub fn find_embedding(guest: &Graph, host: &Graph) -> Option<Embedding> {
    if guest.n() > host.n()
        || guest.edge_count() > host.edge_count()
        || guest.max_degree() > host.max_degree()
        || guest.non_isolated_count() > host.n()
    {
        return None;
    }
    let plan = Plan::new(guest, host);
    let mut phi = vec![u8::MAX; guest.n()];
    if !plan.extend(0, 0, &mut phi) {
        return None;
    }
    let mut used = phi
        .iter()
        .filter(|&&h| h != u8::MAX)
        .fold(0u32, |m, &h| m | 1 << h);
    for slot in phi.iter_mut().filter(|h| **h == u8::MAX) {
        let h = (!used & full_mask(host.n())).trailing_zeros();
        used |= 1 << h;
        *slot = h as u8;
    }
    let emb = Embedding { map: phi };
    debug_assert!(emb.verify(guest, host));
    Some(emb)
}

struct Plan<'a> {
    host: &'a Graph,
    order: Vec<usize>,
    /// Earlier-placed neighbours of `order[i]`.
    back: Vec<u32>,
    /// Earlier-placed twin of `order[i]` whose image must be smaller.
    twin_before: Vec<Option<usize>>,
    /// Host vertices with degree at least the guest degree of `order[i]`.
    degree_ok: Vec<u32>,
}

impl<'a> Plan<'a> {
    fn new(guest: &Graph, host: &'a Graph) -> Self {
        let core: Vec<usize> = (0..guest.n()).filter(|&v| guest.degree(v) > 0).collect();
        let mut order = Vec::with_capacity(core.len());
        let mut placed = 0u32;
        while order.len() < core.len() {
            let next = core
                .iter()
                .copied()
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    let linked = (guest.neighbors(v) & placed).count_ones();
                    (linked, guest.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced core vertex");
            placed |= 1 << next;
            order.push(next);
        }
        let mut back = Vec::with_capacity(order.len());
        let mut twin_before = Vec::with_capacity(order.len());
        let mut degree_ok = Vec::with_capacity(order.len());
        let mut seen = 0u32;
        for &u in &order {
            back.push(guest.neighbors(u) & seen);
            let pos = order.iter().position(|&w| w == u).expect("u is ordered");
            let twin = order[..pos].iter().rev().copied().find(|&w| {
                let (nu, nw) = (guest.neighbors(u), guest.neighbors(w));
                nu & !(1 << w) == nw & !(1 << u)
            });
            twin_before.push(twin);
            let d = guest.degree(u);
            degree_ok.push(
                (0..host.n())
                    .filter(|&h| host.degree(h) >= d)
                    .fold(0u32, |m, h| m | 1 << h),
            );
            seen |= 1 << u;
        }
        Plan {
            host,
            order,
            back,
            twin_before,
            degree_ok,
        }
    }

    fn extend(&self, i: usize, used: u32, phi: &mut [u8]) -> bool {
        if i == self.order.len() {
            return true;
        }
        let u = self.order[i];
        let mut cand = self.degree_ok[i] & !used;
        for w in bits(self.back[i]) {
            cand &= self.host.neighbors(phi[w] as usize);
        }
        if let Some(t) = self.twin_before[i] {
            cand &= !full_mask(phi[t] as usize + 1);
        }
        for h in bits(cand) {
            phi[u] = h as u8;
            if self.extend(i + 1, used | 1 << h, phi) {
                return true;
            }
        }
        phi[u] = u8::MAX;
        false
    }
}

/// Embeds `h` into the complement of `P_n²`, i.e. packs `h` with `P_n²`.
/// Graphs on fewer than `n` vertices are padded with isolated vertices.
pub fn packs_with_path_square(h: &Graph, n: usize) -> Option<Embedding> {
    if h.n() > n {
        return None;
    }
    let host = Graph::path_square(n).ok()?.complement();
    let guest = if h.n() < n { h.pad_to(n).ok()? } else { *h };
    let emb = find_embedding(&guest, &host)?;
    Some(Embedding {
        map: emb.map[..h.n()].to_vec(),
    })
}

/// Searches for a spanning copy of `P_n²`.
///
/// Sparse complements go through the packing duality, dense ones through
/// direct ordering backtracking.
pub fn contains_path_square(g: &Graph) -> Option<Ordering> {
    if g.complement().edge_count() <= g.n() {
        contains_path_square_by_packing(g)
    } else {
        contains_path_square_direct(g)
    }
}

/// `P_n² ⊆ G` iff `complement(G)` packs with `P_n²`; the packing map sends
/// each vertex to its position along the square path.
pub fn contains_path_square_by_packing(g: &Graph) -> Option<Ordering> {
    let n = g.n();
    let phi = packs_with_path_square(&g.complement(), n)?;
    let mut seq = vec![0usize; n];
    for v in 0..n {
        seq[phi.image(v)] = v;
    }
    Some(Ordering::new(OrderingKind::PathSquare, seq))
}

pub fn contains_path_square_direct(g: &Graph) -> Option<Ordering> {
    let n = g.n();
    let all = full_mask(n);
    let mut seq = Vec::with_capacity(n);
    fn go(g: &Graph, all: u32, used: u32, seq: &mut Vec<usize>) -> bool {
        let k = seq.len();
        if k == g.n() {
            return true;
        }
        let mut cand = all & !used;
        if k >= 1 {
            cand &= g.neighbors(seq[k - 1]);
        }
        if k >= 2 {
            cand &= g.neighbors(seq[k - 2]);
        }
        for v in bits(cand) {
            seq.push(v);
            if go(g, all, used | 1 << v, seq) {
                return true;
            }
            seq.pop();
        }
        false
    }
    if n >= 3 && g.min_degree() < 2 {
        return None;
    }
    go(g, all, 0, &mut seq).then(|| Ordering::new(OrderingKind::PathSquare, seq))
}

fn spans_connected(g: &Graph, start: usize, within: u32) -> bool {
    let mut reach = 1u32 << start;
    let mut frontier = reach;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= g.neighbors(v);
        }
        next &= within;
        frontier = next & !reach;
        reach |= next;
    }
    reach & within == within
}

fn extend_path(g: &Graph, used: u32, path: &mut Vec<usize>, close_to: Option<usize>) -> bool {
    let n = g.n();
    let last = *path.last().expect("non-empty path");
    if path.len() == n {
        return close_to.is_none_or(|s| g.has_edge(last, s));
    }
    let rest = full_mask(n) & !used;
    if !spans_connected(g, last, rest | 1 << last) {
        return false;
    }
    for v in bits(g.neighbors(last) & rest) {
        path.push(v);
        if extend_path(g, used | 1 << v, path, close_to) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn hamilton_path(g: &Graph) -> Option<Ordering> {
    let n = g.n();
    if n > 1 && !g.is_connected() {
        return None;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if leaves.len() > 2 {
        return None;
    }
    // a degree-one vertex must be an end, so start there when one exists
    let starts: Vec<usize> = if leaves.is_empty() {
        (0..n).collect()
    } else {
        leaves
    };
    for s in starts {
        let mut path = vec![s];
        if extend_path(g, 1 << s, &mut path, None) {
            return Some(Ordering::new(OrderingKind::HamPath, path));
        }
    }
    None
}

pub fn hamilton_cycle(g: &Graph) -> Option<Ordering> {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    let mut path = vec![0];
    extend_path(g, 1, &mut path, Some(0)).then(|| Ordering::new(OrderingKind::HamCycle, path))
}

/// DOT rendering of `host` with the image of `guest` drawn in red.
pub fn embedding_dot(name: &str, guest: &Graph, host: &Graph, phi: &Embedding) -> String {
    let mut marked = Graph::empty(host.n()).expect("host size is valid");
    for e in guest.edges() {
        marked = marked
            .add_edge(phi.image(e.u()), phi.image(e.v()))
            .unwrap_or(marked);
    }
    highlighted_dot(name, host, &marked)
}

/// DOT rendering of `host` with the square path of `ord` drawn in red.
pub fn ordering_dot(name: &str, host: &Graph, ord: &Ordering) -> String {
    let s = ord.seq();
    let mut marked = Graph::empty(host.n()).expect("host size is valid");
    let mut mark = |a: usize, b: usize| {
        if host.has_edge(a, b) && !marked.has_edge(a, b) {
            marked = marked.add_edge(a, b).expect("edge in range");
        }
    };
    for w in s.windows(2) {
        mark(w[0], w[1]);
    }
    match ord.kind {
        OrderingKind::PathSquare => {
            for w in s.windows(3) {
                mark(w[0], w[2]);
            }
        }
        OrderingKind::HamCycle if s.len() >= 3 => mark(s[s.len() - 1], s[0]),
        _ => {}
    }
    highlighted_dot(name, host, &marked)
}

fn highlighted_dot(name: &str, host: &Graph, marked: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{name}\" {{");
    for v in 0..host.n() {
        // 1-indexed labels read as v1 … vn
        let _ = writeln!(out, "  {v} [label=\"v{}\"];", v + 1);
    }
    for e in host.edges() {
        if marked.has_edge(e.u(), e.v()) {
            let _ = writeln!(out, "  {} -- {} [color=red, penwidth=2];", e.u(), e.v());
        } else {
            let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
        }
    }
    out.push_str("}\n");
    out
}
