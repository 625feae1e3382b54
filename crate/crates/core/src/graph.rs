//! Immutable simple undirected graphs on at most 32 vertices.
//!
//! Every adjacency row is a `u32` bitmask, so neighbourhood intersections,
//! degree counts and complements are single word operations. All methods that
//! "modify" a graph return a new value.

use std::collections::BTreeMap;
use std::fmt;

use crate::canon::canonical_form;
use crate::embed::Embedding;
use crate::error::{out_of_range, Error, Result};

/// Hard cap on the number of vertices; one adjacency row fits in a `u32`.
pub const MAX_N: usize = 32;

/// An undirected edge with normalized endpoints `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: u8,
    v: u8,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if v >= MAX_N {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: MAX_N,
            });
        }
        Ok(Edge {
            u: u as u8,
            v: v as u8,
        })
    }

    pub fn u(&self) -> usize {
        self.u as usize
    }

    pub fn v(&self) -> usize {
        self.v as usize
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A simple undirected graph on `1..=32` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    rows: [u32; MAX_N],
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n: n as u8,
            rows: [0; MAX_N],
        })
    }

    /// Builds a graph from an edge list given as vertex pairs.
    pub fn build<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            let e = Edge::new(a, b)?;
            if g.has_edge(e.u(), e.v()) {
                return Err(Error::DuplicateEdge(e.u(), e.v()));
            }
            g.set(e.u(), e.v());
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        Graph::build(n, edges.into_iter().map(|e| (e.u(), e.v())))
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let bad = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            g.rows[v] = row;
        }
        for u in 0..n {
            for w in bits(g.rows[u]) {
                if g.rows[w] >> u & 1 == 0 {
                    return Err(Error::Graph6(format!("asymmetric row {u}")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Adjacency rows, one bitmask per vertex.
    pub fn rows(&self) -> &[u32] {
        &self.rows[..self.n()]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Minimum degree over non-isolated vertices; `None` for edgeless graphs.
    pub fn min_nonisolated_degree(&self) -> Option<usize> {
        (0..self.n())
            .map(|v| self.degree(v))
            .filter(|&d| d > 0)
            .min()
    }

    pub fn isolated_mask(&self) -> u32 {
        (0..self.n())
            .filter(|&v| self.rows[v] == 0)
            .fold(0, |m, v| m | 1 << v)
    }

    pub fn non_isolated_count(&self) -> usize {
        self.n() - self.isolated_mask().count_ones() as usize
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            bits(self.rows[u] & !full_mask(u + 1)).map(move |v| Edge {
                u: u as u8,
                v: v as u8,
            })
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mask = full_mask(n);
        let mut g = *self;
        for v in 0..n {
            g.rows[v] = !self.rows[v] & mask & !(1 << v);
        }
        g
    }

    /// Vertices are adjacent in the result iff their distance here is 1 or 2.
    pub fn power2(&self) -> Graph {
        let n = self.n();
        let mut g = *self;
        for v in 0..n {
            let mut row = self.rows[v];
            for w in bits(self.rows[v]) {
                row |= self.rows[w];
            }
            g.rows[v] = row & !(1 << v);
        }
        g
    }

    /// The vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let (a, b) = (self.n(), other.n());
        if a + b > MAX_N {
            return out_of_range("n", a + b, format!("1..={MAX_N}"));
        }
        let mut g = Graph::empty(a + b)?;
        g.rows[..a].copy_from_slice(self.rows());
        for v in 0..b {
            g.rows[a + v] = other.rows[v] << a;
        }
        Ok(g)
    }

    /// Pads with isolated vertices up to `n` vertices.
    pub fn pad_to(&self, n: usize) -> Result<Graph> {
        if n < self.n() || n > MAX_N {
            return out_of_range("n", n, format!("{}..={MAX_N}", self.n()));
        }
        let mut g = *self;
        g.n = n as u8;
        Ok(g)
    }

    /// Drops isolated vertices, keeping the relative order of the others.
    /// The edgeless graph collapses to a single vertex.
    pub fn core(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| self.rows[v] != 0).collect();
        if keep.is_empty() {
            return Graph::empty(1).unwrap();
        }
        self.induced(&keep)
    }

    /// The subgraph induced on `vertices`, relabelled `0..vertices.len()` in order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len().max(1)).unwrap();
        if vertices.is_empty() {
            return g;
        }
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &w) in vertices.iter().enumerate() {
                if self.has_edge(u, w) {
                    g.rows[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// `G - x`: deletes vertex `x` and its edges.
    pub fn remove_vertex(&self, x: usize) -> Result<Graph> {
        if x >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n(),
            });
        }
        if self.n() == 1 {
            return Err(Error::VertexCount(0));
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| v != x).collect();
        Ok(self.induced(&keep))
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = *self;
        g.rows[u] &= !(1 << v);
        g.rows[v] &= !(1 << u);
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let e = Edge::new(u, v)?;
        if e.v() >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: e.v(),
                n: self.n(),
            });
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(e.u(), e.v()));
        }
        let mut g = *self;
        g.set(u, v);
        Ok(g)
    }

    /// Appends a new vertex adjacent to every vertex in `mask`.
    pub fn add_vertex(&self, mask: u32) -> Result<Graph> {
        let n = self.n();
        if n + 1 > MAX_N {
            return out_of_range("n", n + 1, format!("1..={MAX_N}"));
        }
        if mask & !full_mask(n) != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: (mask & !full_mask(n)).trailing_zeros() as usize,
                n,
            });
        }
        let mut g = *self;
        g.n += 1;
        g.rows[n] = mask;
        for v in bits(mask) {
            g.rows[v] |= 1 << n;
        }
        Ok(g)
    }

    /// `σ·G`: vertex `v` is renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = 0u32;
        if perm.len() != n {
            return out_of_range("perm length", perm.len(), n.to_string());
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            seen |= 1 << p;
        }
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for w in bits(self.rows[u]) {
                g.rows[perm[u]] |= 1 << perm[w];
            }
        }
        Ok(g)
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `G - E(H)` where `φ` embeds `guest` into `self`.
    pub fn delete_embedded(&self, guest: &Graph, phi: &Embedding) -> Result<Graph> {
        if !phi.verify(guest, self) {
            return Err(Error::NotAnEmbedding);
        }
        let mut g = *self;
        for e in guest.edges() {
            let (a, b) = (phi.image(e.u()), phi.image(e.v()));
            g.rows[a] &= !(1 << b);
            g.rows[b] &= !(1 << a);
        }
        Ok(g)
    }

    /// All graphs obtained by adding a vertex joined to `s` existing vertices,
    /// one per isomorphism class, ordered by canonical form.
    pub fn plus_set(&self, s: usize) -> Result<Vec<Graph>> {
        let n = self.n();
        if s == 0 || s > n {
            return out_of_range("s", s, format!("1..={n}"));
        }
        if n + 1 > MAX_N {
            return out_of_range("n", n + 1, format!("1..={MAX_N}"));
        }
        let mut classes = BTreeMap::new();
        for_each_subset(n, s, |mask| {
            let h = self.add_vertex(mask).expect("mask within range");
            classes.entry(canonical_form(&h).bytes).or_insert(h);
        });
        Ok(classes.into_values().collect())
    }

    /// All graphs obtained by deleting one edge, one per isomorphism class.
    pub fn minus_set(&self) -> Result<Vec<Graph>> {
        if self.edge_count() == 0 {
            return Err(Error::Edgeless);
        }
        let mut classes = BTreeMap::new();
        for e in self.edges() {
            let h = self.remove_edge(e.u(), e.v())?;
            classes.entry(canonical_form(&h).bytes).or_insert(h);
        }
        Ok(classes.into_values().collect())
    }
}

/// Calls `f` with every `k`-subset of `0..n` as a bitmask, in colex order.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u32)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit: u64 = 1 << n;
    let mut x: u64 = (1 << k) - 1;
    while x < limit {
        f(x as u32);
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

/// Standard constructions.
impl Graph {
    /// The path `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        Graph::build(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return out_of_range("n", n, format!("3..={MAX_N}"));
        }
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Ok(Graph::empty(n)?.complement())
    }

    /// The star on `n` vertices, centre `0`.
    pub fn star(n: usize) -> Result<Graph> {
        Graph::build(n, (1..n).map(|i| (0, i)))
    }

    /// The square of the `n`-vertex path in its natural order.
    pub fn path_square(n: usize) -> Result<Graph> {
        Ok(Graph::path(n)?.power2())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        Graph::build(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::encode(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_basic() {
        let k3 = Graph::build(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, Graph::complete(3).unwrap());

        let e2 = Graph::build(2, []).unwrap();
        assert_eq!(e2.max_degree(), 0);
        assert_eq!(e2.edge_count(), 0);

        let m2 = Graph::build(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(m2.min_nonisolated_degree(), Some(1));
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::build(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::build(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::build(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::empty(0), Err(Error::VertexCount(0)));
        assert_eq!(Graph::empty(33), Err(Error::VertexCount(33)));
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn complement_of_square_path() {
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(k6.complement(), Graph::empty(6).unwrap());

        let c = Graph::path_square(6).unwrap().complement();
        let expected = Graph::build(6, [(0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (2, 5)]).unwrap();
        assert_eq!(c, expected);

        for n in 6..=16 {
            let c = Graph::path_square(n).unwrap().complement();
            assert_eq!(c.max_degree(), n - 3, "n={n}");
        }
    }

    #[test]
    fn power2_small() {
        let p4 = Graph::path(4).unwrap().power2();
        let expected = Graph::build(4, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)]).unwrap();
        assert_eq!(p4, expected);
        assert_eq!(p4.edge_count(), 5);
        for n in 1..8 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(k.power2(), k);
        }
        let c6 = Graph::cycle(6).unwrap().power2();
        assert!(c6.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn standard_constructions() {
        assert_eq!(Graph::path_square(6).unwrap().edge_count(), 9);
        for n in 2..=20 {
            assert_eq!(Graph::path_square(n).unwrap().edge_count(), 2 * n - 3);
            let s = Graph::star(n).unwrap();
            assert_eq!(s.max_degree(), n - 1);
            assert_eq!(s.edge_count(), n - 1);
        }
        assert_eq!(Graph::path_square(9).unwrap().complement().edge_count(), 21);
    }

    #[test]
    fn unions() {
        let s5 = Graph::star(5).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let u = s5.disjoint_union(&k2).unwrap();
        assert_eq!((u.n(), u.edge_count()), (7, 5));

        let e = Graph::empty(1).unwrap();
        let ee = e.disjoint_union(&e).unwrap();
        assert_eq!((ee.n(), ee.edge_count()), (2, 0));

        let big = Graph::empty(20).unwrap();
        assert!(big.disjoint_union(&big).is_err());
    }

    #[test]
    fn delete_embedded_counts() {
        let k6 = Graph::complete(6).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let phi = Embedding::new(vec![0, 1, 2]);
        assert_eq!(k6.delete_embedded(&k3, &phi).unwrap().edge_count(), 12);

        let k9 = Graph::complete(9).unwrap();
        let k4 = Graph::complete(4).unwrap();
        let phi = Embedding::new(vec![0, 1, 2, 3]);
        assert_eq!(k9.delete_embedded(&k4, &phi).unwrap().edge_count(), 30);

        // K7 - E(S6): the star centre keeps one edge, the six others keep K6.
        let k7 = Graph::complete(7).unwrap();
        let s6 = Graph::star(6).unwrap();
        let phi = Embedding::new((0..6).collect());
        let g = k7.delete_embedded(&s6, &phi).unwrap();
        assert_eq!(g.degree_sequence(), vec![6, 5, 5, 5, 5, 5, 1]);
        assert_eq!(g.max_degree(), 6);

        let bad = Embedding::new(vec![0, 0, 1]);
        assert_eq!(k6.delete_embedded(&k3, &bad), Err(Error::NotAnEmbedding));
    }

    #[test]
    fn plus_and_minus_sets() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.plus_set(1).unwrap().len(), 1);
        let k4 = Graph::complete(4).unwrap();
        let g7 = k4.plus_set(2).unwrap();
        assert_eq!(g7.len(), 1);
        assert_eq!(g7[0].edge_count(), 8);
        assert_eq!(Graph::path(3).unwrap().plus_set(1).unwrap().len(), 2);
        assert!(k3.plus_set(0).is_err());
        assert!(k3.plus_set(4).is_err());

        assert_eq!(k4.minus_set().unwrap().len(), 1);
        assert_eq!(Graph::complete(6).unwrap().minus_set().unwrap().len(), 1);
        assert_eq!(Graph::path(4).unwrap().minus_set().unwrap().len(), 2);
        assert_eq!(Graph::empty(4).unwrap().minus_set(), Err(Error::Edgeless));
    }

    #[test]
    fn subset_enumeration() {
        let mut count = 0;
        for_each_subset(6, 3, |m| {
            assert_eq!(m.count_ones(), 3);
            count += 1;
        });
        assert_eq!(count, 20);
        let mut all = 0;
        for_each_subset(32, 1, |_| all += 1);
        assert_eq!(all, 32);
    }

    #[test]
    fn relabel_and_components() {
        let p = Graph::path(4).unwrap();
        let q = p.relabel(&[3, 1, 0, 2]).unwrap();
        assert!(q.has_edge(3, 1) && q.has_edge(1, 0) && q.has_edge(0, 2));
        assert!(p.relabel(&[0, 0, 1, 2]).is_err());
        let g = Graph::build(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b00011, 0b00100, 0b11000]);
        assert!(!g.is_connected());
        assert_eq!(g.core().n(), 4);
    }
}
