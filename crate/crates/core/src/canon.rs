//! Canonical labelling by colour refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first smallest non-singleton
//! cell in turn, recurse. Every discrete leaf gives a relabelled adjacency
//! matrix and the canonical form is the lexicographically least one.
//!
//! Automorphisms found at leaves prune the tree in two ways: subtrees whose
//! roots are in the same orbit of the point stabilizer of the current prefix
//! are skipped, and a leaf equivalent to the first (or best) leaf jumps back
//! to the node where the two paths diverge.

use crate::graph::{bits, Graph, MAX_N};

/// A labelling-invariant encoding of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// graph6 of the canonically relabelled graph.
    pub bytes: Vec<u8>,
    /// `perm[v]` is the canonical label of vertex `v`.
    pub perm: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.bytes).expect("graph6 is ASCII")
    }

    pub fn perm_usize(&self) -> Vec<usize> {
        self.perm.iter().map(|&p| p as usize).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let mut cells = vec![if n == 32 { u32::MAX } else { (1u32 << n) - 1 }];
    refine(g, &mut cells);
    let mut s = Searcher {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut path = Vec::with_capacity(n);
    s.search(cells, &mut path);
    let best = s.best.expect("search visits at least one leaf");
    let mut perm = vec![0u8; n];
    for (i, &v) in best.lab.iter().enumerate() {
        perm[v as usize] = i as u8;
    }
    let canon = Graph::from_rows(&best.key[..n]).expect("relabelled rows are valid");
    CanonicalForm {
        bytes: crate::graph6::encode(&canon).into_bytes(),
        perm,
    }
}

/// The canonically relabelled graph itself.
pub fn canonical_graph(g: &Graph) -> Graph {
    let cf = canonical_form(g);
    g.relabel(&cf.perm_usize())
        .expect("canonical perm is a permutation")
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g).bytes == canonical_form(h).bytes
}

struct Leaf {
    key: [u32; MAX_N],
    lab: Vec<u8>,
    path: Vec<u8>,
}

struct Searcher<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<u8>>,
}

impl Searcher<'_> {
    /// Returns `Some(depth)` to abandon everything below the node at `depth`.
    fn search(&mut self, cells: Vec<u32>, path: &mut Vec<u8>) -> Option<usize> {
        let depth = path.len();
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            return self.leaf(&cells, path);
        };
        let cell = cells[ti];
        let mut explored = 0u32;
        for w in bits(cell) {
            if explored != 0 && self.equivalent_to_explored(path, explored, w) {
                continue;
            }
            explored |= 1 << w;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << w);
            child.push(cell & !(1 << w));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.g, &mut child);
            path.push(w as u8);
            let jump = self.search(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u32], path: &[u8]) -> Option<usize> {
        let n = self.g.n();
        let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut pos = [0u8; MAX_N];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let mut key = [0u32; MAX_N];
        for (i, &v) in lab.iter().enumerate() {
            let mut row = 0u32;
            for w in bits(self.g.neighbors(v as usize)) {
                row |= 1 << pos[w];
            }
            key[i] = row;
        }
        let leaf = Leaf {
            key,
            lab,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                key,
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.key[..n] == key[..n] {
            let level = common_prefix(&first.path, path);
            self.autos.push(mapping(&first.lab, &leaf.lab, n));
            return Some(level);
        }
        let best = self.best.as_ref().expect("set with first");
        if best.key[..n] == key[..n] {
            let level = common_prefix(&best.path, path);
            self.autos.push(mapping(&best.lab, &leaf.lab, n));
            return Some(level);
        }
        if key[..n] < best.key[..n] {
            self.best = Some(leaf);
        }
        None
    }

    /// Whether `w` shares an orbit with an explored sibling under the known
    /// automorphisms that fix every vertex of `prefix`.
    fn equivalent_to_explored(&self, prefix: &[u8], explored: u32, w: usize) -> bool {
        let n = self.g.n();
        let mut parent: [u8; MAX_N] = std::array::from_fn(|i| i as u8);
        fn find(p: &mut [u8; MAX_N], mut x: usize) -> usize {
            while p[x] as usize != x {
                p[x] = p[p[x] as usize];
                x = p[x] as usize;
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&v| gamma[v as usize] != v) {
                continue;
            }
            any = true;
            for (v, &image) in gamma.iter().enumerate().take(n) {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image as usize));
                if a != b {
                    parent[a.max(b)] = a.min(b) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        bits(explored).any(|x| find(&mut parent, x) == root)
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The permutation sending `from[i]` to `to[i]`.
fn mapping(from: &[u8], to: &[u8], n: usize) -> Vec<u8> {
    let mut gamma = vec![0u8; n];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a as usize] = b;
    }
    gamma
}

/// Refines an ordered partition to the coarsest equitable refinement.
///
/// Each round splits every cell by the vector of neighbour counts into the
/// current cells; sub-cells replace the parent in increasing signature order.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u32>) {
    let mut sigs: Vec<(Vec<u8>, usize)> = Vec::with_capacity(MAX_N);
    loop {
        let mut next = Vec::with_capacity(g.n());
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            sigs.clear();
            for v in bits(cell) {
                let row = g.neighbors(v);
                let sig = cells
                    .iter()
                    .map(|&c| (row & c).count_ones() as u8)
                    .collect();
                sigs.push((sig, v));
            }
            sigs.sort();
            let mut mask = 0u32;
            for i in 0..sigs.len() {
                if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                    next.push(mask);
                    mask = 0;
                }
                mask |= 1 << sigs[i].1;
            }
            next.push(mask);
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}
