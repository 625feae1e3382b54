//! Isomorph-free generation of small graphs.
//!
//! Graphs without isolated vertices ("cores") are grown one edge at a time:
//! every core with `e` edges comes from a core with `e − 1` edges by adding
//! an edge between two existing vertices, a pendant edge to a new vertex, or
//! a disjoint `K2`. Children are deduplicated by canonical form. Graphs on
//! exactly `n` vertices are then the cores with at most `n` vertices, padded
//! with isolated vertices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::canon::canonical_form;
use crate::error::{out_of_range, Result};
use crate::graph::{Graph, MAX_N};

/// Default order limit for sparse enumeration.
pub const SPARSE_MAX_N: usize = 16;
/// Order limit for exhaustive enumeration.
pub const ALL_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Sparse,
    All,
}

/// What to enumerate: graphs on `n` vertices with at most `max_edges` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumSpec {
    pub n: usize,
    pub max_edges: usize,
    pub mode: Mode,
}

impl EnumSpec {
    pub fn sparse(n: usize, max_edges: usize) -> Result<Self> {
        Self::sparse_with_limit(n, max_edges, SPARSE_MAX_N)
    }

    /// As [`EnumSpec::sparse`] with a caller-chosen order limit (at most 32).
    pub fn sparse_with_limit(n: usize, max_edges: usize, max_n: usize) -> Result<Self> {
        let limit = max_n.min(MAX_N);
        if n == 0 || n > limit {
            return out_of_range("n", n, format!("1..={limit}"));
        }
        let pairs = n * (n - 1) / 2;
        if max_edges > pairs {
            return out_of_range("max_edges", max_edges, format!("0..={pairs}"));
        }
        Ok(EnumSpec {
            n,
            max_edges,
            mode: Mode::Sparse,
        })
    }

    pub fn all(n: usize) -> Result<Self> {
        if n == 0 || n > ALL_MAX_N {
            return out_of_range("n", n, format!("1..={ALL_MAX_N}"));
        }
        Ok(EnumSpec {
            n,
            max_edges: n * (n - 1) / 2,
            mode: Mode::All,
        })
    }

    /// The full stream, in a fixed order: by edge count, then by the
    /// canonical form of the core.
    pub fn generate(&self) -> Vec<Graph> {
        let empty = Graph::empty(self.n).expect("validated order");
        std::iter::once(empty)
            .chain(
                cores(self.n, self.max_edges)
                    .into_iter()
                    .flatten()
                    .map(|c| c.pad_to(self.n).expect("core fits in n")),
            )
            .collect()
    }
}

/// Cores with at most `max_vertices` vertices, grouped by edge count
/// `0..=max_edges`; each group is sorted by canonical form and every graph
/// in it is canonically labelled. The vertexless core is not representable,
/// so group 0 is empty.
pub fn cores(max_vertices: usize, max_edges: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![Vec::new()];
    if max_edges == 0 || max_vertices < 2 {
        levels.resize(max_edges + 1, Vec::new());
        return levels;
    }
    levels.push(vec![Graph::complete(2).expect("K2")]);
    for _ in 2..=max_edges {
        let prev = levels.last().expect("level one exists");
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        let mut offer = |g: Graph| {
            let cf = canonical_form(&g);
            let perm = cf.perm_usize();
            next.entry(cf.bytes)
                .or_insert_with(|| g.relabel(&perm).expect("permutation"));
        };
        for g in prev {
            let k = g.n();
            for u in 0..k {
                for v in u + 1..k {
                    if !g.has_edge(u, v) {
                        offer(g.add_edge(u, v).expect("in range"));
                    }
                }
            }
            if k < max_vertices {
                for u in 0..k {
                    offer(g.add_vertex(1 << u).expect("in range"));
                }
            }
            if k + 2 <= max_vertices {
                offer(
                    g.disjoint_union(&Graph::complete(2).expect("K2"))
                        .expect("in range"),
                );
            }
        }
        levels.push(next.into_values().collect());
    }
    levels
}

/// One graph per isomorphism class on exactly `n` vertices with at most
/// `max_edges` edges. `n` is limited to [`SPARSE_MAX_N`].
pub fn sparse_graphs(n: usize, max_edges: usize) -> Result<Vec<Graph>> {
    Ok(EnumSpec::sparse(n, max_edges)?.generate())
}

/// One graph per isomorphism class on `n ≤ 8` vertices.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(EnumSpec::all(n)?.generate())
}

/// Graphs with exactly `edges` edges on `n` vertices, one per class.
pub fn graphs_with_edges(n: usize, edges: usize) -> Result<Vec<Graph>> {
    let spec = EnumSpec::sparse_with_limit(n, edges, MAX_N)?;
    if edges == 0 {
        return Ok(vec![Graph::empty(n)?]);
    }
    Ok(cores(spec.n, edges)
        .pop()
        .unwrap_or_default()
        .into_iter()
        .map(|c| c.pad_to(n).expect("core fits in n"))
        .collect())
}

/// FNV-1a, used for a platform-independent shard assignment.
fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// The shard a graph belongs to among `shards`, by canonical-form hash.
pub fn shard_of(g: &Graph, shards: usize) -> usize {
    (fnv1a(&canonical_form(g).bytes) % shards.max(1) as u64) as usize
}

/// Splits the stream of `spec` into `shards` disjoint sub-streams, each in
/// stream order.
pub fn partition(spec: &EnumSpec, shards: usize) -> Result<Vec<Vec<Graph>>> {
    if shards == 0 {
        return out_of_range("shards", shards, "1..");
    }
    let mut parts = vec![Vec::new(); shards];
    for g in spec.generate() {
        parts[shard_of(&g, shards)].push(g);
    }
    Ok(parts)
}

/// Generate-and-dedup over all labelled graphs, for `n ≤ 6`.
pub fn brute_force_classes(n: usize, max_edges: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 6 {
        return out_of_range("n", n, "1..=6");
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes = BTreeMap::new();
    for mask in 0u32..1 << pairs.len() {
        if mask.count_ones() as usize > max_edges {
            continue;
        }
        let g = Graph::build(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        )?;
        classes.entry(canonical_form(&g).bytes).or_insert(g);
    }
    Ok(classes.into_values().collect())
}
