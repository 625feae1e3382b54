//! Independent oracles shared by the integration tests. Nothing here calls
//! the canonical labelling, the enumerator or the exact polynomial code.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sqlab::Graph;

/// G(n, p) with a fixed generator.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Graph::build(n, pairs).unwrap()
}

/// A random spanning tree plus random extra edges: always connected.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        if !g.has_edge(u, v) {
            g = g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically least adjacency bit string over all relabellings.
pub struct BruteCanon {
    n: usize,
    perms: Vec<Vec<usize>>,
}

impl BruteCanon {
    pub fn new(n: usize) -> Self {
        BruteCanon {
            n,
            perms: permutations(n),
        }
    }

    pub fn key(&self, g: &Graph) -> u64 {
        let n = self.n;
        let mut best = u64::MAX;
        for p in &self.perms {
            let mut key = 0u64;
            let mut bit = 0;
            for j in 0..n {
                for i in 0..j {
                    if g.has_edge(p[i], p[j]) {
                        key |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            best = best.min(key);
        }
        best
    }
}

/// Number of isomorphism classes of graphs on `n` vertices with at most
/// `max_edges` edges, by labelled enumeration and brute-force canonization.
pub fn brute_class_count(n: usize, max_edges: usize) -> usize {
    let canon = BruteCanon::new(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
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
        )
        .unwrap();
        seen.insert(canon.key(&g));
    }
    seen.len()
}

/// `det(xI − A)` by cofactor expansion along the first row, with polynomial
/// entries as `i128` coefficient vectors (low to high).
pub fn cofactor_char_poly(g: &Graph) -> Vec<i128> {
    let n = g.n();
    let entry = |i: usize, j: usize| -> Vec<i128> {
        if i == j {
            vec![0, 1]
        } else if g.has_edge(i, j) {
            vec![-1]
        } else {
            vec![0]
        }
    };
    fn mul(a: &[i128], b: &[i128]) -> Vec<i128> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }
    fn add(acc: &mut Vec<i128>, b: &[i128], sign: i128) {
        if acc.len() < b.len() {
            acc.resize(b.len(), 0);
        }
        for (i, y) in b.iter().enumerate() {
            acc[i] += sign * y;
        }
    }
    fn det(rows: &[usize], cols: &[usize], entry: &dyn Fn(usize, usize) -> Vec<i128>) -> Vec<i128> {
        if rows.is_empty() {
            return vec![1];
        }
        let r = rows[0];
        let mut acc = vec![0];
        for (k, &c) in cols.iter().enumerate() {
            let e = entry(r, c);
            if e.iter().all(|&x| x == 0) {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = det(&rows[1..], &rest, entry);
            add(&mut acc, &mul(&e, &minor), if k % 2 == 0 { 1 } else { -1 });
        }
        acc
    }
    let idx: Vec<usize> = (0..n).collect();
    let mut p = det(&idx, &idx, &entry);
    p.resize(n + 1, 0);
    p
}

/// `G²` by breadth-first distances.
pub fn square_by_bfs(g: &Graph) -> Graph {
    let n = g.n();
    let mut pairs = Vec::new();
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in 0..n {
                if g.has_edge(u, w) && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (t, &d) in dist.iter().enumerate() {
            if t > s && d <= 2 {
                pairs.push((s, t));
            }
        }
    }
    Graph::build(n, pairs).unwrap()
}

/// Largest eigenvalue of a symmetric 2×2 matrix `[[a, b], [b, d]]`.
pub fn sym2_largest(a: f64, b: f64, d: f64) -> f64 {
    (a + d) / 2.0 + (((a - d) / 2.0).powi(2) + b * b).sqrt()
}

/// `K_n` with the edges of `h` (on vertices `0..h.n()`) removed.
pub fn complete_minus(n: usize, h: &Graph) -> Graph {
    h.pad_to(n).unwrap().complement()
}
