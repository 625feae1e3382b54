//! Exhaustive harnesses for the square-path results.
//!
//! Each harness enumerates the instances a claim quantifies over at one
//! order `n`, checks every instance with the exact machinery of this crate,
//! and returns a [`VerificationReport`]. Enumeration shards run on a rayon
//! pool and are merged deterministically: tallies are summed and
//! counterexamples sorted by canonical form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::{canonical_form, is_isomorphic};
use crate::catalog::{first_contained_member, forbidden_base, forbidden_starred, NamedGraph};
use crate::embed::{
    contains_path_square, find_embedding, hamilton_cycle, hamilton_path, packs_with_path_square,
    verify_certificate, Certificate,
};
use crate::enumerate::{all_graphs, graphs_with_edges, partition, EnumSpec};
use crate::error::{out_of_range, Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::{compare_mu, hong_bound, mu_estimate, Verdict};

/// The checked statements. Identifiers are stable report keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// Packing with `P_n²` iff free of the starred family.
    Thm11,
    /// Extremal edge counts without a spanning `P_n²`.
    Cor13,
    /// Spectral condition for a spanning `P_n²`.
    Thm14,
    /// Adding a low-degree vertex preserves packability.
    Prop21,
    /// Spectral condition for a Hamilton path.
    Lem31,
    /// Hong's bound.
    Lem32,
    /// Edge condition for a Hamilton cycle.
    Ore,
    /// Packing certificates for the drawn guests.
    Figs,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::Thm11,
        Claim::Cor13,
        Claim::Thm14,
        Claim::Prop21,
        Claim::Lem31,
        Claim::Lem32,
        Claim::Ore,
        Claim::Figs,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Claim::Thm11 => "THM_1_1",
            Claim::Cor13 => "COR_1_3",
            Claim::Thm14 => "THM_1_4",
            Claim::Prop21 => "PROP_2_1",
            Claim::Lem31 => "LEM_3_1",
            Claim::Lem32 => "LEM_3_2",
            Claim::Ore => "ORE",
            Claim::Figs => "FIGS",
        }
    }

    /// Orders the harness accepts under `cfg`.
    pub fn range(&self, cfg: &VerifyConfig) -> (usize, usize) {
        match self {
            Claim::Thm11 | Claim::Cor13 | Claim::Thm14 => (6, cfg.max_n),
            Claim::Prop21 => (7, 16),
            Claim::Lem31 | Claim::Lem32 | Claim::Ore => (4, 8),
            Claim::Figs => (0, usize::MAX),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    /// Accepts `THM_1_1`, `thm1_1`, `thm-1-1` and similar spellings.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Claim::ALL
            .into_iter()
            .find(|c| c.id().replace('_', "").to_ascii_lowercase() == key)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

impl Serialize for Claim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub n: Option<usize>,
    pub status: Status,
    pub instances_checked: u64,
    /// graph6 strings, sorted by canonical form.
    pub counterexamples: Vec<String>,
    pub witnesses: BTreeMap<String, Value>,
    pub elapsed_ms: u128,
    pub shards: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `u64` witness by name, zero when absent.
    pub fn count(&self, key: &str) -> u64 {
        self.witnesses.get(key).and_then(Value::as_u64).unwrap_or(0)
    }

    pub fn summary(&self) -> String {
        let n = self.n.map_or_else(|| "-".to_string(), |n| n.to_string());
        format!(
            "{} n={} {} instances={} counterexamples={} {}ms",
            self.claim,
            n,
            self.status,
            self.instances_checked,
            self.counterexamples.len(),
            self.elapsed_ms
        )
    }
}

/// Harness knobs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Worker threads; 0 means available parallelism.
    pub threads: usize,
    /// Enumeration shards; 0 means one per thread.
    pub shards: usize,
    /// Upper order for the exhaustive packing and spectral harnesses.
    pub max_n: usize,
    /// Upper order for the packing-closure sample.
    pub closure_max_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            threads: 0,
            shards: 0,
            max_n: 11,
            closure_max_n: 12,
        }
    }
}

impl VerifyConfig {
    fn thread_count(&self) -> usize {
        if self.threads > 0 {
            self.threads
        } else {
            std::thread::available_parallelism().map_or(1, |p| p.get())
        }
    }

    fn shard_count(&self) -> usize {
        if self.shards > 0 {
            self.shards
        } else {
            self.thread_count()
        }
    }

    fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.thread_count())
            .build()
            .expect("thread pool")
    }
}

/// Per-shard accumulator.
#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    failures: Vec<(Vec<u8>, String)>,
    counts: BTreeMap<&'static str, u64>,
}

impl Tally {
    fn bump(&mut self, key: &'static str) {
        *self.counts.entry(key).or_default() += 1;
    }

    fn fail(&mut self, g: &Graph) {
        self.failures
            .push((canonical_form(g).bytes, graph6::encode(g)));
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self
    }
}

struct Run {
    claim: Claim,
    n: Option<usize>,
    started: Instant,
    shards: usize,
    tally: Tally,
    extra: BTreeMap<String, Value>,
}

impl Run {
    fn new(claim: Claim, n: Option<usize>, shards: usize) -> Self {
        Run {
            claim,
            n,
            started: Instant::now(),
            shards,
            tally: Tally::default(),
            extra: BTreeMap::new(),
        }
    }

    fn absorb(&mut self, t: Tally) {
        self.tally = std::mem::take(&mut self.tally).merge(t);
    }

    fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.extra.insert(key.to_string(), value.into());
    }

    fn finish(self) -> VerificationReport {
        let mut failures = self.tally.failures;
        failures.sort();
        failures.dedup();
        let counterexamples: Vec<String> = failures.into_iter().map(|(_, g6)| g6).collect();
        let mut witnesses = self.extra;
        for (k, v) in self.tally.counts {
            witnesses.insert(k.to_string(), json!(v));
        }
        VerificationReport {
            claim: self.claim,
            n: self.n,
            status: if counterexamples.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            instances_checked: self.tally.checked,
            counterexamples,
            witnesses,
            elapsed_ms: self.started.elapsed().as_millis(),
            shards: self.shards,
        }
    }
}

/// Runs `check` over every graph of `spec`, sharded across the pool.
fn sweep<F>(cfg: &VerifyConfig, spec: &EnumSpec, check: F) -> Tally
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    let parts = partition(spec, cfg.shard_count()).expect("at least one shard");
    sweep_parts(cfg, parts, check)
}

fn sweep_graphs<F>(cfg: &VerifyConfig, graphs: Vec<Graph>, check: F) -> Tally
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    let shards = cfg.shard_count();
    let mut parts = vec![Vec::new(); shards];
    for (i, g) in graphs.into_iter().enumerate() {
        parts[i % shards].push(g);
    }
    sweep_parts(cfg, parts, check)
}

fn sweep_parts<F>(cfg: &VerifyConfig, parts: Vec<Vec<Graph>>, check: F) -> Tally
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    let tallies: Vec<Tally> = cfg.pool().install(|| {
        parts
            .par_iter()
            .map(|part| {
                let mut t = Tally::default();
                for g in part {
                    t.checked += 1;
                    check(g, &mut t);
                }
                t
            })
            .collect()
    });
    tallies.into_iter().fold(Tally::default(), Tally::merge)
}

fn check_range(claim: Claim, n: usize, cfg: &VerifyConfig) -> Result<()> {
    let (lo, hi) = claim.range(cfg);
    if n < lo || n > hi {
        return out_of_range("n", n, format!("{lo}..={hi}"));
    }
    Ok(())
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `G` is a spanning subgraph of `X` (equal orders) iff the complement of
/// `X` embeds in the complement of `G`; both are sparse in every use here.
pub fn is_spanning_subgraph(g: &Graph, x: &Graph) -> bool {
    g.n() == x.n() && find_embedding(&x.complement(), &g.complement()).is_some()
}

fn complete_minus(n: usize, h: &Graph) -> Result<Graph> {
    Ok(h.pad_to(n)?.complement())
}

/// Outcome of the packing check for one `H` at order `n`.
///
/// Returns `true` when packability and family-freeness agree and any
/// packing certificate revalidates.
pub fn thm_1_1_holds(h: &Graph, n: usize) -> Result<bool> {
    let fam = forbidden_starred(n)?;
    let h = h.pad_to(n)?;
    let host = Graph::path_square(n)?.complement();
    let packing = packs_with_path_square(&h, n);
    let certified = packing.as_ref().is_none_or(|phi| phi.verify(&h, &host));
    let free = first_contained_member(&h, &fam).is_none();
    Ok(certified && packing.is_some() == free)
}

/// For `G` with `μ(G) > n − 2`: a spanning `P_n²` exists or `G` lies in
/// one of the exception graphs. Other graphs hold vacuously.
pub fn thm_1_4_holds(g: &Graph) -> Result<bool> {
    let n = g.n();
    if compare_mu(g, n as i64 - 2).verdict != Verdict::Greater {
        return Ok(true);
    }
    if let Some(ord) = contains_path_square(g) {
        return Ok(ord.verify(g));
    }
    Ok(in_star_exception(g)? || (n == 6 && in_triangle_exception(g)?))
}

fn in_star_exception(g: &Graph) -> Result<bool> {
    let n = g.n();
    Ok(is_spanning_subgraph(
        g,
        &complete_minus(n, &Graph::star(n - 1)?)?,
    ))
}

fn in_triangle_exception(g: &Graph) -> Result<bool> {
    Ok(is_spanning_subgraph(
        g,
        &complete_minus(g.n(), &Graph::complete(3)?)?,
    ))
}

/// Every `H` on `n` vertices with at most `n − 2` edges packs with `P_n²`
/// exactly when it avoids the starred family.
pub fn verify_thm_1_1(n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    check_range(Claim::Thm11, n, cfg)?;
    let spec = EnumSpec::sparse_with_limit(n, n - 2, cfg.max_n.max(n))?;
    let fam = forbidden_starred(n)?;
    let host = Graph::path_square(n)?.complement();
    let mut run = Run::new(Claim::Thm11, Some(n), cfg.shard_count());
    let tally = sweep(cfg, &spec, |h, t| {
        let packing = packs_with_path_square(h, n);
        if let Some(phi) = &packing {
            t.bump("packing");
            if !phi.verify(h, &host) {
                t.bump("bad_certificates");
                t.fail(h);
                return;
            }
        } else {
            t.bump("non_packing");
            let minimal = h
                .minus_set()
                .map(|hs| hs.iter().all(|m| packs_with_path_square(m, n).is_some()))
                .unwrap_or(true);
            if minimal {
                t.bump("minimal_non_packing");
            }
        }
        let member = first_contained_member(h, &fam);
        if packing.is_some() == member.is_none() {
            if let Some(m) = member {
                t.bump(match m.id {
                    NamedGraph::Star(_) => "blocked_by_star",
                    NamedGraph::Union(..) => "blocked_by_star_plus_edge",
                    _ => "blocked_by_dense_member",
                });
            }
        } else {
            t.fail(h);
        }
    });
    run.absorb(tally);
    run.note(
        "family",
        fam.members.iter().map(|m| m.id.tag()).collect::<Vec<_>>(),
    );
    Ok(run.finish())
}

/// The largest edge count of an `n`-vertex graph without a spanning `P_n²`,
/// found as the smallest non-packing complement, and the extremal classes.
pub fn verify_cor_1_3(n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    check_range(Claim::Cor13, n, cfg)?;
    let mut run = Run::new(Claim::Cor13, Some(n), cfg.shard_count());
    let mut found: Option<(usize, Vec<Graph>)> = None;
    for e in 0..=binom2(n) {
        let level = graphs_with_edges(n, e)?;
        let tally = sweep_graphs(cfg, level.clone(), |h, t| {
            if packs_with_path_square(h, n).is_none() {
                t.failures
                    .push((canonical_form(h).bytes, graph6::encode(h)));
            }
        });
        run.tally.checked += tally.checked;
        if !tally.failures.is_empty() {
            let mut fs = tally.failures;
            fs.sort();
            let hs = fs
                .into_iter()
                .map(|(_, g6)| graph6::decode(&g6).expect("own encoding"))
                .collect();
            found = Some((e, hs));
            break;
        }
    }
    let (min_edges, extremal) = found.expect("K_n never packs with a non-empty square path");
    let max_edges = binom2(n) - min_edges;
    let expected = match n {
        6 => 12,
        9 => 30,
        _ => binom2(n - 1) + 1,
    };
    let got: BTreeSet<Vec<u8>> = extremal.iter().map(|h| canonical_form(h).bytes).collect();
    let base = forbidden_base(n)?;
    let want: BTreeSet<Vec<u8>> = base
        .members
        .iter()
        .map(|m| Ok(canonical_form(&m.graph.pad_to(n)?).bytes))
        .collect::<Result<_>>()?;
    run.note("max_edges", max_edges);
    run.note("expected_max_edges", expected);
    run.note("extremal_classes", extremal.len());
    run.note(
        "extremal_complements",
        extremal
            .iter()
            .map(|h| graph6::encode(&h.core()))
            .collect::<Vec<_>>(),
    );
    run.note(
        "family",
        base.members.iter().map(|m| m.id.tag()).collect::<Vec<_>>(),
    );
    if max_edges != expected || got != want {
        // report the symmetric difference as extremal graphs K_n − E(H)
        for h in &extremal {
            if !want.contains(&canonical_form(h).bytes) {
                run.tally.fail(&h.complement());
            }
        }
        for m in &base.members {
            let h = m.graph.pad_to(n)?;
            if !got.contains(&canonical_form(&h).bytes) {
                run.tally.fail(&h.complement());
            }
        }
        if run.tally.failures.is_empty() {
            run.tally.fail(&extremal[0].complement());
        }
    }
    Ok(run.finish())
}

/// Spectral condition: first the sparse-complement reduction, then every
/// complement with at most `n − 2` edges.
pub fn verify_thm_1_4(n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    check_range(Claim::Thm14, n, cfg)?;
    let k = n as i64 - 2;
    let mut run = Run::new(Claim::Thm14, Some(n), cfg.shard_count());

    // Reduction. Adding edges never lowers μ, so complements with exactly
    // n − 1 edges dominate every denser complement.
    let boundary = graphs_with_edges(n, n - 1)?;
    let reduction = sweep_graphs(cfg, boundary, |h, t| {
        let g = h.complement();
        if compare_mu(&g, k).verdict == Verdict::Greater {
            t.fail(&g);
        }
    });
    run.note("reduction_boundary_checked", reduction.checked);
    let mut reduction_failures = reduction.failures.len();
    run.tally.failures.extend(reduction.failures);
    if n <= 8 {
        let exhaustive = sweep_graphs(cfg, all_graphs(n)?, |g, t| {
            if g.complement().edge_count() >= n - 1 && compare_mu(g, k).verdict == Verdict::Greater
            {
                t.fail(g);
            }
        });
        run.note("reduction_exhaustive_checked", exhaustive.checked);
        reduction_failures += exhaustive.failures.len();
        run.tally.failures.extend(exhaustive.failures);
    }
    run.note("reduction_holds", reduction_failures == 0);

    let spec = EnumSpec::sparse_with_limit(n, n - 2, cfg.max_n.max(n))?;
    let star = complete_minus(n, &Graph::star(n - 1)?)?;
    let triangle = complete_minus(n, &Graph::complete(3)?)?;
    let tally = sweep(cfg, &spec, |h, t| {
        let g = h.complement();
        if compare_mu(&g, k).verdict != Verdict::Greater {
            return;
        }
        t.bump("greater");
        if let Some(ord) = contains_path_square(&g) {
            if ord.verify(&g) {
                t.bump("contains_square_path");
            } else {
                t.fail(&g);
            }
            return;
        }
        let in_star = is_spanning_subgraph(&g, &star);
        let in_triangle = n == 6 && is_spanning_subgraph(&g, &triangle);
        if in_star {
            t.bump("exception_star");
        }
        if in_triangle {
            t.bump("exception_triangle");
        }
        if !in_star && !in_triangle {
            t.fail(&g);
        }
    });
    run.absorb(tally);
    Ok(run.finish())
}

/// Inserting a vertex into `complement(P_{n−1}²)` as the proof does gives
/// `complement(P_n²)`; sampled packings survive adding a vertex of degree
/// at most `⌊n/4⌋`.
pub fn verify_prop_2_1(n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    check_range(Claim::Prop21, n, cfg)?;
    let mut run = Run::new(Claim::Prop21, Some(n), cfg.shard_count());
    let target = Graph::path_square(n)?.complement();
    let base = Graph::path_square(n - 1)?.complement();
    let all = (1u32 << (n - 1)) - 1;

    for i in 0..=n - 5 {
        let x = 0b1111u32 << i;
        let g = base
            .add_vertex(all & !x)?
            .add_edge(i, i + 2)?
            .add_edge(i + 1, i + 3)?;
        run.tally.checked += 1;
        if is_isomorphic(&g, &target) {
            run.tally.bump("interior_insertions");
        } else {
            run.tally.fail(&g);
        }
    }
    for ends in [0b11u32, 0b11 << (n - 3)] {
        let g = base.add_vertex(all & !ends)?;
        run.tally.checked += 1;
        if is_isomorphic(&g, &target) {
            run.tally.bump("end_insertions");
        } else {
            run.tally.fail(&g);
        }
    }

    if n <= cfg.closure_max_n {
        let mut sample: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for h in EnumSpec::sparse_with_limit(n - 1, 4.min(binom2(n - 1)), 32)?.generate() {
            sample.insert(canonical_form(&h).bytes, h);
        }
        for id in crate::catalog::named_graphs() {
            let h = id.graph()?;
            if h.n() < n {
                let h = h.pad_to(n - 1)?;
                sample.insert(canonical_form(&h).bytes, h);
            }
        }
        let packing: Vec<Graph> = sample
            .into_values()
            .filter(|h| packs_with_path_square(h, n - 1).is_some())
            .collect();
        run.note("closure_sample", packing.len());
        let s_max = n / 4;
        let closure = sweep_graphs(cfg, packing, |h, t| {
            for s in 1..=s_max {
                for f in h.plus_set(s).expect("s within range") {
                    t.bump("closure_instances");
                    if packs_with_path_square(&f, n).is_none() {
                        t.fail(&f);
                    }
                }
            }
        });
        run.tally.failures.extend(closure.failures);
        for (k, v) in closure.counts {
            *run.tally.counts.entry(k).or_default() += v;
        }
    }
    Ok(run.finish())
}

/// `μ(G) ≥ n − 2` gives a Hamilton path unless `G = K_{n−1} ∪ K_1`.
pub fn verify_lem_3_1(n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    check_range(Claim::Lem31, n, cfg)?;
    let exception = Graph::complete(n - 1)?.pad_to(n)?;
    let mut run = Run::new(Claim::Lem31, Some(n), cfg.shard_count());
    let tally = sweep(cfg, &EnumSpec::all(n)?, |g, t| {
        if compare_mu(g, n as i64 - 2).verdict == Verdict::Less {
            return;
        }
        t.bump("at_least_n_minus_2");
        match hamilton_path(g) {
            Some(ord) if ord.verify(g) => t.bump("hamilton_path"),
            Some(_) => t.fail(g),
            None if is_isomorphic(g, &exception) => t.bump("exception"),
            None => t.fail(g),
        }
    });
    run.absorb(tally);
    Ok(run.finish())
}

/// Hong's bound on every connected class, with equality only for stars
/// and complete graphs.
pub fn verify_lem_3_2(n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    check_range(Claim::Lem32, n, cfg)?;
    let star = Graph::star(n)?;
    let complete = Graph::complete(n)?;
    let mut run = Run::new(Claim::Lem32, Some(n), cfg.shard_count());
    let tally = sweep(cfg, &EnumSpec::all(n)?, |g, t| {
        let Ok(bound) = hong_bound(g) else {
            t.bump("disconnected_skipped");
            return;
        };
        let mu = mu_estimate(g, 1e-12);
        let tight = (bound - mu).abs() <= 1e-9;
        let extremal = is_isomorphic(g, &star) || is_isomorphic(g, &complete);
        if mu > bound + 1e-9 || tight != extremal {
            t.fail(g);
        } else if tight {
            t.bump("equality");
        }
    });
    run.absorb(tally);
    Ok(run.finish())
}

/// `e(G) ≥ C(n−1, 2) + 1` gives a Hamilton cycle unless
/// `G = K_n − E(S_{n−1})` or `G = K_5 − E(K_3)`.
pub fn verify_ore(n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    check_range(Claim::Ore, n, cfg)?;
    let star = complete_minus(n, &Graph::star(n - 1)?)?;
    let triangle = complete_minus(n, &Graph::complete(3)?)?;
    let threshold = binom2(n - 1) + 1;
    let mut run = Run::new(Claim::Ore, Some(n), cfg.shard_count());
    let tally = sweep(cfg, &EnumSpec::all(n)?, |g, t| {
        if g.edge_count() < threshold {
            return;
        }
        t.bump("dense");
        match hamilton_cycle(g) {
            Some(ord) if ord.verify(g) => t.bump("hamilton_cycle"),
            Some(_) => t.fail(g),
            None if is_isomorphic(g, &star) => t.bump("exception_star"),
            None if n == 5 && is_isomorphic(g, &triangle) => t.bump("exception_triangle"),
            None => t.fail(g),
        }
    });
    run.absorb(tally);
    Ok(run.finish())
}

/// One packing fact: `guest` at order `n` packs (or provably does not).
#[derive(Debug, Clone)]
pub struct FigureCase {
    pub label: String,
    pub guest: Graph,
    pub n: usize,
    pub packs: bool,
}

fn case(label: impl Into<String>, guest: Graph, n: usize, packs: bool) -> FigureCase {
    FigureCase {
        label: label.into(),
        guest,
        n,
        packs,
    }
}

/// The guests drawn or named in the packing arguments, plus the star pair
/// that never packs.
pub fn figure_cases() -> Result<Vec<FigureCase>> {
    use NamedGraph::*;
    let mut cases = Vec::new();
    let star6 = forbidden_starred(6)?;
    for h in graphs_with_edges(6, 4)? {
        if first_contained_member(&h, &star6).is_none() {
            cases.push(case(format!("4-edge {}", graph6::encode(&h)), h, 6, true));
        }
    }
    let u = NamedGraph::union;
    let packing: Vec<(usize, Vec<NamedGraph>)> = vec![
        (
            7,
            vec![
                Complete(3),
                Cycle(4),
                Cycle(5),
                u(Complete(3), Path(3)),
                u(Complete(3), M2),
                u(CompletePlus(3), Complete(2)),
                G(1),
                G(2),
                G(3),
            ],
        ),
        (9, vec![CompleteMinus(4)]),
        (
            10,
            vec![
                Complete(4),
                W5,
                u(CompletePlus(4), Complete(2)),
                u(Complete(4), M2),
                u(Complete(4), Path(3)),
                G(4),
                G(5),
                G(6),
                G(7),
            ],
        ),
        (11, vec![Complete(4), W5, CompleteMinus(5), K33, G(8)]),
        (
            13,
            vec![Complete(5), CompletePlus(5), u(Complete(5), Complete(2))],
        ),
        (14, vec![CompleteMinus(6)]),
        (15, vec![CompleteMinus(6)]),
    ];
    for (n, ids) in packing {
        for id in ids {
            cases.push(case(id.to_string(), id.graph()?, n, true));
        }
    }
    for n in 14usize..=18 {
        let s = n.div_ceil(3);
        cases.push(case(format!("K{s}"), Graph::complete(s)?, n, true));
    }
    cases.push(case("K4", Graph::complete(4)?, 9, false));
    for n in 6..=14 {
        let star = Star(n - 1);
        cases.push(case(star.to_string(), star.graph()?, n, false));
        let pair = u(Star(n - 2), Complete(2));
        cases.push(case(pair.to_string(), pair.graph()?, n, false));
    }
    Ok(cases)
}

/// Finds and revalidates a certificate for every packing guest and an
/// exhaustive negative for every non-packing one.
pub fn verify_figures(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let mut run = Run::new(Claim::Figs, None, cfg.shard_count());
    let cases = figure_cases()?;
    let results: Vec<(usize, bool, bool)> = cfg.pool().install(|| {
        cases
            .par_iter()
            .enumerate()
            .map(|(i, c)| {
                let host = Graph::path_square(c.n)
                    .expect("order in range")
                    .complement();
                match packs_with_path_square(&c.guest, c.n) {
                    Some(phi) => {
                        let cert = Certificate::from(&phi);
                        (i, true, verify_certificate(&cert, Some(&c.guest), &host))
                    }
                    None => (i, false, true),
                }
            })
            .collect()
    });
    let mut lines = Vec::new();
    for (i, packs, certified) in results {
        let c = &cases[i];
        run.tally.checked += 1;
        let verdict = if packs { "packs" } else { "NONE" };
        lines.push(format!("n={} {}: {}", c.n, c.label, verdict));
        if packs != c.packs || !certified {
            run.tally.fail(&c.guest);
        } else if packs {
            run.tally.bump("certificates");
        } else {
            run.tally.bump("exhaustive_none");
        }
    }
    run.note("cases", lines);
    Ok(run.finish())
}

/// Dispatches a claim at one order; `n` is ignored for the figures suite.
pub fn run_claim(claim: Claim, n: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    match claim {
        Claim::Thm11 => verify_thm_1_1(n, cfg),
        Claim::Cor13 => verify_cor_1_3(n, cfg),
        Claim::Thm14 => verify_thm_1_4(n, cfg),
        Claim::Prop21 => verify_prop_2_1(n, cfg),
        Claim::Lem31 => verify_lem_3_1(n, cfg),
        Claim::Lem32 => verify_lem_3_2(n, cfg),
        Claim::Ore => verify_ore(n, cfg),
        Claim::Figs => verify_figures(cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> VerifyConfig {
        VerifyConfig {
            threads: 2,
            shards: 3,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn claim_ids_parse() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert_eq!("thm1_1".parse::<Claim>().unwrap(), Claim::Thm11);
        assert!("figures".parse::<Claim>().is_err());
        assert_eq!("figs".parse::<Claim>().unwrap(), Claim::Figs);
    }

    #[test]
    fn small_orders_pass() {
        let c = cfg();
        let r = verify_thm_1_1(7, &c).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.count("minimal_non_packing"), 3);
        let r = verify_cor_1_3(6, &c).unwrap();
        assert!(r.passed());
        assert_eq!(r.witnesses["max_edges"], json!(12));
        let r = verify_thm_1_4(6, &c).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(r.count("exception_star") > 0 && r.count("exception_triangle") > 0);
    }

    #[test]
    fn ranges_are_enforced() {
        let c = cfg();
        assert!(verify_thm_1_1(5, &c).is_err());
        assert!(verify_thm_1_1(12, &c).is_err());
        assert!(verify_lem_3_1(9, &c).is_err());
        assert!(verify_prop_2_1(6, &c).is_err());
    }

    #[test]
    fn reports_do_not_depend_on_sharding() {
        let one = VerifyConfig {
            threads: 1,
            shards: 1,
            ..VerifyConfig::default()
        };
        let a = verify_thm_1_1(8, &one).unwrap();
        let b = verify_thm_1_1(8, &cfg()).unwrap();
        assert_eq!(a.instances_checked, b.instances_checked);
        assert_eq!(a.counterexamples, b.counterexamples);
        let strip = |r: &VerificationReport| {
            let mut w = r.witnesses.clone();
            w.remove("elapsed_ms");
            w
        };
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn single_instance_checks() {
        let k3 = Graph::complete(3).unwrap();
        assert!(thm_1_1_holds(&k3, 6).unwrap());
        let g = complete_minus(6, &k3).unwrap();
        assert!(thm_1_4_holds(&g).unwrap());
        let k7 = Graph::complete(7).unwrap();
        assert!(thm_1_4_holds(&k7).unwrap());
    }

    #[test]
    fn spanning_subgraph_by_complements() {
        let star = complete_minus(6, &Graph::star(5).unwrap()).unwrap();
        let k5 = Graph::complete(5).unwrap().pad_to(6).unwrap();
        assert!(is_spanning_subgraph(&k5, &star));
        assert!(!is_spanning_subgraph(&Graph::complete(6).unwrap(), &star));
    }
}
