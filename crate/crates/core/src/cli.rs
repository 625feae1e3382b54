//! The `sqlab` command line.
//!
//! Exit codes: 0 on success or PASS, 2 when a claim FAILs, 3 for invalid
//! input or an order outside the allowed range.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::catalog::{forbidden_base, forbidden_starred, named_graphs, NamedGraph};
use crate::embed::{
    contains_path_square, embedding_dot, ordering_dot, packs_with_path_square, verify_certificate,
    Certificate,
};
use crate::enumerate::{graphs_with_edges, shard_of, EnumSpec, SPARSE_MAX_N};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::{compare_mu, mu_estimate, DEFAULT_TOL};
use crate::verify::{run_claim, verify_figures, Claim, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

/// Environment variable raising the sparse enumeration order limit.
pub const MAX_N_ENV: &str = "SQLAB_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "sqlab",
    version,
    about = "Square-path packing and spectral checks"
)]
pub struct Cli {
    /// Worker threads for verification (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a claim harness at one order.
    Verify(VerifyArgs),
    /// Pack a guest with P_n^2 (embed it into the complement of P_n^2).
    Pack(PackArgs),
    /// Search for a spanning P_n^2; reads graph6 lines from stdin without --graph6.
    Contains(ContainsArgs),
    /// Floating-point spectral radius estimate.
    Mu(MuArgs),
    /// Exact comparison of the spectral radius with an integer.
    MuCmp(MuCmpArgs),
    /// List isomorphism classes on n vertices with bounded edge count.
    Enum(EnumArgs),
    /// Named graphs and forbidden families.
    Catalog(CatalogArgs),
    /// Packing certificates for the figure guests.
    Figures(FiguresArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claim id, e.g. thm1_1, cor1_3, thm1_4, prop2_1, lem3_1, lem3_2, ore, figs.
    #[arg(long)]
    pub claim: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub shards: usize,
    /// Upper order for the exhaustive harnesses.
    #[arg(long, default_value_t = 11)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct PackArgs {
    #[arg(long)]
    pub n: usize,
    /// Catalog tag such as k4, w5, g8, s5+k2.
    #[arg(long, conflicts_with = "graph6", required_unless_present = "graph6")]
    pub guest: Option<String>,
    #[arg(long)]
    pub graph6: Option<String>,
    /// Write a DOT drawing of the packing.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Write the certificate as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ContainsArgs {
    #[arg(long)]
    pub graph6: Option<String>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MuArgs {
    #[arg(long)]
    pub graph6: String,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct MuCmpArgs {
    #[arg(long)]
    pub graph6: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub max_edges: usize,
    /// Print graph6 lines (default prints only counts).
    #[arg(long)]
    pub graph6: bool,
    /// Only classes with exactly max-edges edges.
    #[arg(long)]
    pub exact: bool,
    /// Shard selector `i/k` with 0 ≤ i < k.
    #[arg(long)]
    pub shard: Option<String>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// Print every named graph and the families for n = 6..=14.
    #[arg(long)]
    pub dump: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct FiguresArgs {
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Write one DOT file per packing certificate into this directory.
    #[arg(long)]
    pub dot_dir: Option<PathBuf>,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(EXIT_INVALID, e.to_string())
    }
}

impl From<io::Error> for Exit {
    fn from(e: io::Error) -> Self {
        Exit(EXIT_INVALID, e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Exit>;

/// Runs with the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    run_with(args, &mut input, &mut out, &mut err)
}

/// Runs with explicit streams; returns the exit code.
pub fn run_with<I, T>(
    args: I,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let threads = cli.threads.unwrap_or(0);
    let result = match cli.command {
        Command::Verify(a) => verify(a, threads, out),
        Command::Pack(a) => pack(a, out),
        Command::Contains(a) => contains(a, input, out),
        Command::Mu(a) => mu(a, out),
        Command::MuCmp(a) => mu_cmp(a, input, out),
        Command::Enum(a) => enumerate(a, out),
        Command::Catalog(a) => catalog(a, out),
        Command::Figures(a) => figures(a, threads, out),
    };
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn parse_graph(text: &str) -> std::result::Result<Graph, Exit> {
    Ok(graph6::decode(text.trim())?)
}

fn verify(a: VerifyArgs, threads: usize, out: &mut dyn Write) -> CmdResult {
    let claim: Claim = a.claim.parse()?;
    let cfg = VerifyConfig {
        threads,
        shards: a.shards,
        max_n: a.max_n,
        ..VerifyConfig::default()
    };
    let n = match (claim, a.n) {
        (Claim::Figs, n) => n.unwrap_or(0),
        (_, Some(n)) => n,
        (_, None) => return Err(Exit(EXIT_INVALID, "--n is required".into())),
    };
    let report = run_claim(claim, n, &cfg)?;
    writeln!(out, "{}", report.summary())?;
    for g in &report.counterexamples {
        writeln!(out, "counterexample {g}")?;
    }
    if let Some(path) = a.json {
        fs::write(path, report.to_json())?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn pack(a: PackArgs, out: &mut dyn Write) -> CmdResult {
    let (name, guest) = match (&a.guest, &a.graph6) {
        (Some(tag), _) => {
            let id: NamedGraph = tag.parse()?;
            (id.to_string(), id.graph()?)
        }
        (None, Some(g6)) => (g6.clone(), parse_graph(g6)?),
        (None, None) => return Err(Exit(EXIT_INVALID, "--guest or --graph6 required".into())),
    };
    let host = Graph::path_square(a.n)?.complement();
    if guest.n() > a.n {
        return Err(Exit(
            EXIT_INVALID,
            format!("guest has {} vertices, more than n = {}", guest.n(), a.n),
        ));
    }
    match packs_with_path_square(&guest, a.n) {
        None => writeln!(out, "NONE")?,
        Some(phi) => {
            let cert = Certificate::from(&phi);
            debug_assert!(verify_certificate(&cert, Some(&guest), &host));
            writeln!(out, "{}", cert.to_json())?;
            if let Some(path) = a.dot {
                fs::write(path, embedding_dot(&name, &guest, &host, &phi))?;
            }
            if let Some(path) = a.json {
                fs::write(path, cert.to_json())?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn contains(a: ContainsArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    if let Some(g6) = a.graph6 {
        let g = parse_graph(&g6)?;
        match contains_path_square(&g) {
            None => writeln!(out, "NONE")?,
            Some(ord) => {
                let seq: Vec<String> = ord.seq().iter().map(usize::to_string).collect();
                writeln!(out, "{}", seq.join(" "))?;
                if let Some(path) = a.dot {
                    fs::write(path, ordering_dot("G", &g, &ord))?;
                }
                if let Some(path) = a.json {
                    fs::write(path, Certificate::from(&ord).to_json())?;
                }
            }
        }
        return Ok(EXIT_OK);
    }
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph(&line)?;
        let verdict = match contains_path_square(&g) {
            None => "NONE".to_string(),
            Some(ord) => Certificate::from(&ord).to_json(),
        };
        writeln!(out, "{}\t{}", line.trim(), verdict)?;
    }
    Ok(EXIT_OK)
}

fn mu(a: MuArgs, out: &mut dyn Write) -> CmdResult {
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(Exit(EXIT_INVALID, "--tol must be positive".into()));
    }
    let g = parse_graph(&a.graph6)?;
    writeln!(out, "{:.12}", mu_estimate(&g, a.tol))?;
    Ok(EXIT_OK)
}

fn mu_cmp_line(g: &Graph, k: i64) -> String {
    let c = compare_mu(g, k);
    format!(
        "{}\tk={} roots_above={} sturm_lengths={:?} max_coeff_bits={}",
        c.verdict, c.k, c.roots_above, c.sturm_lengths, c.max_coeff_bits
    )
}

fn mu_cmp(a: MuCmpArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    if let Some(g6) = a.graph6 {
        let g = parse_graph(&g6)?;
        writeln!(out, "{}", mu_cmp_line(&g, a.k))?;
        return Ok(EXIT_OK);
    }
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph(&line)?;
        writeln!(out, "{}\t{}", line.trim(), mu_cmp_line(&g, a.k))?;
    }
    Ok(EXIT_OK)
}

fn parse_shard(text: &str) -> std::result::Result<(usize, usize), Exit> {
    let bad = || Exit(EXIT_INVALID, format!("bad shard '{text}', expected i/k"));
    let (i, k) = text.split_once('/').ok_or_else(bad)?;
    let (i, k): (usize, usize) = (i.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?);
    if k == 0 || i >= k {
        return Err(bad());
    }
    Ok((i, k))
}

fn order_limit() -> std::result::Result<usize, Exit> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| Exit(EXIT_INVALID, format!("{MAX_N_ENV} must be an integer"))),
        Err(_) => Ok(SPARSE_MAX_N),
    }
}

fn enumerate(a: EnumArgs, out: &mut dyn Write) -> CmdResult {
    let spec = EnumSpec::sparse_with_limit(a.n, a.max_edges, order_limit()?)?;
    let shard = a.shard.as_deref().map(parse_shard).transpose()?;
    let graphs = if a.exact {
        graphs_with_edges(spec.n, spec.max_edges)?
    } else {
        spec.generate()
    };
    let mut count = 0usize;
    for g in graphs {
        if let Some((i, k)) = shard {
            if shard_of(&g, k) != i {
                continue;
            }
        }
        count += 1;
        if a.graph6 {
            writeln!(out, "{g}")?;
        }
    }
    if !a.graph6 {
        writeln!(out, "{count}")?;
    }
    Ok(EXIT_OK)
}

fn catalog(a: CatalogArgs, out: &mut dyn Write) -> CmdResult {
    if !a.dump {
        return Err(Exit(EXIT_INVALID, "nothing to do; pass --dump".into()));
    }
    let mut graphs = Vec::new();
    for id in named_graphs() {
        let g = id.graph()?;
        graphs.push(json!({
            "tag": id.tag(),
            "name": id.to_string(),
            "n": g.n(),
            "edges": g.edge_count(),
            "graph6": g.to_string(),
        }));
    }
    let mut families = Vec::new();
    for n in 6..=14 {
        let tags = |f: crate::catalog::ForbiddenFamily| {
            f.members.iter().map(|m| m.id.tag()).collect::<Vec<_>>()
        };
        families.push(json!({
            "n": n,
            "t": crate::catalog::t_of(n),
            "base": tags(forbidden_base(n)?),
            "starred": tags(forbidden_starred(n)?),
        }));
    }
    if a.json {
        let doc = json!({"graphs": graphs, "families": families});
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        return Ok(EXIT_OK);
    }
    for g in &graphs {
        writeln!(
            out,
            "{:<10} {:<10} n={:<2} e={:<2} {}",
            g["tag"].as_str().unwrap_or(""),
            g["name"].as_str().unwrap_or(""),
            g["n"],
            g["edges"],
            g["graph6"].as_str().unwrap_or("")
        )?;
    }
    for f in &families {
        writeln!(
            out,
            "n={} t={} base={} starred={}",
            f["n"], f["t"], f["base"], f["starred"]
        )?;
    }
    Ok(EXIT_OK)
}

fn figures(a: FiguresArgs, threads: usize, out: &mut dyn Write) -> CmdResult {
    let cfg = VerifyConfig {
        threads,
        ..VerifyConfig::default()
    };
    let report = verify_figures(&cfg)?;
    if let Some(lines) = report.witnesses.get("cases").and_then(|v| v.as_array()) {
        for l in lines {
            writeln!(out, "{}", l.as_str().unwrap_or(""))?;
        }
    }
    writeln!(out, "{}", report.summary())?;
    if let Some(dir) = a.dot_dir {
        fs::create_dir_all(&dir)?;
        for (i, c) in crate::verify::figure_cases()?.iter().enumerate() {
            let host = Graph::path_square(c.n)?.complement();
            if let Some(phi) = packs_with_path_square(&c.guest, c.n) {
                let name = format!("fig{i:02}_n{}", c.n);
                fs::write(
                    dir.join(format!("{name}.dot")),
                    embedding_dot(&name, &c.guest, &host, &phi),
                )?;
            }
        }
    }
    if let Some(path) = a.json {
        fs::write(path, report.to_json())?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}
