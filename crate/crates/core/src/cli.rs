//! Command-line front end: `verify`, `sweep`, `oracle-check` and `gen`.
//!
//! Reports on stdout depend only on the input and flags; timings go to
//! stderr. Work is spread over a rayon pool and collected back in input
//! order before anything is printed or written.

use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::certificate::{Certificate, Form};
use crate::connectivity::vertex_connectivity;
use crate::construct::{construct_chi_minor_with, construct_half_minor_with, ConstructOptions};
use crate::error::Error;
use crate::generate::{enumerate_alpha2_with, named, random_alpha2, DEFAULT_EXHAUSTIVE_CAP};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, read_graph6_lines, Graph6Line};
use crate::invariants::{alpha_at_most_two, chromatic_number_alpha2, clique_number, is_five_wheel};
use crate::minor::{find_minor_bruteforce, validate_model, MinorTarget, OracleLimits};
use crate::packing::{check_packing_conditions, find_p3_packing};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "alpha2-minors", version, about = "Minor certificates for graphs with independence number at most two")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and validate certificates for every graph6 line of the input.
    Verify(VerifyArgs),
    /// Exhaustive run over all graphs with α ≤ 2 for a range of orders.
    Sweep(SweepArgs),
    /// Compare the constructors against the brute-force minor search.
    OracleCheck(OracleArgs),
    /// Print graphs with α ≤ 2 as graph6.
    Gen(GenArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllPolicy {
    All,
    Only(usize),
}

impl FromStr for EllPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(EllPolicy::All);
        }
        match s.parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("expected `all` or a positive integer, got `{s}`")),
            Ok(l) => Ok(EllPolicy::Only(l)),
        }
    }
}

impl EllPolicy {
    fn ells(self, max: usize) -> Vec<usize> {
        match self {
            EllPolicy::All => (1..=max).collect(),
            EllPolicy::Only(l) if l <= max => vec![l],
            EllPolicy::Only(_) => Vec::new(),
        }
    }
}

/// `5` or `5..8` (inclusive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderRange(pub RangeInclusive<usize>);

impl FromStr for OrderRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected N or A..B, got `{s}`");
        match s.split_once("..") {
            None => s.trim().parse().map(|n| OrderRange(n..=n)).map_err(|_| bad()),
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b.trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(format!("empty range `{s}`"));
                }
                Ok(OrderRange(a..=b))
            }
        }
    }
}

/// `k=4` or `ell=2,m=3`.
pub fn parse_target(s: &str) -> Result<MinorTarget, String> {
    let mut k = None;
    let mut ell = None;
    let mut m = None;
    for part in s.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value in `{part}`"))?;
        let value: usize = value.trim().parse().map_err(|_| format!("not an integer: `{value}`"))?;
        match key.trim() {
            "k" => k = Some(value),
            "ell" | "l" => ell = Some(value),
            "m" => m = Some(value),
            other => return Err(format!("unknown key `{other}`")),
        }
    }
    let t = match (k, ell, m) {
        (Some(k), None, None) => MinorTarget::complete(k),
        (None, Some(l), Some(m)) => MinorTarget::clique_join_independent(l, m),
        _ => return Err(format!("expected `k=K` or `ell=L,m=M`, got `{s}`")),
    };
    t.map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// graph6 file; stdin when absent or `-`
    pub input: Option<PathBuf>,
    /// Use m = ceil(n/2) - ell instead of m = chi - ell.
    #[arg(long)]
    pub half: bool,
    #[arg(long, default_value = "all")]
    pub ell: EllPolicy,
    /// Directory for certificate files.
    #[arg(long)]
    pub emit: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Size cap for the brute-force fallback.
    #[arg(long, default_value_t = OracleLimits::default().max_vertices)]
    pub cap: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Orders to enumerate, `N` or `A..B` inclusive.
    pub range: OrderRange,
    #[arg(long, default_value = "all")]
    pub ell: EllPolicy,
    #[arg(long)]
    pub emit: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Largest order enumerated.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub input: Option<PathBuf>,
    /// `k=K` or `ell=L,m=M`
    #[arg(long, value_parser = parse_target)]
    pub target: MinorTarget,
    /// Prefer the half-order constructor when both forms match the target.
    #[arg(long)]
    pub half: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Size cap for the brute-force search.
    #[arg(long, default_value_t = OracleLimits::default().max_vertices)]
    pub cap: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Orders, `N` or `A..B` inclusive. Not used with --named.
    pub range: Option<OrderRange>,
    /// Random graphs from this seed instead of exhaustive enumeration.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Keep every labelled graph instead of one per isomorphism class.
    #[arg(long)]
    pub labeled: bool,
    #[arg(long)]
    pub named: Option<String>,
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub line: Option<usize>,
    pub graph6: String,
    pub ell: Option<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunReport {
    pub processed: usize,
    pub succeeded: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    /// Wall-clock seconds per phase; printed to stderr only.
    #[serde(skip)]
    pub timing: Vec<(String, f64)>,
}

impl RunReport {
    fn count(&mut self, status: Status) {
        self.processed += 1;
        match status {
            Status::Succeeded => self.succeeded += 1,
            Status::Failed => self.failed += 1,
            Status::Skipped => self.skipped += 1,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            EXIT_OK
        } else {
            EXIT_FAILURES
        }
    }

    fn write_summary(&self, err: &mut dyn Write) -> io::Result<()> {
        writeln!(
            err,
            "processed {} succeeded {} failed {} skipped {}",
            self.processed, self.succeeded, self.failed, self.skipped
        )?;
        for (phase, secs) in &self.timing {
            writeln!(err, "time {phase}: {secs:.3}s")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Succeeded,
    Failed,
    Skipped,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Succeeded => "succeeded",
            Status::Failed => "failed",
            Status::Skipped => "skipped",
        }
    }
}

/// `<dir>/<first 16 hex digits of sha256(graph6)>/<form>-ell<ℓ>.json`
pub fn certificate_path(dir: &Path, cert: &Certificate) -> PathBuf {
    let digest = Sha256::digest(cert.input_graph6.as_bytes());
    let key = hex::encode(&digest[..8]);
    dir.join(key).join(format!("{}-ell{}.json", cert.form, cert.ell))
}

fn emit_certificates(dir: Option<&Path>, certs: &[Certificate]) -> io::Result<()> {
    let Some(dir) = dir else { return Ok(()) };
    for c in certs {
        let path = certificate_path(dir, c);
        fs::create_dir_all(path.parent().expect("certificate path has a parent"))?;
        fs::write(&path, c.to_json() + "\n")?;
    }
    Ok(())
}

fn pool(jobs: usize) -> io::Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(io::Error::other)
}

fn read_input(path: Option<&Path>, stdin: &mut dyn BufRead) -> io::Result<Vec<Graph6Line>> {
    match path {
        Some(p) if p != Path::new("-") => read_graph6_lines(BufReader::new(fs::File::open(p)?)),
        _ => read_graph6_lines(stdin),
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::other)?;
    writeln!(out)
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

/// Parses arguments and runs; returns the process exit code.
pub fn main_with(args: impl IntoIterator<Item = String>, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match run(&cli, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    match &cli.command {
        Command::Verify(a) => cmd_verify(a, stdin, out, err).map(|r| r.exit_code()),
        Command::Sweep(a) => cmd_sweep(a, out, err).map(|r| r.exit_code()),
        Command::OracleCheck(a) => cmd_oracle_check(a, stdin, out, err).map(|r| r.exit_code()),
        Command::Gen(a) => cmd_gen(a, out).map(|()| EXIT_OK),
    }
}

#[derive(Clone, Debug, Serialize)]
struct VerifyRow {
    line: usize,
    graph6: String,
    n: Option<usize>,
    chi: Option<usize>,
    status: Status,
    ells: Vec<usize>,
    reason: String,
    #[serde(skip)]
    failures: Vec<Failure>,
    #[serde(skip)]
    certificates: Vec<Certificate>,
}

fn verify_one(item: &Graph6Line, form: Form, policy: EllPolicy, opts: &ConstructOptions) -> VerifyRow {
    let mut row = VerifyRow {
        line: item.line,
        graph6: item.text.clone(),
        n: None,
        chi: None,
        status: Status::Succeeded,
        ells: Vec::new(),
        reason: String::new(),
        failures: Vec::new(),
        certificates: Vec::new(),
    };
    let g = match &item.graph {
        Ok(g) => g,
        Err(e) => {
            row.status = Status::Failed;
            row.reason = format!("malformed graph6 at line {}: {e}", item.line);
            row.failures.push(Failure { line: Some(item.line), graph6: item.text.clone(), ell: None, reason: row.reason.clone() });
            return row;
        }
    };
    row.n = Some(g.n());
    if !alpha_at_most_two(g) {
        row.status = Status::Skipped;
        row.reason = "independence number at least 3".into();
        return row;
    }
    let chi = chromatic_number_alpha2(g).expect("alpha checked");
    row.chi = Some(chi);
    let max = match form {
        Form::Half => g.n().div_ceil(2) / 2,
        Form::Chi => chi / 2,
    };
    row.ells = policy.ells(max);
    if row.ells.is_empty() && matches!(policy, EllPolicy::Only(_)) {
        row.status = Status::Skipped;
        row.reason = format!("ell outside 1..={max}");
        return row;
    }
    for &ell in &row.ells {
        let result = match form {
            Form::Half => construct_half_minor_with(g, ell, opts),
            Form::Chi => construct_chi_minor_with(g, ell, opts),
        };
        match result {
            Ok(c) => row.certificates.push(c),
            Err(e) => row.failures.push(Failure {
                line: Some(item.line),
                graph6: item.text.clone(),
                ell: Some(ell),
                reason: e.to_string(),
            }),
        }
    }
    if !row.failures.is_empty() {
        row.status = Status::Failed;
        row.reason = row.failures.iter().map(|f| format!("ell={}: {}", f.ell.unwrap_or(0), f.reason)).collect::<Vec<_>>().join("; ");
    }
    row
}

pub fn cmd_verify(a: &VerifyArgs, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<RunReport> {
    let t0 = Instant::now();
    let items = read_input(a.input.as_deref(), stdin)?;
    let form = if a.half { Form::Half } else { Form::Chi };
    let opts = ConstructOptions { oracle: OracleLimits { max_vertices: a.cap }, deadline: None };
    let t1 = Instant::now();
    let rows: Vec<VerifyRow> = pool(a.jobs)?.install(|| {
        items.par_iter().map(|it| verify_one(it, form, a.ell, &opts)).collect()
    });
    let t2 = Instant::now();

    let mut report = RunReport::default();
    for r in &rows {
        report.count(r.status);
        report.failures.extend(r.failures.iter().cloned());
        emit_certificates(a.emit.as_deref(), &r.certificates)?;
    }
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                command: &'static str,
                form: Form,
                report: &'a RunReport,
                graphs: &'a [VerifyRow],
            }
            write_json(out, &Out { command: "verify", form, report: &report, graphs: &rows })?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["line", "graph6", "n", "chi", "status", "ells", "reason"]).map_err(csv_err)?;
            for r in &rows {
                let ells = r.ells.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
                w.write_record([
                    r.line.to_string(),
                    r.graph6.clone(),
                    r.n.map(|n| n.to_string()).unwrap_or_default(),
                    r.chi.map(|c| c.to_string()).unwrap_or_default(),
                    r.status.as_str().to_string(),
                    ells,
                    r.reason.clone(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
    }
    report.timing = vec![
        ("read".into(), (t1 - t0).as_secs_f64()),
        ("construct".into(), (t2 - t1).as_secs_f64()),
        ("report".into(), t2.elapsed().as_secs_f64()),
    ];
    report.write_summary(err)?;
    Ok(report)
}

/// Outcome of the packing characterisation on one (graph, ℓ).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Iff {
    Agree,
    Mismatch,
    Exception,
}

#[derive(Clone, Debug)]
struct SweepEll {
    ell: usize,
    half: Option<bool>,
    chi: Option<bool>,
    iff: Iff,
    lemma: Option<bool>,
}

struct SweepGraph {
    n: usize,
    per_ell: Vec<SweepEll>,
    failures: Vec<Failure>,
    certificates: Vec<Certificate>,
}

fn sweep_one(g: &Graph, ells: &[usize], opts: &ConstructOptions) -> SweepGraph {
    let n = g.n();
    let graph6 = emit_graph6(g);
    let chi = chromatic_number_alpha2(g).expect("enumerated graphs have alpha <= 2");
    let kappa = vertex_connectivity(g);
    let omega = clique_number(g).size;
    let five_wheel = is_five_wheel(g);
    let mut s = SweepGraph { n, per_ell: Vec::new(), failures: Vec::new(), certificates: Vec::new() };
    let fail = |ell: usize, reason: String, s: &mut SweepGraph| {
        s.failures.push(Failure { line: None, graph6: graph6.clone(), ell: Some(ell), reason });
    };
    for &ell in ells {
        let mut rec = SweepEll { ell, half: None, chi: None, iff: Iff::Agree, lemma: None };
        if 2 * ell <= n.div_ceil(2) {
            match construct_half_minor_with(g, ell, opts) {
                Ok(c) => {
                    rec.half = Some(true);
                    s.certificates.push(c);
                }
                Err(e) => {
                    rec.half = Some(false);
                    fail(ell, format!("half: {e}"), &mut s);
                }
            }
        }
        if 2 * ell <= chi {
            match construct_chi_minor_with(g, ell, opts) {
                Ok(c) => {
                    rec.chi = Some(true);
                    s.certificates.push(c);
                }
                Err(e) => {
                    rec.chi = Some(false);
                    fail(ell, format!("chi: {e}"), &mut s);
                }
            }
        }
        let packing = find_p3_packing(g, ell).is_some();
        let conditions = check_packing_conditions(g, ell).expect("alpha <= 2").all_hold();
        rec.iff = if ell == 2 && five_wheel {
            if conditions && !packing {
                Iff::Exception
            } else {
                fail(ell, "five-wheel exception did not behave as stated".into(), &mut s);
                Iff::Mismatch
            }
        } else if packing == conditions {
            Iff::Agree
        } else {
            fail(ell, format!("packing {packing} but conditions {conditions}"), &mut s);
            Iff::Mismatch
        };
        let lemma_applies = n % 2 == 1
            && 4 * kappa >= n - 1
            && omega < n.div_ceil(2)
            && n > 4 * ell
            && ell <= n.div_ceil(4);
        if lemma_applies {
            rec.lemma = Some(packing);
            if !packing {
                fail(ell, "packing lemma hypotheses hold but no packing".into(), &mut s);
            }
        }
        s.per_ell.push(rec);
    }
    s
}

#[derive(Clone, Debug, Default, Serialize)]
struct SweepRow {
    n: usize,
    ell: usize,
    graphs: usize,
    half_applicable: usize,
    half_ok: usize,
    chi_applicable: usize,
    chi_ok: usize,
    iff_agree: usize,
    iff_exception: usize,
    iff_mismatch: usize,
    lemma_applicable: usize,
    lemma_ok: usize,
    failures: String,
}

pub fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<RunReport> {
    let opts = ConstructOptions::default();
    let pool = pool(a.jobs)?;
    let mut report = RunReport::default();
    let mut rows = Vec::new();
    for n in a.range.0.clone() {
        let t0 = Instant::now();
        let graphs = enumerate_alpha2_with(n, true, a.cap).map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))?;
        let t1 = Instant::now();
        let ells = a.ell.ells((n / 2).max(1));
        let results: Vec<SweepGraph> =
            pool.install(|| graphs.par_iter().map(|g| sweep_one(g, &ells, &opts)).collect());
        for &ell in &ells {
            let mut row = SweepRow { n, ell, graphs: graphs.len(), ..Default::default() };
            let mut reasons = Vec::new();
            for r in &results {
                let Some(e) = r.per_ell.iter().find(|e| e.ell == ell) else { continue };
                row.half_applicable += e.half.is_some() as usize;
                row.half_ok += (e.half == Some(true)) as usize;
                row.chi_applicable += e.chi.is_some() as usize;
                row.chi_ok += (e.chi == Some(true)) as usize;
                row.iff_agree += (e.iff == Iff::Agree) as usize;
                row.iff_exception += (e.iff == Iff::Exception) as usize;
                row.iff_mismatch += (e.iff == Iff::Mismatch) as usize;
                row.lemma_applicable += e.lemma.is_some() as usize;
                row.lemma_ok += (e.lemma == Some(true)) as usize;
                reasons.extend(
                    r.failures.iter().filter(|f| f.ell == Some(ell)).map(|f| format!("{}: {}", f.graph6, f.reason)),
                );
            }
            row.failures = reasons.join("; ");
            rows.push(row);
        }
        for r in &results {
            debug_assert_eq!(r.n, n);
            report.count(if r.failures.is_empty() { Status::Succeeded } else { Status::Failed });
            report.failures.extend(r.failures.iter().cloned());
            emit_certificates(a.emit.as_deref(), &r.certificates)?;
        }
        report.timing.push((format!("n={n} enumerate"), (t1 - t0).as_secs_f64()));
        report.timing.push((format!("n={n} check"), t1.elapsed().as_secs_f64()));
    }
    match a.format {
        Format::Csv => {
            let mut w = csv_writer(out);
            for r in &rows {
                w.serialize(r).map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                command: &'static str,
                report: &'a RunReport,
                rows: &'a [SweepRow],
            }
            write_json(out, &Out { command: "sweep", report: &report, rows: &rows })?;
        }
    }
    report.write_summary(err)?;
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
struct OracleRow {
    line: usize,
    graph6: String,
    status: Status,
    /// `present`, `absent`, `capped` or empty when not run.
    oracle: String,
    /// `half`, `chi` or empty when the target is not of either form.
    constructor: String,
    reason: String,
    #[serde(skip)]
    certificate: Option<Certificate>,
}

fn oracle_one(item: &Graph6Line, target: MinorTarget, prefer_half: bool, limits: &OracleLimits) -> OracleRow {
    let mut row = OracleRow {
        line: item.line,
        graph6: item.text.clone(),
        status: Status::Skipped,
        oracle: String::new(),
        constructor: String::new(),
        reason: String::new(),
        certificate: None,
    };
    let g = match &item.graph {
        Ok(g) => g,
        Err(e) => {
            row.status = Status::Failed;
            row.reason = format!("malformed graph6 at line {}: {e}", item.line);
            return row;
        }
    };
    if !alpha_at_most_two(g) {
        row.reason = "independence number at least 3".into();
        return row;
    }
    let oracle = match find_minor_bruteforce(g, target, limits) {
        Ok(m) => m,
        Err(e @ Error::OracleCap { .. }) => {
            row.oracle = "capped".into();
            row.reason = e.to_string();
            return row;
        }
        Err(e) => {
            row.status = Status::Failed;
            row.reason = e.to_string();
            return row;
        }
    };
    row.oracle = if oracle.is_some() { "present" } else { "absent" }.into();

    let chi = chromatic_number_alpha2(g).expect("alpha checked");
    let h = g.n().div_ceil(2);
    let form = match target {
        MinorTarget::CliqueJoinIndependent { ell, m } => {
            let half_fits = 2 * ell <= h && m == h - ell;
            let chi_fits = 2 * ell <= chi && m == chi - ell;
            match (half_fits, chi_fits) {
                (true, true) if prefer_half => Some((Form::Half, ell)),
                (_, true) => Some((Form::Chi, ell)),
                (true, false) => Some((Form::Half, ell)),
                (false, false) => None,
            }
        }
        MinorTarget::Complete { .. } => None,
    };
    let Some((form, ell)) = form else {
        row.reason = "target not of a constructible form".into();
        return row;
    };
    row.constructor = form.to_string();
    let built = match form {
        Form::Half => construct_half_minor_with(g, ell, &ConstructOptions { oracle: *limits, deadline: None }),
        Form::Chi => construct_chi_minor_with(g, ell, &ConstructOptions { oracle: *limits, deadline: None }),
    };
    match built {
        Err(e) => {
            row.status = Status::Failed;
            row.reason = format!("constructor failed: {e}");
        }
        Ok(c) if validate_model(g, target, &c.model).is_err() => {
            row.status = Status::Failed;
            row.reason = "certificate does not validate".into();
        }
        Ok(_) if oracle.is_none() => {
            row.status = Status::Failed;
            row.reason = "constructor succeeded but the oracle found no model".into();
        }
        Ok(c) => {
            row.status = Status::Succeeded;
            row.certificate = Some(c);
        }
    }
    row
}

pub fn cmd_oracle_check(a: &OracleArgs, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<RunReport> {
    let t0 = Instant::now();
    let items = read_input(a.input.as_deref(), stdin)?;
    let limits = OracleLimits { max_vertices: a.cap };
    let rows: Vec<OracleRow> = pool(a.jobs)?.install(|| {
        items.par_iter().map(|it| oracle_one(it, a.target, a.half, &limits)).collect()
    });
    let mut report = RunReport::default();
    for r in &rows {
        report.count(r.status);
        if r.status == Status::Failed {
            report.failures.push(Failure {
                line: Some(r.line),
                graph6: r.graph6.clone(),
                ell: r.certificate.as_ref().map(|c| c.ell),
                reason: r.reason.clone(),
            });
        }
    }
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                command: &'static str,
                target: MinorTarget,
                report: &'a RunReport,
                graphs: &'a [OracleRow],
            }
            write_json(out, &Out { command: "oracle-check", target: a.target, report: &report, graphs: &rows })?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            for r in &rows {
                w.serialize(r).map_err(csv_err)?;
            }
            w.flush()?;
        }
    }
    report.timing.push(("oracle-check".into(), t0.elapsed().as_secs_f64()));
    report.write_summary(err)?;
    Ok(report)
}

pub fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> io::Result<()> {
    let invalid = |e: Error| io::Error::new(io::ErrorKind::InvalidInput, e);
    if let Some(desc) = &a.named {
        let g = named(desc).map_err(invalid)?;
        writeln!(out, "{}", emit_graph6(&g))?;
        return Ok(());
    }
    let Some(range) = &a.range else {
        return Err(io::Error::new(io::ErrorKind::InvalidInput, "gen needs an order range or --named"));
    };
    for n in range.0.clone() {
        let graphs = match a.seed {
            Some(seed) => (0..a.count as u64)
                .map(|i| random_alpha2(n, seed.wrapping_add(i)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(invalid)?,
            None => enumerate_alpha2_with(n, !a.labeled, a.cap).map_err(invalid)?,
        };
        for g in graphs {
            writeln!(out, "{}", emit_graph6(&g))?;
        }
    }
    Ok(())
}
