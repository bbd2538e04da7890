//! The `degbound` command line.
//!
//! Flags take precedence over `DEGBOUND_*` environment variables, which take
//! precedence over defaults. Exit codes: 0 success, 1 an audit verdict or
//! closed form disagreed with its pinned expectation, 2 usage or input
//! errors, 3 I/O errors.

mod families;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

pub use families::{family_table, FamilyRow, FAMILY_CAP};
pub use render::{Cell, Format, Table};

use crate::bounds::{
    audit_catalog, builtin_catalog, BoundSpec, ExpectationMismatch, Expectations, SharpnessReport, DEFAULT_TOLERANCE,
};
use crate::enumerate::{Filters, Population, ENUMERATION_CAP};
use crate::graph::{chromatic_number, parse_graph6, to_graph6, Graph};
use crate::index::{all_indices, IndexId};
use crate::proof::{proof_audit, ClaimVerdict, ProofReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "degbound", version, about = "Degree-based topological indices and the inequalities between them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, env = "DEGBOUND_FORMAT", default_value = "table")]
    pub format: Format,

    /// Also write the output to DIR/<command>.<ext>.
    #[arg(long, global = true, value_name = "DIR", env = "DEGBOUND_OUT")]
    pub out: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N", env = "DEGBOUND_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    /// Relative tolerance for equality and violation decisions.
    #[arg(long, global = true, value_name = "REAL", env = "DEGBOUND_TOL", default_value_t = DEFAULT_TOLERANCE, value_parser = positive_real)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Index table for each input graph.
    Compute(ComputeArgs),
    /// Audit bounds and compare verdicts with pinned expectations.
    Verify(AuditArgs),
    /// Audit bounds and report, without comparing to expectations.
    Audit(AuditArgs),
    /// Closed-form index values of named families against evaluation.
    Families(FamiliesArgs),
    /// Extrema and monotonicity of per-edge ratios.
    Proofs(ProofsArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// graph6 strings.
    #[arg(value_name = "GRAPH6")]
    pub graphs: Vec<String>,

    /// graph6 lines or an edge list.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Enumerate connected graphs of order N, or of every order in A..B.
    #[arg(long, value_name = "N|A..B", conflicts_with = "file", required_unless_present = "file", value_parser = order_range)]
    pub enumerate: Option<RangeInclusive<usize>>,

    /// Population file: graph6 lines or one edge list.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,

    /// Comma-separated bound ids, or `all`.
    #[arg(long, value_name = "LIST", env = "DEGBOUND_BOUNDS", default_value = "all")]
    pub bounds: String,

    /// Keep graphs with minimum degree at least K.
    #[arg(long, value_name = "K")]
    pub min_degree: Option<usize>,

    /// Keep graphs with maximum degree at most 4.
    #[arg(long)]
    pub molecular: bool,

    /// Expectation file (default: the bundled one).
    #[arg(long, value_name = "PATH", env = "DEGBOUND_EXPECT")]
    pub expect: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamiliesArgs {
    /// Family parameters N or A..B (at most 200).
    #[arg(long, value_name = "N|A..B", default_value = "1..200", value_parser = family_range)]
    pub range: RangeInclusive<usize>,
}

#[derive(Debug, Args)]
pub struct ProofsArgs {
    /// Order whose degree grid (1..=n-1) is scanned.
    #[arg(long, short, value_name = "N", default_value_t = 20)]
    pub n: usize,
}

fn positive_real(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("tolerance must be a positive finite number".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if r.is_empty() {
        return Err(format!("empty range {s}"));
    }
    Ok(r)
}

fn order_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let r = parse_range(s)?;
    if *r.start() < 1 || *r.end() > ENUMERATION_CAP {
        return Err(format!("orders must lie in 1..{ENUMERATION_CAP}"));
    }
    Ok(r)
}

fn family_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let r = parse_range(s)?;
    if *r.end() > FAMILY_CAP {
        return Err(format!("family parameters are capped at {FAMILY_CAP}"));
    }
    Ok(r)
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: format!("{}: {e}", path.display()),
        }
    }
}

/// Rendered command output plus the exit code it implies.
pub struct Output {
    pub json: serde_json::Value,
    pub table: Table,
    pub code: i32,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.table.to_csv(),
            Format::Table => self.table.to_text(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let text = out.render(cli.format);
            if let Some(dir) = &cli.out {
                let path = dir.join(format!("{}.{}", command_name(&cli.command), cli.format.extension()));
                if let Err(e) = std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, &text)) {
                    let _ = writeln!(stderr, "error: {}", Failure::io(&path, e).message);
                    return EXIT_IO;
                }
            }
            if stdout.write_all(text.as_bytes()).is_err() {
                return EXIT_IO;
            }
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Compute(_) => "compute",
        Command::Verify(_) => "verify",
        Command::Audit(_) => "audit",
        Command::Families(_) => "families",
        Command::Proofs(_) => "proofs",
    }
}

/// Runs a parsed command on a pool of `cli.jobs` threads.
pub fn execute(cli: &Cli) -> Result<Output, Failure> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = pool
        .build()
        .map_err(|e| Failure::usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Verify(a) => cmd_audit(a, cli.tol, true),
        Command::Audit(a) => cmd_audit(a, cli.tol, false),
        Command::Families(a) => Ok(cmd_families(a.range.clone())),
        Command::Proofs(a) => cmd_proofs(a.n, cli.tol),
    })
}

fn read_file(path: &Path) -> Result<Population, Failure> {
    match Population::from_file(path) {
        Err(e) => Err(Failure::io(path, e)),
        Ok(Err(e)) => Err(Failure::usage(format!("{}: {e}", path.display()))),
        Ok(Ok(p)) => Ok(p),
    }
}

#[derive(Serialize)]
struct ComputeRow {
    graph6: String,
    n: usize,
    m: usize,
    delta: usize,
    max_degree: usize,
    regular: bool,
    connected: bool,
    chi: Option<usize>,
    indices: serde_json::Map<String, serde_json::Value>,
}

pub fn cmd_compute(a: &ComputeArgs) -> Result<Output, Failure> {
    let mut graphs: Vec<Graph> = Vec::new();
    for (i, s) in a.graphs.iter().enumerate() {
        graphs.push(parse_graph6(s).map_err(|e| Failure::usage(format!("argument {}: {e}", i + 1)))?);
    }
    if let Some(path) = &a.file {
        graphs.extend(read_file(path)?.graphs);
    }
    if graphs.is_empty() {
        return Err(Failure::usage("no input graphs; pass graph6 strings or --file"));
    }
    let mut headers = vec!["graph6", "n", "m", "delta", "max_degree", "regular", "connected", "chi"];
    headers.extend(IndexId::ALL.iter().map(|i| i.symbol()));
    let mut table = Table::new(headers);
    let mut rows = Vec::new();
    for g in &graphs {
        let t = all_indices(g);
        let chi = chromatic_number(g).ok();
        let mut indices = serde_json::Map::new();
        let mut cells: Vec<Cell> = vec![
            to_graph6(g).into(),
            g.order().into(),
            g.size().into(),
            g.min_degree().into(),
            g.max_degree().into(),
            g.is_regular(None).into(),
            g.is_connected().into(),
            chi.map_or(Cell::Missing("over_cap"), Cell::Int),
        ];
        for (i, v) in t.iter() {
            indices.insert(i.symbol().into(), v.map_or(serde_json::Value::Null, |x| json!(x)));
            cells.push(Cell::opt_num(v, "undefined"));
        }
        table.push(cells);
        rows.push(ComputeRow {
            graph6: to_graph6(g),
            n: g.order(),
            m: g.size(),
            delta: g.min_degree(),
            max_degree: g.max_degree(),
            regular: g.is_regular(None),
            connected: g.is_connected(),
            chi,
            indices,
        });
    }
    Ok(Output {
        json: json!({ "graphs": rows }),
        table,
        code: EXIT_OK,
    })
}

fn select_bounds(list: &str) -> Result<Vec<BoundSpec>, Failure> {
    let catalog = builtin_catalog();
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(catalog);
    }
    let mut out = Vec::new();
    for id in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let b = crate::bounds::find_bound(&catalog, id).ok_or_else(|| Failure::usage(format!("unknown bound id {id:?}")))?;
        if !out.iter().any(|o: &BoundSpec| o.id == b.id) {
            out.push(b.clone());
        }
    }
    if out.is_empty() {
        return Err(Failure::usage("empty --bounds list"));
    }
    Ok(out)
}

fn population(a: &AuditArgs) -> Result<Population, Failure> {
    let filters = Filters {
        delta_min: a.min_degree,
        molecular: a.molecular,
        regular_only: false,
    };
    match (&a.enumerate, &a.file) {
        (Some(r), _) => Population::enumerated(r.clone(), filters).map_err(|e| Failure::usage(e.to_string())),
        (None, Some(path)) => {
            let mut p = read_file(path)?;
            let f = filters.describe();
            if !f.is_empty() {
                p.graphs.retain(|g| filters.accepts(g));
                p.descriptor = format!("{},{f}", p.descriptor);
            }
            Ok(p)
        }
        (None, None) => Err(Failure::usage("pass --enumerate or --file")),
    }
}

fn join(v: &[String]) -> String {
    v.join(" ")
}

pub fn cmd_audit(a: &AuditArgs, tol: f64, compare: bool) -> Result<Output, Failure> {
    let bounds = select_bounds(&a.bounds)?;
    let expectations = match (&a.expect, compare) {
        (Some(path), true) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
            Some(Expectations::from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?)
        }
        (None, true) => Some(Expectations::builtin()),
        (_, false) => None,
    };
    let pop = population(a)?;
    let reports = audit_catalog(&bounds, &pop.graphs, &pop.descriptor, tol);
    let mismatches: Vec<ExpectationMismatch> = expectations.as_ref().map_or_else(Vec::new, |e| e.check(&reports));
    Ok(Output {
        json: audit_json(&pop, tol, &reports, compare.then_some(&mismatches)),
        table: audit_table(&reports, compare.then_some(&mismatches)),
        code: if mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn audit_json(
    pop: &Population,
    tol: f64,
    reports: &[SharpnessReport],
    mismatches: Option<&Vec<ExpectationMismatch>>,
) -> serde_json::Value {
    let mut v = json!({
        "schema_version": crate::bounds::REPORT_SCHEMA_VERSION,
        "population": pop.descriptor,
        "graphs": pop.graphs.len(),
        "tolerance": tol,
        "reports": reports,
    });
    if let Some(m) = mismatches {
        v["expectation_mismatches"] = json!(m);
    }
    v
}

fn audit_table(reports: &[SharpnessReport], mismatches: Option<&Vec<ExpectationMismatch>>) -> Table {
    let mut headers = vec![
        "bound_id",
        "verdict",
        "checked",
        "skipped",
        "holds",
        "equality",
        "violated",
        "min_margin",
        "min_margin_witness",
        "equality_witnesses",
        "violation_witnesses",
        "strict",
        "strictness_conflict",
        "claimed_equality",
        "unexpected_equalities",
        "missed_family_members",
        "population",
        "citation",
    ];
    if mismatches.is_some() {
        headers.insert(2, "expected");
    }
    let mut t = Table::new(headers);
    for r in reports {
        let mut row: Vec<Cell> = vec![
            r.bound_id.clone().into(),
            r.verdict.as_str().into(),
            r.counts.checked.into(),
            r.counts.skipped.into(),
            r.counts.holds.into(),
            r.counts.equality.into(),
            r.counts.violated.into(),
            Cell::opt_num(r.min_margin.as_ref().map(|m| m.value), ""),
            r.min_margin.as_ref().map_or("", |m| m.witness_graph6.as_str()).into(),
            join(&r.equality_witnesses).into(),
            join(&r.violation_witnesses).into(),
            r.strict.into(),
            r.strictness_conflict.into(),
            r.claimed_equality.clone().unwrap_or_default().into(),
            join(&r.family_mismatch.unexpected_equalities).into(),
            join(&r.family_mismatch.missed_family_members).into(),
            r.population.clone().into(),
            r.citation.clone().into(),
        ];
        if let Some(m) = mismatches {
            let ok = !m.iter().any(|x| x.bound_id == r.bound_id);
            row.insert(2, if ok { "ok" } else { "MISMATCH" }.into());
        }
        t.push(row);
    }
    t
}

pub fn cmd_families(range: RangeInclusive<usize>) -> Output {
    let rows = family_table(range, 1e-12);
    let mut t = Table::new(vec!["family", "index", "formula", "computed", "rel_err", "agrees"]);
    for r in &rows {
        t.push(vec![
            r.family.clone().into(),
            r.index.symbol().into(),
            Cell::opt_num(r.formula, "undefined"),
            Cell::opt_num(r.computed, "undefined"),
            Cell::opt_num(r.rel_err, ""),
            r.agrees.into(),
        ]);
    }
    let ok = rows.iter().all(|r| r.agrees);
    Output {
        json: json!({ "tolerance": 1e-12, "rows": rows }),
        table: t,
        code: if ok { EXIT_OK } else { EXIT_MISMATCH },
    }
}

pub fn cmd_proofs(n: usize, tol: f64) -> Result<Output, Failure> {
    let report: ProofReport = proof_audit(n, &builtin_catalog(), tol).map_err(|e| Failure::usage(e.to_string()))?;
    let mut t = Table::new(vec!["id", "verdict", "claim", "observed"]);
    for c in &report.claims {
        let v = match c.verdict {
            ClaimVerdict::Confirmed => "confirmed",
            ClaimVerdict::Discrepancy => "discrepancy",
            ClaimVerdict::NotApplicable => "not_applicable",
        };
        t.push(vec![c.id.clone().into(), v.into(), c.claim.clone().into(), c.observed.clone().into()]);
    }
    for c in &report.concordance {
        let status = serde_json::to_value(c.status).expect("enum serializes");
        let observed = match (&c.first_unsafe, c.closest_gap) {
            (Some((n, d, p)), _) => format!("coefficient passes the extremum at n={n}, delta={d}, pair {p}"),
            (None, Some(g)) => format!("closest relative gap {g:e}"),
            (None, None) => String::new(),
        };
        t.push(vec![
            format!("concordance:{}", c.bound_id).into(),
            status.as_str().unwrap_or_default().to_string().into(),
            "coefficient equals the squared-ratio grid extremum".into(),
            observed.into(),
        ]);
    }
    Ok(Output {
        json: serde_json::to_value(&report).expect("report serializes"),
        table: t,
        code: EXIT_OK,
    })
}
