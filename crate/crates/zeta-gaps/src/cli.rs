//! Command-line front end: `constants`, `bounds`, `zeros`, `moments` and
//! `verify` subcommands with reproducible, machine-readable output.
//!
//! Every run echoes its full effective configuration into the output header;
//! with `--no-timestamp` two runs of the same configuration produce
//! byte-identical output. Exit codes: 0 success, 2 computation warnings
//! (published-table mismatches, zero-count deficits), 1 errors, 64 usage.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    best_bounds, lambda_ap, lambda_bp, lambda_opial, reference_bounds, unconditional_bound,
    unconditional_bound_recomputed, GapBound,
};
use crate::hardy::{empirical_moment, find_zeros, gap_stats, REFINE_TOLERANCE};
use crate::rmt::{
    classical_constants, listed_b_comparison, ratio_table, MomentCoefficients,
};
use crate::verify::{run_inequality_suite, Inequality, SuiteSummary};
use crate::wirtinger::{ap_constant, i_integral};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Computation(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

fn computation(e: impl std::fmt::Display) -> CliError {
    CliError::Computation(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl OutputFormat {
    fn tag(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodFilter {
    All,
    Thm21,
    Thm22,
    Thm23,
    Thm24,
    Refs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InequalityFilter {
    Bp,
    Yang,
    Ap,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "zeta-gaps",
    version,
    about = "Moment coefficients, inequality constants, and zero-gap lower bounds \
             for the Riemann zeta function"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (`zeros` always writes its CSV schema)
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Omit the timestamp so identical configs give byte-identical output
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    /// Cap on worker threads (default: ZETA_GAPS_THREADS, then all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Absolute tolerance for adaptive quadrature
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub quad_tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Moment coefficients b(h,k) and a(k) with published-table comparisons
    Constants {
        /// Restrict to one k (1..=7); default covers all of them
        #[arg(long)]
        k: Option<u32>,
        /// Also emit the inequality constants I(k) and the Gamma-ratio constant
        #[arg(long)]
        inequalities: bool,
        /// Euler-product truncation for a(k)
        #[arg(long, default_value_t = 1_000_000)]
        prime_cutoff: u64,
    },
    /// Lower-bound tables for the normalized gap quantity
    Bounds {
        #[arg(long, value_enum, default_value_t = MethodFilter::All)]
        method: MethodFilter,
    },
    /// Scan [from, to] for critical-line zeros; writes CSV (index,t,gap,r)
    Zeros {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        /// Scan step as a fraction of the local average spacing, in (0, 0.5]
        #[arg(long, default_value_t = 0.25)]
        grid: f64,
        /// Continue a previous scan recorded in --out (plain-CSV checkpoint)
        #[arg(long)]
        resume: bool,
    },
    /// One empirical mixed moment of Z and Z' over [10, T]
    Moments {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        h: u32,
        #[arg(long = "T")]
        t: f64,
        /// Panel budget for the unit-width composite rule (default: exactly enough)
        #[arg(long)]
        panels: Option<usize>,
    },
    /// Randomized property suite for the three inequalities
    Verify {
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = InequalityFilter::All)]
        inequality: InequalityFilter,
    },
}

/// Echoed run configuration; the header of every output.
#[derive(Debug, Serialize)]
struct ConfigEcho {
    version: &'static str,
    subcommand: &'static str,
    format: &'static str,
    threads: usize,
    quad_tol: f64,
    refine_tolerance: f64,
    params: BTreeMap<&'static str, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<u64>,
}

impl ConfigEcho {
    fn new(cli: &Cli, subcommand: &'static str, params: BTreeMap<&'static str, String>) -> Self {
        ConfigEcho {
            version: VERSION,
            subcommand,
            format: cli.format.tag(),
            threads: rayon::current_num_threads(),
            quad_tol: cli.quad_tol,
            refine_tolerance: REFINE_TOLERANCE,
            params,
            timestamp: (!cli.no_timestamp).then(|| {
                SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
            }),
        }
    }

    fn comment_lines(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# version={} subcommand={}", self.version, self.subcommand);
        let _ = writeln!(
            s,
            "# quad_tol={:e} refine_tolerance={:e} threads={}",
            self.quad_tol, self.refine_tolerance, self.threads
        );
        for (k, v) in &self.params {
            let _ = writeln!(s, "# {k}={v}");
        }
        if let Some(ts) = self.timestamp {
            let _ = writeln!(s, "# timestamp={ts}");
        }
        s
    }
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    config: ConfigEcho,
    data: T,
}

/// Entry point used by the binary. Returns `true` when the run completed
/// with computation warnings (exit code 2).
pub fn run(cli: Cli) -> Result<bool, CliError> {
    let threads = cli
        .threads
        .or_else(|| std::env::var("ZETA_GAPS_THREADS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(computation)?;
    pool.install(|| dispatch(&cli))
}

fn dispatch(cli: &Cli) -> Result<bool, CliError> {
    if !(cli.quad_tol > 0.0 && cli.quad_tol <= 1e-6) {
        return Err(CliError::Usage(format!(
            "--quad-tol must lie in (0, 1e-6], got {:e}",
            cli.quad_tol
        )));
    }
    match &cli.command {
        Command::Constants { k, inequalities, prime_cutoff } => {
            run_constants(cli, *k, *inequalities, *prime_cutoff)
        }
        Command::Bounds { method } => run_bounds(cli, *method),
        Command::Zeros { from, to, grid, resume } => run_zeros(cli, *from, *to, *grid, *resume),
        Command::Moments { k, h, t, panels } => run_moments(cli, *k, *h, *t, *panels),
        Command::Verify { trials, seed, inequality } => {
            run_verify(cli, *trials, *seed, *inequality)
        }
    }
}

fn emit(cli: &Cli, content: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

// ---------------------------------------------------------------- constants

#[derive(Serialize)]
struct ApConstantOut {
    coefficient: String,
    pi_power: i32,
    real: f64,
}

#[derive(Serialize)]
struct InequalityConstantsOut {
    k: u32,
    #[serde(rename = "I_k")]
    i_k: f64,
    #[serde(rename = "I_k_error")]
    i_k_error: f64,
    panels: usize,
    ap_constant: ApConstantOut,
}

#[derive(Serialize)]
struct ClassicalOut {
    name: &'static str,
    leading: String,
    leading_real: f64,
    log_power: u32,
}

#[derive(Serialize)]
struct ConstantsOut {
    coefficients: Vec<MomentCoefficients>,
    table2_comparison: Vec<crate::rmt::RatioComparison>,
    listed_b_comparison: Vec<crate::rmt::BComparison>,
    classical: Vec<ClassicalOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inequalities: Option<Vec<InequalityConstantsOut>>,
}

fn run_constants(
    cli: &Cli,
    k: Option<u32>,
    inequalities: bool,
    prime_cutoff: u64,
) -> Result<bool, CliError> {
    if let Some(k) = k {
        if !(1..=7).contains(&k) {
            return Err(CliError::Usage(format!("--k must be in 1..=7, got {k}")));
        }
    }
    if prime_cutoff < 2 {
        return Err(CliError::Usage("--prime-cutoff must be >= 2".into()));
    }
    let ks: Vec<u32> = match k {
        Some(k) => vec![k],
        None => (1..=7).collect(),
    };

    let mut coefficients = Vec::new();
    for &kk in &ks {
        let a_k = crate::rmt::a_factor(kk, prime_cutoff);
        for h in 0..=kk {
            let b_hk = crate::rmt::b_coeff(h, kk).map_err(computation)?;
            coefficients.push(MomentCoefficients {
                k: kk,
                h,
                a_k,
                b_hk,
                growth_exponent: kk * kk + 2 * h,
            });
        }
    }
    let table2: Vec<_> = ratio_table().into_iter().filter(|r| ks.contains(&r.k)).collect();
    let listed: Vec<_> = listed_b_comparison().into_iter().filter(|c| ks.contains(&c.k)).collect();
    let classical: Vec<ClassicalOut> = classical_constants()
        .into_iter()
        .map(|c| ClassicalOut {
            name: match c.name {
                crate::rmt::ClassicalMomentName::InghamZ4 => "ingham_Z4",
                crate::rmt::ClassicalMomentName::ConreyZprime4 => "conrey_Zprime4",
                crate::rmt::ClassicalMomentName::ConreyMixed => "conrey_mixed",
            },
            leading: c.leading.to_string(),
            leading_real: c.leading.to_f64(),
            log_power: c.log_power,
        })
        .collect();
    let ineq = if inequalities {
        let mut rows = Vec::new();
        for &kk in &ks {
            let r = i_integral(kk, cli.quad_tol).map_err(computation)?;
            let ap = ap_constant(kk);
            rows.push(InequalityConstantsOut {
                k: kk,
                i_k: r.value,
                i_k_error: r.abs_error_estimate,
                panels: r.panels_used,
                ap_constant: ApConstantOut {
                    coefficient: ap.coefficient.to_string(),
                    pi_power: ap.pi_power,
                    real: ap.to_f64(),
                },
            });
        }
        Some(rows)
    } else {
        None
    };

    let warnings =
        table2.iter().any(|r| !r.matches) || listed.iter().any(|c| !c.matches);
    let data = ConstantsOut {
        coefficients,
        table2_comparison: table2,
        listed_b_comparison: listed,
        classical,
        inequalities: ineq,
    };

    let mut params = BTreeMap::new();
    params.insert("k", k.map_or_else(|| "1..7".to_string(), |v| v.to_string()));
    params.insert("prime_cutoff", prime_cutoff.to_string());
    params.insert("inequalities", inequalities.to_string());
    let config = ConfigEcho::new(cli, "constants", params);

    let content = match cli.format {
        OutputFormat::Json => to_json(config, &data)?,
        OutputFormat::Csv => constants_csv(&config, &data),
        OutputFormat::Text => constants_text(&config, &data),
    };
    emit(cli, &content)?;
    Ok(warnings)
}

fn constants_csv(config: &ConfigEcho, data: &ConstantsOut) -> String {
    let mut s = config.comment_lines();
    for r in &data.table2_comparison {
        if !r.matches {
            let _ = writeln!(
                s,
                "# warning: table2 mismatch at k={}: computed {} vs published {}",
                r.k, r.computed, r.published
            );
        }
    }
    s.push_str("k,h,b_hk,a_k,growth_exponent\n");
    for c in &data.coefficients {
        let _ = writeln!(s, "{},{},{},{:.12},{}", c.k, c.h, c.b_hk, c.a_k, c.growth_exponent);
    }
    s
}

fn constants_text(config: &ConfigEcho, data: &ConstantsOut) -> String {
    let mut s = config.comment_lines();
    let _ = writeln!(s, "moment coefficients:");
    for c in &data.coefficients {
        let _ = writeln!(
            s,
            "  k={} h={}  b(h,k) = {}  a(k) ~ {:.10}  growth exponent {}",
            c.k, c.h, c.b_hk, c.a_k, c.growth_exponent
        );
    }
    let _ = writeln!(s, "ratio table b(0,k)/b(k,k):");
    for r in &data.table2_comparison {
        let _ = writeln!(
            s,
            "  k={}  computed {}  published {}  match={}",
            r.k, r.computed, r.published, r.matches
        );
    }
    let _ = writeln!(s, "listed b(h,k) comparison:");
    for c in &data.listed_b_comparison {
        let _ = writeln!(
            s,
            "  b({},{})  computed {}  published {}  match={}",
            c.h, c.k, c.computed, c.published, c.matches
        );
    }
    if let Some(ineq) = &data.inequalities {
        let _ = writeln!(s, "inequality constants:");
        for r in ineq {
            let _ = writeln!(
                s,
                "  k={}  I(k) = {:.12e} (err {:.2e})  ap = {} ~ {:.10}",
                r.k, r.i_k, r.i_k_error, r.ap_constant.coefficient, r.ap_constant.real
            );
        }
    }
    s
}

// ------------------------------------------------------------------- bounds

#[derive(Serialize)]
struct BoundsOut {
    bounds: Vec<GapBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unconditional_recomputed: Option<GapBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    best: Option<crate::bounds::BestBounds>,
}

fn collect_bounds(method: MethodFilter) -> Result<BoundsOut, CliError> {
    let mut rows = Vec::new();
    let with_21 = matches!(method, MethodFilter::All | MethodFilter::Thm21);
    let with_22 = matches!(method, MethodFilter::All | MethodFilter::Thm22);
    let with_23 = matches!(method, MethodFilter::All | MethodFilter::Thm23);
    let with_24 = matches!(method, MethodFilter::All | MethodFilter::Thm24);
    let with_refs = matches!(method, MethodFilter::All | MethodFilter::Refs);
    if with_21 {
        rows.push(unconditional_bound());
    }
    if with_22 {
        for k in 2..=7 {
            rows.push(lambda_opial(1, k).map_err(computation)?);
        }
    }
    if with_23 {
        for k in 3..=7 {
            rows.push(lambda_ap(k).map_err(computation)?);
        }
    }
    if with_24 {
        for k in 3..=7 {
            rows.push(lambda_bp(k).map_err(computation)?);
        }
    }
    if with_refs {
        rows.extend(reference_bounds());
    }
    let recomputed = with_21
        .then(|| unconditional_bound_recomputed().map_err(computation))
        .transpose()?;
    let best = matches!(method, MethodFilter::All)
        .then(|| best_bounds().map_err(computation))
        .transpose()?;
    Ok(BoundsOut { bounds: rows, unconditional_recomputed: recomputed, best })
}

fn run_bounds(cli: &Cli, method: MethodFilter) -> Result<bool, CliError> {
    let data = collect_bounds(method)?;
    let mut params = BTreeMap::new();
    params.insert(
        "method",
        match method {
            MethodFilter::All => "all",
            MethodFilter::Thm21 => "thm21",
            MethodFilter::Thm22 => "thm22",
            MethodFilter::Thm23 => "thm23",
            MethodFilter::Thm24 => "thm24",
            MethodFilter::Refs => "refs",
        }
        .to_string(),
    );
    let config = ConfigEcho::new(cli, "bounds", params);
    let content = match cli.format {
        OutputFormat::Json => to_json(config, &data)?,
        OutputFormat::Csv => bounds_csv(&config, &data),
        OutputFormat::Text => bounds_text(&config, &data),
    };
    emit(cli, &content)?;
    Ok(false)
}

fn csv_opt(v: Option<f64>) -> String {
    v.map_or_else(String::new, |x| format!("{x}"))
}

fn bounds_csv(config: &ConfigEcho, data: &BoundsOut) -> String {
    let mut s = config.comment_lines();
    if let Some(r) = &data.unconditional_recomputed {
        let _ = writeln!(s, "# thm21 recomputed with quadrature I(2): {:.10}", r.value);
    }
    s.push_str("method,k,h,value,conditional,paper_value,abs_diff\n");
    for b in &data.bounds {
        let abs_diff = b.paper_value.map(|p| (b.value - p).abs());
        let _ = writeln!(
            s,
            "{},{},{},{:.10},{},{},{}",
            b.method.tag(),
            b.k,
            b.h,
            b.value,
            b.conditional,
            csv_opt(b.paper_value),
            abs_diff.map_or_else(String::new, |d| format!("{d:.3e}")),
        );
    }
    s
}

fn bounds_text(config: &ConfigEcho, data: &BoundsOut) -> String {
    let mut s = config.comment_lines();
    for b in &data.bounds {
        let _ = writeln!(
            s,
            "  {:<24} k={} h={}  value {:.6}  conditional={}  {}",
            b.method.tag(),
            b.k,
            b.h,
            b.value,
            b.conditional,
            b.note
        );
    }
    if let Some(r) = &data.unconditional_recomputed {
        let _ = writeln!(s, "  thm21 recomputed with quadrature I(2): {:.10}", r.value);
    }
    if let Some(best) = &data.best {
        let _ = writeln!(s, "best bounds by k:");
        let _ = writeln!(s, "  unconditional: {:.6}", best.unconditional.value);
        for row in &best.rows {
            let _ = writeln!(
                s,
                "  k={}: {:.6} from {}",
                row.k,
                row.best.value,
                row.best.method.tag()
            );
        }
    }
    s
}

// -------------------------------------------------------------------- zeros

fn run_zeros(cli: &Cli, from: f64, to: f64, grid: f64, resume: bool) -> Result<bool, CliError> {
    if !(from >= 10.0 && to >= from) {
        return Err(CliError::Usage(format!(
            "need 10 <= from <= to (got from={from}, to={to})"
        )));
    }
    if !(grid > 0.0 && grid <= 0.5) {
        return Err(CliError::Usage(format!("--grid must lie in (0, 0.5], got {grid}")));
    }
    if resume && cli.out.is_none() {
        return Err(CliError::Usage("--resume requires --out".into()));
    }

    // resume: restart from the last checkpointed zero, re-scanning its chunk
    // so appended values match a fresh full scan exactly
    let mut existing: Vec<f64> = Vec::new();
    let mut scan_from = from;
    if resume {
        let path = cli.out.as_ref().expect("checked above");
        if path.exists() {
            existing = read_checkpoint(path)?;
            if let Some(&last) = existing.last() {
                scan_from = ((last / 64.0).floor() * 64.0).max(from);
            }
        }
    }

    let report = find_zeros(scan_from, to, grid).map_err(computation)?;
    let mut zeros = existing.clone();
    let last_existing = existing.last().copied().unwrap_or(f64::NEG_INFINITY);
    zeros.extend(
        report.table.ordinates.iter().copied().filter(|&z| z > last_existing + 1e-9),
    );

    let mut params = BTreeMap::new();
    params.insert("from", format!("{from}"));
    params.insert("to", format!("{to}"));
    params.insert("grid", format!("{grid}"));
    params.insert("resume", resume.to_string());
    let config = ConfigEcho::new(cli, "zeros", params);

    let mut s = config.comment_lines();
    let _ = writeln!(
        s,
        "# zeros={} expected_main_term={:.3} rescued={}",
        zeros.len(),
        report.expected_count,
        report.rescued
    );
    let mut warnings = false;
    if let Some(w) = &report.warning {
        warnings = true;
        let _ = writeln!(
            s,
            "# warning: count deficit {:.2} exceeds allowance {:.2}; suspect intervals: {:?}",
            w.deficit, w.allowance, w.suspect_intervals
        );
    }
    s.push_str("index,t,gap,r\n");
    let two_pi = 2.0 * crate::rational::pi_f64();
    for (i, &t) in zeros.iter().enumerate() {
        if let Some(&next) = zeros.get(i + 1) {
            let gap = next - t;
            let r = gap * t.ln() / two_pi;
            let _ = writeln!(s, "{i},{t:.9},{gap:.9},{r:.6}");
        } else {
            let _ = writeln!(s, "{i},{t:.9},,");
        }
    }
    emit(cli, &s)?;
    if let Ok(stats) = gap_stats(&report.table) {
        eprintln!(
            "scanned [{from}, {to}]: {} zeros, mean r {:.4}, max r {:.4}",
            zeros.len(),
            stats.mean_gap,
            stats.max_gap
        );
    }
    Ok(warnings)
}

fn read_checkpoint(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut zeros = Vec::new();
    for line in text.lines() {
        if line.starts_with('#') || line.starts_with("index") || line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let t = fields
            .nth(1)
            .and_then(|v| v.parse::<f64>().ok())
            .ok_or_else(|| CliError::Usage(format!("malformed checkpoint line: {line}")))?;
        zeros.push(t);
    }
    Ok(zeros)
}

// ------------------------------------------------------------------ moments

fn run_moments(
    cli: &Cli,
    k: u32,
    h: u32,
    t: f64,
    panels: Option<usize>,
) -> Result<bool, CliError> {
    if !(1..=3).contains(&k) || h > k {
        return Err(CliError::Usage(format!(
            "need k in 1..=3 and h in 0..=k (got k={k}, h={h})"
        )));
    }
    if !(t > 11.0) {
        return Err(CliError::Usage(format!("--T must exceed 11 (got {t})")));
    }
    let budget = panels.unwrap_or_else(|| ((t - 10.0).ceil() as usize).max(1));
    let moment = empirical_moment(k, h, t, budget).map_err(computation)?;

    let mut params = BTreeMap::new();
    params.insert("k", k.to_string());
    params.insert("h", h.to_string());
    params.insert("T", format!("{t}"));
    params.insert("panels", budget.to_string());
    let config = ConfigEcho::new(cli, "moments", params);
    let content = match cli.format {
        OutputFormat::Json => to_json(config, &moment)?,
        OutputFormat::Csv => {
            let mut s = config.comment_lines();
            s.push_str("k,h,T,integral,predicted,ratio\n");
            let _ = writeln!(
                s,
                "{},{},{},{:.6},{:.6},{:.6}",
                moment.k, moment.h, moment.t_upper, moment.integral_value, moment.predicted,
                moment.ratio
            );
            s
        }
        OutputFormat::Text => {
            let mut s = config.comment_lines();
            let _ = writeln!(
                s,
                "moment k={} h={} over [10, {}]: integral {:.4}, predicted {:.4}, ratio {:.4} (informational)",
                moment.k, moment.h, moment.t_upper, moment.integral_value, moment.predicted,
                moment.ratio
            );
            s
        }
    };
    emit(cli, &content)?;
    Ok(false)
}

// ------------------------------------------------------------------- verify

fn run_verify(
    cli: &Cli,
    trials: u32,
    seed: u64,
    inequality: InequalityFilter,
) -> Result<bool, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    let which: Vec<Inequality> = match inequality {
        InequalityFilter::Bp => vec![Inequality::WirtingerBp],
        InequalityFilter::Yang => vec![Inequality::OpialYang],
        InequalityFilter::Ap => vec![Inequality::WirtingerAp],
        InequalityFilter::All => {
            vec![Inequality::WirtingerBp, Inequality::OpialYang, Inequality::WirtingerAp]
        }
    };
    let mut summaries: Vec<SuiteSummary> = Vec::new();
    for ineq in which {
        summaries.extend(run_inequality_suite(ineq, trials, seed).map_err(computation)?);
    }
    let violations: u32 = summaries.iter().map(|s| s.violations).sum();

    let mut params = BTreeMap::new();
    params.insert("trials", trials.to_string());
    params.insert("seed", seed.to_string());
    params.insert(
        "inequality",
        match inequality {
            InequalityFilter::Bp => "bp",
            InequalityFilter::Yang => "yang",
            InequalityFilter::Ap => "ap",
            InequalityFilter::All => "all",
        }
        .to_string(),
    );
    let config = ConfigEcho::new(cli, "verify", params);
    let content = match cli.format {
        OutputFormat::Json => to_json(config, &summaries)?,
        OutputFormat::Csv => {
            let mut s = config.comment_lines();
            s.push_str("inequality,k,trials,min_margin,violations\n");
            for r in &summaries {
                let _ = writeln!(
                    s,
                    "{},{},{},{:.6e},{}",
                    r.inequality, r.k, r.trials, r.min_margin, r.violations
                );
            }
            s
        }
        OutputFormat::Text => {
            let mut s = config.comment_lines();
            for r in &summaries {
                let _ = writeln!(
                    s,
                    "  {:refine_tol$} k={} trials={} min_margin={:.3e} violations={}",
                    r.inequality,
                    r.k,
                    r.trials,
                    r.min_margin,
                    r.violations,
                    refine_tol = 14
                );
            }
            s
        }
    };
    emit(cli, &content)?;
    Ok(violations > 0)
}

fn to_json<T: Serialize>(config: ConfigEcho, data: &T) -> Result<String, CliError> {
    let envelope = Envelope { config, data };
    serde_json::to_string_pretty(&envelope)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(computation)
}
