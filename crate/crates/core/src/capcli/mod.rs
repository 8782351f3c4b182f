//! Command-line surface over the library: class groups, the resumable
//! discriminant scanner, the embedded 5-rank-2 table, transfer kernels of
//! catalog groups and the rank heuristic.
//!
//! Every command renders to a [`CommandOutput`]; [`run`] prints it and
//! maps errors to exit codes (2 for usage, 1 otherwise).

mod scan;
mod store;
mod table;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use scan::{audit, fundamental_range, scan, scan_at, ScanParams, ScanSummary};
pub use store::{CorruptLine, ScanRecord, Store, StoreContents, StoreWriter};
pub use table::{
    classify_capitulation_pattern, fixture_rows, table_checksum, verify_table, CapitulationPatternRow,
    PatternClass, RowVerdict, TABLE_PRIME, TABLE_ROWS, TABLE_SHA256,
};

use crate::heuristics::{
    compare_distributions, format_decimal, monte_carlo_rank_distribution_parallel, published_empirical_p3,
    published_heuristic_p3, predicted_rank_distribution, HeuristicError, MonteCarloConfig, RankDistribution,
};
use crate::pcgroup::{builtin_catalog, capitulation_type, PcGroupError};
use crate::quadform::{class_group_structure, Discriminant, QuadFormError};

/// Independent sampler streams; fixed so output does not depend on `--jobs`.
pub const HEURISTIC_STREAMS: u64 = 16;

#[derive(Debug, Error)]
pub enum CapCliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("store {path}: {detail}")]
    Store { path: String, detail: String },
    #[error("embedded table: {0}")]
    Fixture(String),
    #[error("bad pattern: {0}")]
    BadPattern(String),
    #[error(transparent)]
    QuadForm(#[from] QuadFormError),
    #[error(transparent)]
    PcGroup(#[from] PcGroupError),
    #[error(transparent)]
    Heuristic(#[from] HeuristicError),
}

impl CapCliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CapCliError::Usage(_) | CapCliError::QuadForm(QuadFormError::BadDiscriminant(_)) => 2,
            _ => 1,
        }
    }
}

/// Rendered output: `stdout` is the table, `notes` go to stderr.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub notes: Vec<String>,
    /// Completed, but found conflicts; exit code 1.
    pub failed: bool,
}

/// A plain-text table, aligned or tab-separated.
struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn render(&self, tsv: bool) -> String {
        let mut out = String::new();
        if tsv {
            for r in std::iter::once(&self.header).chain(&self.rows) {
                out.push_str(&r.join("\t"));
                out.push('\n');
            }
            return out;
        }
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                std::iter::once(&self.header)
                    .chain(&self.rows)
                    .map(|r| r.get(c).map_or(0, |s| s.chars().count()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for r in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

fn factors_text(f: &[i64]) -> String {
    if f.is_empty() {
        "1".to_string()
    } else {
        f.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x")
    }
}

/// `h`, invariant factors and the p-ranks for p in {2, 3, 5, 7}.
pub fn cmd_classgroup(d: i64, tsv: bool) -> Result<CommandOutput, CapCliError> {
    let disc = Discriminant::new(d)?;
    let cg = class_group_structure(disc)?;
    let mut t = Table::new(&["field", "value"]);
    t.row(vec!["D".into(), d.to_string()]);
    t.row(vec!["fundamental".into(), if cg.fundamental { "yes" } else { "no" }.into()]);
    t.row(vec!["h".into(), cg.order.to_string()]);
    t.row(vec!["group".into(), factors_text(&cg.invariant_factors)]);
    for p in [2, 3, 5, 7] {
        t.row(vec![format!("{p}-rank"), cg.p_rank(p).to_string()]);
    }
    Ok(CommandOutput {
        stdout: t.render(tsv),
        ..CommandOutput::default()
    })
}

pub fn cmd_scan(params: &ScanParams, store: &Store, tsv: bool) -> Result<CommandOutput, CapCliError> {
    let s = scan(params, store)?;
    Ok(render_scan(params, &s, tsv))
}

pub fn render_scan(params: &ScanParams, s: &ScanSummary, tsv: bool) -> CommandOutput {
    let mut notes: Vec<String> = s
        .corrupt
        .iter()
        .map(|c| format!("warning: corrupt store {c}"))
        .collect();
    notes.extend(s.untabulated.iter().map(|d| {
        format!("informational: D = {d} has {}-rank 2 but is not in the embedded table", params.prime)
    }));
    let mut t = Table::new(&["D", "h", "group", "rank"]);
    for r in &s.matches {
        t.row(vec![
            r.discriminant.to_string(),
            r.class_number.to_string(),
            factors_text(&r.invariant_factors),
            r.rank.to_string(),
        ]);
    }
    let mut out = t.render(tsv);
    if !tsv {
        let _ = writeln!(
            out,
            "\n{} fundamental discriminants, {} added, {} already stored, {} with {}-rank >= {}",
            s.total,
            s.added,
            s.skipped,
            s.matches.len(),
            params.prime,
            params.min_rank
        );
        out.push_str(&histogram(&s.by_rank).render(false));
    }
    CommandOutput {
        stdout: out,
        notes,
        failed: false,
    }
}

fn histogram(by_rank: &BTreeMap<usize, usize>) -> Table {
    let mut t = Table::new(&["rank", "count"]);
    for (r, c) in by_rank {
        t.row(vec![r.to_string(), c.to_string()]);
    }
    t
}

/// Per-row 5-rank recomputation and pattern class; conflicts make it fail.
pub fn cmd_verify_table(tsv: bool) -> Result<CommandOutput, CapCliError> {
    let verdicts = verify_table()?;
    let mut t = Table::new(&["row", "D", "pattern", "group", "5-rank", "check", "class"]);
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut notes = Vec::new();
    for v in &verdicts {
        let pattern: Vec<String> = v.row.pattern.iter().map(u32::to_string).collect();
        t.row(vec![
            v.row.row.to_string(),
            v.row.discriminant.to_string(),
            format!("({})", pattern.join(",")),
            v.class_group.clone(),
            v.rank.to_string(),
            if v.rank_ok() { "ok" } else { "CONFLICT" }.into(),
            v.class.to_string(),
        ]);
        *counts.entry(v.class.to_string()).or_default() += 1;
        notes.extend(v.conflict());
    }
    let mut out = t.render(tsv);
    if !tsv {
        let ok = verdicts.iter().filter(|v| v.rank_ok()).count();
        let classes: Vec<String> = counts.iter().map(|(k, v)| format!("{v} {k}")).collect();
        let _ = writeln!(
            out,
            "\n{} rows, {ok} with 5-rank 2; {}; checksum {}",
            verdicts.len(),
            classes.join(", "),
            table_checksum()
        );
    }
    let failed = !notes.is_empty();
    Ok(CommandOutput {
        stdout: out,
        notes,
        failed,
    })
}

/// Transfer kernels of a catalog group.
pub fn cmd_tkt(name: &str, tsv: bool) -> Result<CommandOutput, CapCliError> {
    let g = builtin_catalog().group(name)?;
    let ab = g.abelianization()?;
    let tkt = capitulation_type(&g)?;
    let mut t = Table::new(&["i", "H_i", "|ker|", "kernel", "code"]);
    for e in &tkt.entries {
        let kernel: Vec<String> = e
            .kernel
            .generators()
            .iter()
            .map(|c| {
                let x = c
                    .iter()
                    .zip(&ab.lifts)
                    .fold(0, |acc, (&k, &l)| g.mul(acc, g.pow(l, k)));
                g.format_elem(x)
            })
            .collect();
        t.row(vec![
            e.index.to_string(),
            format!("<{}>", e.subgroup.generator_words(&g).join(", ")),
            e.kernel.order().to_string(),
            format!("<{}>", kernel.join(", ")),
            e.code.map_or("-".to_string(), |c| c.to_string()),
        ]);
    }
    let mut out = String::new();
    if !tsv {
        let _ = writeln!(out, "{name}: order {}, G/G' = {}\n", g.order(), ab.group);
    }
    out.push_str(&t.render(tsv));
    if !tsv {
        let pattern = tkt.pattern().map_or("-".to_string(), |v| {
            let s: Vec<String> = v.iter().map(usize::to_string).collect();
            format!("({})", s.join(","))
        });
        let _ = writeln!(out, "\ncapitulation type {pattern}");
    }
    Ok(CommandOutput {
        stdout: out,
        ..CommandOutput::default()
    })
}

pub struct HeuristicParams {
    pub prime: u64,
    pub kmax: usize,
    pub trials: u64,
    pub seed: u64,
}

/// Closed form and Monte Carlo side by side, with the published p = 3
/// columns when `p = 3`.
pub fn cmd_heuristic(params: &HeuristicParams, tsv: bool) -> Result<CommandOutput, CapCliError> {
    let p = params.prime;
    let model = predicted_rank_distribution(p, params.kmax)?;
    let cfg = MonteCarloConfig {
        kmax: params.kmax,
        ..MonteCarloConfig::default()
    };
    let mc = monte_carlo_rank_distribution_parallel(p, params.trials, params.seed, HEURISTIC_STREAMS, &cfg)?;
    let published = (p == 3).then(|| (published_heuristic_p3(), published_empirical_p3()));
    let cell = |d: &RankDistribution, k: usize| {
        if k <= d.kmax() {
            format_decimal(&d.probability(k), 4)
        } else {
            "-".to_string()
        }
    };
    let mut t = Table::new(&["rank", "model", "monte-carlo", "published-heuristic", "published-empirical"]);
    for k in 1..=params.kmax {
        let (h, e) = published
            .as_ref()
            .map_or(("-".to_string(), "-".to_string()), |(h, e)| (cell(h, k), cell(e, k)));
        t.row(vec![
            (2 * k).to_string(),
            cell(&model, k),
            cell(&mc, k),
            h,
            e,
        ]);
    }
    t.row(vec![
        format!(">{}", 2 * params.kmax),
        format_decimal(&model.residual_mass(), 4),
        format_decimal(&mc.residual_mass(), 4),
        "-".into(),
        "-".into(),
    ]);
    let mut out = t.render(tsv);
    if !tsv {
        let _ = writeln!(
            out,
            "\np = {p}, {} trials, seed {}; TV(model, monte-carlo) = {}",
            params.trials,
            params.seed,
            format_decimal(&compare_distributions(&model, &mc)?, 4)
        );
        if let Some((h, e)) = &published {
            let at = |d: &RankDistribution| {
                RankDistribution::new(p, d.probabilities()[..params.kmax.min(d.kmax())].to_vec())
            };
            if params.kmax == 3 {
                let _ = writeln!(
                    out,
                    "TV(model, published-heuristic) = {}; TV(model, published-empirical) = {}",
                    format_decimal(&compare_distributions(&model, &at(h)?)?, 4),
                    format_decimal(&compare_distributions(&model, &at(e)?)?, 4)
                );
            }
        }
    }
    Ok(CommandOutput {
        stdout: out,
        ..CommandOutput::default()
    })
}

/// Aggregate of the store: record counts and rank histogram per prime.
pub fn cmd_report(store: &Store, check: bool, tsv: bool) -> Result<CommandOutput, CapCliError> {
    let contents = store.read()?;
    let mut notes: Vec<String> = contents
        .corrupt
        .iter()
        .map(|c| format!("warning: corrupt store {c}"))
        .collect();
    if contents.records.is_empty() {
        return Ok(CommandOutput {
            stdout: "0 records\n".to_string(),
            notes,
            failed: false,
        });
    }
    let mut by_prime: BTreeMap<u32, BTreeMap<usize, usize>> = BTreeMap::new();
    for r in &contents.records {
        *by_prime.entry(r.prime).or_default().entry(r.rank).or_default() += 1;
    }
    let mut t = Table::new(&["p", "rank", "count"]);
    for (p, hist) in &by_prime {
        for (rank, c) in hist {
            t.row(vec![p.to_string(), rank.to_string(), c.to_string()]);
        }
    }
    let mut out = String::new();
    if !tsv {
        let (lo, hi) = contents
            .records
            .iter()
            .fold((i64::MAX, i64::MIN), |(lo, hi), r| (lo.min(r.discriminant), hi.max(r.discriminant)));
        let _ = writeln!(out, "{} records, D in [{lo}, {hi}]\n", contents.records.len());
    }
    out.push_str(&t.render(tsv));
    if check {
        let bad = audit(&contents.records)?;
        notes.extend(bad.iter().map(|d| format!("warning: stored record for D = {d} disagrees with recomputation")));
        if !tsv {
            let _ = writeln!(out, "\nrecomputed {} records, {} mismatched", contents.records.len(), bad.len());
        }
    }
    Ok(CommandOutput {
        stdout: out,
        notes,
        failed: false,
    })
}

#[derive(Parser, Debug)]
#[command(name = "capcli", version, about = "Class groups, transfer kernels and rank heuristics")]
pub struct Cli {
    /// Scan store (tab-separated, append-only).
    #[arg(long, global = true, default_value = "capitulation-store.tsv")]
    pub store: PathBuf,
    /// Worker threads for the scanner.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Sampler seed.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Tab-separated output without summaries.
    #[arg(long, global = true)]
    pub tsv: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class group of discriminant D.
    Classgroup {
        #[arg(allow_negative_numbers = true)]
        discriminant: i64,
    },
    /// Scan fundamental discriminants in [from, to], resuming from the store.
    Scan {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        #[arg(long, default_value_t = 5)]
        prime: u32,
        #[arg(long, default_value_t = 2)]
        min_rank: usize,
    },
    /// Recompute the 5-ranks of the embedded table and classify its patterns.
    VerifyTable,
    /// Transfer kernels of a catalog group.
    Tkt { group: String },
    /// Rank distribution: closed form, Monte Carlo and published values.
    Heuristic {
        prime: u64,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Summarize the store.
    Report {
        /// Recompute every record.
        #[arg(long)]
        check: bool,
    },
}

pub fn execute(cli: &Cli) -> Result<CommandOutput, CapCliError> {
    let store = Store::new(&cli.store);
    match &cli.command {
        Command::Classgroup { discriminant } => cmd_classgroup(*discriminant, cli.tsv),
        Command::Scan {
            from,
            to,
            prime,
            min_rank,
        } => {
            let params = ScanParams {
                from: *from,
                to: *to,
                prime: *prime,
                min_rank: *min_rank,
                jobs: cli.jobs,
            };
            cmd_scan(&params, &store, cli.tsv)
        }
        Command::VerifyTable => cmd_verify_table(cli.tsv),
        Command::Tkt { group } => cmd_tkt(group, cli.tsv),
        Command::Heuristic { prime, kmax, trials } => {
            let params = HeuristicParams {
                prime: *prime,
                kmax: *kmax,
                trials: *trials,
                seed: cli.seed,
            };
            cmd_heuristic(&params, cli.tsv)
        }
        Command::Report { check } => cmd_report(&store, *check, cli.tsv),
    }
}

/// Parses `args` (program name first), runs, prints; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            for n in &out.notes {
                eprintln!("{n}");
            }
            i32::from(out.failed)
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
