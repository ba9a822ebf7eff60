//! Command-line front end for `frankl-core`.
//!
//! Exit codes: 0 success, 2 counterexample or failed verification,
//! 64 usage error, 65 bad input data, 70 internal or I/O failure.

pub mod dot;
pub mod format;
pub mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use frankl_core::{
    canonical_form,
    conditions::{rival_inequality, small_incomparability_violations},
    counterexample_sweep,
    enumerate::{enumerate_up_to, ORACLE_MAX},
    enumerate_lattices, evaluate_all, frankl_witnesses, oracle_enumerate,
    removal::{irreducibles_survive_removal, sweep_removal},
    CanonicalCert, Caps, ConditionId, Convention, EnumConfig, Lattice,
};
use thiserror::Error;

use crate::report::Tally;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(format!("i/o error: {e}"))
    }
}

type CliResult = Result<i32, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "frankl",
    version,
    about = "Finite lattice enumeration and union-closed conjecture checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write every lattice of the given size, sorted by certificate.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// Output file; defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print only the number of lattices.
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check the conjecture on each lattice in a file.
    Check {
        path: PathBuf,
        /// Print a detail line for every witness, not just the smallest.
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Evaluate every necessary condition on each lattice in a file.
    Conditions {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Largest meet-irreducible subset tried.
        #[arg(long, default_value_t = Caps::default().meet_subset)]
        meet_subset_cap: usize,
        /// Largest sublattice subset tried.
        #[arg(long, default_value_t = Caps::default().sublattice_subset)]
        sublattice_subset_cap: usize,
        /// Largest lattice on which sublattice subsets are swept.
        #[arg(long, default_value_t = Caps::default().sublattice_lattice)]
        sublattice_lattice_cap: usize,
    },
    /// Run every exhaustive check up to a size.
    Verify {
        #[arg(long)]
        max_size: usize,
        /// Also compare against the brute-force enumerator.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Emit the Hasse diagram of each lattice in a file as DOT.
    Dot {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-condition failure counts over all lattices of a size.
    Stats {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Enumerate {
            size,
            out: path,
            count_only,
            jobs,
        } => cmd_enumerate(size, path.as_deref(), count_only, jobs, out),
        Command::Check {
            path,
            all_witnesses,
        } => cmd_check(&path, all_witnesses, out),
        Command::Conditions {
            path,
            json,
            meet_subset_cap,
            sublattice_subset_cap,
            sublattice_lattice_cap,
        } => {
            let caps = Caps {
                meet_subset: meet_subset_cap,
                sublattice_subset: sublattice_subset_cap,
                sublattice_lattice: sublattice_lattice_cap,
            };
            cmd_conditions(&path, &caps, json, out)
        }
        Command::Verify {
            max_size,
            oracle,
            jobs,
        } => cmd_verify(max_size, oracle, jobs, out),
        Command::Dot { path, out: dest } => cmd_dot(&path, dest.as_deref(), out),
        Command::Stats { size, json, jobs } => cmd_stats(size, json, jobs, out),
    }
}

fn config(size: usize, jobs: usize) -> Result<EnumConfig, CliError> {
    let cfg = EnumConfig {
        jobs: jobs.max(1),
        ..EnumConfig::default()
    };
    if size == 0 || size > cfg.max_size {
        return Err(CliError::Usage(format!(
            "size must be in 1..={}, got {size}",
            cfg.max_size
        )));
    }
    Ok(cfg)
}

fn read_lattices(path: &Path) -> Result<Vec<Lattice>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?;
    format::parse_lattices(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn internal(e: frankl_core::Error) -> CliError {
    CliError::Internal(e.to_string())
}

pub fn cmd_enumerate(
    size: usize,
    path: Option<&Path>,
    count_only: bool,
    jobs: usize,
    out: &mut dyn Write,
) -> CliResult {
    let cfg = config(size, jobs)?;
    let ls = enumerate_lattices(size, &cfg).map_err(internal)?;
    if count_only {
        writeln!(out, "{}", ls.len())?;
    } else {
        write_output(path, &format::write_lattices(&ls), out)?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_check(path: &Path, all_witnesses: bool, out: &mut dyn Write) -> CliResult {
    let ls = read_lattices(path)?;
    let mut code = EXIT_OK;
    for (i, l) in ls.iter().enumerate() {
        if ls.len() > 1 {
            writeln!(out, "# lattice {}", i + 1)?;
        }
        let n = l.len();
        let Ok(w) = frankl_witnesses(l) else {
            writeln!(out, "witnesses: none needed (one-element lattice)")?;
            continue;
        };
        let ids: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        writeln!(out, "witnesses: {}", ids.join(" "))?;
        if w.is_empty() {
            writeln!(out, "counterexample: every join-irreducible lies below more than half of the {n} elements")?;
            code = EXIT_FAIL;
            continue;
        }
        let shown: Vec<usize> = if all_witnesses {
            w.to_vec()
        } else {
            w.first().into_iter().collect()
        };
        for j in shown {
            writeln!(out, "witness {j}: |up| = {} of {n}", l.up_set(j).len())?;
        }
    }
    Ok(code)
}

pub fn cmd_conditions(path: &Path, caps: &Caps, json: bool, out: &mut dyn Write) -> CliResult {
    let ls = read_lattices(path)?;
    let mut reports = Vec::new();
    for l in &ls {
        if l.len() < 3 {
            return Err(CliError::Data(format!(
                "conditions need more than 2 elements, got a lattice with {}",
                l.len()
            )));
        }
        reports.push(evaluate_all(l, caps).map_err(internal)?);
    }
    if json {
        let value = if reports.len() == 1 {
            report::report_json(&reports[0])
        } else {
            serde_json::Value::Array(reports.iter().map(report::report_json).collect())
        };
        let text =
            serde_json::to_string_pretty(&value).map_err(|e| CliError::Internal(e.to_string()))?;
        writeln!(out, "{text}")?;
    } else {
        for (i, r) in reports.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            out.write_all(report::report_text(r).as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_dot(path: &Path, dest: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let ls = read_lattices(path)?;
    let text: String = ls.iter().map(dot::to_dot).collect();
    write_output(dest, &text, out)?;
    Ok(EXIT_OK)
}

pub fn cmd_stats(size: usize, json: bool, jobs: usize, out: &mut dyn Write) -> CliResult {
    let cfg = config(size, jobs)?;
    if size < 3 {
        return Err(CliError::Usage(format!(
            "conditions need more than 2 elements, got size {size}"
        )));
    }
    let ls = enumerate_lattices(size, &cfg).map_err(internal)?;
    let caps = Caps::default();
    let mut tallies: BTreeMap<ConditionId, Tally> = BTreeMap::new();
    for l in &ls {
        let r = evaluate_all(l, &caps).map_err(internal)?;
        for (id, v) in r.verdicts {
            tallies.entry(id).or_default().add(v.status);
        }
    }
    if json {
        let text = serde_json::to_string_pretty(&report::stats_json(size, ls.len(), &tallies))
            .map_err(|e| CliError::Internal(e.to_string()))?;
        writeln!(out, "{text}")?;
    } else {
        out.write_all(report::stats_text(size, ls.len(), &tallies).as_bytes())?;
    }
    Ok(EXIT_OK)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn histogram_text(h: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = h.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn cmd_verify(max_size: usize, oracle: bool, jobs: usize, out: &mut dyn Write) -> CliResult {
    let cfg = config(max_size, jobs)?;
    if max_size < 2 {
        return Err(CliError::Usage("--max-size must be at least 2".into()));
    }
    let levels = enumerate_up_to(max_size, &cfg).map_err(internal)?;
    let all: Vec<&Lattice> = levels.iter().flatten().collect();
    let mut ok = true;

    writeln!(out, "verify up to n={max_size} (jobs {})", cfg.jobs)?;
    let counts: Vec<String> = levels.iter().map(|l| l.len().to_string()).collect();
    writeln!(out, "counts: {}", counts.join(","))?;
    let known = [1, 1, 1, 2, 5, 15, 53];
    let counts_ok = levels.iter().zip(known).all(|(l, k)| l.len() == k);
    ok &= counts_ok;
    writeln!(out, "known counts: {}", pass(counts_ok))?;

    let sweep = counterexample_sweep(max_size, &cfg).map_err(internal)?;
    let sweep_ok = sweep.total_counterexamples() == 0;
    ok &= sweep_ok;
    match sweep.certified_lower_bound() {
        Some(b) => writeln!(
            out,
            "conjecture: {}, no counterexample with 2 <= n <= {max_size}; a counterexample needs at least {b} elements",
            pass(sweep_ok)
        )?,
        None => {
            writeln!(out, "conjecture: {}", pass(sweep_ok))?;
            for s in &sweep.sizes {
                for c in &s.counterexamples {
                    writeln!(out, "counterexample: {c}")?;
                }
            }
        }
    }

    let removal = sweep_removal(all.iter().copied());
    let removal_ok = removal.disagreements.is_empty();
    ok &= removal_ok;
    writeln!(
        out,
        "single-element removal: {}, {} elements checked, {} disagreements ({} bottom/top cases read differently under the Rival convention)",
        pass(removal_ok),
        removal.elements,
        removal.disagreements.len(),
        removal.reading_conflicts.len()
    )?;

    let pairs_ok = all
        .iter()
        .filter(|l| l.len() > 1)
        .all(|l| irreducibles_survive_removal(l));
    ok &= pairs_ok;
    writeln!(out, "irreducible pairs survive removal: {}", pass(pairs_ok))?;

    let rival_ok = all
        .iter()
        .all(|l| rival_inequality(l, Convention::Rival).holds());
    ok &= rival_ok;
    writeln!(
        out,
        "rival inequality (Rival convention): {}",
        pass(rival_ok)
    )?;

    let mut census_ok = true;
    for (i, level) in levels.iter().enumerate().skip(3) {
        let n = i + 1;
        let mut hist = BTreeMap::new();
        for l in level {
            *hist
                .entry(l.profile(Convention::Paper).doubly_irr.len())
                .or_insert(0) += 1;
        }
        let required = n < 8;
        let level_ok = !required || hist.keys().next().is_some_and(|&m| m >= 2);
        census_ok &= level_ok;
        let note = if required { pass(level_ok) } else { "info" };
        writeln!(
            out,
            "doubly irreducible census n={n}: {} {note}",
            histogram_text(&hist)
        )?;
    }
    ok &= census_ok;

    let small_ok = all
        .iter()
        .filter(|l| l.len() > 2)
        .all(|l| small_incomparability_violations(l).is_empty());
    ok &= small_ok;
    writeln!(out, "small incomparable sets: {}", pass(small_ok))?;

    if oracle {
        let top = max_size.min(ORACLE_MAX);
        let mut oracle_ok = true;
        for (i, level) in levels.iter().enumerate().take(top) {
            let mut expect: Vec<CanonicalCert> = oracle_enumerate(i + 1)
                .map_err(internal)?
                .iter()
                .map(canonical_form)
                .collect();
            expect.sort();
            let got: Vec<CanonicalCert> = level.iter().map(canonical_form).collect();
            oracle_ok &= expect == got;
        }
        ok &= oracle_ok;
        writeln!(
            out,
            "oracle: {}, identical cert sets for n=1..{top}",
            pass(oracle_ok)
        )?;
    }

    writeln!(out, "result: {}", pass(ok))?;
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}
