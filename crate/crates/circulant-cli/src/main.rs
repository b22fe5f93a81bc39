//! Command-line front end for the circulant spectral toolkit.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
//! failure. All machine-readable output (json, csv, ndjson) is byte-stable
//! across runs and worker counts.

use circulant::cospectral::{
    classify_pair_with, search_ncsc_with, FamilyParams, PairVerdict, SearchOutcome, TriState,
};
use circulant::par::with_workers;
use circulant::spectra::{inertia_with, power_sums, Inertia, Spectrum};
use circulant::verify as suites;
use circulant::{CirculantGraph, PrecisionBudget, DEFAULT_PRECISION};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;
use std::process::ExitCode;

/// Environment variable overriding the precision cap (in bits) used by
/// certified sign decisions.
const PRECISION_CAP_VAR: &str = "CIRCULANT_PRECISION_CAP";

#[derive(Parser)]
#[command(
    name = "circulant",
    version,
    about = "Exact spectral analysis of circulant graphs",
    long_about = None,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StreamFormat {
    Ndjson,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Eigenvalues, power sums and inertia of one circulant graph.
    Spectrum {
        /// Graph order.
        #[arg(long)]
        n: usize,
        /// Generator half-set, comma separated; inverses are added.
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        gens: Vec<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Highest power sum to print.
        #[arg(long, default_value_t = 8)]
        max_power: usize,
    },
    /// Classify a pair of graphs on the same order.
    CheckPair {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        gens1: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        gens2: Vec<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Encode the verdict class in the exit status
        /// (10 isomorphic, 11 cospectral, 12 ncsc, 13 unrelated).
        #[arg(long)]
        exit_class: bool,
    },
    /// Construct a built-in graph-pair family and classify it.
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Enumerate symmetric connection sets and stream every NCSC pair.
    Search {
        #[arg(long)]
        n: usize,
        /// Largest number of generator pairs per set.
        #[arg(long)]
        max_s: usize,
        /// Stop after this many pair classifications.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Worker threads for the sweep; defaults to one per core.
        #[arg(long)]
        workers: Option<usize>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "ndjson")]
        format: StreamFormat,
    },
    /// Run verification suites over parameter grids.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest half-order k for the grid suites.
        #[arg(long, default_value_t = 60)]
        max_k: usize,
        /// Largest family parameter alpha for the same-inertia suite.
        #[arg(long, default_value_t = 8)]
        max_alpha: usize,
        /// Largest s for the second-kind lower-bound sweep.
        #[arg(long, default_value_t = 30)]
        max_s: usize,
        /// Largest prime for the exhaustive isomorphism sweep.
        #[arg(long, default_value_t = 13)]
        max_p: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Complement-shift pair from explicit generators on even order.
    Lemma21 {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        gens: Vec<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Distinct-inertia pair {1,2,2k-2,2k-1} / {k-2,k-1,k+1,k+2}, k >= 6.
    Thm31 {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Same-inertia pair with k = 4*alpha+9, s = 2*alpha+4.
    Thm32 {
        #[arg(long)]
        alpha: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// NCSC pair {1..s} / {k-s..k-1}, k >= 6, 2 <= s <= k-3.
    Thm44 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Inertia,
    Bounds,
    Prime,
}

fn precision_budget() -> PrecisionBudget {
    match std::env::var(PRECISION_CAP_VAR) {
        Ok(text) => match text.trim().parse::<u32>() {
            Ok(cap) if cap >= 16 => PrecisionBudget::with_cap(cap),
            _ => {
                eprintln!("warning: ignoring invalid {PRECISION_CAP_VAR}={text:?}");
                PrecisionBudget::default()
            }
        },
        Err(_) => PrecisionBudget::default(),
    }
}

fn to_usize(gens: &[u64]) -> Vec<usize> {
    gens.iter().map(|&g| g as usize).collect()
}

#[derive(Serialize)]
struct SpectrumReport<'a> {
    n: usize,
    set: &'a [usize],
    eigenvalues: &'a [f64],
    power_sums: Vec<String>,
    inertia: Inertia,
}

fn cmd_spectrum(n: usize, gens: &[u64], format: Format, max_power: usize) -> circulant::Result<u8> {
    let g = CirculantGraph::from_generators(n, &to_usize(gens))?;
    let spectrum = Spectrum::compute(&g, DEFAULT_PRECISION);
    let sums = power_sums(&g, max_power.max(1));
    let inertia = inertia_with(&g, precision_budget())?;
    match format {
        Format::Json => {
            let report = SpectrumReport {
                n: g.n(),
                set: g.connection_set().elements(),
                eigenvalues: &spectrum.values,
                power_sums: sums.as_slice().iter().map(|p| p.to_string()).collect(),
                inertia,
            };
            println!("{}", serde_json::to_string(&report).unwrap());
        }
        Format::Csv => {
            println!("j,eigenvalue");
            for (j, v) in spectrum.values.iter().enumerate() {
                println!("{j},{v}");
            }
        }
        Format::Table => {
            println!("n = {}, set = {:?}, degree = {}", g.n(), g.connection_set().elements(), g.degree());
            println!("eigenvalues (j: value):");
            for (j, v) in spectrum.values.iter().enumerate() {
                println!("  {j:>3}: {v:>14.8}");
            }
            let sums_text: Vec<String> = sums.as_slice().iter().map(|p| p.to_string()).collect();
            println!("power sums p_1..p_{}: {}", sums.max_power(), sums_text.join(", "));
            println!(
                "inertia (positive, negative, zero) = ({}, {}, {})",
                inertia.positive, inertia.negative, inertia.zero
            );
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct PairReport<'a> {
    n: usize,
    set1: &'a [usize],
    set2: &'a [usize],
    verdict: PairVerdict,
    class: circulant::cospectral::VerdictClass,
}

fn tri_text(t: TriState) -> &'static str {
    match t {
        TriState::Yes => "yes",
        TriState::No => "no",
        TriState::Unknown => "unknown",
    }
}

fn render_pair(g1: &CirculantGraph, g2: &CirculantGraph, verdict: PairVerdict, format: Format, family: Option<&str>) {
    match format {
        Format::Json => {
            let report = PairReport {
                n: g1.n(),
                set1: g1.connection_set().elements(),
                set2: g2.connection_set().elements(),
                verdict,
                class: verdict.class(),
            };
            match family {
                Some(name) => {
                    #[derive(Serialize)]
                    struct FamilyReport<'a> {
                        family: &'a str,
                        #[serde(flatten)]
                        pair: PairReport<'a>,
                    }
                    println!("{}", serde_json::to_string(&FamilyReport { family: name, pair: report }).unwrap());
                }
                None => println!("{}", serde_json::to_string(&report).unwrap()),
            }
        }
        Format::Csv => {
            println!("n,set1,set2,cospectral,sc,same_inertia,isomorphic");
            println!(
                "{},{},{},{},{},{},{}",
                g1.n(),
                join_set(g1),
                join_set(g2),
                verdict.cospectral,
                verdict.singularly_cospectral,
                verdict.same_inertia,
                tri_text(verdict.isomorphic)
            );
        }
        Format::Table => {
            if let Some(name) = family {
                println!("family {name} on n = {}", g1.n());
            }
            println!("set1 = {:?}", g1.connection_set().elements());
            println!("set2 = {:?}", g2.connection_set().elements());
            println!("cospectral:             {}", verdict.cospectral);
            println!("singularly cospectral:  {}", verdict.singularly_cospectral);
            println!("same inertia:           {}", verdict.same_inertia);
            println!("isomorphic:             {}", tri_text(verdict.isomorphic));
            println!("class:                  {:?}", verdict.class());
        }
    }
}

fn join_set(g: &CirculantGraph) -> String {
    g.connection_set()
        .elements()
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_check_pair(
    n: usize,
    gens1: &[u64],
    gens2: &[u64],
    format: Format,
    exit_class: bool,
) -> circulant::Result<u8> {
    let g1 = CirculantGraph::from_generators(n, &to_usize(gens1))?;
    let g2 = CirculantGraph::from_generators(n, &to_usize(gens2))?;
    let verdict = classify_pair_with(&g1, &g2, precision_budget())?;
    render_pair(&g1, &g2, verdict, format, None);
    if exit_class {
        use circulant::cospectral::VerdictClass::*;
        return Ok(match verdict.class() {
            Isomorphic => 10,
            Cospectral => 11,
            Ncsc => 12,
            Unrelated => 13,
        });
    }
    Ok(0)
}

fn cmd_family(family: FamilyCmd) -> circulant::Result<u8> {
    let (params, format, name) = match family {
        FamilyCmd::Lemma21 { n, gens, format } => (
            FamilyParams::Lemma21 { n, generators: to_usize(&gens) },
            format,
            "lemma21",
        ),
        FamilyCmd::Thm31 { k, format } => (FamilyParams::Thm31 { k }, format, "thm31"),
        FamilyCmd::Thm32 { alpha, format } => (FamilyParams::Thm32 { alpha }, format, "thm32"),
        FamilyCmd::Thm44 { k, s, format } => (FamilyParams::Thm44 { k, s }, format, "thm44"),
    };
    let (g1, g2) = params.construct()?;
    let verdict = classify_pair_with(&g1, &g2, precision_budget())?;
    render_pair(&g1, &g2, verdict, format, Some(name));
    Ok(0)
}

fn write_search(out: &mut dyn Write, outcome: &SearchOutcome, format: StreamFormat) -> std::io::Result<()> {
    match format {
        StreamFormat::Ndjson => {
            for record in &outcome.records {
                writeln!(out, "{}", serde_json::to_string(record).unwrap())?;
            }
            writeln!(out, "{}", serde_json::to_string(&outcome.summary).unwrap())?;
        }
        StreamFormat::Csv => {
            writeln!(out, "n,set1,set2,cospectral,sc,same_inertia,isomorphic")?;
            for r in &outcome.records {
                let set1 = r.set1.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
                let set2 = r.set2.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.n, set1, set2, r.cospectral, r.sc, r.same_inertia, tri_text(r.isomorphic)
                )?;
            }
            let s = &outcome.summary;
            writeln!(
                out,
                "# sets={} pairs_checked={} ncsc_found={} truncated={}",
                s.sets, s.pairs_checked, s.ncsc_found, s.truncated
            )?;
        }
    }
    Ok(())
}

fn cmd_search(
    n: usize,
    max_s: usize,
    budget: u64,
    workers: Option<usize>,
    out: Option<std::path::PathBuf>,
    format: StreamFormat,
) -> circulant::Result<u8> {
    let precision = precision_budget();
    let outcome = with_workers(workers, move || search_ncsc_with(n, max_s, budget, precision))?;
    let io_result = match out {
        Some(path) => {
            let mut file = std::fs::File::create(&path).unwrap_or_else(|e| {
                eprintln!("cannot create {}: {e}", path.display());
                std::process::exit(2);
            });
            write_search(&mut file, &outcome, format)
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_search(&mut lock, &outcome, format)
        }
    };
    io_result.expect("failed to write search output");
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReport {
    suites: Vec<suites::CheckReport>,
    total_checks: u64,
    total_violations: usize,
}

fn cmd_verify(
    suite: Suite,
    max_k: usize,
    max_alpha: usize,
    max_s: usize,
    max_p: usize,
    format: Format,
) -> circulant::Result<u8> {
    let mut reports = Vec::new();
    let inertia_suites = |reports: &mut Vec<suites::CheckReport>| {
        reports.push(suites::distinct_inertia(6..=max_k));
        reports.push(suites::closed_form_counts(6..=max_k));
        reports.push(suites::same_inertia_family(0..=max_alpha));
    };
    let bounds_suites = |reports: &mut Vec<suites::CheckReport>| {
        reports.push(suites::lambda1_bounds(6..=max_k));
        reports.push(suites::u2s_bound(2..=max_s, 6..=max_k));
        reports.push(suites::sign_and_identity(6..=max_k));
    };
    match suite {
        Suite::Inertia => inertia_suites(&mut reports),
        Suite::Bounds => bounds_suites(&mut reports),
        Suite::Prime => reports.push(suites::sc_implies_iso_suite(max_p)),
        Suite::All => {
            reports.push(suites::lemma21_soundness(6..=12, 3));
            reports.push(suites::ncsc_families(6..=16));
            inertia_suites(&mut reports);
            bounds_suites(&mut reports);
            reports.push(suites::sc_implies_iso_suite(max_p));
        }
    }
    let total_checks = reports.iter().map(|r| r.checks).sum();
    let total_violations = reports.iter().map(|r| r.violations.len()).sum();
    let report = VerifyReport { suites: reports, total_checks, total_violations };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
        Format::Csv | Format::Table => {
            for r in &report.suites {
                println!(
                    "{:<22} checks={:<7} violations={}",
                    r.name,
                    r.checks,
                    r.violations.len()
                );
                for v in &r.violations {
                    println!("  VIOLATION: {v}");
                }
            }
            println!("total: {} checks, {} violations", report.total_checks, report.total_violations);
        }
    }
    Ok(if total_violations == 0 { 0 } else { 3 })
}

fn run(cmd: Cmd) -> circulant::Result<u8> {
    match cmd {
        Cmd::Spectrum { n, gens, format, max_power } => cmd_spectrum(n, &gens, format, max_power),
        Cmd::CheckPair { n, gens1, gens2, format, exit_class } => {
            cmd_check_pair(n, &gens1, &gens2, format, exit_class)
        }
        Cmd::Family { family } => cmd_family(family),
        Cmd::Search { n, max_s, budget, workers, out, format } => {
            cmd_search(n, max_s, budget, workers, out, format)
        }
        Cmd::Verify { suite, max_k, max_alpha, max_s, max_p, format } => {
            cmd_verify(suite, max_k, max_alpha, max_s, max_p, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
