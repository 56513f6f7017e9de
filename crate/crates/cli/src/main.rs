//! Terminal front-end: per-degree reports, range scans, verification
//! suites, and raw access to the Pell solver. Output is a table by default,
//! or machine-readable JSON (one object per record) / CSV via --format.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use k3tau_core::conditions::{classify, DClassification};
use k3tau_core::error::PellError;
use k3tau_core::hilbert::{hilb_birational, HilbVerdict};
use k3tau_core::pell::{pell_solve, solve_affine, solve_affine_square_product, AffineConstraint};
use k3tau_core::tau::{build_gtilde, mukai_vector, tau_polarization, MukaiVector};
use k3tau_core::verify::{
    all_suites, disc_action_suite, involution_suite, pell_oracle_suite, special_cases_suite,
    SuiteReport,
};

#[derive(Parser)]
#[command(
    name = "k3tau",
    version,
    about = "Exact lattice and Pell-equation arithmetic for the degree-d K3 involution"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    #[value(name = "star")]
    Star,
    #[value(name = "twostar")]
    Twostar,
    #[value(name = "threestar")]
    Threestar,
    #[value(name = "tau_strict")]
    TauStrict,
    #[value(name = "tau_extended")]
    TauExtended,
}

impl Filter {
    fn matches(self, c: &DClassification) -> bool {
        match self {
            Filter::Star => c.star,
            Filter::Twostar => c.twostar,
            Filter::Threestar => c.threestar,
            Filter::TauStrict => c.tau_strict,
            Filter::TauExtended => c.tau_extended,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Involution,
    DiscAction,
    PellOracle,
    SpecialCases,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstraintArg {
    #[value(name = "p-odd")]
    POdd,
    #[value(name = "p-even")]
    PEven,
    #[value(name = "q-odd")]
    QOdd,
    #[value(name = "q-even")]
    QEven,
    #[value(name = "three-divides-x")]
    ThreeDividesX,
    #[value(name = "pq-nonzero")]
    PqNonzero,
}

impl From<ConstraintArg> for AffineConstraint {
    fn from(c: ConstraintArg) -> AffineConstraint {
        match c {
            ConstraintArg::POdd => AffineConstraint::POdd,
            ConstraintArg::PEven => AffineConstraint::PEven,
            ConstraintArg::QOdd => AffineConstraint::QOdd,
            ConstraintArg::QEven => AffineConstraint::QEven,
            ConstraintArg::ThreeDividesX => AffineConstraint::ThreeDividesX,
            ConstraintArg::PqNonzero => AffineConstraint::PQNonzero,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report for a single even degree d.
    Check {
        d: u64,
        /// Point counts for the Hilbert-scheme question (comma separated).
        #[arg(long = "n", value_delimiter = ',', default_value = "2")]
        n: Vec<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the glued-involution certificate JSON into this directory.
        #[arg(long)]
        certify: Option<PathBuf>,
    },
    /// Reports for every even d in [d_from, d_to], optionally filtered.
    Scan {
        d_from: u64,
        d_to: u64,
        #[arg(long = "n", value_delimiter = ',', default_value = "2")]
        n: Vec<u64>,
        /// Keep only degrees satisfying the named condition.
        #[arg(long)]
        only: Option<Filter>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        certify: Option<PathBuf>,
    },
    /// Run a verification suite; exit 1 on any failed check.
    Verify {
        suite: Suite,
        /// Ceiling for the involution suite.
        #[arg(long, default_value_t = 10_002)]
        d_max: u64,
        /// Degrees for the disc-action suite (comma separated).
        #[arg(long, value_delimiter = ',')]
        d_list: Option<Vec<u64>>,
    },
    /// Solve x² − D·y² = N, or a·P² − b·Q² = c with --affine a b c.
    Pell {
        #[arg(allow_negative_numbers = true)]
        d: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Solve the affine form instead; D and N are ignored.
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_negative_numbers = true)]
        affine: Option<Vec<i64>>,
        /// Constraints on the affine witness (comma separated).
        #[arg(long, value_delimiter = ',')]
        constraint: Vec<ConstraintArg>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

/// Everything the CLI reports about one degree.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct ReportRecord {
    d: u64,
    classification: DClassification,
    #[serde(skip_serializing_if = "Option::is_none")]
    mukai_v: Option<MukaiVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l_tau: Option<MukaiVector>,
    hilb: Vec<HilbVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    certificates: Vec<String>,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn build_record(d: u64, ns: &[u64], certify: Option<&Path>) -> Result<ReportRecord, String> {
    let classification = classify(d).map_err(|e| e.to_string())?;
    let (mukai_v, l_tau, hilb) = if classification.tau_extended {
        let v = mukai_vector(d).map_err(|e| e.to_string())?;
        let lt = tau_polarization(d).map_err(|e| e.to_string())?;
        let verdicts = ns
            .iter()
            .map(|&n| hilb_birational(d, n).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        (Some(v), Some(lt), verdicts)
    } else {
        (None, None, Vec::new())
    };
    let mut certificates = Vec::new();
    if let Some(dir) = certify {
        if classification.tau_extended {
            let cert = build_gtilde(d).map_err(|e| e.to_string())?;
            let path = dir.join(format!("tau_certificate_{d}.json"));
            let json = serde_json::to_string_pretty(&cert).expect("serializable");
            std::fs::write(&path, json).map_err(|e| format!("writing certificate: {e}"))?;
            certificates.push(path.display().to_string());
        }
    }
    Ok(ReportRecord {
        d,
        classification,
        mukai_v,
        l_tau,
        hilb,
        certificates,
    })
}

fn mukai_str(v: &MukaiVector) -> String {
    format!("({},{}L,{})", v.r, v.c, v.s)
}

fn print_table(record: &ReportRecord) {
    let c = &record.classification;
    let flag = |b: bool| if b { "yes" } else { "no" };
    let mut line = format!(
        "d={:<6} star={:<3} twostar={:<3} threestar={:<3}",
        record.d,
        flag(c.star),
        flag(c.twostar),
        flag(c.threestar)
    );
    if let Some(w) = &c.threestar_witness {
        line.push_str(&format!(" (a,n)=({},{})", w.a, w.n));
    }
    line.push_str(&format!(
        " tau_strict={:<3} tau_extended={:<3}",
        flag(c.tau_strict),
        flag(c.tau_extended)
    ));
    if let Some(v) = &record.mukai_v {
        line.push_str(&format!(" v={}", mukai_str(v)));
    }
    if let Some(lt) = &record.l_tau {
        line.push_str(&format!(" L_tau={}", mukai_str(lt)));
    }
    for h in &record.hilb {
        if h.birational {
            line.push_str(&format!(
                " hilb{}=birational via {:?} (p,q)=({},{})",
                h.n,
                h.equation.expect("witness present"),
                h.p.as_deref().unwrap_or("?"),
                h.q.as_deref().unwrap_or("?")
            ));
        } else {
            line.push_str(&format!(" hilb{}=not-birational", h.n));
        }
    }
    for path in &record.certificates {
        line.push_str(&format!(" certificate={path}"));
    }
    println!("{line}");
}

fn csv_header(ns: &[u64]) -> String {
    let mut cols = vec![
        "d".to_string(),
        "star".into(),
        "twostar".into(),
        "threestar".into(),
        "a".into(),
        "n".into(),
        "tau_strict".into(),
        "tau_extended".into(),
    ];
    for n in ns {
        cols.push(format!("hilb{n}_birational"));
        cols.push(format!("hilb{n}_equation"));
        cols.push(format!("hilb{n}_p"));
        cols.push(format!("hilb{n}_q"));
    }
    cols.join(",")
}

fn csv_row(record: &ReportRecord, ns: &[u64]) -> String {
    let c = &record.classification;
    let (a, n) = match &c.threestar_witness {
        Some(w) => (w.a.to_string(), w.n.to_string()),
        None => (String::new(), String::new()),
    };
    let mut cols = vec![
        record.d.to_string(),
        c.star.to_string(),
        c.twostar.to_string(),
        c.threestar.to_string(),
        a,
        n,
        c.tau_strict.to_string(),
        c.tau_extended.to_string(),
    ];
    for want in ns {
        match record.hilb.iter().find(|h| h.n == *want) {
            Some(h) => {
                cols.push(h.birational.to_string());
                cols.push(h.equation.map(|e| format!("{e:?}")).unwrap_or_default());
                cols.push(h.p.clone().unwrap_or_default());
                cols.push(h.q.clone().unwrap_or_default());
            }
            None => {
                cols.extend([String::new(), String::new(), String::new(), String::new()]);
            }
        }
    }
    cols.join(",")
}

fn emit_records(records: &[ReportRecord], ns: &[u64], format: Format) {
    match format {
        Format::Table => {
            for r in records {
                print_table(r);
            }
        }
        Format::Json => {
            let out = std::io::stdout();
            let mut lock = out.lock();
            for r in records {
                let line = serde_json::to_string(r).expect("serializable");
                writeln!(lock, "{line}").expect("stdout");
            }
        }
        Format::Csv => {
            println!("{}", csv_header(ns));
            for r in records {
                println!("{}", csv_row(r, ns));
            }
        }
    }
}

fn worker_count() -> usize {
    std::env::var("K3TAU_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w >= 1)
        .unwrap_or(1)
        .min(64)
}

/// Builds records for the given degrees; the worker pool splits by stride
/// and results are reassembled by index, so output order never depends on
/// the worker count.
fn scan_records(
    ds: &[u64],
    ns: &[u64],
    certify: Option<&Path>,
) -> Result<Vec<ReportRecord>, String> {
    let workers = worker_count().min(ds.len().max(1));
    if workers <= 1 {
        return ds.iter().map(|&d| build_record(d, ns, certify)).collect();
    }
    let mut slots: Vec<Option<Result<ReportRecord, String>>> = vec![None; ds.len()];
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                let mut i = w;
                while i < ds.len() {
                    out.push((i, build_record(ds[i], ns, certify)));
                    i += workers;
                }
                out
            }));
        }
        for handle in handles {
            for (i, r) in handle.join().expect("worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots
        .into_iter()
        .map(|s| s.expect("every slot filled"))
        .collect()
}

fn print_suite(report: &SuiteReport) -> bool {
    let mut ok = true;
    for line in &report.lines {
        let status = if line.pass { "PASS" } else { "FAIL" };
        println!(
            "[{status}] {} :: {} - {}",
            report.suite, line.name, line.detail
        );
        ok &= line.pass;
    }
    ok
}

fn run_check(d: u64, ns: &[u64], format: Format, certify: Option<&Path>) -> ExitCode {
    if !d.is_multiple_of(2) || d == 0 {
        return usage_error("d must be even");
    }
    if ns.iter().any(|&n| n < 2) {
        return usage_error("n values must be at least 2");
    }
    match build_record(d, ns, certify) {
        Ok(record) => {
            emit_records(std::slice::from_ref(&record), ns, format);
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e),
    }
}

fn run_scan(
    d_from: u64,
    d_to: u64,
    ns: &[u64],
    only: Option<Filter>,
    format: Format,
    certify: Option<&Path>,
) -> ExitCode {
    if ns.iter().any(|&n| n < 2) {
        return usage_error("n values must be at least 2");
    }
    let mut ds = Vec::new();
    let mut d = d_from.max(2);
    if !d.is_multiple_of(2) {
        d += 1;
    }
    while d <= d_to {
        ds.push(d);
        d += 2;
    }
    let records = match scan_records(&ds, ns, certify) {
        Ok(rs) => rs,
        Err(e) => return usage_error(&e),
    };
    let filtered: Vec<ReportRecord> = records
        .into_iter()
        .filter(|r| only.is_none_or(|f| f.matches(&r.classification)))
        .collect();
    emit_records(&filtered, ns, format);
    ExitCode::SUCCESS
}

fn run_verify(suite: Suite, d_max: u64, d_list: Option<Vec<u64>>) -> ExitCode {
    let d_list = d_list.unwrap_or_else(|| vec![42, 78, 114, 438]);
    let reports: Vec<SuiteReport> = match suite {
        Suite::Involution => vec![involution_suite(d_max)],
        Suite::DiscAction => vec![disc_action_suite(&d_list)],
        Suite::PellOracle => vec![pell_oracle_suite(200, 50, 10_000)],
        Suite::SpecialCases => vec![special_cases_suite(5_000, 3_000, 1_200)],
        Suite::All => all_suites(),
    };
    let mut ok = true;
    for report in &reports {
        ok &= print_suite(report);
    }
    if ok {
        println!("all checks passed");
        ExitCode::SUCCESS
    } else {
        println!("verification failures present");
        ExitCode::from(1)
    }
}

#[derive(Serialize)]
struct PellOutput {
    solvable: bool,
    x: String,
    y: String,
    method: String,
}

fn run_pell(
    d: i64,
    n: i64,
    affine: Option<Vec<i64>>,
    constraints: &[ConstraintArg],
    format: Format,
) -> ExitCode {
    let cons: Vec<AffineConstraint> = constraints.iter().map(|&c| c.into()).collect();
    let outcome: Result<PellOutput, PellError> = match affine {
        Some(abc) => {
            let (a, b, c) = (abc[0], abc[1], abc[2]);
            if a <= 0 || b <= 0 {
                return usage_error("affine coefficients a and b must be positive");
            }
            let solved = match solve_affine(a as u64, b as u64, c, &cons) {
                Ok(s) => Ok((s, "affine-pell")),
                Err(PellError::SquareProduct) => {
                    solve_affine_square_product(a as u64, b as u64, c, &cons)
                        .map(|s| (s, "affine-factorization"))
                }
                Err(e) => Err(e),
            };
            solved.map(|(s, method)| match s {
                Some((p, q)) => PellOutput {
                    solvable: true,
                    x: p.to_string(),
                    y: q.to_string(),
                    method: method.into(),
                },
                None => PellOutput {
                    solvable: false,
                    x: String::new(),
                    y: String::new(),
                    method: method.into(),
                },
            })
        }
        None => {
            if !constraints.is_empty() {
                return usage_error("--constraint applies only with --affine");
            }
            pell_solve(&BigInt::from(d), &BigInt::from(n)).map(|w| PellOutput {
                solvable: w.solvable,
                x: if w.solvable { w.x.to_string() } else { String::new() },
                y: if w.solvable { w.y.to_string() } else { String::new() },
                method: "cf-lmm".into(),
            })
        }
    };
    match outcome {
        Ok(out) => {
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&out).expect("serializable"))
                }
                _ => {
                    if out.solvable {
                        println!("solvable: (x, y) = ({}, {}) [{}]", out.x, out.y, out.method);
                    } else {
                        println!("unsolvable [{}]", out.method);
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Check {
            d,
            n,
            format,
            certify,
        } => run_check(d, &n, format, certify.as_deref()),
        Cmd::Scan {
            d_from,
            d_to,
            n,
            only,
            format,
            certify,
        } => run_scan(d_from, d_to, &n, only, format, certify.as_deref()),
        Cmd::Verify {
            suite,
            d_max,
            d_list,
        } => run_verify(suite, d_max, d_list),
        Cmd::Pell {
            d,
            n,
            affine,
            constraint,
            format,
        } => run_pell(d, n, affine, &constraint, format),
    }
}
