//! The `monogen` binary.
//!
//! Subcommands: `analyze` one polynomial, `search` even-sextic parameter
//! boxes, `verify` the named classification suites, `cyclo` for shifted
//! real-cyclotomic minimal polynomials. Records go to stdout, diagnostics
//! to stderr. Exit codes: 0 success/pass, 1 verification FAIL, 2 parse or
//! usage error, 3 internal invariant violation.

use std::io::Write as _;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monogen::cyclo;
use monogen::galois6::GaloisGroup;
use monogen::hunt::{self, Filter, HuntError, SearchSpec};
use monogen::BigInt;
use monogen_cli::parse::{parse_poly, render_poly};
use monogen_cli::report::{self, ReportError, ReportRecord};

#[derive(Parser)]
#[command(
    name = "monogen",
    version,
    about = "Monogenicity and Galois structure of even integer polynomials"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze one polynomial: irreducibility, discriminant, Galois group,
    /// monogenicity, shifted-cyclotomic recognition.
    Analyze {
        /// Sparse expression in x (e.g. "x^6-7x^4+14x^2-7") or bracketed
        /// ascending coefficient list (e.g. "[-7,0,14,0,-7,0,1]").
        poly: String,
        /// Emit a single-line JSON record instead of human-readable text.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate even sextics X^6+aX^4+bX^2+c and report every hit.
    Search {
        /// Coefficient box |a|<=A, |b|<=B, |c|<=C.
        #[arg(long = "box", value_name = "A,B,C", allow_hyphen_values = true)]
        coeff_box: Option<String>,
        /// Dihedral shape box |m|<=M, |n|<=N, |c|<=CMAX with c | n^2.
        #[arg(long, value_name = "M,N,CMAX", allow_hyphen_values = true)]
        shape: Option<String>,
        /// Keep only hits with this Galois group
        /// (C6, S3, D6, A4, A4xC2, 6T7, 6T8, S4xC2).
        #[arg(long, value_name = "GROUP")]
        group: Option<String>,
        /// Keep only monogenic hits.
        #[arg(long)]
        monogenic: bool,
        /// Number of parallel chunks; output does not depend on it.
        #[arg(long, value_name = "N", default_value_t = 1)]
        jobs: usize,
        /// Write records to this file (atomic rename) instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Record encoding.
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Re-run one of the named verification suites.
    Verify {
        /// One of: thm1.1, lem1.2, thm4.1, lem4.2.
        name: String,
        /// Box bound for thm1.1 (default 60) and lem4.2 (default 40).
        #[arg(long, value_name = "N")]
        bound: Option<i64>,
        /// Largest family parameter for thm4.1 (default 500).
        #[arg(long = "max-b", value_name = "N")]
        max_b: Option<i64>,
    },
    /// Print a real-cyclotomic minimal polynomial, optionally shifted.
    Cyclo {
        /// Conductor d >= 3.
        #[arg(long)]
        d: u64,
        /// Shift applied to the root: +2, -2, or 0.
        #[arg(long, value_name = "T", default_value = "0", allow_hyphen_values = true)]
        shift: String,
        /// Use -2cos(2*pi/d) + shift as the root instead.
        #[arg(long)]
        negate: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

enum CmdError {
    Usage(String),
    Fail(String),
    Internal(String),
}

type CmdResult = Result<(), CmdError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    // A panic anywhere below is a broken internal invariant: map it to 3.
    match panic::catch_unwind(AssertUnwindSafe(|| dispatch(cli))) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CmdError::Fail(msg))) => {
            println!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(CmdError::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(CmdError::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(_) => ExitCode::from(3),
    }
}

fn dispatch(cli: Cli) -> CmdResult {
    match cli.cmd {
        Cmd::Analyze { poly, json } => cmd_analyze(&poly, json),
        Cmd::Search {
            coeff_box,
            shape,
            group,
            monogenic,
            jobs,
            out,
            format,
        } => cmd_search(coeff_box, shape, group, monogenic, jobs, out, format),
        Cmd::Verify { name, bound, max_b } => cmd_verify(&name, bound, max_b),
        Cmd::Cyclo { d, shift, negate } => cmd_cyclo(d, &shift, negate),
    }
}

fn cmd_analyze(text: &str, json: bool) -> CmdResult {
    let expr = parse_poly(text).map_err(|e| CmdError::Usage(e.to_string()))?;
    let rec = report::analyze(&expr).map_err(|e| match e {
        ReportError::ConstantInput => {
            CmdError::Usage("constant polynomial: nothing to analyze".to_string())
        }
        ReportError::Internal(msg) => CmdError::Internal(msg.to_string()),
    })?;
    if json {
        println!("{}", report::to_json(&rec));
    } else {
        print!("{}", report::human_text(&rec));
    }
    Ok(())
}

fn parse_triple(text: &str, flag: &str) -> Result<(i64, i64, i64), CmdError> {
    let parts: Vec<&str> = text.split(',').collect();
    let bad = || CmdError::Usage(format!("{flag} expects three comma-separated integers"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut vals = [0i64; 3];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p.trim().parse().map_err(|_| bad())?;
    }
    if vals.iter().any(|&v| v < 0) {
        return Err(CmdError::Usage(format!("{flag} bounds must be nonnegative")));
    }
    Ok((vals[0], vals[1], vals[2]))
}

fn parse_group(text: &str) -> Result<GaloisGroup, CmdError> {
    GaloisGroup::ALL
        .iter()
        .copied()
        .find(|g| g.to_string() == text)
        .ok_or_else(|| {
            CmdError::Usage(format!(
                "unknown group '{text}' (expected C6, S3, D6, A4, A4xC2, 6T7, 6T8, or S4xC2)"
            ))
        })
}

fn cmd_search(
    coeff_box: Option<String>,
    shape: Option<String>,
    group: Option<String>,
    monogenic: bool,
    jobs: usize,
    out: Option<PathBuf>,
    format: Format,
) -> CmdResult {
    let mut spec = match (&coeff_box, &shape) {
        (Some(b), None) => {
            let (a, bb, c) = parse_triple(b, "--box")?;
            SearchSpec::coeff_box(a, bb, c)
        }
        (None, Some(s)) => {
            let (m, n, c) = parse_triple(s, "--shape")?;
            SearchSpec::shape_params(m, n, c)
        }
        _ => {
            return Err(CmdError::Usage(
                "exactly one of --box or --shape is required".to_string(),
            ))
        }
    };
    if let Some(g) = group {
        spec.filters.push(Filter::Group(parse_group(&g)?));
    }
    if monogenic {
        spec.filters.push(Filter::MonogenicOnly);
    }
    if jobs == 0 {
        return Err(CmdError::Usage("--jobs must be at least 1".to_string()));
    }
    spec.parallel_chunks = jobs;

    let hits = hunt::run_search(&spec);
    let records: Vec<ReportRecord> = hits.iter().map(report::hit_record).collect();
    let bytes = match format {
        Format::Jsonl => {
            let mut s = String::new();
            for rec in &records {
                s.push_str(&report::to_json(rec));
                s.push('\n');
            }
            s.into_bytes()
        }
        Format::Csv => report::to_csv(&records).into_bytes(),
    };
    write_output(out.as_deref(), &bytes)
        .map_err(|e| CmdError::Usage(format!("cannot write output: {e}")))?;
    if let Some(path) = &out {
        eprintln!("wrote {} records to {}", records.len(), path.display());
    }
    Ok(())
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> std::io::Result<()> {
    match path {
        None => std::io::stdout().write_all(bytes),
        Some(p) => {
            let mut tmp = p.as_os_str().to_owned();
            tmp.push(".tmp");
            let tmp = PathBuf::from(tmp);
            std::fs::write(&tmp, bytes)?;
            std::fs::rename(&tmp, p)
        }
    }
}

fn cmd_verify(name: &str, bound: Option<i64>, max_b: Option<i64>) -> CmdResult {
    let outcome = match name {
        "thm1.1" => hunt::verify_thm_1_1(bound.unwrap_or(60)),
        "lem1.2" => hunt::verify_lem_1_2(),
        "thm4.1" => hunt::verify_thm_4_1(max_b.unwrap_or(500)),
        "lem4.2" => hunt::verify_lem_4_2(bound.unwrap_or(40)),
        other => {
            return Err(CmdError::Usage(format!(
                "unknown check '{other}' (expected thm1.1, lem1.2, thm4.1, or lem4.2)"
            )))
        }
    };
    match outcome {
        Ok(out) => {
            for line in &out.lines {
                println!("{line}");
            }
            println!("PASS: {}", out.check);
            Ok(())
        }
        Err(HuntError::VerificationFailure { check, witness }) => {
            Err(CmdError::Fail(format!("{check}: {witness}")))
        }
        Err(e) => Err(CmdError::Internal(e.to_string())),
    }
}

fn cmd_cyclo(d: u64, shift: &str, negate: bool) -> CmdResult {
    let t: i64 = match shift {
        "+2" | "2" => 2,
        "-2" => -2,
        "0" => 0,
        other => {
            return Err(CmdError::Usage(format!(
                "invalid shift '{other}' (expected +2, -2, or 0)"
            )))
        }
    };
    let psi = cyclo::real_cyclotomic_minpoly(d).map_err(|e| CmdError::Usage(e.to_string()))?;
    let shifted = cyclo::shifted_variant(&psi, &BigInt::from(t), negate)
        .map_err(|e| CmdError::Internal(e.to_string()))?;
    println!("{}", render_poly(&shifted));
    Ok(())
}
