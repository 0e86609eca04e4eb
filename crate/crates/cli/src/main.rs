//! `trigmin` — run certificates, the numeric oracle, and the reference
//! constants table from the command line.
//!
//! Exit codes: 0 success; 1 a numeric check failed (oracle disagrees,
//! constants row failed, certificate refuted); 2 pair outside the theorem
//! hypotheses; 3 inconclusive at the configured depth; 64 usage error
//! (nothing is written); 74 output I/O error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use trigmin_core::certificates::{assemble_certificate, CertificateConfig, StepStatus};
use trigmin_core::constants::{constants_table, evaluate_strict};
use trigmin_core::model::b_mn_reference;
use trigmin_core::oracle::{compute_b_mn, global_min_f, scan_slope, OracleConfig};
use trigmin_core::report;
use trigmin_core::PairMN;

const EXIT_OK: i32 = 0;
const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_OUT_OF_SCOPE: i32 = 2;
const EXIT_INCONCLUSIVE: i32 = 3;
const EXIT_USAGE: i32 = 64;
const EXIT_IO: i32 = 74;

#[derive(Parser)]
#[command(
    name = "trigmin",
    version,
    about = "Certified verification that min f = f(0) for (n sin x - sin nx)/(m sin x - sin mx)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Report format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Subdivision depth for the interval sign proofs.
    #[arg(long, global = true)]
    max_depth: Option<u32>,
    /// Seed for the sampling cross-checks (0 = fully deterministic default).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Grid-density multiplier for the oracle (>= 1).
    #[arg(long, global = true)]
    density_mult: Option<f64>,
    /// Compare constants at the printed tolerances (default) or, when set to
    /// false, at a uniform 1e-9 where the enclosures permit.
    #[arg(long, global = true)]
    paper_tolerances: Option<bool>,
    /// Flat key=value config file; explicit flags win over file entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Assemble the full certificate for one pair.
    Verify {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Recompute every printed reference value and compare.
    Constants,
    /// Run the independent grid minimizer for one pair.
    Oracle {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Scan odd m for the largest even n that still works.
    Scan {
        #[arg(long = "m-from")]
        m_from: u32,
        #[arg(long = "m-to")]
        m_to: u32,
    },
    /// Compute B_mn = min f over one period and compare with f(0).
    Bmn {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
}

/// Effective settings after merging defaults, config file, and flags.
struct Settings {
    output: Option<PathBuf>,
    format: Format,
    max_depth: u32,
    seed: u64,
    density_mult: f64,
    paper_tolerances: bool,
}

fn parse_config_file(path: &Path) -> Result<HashMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut out = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(format!(
                "config line {} is not key=value: {line:?}",
                idx + 1
            ));
        };
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn resolve(common: &CommonArgs) -> Result<Settings, String> {
    let file = match &common.config {
        Some(p) => parse_config_file(p)?,
        None => HashMap::new(),
    };
    let parse = |key: &str| file.get(key).cloned();
    let format = match &common.format {
        Some(f) => *f,
        None => match parse("format").as_deref() {
            Some("json") | None => Format::Json,
            Some("csv") => Format::Csv,
            Some("text") => Format::Text,
            Some(other) => return Err(format!("bad format in config: {other:?}")),
        },
    };
    let get_num = |key: &str| -> Result<Option<f64>, String> {
        match parse(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| format!("bad {key} in config: {v:?}")),
        }
    };
    Ok(Settings {
        output: common
            .output
            .clone()
            .or_else(|| parse("output").map(PathBuf::from)),
        format,
        max_depth: match common.max_depth {
            Some(d) => d,
            None => get_num("max-depth")?.map(|v| v as u32).unwrap_or(40),
        },
        seed: match common.seed {
            Some(s) => s,
            None => get_num("seed")?.map(|v| v as u64).unwrap_or(0),
        },
        density_mult: match common.density_mult {
            Some(d) => d,
            None => get_num("density-mult")?.unwrap_or(1.0),
        },
        paper_tolerances: match common.paper_tolerances {
            Some(p) => p,
            None => match parse("paper-tolerances").as_deref() {
                Some("false") => false,
                _ => true,
            },
        },
    })
}

fn emit(settings: &Settings, content: &str) -> Result<(), i32> {
    match &settings.output {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            let write = || -> std::io::Result<()> {
                let mut f = std::fs::File::create(path)?;
                f.write_all(content.as_bytes())?;
                f.flush()
            };
            write().map_err(|e| {
                eprintln!("error: cannot write {}: {e}", path.display());
                EXIT_IO
            })
        }
    }
}

fn cmd_verify(m: u32, n: u32, settings: &Settings) -> i32 {
    let pair = match PairMN::new(m, n) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let config = CertificateConfig {
        max_depth: settings.max_depth,
        seed: settings.seed,
    };
    match assemble_certificate(&pair, &config) {
        Err(scope) => {
            let body = serde_json::json!({
                "pair": {"m": m, "n": n},
                "rejected": scope.to_string(),
            });
            let content = format!("{}\n", serde_json::to_string_pretty(&body).unwrap());
            if let Err(code) = emit(settings, &content) {
                return code;
            }
            eprintln!("out of scope: {scope}");
            EXIT_OUT_OF_SCOPE
        }
        Ok(cert) => {
            let content = match settings.format {
                Format::Json => report::to_json(&report::CertificateReport::from(&cert)),
                Format::Text | Format::Csv => report::certificate_text(&cert),
            };
            if let Err(code) = emit(settings, &content) {
                return code;
            }
            if cert
                .steps
                .iter()
                .any(|s| s.status == StepStatus::Inconclusive)
            {
                EXIT_INCONCLUSIVE
            } else if cert.verdict == trigmin_core::certificates::Verdict::Condition2Holds {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
    }
}

fn cmd_constants(settings: &Settings) -> i32 {
    let rows = if settings.paper_tolerances {
        constants_table()
    } else {
        evaluate_strict(&constants_table())
    };
    let all_pass = rows.iter().all(|r| r.pass);
    let content = match settings.format {
        Format::Json => {
            let reports: Vec<report::ConstantRowReport> = rows.iter().map(Into::into).collect();
            report::to_json(&reports)
        }
        Format::Csv => report::constants_csv(&rows),
        Format::Text => report::constants_text(&rows),
    };
    if let Err(code) = emit(settings, &content) {
        return code;
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn cmd_oracle(m: u32, n: u32, settings: &Settings) -> i32 {
    let pair = match PairMN::new(m, n) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let est = global_min_f(&pair, &OracleConfig::for_pair(&pair, settings.density_mult));
    let content = match settings.format {
        Format::Json => report::to_json(&report::OracleReport::from(&est)),
        Format::Csv => report::oracle_csv(std::slice::from_ref(&est)),
        Format::Text => format!(
            "({m}, {n}): min {:.12e} at x = {:.6e}; f(0) = {}; works = {}\n",
            est.min_value, est.argmin_x, est.f_at_zero, est.works
        ),
    };
    if let Err(code) = emit(settings, &content) {
        return code;
    }
    if est.works {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn cmd_scan(m_from: u32, m_to: u32, settings: &Settings) -> i32 {
    if m_from % 2 == 0 || m_to % 2 == 0 || m_from < 3 || m_from > m_to {
        eprintln!("error: scan bounds must be odd, >= 3, and ordered");
        return EXIT_USAGE;
    }
    let rows = scan_slope(m_from, m_to, settings.density_mult);
    let content = match settings.format {
        Format::Json => {
            let reports: Vec<report::ScanRowReport> = rows.iter().map(Into::into).collect();
            report::to_json(&reports)
        }
        Format::Csv => report::scan_csv(&rows),
        Format::Text => rows
            .iter()
            .map(|r| {
                format!(
                    "m = {}: n_max_works = {} (slope {:.4}), first failure: {}\n",
                    r.m,
                    r.n_max_works,
                    r.slope,
                    r.first_failure_n
                        .map_or("none".to_string(), |n| n.to_string())
                )
            })
            .collect(),
    };
    if let Err(code) = emit(settings, &content) {
        return code;
    }
    EXIT_OK
}

fn cmd_bmn(m: u32, n: u32, settings: &Settings) -> i32 {
    let pair = match PairMN::new(m, n) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let reference = b_mn_reference(&pair);
    let value = compute_b_mn(&pair, settings.density_mult);
    let body = serde_json::json!({
        "m": m,
        "n": n,
        "known": serde_json::to_value(reference.known).unwrap(),
        "f_at_zero": reference.f_at_zero,
        "b_mn": report::dec17(value),
    });
    let content = match settings.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&body).unwrap()),
        Format::Csv | Format::Text => format!(
            "m,n,b_mn,f0\n{m},{n},{},{}\n",
            report::dec17(value),
            reference.f_at_zero
        ),
    };
    if let Err(code) = emit(settings, &content) {
        return code;
    }
    EXIT_OK
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own message; keep its helpful output but use
            // exit code 64 for usage problems (and 0 for --help/--version).
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Ok(threads) = std::env::var("TRIGMIN_THREADS") {
        if let Ok(count) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(count)
                .build_global();
        }
    }
    let settings = match resolve(&cli.common) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(EXIT_USAGE);
        }
    };
    if settings.density_mult < 1.0 {
        eprintln!("error: density-mult must be >= 1");
        std::process::exit(EXIT_USAGE);
    }
    let code = match cli.command {
        Command::Verify { m, n } => cmd_verify(m, n, &settings),
        Command::Constants => cmd_constants(&settings),
        Command::Oracle { m, n } => cmd_oracle(m, n, &settings),
        Command::Scan { m_from, m_to } => cmd_scan(m_from, m_to, &settings),
        Command::Bmn { m, n } => cmd_bmn(m, n, &settings),
    };
    std::process::exit(code);
}
