use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hecke_murphy::hecke::AlgebraFamily;
use hecke_murphy::report::{CheckReport, Status};
use hecke_murphy::transfer::EvalPoint;
use hecke_murphy::verifier::{self, DumpObject, RunConfig};
use hecke_murphy::{Error, Result};

/// Exact checks of Murphy elements against double-row transfer matrices.
#[derive(Parser, Debug)]
#[command(name = "hecke", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the configured check suites and write a JSON report.
    Suite {
        /// TOML or JSON run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Overrides `HECKE_SEED` and the seed in the file.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read the Murphy elements of one family off its transfer matrix.
    Murphy {
        #[arg(long, value_parser = parse_family)]
        family: AlgebraFamily,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value_t = 2)]
        local_dim: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Write one transfer matrix as canonical JSON.
    Dump {
        /// t_minus, t_plus or t_open.
        #[arg(long, value_parser = parse_object)]
        object: DumpObject,
        #[arg(long)]
        out: PathBuf,
        /// main or opposite (ignored by t_open).
        #[arg(long, default_value = "main", value_parser = parse_point)]
        point: EvalPoint,
        #[arg(long, default_value_t = 2)]
        local_dim: usize,
        #[arg(long, default_value_t = 2)]
        sites: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the crossing and half-shift units for N = 2, 3.
    Calibrate {
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_family(s: &str) -> std::result::Result<AlgebraFamily, String> {
    match s.parse::<AlgebraFamily>() {
        Ok(AlgebraFamily::Tl2b) => Err("family must be A, B or C".into()),
        Ok(f) => Ok(f),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_object(s: &str) -> std::result::Result<DumpObject, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_point(s: &str) -> std::result::Result<EvalPoint, String> {
    match s {
        "main" => Ok(EvalPoint::Main),
        "opposite" => Ok(EvalPoint::Opposite),
        other => Err(format!("unknown point {other:?}; expected main or opposite")),
    }
}

fn print_reports(reports: &[CheckReport]) -> bool {
    for r in reports {
        println!("{}", r.summary());
    }
    reports.iter().all(|r| r.status != Status::Fail)
}

fn write_json(path: &PathBuf, v: &serde_json::Value) -> Result<()> {
    let mut s = serde_json::to_string_pretty(v).expect("value serialises");
    s.push('\n');
    std::fs::write(path, s).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Suite { config, seed, out } => {
            let cfg = RunConfig::load(&config)?;
            let out = out.or_else(|| cfg.output.clone());
            let doc = verifier::run_document(cfg, seed)?;
            let ok = print_reports(&doc.reports);
            println!("{} reports, {} failed", doc.reports.len(), doc.failures());
            match out {
                Some(path) => verifier::emit_report(&doc, &path)?,
                None => print!("{}", doc.to_canonical_json()),
            }
            Ok(ok)
        }
        Command::Murphy { family, n, local_dim, seed } => {
            let seed = verifier::cli_seed(seed)?;
            Ok(print_reports(&verifier::murphy_reports(family, local_dim, n, seed)?))
        }
        Command::Dump { object, out, point, local_dim, sites, seed } => {
            let seed = verifier::cli_seed(seed)?;
            write_json(&out, &verifier::dump_object(object, point, local_dim, sites, seed)?)?;
            Ok(true)
        }
        Command::Calibrate { seed } => {
            let seed = verifier::cli_seed(seed)?;
            println!("{}", serde_json::to_string_pretty(&verifier::calibrate(seed)?).expect("value serialises"));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
