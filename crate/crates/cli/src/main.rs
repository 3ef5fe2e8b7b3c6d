//! `verify`: run verification scenarios and write JSON and text reports.
//!
//! Exit status: 0 all scenarios pass, 1 some check fails, 2 usage or configuration
//! error, 3 engine inconsistency.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use prym_core::catalog::{dump_ring, RING_IDS};
use prym_core::harness::{list, run_many, Params, Report};
use prym_core::ideal::OracleMode;
use prym_core::Error;

/// Directory used for reports when `--emit` is not given.
const OUT_ENV: &str = "PRYM_VERIFY_OUT";
const DEFAULT_OUT_DIR: &str = "verify-out";

#[derive(Parser, Debug)]
#[command(name = "verify", about = "Verify integral Chow ring presentations scenario by scenario")]
struct Cli {
    /// Scenario id; repeat to run several.
    #[arg(long = "scenario", value_name = "ID")]
    scenarios: Vec<String>,
    #[arg(long)]
    g: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    m: Option<i64>,
    /// Degree bound for per-degree group comparisons.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    dmax: u32,
    /// Membership oracle: groebner, snf or both.
    #[arg(long, default_value = "both")]
    oracle: OracleMode,
    /// JSON report path; the text report goes next to it with a .txt extension.
    #[arg(long, value_name = "PATH")]
    emit: Option<PathBuf>,
    /// List the registered scenarios and exit.
    #[arg(long)]
    list: bool,
    /// Scenarios run in parallel.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    /// Print a catalog ring in the scenario file format (uses --g/--n/--a/--b/--m).
    #[arg(long, value_name = "RING_ID")]
    dump: Option<String>,
}

fn print_registry(out: &mut dyn Write) {
    for s in list() {
        let params: Vec<String> = s.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "{:<16} {:<24} {}", s.id, params.join(" "), s.title);
    }
}

/// Writes through a temporary file in the same directory, then renames.
fn write_atomic(path: &Path, data: &str) -> std::io::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, data)?;
    std::fs::rename(&tmp, path)
}

fn dump(cli: &Cli, id: &str) -> ExitCode {
    let params: BTreeMap<String, i64> = [("g", cli.g), ("n", cli.n), ("a", cli.a), ("b", cli.b), ("m", cli.m)]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect();
    match dump_ring(id, &params) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("verify: {e}");
            if matches!(e, Error::UnknownId(_)) {
                for (id, ps) in RING_IDS {
                    eprintln!("  {id} {}", ps.join(" "));
                }
            }
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list {
        print_registry(&mut std::io::stdout());
        return ExitCode::SUCCESS;
    }
    if let Some(id) = &cli.dump {
        return dump(&cli, id);
    }
    if cli.scenarios.is_empty() {
        eprintln!("verify: no --scenario given; registered scenarios:");
        print_registry(&mut std::io::stderr());
        return ExitCode::from(2);
    }
    for id in &cli.scenarios {
        if prym_core::harness::find(id).is_err() {
            eprintln!("verify: unknown scenario {id}; registered scenarios:");
            print_registry(&mut std::io::stderr());
            return ExitCode::from(2);
        }
    }

    let params = Params { g: cli.g, n: cli.n, a: cli.a, b: cli.b, m: cli.m, dmax: cli.dmax, oracle: cli.oracle };
    let requests: Vec<(String, Params)> = cli.scenarios.iter().map(|id| (id.clone(), params.clone())).collect();
    let results = run_many(&requests, cli.jobs as usize);

    let mut reports: Vec<Report> = Vec::new();
    let mut status = 0u8;
    for ((id, _), r) in requests.iter().zip(results) {
        match r {
            Ok(rep) => reports.push(rep),
            Err(e @ Error::EngineInconsistency(_)) => {
                eprintln!("verify: {id}: {e}");
                status = 3;
            }
            Err(e) => {
                eprintln!("verify: {id}: {e}");
                status = status.max(2);
            }
        }
    }
    if status != 0 {
        return ExitCode::from(status);
    }

    let json = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        serde_json::to_string_pretty(&reports).expect("reports serialize")
    };
    let text: String = reports.iter().map(Report::to_text).collect::<Vec<_>>().join("\n");
    let json_path = cli.emit.clone().unwrap_or_else(|| {
        let dir = std::env::var_os(OUT_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR));
        dir.join(if reports.len() == 1 { format!("{}.json", reports[0].scenario) } else { "report.json".into() })
    });
    let text_path = json_path.with_extension("txt");
    for (path, data) in [(&json_path, &json), (&text_path, &text)] {
        if let Err(e) = write_atomic(path, data) {
            eprintln!("verify: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }

    for rep in &reports {
        let failed = rep.failed_steps().count();
        println!("{:<16} {:<5} {} steps, {failed} failed  [{}]", rep.scenario, rep.verdict.label(), rep.steps.len(), rep.params.describe());
    }
    println!("report: {}", json_path.display());
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
