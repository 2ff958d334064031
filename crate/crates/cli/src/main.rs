//! `paradox` — run scenarios, check notation files, run bench layouts,
//! boost events, and sample densities.
//!
//! Exit codes: 0 = success / all verdicts pass, 1 = a scenario verdict
//! failed, 2 = usage or parse error (one line on stderr).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use paradox_core::measurement::RngSeed;
use paradox_core::notation::{compile_and_run, parse_bench, parse_ket};
use paradox_core::rdm::{sample_density, write_histogram, DensityTable};
use paradox_core::relativity::{Frame, SpacetimeEvent};
use paradox_core::scenarios::{self, defaults, ScenarioReport};
use paradox_core::state::Ket;
use paradox_core::Error;

#[derive(Parser)]
#[command(
    name = "paradox",
    version,
    about = "Workbench for path-entangled interferometry, frame analysis, and jump-model simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scripted scenario and emit its JSON report
    Scenario {
        name: ScenarioName,
        /// Master seed for all randomness
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Monte Carlo shots (hardy)
        #[arg(long)]
        shots: Option<u64>,
        /// Correlation trials (rdm-entanglement)
        #[arg(long)]
        trials: Option<u64>,
        /// Write the report to this file (atomic) instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Syntax-check a notation file
    Parse {
        /// File to check; .ket or .bench by extension
        #[arg(long)]
        check: PathBuf,
    },
    /// Bench layout pipelines
    Bench {
        #[command(subcommand)]
        command: BenchCommand,
    },
    /// Lorentz-boost an event into a moving frame
    Boost {
        /// Frame velocity
        #[arg(long)]
        v: f64,
        /// Light speed
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        /// Event as T,X
        #[arg(long)]
        event: String,
    },
    /// Draw seeded samples from a density file and write a histogram CSV
    RdmSample {
        /// Density file: "cell,probability" lines, # comments
        #[arg(long)]
        density: PathBuf,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the histogram to this file (atomic) instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Parse, validate, and run a layout; print amplitude tables
    Run {
        file: PathBuf,
        /// Include every named snapshot, not just the final state
        #[arg(long)]
        snapshots: bool,
        /// Write the output to this file (atomic) instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScenarioName {
    FrameAmbiguity,
    SelfInteraction,
    RdmEntanglement,
    Duplication,
    Vanishing,
    Hardy,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Scenario {
            name,
            seed,
            shots,
            trials,
            out,
        } => {
            let report = run_scenario(name, RngSeed(seed), shots, trials)?;
            emit(&out, &report.to_json_string())?;
            Ok(report.all_pass())
        }
        Command::Parse { check } => {
            check_file(&check)?;
            println!("{}: ok", check.display());
            Ok(true)
        }
        Command::Bench { command } => {
            let BenchCommand::Run {
                file,
                snapshots,
                out,
            } = command;
            let text = read(&file)?;
            let plan = parse_bench(&text).map_err(|e| format!("{}:{e}", file.display()))?;
            let snaps =
                compile_and_run(&plan).map_err(|e| format!("{}: {e}", file.display()))?;
            let tables: BTreeMap<String, serde_json::Value> = snaps
                .iter()
                .filter(|(name, _)| snapshots || name == "final")
                .map(|(name, ket)| (name.clone(), amplitude_table(ket)))
                .collect();
            emit(&out, &serde_json::to_string_pretty(&tables).expect("serializes"))?;
            Ok(true)
        }
        Command::Boost { v, c, event } => {
            let event = parse_event(&event)?;
            let frame = Frame::new(v, c).map_err(|e| e.to_string())?;
            let boosted = frame.boost(event);
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({ "t": boosted.t, "x": boosted.x }))
                    .expect("serializes")
            );
            Ok(true)
        }
        Command::RdmSample {
            density,
            samples,
            seed,
            out,
        } => {
            let text = read(&density)?;
            let table =
                DensityTable::parse(&text).map_err(|e| prefix_parse(&density, e))?;
            let counts = sample_density(&table, samples, RngSeed(seed))
                .map_err(|e| e.to_string())?;
            let mut buf = Vec::new();
            write_histogram(&counts, &mut buf).map_err(|e| e.to_string())?;
            emit(&out, String::from_utf8(buf).expect("histogram is utf-8").trim_end())?;
            Ok(true)
        }
    }
}

fn run_scenario(
    name: ScenarioName,
    seed: RngSeed,
    shots: Option<u64>,
    trials: Option<u64>,
) -> Result<ScenarioReport, String> {
    let report = match name {
        ScenarioName::FrameAmbiguity => {
            let p = defaults::frame_ambiguity();
            scenarios::scenario_frame_ambiguity([p.event1, p.event2], p.v, p.c)
        }
        ScenarioName::SelfInteraction => scenarios::scenario_self_interaction(),
        ScenarioName::RdmEntanglement => {
            let p = defaults::rdm_entanglement();
            scenarios::scenario_rdm_entanglement(
                &p.config,
                p.t_meas1,
                p.t_meas2,
                trials.unwrap_or(p.trials),
                seed,
            )
        }
        ScenarioName::Duplication => {
            let p = defaults::duplication();
            scenarios::scenario_duplication(&p.jump, p.c)
        }
        ScenarioName::Vanishing => {
            let p = defaults::vanishing();
            scenarios::scenario_vanishing(p.ticks, seed)
        }
        ScenarioName::Hardy => {
            let p = defaults::hardy();
            scenarios::scenario_hardy(shots.unwrap_or(p.shots), seed)
        }
    };
    report.map_err(|e| e.to_string())
}

fn check_file(path: &Path) -> Result<(), String> {
    let text = read(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("ket") => parse_ket(&text).map(|_| ()).map_err(|e| prefix_parse(path, e)),
        Some("bench") => parse_bench(&text).map(|_| ()).map_err(|e| prefix_parse(path, e)),
        _ => Err(format!(
            "{}: unsupported extension (expected .ket or .bench)",
            path.display()
        )),
    }
}

fn prefix_parse(path: &Path, e: Error) -> String {
    match e {
        // parse errors render as line:col: message
        Error::Parse(p) => format!("{}:{p}", path.display()),
        other => format!("{}: {other}", path.display()),
    }
}

fn parse_event(text: &str) -> Result<SpacetimeEvent, String> {
    let invalid = || format!("invalid --event \"{text}\": expected T,X");
    let (t, x) = text.split_once(',').ok_or_else(invalid)?;
    Ok(SpacetimeEvent::new(
        t.trim().parse().map_err(|_| invalid())?,
        x.trim().parse().map_err(|_| invalid())?,
    ))
}

fn amplitude_table(k: &Ket) -> serde_json::Value {
    let map: BTreeMap<String, serde_json::Value> = k
        .terms()
        .map(|(label, amp)| (label.to_string(), json!([amp.re, amp.im])))
        .collect();
    json!(map)
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        None => {
            println!("{content}");
            Ok(())
        }
        Some(path) => atomic_write(path, content),
    }
}

/// Write via a temp file in the target directory plus rename, so an
/// interrupted run never leaves a truncated file.
fn atomic_write(path: &Path, content: &str) -> Result<(), String> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut file = tempfile::NamedTempFile::new_in(dir.unwrap_or(Path::new(".")))
        .map_err(|e| format!("{}: {e}", path.display()))?;
    file.write_all(content.as_bytes())
        .and_then(|_| file.write_all(b"\n"))
        .map_err(|e| format!("{}: {e}", path.display()))?;
    file.persist(path)
        .map(|_| ())
        .map_err(|e| format!("{}: {e}", path.display()))
}
