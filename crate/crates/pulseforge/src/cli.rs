//! The `pulseforge` command line: `search`, `verify`, `replicate`.
//!
//! Exit codes are a stable contract:
//!
//! | code | meaning                                        |
//! |------|------------------------------------------------|
//! | 0    | search converged / verification or suite passed |
//! | 1    | verification or reference suite failed          |
//! | 2    | search budget exhausted without convergence     |
//! | 64   | usage error (unknown flag or malformed value)   |
//! | 65   | invalid configuration or file contents          |
//! | 66   | missing or unreadable input file                |
//!
//! Result files embed the seed and full configuration; re-running with
//! `--from-manifest <result.json>` reproduces them byte for byte. Wall-clock
//! timestamps are only written when `--stamp` is given, since they would
//! break reproducibility. `PULSEFORGE_THREADS` caps fitness-evaluation
//! parallelism (0 or unset = automatic).

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use crate::error::Error;
use crate::ga::{run_search_observed, GenerationStats, SearchResult};
use crate::gates::{builtin, load_target, TargetGate};
use crate::manifest::{
    load_search_manifest, load_verify_manifest, render_generation_log, write_json,
    ConventionChoice, RunManifest, SearchConfigDoc, SearchDocument, SearchResultDoc,
    TargetDescriptor, Timestamps, ToolInfo, VerifyDocument, VerifyManifest,
};
use crate::notation::parse_sequence_file;
use crate::unitary::{Convention, FitnessMode};
use crate::verify::{
    convention_sweep, replicate_published_tables, verify_sequence, ReplicationReport, TableBinding,
    XcaReading,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_BUDGET_EXHAUSTED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;

#[derive(Parser)]
#[command(
    name = "pulseforge",
    version,
    about = "Search for and verify NMR pulse sequences realizing quantum gates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a genetic-algorithm search for a pulse sequence implementing a
    /// target gate; writes result.json and generations.log.
    Search(SearchArgs),
    /// Check a sequence file against a target gate; writes verification.json.
    Verify(VerifyArgs),
    /// Re-check the bundled published sequences; writes replication.json.
    Replicate(ReplicateArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    /// Judge matches up to a global phase.
    Phase,
    /// Judge matches entrywise.
    Frobenius,
}

impl ModeArg {
    fn to_mode(self) -> FitnessMode {
        match self {
            ModeArg::Phase => FitnessMode::PhaseInvariant,
            ModeArg::Frobenius => FitnessMode::Frobenius,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MutationModeArg {
    PerBit,
    ModuloCoincidence,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum XcaArg {
    Xx,
    Xz,
    Zx,
    XOnly,
}

impl XcaArg {
    fn to_reading(self) -> XcaReading {
        match self {
            XcaArg::Xx => XcaReading::Xx,
            XcaArg::Xz => XcaReading::Xz,
            XcaArg::Zx => XcaReading::Zx,
            XcaArg::XOnly => XcaReading::XOnly,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BindingArg {
    /// Qubit letters A and B bind to transposed indices (the reading under
    /// which the published sequences reproduce their targets).
    SwapAb,
    /// Qubit letters bind in label order (A -> 0, B -> 1, ...).
    AsLabeled,
}

impl BindingArg {
    fn to_binding(self) -> TableBinding {
        match self {
            BindingArg::SwapAb => TableBinding::SwapAb,
            BindingArg::AsLabeled => TableBinding::AsLabeled,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    /// Target gate: cnot, shor15, or file:PATH.
    #[arg(long, required_unless_present = "from_manifest")]
    target: Option<String>,
    /// Number of qubits the sequence acts on.
    #[arg(long, required_unless_present = "from_manifest")]
    qubits: Option<usize>,
    /// Number of pulses in the sequence.
    #[arg(long, required_unless_present = "from_manifest")]
    length: Option<usize>,
    /// Population size (even, at least 2).
    #[arg(long, default_value_t = 200)]
    pop: usize,
    /// Generation budget.
    #[arg(long, default_value_t = 5000)]
    gens: usize,
    /// Mutation rate.
    #[arg(long = "mut-rate", default_value_t = 0.02)]
    mut_rate: f64,
    /// Crossover rate.
    #[arg(long = "cross-rate", default_value_t = 0.9)]
    cross_rate: f64,
    /// Fitness at or below which the search stops as converged.
    #[arg(long, default_value_t = 1e-3)]
    tol: f64,
    /// Random seed; identical seeds give byte-identical outputs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fitness mode.
    #[arg(long, value_enum, default_value_t = ModeArg::Phase)]
    mode: ModeArg,
    /// Convention index 0..7, or `sweep` to try all eight.
    #[arg(long, default_value = "2")]
    convention: String,
    #[arg(long = "mutation-mode", value_enum, default_value_t = MutationModeArg::PerBit)]
    mutation_mode: MutationModeArg,
    /// Number of best individuals copied unchanged each generation.
    #[arg(long, default_value_t = 1)]
    elitism: usize,
    /// Directory for result.json and generations.log.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Include wall-clock timestamps (breaks byte-reproducibility).
    #[arg(long)]
    stamp: bool,
    /// Re-run the exact configuration recorded in a result file.
    #[arg(long = "from-manifest")]
    from_manifest: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Target gate: cnot, shor15, or file:PATH.
    #[arg(long, required_unless_present = "from_manifest")]
    target: Option<String>,
    /// Sequence file (one `R <word> <angle>` per line).
    #[arg(long, required_unless_present = "from_manifest")]
    sequence: Option<PathBuf>,
    /// Pass threshold on the judged fitness.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Convention index 0..7, or `sweep` to report the best of all eight.
    #[arg(long, default_value = "sweep")]
    convention: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Phase)]
    mode: ModeArg,
    /// Directory for verification.json.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Include wall-clock timestamps (breaks byte-reproducibility).
    #[arg(long)]
    stamp: bool,
    /// Re-run the exact verification recorded in a result file.
    #[arg(long = "from-manifest")]
    from_manifest: Option<PathBuf>,
}

#[derive(Args)]
struct ReplicateArgs {
    /// How to read the single-axis, two-qubit label `xCA`.
    #[arg(long = "xca-reading", value_enum, default_value_t = XcaArg::Xx)]
    xca_reading: XcaArg,
    /// How the published qubit letters bind to tensor positions.
    #[arg(long, value_enum, default_value_t = BindingArg::SwapAb)]
    binding: BindingArg,
    /// Directory for replication.json.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        let code = match &error {
            Error::Io(_) => EXIT_NO_INPUT,
            _ => EXIT_DATA,
        };
        CliError::new(code, error.to_string())
    }
}

/// Parses `argv` and runs the requested command, returning the process exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(error) => {
            return match error.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = error.print();
                    EXIT_OK
                }
                _ => {
                    let _ = error.print();
                    EXIT_USAGE
                }
            };
        }
    };
    let outcome = match cli.command {
        Command::Search(args) => cmd_search(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Replicate(args) => cmd_replicate(args),
    };
    match outcome {
        Ok(code) => code,
        Err(error) => {
            eprintln!("pulseforge: {}", error.message);
            error.code
        }
    }
}

fn parse_convention_choice(text: &str) -> Result<ConventionChoice, CliError> {
    if text == "sweep" {
        return Ok(ConventionChoice::Sweep);
    }
    match text.parse::<usize>() {
        Ok(index) if index < Convention::COUNT => Ok(ConventionChoice::Fixed { index }),
        _ => Err(CliError::new(
            EXIT_USAGE,
            format!(
                "--convention must be an index 0..{} or 'sweep', got '{text}'",
                Convention::COUNT - 1
            ),
        )),
    }
}

fn resolve_target(text: &str) -> Result<(TargetDescriptor, TargetGate), CliError> {
    if let Some(path) = text.strip_prefix("file:") {
        let gate = load_target(path)?;
        let descriptor = TargetDescriptor {
            name: gate.name.clone(),
            qubits: gate.qubits,
            source: text.to_string(),
        };
        return Ok((descriptor, gate));
    }
    match builtin(text) {
        Some(gate) => {
            let descriptor = TargetDescriptor {
                name: gate.name.clone(),
                qubits: gate.qubits,
                source: "builtin".to_string(),
            };
            Ok((descriptor, gate))
        }
        None => Err(CliError::new(
            EXIT_USAGE,
            format!("unknown target '{text}' (expected cnot, shor15, or file:PATH)"),
        )),
    }
}

fn unix_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

fn ensure_out_dir(path: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(path).map_err(|e| CliError::new(EXIT_NO_INPUT, e.to_string()))
}

struct SearchRun {
    convention: Convention,
    result: SearchResult,
    log: Vec<GenerationStats>,
}

fn run_one_search(
    doc: &SearchConfigDoc,
    convention: Convention,
    target: &TargetGate,
) -> Result<SearchRun, CliError> {
    let config = doc.to_config(convention)?;
    let mut log = Vec::new();
    let result = run_search_observed(&config, target, |stats| log.push(*stats))?;
    Ok(SearchRun {
        convention,
        result,
        log,
    })
}

fn cmd_search(args: SearchArgs) -> Result<i32, CliError> {
    let started = unix_ms();
    let (descriptor, target, config_doc) = if let Some(manifest_path) = &args.from_manifest {
        let manifest = load_search_manifest(manifest_path)?;
        let target = manifest.target.resolve()?;
        (manifest.target, target, manifest.config)
    } else {
        let (descriptor, target) = resolve_target(args.target.as_deref().expect("required"))?;
        let qubits = args.qubits.expect("required");
        let length = args.length.expect("required");
        let choice = parse_convention_choice(&args.convention)?;
        let doc = SearchConfigDoc {
            qubits,
            pulses: length,
            population: args.pop,
            generations: args.gens,
            crossover_rate: args.cross_rate,
            mutation_rate: args.mut_rate,
            mutation_mode: crate::manifest::mutation_mode_name(match args.mutation_mode {
                MutationModeArg::PerBit => crate::ga::MutationMode::PerBit,
                MutationModeArg::ModuloCoincidence => crate::ga::MutationMode::ModuloCoincidence,
            })
            .to_string(),
            tolerance: args.tol,
            seed: args.seed,
            fitness_mode: crate::manifest::fitness_mode_name(args.mode.to_mode()).to_string(),
            elitism: args.elitism,
            convention: choice,
        };
        (descriptor, target, doc)
    };

    if descriptor.qubits != config_doc.qubits {
        return Err(CliError::new(
            EXIT_DATA,
            format!(
                "target '{}' acts on {} qubits but the search space declares {}",
                descriptor.name, descriptor.qubits, config_doc.qubits
            ),
        ));
    }

    let chosen = match config_doc.convention {
        ConventionChoice::Fixed { index } => {
            let convention = Convention::from_index(index)?;
            run_one_search(&config_doc, convention, &target)?
        }
        ConventionChoice::Sweep => {
            // Run the full search under each convention; prefer the earliest
            // converged run, otherwise the lowest best fitness.
            let mut runs = Vec::with_capacity(Convention::COUNT);
            for convention in Convention::all() {
                runs.push(run_one_search(&config_doc, convention, &target)?);
            }
            let winner = runs
                .iter()
                .position(|r| r.result.converged)
                .unwrap_or_else(|| {
                    let mut best = 0;
                    for (index, run) in runs.iter().enumerate() {
                        if run.result.best_fitness.value() < runs[best].result.best_fitness.value()
                        {
                            best = index;
                        }
                    }
                    best
                });
            runs.swap_remove(winner)
        }
    };

    let manifest = RunManifest {
        tool: ToolInfo::current(),
        target: descriptor,
        config: config_doc,
        timestamps: args.stamp.then(|| Timestamps {
            started_unix_ms: started,
            finished_unix_ms: unix_ms(),
        }),
    };
    let result_doc = SearchResultDoc::from_result(&chosen.result, chosen.convention);

    ensure_out_dir(&args.out)?;
    let result_path = args.out.join("result.json");
    write_json(
        &result_path,
        &SearchDocument {
            manifest: manifest.clone(),
            result: result_doc,
        },
    )?;
    let log_path = args.out.join("generations.log");
    std::fs::write(&log_path, render_generation_log(&manifest, &chosen.log)?)
        .map_err(Error::from)?;

    println!(
        "search {}: best fitness {:.6e} under convention {} after {} generations ({} evaluations) -> {}",
        manifest.target.name,
        chosen.result.best_fitness.value(),
        chosen.convention.describe(),
        chosen.result.generations_used,
        chosen.result.evaluations,
        if chosen.result.converged {
            "converged"
        } else {
            "budget exhausted"
        },
    );
    println!("wrote {} and {}", result_path.display(), log_path.display());
    Ok(if chosen.result.converged {
        EXIT_OK
    } else {
        EXIT_BUDGET_EXHAUSTED
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let started = unix_ms();
    let (descriptor, target, sequence_source, sequence_text, choice, tolerance, mode_name) =
        if let Some(manifest_path) = &args.from_manifest {
            let manifest = load_verify_manifest(manifest_path)?;
            let target = manifest.target.resolve()?;
            (
                manifest.target,
                target,
                manifest.sequence_source,
                manifest.sequence_lines.join("\n"),
                manifest.convention,
                manifest.tolerance,
                manifest.mode,
            )
        } else {
            let (descriptor, target) = resolve_target(args.target.as_deref().expect("required"))?;
            let path = args.sequence.as_ref().expect("required");
            let text = std::fs::read_to_string(path).map_err(Error::from)?;
            let choice = parse_convention_choice(&args.convention)?;
            (
                descriptor,
                target,
                path.display().to_string(),
                text,
                choice,
                args.tol,
                crate::manifest::fitness_mode_name(args.mode.to_mode()).to_string(),
            )
        };

    let mode = crate::manifest::parse_fitness_mode(&mode_name)?;
    let sequence = parse_sequence_file(&sequence_text, target.qubits)?;
    let convention = match choice {
        ConventionChoice::Fixed { index } => Convention::from_index(index)?,
        ConventionChoice::Sweep => convention_sweep(&sequence, &target)?.0,
    };
    let report = verify_sequence(&sequence, &target, tolerance, convention, mode)?;

    let document = VerifyDocument {
        manifest: VerifyManifest {
            tool: ToolInfo::current(),
            target: descriptor,
            sequence_source,
            sequence_lines: crate::manifest::sequence_lines(&sequence),
            convention: choice,
            tolerance,
            mode: mode_name,
            timestamps: args.stamp.then(|| Timestamps {
                started_unix_ms: started,
                finished_unix_ms: unix_ms(),
            }),
        },
        report,
    };
    ensure_out_dir(&args.out)?;
    let path = args.out.join("verification.json");
    write_json(&path, &document)?;

    let report = &document.report;
    println!(
        "verify {} ({} pulses) vs {}: phase-invariant {:.6e}, frobenius {:.6e}, convention {} -> {}",
        document.manifest.sequence_source,
        sequence.len(),
        report.target,
        report.fitness_phase_invariant,
        report.fitness_frobenius,
        report.convention,
        if report.pass { "PASS" } else { "FAIL" },
    );
    println!("wrote {}", path.display());
    Ok(if report.pass { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct ReplicationDocument {
    tool: ToolInfo,
    report: ReplicationReport,
}

fn cmd_replicate(args: ReplicateArgs) -> Result<i32, CliError> {
    let report =
        replicate_published_tables(args.xca_reading.to_reading(), args.binding.to_binding())?;
    ensure_out_dir(&args.out)?;
    let path = args.out.join("replication.json");
    write_json(
        &path,
        &ReplicationDocument {
            tool: ToolInfo::current(),
            report: report.clone(),
        },
    )?;
    for row in &report.rows {
        println!(
            "table {} row {} vs {}: fitness {:.6e} (tier {:.0e}) under {} -> {}",
            row.table,
            row.row,
            row.target,
            row.fitness_phase_invariant,
            row.tolerance,
            row.convention,
            if row.pass { "PASS" } else { "FAIL" },
        );
    }
    println!("wrote {}", path.display());
    Ok(if report.all_pass {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}
