//! Result-file schemas: every run writes a JSON document that embeds the
//! full configuration needed to reproduce it bit for bit.
//!
//! Documents contain no timestamps unless explicitly stamped, so re-running a
//! search or verification from its own manifest yields byte-identical files.

use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::codec::{chromosome_dump, SearchSpace};
use crate::error::{Error, Result};
use crate::ga::{GAConfig, GenerationStats, MutationMode, SearchResult};
use crate::gates::{builtin, load_target, TargetGate};
use crate::notation::{format_pulse_line, format_word};
use crate::unitary::{Convention, FitnessMode};
use crate::verify::VerificationReport;

pub const TOOL_NAME: &str = "pulseforge";

pub fn tool_version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> Self {
        Self {
            name: TOOL_NAME.to_string(),
            version: tool_version().to_string(),
        }
    }
}

/// Where a target came from and what it is.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TargetDescriptor {
    pub name: String,
    pub qubits: usize,
    /// `builtin` or `file:<path>`.
    pub source: String,
}

impl TargetDescriptor {
    /// Reconstructs the target gate this descriptor records.
    pub fn resolve(&self) -> Result<TargetGate> {
        if self.source == "builtin" {
            builtin(&self.name).ok_or_else(|| {
                Error::InvalidConfig(format!("unknown builtin target '{}'", self.name))
            })
        } else if let Some(path) = self.source.strip_prefix("file:") {
            load_target(path)
        } else {
            Err(Error::Parse(format!(
                "unknown target source '{}'",
                self.source
            )))
        }
    }
}

/// Which convention a run was asked to use.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum ConventionChoice {
    Fixed { index: usize },
    Sweep,
}

/// Serializable echo of a [`GAConfig`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfigDoc {
    pub qubits: usize,
    pub pulses: usize,
    pub population: usize,
    pub generations: usize,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    pub mutation_mode: String,
    pub tolerance: f64,
    pub seed: u64,
    pub fitness_mode: String,
    pub elitism: usize,
    pub convention: ConventionChoice,
}

pub fn fitness_mode_name(mode: FitnessMode) -> &'static str {
    match mode {
        FitnessMode::PhaseInvariant => "phase",
        FitnessMode::Frobenius => "frobenius",
    }
}

pub fn parse_fitness_mode(name: &str) -> Result<FitnessMode> {
    match name {
        "phase" => Ok(FitnessMode::PhaseInvariant),
        "frobenius" => Ok(FitnessMode::Frobenius),
        other => Err(Error::InvalidConfig(format!(
            "fitness mode must be 'phase' or 'frobenius', got '{other}'"
        ))),
    }
}

pub fn mutation_mode_name(mode: MutationMode) -> &'static str {
    match mode {
        MutationMode::PerBit => "per-bit",
        MutationMode::ModuloCoincidence => "modulo-coincidence",
    }
}

pub fn parse_mutation_mode(name: &str) -> Result<MutationMode> {
    match name {
        "per-bit" => Ok(MutationMode::PerBit),
        "modulo-coincidence" => Ok(MutationMode::ModuloCoincidence),
        other => Err(Error::InvalidConfig(format!(
            "mutation mode must be 'per-bit' or 'modulo-coincidence', got '{other}'"
        ))),
    }
}

impl SearchConfigDoc {
    pub fn from_config(config: &GAConfig, convention: ConventionChoice) -> Self {
        Self {
            qubits: config.space.qubits,
            pulses: config.space.pulses,
            population: config.population_size,
            generations: config.max_generations,
            crossover_rate: config.crossover_rate,
            mutation_rate: config.mutation_rate,
            mutation_mode: mutation_mode_name(config.mutation_mode).to_string(),
            tolerance: config.tolerance,
            seed: config.seed,
            fitness_mode: fitness_mode_name(config.fitness_mode).to_string(),
            elitism: config.elitism,
            convention,
        }
    }

    /// Rebuilds the engine config, resolving a fixed convention index. For a
    /// sweep choice the caller supplies each convention in turn.
    pub fn to_config(&self, convention: Convention) -> Result<GAConfig> {
        Ok(GAConfig {
            population_size: self.population,
            max_generations: self.generations,
            crossover_rate: self.crossover_rate,
            mutation_rate: self.mutation_rate,
            mutation_mode: parse_mutation_mode(&self.mutation_mode)?,
            tolerance: self.tolerance,
            seed: self.seed,
            space: SearchSpace::new(self.qubits, self.pulses)?,
            convention,
            fitness_mode: parse_fitness_mode(&self.fitness_mode)?,
            elitism: self.elitism,
        })
    }
}

/// Wall-clock markers, included only when a run is explicitly stamped.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timestamps {
    pub started_unix_ms: u64,
    pub finished_unix_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: ToolInfo,
    pub target: TargetDescriptor,
    pub config: SearchConfigDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamps: Option<Timestamps>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PulseDoc {
    pub word: String,
    pub angle_deg: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChromosomeDoc {
    pub angle_genes: Vec<u16>,
    pub axis_genes: Vec<Vec<u8>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResultDoc {
    pub converged: bool,
    pub best_fitness: f64,
    pub generations_used: usize,
    pub evaluations: u64,
    pub seed: u64,
    /// Convention the reported result was evaluated under (useful when the
    /// requested choice was a sweep).
    pub convention_index: usize,
    pub best_sequence: Vec<PulseDoc>,
    pub best_chromosome: ChromosomeDoc,
    /// One line per pulse: `word angle_gene decoded_angle`.
    pub best_chromosome_dump: Vec<String>,
}

impl SearchResultDoc {
    pub fn from_result(result: &SearchResult, convention: Convention) -> Self {
        Self {
            converged: result.converged,
            best_fitness: result.best_fitness.value(),
            generations_used: result.generations_used,
            evaluations: result.evaluations,
            seed: result.seed,
            convention_index: convention.index(),
            best_sequence: result
                .best_sequence
                .rotations()
                .iter()
                .map(|r| PulseDoc {
                    word: format_word(r.word()),
                    angle_deg: r.angle_deg(),
                })
                .collect(),
            best_chromosome: ChromosomeDoc {
                angle_genes: result.best_chromosome.angle_genes().to_vec(),
                axis_genes: result.best_chromosome.axis_genes().to_vec(),
            },
            best_chromosome_dump: chromosome_dump(&result.best_chromosome),
        }
    }
}

/// The complete search result file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchDocument {
    pub manifest: RunManifest,
    pub result: SearchResultDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyManifest {
    pub tool: ToolInfo,
    pub target: TargetDescriptor,
    /// Path the sequence was read from, as given on the command line.
    pub sequence_source: String,
    /// Normalized sequence lines; enough to re-run without the source file.
    pub sequence_lines: Vec<String>,
    pub convention: ConventionChoice,
    pub tolerance: f64,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamps: Option<Timestamps>,
}

/// The complete verification result file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub manifest: VerifyManifest,
    pub report: VerificationReport,
}

/// Renders any serializable document as the canonical file bytes.
pub fn render_json<T: Serialize>(document: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(document)?;
    text.push('\n');
    Ok(text)
}

pub fn write_json<T: Serialize>(path: impl AsRef<Path>, document: &T) -> Result<()> {
    std::fs::write(path, render_json(document)?)?;
    Ok(())
}

/// Plain-text generation log: one `generation best mean` line per generation,
/// preceded by `#` header lines embedding the config for reproducibility.
pub fn render_generation_log(manifest: &RunManifest, stats: &[GenerationStats]) -> Result<String> {
    let mut out = String::new();
    out.push_str(&format!("# {} {}\n", TOOL_NAME, tool_version()));
    out.push_str(&format!(
        "# config {}\n",
        serde_json::to_string(&manifest.config)?
    ));
    out.push_str(&format!(
        "# target {}\n",
        serde_json::to_string(&manifest.target)?
    ));
    out.push_str("# generation best_fitness mean_fitness\n");
    for s in stats {
        out.push_str(&format!("{} {} {}\n", s.generation, s.best, s.mean));
    }
    Ok(out)
}

/// Formats a pulse sequence in the sequence-file format (`R <word> <angle>`).
pub fn sequence_lines(sequence: &crate::unitary::PulseSequence) -> Vec<String> {
    sequence.rotations().iter().map(format_pulse_line).collect()
}

/// Loads a search manifest from a result file (either the whole document or
/// a bare manifest object).
pub fn load_search_manifest(path: impl AsRef<Path>) -> Result<RunManifest> {
    let text = std::fs::read_to_string(path.as_ref())?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let manifest_value = value.get("manifest").cloned().unwrap_or(value);
    Ok(serde_json::from_value(manifest_value)?)
}

/// Loads a verification manifest from a result file.
pub fn load_verify_manifest(path: impl AsRef<Path>) -> Result<VerifyManifest> {
    let text = std::fs::read_to_string(path.as_ref())?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let manifest_value = value.get("manifest").cloned().unwrap_or(value);
    Ok(serde_json::from_value(manifest_value)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unitary::Convention;

    #[test]
    fn config_doc_round_trips() {
        let space = SearchSpace::new(2, 3).unwrap();
        let mut config = GAConfig::new(space);
        config.seed = 77;
        config.mutation_mode = MutationMode::ModuloCoincidence;
        let doc = SearchConfigDoc::from_config(&config, ConventionChoice::Fixed { index: 0 });
        let rebuilt = doc.to_config(Convention::from_index(0).unwrap()).unwrap();
        assert_eq!(rebuilt.seed, 77);
        assert_eq!(rebuilt.mutation_mode, MutationMode::ModuloCoincidence);
        assert_eq!(rebuilt.space, space);
        let json = render_json(&doc).unwrap();
        let parsed: SearchConfigDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn render_is_stable() {
        let doc = SearchConfigDoc {
            qubits: 2,
            pulses: 3,
            population: 200,
            generations: 5000,
            crossover_rate: 0.9,
            mutation_rate: 0.02,
            mutation_mode: "per-bit".into(),
            tolerance: 1e-3,
            seed: 7,
            fitness_mode: "phase".into(),
            elitism: 1,
            convention: ConventionChoice::Sweep,
        };
        assert_eq!(render_json(&doc).unwrap(), render_json(&doc).unwrap());
    }

    #[test]
    fn builtin_descriptor_resolves() {
        let descriptor = TargetDescriptor {
            name: "cnot".into(),
            qubits: 2,
            source: "builtin".into(),
        };
        let gate = descriptor.resolve().unwrap();
        assert_eq!(gate.qubits, 2);
        let bad = TargetDescriptor {
            name: "nope".into(),
            qubits: 2,
            source: "builtin".into(),
        };
        assert!(bad.resolve().is_err());
    }
}
