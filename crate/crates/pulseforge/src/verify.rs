//! Sequence verification, convention sweeps, and the bundled reference suite.
//!
//! [`verify_sequence`] checks one pulse sequence against one target under one
//! convention and reports both fitness modes plus the residual after aligning
//! the global phase. [`convention_sweep`] evaluates all eight conventions and
//! returns the best, breaking ties by the fixed enumeration order.
//!
//! [`replicate_published_tables`] re-checks the pulse sequences published in
//! earlier NMR work: two 3-rotation CNOT sequences ("table 2") and two
//! 5-rotation sequences for the Shor N=15 core ("table 3"). Those sequences
//! only reproduce their targets when the qubit letters A and B are bound to
//! transposed indices (A -> 1, B -> 0); with that binding the CNOT rows match
//! exactly under the minus/negated-z/as-listed convention, while the core
//! rows bottom out near 0.034 because the published angles are coarsely
//! rounded (re-deriving the angles for the same words reaches fitness 0).
//! Both bindings stay available so either reading can be reproduced.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gates::{cnot_gate, shor15_gate, TargetGate};
use crate::matrix::ComplexMatrix;
use crate::notation::{format_pulse_label, parse_word};
use crate::unitary::{
    fitness, optimal_phase, sequence_product, Convention, FitnessMode, FitnessValue, PulseSequence,
    Rotation,
};

/// Strict tier for the 3-rotation CNOT rows.
pub const TABLE2_TOLERANCE: f64 = 1e-6;
/// Rounding-aware tier for the 5-rotation Shor-core rows.
pub const TABLE3_TOLERANCE: f64 = 0.02;

/// Outcome of checking one sequence against one target.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: String,
    pub qubits: usize,
    pub sequence: Vec<String>,
    pub convention_index: usize,
    pub convention: String,
    pub mode: String,
    pub tolerance: f64,
    pub fitness_phase_invariant: f64,
    pub fitness_frobenius: f64,
    /// Largest entrywise deviation after multiplying the product by the
    /// optimal global phase.
    pub residual_max_deviation: f64,
    pub pass: bool,
}

/// Checks `sequence` against `target` under one convention.
///
/// `pass` is judged on the fitness of the requested mode; both modes are
/// always reported.
pub fn verify_sequence(
    sequence: &PulseSequence,
    target: &TargetGate,
    tolerance: f64,
    convention: Convention,
    mode: FitnessMode,
) -> Result<VerificationReport> {
    let product = sequence_product(sequence, convention);
    let phase_invariant = fitness(&product, &target.matrix, FitnessMode::PhaseInvariant)?;
    let frobenius = fitness(&product, &target.matrix, FitnessMode::Frobenius)?;
    let phi = optimal_phase(&product, &target.matrix)?;
    let aligned = product.scale(num_complex::Complex64::from_polar(1.0, -phi));
    let residual = aligned.max_abs_diff(&target.matrix);
    let judged = match mode {
        FitnessMode::PhaseInvariant => phase_invariant,
        FitnessMode::Frobenius => frobenius,
    };
    Ok(VerificationReport {
        target: target.name.clone(),
        qubits: target.qubits,
        sequence: sequence
            .rotations()
            .iter()
            .map(format_pulse_label)
            .collect(),
        convention_index: convention.index(),
        convention: convention.describe(),
        mode: match mode {
            FitnessMode::PhaseInvariant => "phase-invariant".to_string(),
            FitnessMode::Frobenius => "frobenius".to_string(),
        },
        tolerance,
        fitness_phase_invariant: phase_invariant.value(),
        fitness_frobenius: frobenius.value(),
        residual_max_deviation: residual,
        pass: judged.value() <= tolerance,
    })
}

/// Phase-invariant fitness under all eight conventions; returns the argmin.
///
/// Ties go to the earliest convention in [`Convention::all`] order.
pub fn convention_sweep(
    sequence: &PulseSequence,
    target: &TargetGate,
) -> Result<(Convention, FitnessValue)> {
    let mut best: Option<(Convention, FitnessValue)> = None;
    for convention in Convention::all() {
        let product = sequence_product(sequence, convention);
        let value = fitness(&product, &target.matrix, FitnessMode::PhaseInvariant)?;
        let better = match &best {
            Some((_, incumbent)) => value.value() < incumbent.value(),
            None => true,
        };
        if better {
            best = Some((convention, value));
        }
    }
    Ok(best.expect("eight conventions evaluated"))
}

/// How the label pair in `R_xCA` is read: one axis letter against two qubit
/// letters leaves the second qubit's axis unstated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum XcaReading {
    /// x on both C and A (the broadcast reading).
    #[default]
    Xx,
    /// x on C, z on A.
    Xz,
    /// z on C, x on A.
    Zx,
    /// x on C only.
    XOnly,
}

impl XcaReading {
    fn word_text(self) -> &'static str {
        match self {
            XcaReading::Xx => "xCA",
            XcaReading::Xz => "xzCA",
            XcaReading::Zx => "zxCA",
            XcaReading::XOnly => "xC",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            XcaReading::Xx => "xx",
            XcaReading::Xz => "xz",
            XcaReading::Zx => "zx",
            XcaReading::XOnly => "x-only",
        }
    }
}

/// How the reference tables' qubit letters bind to tensor positions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TableBinding {
    /// A and B transposed (A -> 1, B -> 0, C -> 2): the binding under which
    /// the published sequences reproduce their targets.
    #[default]
    SwapAb,
    /// Letters bind in order (A -> 0, B -> 1, C -> 2).
    AsLabeled,
}

impl TableBinding {
    pub fn describe(self) -> &'static str {
        match self {
            TableBinding::SwapAb => "swap-ab",
            TableBinding::AsLabeled => "as-labeled",
        }
    }
}

/// One published row checked against its target.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReplicationRow {
    pub table: u8,
    pub row: u8,
    pub target: String,
    /// The row as printed in its source, e.g. `R_zB(270)`.
    pub published: Vec<String>,
    /// The pulses actually multiplied, after applying the letter binding.
    pub sequence: Vec<String>,
    pub convention_index: usize,
    pub convention: String,
    pub fitness_phase_invariant: f64,
    pub fitness_frobenius: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// The four published rows plus the settings they were checked under.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReplicationReport {
    pub binding: String,
    pub xca_reading: String,
    pub rows: Vec<ReplicationRow>,
    pub all_pass: bool,
}

struct PublishedRow {
    table: u8,
    row: u8,
    qubits: usize,
    tolerance: f64,
    pulses: &'static [(&'static str, f64)],
}

const TABLE2_ROW1: &[(&str, f64)] = &[("zB", 270.0), ("xzAB", 90.0), ("xA", 90.0)];
const TABLE2_ROW2: &[(&str, f64)] = &[("xA", 90.0), ("zB", 270.0), ("xzAB", 90.0)];
const TABLE3_ROW1: &[(&str, f64)] = &[
    ("xA", 90.0),
    ("xC", 250.0),
    ("xCA", 160.0), // reading-dependent; see XcaReading
    ("zxBC", 90.0),
    ("xzAB", 260.0),
];
const TABLE3_ROW2: &[(&str, f64)] = &[
    ("xzAB", 80.0),
    ("xA", 80.0),
    ("zxBC", 110.0),
    ("xC", 105.0),
    ("zB", 190.0),
];

fn published_rows() -> [PublishedRow; 4] {
    [
        PublishedRow {
            table: 2,
            row: 1,
            qubits: 2,
            tolerance: TABLE2_TOLERANCE,
            pulses: TABLE2_ROW1,
        },
        PublishedRow {
            table: 2,
            row: 2,
            qubits: 2,
            tolerance: TABLE2_TOLERANCE,
            pulses: TABLE2_ROW2,
        },
        PublishedRow {
            table: 3,
            row: 1,
            qubits: 3,
            tolerance: TABLE3_TOLERANCE,
            pulses: TABLE3_ROW1,
        },
        PublishedRow {
            table: 3,
            row: 2,
            qubits: 3,
            tolerance: TABLE3_TOLERANCE,
            pulses: TABLE3_ROW2,
        },
    ]
}

/// Builds one published row as a sequence, applying the binding and, for the
/// `xCA` pulse, the chosen reading.
pub fn published_sequence(
    table: u8,
    row: u8,
    xca: XcaReading,
    binding: TableBinding,
) -> Result<PulseSequence> {
    let entry = published_rows()
        .into_iter()
        .find(|r| r.table == table && r.row == row)
        .ok_or_else(|| {
            crate::error::Error::InvalidConfig(format!("no published row {table}/{row}"))
        })?;
    let mut sequence = PulseSequence::empty(entry.qubits);
    for &(text, angle) in entry.pulses {
        let resolved = if text == "xCA" { xca.word_text() } else { text };
        let mut letters = parse_word(resolved, entry.qubits)?.letters().to_vec();
        if binding == TableBinding::SwapAb {
            letters.swap(0, 1);
        }
        let word = crate::unitary::PauliWord::new(letters)?;
        sequence.push(Rotation::new(word, angle))?;
    }
    Ok(sequence)
}

/// Sweeps every published row against its target and reports per-row best
/// convention, both fitness values, and tier pass/fail.
pub fn replicate_published_tables(
    xca: XcaReading,
    binding: TableBinding,
) -> Result<ReplicationReport> {
    let cnot = cnot_gate();
    let shor = shor15_gate();
    let mut rows = Vec::with_capacity(4);
    for entry in published_rows() {
        let target = if entry.table == 2 { &cnot } else { &shor };
        let sequence = published_sequence(entry.table, entry.row, xca, binding)?;
        let (convention, best) = convention_sweep(&sequence, target)?;
        let product = sequence_product(&sequence, convention);
        let frobenius = fitness(&product, &target.matrix, FitnessMode::Frobenius)?;
        let published = entry
            .pulses
            .iter()
            .map(|&(text, angle)| format!("R_{text}({angle})"))
            .collect();
        rows.push(ReplicationRow {
            table: entry.table,
            row: entry.row,
            target: target.name.clone(),
            published,
            sequence: sequence
                .rotations()
                .iter()
                .map(format_pulse_label)
                .collect(),
            convention_index: convention.index(),
            convention: convention.describe(),
            fitness_phase_invariant: best.value(),
            fitness_frobenius: frobenius.value(),
            tolerance: entry.tolerance,
            pass: best.value() <= entry.tolerance,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(ReplicationReport {
        binding: binding.describe().to_string(),
        xca_reading: xca.describe().to_string(),
        rows,
        all_pass,
    })
}

/// Convenience wrapper for checking an ad-hoc sequence against the identity.
pub fn identity_target(qubits: usize) -> TargetGate {
    TargetGate::checked("identity", ComplexMatrix::identity(1 << qubits), 1e-12)
        .expect("identity is unitary")
}
