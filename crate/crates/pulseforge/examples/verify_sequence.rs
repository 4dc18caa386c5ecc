//! Verify a pulse sequence from a file against a target gate and print the
//! full report, including the residual after global-phase alignment.
//!
//! Run with: cargo run --example verify_sequence

use pulseforge::gates::cnot_gate;
use pulseforge::notation::parse_sequence_file;
use pulseforge::unitary::{Convention, FitnessMode};
use pulseforge::verify::verify_sequence;

fn main() -> pulseforge::Result<()> {
    // An exact 3-rotation CNOT under the default convention (minus sign,
    // standard sigma-z, as-listed order).
    let text = "R zA 90\nR zxAB 270\nR xB 90\n";
    let dir = std::env::temp_dir().join("pulseforge-verify");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("cnot3.seq");
    std::fs::write(&path, text)?;
    println!("sequence file {}:\n{text}", path.display());

    let sequence = parse_sequence_file(text, 2)?;
    let report = verify_sequence(
        &sequence,
        &cnot_gate(),
        1e-6,
        Convention::default(),
        FitnessMode::PhaseInvariant,
    )?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );

    // The same pulses cut one short no longer implement the gate.
    let truncated = parse_sequence_file("R zA 90\nR zxAB 270\n", 2)?;
    let failing = verify_sequence(
        &truncated,
        &cnot_gate(),
        1e-6,
        Convention::default(),
        FitnessMode::PhaseInvariant,
    )?;
    println!(
        "truncated sequence: fitness {:.4} -> {}",
        failing.fitness_phase_invariant,
        if failing.pass { "PASS" } else { "FAIL" }
    );
    Ok(())
}
