//! Published rotation formulas disagree about the sign of the exponent, the
//! sign convention of sigma-z, and which end of a sequence multiplies first.
//! The sweep evaluates a sequence under all eight combinations and reports
//! the one that fits best.
//!
//! Run with: cargo run --example convention_sweep

use pulseforge::gates::cnot_gate;
use pulseforge::notation::parse_sequence_file;
use pulseforge::unitary::{fitness, sequence_product, Convention, FitnessMode};
use pulseforge::verify::convention_sweep;

fn main() -> pulseforge::Result<()> {
    // A 3-rotation CNOT candidate written with the negated sigma-z in mind:
    // only some conventions validate it.
    let sequence = parse_sequence_file("R zA 270\nR zxAB 90\nR xB 90\n", 2)?;
    let target = cnot_gate();

    println!("fitness under each convention:");
    for convention in Convention::all() {
        let product = sequence_product(&sequence, convention);
        let value = fitness(&product, &target.matrix, FitnessMode::PhaseInvariant)?;
        println!(
            "  #{} {:<32} {:.6e}",
            convention.index(),
            convention.describe(),
            value.value()
        );
    }

    let (best, best_fitness) = convention_sweep(&sequence, &target)?;
    println!(
        "sweep winner: #{} {} at {:.6e} (ties break toward the lowest index)",
        best.index(),
        best.describe(),
        best_fitness.value()
    );
    Ok(())
}
