//! Re-check the bundled reference sequences (two 3-rotation CNOT rows, two
//! 5-rotation Shor-core rows) against their targets, sweeping conventions.
//!
//! The CNOT rows reproduce exactly once the qubit letters A and B are bound
//! to transposed tensor positions; the Shor-core rows bottom out near 0.034
//! because their published angles are coarsely rounded. Both letter bindings
//! can be inspected here.
//!
//! Run with: cargo run --example replicate_tables

use pulseforge::verify::{replicate_published_tables, TableBinding, XcaReading};

fn main() -> pulseforge::Result<()> {
    for binding in [TableBinding::SwapAb, TableBinding::AsLabeled] {
        let report = replicate_published_tables(XcaReading::Xx, binding)?;
        println!("binding {}:", report.binding);
        for row in &report.rows {
            println!(
                "  table {} row {} vs {:<7} fitness {:.6e} (tier {:.0e}) under {} -> {}",
                row.table,
                row.row,
                row.target,
                row.fitness_phase_invariant,
                row.tolerance,
                row.convention,
                if row.pass { "PASS" } else { "FAIL" }
            );
            for pulse in &row.sequence {
                println!("      {pulse}");
            }
        }
        println!();
    }
    Ok(())
}
