//! Search for a 3-rotation pulse sequence implementing CNOT.
//!
//! Run with: cargo run --example search_cnot [seed]

use pulseforge::codec::{chromosome_dump, SearchSpace};
use pulseforge::ga::{run_search_observed, GAConfig};
use pulseforge::gates::cnot_gate;

fn main() -> pulseforge::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);

    let mut config = GAConfig::new(SearchSpace::new(2, 3)?);
    config.seed = seed;
    // defaults: population 200, up to 5000 generations, tolerance 1e-3

    let target = cnot_gate();
    let result = run_search_observed(&config, &target, |stats| {
        if stats.generation % 10 == 0 {
            println!(
                "gen {:>4}: best {:.4e} mean {:.4}",
                stats.generation, stats.best, stats.mean
            );
        }
    })?;

    println!(
        "\nseed {seed}: {} after {} generations ({} evaluations)",
        if result.converged {
            "converged"
        } else {
            "budget exhausted"
        },
        result.generations_used,
        result.evaluations
    );
    println!("best fitness {:.6e}", result.best_fitness.value());
    println!("best sequence (word angle_gene decoded_angle):");
    for line in chromosome_dump(&result.best_chromosome) {
        println!("  {line}");
    }
    Ok(())
}
