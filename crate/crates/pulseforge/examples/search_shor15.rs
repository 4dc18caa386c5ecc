//! Search for a 5-rotation pulse sequence implementing the Shor N=15 core
//! (the product of CNOTs from qubit A onto B and C).
//!
//! Run with: cargo run --example search_shor15 [seed]

use pulseforge::codec::{chromosome_dump, SearchSpace};
use pulseforge::ga::{run_search_observed, GAConfig};
use pulseforge::gates::shor15_gate;
use std::time::Instant;

fn main() -> pulseforge::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);

    let mut config = GAConfig::new(SearchSpace::new(3, 5)?);
    config.population_size = 500;
    config.max_generations = 20_000;
    config.seed = seed;

    let target = shor15_gate();
    let started = Instant::now();
    let result = run_search_observed(&config, &target, |stats| {
        if stats.generation % 20 == 0 {
            println!(
                "gen {:>5}: best {:.4e} mean {:.4}",
                stats.generation, stats.best, stats.mean
            );
        }
    })?;

    println!(
        "\nseed {seed}: {} after {} generations ({} evaluations) in {:.1}s",
        if result.converged {
            "converged"
        } else {
            "budget exhausted"
        },
        result.generations_used,
        result.evaluations,
        started.elapsed().as_secs_f64()
    );
    println!("best fitness {:.6e}", result.best_fitness.value());
    println!("best sequence (word angle_gene decoded_angle):");
    for line in chromosome_dump(&result.best_chromosome) {
        println!("  {line}");
    }
    Ok(())
}
