//! Define a target gate in the JSON file format, load it back, and search
//! for a pulse sequence implementing it. Uses SWAP, which has an exact
//! 3-rotation solution (quarter turns about xxAB, yyAB, zzAB).
//!
//! Run with: cargo run --example search_custom_target

use num_complex::Complex64;
use pulseforge::codec::{chromosome_dump, SearchSpace};
use pulseforge::ga::{run_search, GAConfig};
use pulseforge::gates::{load_target, save_target, TargetGate};
use pulseforge::matrix::ComplexMatrix;

fn swap_matrix() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4);
    for (input, output) in [(0usize, 0usize), (1, 2), (2, 1), (3, 3)] {
        m.set(output, input, Complex64::ONE);
    }
    m
}

fn main() -> pulseforge::Result<()> {
    let dir = std::env::temp_dir().join("pulseforge-custom-target");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("swap.json");
    save_target(&path, &TargetGate::checked("swap", swap_matrix(), 1e-12)?)?;
    println!("wrote target file {}", path.display());

    let target = load_target(&path)?;
    println!("loaded '{}' on {} qubits", target.name, target.qubits);

    let mut config = GAConfig::new(SearchSpace::new(2, 3)?);
    config.seed = 3;
    let result = run_search(&config, &target)?;
    println!(
        "search: {} after {} generations, best fitness {:.6e}",
        if result.converged {
            "converged"
        } else {
            "budget exhausted"
        },
        result.generations_used,
        result.best_fitness.value()
    );
    for line in chromosome_dump(&result.best_chromosome) {
        println!("  {line}");
    }
    Ok(())
}
