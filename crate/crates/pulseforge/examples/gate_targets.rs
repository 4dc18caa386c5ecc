//! Construct the built-in target gates, check their structure, and round-trip
//! a user target through the JSON file format.
//!
//! Run with: cargo run --example gate_targets

use pulseforge::gates::{cnot_matrix, load_target, save_target, shor15_core_matrix, TargetGate};
use pulseforge::matrix::ComplexMatrix;

fn print_integer_grid(m: &ComplexMatrix) {
    for r in 0..m.dim() {
        let row: Vec<String> = (0..m.dim())
            .map(|c| format!("{}", m.get(r, c).re as i64))
            .collect();
        println!("  [{}]", row.join(" "));
    }
}

fn main() -> pulseforge::Result<()> {
    let cnot = cnot_matrix(2, 0, 1)?;
    println!("cnot(control=A, target=B), rows/columns |00> |01> |10> |11>:");
    print_integer_grid(&cnot);

    let flipped = cnot_matrix(2, 1, 0)?;
    println!("cnot(control=B, target=A):");
    print_integer_grid(&flipped);

    let core = shor15_core_matrix();
    println!("shor15 core = cnot(3,A,B) . cnot(3,A,C):");
    print_integer_grid(&core);
    let squared = core.mul(&core)?;
    println!(
        "core is an involution: core^2 deviates from identity by {:.1e}",
        squared.max_abs_diff(&ComplexMatrix::identity(8))
    );

    // Round-trip a custom target through the JSON format.
    let dir = std::env::temp_dir().join("pulseforge-gate-targets");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("cnot-ba.json");
    save_target(&path, &TargetGate::checked("cnot-ba", flipped, 1e-12)?)?;
    let loaded = load_target(&path)?;
    println!(
        "saved and reloaded '{}' ({} qubits) from {}",
        loaded.name,
        loaded.qubits,
        path.display()
    );

    // Validation rejects anything that is not unitary.
    let bad = dir.join("not-unitary.json");
    std::fs::write(
        &bad,
        r#"{"name":"broken","qubits":1,"matrix":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0]]]}"#,
    )?;
    match load_target(&bad) {
        Err(error) => println!("loading a zero row fails as expected: {error}"),
        Ok(_) => println!("unexpected: non-unitary matrix accepted"),
    }
    Ok(())
}
