//! The search genotype: 9-bit angle genes, 2-bit axis codes, and the decode
//! into a pulse sequence.
//!
//! Run with: cargo run --example encode_decode

use pulseforge::codec::{
    chromosome_dump, decode_angle, decode_chromosome, encode_angle, random_chromosome, Chromosome,
    SearchSpace,
};
use pulseforge::notation::format_pulse_label;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> pulseforge::Result<()> {
    println!("angle grid: 512 genes over 0..360 degrees, whole-degree rounding");
    for gene in [0u16, 1, 128, 255, 256, 383, 510, 511] {
        println!("  gene {gene:>3} -> {:>3} degrees", decode_angle(gene)?);
    }
    println!("  every whole degree survives a round trip:");
    for degree in [0.0, 90.0, 179.0, 270.0, 359.0] {
        let gene = encode_angle(degree);
        println!(
            "  {degree:>5} degrees -> gene {gene:>3} -> {} degrees",
            decode_angle(gene)?
        );
    }

    // A hand-built chromosome: three pulses on two qubits.
    let chromosome = Chromosome::new(
        vec![encode_angle(270.0), encode_angle(90.0), encode_angle(90.0)],
        vec![vec![0, 3], vec![1, 3], vec![1, 0]],
    )?;
    println!("\nhand-built chromosome decodes to:");
    for rotation in decode_chromosome(&chromosome).rotations() {
        println!("  {}", format_pulse_label(rotation));
    }
    println!("dump lines (word angle_gene decoded_angle):");
    for line in chromosome_dump(&chromosome) {
        println!("  {line}");
    }

    // Random chromosomes are deterministic per seed.
    let space = SearchSpace::new(3, 5)?;
    let a = random_chromosome(&mut ChaCha8Rng::seed_from_u64(7), &space);
    let b = random_chromosome(&mut ChaCha8Rng::seed_from_u64(7), &space);
    println!(
        "\nseeded random chromosome ({} pulses on {} qubits), reproducible: {}",
        a.pulses(),
        a.qubits(),
        a == b
    );
    for line in chromosome_dump(&a) {
        println!("  {line}");
    }
    Ok(())
}
