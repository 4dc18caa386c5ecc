//! Build Pauli-word rotations and inspect their algebra: unitarity, the
//! half-angle structure (360 degrees is -I, not I), and same-axis angle
//! addition.
//!
//! Run with: cargo run --example rotation_algebra

use pulseforge::matrix::ComplexMatrix;
use pulseforge::notation::parse_word;
use pulseforge::unitary::{
    pauli_word_matrix, rotation_matrix, sequence_product, Convention, ProductOrder, PulseSequence,
    Rotation, SigmaZVariant,
};

fn main() -> pulseforge::Result<()> {
    let conv = Convention::default();

    let zz = parse_word("zzAB", 2)?;
    println!("generator zzAB (standard sigma-z):");
    println!("{}", pauli_word_matrix(&zz, SigmaZVariant::Standard));
    println!("generator zzAB (negated sigma-z):");
    println!("{}", pauli_word_matrix(&zz, SigmaZVariant::Negated));

    let xz = parse_word("xzAB", 2)?;
    for angle in [0.0, 90.0, 180.0, 360.0] {
        let m = rotation_matrix(&xz, angle, conv);
        println!(
            "R_xzAB({angle:>3}): unitarity defect {:.2e}, distance from identity {:.3}",
            m.unitarity_defect(),
            m.max_abs_diff(&ComplexMatrix::identity(4)),
        );
    }

    // Two quarter turns about the same axis equal one half turn.
    let seq = PulseSequence::new(
        2,
        vec![
            Rotation::new(xz.clone(), 90.0),
            Rotation::new(xz.clone(), 90.0),
        ],
    )?;
    let composed = sequence_product(&seq, conv);
    let direct = rotation_matrix(&xz, 180.0, conv);
    println!(
        "R_xzAB(90) . R_xzAB(90) vs R_xzAB(180): max deviation {:.2e}",
        composed.max_abs_diff(&direct)
    );

    // Order matters for non-commuting words.
    let mixed = PulseSequence::new(
        2,
        vec![
            Rotation::new(parse_word("xA", 2)?, 90.0),
            Rotation::new(parse_word("zA", 2)?, 90.0),
        ],
    )?;
    let as_listed = sequence_product(&mixed, conv);
    let reversed = sequence_product(
        &mixed,
        Convention {
            product_order: ProductOrder::Reversed,
            ..conv
        },
    );
    println!(
        "xA(90) then zA(90): as-listed vs reversed differ by {:.3}",
        as_listed.max_abs_diff(&reversed)
    );
    Ok(())
}
