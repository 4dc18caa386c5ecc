//! Target unitaries: CNOT, the Shor N=15 core, and user-supplied matrices.
//!
//! Basis-state indices are labeled with qubit 0 as the most significant bit,
//! so for two qubits the rows/columns read |00>, |01>, |10>, |11>.
//!
//! User targets load from JSON:
//!
//! ```json
//! {
//!   "name": "my-gate",
//!   "qubits": 2,
//!   "matrix": [[[1.0, 0.0], [0.0, 0.0]], ...]
//! }
//! ```
//!
//! where `matrix` is row-major and each entry is `[re, im]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Tolerance applied when validating user-supplied target matrices.
pub const LOAD_UNITARITY_TOLERANCE: f64 = 1e-9;

/// A named unitary the search or verifier should realize up to global phase.
#[derive(Clone, Debug)]
pub struct TargetGate {
    pub name: String,
    pub qubits: usize,
    pub matrix: ComplexMatrix,
    pub tags: Vec<String>,
}

impl TargetGate {
    /// Wraps a matrix after checking its shape and unitarity.
    pub fn checked(
        name: impl Into<String>,
        matrix: ComplexMatrix,
        unitarity_tolerance: f64,
    ) -> Result<Self> {
        let qubits = matrix.qubits()?;
        let defect = matrix.unitarity_defect();
        if defect > unitarity_tolerance {
            return Err(Error::NotUnitary {
                defect,
                tolerance: unitarity_tolerance,
            });
        }
        Ok(Self {
            name: name.into(),
            qubits,
            matrix,
            tags: Vec::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Permutation matrix flipping `target`'s bit wherever `control`'s bit is 1.
pub fn cnot_matrix(qubits: usize, control: usize, target: usize) -> Result<ComplexMatrix> {
    if qubits < 2 {
        return Err(Error::InvalidConfig(format!(
            "cnot needs at least 2 qubits, got {qubits}"
        )));
    }
    if control == target {
        return Err(Error::ControlEqualsTarget);
    }
    for index in [control, target] {
        if index >= qubits {
            return Err(Error::QubitOutOfRange { index, qubits });
        }
    }
    let dim = 1usize << qubits;
    let mut m = ComplexMatrix::zeros(dim);
    for input in 0..dim {
        let control_bit = (input >> (qubits - 1 - control)) & 1;
        let output = input ^ (control_bit << (qubits - 1 - target));
        m.set(output, input, Complex64::ONE);
    }
    Ok(m)
}

/// The 8x8 product of CNOTs with control A on targets B and C: identity on
/// the upper half, bit-reversal of B and C on the lower half.
pub fn shor15_core_matrix() -> ComplexMatrix {
    let ab = cnot_matrix(3, 0, 1).expect("valid indices");
    let ac = cnot_matrix(3, 0, 2).expect("valid indices");
    ab.mul(&ac).expect("same dim")
}

/// The standard 4x4 CNOT target (control = qubit 0).
pub fn cnot_gate() -> TargetGate {
    TargetGate::checked("cnot", cnot_matrix(2, 0, 1).unwrap(), 1e-12).unwrap()
}

/// The Shor N=15 core target.
pub fn shor15_gate() -> TargetGate {
    TargetGate::checked("shor15", shor15_core_matrix(), 1e-12).unwrap()
}

/// Looks up a built-in target by name (`cnot` or `shor15`).
pub fn builtin(name: &str) -> Option<TargetGate> {
    match name {
        "cnot" => Some(cnot_gate()),
        "shor15" => Some(shor15_gate()),
        _ => None,
    }
}

#[derive(Serialize, Deserialize)]
struct TargetFile {
    name: String,
    qubits: usize,
    matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    tags: Vec<String>,
}

/// Loads and validates a target gate from its JSON file.
pub fn load_target(path: impl AsRef<Path>) -> Result<TargetGate> {
    let text = std::fs::read_to_string(path.as_ref())?;
    let file: TargetFile = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.as_ref().display())))?;
    let rows: Vec<Vec<Complex64>> = file
        .matrix
        .iter()
        .map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
        .collect();
    let matrix = ComplexMatrix::from_rows(&rows)?;
    if matrix.qubits()? != file.qubits {
        return Err(Error::Parse(format!(
            "declared {} qubits but matrix is {}x{}",
            file.qubits,
            matrix.dim(),
            matrix.dim()
        )));
    }
    let mut gate = TargetGate::checked(file.name, matrix, LOAD_UNITARITY_TOLERANCE)?;
    gate.tags = file.tags;
    Ok(gate)
}

/// Writes a target gate to the JSON file format accepted by [`load_target`].
pub fn save_target(path: impl AsRef<Path>, gate: &TargetGate) -> Result<()> {
    let file = TargetFile {
        name: gate.name.clone(),
        qubits: gate.qubits,
        matrix: gate
            .matrix
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(|z| [z.re, z.im]).collect())
            .collect(),
        tags: gate.tags.clone(),
    };
    let mut text = serde_json::to_string_pretty(&file)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cnot_control_first_matches_display() {
        // 1s at (1,1),(2,2),(3,4),(4,3) in 1-indexed row/column terms.
        let m = cnot_matrix(2, 0, 1).unwrap();
        let ones = [(0, 0), (1, 1), (2, 3), (3, 2)];
        for r in 0..4 {
            for c in 0..4 {
                let expected = if ones.contains(&(r, c)) { 1.0 } else { 0.0 };
                assert_eq!(m.get(r, c), Complex64::new(expected, 0.0));
            }
        }
    }

    #[test]
    fn cnot_control_second_by_truth_table() {
        // control = qubit 1: |01> <-> |11>, |00> and |10> fixed.
        let m = cnot_matrix(2, 1, 0).unwrap();
        for (input, output) in [(0usize, 0usize), (1, 3), (2, 2), (3, 1)] {
            assert_eq!(m.get(output, input), Complex64::ONE);
        }
    }

    #[test]
    fn cnot_rejects_bad_indices() {
        assert!(matches!(
            cnot_matrix(2, 0, 0),
            Err(Error::ControlEqualsTarget)
        ));
        assert!(matches!(
            cnot_matrix(2, 0, 2),
            Err(Error::QubitOutOfRange {
                index: 2,
                qubits: 2
            })
        ));
        assert!(cnot_matrix(1, 0, 1).is_err());
    }

    #[test]
    fn shor_core_matches_display() {
        // Identity on the upper 4x4 block, anti-diagonal on the lower:
        // 1s at (5,8),(6,7),(7,6),(8,5) in 1-indexed terms.
        let m = shor15_core_matrix();
        let mut expected = ComplexMatrix::zeros(8);
        for i in 0..4 {
            expected.set(i, i, Complex64::ONE);
        }
        for (r, c) in [(4, 7), (5, 6), (6, 5), (7, 4)] {
            expected.set(r, c, Complex64::ONE);
        }
        assert_eq!(m.max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn shor_core_is_an_involution() {
        let m = shor15_core_matrix();
        let sq = m.mul(&m).unwrap();
        assert_eq!(sq.max_abs_diff(&ComplexMatrix::identity(8)), 0.0);
    }

    #[test]
    fn shor_core_factors_commute() {
        let ab = cnot_matrix(3, 0, 1).unwrap();
        let ac = cnot_matrix(3, 0, 2).unwrap();
        let forward = ab.mul(&ac).unwrap();
        let backward = ac.mul(&ab).unwrap();
        assert_eq!(forward.max_abs_diff(&backward), 0.0);
        assert_eq!(forward.max_abs_diff(&shor15_core_matrix()), 0.0);
    }

    #[test]
    fn builtins_are_unitary() {
        for name in ["cnot", "shor15"] {
            let gate = builtin(name).unwrap();
            assert!(gate.matrix.is_unitary(1e-12), "{name}");
        }
        assert!(builtin("toffoli").is_none());
    }

    #[test]
    fn save_and_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cnot.json");
        save_target(&path, &cnot_gate()).unwrap();
        let loaded = load_target(&path).unwrap();
        assert_eq!(loaded.name, "cnot");
        assert_eq!(loaded.qubits, 2);
        assert_eq!(
            loaded.matrix.max_abs_diff(&cnot_matrix(2, 0, 1).unwrap()),
            0.0
        );
    }

    #[test]
    fn load_rejects_non_unitary() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(
            &path,
            r#"{"name":"bad","qubits":1,"matrix":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0]]]}"#,
        )
        .unwrap();
        match load_target(&path) {
            Err(Error::NotUnitary { defect, .. }) => assert!(defect > 0.5),
            other => panic!("expected NotUnitary, got {other:?}"),
        }
    }

    #[test]
    fn load_rejects_bad_dimension() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("odd.json");
        std::fs::write(
            &path,
            r#"{"name":"odd","qubits":1,"matrix":[[[1.0,0.0],[0.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0],[1.0,0.0]]]}"#,
        )
        .unwrap();
        assert!(matches!(
            load_target(&path),
            Err(Error::NotPowerOfTwo { dim: 3 })
        ));
    }

    #[test]
    fn load_rejects_garbage() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("garbage.json");
        std::fs::write(&path, "not json").unwrap();
        assert!(matches!(load_target(&path), Err(Error::Parse(_))));
    }

    proptest! {
        #[test]
        fn cnot_is_a_permutation_matrix(
            qubits in 2usize..4,
            control in 0usize..3,
            target in 0usize..3,
        ) {
            prop_assume!(control < qubits && target < qubits && control != target);
            let m = cnot_matrix(qubits, control, target).unwrap();
            let dim = m.dim();
            for r in 0..dim {
                let row_ones = (0..dim).filter(|&c| m.get(r, c) == Complex64::ONE).count();
                let row_zeros = (0..dim).filter(|&c| m.get(r, c) == Complex64::ZERO).count();
                prop_assert_eq!(row_ones, 1);
                prop_assert_eq!(row_zeros, dim - 1);
                let col_ones = (0..dim).filter(|&c| m.get(c, r) == Complex64::ONE).count();
                prop_assert_eq!(col_ones, 1);
            }
        }
    }
}
