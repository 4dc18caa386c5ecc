//! Pauli-word rotations, pulse sequences, and distance-to-target fitness.
//!
//! A pulse is the unitary `cos(a/2) I -/+ i sin(a/2) S` where `S` is a tensor
//! product of Pauli matrices (one per qubit, identity allowed) and `a` is the
//! rotation angle in degrees. A pulse sequence is an ordered list of pulses;
//! its matrix product is compared against a target gate, either entrywise
//! (Frobenius) or up to a global phase (trace overlap).
//!
//! Published formulas for these rotations disagree on the sign of the `i`,
//! which `sigma_z` is meant, and which end of the list multiplies first.
//! [`Convention`] makes all three choices explicit; the eight combinations
//! can be swept when verifying a sequence of unknown provenance.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Single-qubit Pauli operator selector, `I` meaning "skip this qubit".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// The 2-bit axis code used by the search genotype.
    pub fn code(self) -> u8 {
        match self {
            Pauli::I => 0,
            Pauli::X => 1,
            Pauli::Y => 2,
            Pauli::Z => 3,
        }
    }

    pub fn from_code(code: u8) -> Result<Self> {
        match code {
            0 => Ok(Pauli::I),
            1 => Ok(Pauli::X),
            2 => Ok(Pauli::Y),
            3 => Ok(Pauli::Z),
            _ => Err(Error::AxisCodeOutOfRange { code }),
        }
    }

    fn matrix(self, variant: SigmaZVariant) -> ComplexMatrix {
        let c = Complex64::new;
        let rows = match self {
            Pauli::I => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]],
            Pauli::X => [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
            Pauli::Y => [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
            Pauli::Z => match variant {
                SigmaZVariant::Negated => [[c(-1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]],
                SigmaZVariant::Standard => {
                    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]
                }
            },
        };
        ComplexMatrix::from_fn(2, |r, col| rows[r][col])
    }
}

/// One Pauli letter per qubit; the rotation generator's tensor structure.
///
/// Letter `k` acts on qubit `k`, and qubit 0 is the most significant bit of
/// the basis-state index (leftmost Kronecker factor).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliWord {
    letters: Vec<Pauli>,
}

impl PauliWord {
    pub fn new(letters: Vec<Pauli>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self { letters })
    }

    /// All-identity word on `qubits` qubits (a degenerate, no-op generator).
    pub fn identity(qubits: usize) -> Result<Self> {
        Self::new(vec![Pauli::I; qubits])
    }

    pub fn qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&p| p == Pauli::I)
    }
}

/// A single pulse: a generator word plus a rotation angle in degrees.
///
/// Angles are stored normalized into `[0, 360)`; 360 wraps to 0. Use
/// [`rotation_matrix`] directly for unnormalized angles (e.g. to see the
/// `-I` at 360 degrees explicitly).
#[derive(Clone, Debug, PartialEq)]
pub struct Rotation {
    word: PauliWord,
    angle_deg: f64,
}

impl Rotation {
    pub fn new(word: PauliWord, angle_deg: f64) -> Self {
        Self {
            word,
            angle_deg: angle_deg.rem_euclid(360.0),
        }
    }

    pub fn word(&self) -> &PauliWord {
        &self.word
    }

    pub fn angle_deg(&self) -> f64 {
        self.angle_deg
    }

    pub fn matrix(&self, convention: Convention) -> ComplexMatrix {
        rotation_matrix(&self.word, self.angle_deg, convention)
    }
}

/// Ordered list of rotations on a fixed number of qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct PulseSequence {
    qubits: usize,
    rotations: Vec<Rotation>,
}

impl PulseSequence {
    pub fn new(qubits: usize, rotations: Vec<Rotation>) -> Result<Self> {
        for r in &rotations {
            if r.word().qubits() != qubits {
                return Err(Error::QubitCountMismatch {
                    expected: qubits,
                    found: r.word().qubits(),
                });
            }
        }
        Ok(Self { qubits, rotations })
    }

    pub fn empty(qubits: usize) -> Self {
        Self {
            qubits,
            rotations: Vec::new(),
        }
    }

    pub fn push(&mut self, rotation: Rotation) -> Result<()> {
        if rotation.word().qubits() != self.qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.qubits,
                found: rotation.word().qubits(),
            });
        }
        self.rotations.push(rotation);
        Ok(())
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn len(&self) -> usize {
        self.rotations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rotations.is_empty()
    }

    pub fn rotations(&self) -> &[Rotation] {
        &self.rotations
    }
}

/// Sign of the `i sin` term in the rotation formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExponentSign {
    Minus,
    Plus,
}

/// Which `sigma_z` the `Z` letter denotes.
///
/// `Negated` is `diag(-1, 1)`; `Standard` is the usual `diag(1, -1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigmaZVariant {
    Negated,
    Standard,
}

/// Whether the first listed rotation is the leftmost or rightmost factor of
/// the sequence product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductOrder {
    AsListed,
    Reversed,
}

/// One of the eight sign/variant/order conventions for turning a pulse
/// sequence into a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Convention {
    pub exponent_sign: ExponentSign,
    pub sigma_z: SigmaZVariant,
    pub product_order: ProductOrder,
}

impl Convention {
    pub const COUNT: usize = 8;

    pub const fn new(
        exponent_sign: ExponentSign,
        sigma_z: SigmaZVariant,
        product_order: ProductOrder,
    ) -> Self {
        Self {
            exponent_sign,
            sigma_z,
            product_order,
        }
    }

    /// All eight conventions in the fixed tie-break order: minus before plus,
    /// negated-z before standard-z, as-listed before reversed.
    pub fn all() -> [Convention; Self::COUNT] {
        let mut out = [Convention::default(); Self::COUNT];
        let mut idx = 0;
        for sign in [ExponentSign::Minus, ExponentSign::Plus] {
            for variant in [SigmaZVariant::Negated, SigmaZVariant::Standard] {
                for order in [ProductOrder::AsListed, ProductOrder::Reversed] {
                    out[idx] = Convention::new(sign, variant, order);
                    idx += 1;
                }
            }
        }
        out
    }

    /// Position of this convention in [`Convention::all`].
    pub fn index(self) -> usize {
        let s = match self.exponent_sign {
            ExponentSign::Minus => 0,
            ExponentSign::Plus => 1,
        };
        let v = match self.sigma_z {
            SigmaZVariant::Negated => 0,
            SigmaZVariant::Standard => 1,
        };
        let o = match self.product_order {
            ProductOrder::AsListed => 0,
            ProductOrder::Reversed => 1,
        };
        s * 4 + v * 2 + o
    }

    pub fn from_index(index: usize) -> Result<Self> {
        if index >= Self::COUNT {
            return Err(Error::InvalidConfig(format!(
                "convention index {index} out of range 0..{}",
                Self::COUNT
            )));
        }
        Ok(Self::all()[index])
    }

    /// The convention under which the bundled reference sequences reproduce
    /// their targets (minus sign, negated sigma-z, as-listed order).
    pub const fn reference() -> Self {
        Convention::new(
            ExponentSign::Minus,
            SigmaZVariant::Negated,
            ProductOrder::AsListed,
        )
    }

    pub fn describe(self) -> String {
        format!(
            "{}/{}/{}",
            match self.exponent_sign {
                ExponentSign::Minus => "minus",
                ExponentSign::Plus => "plus",
            },
            match self.sigma_z {
                SigmaZVariant::Negated => "negated-z",
                SigmaZVariant::Standard => "standard-z",
            },
            match self.product_order {
                ProductOrder::AsListed => "as-listed",
                ProductOrder::Reversed => "reversed",
            }
        )
    }
}

impl Default for Convention {
    /// Minus sign with the standard sigma-z and as-listed order.
    fn default() -> Self {
        Convention::new(
            ExponentSign::Minus,
            SigmaZVariant::Standard,
            ProductOrder::AsListed,
        )
    }
}

/// How sequence-vs-target distance is measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FitnessMode {
    /// `1 - |tr(T^H U)| / dim`: zero iff `U` equals `T` up to a global phase.
    PhaseInvariant,
    /// Frobenius norm of `U - T`: zero iff `U` equals `T` exactly.
    Frobenius,
}

/// Nonnegative distance to the target; zero means a perfect match under the
/// chosen mode.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct FitnessValue(f64);

impl FitnessValue {
    pub fn new(value: f64) -> Self {
        debug_assert!(value.is_finite());
        Self(value.max(0.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Tensor product of the per-qubit Pauli matrices for `word`.
///
/// The result is Hermitian and unitary with eigenvalues +/-1 (the identity
/// for an all-`I` word). Letter 0 is the leftmost Kronecker factor.
pub fn pauli_word_matrix(word: &PauliWord, variant: SigmaZVariant) -> ComplexMatrix {
    let mut acc = word.letters()[0].matrix(variant);
    for letter in &word.letters()[1..] {
        acc = acc.kron(&letter.matrix(variant));
    }
    acc
}

/// `cos(a/2) I -/+ i sin(a/2) S` for `S = pauli_word_matrix(word)`.
///
/// The angle is taken as given (degrees, not normalized), so 360 yields `-I`
/// for any non-identity word.
pub fn rotation_matrix(word: &PauliWord, angle_deg: f64, convention: Convention) -> ComplexMatrix {
    let half = angle_deg.to_radians() / 2.0;
    let generator = pauli_word_matrix(word, convention.sigma_z);
    let dim = generator.dim();
    let sin_factor = match convention.exponent_sign {
        ExponentSign::Minus => Complex64::new(0.0, -half.sin()),
        ExponentSign::Plus => Complex64::new(0.0, half.sin()),
    };
    ComplexMatrix::identity(dim)
        .scale(Complex64::new(half.cos(), 0.0))
        .add(&generator.scale(sin_factor))
}

/// Ordered matrix product of the sequence's rotations.
///
/// With [`ProductOrder::AsListed`] the first rotation is the leftmost factor;
/// with [`ProductOrder::Reversed`] it is the rightmost (i.e. applied first to
/// a ket). The empty sequence yields the identity.
pub fn sequence_product(sequence: &PulseSequence, convention: Convention) -> ComplexMatrix {
    let dim = 1usize << sequence.qubits();
    let mut acc = ComplexMatrix::identity(dim);
    match convention.product_order {
        ProductOrder::AsListed => {
            for rotation in sequence.rotations() {
                acc = acc.mul(&rotation.matrix(convention)).expect("same dim");
            }
        }
        ProductOrder::Reversed => {
            for rotation in sequence.rotations().iter().rev() {
                acc = acc.mul(&rotation.matrix(convention)).expect("same dim");
            }
        }
    }
    acc
}

/// Distance from `result` to `target` under the chosen mode.
pub fn fitness(
    result: &ComplexMatrix,
    target: &ComplexMatrix,
    mode: FitnessMode,
) -> Result<FitnessValue> {
    if result.dim() != target.dim() {
        return Err(Error::DimensionMismatch {
            left: result.dim(),
            right: target.dim(),
        });
    }
    let value = match mode {
        FitnessMode::PhaseInvariant => 1.0 - target.overlap(result)?.norm() / target.dim() as f64,
        FitnessMode::Frobenius => result.frobenius_distance(target),
    };
    Ok(FitnessValue::new(value))
}

/// Global phase `phi = arg(tr(T^H U))` that best aligns `result` to `target`.
pub fn optimal_phase(result: &ComplexMatrix, target: &ComplexMatrix) -> Result<f64> {
    Ok(target.overlap(result)?.arg())
}
