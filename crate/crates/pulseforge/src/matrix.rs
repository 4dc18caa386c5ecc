//! Small dense complex matrices for gate algebra.
//!
//! Everything in this crate works on `2^n x 2^n` unitaries for n up to a
//! handful of qubits, so a heap-backed dense matrix is plenty. The type is a
//! thin wrapper over [`nalgebra::DMatrix`] that adds the handful of
//! gate-algebra helpers the rest of the crate needs (Kronecker products,
//! unitarity defect, trace overlap).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// A square complex matrix, row-major in its public views.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<Complex64>,
}

impl ComplexMatrix {
    pub fn identity(dim: usize) -> Self {
        Self {
            inner: DMatrix::identity(dim, dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            inner: DMatrix::zeros(dim, dim),
        }
    }

    /// Builds a `dim x dim` matrix from a function of (row, column).
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        Self {
            inner: DMatrix::from_fn(dim, dim, f),
        }
    }

    /// Builds from row-major nested vectors, checking squareness.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Parse(format!(
                "expected a square matrix, got {} rows of varying width",
                dim
            )));
        }
        Ok(Self::from_fn(dim, |r, c| rows[r][c]))
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    /// Number of qubits if the dimension is a power of two >= 2.
    pub fn qubits(&self) -> Result<usize> {
        let dim = self.dim();
        if dim >= 2 && dim.is_power_of_two() {
            Ok(dim.trailing_zeros() as usize)
        } else {
            Err(Error::NotPowerOfTwo { dim })
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.inner[(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.inner[(row, col)] = value;
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.kronecker(&other.inner),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            inner: self.inner.adjoint(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            inner: &self.inner * factor,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner + &other.inner,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            inner: &self.inner * &other.inner,
        })
    }

    pub fn trace(&self) -> Complex64 {
        self.inner.trace()
    }

    /// Trace of `self^H * other`, the Hilbert-Schmidt overlap.
    pub fn overlap(&self, other: &Self) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let mut acc = Complex64::ZERO;
        for c in 0..self.dim() {
            for r in 0..self.dim() {
                acc += self.inner[(r, c)].conj() * other.inner[(r, c)];
            }
        }
        Ok(acc)
    }

    /// Max-norm of `U^H U - I`; zero for an exactly unitary matrix.
    pub fn unitarity_defect(&self) -> f64 {
        let product = self.inner.adjoint() * &self.inner;
        let dim = self.dim();
        let mut worst = 0.0f64;
        for r in 0..dim {
            for c in 0..dim {
                let expect = if r == c {
                    Complex64::ONE
                } else {
                    Complex64::ZERO
                };
                worst = worst.max((product[(r, c)] - expect).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tolerance: f64) -> bool {
        self.unitarity_defect() <= tolerance
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "max_abs_diff on mismatched dims");
        let mut worst = 0.0f64;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                worst = worst.max((self.inner[(r, c)] - other.inner[(r, c)]).norm());
            }
        }
        worst
    }

    /// Frobenius norm of `self - other`.
    pub fn frobenius_distance(&self, other: &Self) -> f64 {
        assert_eq!(
            self.dim(),
            other.dim(),
            "frobenius_distance on mismatched dims"
        );
        let mut acc = 0.0f64;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                acc += (self.inner[(r, c)] - other.inner[(r, c)]).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Row-major copy of the entries.
    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.dim())
            .map(|r| (0..self.dim()).map(|c| self.inner[(r, c)]).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, index: (usize, usize)) -> &Complex64 {
        &self.inner[index]
    }
}

impl std::fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                let z = self.inner[(r, c)];
                write!(f, "{:+.3}{:+.3}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
