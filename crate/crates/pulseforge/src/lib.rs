//! Genetic-algorithm search for NMR pulse sequences realizing quantum gates.
//!
//! A pulse sequence is an ordered product of Pauli-word rotations
//! `cos(a/2) I -/+ i sin(a/2) S`. This crate searches for short sequences
//! implementing a target unitary (CNOT, the Shor N=15 core, or any
//! user-supplied gate) with a bit-string genetic algorithm, and verifies
//! sequences by direct matrix multiplication, judging matches up to a global
//! phase.
//!
//! The main entry points:
//!
//! - [`gates`]: build or load target unitaries.
//! - [`unitary`]: rotation algebra, sequence products, fitness.
//! - [`codec`]: the 9-bit-angle / 2-bit-axis genotype and its decoding.
//! - [`ga`]: the generational search loop (seeded, fully deterministic).
//! - [`verify`]: single-sequence checks, convention sweeps, and the bundled
//!   reference-sequence suite.
//! - [`cli`]: the `pulseforge` binary (`search`, `verify`, `replicate`).
//!
//! Runnable walkthroughs for each capability live in `examples/`.
//!
//! ```
//! use pulseforge::codec::SearchSpace;
//! use pulseforge::ga::{run_search, GAConfig};
//! use pulseforge::gates::cnot_gate;
//!
//! let mut config = GAConfig::new(SearchSpace::new(2, 3).unwrap());
//! config.population_size = 50;
//! config.max_generations = 40;
//! config.seed = 1;
//! let result = run_search(&config, &cnot_gate()).unwrap();
//! assert_eq!(result.seed, 1);
//! ```

pub mod cli;
pub mod codec;
pub mod error;
pub mod ga;
pub mod gates;
pub mod manifest;
pub mod matrix;
pub mod notation;
pub mod unitary;
pub mod verify;

pub use error::{Error, Result};
