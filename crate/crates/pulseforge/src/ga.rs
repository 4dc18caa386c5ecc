//! Generational genetic algorithm over pulse-sequence chromosomes.
//!
//! Each generation: evaluate -> check the tolerance -> roulette-select parent
//! pairs -> single-point crossover (angle and axis bit-strings cut
//! independently) -> mutate -> copy the elite through unchanged. Lower
//! fitness is better; selection weights are `1 / (1e-9 + fitness)`.
//!
//! Runs are deterministic for a given config: one ChaCha8 stream seeded from
//! `GAConfig::seed` drives initialization and variation, consumed in a fixed
//! order (selection spins, then per pair a crossover coin and two cut draws,
//! then mutation draws per offspring). Fitness evaluation never touches the
//! stream, so it may run on any number of threads; `PULSEFORGE_THREADS` caps
//! the evaluation pool (0 or unset = automatic).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::sync::OnceLock;

use crate::codec::{decode_chromosome, random_chromosome, Chromosome, SearchSpace, ANGLE_LEVELS};
use crate::error::{Error, Result};
use crate::gates::TargetGate;
use crate::unitary::{
    fitness, sequence_product, Convention, FitnessMode, FitnessValue, PulseSequence,
};

/// Guard added to fitness before inversion so a perfect score keeps a finite
/// selection weight.
const SELECTION_GUARD: f64 = 1e-9;

/// How offspring are perturbed after crossover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationMode {
    /// Every bit flips independently with probability `mutation_rate`.
    PerBit,
    /// For each gene, two random draws from the angle search space are
    /// reduced modulo `round(1 / mutation_rate)`; if the residues collide,
    /// every bit of that gene flips. Fires with probability roughly equal to
    /// the rate.
    ModuloCoincidence,
}

/// Full configuration of one search run.
#[derive(Clone, Debug, PartialEq)]
pub struct GAConfig {
    pub population_size: usize,
    pub max_generations: usize,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    pub mutation_mode: MutationMode,
    /// Fitness at or below which the search stops as converged.
    pub tolerance: f64,
    pub seed: u64,
    pub space: SearchSpace,
    pub convention: Convention,
    pub fitness_mode: FitnessMode,
    /// Number of best individuals copied unchanged into the next generation.
    pub elitism: usize,
}

impl GAConfig {
    /// Defaults tuned for the bundled gate searches; override fields as
    /// needed.
    pub fn new(space: SearchSpace) -> Self {
        Self {
            population_size: 200,
            max_generations: 5000,
            crossover_rate: 0.9,
            mutation_rate: 0.02,
            mutation_mode: MutationMode::PerBit,
            tolerance: 1e-3,
            seed: 0,
            space,
            convention: Convention::default(),
            fitness_mode: FitnessMode::PhaseInvariant,
            elitism: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 || !self.population_size.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "population size must be even and at least 2, got {}",
                self.population_size
            )));
        }
        if self.max_generations == 0 {
            return Err(Error::InvalidConfig(
                "max generations must be positive".into(),
            ));
        }
        for (label, rate) in [
            ("crossover rate", self.crossover_rate),
            ("mutation rate", self.mutation_rate),
        ] {
            if !(0.0..=1.0).contains(&rate) {
                return Err(Error::InvalidConfig(format!(
                    "{label} {rate} outside [0, 1]"
                )));
            }
        }
        if self.tolerance < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "tolerance {} must be nonnegative",
                self.tolerance
            )));
        }
        if self.elitism >= self.population_size {
            return Err(Error::InvalidConfig(format!(
                "elitism {} must be below the population size {}",
                self.elitism, self.population_size
            )));
        }
        Ok(())
    }
}

/// Outcome of a search run.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub best_chromosome: Chromosome,
    pub best_sequence: PulseSequence,
    pub best_fitness: FitnessValue,
    pub generations_used: usize,
    pub evaluations: u64,
    pub seed: u64,
    pub converged: bool,
}

/// One line of the generation log.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenerationStats {
    pub generation: usize,
    pub best: f64,
    pub mean: f64,
}

fn evaluation_pool() -> Option<&'static rayon::ThreadPool> {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("PULSEFORGE_THREADS")
            .ok()
            .and_then(|value| value.parse::<usize>().ok())
            .unwrap_or(0);
        if threads == 0 {
            None
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .ok()
        }
    })
    .as_ref()
}

/// Fitness of every chromosome against the target, order-preserving.
///
/// Entries are independent pure computations and may be evaluated on any
/// number of threads without affecting the values.
pub fn evaluate_population(
    population: &[Chromosome],
    target: &TargetGate,
    config: &GAConfig,
) -> Result<Vec<FitnessValue>> {
    let space_dim = 1usize << config.space.qubits;
    if space_dim != target.dim() {
        return Err(Error::DimensionMismatch {
            left: space_dim,
            right: target.dim(),
        });
    }
    let evaluate = |chromosome: &Chromosome| {
        let sequence = decode_chromosome(chromosome);
        let product = sequence_product(&sequence, config.convention);
        fitness(&product, &target.matrix, config.fitness_mode).expect("dims prechecked")
    };
    let run = || population.par_iter().map(evaluate).collect();
    Ok(match evaluation_pool() {
        Some(pool) => pool.install(run),
        None => run(),
    })
}

/// Roulette selection on inverted fitness; returns `len / 2` index pairs.
pub fn select_parents(
    fitnesses: &[FitnessValue],
    rng: &mut impl Rng,
) -> Result<Vec<(usize, usize)>> {
    if fitnesses.is_empty() {
        return Err(Error::InvalidConfig(
            "cannot select from an empty population".into(),
        ));
    }
    let mut cumulative = Vec::with_capacity(fitnesses.len());
    let mut total = 0.0f64;
    for f in fitnesses {
        total += 1.0 / (SELECTION_GUARD + f.value());
        cumulative.push(total);
    }
    let spin = |rng: &mut dyn rand::RngCore| {
        let ticket = rng.random::<f64>() * total;
        cumulative
            .partition_point(|&edge| edge <= ticket)
            .min(fitnesses.len() - 1)
    };
    Ok((0..fitnesses.len() / 2)
        .map(|_| (spin(rng), spin(rng)))
        .collect())
}

/// Single-point crossover at explicit cut positions.
///
/// Bit position `c` counts from the left (most significant end); offspring
/// one takes the first `c` bits of the first parent and the tail of the
/// second. The angle and axis bit-strings are cut independently.
pub fn crossover_at_cuts(
    first: &Chromosome,
    second: &Chromosome,
    angle_cut: usize,
    axis_cut: usize,
) -> Result<(Chromosome, Chromosome)> {
    let space = first.space();
    if second.space() != space {
        return Err(Error::InvalidConfig(
            "crossover parents must share the same shape".into(),
        ));
    }
    let angle_len = space.angle_bit_len();
    let axis_len = space.axis_bit_len();
    if angle_cut == 0 || angle_cut >= angle_len || axis_cut == 0 || axis_cut >= axis_len {
        return Err(Error::InvalidConfig(format!(
            "cut points ({angle_cut}, {axis_cut}) outside (0, {angle_len}) x (0, {axis_len})"
        )));
    }
    let swap_tail = |a: &[bool], b: &[bool], cut: usize| -> (Vec<bool>, Vec<bool>) {
        let mut left = a[..cut].to_vec();
        left.extend_from_slice(&b[cut..]);
        let mut right = b[..cut].to_vec();
        right.extend_from_slice(&a[cut..]);
        (left, right)
    };
    let (angle_one, angle_two) = swap_tail(&first.angle_bits(), &second.angle_bits(), angle_cut);
    let (axis_one, axis_two) = swap_tail(&first.axis_bits(), &second.axis_bits(), axis_cut);
    Ok((
        Chromosome::from_bits(&angle_one, &axis_one, space)?,
        Chromosome::from_bits(&angle_two, &axis_two, space)?,
    ))
}

/// With probability `rate`, crosses the parents at random cut points (angle
/// and axis strings independently); otherwise clones them.
pub fn crossover(
    first: &Chromosome,
    second: &Chromosome,
    rate: f64,
    rng: &mut impl Rng,
) -> Result<(Chromosome, Chromosome)> {
    if !(0.0..=1.0).contains(&rate) {
        return Err(Error::InvalidConfig(format!(
            "crossover rate {rate} outside [0, 1]"
        )));
    }
    let space = first.space();
    if second.space() != space {
        return Err(Error::InvalidConfig(
            "crossover parents must share the same shape".into(),
        ));
    }
    if rng.random::<f64>() < rate {
        let angle_cut = rng.random_range(1..space.angle_bit_len());
        let axis_cut = rng.random_range(1..space.axis_bit_len());
        crossover_at_cuts(first, second, angle_cut, axis_cut)
    } else {
        Ok((first.clone(), second.clone()))
    }
}

/// Mutates a chromosome under the chosen mode. Gene values stay inside their
/// encodable ranges by construction (flips never leave the 9- or 2-bit
/// width).
pub fn mutate(
    chromosome: &Chromosome,
    rate: f64,
    mode: MutationMode,
    rng: &mut impl Rng,
) -> Result<Chromosome> {
    if !(0.0..=1.0).contains(&rate) {
        return Err(Error::InvalidConfig(format!(
            "mutation rate {rate} outside [0, 1]"
        )));
    }
    let mut angle_genes = chromosome.angle_genes().to_vec();
    let mut axis_genes = chromosome.axis_genes().to_vec();
    match mode {
        MutationMode::PerBit => {
            for gene in angle_genes.iter_mut() {
                for position in (0..crate::codec::ANGLE_BITS).rev() {
                    if rng.random::<f64>() < rate {
                        *gene ^= 1 << position;
                    }
                }
            }
            for word in axis_genes.iter_mut() {
                for code in word.iter_mut() {
                    for position in (0..crate::codec::AXIS_BITS).rev() {
                        if rng.random::<f64>() < rate {
                            *code ^= 1 << position;
                        }
                    }
                }
            }
        }
        MutationMode::ModuloCoincidence => {
            if rate > 0.0 {
                let divisor = (1.0 / rate).round().max(1.0) as u32;
                let coincides = |rng: &mut dyn rand::RngCore| {
                    let a = rng.random_range(0..u32::from(ANGLE_LEVELS));
                    let b = rng.random_range(0..u32::from(ANGLE_LEVELS));
                    a % divisor == b % divisor
                };
                for gene in angle_genes.iter_mut() {
                    if coincides(rng) {
                        *gene ^= ANGLE_LEVELS - 1;
                    }
                }
                for word in axis_genes.iter_mut() {
                    for code in word.iter_mut() {
                        if coincides(rng) {
                            *code ^= 0b11;
                        }
                    }
                }
            }
        }
    }
    Chromosome::new(angle_genes, axis_genes)
}

/// Runs the generational loop to completion, calling `observer` once per
/// evaluated generation.
pub fn run_search_observed(
    config: &GAConfig,
    target: &TargetGate,
    mut observer: impl FnMut(&GenerationStats),
) -> Result<SearchResult> {
    config.validate()?;
    if 1usize << config.space.qubits != target.dim() {
        return Err(Error::DimensionMismatch {
            left: 1usize << config.space.qubits,
            right: target.dim(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut population: Vec<Chromosome> = (0..config.population_size)
        .map(|_| random_chromosome(&mut rng, &config.space))
        .collect();

    let mut best: Option<(f64, Chromosome)> = None;
    let mut evaluations = 0u64;
    let mut generations_used = 0;
    let mut converged = false;

    for generation in 0..config.max_generations {
        let fitnesses = evaluate_population(&population, target, config)?;
        evaluations += population.len() as u64;
        generations_used = generation + 1;

        let mut generation_best = 0usize;
        let mut sum = 0.0f64;
        for (index, f) in fitnesses.iter().enumerate() {
            sum += f.value();
            if f.value() < fitnesses[generation_best].value() {
                generation_best = index;
            }
        }
        let generation_best_fitness = fitnesses[generation_best].value();
        if best
            .as_ref()
            .map(|(value, _)| generation_best_fitness < *value)
            .unwrap_or(true)
        {
            best = Some((generation_best_fitness, population[generation_best].clone()));
        }
        observer(&GenerationStats {
            generation,
            best: generation_best_fitness,
            mean: sum / fitnesses.len() as f64,
        });

        if generation_best_fitness <= config.tolerance {
            converged = true;
            break;
        }
        if generation + 1 == config.max_generations {
            break; // budget spent; do not breed a population that never gets scored
        }

        let pairs = select_parents(&fitnesses, &mut rng)?;
        let mut offspring = Vec::with_capacity(config.population_size);
        for (left, right) in pairs {
            let (one, two) = crossover(
                &population[left],
                &population[right],
                config.crossover_rate,
                &mut rng,
            )?;
            offspring.push(mutate(
                &one,
                config.mutation_rate,
                config.mutation_mode,
                &mut rng,
            )?);
            offspring.push(mutate(
                &two,
                config.mutation_rate,
                config.mutation_mode,
                &mut rng,
            )?);
        }

        let mut ranked: Vec<usize> = (0..population.len()).collect();
        ranked.sort_by(|&a, &b| fitnesses[a].value().total_cmp(&fitnesses[b].value()));
        for (slot, &elite) in ranked.iter().take(config.elitism).enumerate() {
            offspring[slot] = population[elite].clone();
        }
        population = offspring;
    }

    let (_, best_chromosome) = best.expect("at least one generation evaluated");
    let best_sequence = decode_chromosome(&best_chromosome);
    // Recompute from scratch so the reported fitness is reproducible from the
    // decoded sequence alone.
    let best_fitness = fitness(
        &sequence_product(&best_sequence, config.convention),
        &target.matrix,
        config.fitness_mode,
    )?;
    Ok(SearchResult {
        best_chromosome,
        best_sequence,
        best_fitness,
        generations_used,
        evaluations,
        seed: config.seed,
        converged,
    })
}

/// Runs the generational loop without observing per-generation stats.
pub fn run_search(config: &GAConfig, target: &TargetGate) -> Result<SearchResult> {
    run_search_observed(config, target, |_| {})
}
