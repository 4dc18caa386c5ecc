//! Bit-level genotype for the search and its decoding into pulse sequences.
//!
//! Each pulse is encoded by one 9-bit angle gene (512 levels spanning 0..360
//! degrees, decoded to the nearest whole degree) and one 2-bit axis code per
//! qubit (0 = I, 1 = X, 2 = Y, 3 = Z). The identity code lets a pulse skip a
//! qubit, which is how single-qubit pulses live inside a fixed-width gene.

use rand::Rng;

use crate::error::{Error, Result};
use crate::notation::format_word;
use crate::unitary::{Pauli, PauliWord, PulseSequence, Rotation};

/// Bits per angle gene.
pub const ANGLE_BITS: usize = 9;
/// Number of representable angle levels, `2^ANGLE_BITS`.
pub const ANGLE_LEVELS: u16 = 1 << ANGLE_BITS;
/// Bits per per-qubit axis code.
pub const AXIS_BITS: usize = 2;

/// Shape of the genotype: qubit count and pulse count, with angles spanning
/// 0..360 degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchSpace {
    pub qubits: usize,
    pub pulses: usize,
}

impl SearchSpace {
    pub const MIN_ANGLE_DEG: f64 = 0.0;
    pub const MAX_ANGLE_DEG: f64 = 360.0;

    pub fn new(qubits: usize, pulses: usize) -> Result<Self> {
        if qubits == 0 || pulses == 0 {
            return Err(Error::InvalidConfig(format!(
                "search space needs at least one qubit and one pulse, got {qubits} qubit(s), {pulses} pulse(s)"
            )));
        }
        Ok(Self { qubits, pulses })
    }

    /// Total length of the concatenated angle bit-string.
    pub fn angle_bit_len(&self) -> usize {
        ANGLE_BITS * self.pulses
    }

    /// Total length of the concatenated axis bit-string.
    pub fn axis_bit_len(&self) -> usize {
        AXIS_BITS * self.qubits * self.pulses
    }
}

/// The genotype: one angle gene per pulse plus one axis word per pulse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chromosome {
    angle_genes: Vec<u16>,
    axis_genes: Vec<Vec<u8>>,
}

impl Chromosome {
    pub fn new(angle_genes: Vec<u16>, axis_genes: Vec<Vec<u8>>) -> Result<Self> {
        if angle_genes.is_empty() || angle_genes.len() != axis_genes.len() {
            return Err(Error::InvalidConfig(format!(
                "{} angle genes vs {} axis words",
                angle_genes.len(),
                axis_genes.len()
            )));
        }
        let qubits = axis_genes[0].len();
        if qubits == 0 {
            return Err(Error::EmptyWord);
        }
        for gene in &angle_genes {
            if *gene >= ANGLE_LEVELS {
                return Err(Error::GeneOutOfRange { gene: *gene });
            }
        }
        for word in &axis_genes {
            if word.len() != qubits {
                return Err(Error::QubitCountMismatch {
                    expected: qubits,
                    found: word.len(),
                });
            }
            for code in word {
                if *code >= 4 {
                    return Err(Error::AxisCodeOutOfRange { code: *code });
                }
            }
        }
        Ok(Self {
            angle_genes,
            axis_genes,
        })
    }

    pub fn pulses(&self) -> usize {
        self.angle_genes.len()
    }

    pub fn qubits(&self) -> usize {
        self.axis_genes[0].len()
    }

    pub fn space(&self) -> SearchSpace {
        SearchSpace {
            qubits: self.qubits(),
            pulses: self.pulses(),
        }
    }

    pub fn angle_genes(&self) -> &[u16] {
        &self.angle_genes
    }

    pub fn axis_genes(&self) -> &[Vec<u8>] {
        &self.axis_genes
    }

    /// Concatenated angle bits, most significant bit of each gene first.
    pub fn angle_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.space().angle_bit_len());
        for &gene in &self.angle_genes {
            for position in (0..ANGLE_BITS).rev() {
                bits.push((gene >> position) & 1 == 1);
            }
        }
        bits
    }

    /// Concatenated axis bits, pulse-major then qubit order, MSB first.
    pub fn axis_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.space().axis_bit_len());
        for word in &self.axis_genes {
            for &code in word {
                for position in (0..AXIS_BITS).rev() {
                    bits.push((code >> position) & 1 == 1);
                }
            }
        }
        bits
    }

    /// Rebuilds a chromosome from bit-strings produced by
    /// [`Chromosome::angle_bits`] / [`Chromosome::axis_bits`].
    pub fn from_bits(angle_bits: &[bool], axis_bits: &[bool], space: SearchSpace) -> Result<Self> {
        if angle_bits.len() != space.angle_bit_len() || axis_bits.len() != space.axis_bit_len() {
            return Err(Error::InvalidConfig(format!(
                "bit-string lengths {}/{} do not match space {}x{}",
                angle_bits.len(),
                axis_bits.len(),
                space.pulses,
                space.qubits
            )));
        }
        let angle_genes = angle_bits
            .chunks(ANGLE_BITS)
            .map(|chunk| chunk.iter().fold(0u16, |acc, &b| (acc << 1) | b as u16))
            .collect();
        let axis_genes = axis_bits
            .chunks(AXIS_BITS * space.qubits)
            .map(|word_bits| {
                word_bits
                    .chunks(AXIS_BITS)
                    .map(|chunk| chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8))
                    .collect()
            })
            .collect();
        Self::new(angle_genes, axis_genes)
    }
}

/// Decodes a 9-bit gene to a whole-degree angle in `[0, 360)`.
///
/// The gene grid maps 0..511 linearly onto 0..360 degrees, rounded to the
/// nearest degree; gene 511 decodes to 360 and wraps to 0.
pub fn decode_angle(gene: u16) -> Result<u16> {
    if gene >= ANGLE_LEVELS {
        return Err(Error::GeneOutOfRange { gene });
    }
    let degrees = (f64::from(gene) * 360.0 / f64::from(ANGLE_LEVELS - 1)).round() as u16;
    Ok(degrees % 360)
}

/// Nearest gene for an angle in degrees (normalized into `[0, 360)` first).
///
/// Inverse of [`decode_angle`] on whole degrees: `decode(encode(a)) == a` for
/// every integer `a` in `[0, 359]`. Angles within half a grid step of 360
/// map to gene 511, which decodes to the wrapped value 0.
pub fn encode_angle(angle_deg: f64) -> u16 {
    let normalized = angle_deg.rem_euclid(360.0);
    let gene = (normalized * f64::from(ANGLE_LEVELS - 1) / 360.0).round();
    (gene as u16).min(ANGLE_LEVELS - 1)
}

/// Decodes the genotype into its pulse sequence.
///
/// All-identity axis words are kept as explicit no-op pulses.
pub fn decode_chromosome(chromosome: &Chromosome) -> PulseSequence {
    let qubits = chromosome.qubits();
    let mut sequence = PulseSequence::empty(qubits);
    for (gene, word_codes) in chromosome.angle_genes().iter().zip(chromosome.axis_genes()) {
        let letters = word_codes
            .iter()
            .map(|&code| Pauli::from_code(code).expect("validated at construction"))
            .collect();
        let word = PauliWord::new(letters).expect("non-empty by construction");
        let angle = decode_angle(*gene).expect("validated at construction");
        sequence
            .push(Rotation::new(word, f64::from(angle)))
            .expect("uniform qubit count");
    }
    sequence
}

/// Uniform random chromosome; deterministic given the generator state.
pub fn random_chromosome(rng: &mut impl Rng, space: &SearchSpace) -> Chromosome {
    let angle_genes = (0..space.pulses)
        .map(|_| rng.random_range(0..ANGLE_LEVELS))
        .collect();
    let axis_genes = (0..space.pulses)
        .map(|_| {
            (0..space.qubits)
                .map(|_| rng.random_range(0u8..4))
                .collect()
        })
        .collect();
    Chromosome::new(angle_genes, axis_genes).expect("generated within range")
}

/// Text dump, one line per pulse: `word angle_gene decoded_angle`.
pub fn chromosome_dump(chromosome: &Chromosome) -> Vec<String> {
    let sequence = decode_chromosome(chromosome);
    sequence
        .rotations()
        .iter()
        .zip(chromosome.angle_genes())
        .map(|(rotation, gene)| {
            format!(
                "{} {} {}",
                format_word(rotation.word()),
                gene,
                rotation.angle_deg()
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn decode_angle_reference_points() {
        assert_eq!(decode_angle(0).unwrap(), 0);
        // 128 * 360 / 511 = 90.18 rounds to 90
        assert_eq!(decode_angle(128).unwrap(), 90);
        // top of the grid is 360, stored as 0
        assert_eq!(decode_angle(511).unwrap(), 0);
        assert!(matches!(
            decode_angle(512),
            Err(Error::GeneOutOfRange { gene: 512 })
        ));
    }

    #[test]
    fn decode_angle_image_and_monotonicity() {
        let mut previous = 0;
        for gene in 0..=510u16 {
            let angle = decode_angle(gene).unwrap();
            assert!(angle < 360);
            assert!(angle >= previous, "gene {gene} broke monotonicity");
            previous = angle;
        }
        assert_eq!(decode_angle(511).unwrap(), 0);
    }

    #[test]
    fn every_whole_degree_round_trips() {
        for degree in 0..360u16 {
            let gene = encode_angle(f64::from(degree));
            assert_eq!(decode_angle(gene).unwrap(), degree, "degree {degree}");
        }
    }

    #[test]
    fn identity_pulse_decodes_as_noop() {
        let c = Chromosome::new(vec![0], vec![vec![1, 0]]).unwrap();
        let seq = decode_chromosome(&c);
        assert_eq!(seq.len(), 1);
        assert_eq!(seq.rotations()[0].angle_deg(), 0.0);
        assert_eq!(seq.rotations()[0].word().letters(), &[Pauli::X, Pauli::I]);
    }

    #[test]
    fn reference_cnot_genes_decode_to_expected_sequence() {
        // angles {270, 90, 90} with words {zB, xzAB, xA}
        let c = Chromosome::new(
            vec![encode_angle(270.0), encode_angle(90.0), encode_angle(90.0)],
            vec![vec![0, 3], vec![1, 3], vec![1, 0]],
        )
        .unwrap();
        let seq = decode_chromosome(&c);
        let rendered: Vec<String> = seq
            .rotations()
            .iter()
            .map(crate::notation::format_pulse_label)
            .collect();
        assert_eq!(rendered, vec!["R_zB(270)", "R_xzAB(90)", "R_xA(90)"]);
    }

    #[test]
    fn dump_lists_word_gene_and_angle() {
        let c = Chromosome::new(vec![128], vec![vec![1, 3]]).unwrap();
        assert_eq!(chromosome_dump(&c), vec!["xzAB 128 90"]);
    }

    #[test]
    fn random_chromosome_is_seed_deterministic() {
        let space = SearchSpace::new(2, 3).unwrap();
        let a = random_chromosome(&mut ChaCha8Rng::seed_from_u64(42), &space);
        let b = random_chromosome(&mut ChaCha8Rng::seed_from_u64(42), &space);
        assert_eq!(a, b);
    }

    #[test]
    fn random_chromosome_is_roughly_uniform() {
        let space = SearchSpace::new(1, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let samples = 10_000;
        let mut axis_counts = [0usize; 4];
        let mut gene_sum = 0u64;
        for _ in 0..samples {
            let c = random_chromosome(&mut rng, &space);
            axis_counts[c.axis_genes()[0][0] as usize] += 1;
            gene_sum += u64::from(c.angle_genes()[0]);
        }
        for count in axis_counts {
            let frequency = count as f64 / samples as f64;
            assert!(
                (frequency - 0.25).abs() < 0.02,
                "axis frequency {frequency}"
            );
        }
        let mean_gene = gene_sum as f64 / samples as f64;
        assert!((mean_gene - 255.5).abs() < 5.0, "mean gene {mean_gene}");
    }

    #[test]
    fn chromosome_validates_shapes_and_ranges() {
        assert!(Chromosome::new(vec![512], vec![vec![0]]).is_err());
        assert!(Chromosome::new(vec![0], vec![vec![4]]).is_err());
        assert!(Chromosome::new(vec![0, 1], vec![vec![0]]).is_err());
        assert!(Chromosome::new(vec![0], vec![vec![0], vec![1]]).is_err());
        assert!(Chromosome::new(vec![], vec![]).is_err());
    }

    proptest! {
        #[test]
        fn bit_views_round_trip(
            pulses in 1usize..5,
            qubits in 1usize..4,
            seed in any::<u64>(),
        ) {
            let space = SearchSpace::new(qubits, pulses).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = random_chromosome(&mut rng, &space);
            let rebuilt = Chromosome::from_bits(&c.angle_bits(), &c.axis_bits(), space).unwrap();
            prop_assert_eq!(rebuilt, c);
        }

        #[test]
        fn decode_is_total_on_valid_chromosomes(
            pulses in 1usize..5,
            qubits in 1usize..4,
            seed in any::<u64>(),
        ) {
            let space = SearchSpace::new(qubits, pulses).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = random_chromosome(&mut rng, &space);
            let seq = decode_chromosome(&c);
            prop_assert_eq!(seq.len(), pulses);
            prop_assert_eq!(seq.qubits(), qubits);
            for r in seq.rotations() {
                prop_assert!((0.0..360.0).contains(&r.angle_deg()));
            }
        }
    }
}
