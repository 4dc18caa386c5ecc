//! Text notation for Pauli words, pulses, and sequence files.
//!
//! A word prints as its non-identity axis letters (lowercase) followed by the
//! qubit letters they act on (uppercase, `A` = qubit 0): `[X, Z]` is `xzAB`,
//! `[I, Z]` is `zB`, the all-identity word is `I`. When parsing, a single
//! axis letter broadcasts over all listed qubits, so `xCA` means x on both C
//! and A.
//!
//! Sequence files hold one pulse per line in the form `R <word> <angle>`,
//! e.g. `R zB 270`. Blank lines and `#` comments are ignored. Angles are
//! reals in degrees and are normalized into `[0, 360)` on read.

use crate::error::{Error, Result};
use crate::unitary::{Pauli, PauliWord, PulseSequence, Rotation};

fn axis_letter(p: Pauli) -> Option<char> {
    match p {
        Pauli::I => None,
        Pauli::X => Some('x'),
        Pauli::Y => Some('y'),
        Pauli::Z => Some('z'),
    }
}

fn axis_from_letter(ch: char) -> Result<Pauli> {
    match ch {
        'x' => Ok(Pauli::X),
        'y' => Ok(Pauli::Y),
        'z' => Ok(Pauli::Z),
        _ => Err(Error::Parse(format!("unknown axis letter '{ch}'"))),
    }
}

fn qubit_letter(index: usize) -> char {
    (b'A' + index as u8) as char
}

/// Canonical text form of a word, e.g. `xzAB` or `I`.
pub fn format_word(word: &PauliWord) -> String {
    if word.is_identity() {
        return "I".to_string();
    }
    let mut axes = String::new();
    let mut qubits = String::new();
    for (index, &letter) in word.letters().iter().enumerate() {
        if let Some(ch) = axis_letter(letter) {
            axes.push(ch);
            qubits.push(qubit_letter(index));
        }
    }
    axes + &qubits
}

/// Parses a word in the notation above onto `qubits` qubits.
pub fn parse_word(text: &str, qubits: usize) -> Result<PauliWord> {
    if qubits == 0 {
        return Err(Error::EmptyWord);
    }
    if qubits > 26 {
        return Err(Error::Parse(format!(
            "at most 26 qubits are addressable by letter, got {qubits}"
        )));
    }
    if text == "I" {
        return PauliWord::identity(qubits);
    }
    let axes: Vec<char> = text
        .chars()
        .take_while(|c| c.is_ascii_lowercase())
        .collect();
    let rest: Vec<char> = text.chars().skip(axes.len()).collect();
    if axes.is_empty() || rest.is_empty() || !rest.iter().all(|c| c.is_ascii_uppercase()) {
        return Err(Error::Parse(format!(
            "word '{text}' is not of the form <axes><QUBITS> (e.g. xzAB)"
        )));
    }
    let paired: Vec<(Pauli, char)> = if axes.len() == rest.len() {
        axes.iter()
            .zip(rest.iter())
            .map(|(&a, &q)| Ok((axis_from_letter(a)?, q)))
            .collect::<Result<_>>()?
    } else if axes.len() == 1 {
        // single axis broadcast over every listed qubit
        let axis = axis_from_letter(axes[0])?;
        rest.iter().map(|&q| Ok((axis, q))).collect::<Result<_>>()?
    } else {
        return Err(Error::Parse(format!(
            "word '{text}' lists {} axes for {} qubits",
            axes.len(),
            rest.len()
        )));
    };
    let mut letters = vec![Pauli::I; qubits];
    for (axis, q) in paired {
        let index = (q as u8 - b'A') as usize;
        if index >= qubits {
            return Err(Error::QubitOutOfRange { index, qubits });
        }
        if letters[index] != Pauli::I {
            return Err(Error::Parse(format!(
                "word '{text}' lists qubit {q} more than once"
            )));
        }
        letters[index] = axis;
    }
    PauliWord::new(letters)
}

/// Human-readable pulse label, e.g. `R_zB(270)`.
pub fn format_pulse_label(rotation: &Rotation) -> String {
    format!(
        "R_{}({})",
        format_word(rotation.word()),
        rotation.angle_deg()
    )
}

/// One sequence-file line, e.g. `R zB 270`.
pub fn format_pulse_line(rotation: &Rotation) -> String {
    format!(
        "R {} {}",
        format_word(rotation.word()),
        rotation.angle_deg()
    )
}

/// Renders a whole sequence in the file format.
pub fn format_sequence_file(sequence: &PulseSequence) -> String {
    let mut out = String::new();
    for rotation in sequence.rotations() {
        out.push_str(&format_pulse_line(rotation));
        out.push('\n');
    }
    out
}

/// Parses sequence-file text onto `qubits` qubits.
pub fn parse_sequence_file(text: &str, qubits: usize) -> Result<PulseSequence> {
    let mut sequence = PulseSequence::empty(qubits);
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "R" {
            return Err(Error::Parse(format!(
                "line {}: expected 'R <word> <angle>', got '{line}'",
                line_no + 1
            )));
        }
        let word = parse_word(fields[1], qubits)?;
        let angle: f64 = fields[2].parse().map_err(|_| {
            Error::Parse(format!("line {}: bad angle '{}'", line_no + 1, fields[2]))
        })?;
        if !angle.is_finite() {
            return Err(Error::Parse(format!(
                "line {}: angle must be finite",
                line_no + 1
            )));
        }
        sequence.push(Rotation::new(word, angle))?;
    }
    Ok(sequence)
}
