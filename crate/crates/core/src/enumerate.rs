//! Exhaustive generation and closed-form counting of distinct n-chords.
//!
//! The stream enumerates every composition of `L` into `n` positive parts in
//! lexicographic order; the closed forms count the same set as
//! `C(L-1, n-1)` and its fractional companions.  Both routes are kept so
//! they can be checked against each other.

use num_rational::Ratio;

use crate::arith::{binomial, ratio, to_i128};
use crate::chord::{Chord, Temperament};
use crate::error::{Error, Result};

/// Deterministic stream of all n-chords of one cardinality, in strictly
/// increasing lexicographic order.
#[derive(Debug, Clone)]
pub struct ChordStream {
    temperament: Temperament,
    cardinality: usize,
    state: Option<Vec<u32>>,
}

impl ChordStream {
    pub fn new(temperament: Temperament, cardinality: usize) -> Result<Self> {
        let l = temperament.semitones();
        if cardinality < 1 || cardinality > l as usize {
            return Err(Error::CardinalityOutOfRange { n: cardinality, l });
        }
        // Lexicographic minimum: all ones, the spare span on the last part.
        let mut first = vec![1u32; cardinality];
        *first.last_mut().unwrap() = l - (cardinality as u32 - 1);
        Ok(ChordStream {
            temperament,
            cardinality,
            state: Some(first),
        })
    }

    pub fn temperament(&self) -> Temperament {
        self.temperament
    }

    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    /// Stream length by the closed form.
    pub fn expected_len(&self) -> u128 {
        count_distinct(self.temperament, self.cardinality)
    }
}

impl Iterator for ChordStream {
    type Item = Chord;

    fn next(&mut self) -> Option<Chord> {
        let current = self.state.take()?;
        let n = current.len();
        // Successor: increment the rightmost part whose tail has spare span,
        // then reset the tail to its lexicographic minimum.
        let mut next = None;
        let mut tail_sum: u64 = 0;
        for i in (0..n.saturating_sub(1)).rev() {
            tail_sum += current[i + 1] as u64;
            let tail_len = (n - 1 - i) as u64;
            if tail_sum > tail_len {
                let mut succ = current[..=i].to_vec();
                succ[i] += 1;
                succ.extend(std::iter::repeat_n(1, n - 2 - i));
                succ.push((tail_sum - 1 - (tail_len - 1)) as u32);
                next = Some(succ);
                break;
            }
        }
        self.state = next;
        Some(Chord::from_validated(current))
    }
}

/// Number of distinct n-chords: `C(L-1, n-1)`, with 0 at `n = 0`.
pub fn count_distinct(temperament: Temperament, n: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    let l = temperament.semitones() as u64;
    binomial(l - 1, n as u64 - 1)
}

/// Fractional number of distinct n-chords: `C(L, n) / L`.
///
/// At `n = 0` the formula itself yields `1/L`, the limit value that
/// completes the symmetry of the row.
pub fn fractional_distinct(temperament: Temperament, n: usize) -> Ratio<i128> {
    let l = temperament.semitones() as u64;
    ratio(to_i128(binomial(l, n as u64)), l as i128)
}

/// Integer part of the fractional count.
pub fn integer_part_distinct(temperament: Temperament, n: usize) -> u128 {
    let l = temperament.semitones() as u64;
    binomial(l, n as u64) / l as u128
}

/// Conjugate of a chord: the strictly decreasing tuple of its reversed
/// suffix sums, `(L - p_1, p_2 + .. + p_{n-1}, .., p_{n-1})`.
///
/// The map is a bijection between n-chords and the strictly decreasing
/// (n-1)-tuples over `{1, .., L-1}`, which is how the closed-form count is
/// obtained.
pub fn conjugate_point(chord: &Chord) -> Result<Vec<u32>> {
    let n = chord.cardinality();
    if n < 2 {
        return Err(Error::CardinalityTooSmall {
            required: 2,
            actual: n,
        });
    }
    let parts = chord.parts();
    let l = chord.span();
    let mut out = Vec::with_capacity(n - 1);
    out.push(l - parts[0]);
    // Partial sums p_i + .. + p_{n-1} for i = 2..=n-1 (1-based).
    let mut suffix: u32 = parts[1..n - 1].iter().sum();
    for &part in &parts[1..n - 1] {
        out.push(suffix);
        suffix -= part;
    }
    Ok(out)
}
