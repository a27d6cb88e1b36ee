//! Domain types and elementary pitch-class operators.
//!
//! An n-chord is an ordered composition of the temperament `L` into `n`
//! positive interval steps.  Transposition rotates the step sequence,
//! inversion reverses it; canonical representatives ("prime forms") pick one
//! chord per equivalence class under either symmetry.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum supported temperament.  Keeps every count in this crate exact in
/// 128-bit arithmetic.
pub const MAX_TEMPERAMENT: u32 = 64;

/// The equal-temperament scale size `L` (semitones per octave).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Temperament {
    l: u32,
}

impl Temperament {
    pub fn new(l: u32) -> Result<Self> {
        if !(1..=MAX_TEMPERAMENT).contains(&l) {
            return Err(Error::TemperamentOutOfRange {
                l: l as u64,
                max: MAX_TEMPERAMENT,
            });
        }
        Ok(Temperament { l })
    }

    /// The conventional 12-note octave.
    pub fn twelve() -> Self {
        Temperament { l: 12 }
    }

    pub fn semitones(&self) -> u32 {
        self.l
    }
}

/// Symmetry under which chords are identified: rotations only, or rotations
/// together with reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Symmetry {
    Cyclic,
    Dihedral,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symmetry::Cyclic => write!(f, "cyclic"),
            Symmetry::Dihedral => write!(f, "dihedral"),
        }
    }
}

/// An ordered composition of `L` into positive interval steps.
///
/// Equality is positional: rotated copies are distinct chords that share one
/// equivalence class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord {
    parts: Vec<u32>,
}

impl Chord {
    /// Validates `parts` against the temperament: every part positive, the
    /// sum equal to `L`, and at most `L` parts.
    pub fn new(parts: Vec<u32>, temperament: Temperament) -> Result<Self> {
        let l = temperament.semitones();
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::NonPositivePart);
        }
        if parts.len() > l as usize {
            return Err(Error::CardinalityOverflow { n: parts.len(), l });
        }
        let sum: u64 = parts.iter().map(|&p| p as u64).sum();
        if sum != l as u64 {
            return Err(Error::SumMismatch {
                expected: l,
                actual: sum,
            });
        }
        Ok(Chord { parts })
    }

    /// Builds a chord whose invariants are guaranteed by the caller.
    pub(crate) fn from_validated(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
        Chord { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Cardinality `n`: the number of interval steps.
    pub fn cardinality(&self) -> usize {
        self.parts.len()
    }

    /// The temperament recovered from the step sum.
    pub fn span(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Transposition `T_k`: left rotation of the step sequence by `k`
    /// positions.  `k` is reduced modulo the cardinality; negative `k`
    /// rotates the other way.
    pub fn transpose(&self, k: i64) -> Chord {
        let n = self.parts.len() as i64;
        let shift = k.rem_euclid(n) as usize;
        let mut parts = Vec::with_capacity(self.parts.len());
        parts.extend_from_slice(&self.parts[shift..]);
        parts.extend_from_slice(&self.parts[..shift]);
        Chord { parts }
    }

    /// Inversion: reversal of the step sequence.
    pub fn reflect(&self) -> Chord {
        let mut parts = self.parts.clone();
        parts.reverse();
        Chord { parts }
    }

    /// Canonical representative of this chord's class under the given
    /// symmetry: among all images whose last step is maximal, the
    /// lexicographically smallest tuple.
    ///
    /// The max-last rule alone does not break ties between images that agree
    /// on the final step, so the full lexicographic order extends it; the
    /// result is constant on the whole class.
    pub fn prime_form(&self, symmetry: Symmetry) -> Chord {
        let mut best: Option<Vec<u32>> = None;
        let mut consider = |candidate: &[u32]| match &best {
            None => best = Some(candidate.to_vec()),
            Some(current) => {
                let cur_last = *current.last().unwrap();
                let cand_last = *candidate.last().unwrap();
                if cand_last > cur_last || (cand_last == cur_last && candidate < current.as_slice())
                {
                    best = Some(candidate.to_vec());
                }
            }
        };
        let n = self.parts.len();
        let mut rotated = self.parts.clone();
        for _ in 0..n {
            consider(&rotated);
            rotated.rotate_left(1);
        }
        if symmetry == Symmetry::Dihedral {
            let mut reflected = self.reflect().parts;
            for _ in 0..n {
                consider(&reflected);
                reflected.rotate_left(1);
            }
        }
        Chord {
            parts: best.unwrap(),
        }
    }

    /// The step multiset: each step value mapped to its multiplicity.
    pub fn chord_type(&self) -> ChordType {
        let mut entries = BTreeMap::new();
        for &p in &self.parts {
            *entries.entry(p).or_insert(0usize) += 1;
        }
        ChordType { entries }
    }

    /// Smallest `p` with `transpose(p) == self`; the cyclic class of this
    /// chord has exactly `period` members.
    pub fn period(&self) -> usize {
        let n = self.parts.len();
        for p in 1..n {
            if n.is_multiple_of(p) && self.parts[p..] == self.parts[..n - p] {
                return p;
            }
        }
        n
    }

    /// True when the step sequence reads the same in both directions.
    pub fn is_palindrome(&self) -> bool {
        self.parts.iter().eq(self.parts.iter().rev())
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", rendered.join("-"))
    }
}

/// Multiset view of a chord: step value to multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordType {
    entries: BTreeMap<u32, usize>,
}

impl ChordType {
    pub fn entries(&self) -> &BTreeMap<u32, usize> {
        &self.entries
    }

    /// Number of distinct step values.
    pub fn distinct_values(&self) -> usize {
        self.entries.len()
    }

    pub fn total_span(&self) -> u64 {
        self.entries
            .iter()
            .map(|(&v, &m)| v as u64 * m as u64)
            .sum()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.values().sum()
    }
}
