//! Ground-truth partition of n-chords into transposition classes.
//!
//! Every chord of one cardinality is grouped under its cyclic prime form;
//! the resulting orbits carry the per-class repeat deficit and a
//! reflection-invariance flag, which together determine every class count
//! the other routes must reproduce.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::arith::{ratio, to_i128};
use crate::chord::{Chord, Symmetry, Temperament};
use crate::enumerate::{count_distinct, ChordStream};
use crate::error::{Error, Result};

/// One transposition class: the distinct rotations of a representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    representative: Chord,
    members: Vec<Chord>,
    reflection_invariant: bool,
}

impl Orbit {
    fn build(representative: Chord) -> Orbit {
        let n = representative.cardinality();
        let mut members: Vec<Chord> = (0..n as i64).map(|k| representative.transpose(k)).collect();
        members.sort();
        members.dedup();
        let reflection_invariant = members.binary_search(&representative.reflect()).is_ok();
        Orbit {
            representative,
            members,
            reflection_invariant,
        }
    }

    /// Cyclic prime form of the class.
    pub fn representative(&self) -> &Chord {
        &self.representative
    }

    /// Distinct members, sorted lexicographically.
    pub fn members(&self) -> &[Chord] {
        &self.members
    }

    /// Number of distinct rotations; always divides the cardinality.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Repeats hidden in the class: cardinality minus distinct rotations.
    pub fn deficit(&self) -> usize {
        self.representative.cardinality() - self.members.len()
    }

    /// True when reflection maps the class onto itself (the class contains a
    /// palindrome or pseudo-palindrome chord).
    pub fn is_reflection_invariant(&self) -> bool {
        self.reflection_invariant
    }
}

/// Per-cardinality counts derived from the orbit partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCensus {
    pub temperament: Temperament,
    pub cardinality: usize,
    pub symmetry: Symmetry,
    pub orbits: Vec<Orbit>,
    /// N_C: distinct chords.
    pub distinct: u128,
    /// Delta N: total repeat deficit.
    pub repeating: u128,
    /// N_M = N_C + Delta N.
    pub total: u128,
    /// nu_M: number of transposition classes (1 at n = 0 by convention).
    pub class_count: u128,
    /// Delta N / n, extended to (L-1)/L at n = 0.
    pub fractional_repeating: Ratio<i128>,
    /// Populated in dihedral mode.
    pub reflective: Option<ReflectiveCounts>,
}

/// Counts that depend on the reflection flags of the cyclic classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReflectiveCounts {
    /// nu_P: classes invariant under reflection.
    pub invariant: u128,
    /// nu_N = nu_M - nu_P; always even.
    pub non_invariant: u128,
    /// nu_Q = nu_N / 2 + nu_P: classes under rotation plus reflection.
    pub bracelet_classes: u128,
}

/// Enumeration guard for the brute-force partition.
pub const ORBIT_ENUMERATION_CAP: u128 = 1 << 20;

/// Partitions all chords of cardinality `n` into transposition classes,
/// ordered by representative.
///
/// Refuses cardinalities with more than [`ORBIT_ENUMERATION_CAP`] chords;
/// the closed-form routes stay available beyond that.
pub fn cyclic_orbits(temperament: Temperament, n: usize) -> Result<Vec<Orbit>> {
    let states = count_distinct(temperament, n);
    if states > ORBIT_ENUMERATION_CAP {
        return Err(Error::ProblemTooLarge {
            states,
            cap: ORBIT_ENUMERATION_CAP,
        });
    }
    let stream = ChordStream::new(temperament, n)?;
    let mut seen: BTreeMap<Chord, ()> = BTreeMap::new();
    for chord in stream {
        let key = chord.prime_form(Symmetry::Cyclic);
        seen.entry(key).or_insert(());
    }
    Ok(seen.into_keys().map(Orbit::build).collect())
}

/// Total repeat deficit of cardinality `n`, summed over orbits.
pub fn repeating_count_bruteforce(temperament: Temperament, n: usize) -> Result<u128> {
    Ok(cyclic_orbits(temperament, n)?
        .iter()
        .map(|o| o.deficit() as u128)
        .sum())
}

/// Full census of cardinality `n` under the requested symmetry.
///
/// `n = 0` returns the conventional row extending the tables' symmetry: one
/// empty class, fractional deficit `(L-1)/L`.
pub fn census(temperament: Temperament, n: usize, symmetry: Symmetry) -> Result<OrbitCensus> {
    let l = temperament.semitones();
    if n > l as usize {
        return Err(Error::CardinalityOutOfRange { n, l });
    }
    if n == 0 {
        let reflective = match symmetry {
            Symmetry::Cyclic => None,
            Symmetry::Dihedral => Some(ReflectiveCounts {
                invariant: 1,
                non_invariant: 0,
                bracelet_classes: 1,
            }),
        };
        return Ok(OrbitCensus {
            temperament,
            cardinality: 0,
            symmetry,
            orbits: Vec::new(),
            distinct: 0,
            repeating: 0,
            total: 0,
            class_count: 1,
            fractional_repeating: ratio(l as i128 - 1, l as i128),
            reflective,
        });
    }
    let orbits = cyclic_orbits(temperament, n)?;
    let distinct: u128 = orbits.iter().map(|o| o.size() as u128).sum();
    let repeating: u128 = orbits.iter().map(|o| o.deficit() as u128).sum();
    let total = distinct + repeating;
    let class_count = orbits.len() as u128;
    if total != class_count * n as u128 {
        return Err(Error::InternalInconsistency(format!(
            "N_M = {total} must equal n * nu_M = {} at n = {n}",
            class_count * n as u128
        )));
    }
    debug_assert_eq!(distinct, count_distinct(temperament, n));
    let reflective = match symmetry {
        Symmetry::Cyclic => None,
        Symmetry::Dihedral => {
            let invariant = orbits
                .iter()
                .filter(|o| o.is_reflection_invariant())
                .count() as u128;
            let non_invariant = class_count - invariant;
            if !non_invariant.is_multiple_of(2) {
                return Err(Error::InternalInconsistency(format!(
                    "nu_N = {non_invariant} must be even at n = {n}"
                )));
            }
            Some(ReflectiveCounts {
                invariant,
                non_invariant,
                bracelet_classes: non_invariant / 2 + invariant,
            })
        }
    };
    Ok(OrbitCensus {
        temperament,
        cardinality: n,
        symmetry,
        orbits,
        distinct,
        repeating,
        total,
        class_count,
        fractional_repeating: ratio(to_i128(repeating), n as i128),
        reflective,
    })
}

/// Number of classes of each orbit size (block length), ascending.
pub fn class_counts_by_period(orbits: &[Orbit]) -> BTreeMap<usize, u128> {
    let mut by_period = BTreeMap::new();
    for orbit in orbits {
        *by_period.entry(orbit.size()).or_insert(0u128) += 1;
    }
    by_period
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twelve() -> Temperament {
        Temperament::twelve()
    }

    fn chord(parts: &[u32]) -> Chord {
        Chord::new(parts.to_vec(), twelve()).unwrap()
    }

    #[test]
    fn chromatic_orbit() {
        let orbits = cyclic_orbits(twelve(), 12).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].size(), 1);
        assert_eq!(orbits[0].deficit(), 11);
    }

    #[test]
    fn four_note_class_count() {
        let orbits = cyclic_orbits(twelve(), 4).unwrap();
        assert_eq!(orbits.len(), 43);
        let sizes: u128 = orbits.iter().map(|o| o.size() as u128).sum();
        assert_eq!(sizes, 165);
    }

    #[test]
    fn orbits_partition_the_chord_set() {
        for n in 1..=12 {
            let orbits = cyclic_orbits(twelve(), n).unwrap();
            let mut all_members = std::collections::BTreeSet::new();
            for orbit in &orbits {
                for member in orbit.members() {
                    assert!(
                        all_members.insert(member.clone()),
                        "orbits overlap at {member}"
                    );
                }
            }
            assert_eq!(all_members.len() as u128, count_distinct(twelve(), n));
        }
    }

    #[test]
    fn single_note_orbit() {
        let orbits = cyclic_orbits(twelve(), 1).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].representative(), &chord(&[12]));
    }

    #[test]
    fn repeat_deficits() {
        assert_eq!(repeating_count_bruteforce(twelve(), 6).unwrap(), 18);
        assert_eq!(repeating_count_bruteforce(twelve(), 5).unwrap(), 0);
        assert_eq!(repeating_count_bruteforce(twelve(), 2).unwrap(), 1);
    }

    #[test]
    fn reflection_flags() {
        let orbits = cyclic_orbits(twelve(), 4).unwrap();
        let find = |parts: &[u32]| {
            let key = chord(parts).prime_form(Symmetry::Cyclic);
            orbits.iter().find(|o| o.representative() == &key).unwrap()
        };
        assert!(find(&[1, 5, 5, 1]).is_reflection_invariant());
        assert!(find(&[5, 5, 1, 1]).is_reflection_invariant());
        assert!(!find(&[1, 2, 3, 6]).is_reflection_invariant());
    }

    #[test]
    fn dihedral_census_rows() {
        let c6 = census(twelve(), 6, Symmetry::Dihedral).unwrap();
        let r6 = c6.reflective.unwrap();
        assert_eq!(r6.invariant, 20);
        assert_eq!(r6.non_invariant, 60);
        assert_eq!(r6.bracelet_classes, 50);

        let c3 = census(twelve(), 3, Symmetry::Dihedral).unwrap();
        let r3 = c3.reflective.unwrap();
        assert_eq!(r3.invariant, 5);
        assert_eq!(r3.bracelet_classes, 12);

        let c2 = census(twelve(), 2, Symmetry::Dihedral).unwrap();
        let r2 = c2.reflective.unwrap();
        assert_eq!(r2.bracelet_classes, c2.class_count);
        assert_eq!(r2.bracelet_classes, 6);
    }

    #[test]
    fn zero_cardinality_convention() {
        let c = census(twelve(), 0, Symmetry::Dihedral).unwrap();
        assert_eq!(c.class_count, 1);
        assert_eq!(c.reflective.unwrap().bracelet_classes, 1);
        assert_eq!(c.fractional_repeating, ratio(11, 12));
    }

    #[test]
    fn orbit_sizes_divide_cardinality() {
        for n in 1..=12 {
            for orbit in cyclic_orbits(twelve(), n).unwrap() {
                assert_eq!(n % orbit.size(), 0);
                assert_eq!(orbit.size(), orbit.representative().period());
                let t = orbit.representative().chord_type();
                assert!(orbit.members().iter().all(|m| m.chord_type() == t));
            }
        }
    }

    #[test]
    fn enumeration_guard() {
        let wide = Temperament::new(64).unwrap();
        assert!(matches!(
            cyclic_orbits(wide, 32),
            Err(Error::ProblemTooLarge { .. })
        ));
        // Edge cardinalities stay cheap even at the widest span.
        assert_eq!(cyclic_orbits(wide, 1).unwrap().len(), 1);
        assert_eq!(cyclic_orbits(wide, 64).unwrap().len(), 1);
    }

    #[test]
    fn period_breakdown_matches_reference() {
        let orbits = cyclic_orbits(twelve(), 6).unwrap();
        let by_period = class_counts_by_period(&orbits);
        assert_eq!(by_period.get(&1), Some(&1));
        assert_eq!(by_period.get(&2), Some(&1));
        assert_eq!(by_period.get(&3), Some(&3));
        assert_eq!(by_period.get(&6), Some(&75));
    }
}
