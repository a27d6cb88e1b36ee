//! Group-theoretic counts: Burnside's lemma for chord classes and for
//! colored arrangements on a ring.
//!
//! This route shares nothing with the orbit partition or the block
//! decomposition; agreement between all three is the crate's central
//! cross-check.  The colored subsystem handles the classic cake/necklace
//! drills (N positions, L colors) both by brute force and by fixed-point
//! counting, with a per-color-pattern refinement.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::arith::{binomial, divisors, gcd, ratio, to_i128};
use crate::chord::{Symmetry, Temperament};
use crate::enumerate::fractional_distinct;
use crate::error::{Error, Result};

/// Euler's totient: how many of `1..=k` are coprime to `k`.
pub fn euler_phi(k: u64) -> u64 {
    assert!(k >= 1, "euler_phi requires k >= 1");
    let mut n = k;
    let mut result = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Number of transposition classes of cardinality `n` by Burnside's lemma:
/// `(1/L) * sum over d | gcd(L, n) of phi(d) * C(L/d, n/d)`.
///
/// `n = 0` is admitted and yields 1, the conventional empty class.
pub fn burnside_cyclic_chords(temperament: Temperament, n: usize) -> Result<u128> {
    let l = temperament.semitones() as u64;
    if n > l as usize {
        return Err(Error::CardinalityOutOfRange {
            n,
            l: temperament.semitones(),
        });
    }
    let mut sum = 0u128;
    for d in divisors(gcd(l, n as u64)) {
        sum += euler_phi(d) as u128 * binomial(l / d, n as u64 / d);
    }
    if !sum.is_multiple_of(l as u128) {
        return Err(Error::InternalInconsistency(format!(
            "Burnside sum {sum} is not divisible by L = {l}"
        )));
    }
    Ok(sum / l as u128)
}

/// One addend of the group-route fractional repeat count: the contribution
/// of a non-identity rotation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAddend {
    /// Rotation order `d >= 2` dividing both `L` and `n`.
    pub order: u64,
    pub phi: u64,
    pub binom: u128,
    /// `phi(d) * C(L/d, n/d)`, to be divided by `L`.
    pub product: u128,
}

/// The fractional repeat count `Delta N / n` split into per-order addends
/// over the common denominator `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRouteBreakdown {
    pub temperament: Temperament,
    pub cardinality: usize,
    pub addends: Vec<GroupAddend>,
    pub value: Ratio<i128>,
}

/// Fractional number of repeating chords by the group route: the Burnside
/// class count minus the fractional distinct count.
///
/// Equals `(1/L) * sum over d >= 2, d | gcd(L, n) of phi(d) * C(L/d, n/d)`;
/// the addends are returned so the decomposition can be compared with the
/// block route, whose addends differ even where the sums agree.
pub fn fractional_repeating_group(
    temperament: Temperament,
    n: usize,
) -> Result<GroupRouteBreakdown> {
    let l = temperament.semitones() as u64;
    if n > l as usize {
        return Err(Error::CardinalityOutOfRange {
            n,
            l: temperament.semitones(),
        });
    }
    let mut addends = Vec::new();
    let mut sum = 0u128;
    for d in divisors(gcd(l, n as u64)) {
        if d < 2 {
            continue;
        }
        let phi = euler_phi(d);
        let binom = binomial(l / d, n as u64 / d);
        let product = phi as u128 * binom;
        sum += product;
        addends.push(GroupAddend {
            order: d,
            phi,
            binom,
            product,
        });
    }
    let value = ratio(to_i128(sum), l as i128);
    debug_assert_eq!(
        value,
        ratio(to_i128(burnside_cyclic_chords(temperament, n)?), 1)
            - fractional_distinct(temperament, n)
    );
    Ok(GroupRouteBreakdown {
        temperament,
        cardinality: n,
        addends,
        value,
    })
}

/// A ring of `beads` positions colored from `colors` choices, identified
/// under rotation or under rotation plus flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoredRingProblem {
    pub beads: usize,
    pub colors: u64,
    pub symmetry: Symmetry,
}

impl ColoredRingProblem {
    pub fn new(beads: usize, colors: u64, symmetry: Symmetry) -> Self {
        ColoredRingProblem {
            beads,
            colors,
            symmetry,
        }
    }

    /// Group order: `N` rotations, doubled by the flips in dihedral mode.
    pub fn group_order(&self) -> u128 {
        match self.symmetry {
            Symmetry::Cyclic => self.beads as u128,
            Symmetry::Dihedral => 2 * self.beads as u128,
        }
    }

    fn state_count(&self) -> Option<u128> {
        let mut total = 1u128;
        for _ in 0..self.beads {
            total = total.checked_mul(self.colors as u128)?;
        }
        Some(total)
    }
}

/// Enumeration guard for the brute-force census.
pub const BRUTE_FORCE_CAP: u128 = 100_000_000;

/// Counts per color-multiplicity pattern, e.g. `x^2y^2` for two pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternRow {
    pub pattern: String,
    /// Distinct colorings of this pattern.
    pub distinct: u128,
    /// Repeats: group order minus orbit size, summed over the pattern's
    /// classes.
    pub repeating: u128,
    /// Distinct + repeating.
    pub total: u128,
    pub class_count: u128,
}

/// Full census of a colored ring problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredCensus {
    pub problem: ColoredRingProblem,
    /// N_C = colors^beads.
    pub distinct: u128,
    /// Delta N: group order minus orbit size, summed over classes.
    pub repeating: u128,
    /// N_M = N_C + Delta N = group order * class count.
    pub total: u128,
    pub class_count: u128,
    pub per_pattern: Vec<PatternRow>,
}

/// Brute-force orbit census over all colorings.
///
/// Guarded: refuses problems beyond [`BRUTE_FORCE_CAP`] states.
pub fn colored_count_brute(problem: &ColoredRingProblem) -> Result<ColoredCensus> {
    let states = problem.state_count().unwrap_or(u128::MAX);
    if states > BRUTE_FORCE_CAP {
        return Err(Error::ProblemTooLarge {
            states,
            cap: BRUTE_FORCE_CAP,
        });
    }
    if problem.beads == 0 || problem.colors == 0 {
        return Err(Error::CardinalityOutOfRange {
            n: problem.beads,
            l: problem.colors as u32,
        });
    }
    let n = problem.beads;
    // Canonical key -> orbit size under the full group.
    let mut orbit_sizes: BTreeMap<Vec<u32>, u128> = BTreeMap::new();
    let mut coloring = vec![0u32; n];
    loop {
        let (canonical, orbit_size) = canonicalize(&coloring, problem.symmetry);
        orbit_sizes.entry(canonical).or_insert(orbit_size);
        if !next_coloring(&mut coloring, problem.colors as u32) {
            break;
        }
    }
    let group_order = problem.group_order();
    let mut per_pattern_map: BTreeMap<Vec<usize>, (u128, u128, u128)> = BTreeMap::new();
    let mut distinct = 0u128;
    let mut repeating = 0u128;
    for (canonical, size) in &orbit_sizes {
        let deficit = group_order - size;
        distinct += size;
        repeating += deficit;
        let entry = per_pattern_map
            .entry(pattern_multiplicities(canonical))
            .or_insert((0, 0, 0));
        entry.0 += size;
        entry.1 += deficit;
        entry.2 += 1;
    }
    let mut grouped: Vec<(Vec<usize>, (u128, u128, u128))> = per_pattern_map.into_iter().collect();
    // Fewer distinct colors first, then larger leading multiplicities:
    // x^4, x^3y, x^2y^2, x^2yz, ...
    grouped.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    let per_pattern = grouped
        .into_iter()
        .map(|(multiplicities, (d, r, c))| PatternRow {
            pattern: render_pattern(&multiplicities),
            distinct: d,
            repeating: r,
            total: d + r,
            class_count: c,
        })
        .collect();
    let class_count = orbit_sizes.len() as u128;
    Ok(ColoredCensus {
        problem: *problem,
        distinct,
        repeating,
        total: distinct + repeating,
        class_count,
        per_pattern,
    })
}

/// Lexicographically least image under the group, plus the orbit size.
fn canonicalize(coloring: &[u32], symmetry: Symmetry) -> (Vec<u32>, u128) {
    let n = coloring.len();
    let mut images: Vec<Vec<u32>> = Vec::with_capacity(2 * n);
    let mut rotated = coloring.to_vec();
    for _ in 0..n {
        images.push(rotated.clone());
        rotated.rotate_left(1);
    }
    if symmetry == Symmetry::Dihedral {
        let mut reflected: Vec<u32> = coloring.iter().rev().copied().collect();
        for _ in 0..n {
            images.push(reflected.clone());
            reflected.rotate_left(1);
        }
    }
    images.sort();
    images.dedup();
    (images[0].clone(), images.len() as u128)
}

fn next_coloring(coloring: &mut [u32], colors: u32) -> bool {
    for slot in coloring.iter_mut().rev() {
        *slot += 1;
        if *slot < colors {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Multiplicity pattern of a coloring: counts per color, sorted descending.
fn pattern_multiplicities(coloring: &[u32]) -> Vec<usize> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in coloring {
        *counts.entry(c).or_insert(0) += 1;
    }
    let mut multiplicities: Vec<usize> = counts.into_values().collect();
    multiplicities.sort_unstable_by(|a, b| b.cmp(a));
    multiplicities
}

fn render_pattern(multiplicities: &[usize]) -> String {
    const LETTERS: &[u8] = b"xyzuvwabcdefghijklmnopqrst";
    let mut out = String::new();
    for (i, &m) in multiplicities.iter().enumerate() {
        let letter = LETTERS[i.min(LETTERS.len() - 1)] as char;
        out.push(letter);
        if m > 1 {
            out.push('^');
            out.push_str(&m.to_string());
        }
    }
    out
}

/// One group element and the number of colorings it fixes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointTerm {
    pub element: String,
    pub fixed: u128,
}

/// Fixed-point counts for every group element: rotations fix
/// `colors^gcd(k, N)`; flips fix `colors^(N/2 + 1)` or `colors^(N/2)`
/// (through-bead and through-gap axes) for even `N`, `colors^((N+1)/2)` for
/// odd `N`.
pub fn fixed_point_terms(problem: &ColoredRingProblem) -> Result<Vec<FixedPointTerm>> {
    let n = problem.beads as u64;
    let l = problem.colors;
    let mut terms = Vec::new();
    for k in 0..n {
        terms.push(FixedPointTerm {
            element: format!("rotation_{k}"),
            fixed: pow_u128(l, gcd(k, n))?,
        });
    }
    if problem.symmetry == Symmetry::Dihedral {
        if n.is_multiple_of(2) {
            for a in 0..n / 2 {
                terms.push(FixedPointTerm {
                    element: format!("flip_axis_bead_{a}"),
                    fixed: pow_u128(l, n / 2 + 1)?,
                });
            }
            for a in 0..n / 2 {
                terms.push(FixedPointTerm {
                    element: format!("flip_axis_gap_{a}"),
                    fixed: pow_u128(l, n / 2)?,
                });
            }
        } else {
            for a in 0..n {
                terms.push(FixedPointTerm {
                    element: format!("flip_axis_bead_{a}"),
                    fixed: pow_u128(l, n.div_ceil(2))?,
                });
            }
        }
    }
    Ok(terms)
}

fn pow_u128(base: u64, exp: u64) -> Result<u128> {
    let mut out = 1u128;
    for _ in 0..exp {
        out = out.checked_mul(base as u128).ok_or(Error::CountOverflow)?;
    }
    Ok(out)
}

/// Class count by Burnside's lemma: average number of fixed colorings over
/// the group.
pub fn colored_count_burnside(problem: &ColoredRingProblem) -> Result<u128> {
    let order = problem.group_order();
    if order == 0 {
        return Err(Error::CardinalityOutOfRange {
            n: problem.beads,
            l: problem.colors as u32,
        });
    }
    let mut total: u128 = 0;
    for term in fixed_point_terms(problem)? {
        total = total.checked_add(term.fixed).ok_or(Error::CountOverflow)?;
    }
    if !total.is_multiple_of(order) {
        return Err(Error::InternalInconsistency(format!(
            "fixed-point sum {total} is not divisible by group order {order}"
        )));
    }
    Ok(total / order)
}

/// Per-pattern refinement of the brute census.
pub fn colored_census_by_pattern(problem: &ColoredRingProblem) -> Result<Vec<PatternRow>> {
    Ok(colored_count_brute(problem)?.per_pattern)
}
