//! Algebraic counting of repeating chords via primitive blocks.
//!
//! A chord repeats under transposition exactly when it is a concatenated
//! block: `k` copies of a primitive block of length `i`, where `i` is a
//! proper divisor of `n` and the block sums to `L*i/n`.  Counting primitive
//! block classes per divisor yields the repeat total without touching the
//! full orbit partition, so the two routes check each other.

use crate::arith::proper_divisors;
use crate::chord::Temperament;
use crate::enumerate::count_distinct;
use crate::error::{Error, Result};

/// Indicator that `m2` divides `m1`, with the convention that `m2 = 0`
/// divides everything.  Gates which block structures can exist.
pub fn divisibility_gate(m1: u64, m2: u64) -> u64 {
    if m2 == 0 || m1.is_multiple_of(m2) {
        1
    } else {
        0
    }
}

/// Number of transposition classes of compositions of `block_sum` into
/// `block_len` positive parts whose cyclic period is exactly `block_len`.
///
/// A single part is always primitive, so the count is 1 for
/// `block_len = 1`, `block_sum >= 1`; it is 0 whenever `block_sum <
/// block_len`.
pub fn primitive_block_classes(block_len: usize, block_sum: u32) -> u128 {
    if block_len == 0 || block_sum == 0 || (block_sum as usize) < block_len {
        return 0;
    }
    // Count canonical representatives directly: one per class, kept only
    // when the block does not collapse to a shorter period.
    let mut count = 0u128;
    let mut block = vec![1u32; block_len];
    block[block_len - 1] = block_sum - (block_len as u32 - 1);
    loop {
        if slice_period(&block) == block_len && is_least_rotation(&block) {
            count += 1;
        }
        if !next_composition(&mut block) {
            return count;
        }
    }
}

fn slice_period(parts: &[u32]) -> usize {
    let n = parts.len();
    for p in 1..n {
        if n.is_multiple_of(p) && parts[p..] == parts[..n - p] {
            return p;
        }
    }
    n
}

fn is_least_rotation(parts: &[u32]) -> bool {
    let n = parts.len();
    let doubled: Vec<u32> = parts.iter().chain(parts.iter()).copied().collect();
    (1..n).all(|k| parts <= &doubled[k..k + n])
}

/// Advances to the lexicographic successor composition in place; false when
/// exhausted.
fn next_composition(parts: &mut [u32]) -> bool {
    let n = parts.len();
    let mut tail_sum: u64 = 0;
    for i in (0..n.saturating_sub(1)).rev() {
        tail_sum += parts[i + 1] as u64;
        let tail_len = (n - 1 - i) as u64;
        if tail_sum > tail_len {
            parts[i] += 1;
            for p in parts[i + 1..n - 1].iter_mut() {
                *p = 1;
            }
            parts[n - 1] = (tail_sum - tail_len) as u32;
            return true;
        }
    }
    false
}

/// One divisor's contribution to the repeat count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockEntry {
    /// Block length `i` (a proper divisor of `n`).
    pub block_len: usize,
    /// Divisibility gate: 1 when blocks of this length can tile `n`.
    pub gate: u64,
    /// Block span `L*i/n` when the gate is open.
    pub block_sum: Option<u32>,
    /// nu_i: primitive block classes of this length.
    pub class_count: u128,
    /// Delta N_i = (n - i) * nu_i.
    pub repeat_count: u128,
}

/// Per-divisor decomposition of the repeat count of one cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepeatBreakdown {
    pub temperament: Temperament,
    pub cardinality: usize,
    pub entries: Vec<BlockEntry>,
    /// Delta N: the sum of the per-divisor repeat counts.
    pub total: u128,
}

impl RepeatBreakdown {
    /// Delta N_i for a given block length (0 when the divisor contributes
    /// nothing).
    pub fn repeat_count_for(&self, block_len: usize) -> u128 {
        self.entries
            .iter()
            .find(|e| e.block_len == block_len)
            .map(|e| e.repeat_count)
            .unwrap_or(0)
    }

    /// nu_i for a given block length.
    pub fn class_count_for(&self, block_len: usize) -> u128 {
        self.entries
            .iter()
            .find(|e| e.block_len == block_len)
            .map(|e| e.class_count)
            .unwrap_or(0)
    }
}

/// Enumeration guard for one block problem.
pub const BLOCK_ENUMERATION_CAP: u128 = 1 << 20;

/// Repeat count of cardinality `n` by the block route: for every proper
/// divisor `i` of `n`, gated on `n | L*i`, add `(n - i)` repeats per
/// primitive block class of length `i` and span `L*i/n`.
pub fn repeating_count_formula(temperament: Temperament, n: usize) -> Result<RepeatBreakdown> {
    let l = temperament.semitones();
    if n < 1 || n > l as usize {
        return Err(Error::CardinalityOutOfRange { n, l });
    }
    let mut entries = Vec::new();
    let mut total = 0u128;
    for i in proper_divisors(n as u64) {
        let i = i as usize;
        let gate = divisibility_gate(l as u64 * i as u64, n as u64);
        let (block_sum, class_count) = if gate == 1 {
            let s = (l as u64 * i as u64 / n as u64) as u32;
            let states = crate::arith::binomial(s as u64 - 1, i as u64 - 1);
            if states > BLOCK_ENUMERATION_CAP {
                return Err(Error::ProblemTooLarge {
                    states,
                    cap: BLOCK_ENUMERATION_CAP,
                });
            }
            (Some(s), primitive_block_classes(i, s))
        } else {
            (None, 0)
        };
        let repeat_count = (n - i) as u128 * class_count;
        total += repeat_count;
        entries.push(BlockEntry {
            block_len: i,
            gate,
            block_sum,
            class_count,
            repeat_count,
        });
    }
    Ok(RepeatBreakdown {
        temperament,
        cardinality: n,
        entries,
        total,
    })
}

/// Number of transposition classes by the block route:
/// `(N_C + Delta N) / n`, which must divide exactly.
pub fn total_class_count_formula(temperament: Temperament, n: usize) -> Result<u128> {
    let breakdown = repeating_count_formula(temperament, n)?;
    let total = count_distinct(temperament, n) + breakdown.total;
    if !total.is_multiple_of(n as u128) {
        return Err(Error::InternalInconsistency(format!(
            "N_M = {total} is not divisible by n = {n}"
        )));
    }
    Ok(total / n as u128)
}

/// A weighted composition target: find positive `x` with
/// `sum(weights[j] * x[j]) = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedEquation {
    pub weights: Vec<u32>,
    pub target: u32,
}

impl WeightedEquation {
    pub fn new(weights: Vec<u32>, target: u32) -> Self {
        WeightedEquation { weights, target }
    }
}

/// All positive integer solutions in lexicographic order.
///
/// With `exclude_uniform` set, solutions whose values are all equal are
/// dropped; equal-weight block equations exclude those because they collapse
/// to a shorter block.
pub fn solve_weighted_composition(eq: &WeightedEquation, exclude_uniform: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut partial = Vec::with_capacity(eq.weights.len());
    descend(eq, 0, eq.target as i64, &mut partial, &mut out);
    if exclude_uniform {
        out.retain(|sol| sol.len() < 2 || sol.iter().any(|&v| v != sol[0]));
    }
    out
}

fn descend(
    eq: &WeightedEquation,
    idx: usize,
    remaining: i64,
    partial: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if idx == eq.weights.len() {
        if remaining == 0 {
            out.push(partial.clone());
        }
        return;
    }
    let weight = eq.weights[idx] as i64;
    // Later variables each consume at least their own weight.
    let tail_min: i64 = eq.weights[idx + 1..].iter().map(|&w| w as i64).sum();
    let mut value = 1i64;
    while weight * value + tail_min <= remaining {
        partial.push(value as u32);
        descend(eq, idx + 1, remaining - weight * value, partial, out);
        partial.pop();
        value += 1;
    }
}
