//! Exact integer helpers shared by the counting routes.
//!
//! All counting in this crate is exact: binomials are computed by repeated
//! Pascal addition in `u128`, which never overflows intermediates beyond the
//! result row itself (safe through row 127, far past the supported
//! temperaments).

use num_rational::Ratio;

/// Binomial coefficient C(n, k) as an exact `u128`.
///
/// Returns 0 when `k > n`, matching the combinatorial convention.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as usize;
    let mut row: Vec<u128> = vec![1; k + 1];
    for _ in 0..n - k as u64 {
        for j in 1..=k {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Divisors of `n` in increasing order; empty for `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Proper divisors of `n` (divisors strictly smaller than `n`).
pub fn proper_divisors(n: u64) -> Vec<u64> {
    let mut d = divisors(n);
    d.retain(|&x| x < n);
    d
}

/// Converts an exact count to the signed width used by rational values.
pub fn to_i128(count: u128) -> i128 {
    i128::try_from(count).expect("count exceeds i128 range")
}

/// Reduced rational `num / den`.
pub fn ratio(num: i128, den: i128) -> Ratio<i128> {
    Ratio::new(num, den)
}
