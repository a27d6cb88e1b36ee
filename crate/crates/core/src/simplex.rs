//! Lattice-simplex geometry of n-chords.
//!
//! Chords of cardinality `n` are the positive lattice points of the regular
//! inclined simplex cut from the hyperplane `x_1 + .. + x_n = L` by the
//! positive orthant, with vertices `L*e_i`.  This module carries the
//! geometric counting routes (layer recursion, facet formula,
//! stars-and-bars oracle), the face/orthocentre combinatorics, and the
//! palindrome loci on nested shells.  Everything is exact rational
//! arithmetic; orthogonality and alignment are decided, not approximated.

use num_rational::Ratio;
use num_traits::Zero;

use crate::arith::{binomial, ratio};
use crate::chord::{Chord, Temperament};
use crate::enumerate::count_distinct;
use crate::error::{Error, Result};

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    coords: Vec<Ratio<i128>>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Ratio<i128>>) -> Self {
        RationalPoint { coords }
    }

    pub fn from_integers(values: &[u32]) -> Self {
        RationalPoint {
            coords: values.iter().map(|&v| ratio(v as i128, 1)).collect(),
        }
    }

    pub fn from_chord(chord: &Chord) -> Self {
        Self::from_integers(chord.parts())
    }

    pub fn coords(&self) -> &[Ratio<i128>] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// True when the coordinates read the same in both directions.
    pub fn is_palindrome(&self) -> bool {
        self.coords.iter().eq(self.coords.iter().rev())
    }
}

/// The regular inclined simplex of span `L` in `n` coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeSimplex {
    pub temperament: Temperament,
    pub dimension_count: usize,
}

impl LatticeSimplex {
    pub fn new(temperament: Temperament, dimension_count: usize) -> Result<Self> {
        let l = temperament.semitones();
        if dimension_count < 1 || dimension_count > l as usize {
            return Err(Error::CardinalityOutOfRange {
                n: dimension_count,
                l,
            });
        }
        Ok(LatticeSimplex {
            temperament,
            dimension_count,
        })
    }

    /// Vertex `V_i = L * e_i`.
    pub fn vertex(&self, i: usize) -> Result<RationalPoint> {
        let n = self.dimension_count;
        if i >= n {
            return Err(Error::InvalidSelector);
        }
        let l = self.temperament.semitones() as i128;
        let mut coords = vec![ratio(0, 1); n];
        coords[i] = ratio(l, 1);
        Ok(RationalPoint::new(coords))
    }
}

/// A (j-1)-face: the sub-simplex spanned by `j` chosen vertices.
/// Indices are 0-based, strictly increasing, non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSelector {
    indices: Vec<usize>,
}

impl FaceSelector {
    pub fn new(indices: Vec<usize>, dimension_count: usize) -> Result<Self> {
        if indices.is_empty()
            || indices.windows(2).any(|w| w[0] >= w[1])
            || *indices.last().unwrap() >= dimension_count
        {
            return Err(Error::InvalidSelector);
        }
        Ok(FaceSelector { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn order(&self) -> usize {
        self.indices.len()
    }

    /// The complementary selector; errors when this face already spans
    /// everything.
    pub fn complement(&self, dimension_count: usize) -> Result<FaceSelector> {
        let missing: Vec<usize> = (0..dimension_count)
            .filter(|i| !self.indices.contains(i))
            .collect();
        FaceSelector::new(missing, dimension_count)
    }
}

/// Number of (j-1)-faces of an n-vertex simplex: `C(n, j)`.  `j = 0` counts
/// the single metacentre, `j = n` the solid itself, making the Pascal
/// triangle complete.
pub fn face_count(n: usize, j: usize) -> u128 {
    binomial(n as u64, j as u64)
}

/// Orthocentre `(L/n, .., L/n)` and whether it is a lattice point
/// (exactly when `n` divides `L`).
pub fn orthocentre(simplex: &LatticeSimplex) -> (RationalPoint, bool) {
    let l = simplex.temperament.semitones() as i128;
    let n = simplex.dimension_count as i128;
    let coord = ratio(l, n);
    let point = RationalPoint::new(vec![coord; simplex.dimension_count]);
    let integral = l % n == 0;
    (point, integral)
}

/// Orthocentre of a face: `L/j` on the selected axes, zero elsewhere.
pub fn face_orthocentre(simplex: &LatticeSimplex, face: &FaceSelector) -> Result<RationalPoint> {
    let n = simplex.dimension_count;
    if face.indices().last().copied().unwrap_or(0) >= n {
        return Err(Error::InvalidSelector);
    }
    let l = simplex.temperament.semitones() as i128;
    let j = face.order() as i128;
    let mut coords = vec![ratio(0, 1); n];
    for &i in face.indices() {
        coords[i] = ratio(l, j);
    }
    Ok(RationalPoint::new(coords))
}

/// One layer of the interior-point recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionLevel {
    /// Cardinality `m` whose simplex is being layered.
    pub cardinality: usize,
    /// Seed of the descending chain: the full count one cardinality down.
    pub seed: u128,
    /// `taus[k-1]` counts the interior points of layer `k`,
    /// `k = 1 ..= L - m + 1`.
    pub taus: Vec<u128>,
    /// Sum of the layer counts: the interior count at this cardinality.
    pub subtotal: u128,
}

/// The full layered recursion for interior lattice points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionTrace {
    pub temperament: Temperament,
    pub cardinality: usize,
    pub levels: Vec<RecursionLevel>,
    pub total: u128,
}

impl RecursionTrace {
    pub fn level(&self, cardinality: usize) -> Option<&RecursionLevel> {
        self.levels.iter().find(|l| l.cardinality == cardinality)
    }
}

/// Interior lattice points counted along superimposed lower-dimensional
/// layers: each layer count is the previous layer count minus its
/// counterpart one cardinality down, seeded by the full count of the
/// previous cardinality.  Every intermediate value is retained.
pub fn interior_count_recursive(temperament: Temperament, n: usize) -> Result<RecursionTrace> {
    let l = temperament.semitones() as usize;
    if n < 1 || n > l {
        return Err(Error::CardinalityOutOfRange {
            n,
            l: temperament.semitones(),
        });
    }
    let mut levels: Vec<RecursionLevel> = Vec::new();
    if n == 1 {
        return Ok(RecursionTrace {
            temperament,
            cardinality: 1,
            levels,
            total: 1,
        });
    }
    // Base layer: the 2-chord segment holds one point per layer.
    let base_len = l - 1;
    let mut prev_taus: Vec<u128> = vec![1; base_len];
    let mut prev_total: u128 = base_len as u128;
    levels.push(RecursionLevel {
        cardinality: 2,
        seed: 1,
        taus: prev_taus.clone(),
        subtotal: prev_total,
    });
    for m in 3..=n {
        let len = l - m + 1;
        let seed = prev_total;
        let mut taus = vec![0u128; len];
        let mut above = seed;
        for k in (1..=len).rev() {
            let tau = above - prev_taus[k]; // prev level holds index k+1 at [k]
            taus[k - 1] = tau;
            above = tau;
        }
        let subtotal = taus.iter().sum();
        levels.push(RecursionLevel {
            cardinality: m,
            seed,
            taus: taus.clone(),
            subtotal,
        });
        prev_taus = taus;
        prev_total = subtotal;
    }
    Ok(RecursionTrace {
        temperament,
        cardinality: n,
        levels,
        total: prev_total,
    })
}

/// Surface lattice points by the facet formula
/// `N_S(n) = n * (N_C(n-1) + N_C(n-2))`, zero for `n <= 1`.
///
/// This is one of two routes kept side by side: it undercounts the true
/// boundary for `n >= 4` (its per-facet vertex partitioning discards
/// points), so the stars-and-bars oracle below is never merged with it.
pub fn surface_count_formula(temperament: Temperament, n: usize) -> u128 {
    if n <= 1 {
        return 0;
    }
    let inner = count_distinct(temperament, n - 1) + count_distinct(temperament, n - 2);
    n as u128 * inner
}

/// Which lattice points the oracle counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    /// Strictly positive coordinates: interior points.
    Positive,
    /// Nonnegative coordinates: interior plus boundary.
    Nonnegative,
}

/// Stars-and-bars count of lattice solutions of `x_1 + .. + x_n = L`.
/// `n = 0` counts nothing: no polytope exists there.
pub fn lattice_count_oracle(temperament: Temperament, n: usize, positivity: Positivity) -> u128 {
    if n == 0 {
        return 0;
    }
    let l = temperament.semitones() as u64;
    match positivity {
        Positivity::Positive => count_distinct(temperament, n),
        Positivity::Nonnegative => binomial(l + n as u64 - 1, n as u64 - 1),
    }
}

/// Boundary lattice points: nonnegative solutions with at least one zero.
pub fn boundary_count_oracle(temperament: Temperament, n: usize) -> u128 {
    lattice_count_oracle(temperament, n, Positivity::Nonnegative)
        - lattice_count_oracle(temperament, n, Positivity::Positive)
}

/// Necessary conditions for a chord to lie in the `i`-th congruent region
/// (0-based) of the subdivision by orthocentre-to-vertex joins: the `i`-th
/// step at most `L/n`, every step at most `L - (n-1)`.
pub fn region_bounds_satisfied(chord: &Chord, region: usize) -> bool {
    let parts = chord.parts();
    let n = parts.len();
    if region >= n {
        return false;
    }
    let l = chord.span();
    let max_step = l - (n as u32 - 1);
    parts[region] as u64 * n as u64 <= l as u64 && parts.iter().all(|&p| p <= max_step)
}

/// Exact membership in the `i`-th congruent region: the `i`-th coordinate
/// attains the minimum.  Boundary points belong to several regions.
pub fn region_contains(chord: &Chord, region: usize) -> bool {
    let parts = chord.parts();
    region < parts.len() && parts[region] == *parts.iter().min().unwrap()
}

/// Squared Euclidean distance, exact.
pub fn distance_squared(a: &RationalPoint, b: &RationalPoint) -> Result<Ratio<i128>> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.dimension(),
            right: b.dimension(),
        });
    }
    Ok(a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| (x - y) * (x - y))
        .sum())
}

/// Coordinate-wise mean of two points.
pub fn midpoint(a: &RationalPoint, b: &RationalPoint) -> Result<RationalPoint> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.dimension(),
            right: b.dimension(),
        });
    }
    let half = ratio(1, 2);
    Ok(RationalPoint::new(
        a.coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| (x + y) * half)
            .collect(),
    ))
}

/// Squared cosine of the angle between two directions, exact:
/// `(sum a_i b_i)^2 / (sum a_i^2 * sum b_i^2)`.  Zero exactly at
/// orthogonality; one exactly at parallelism.
pub fn direction_cos_squared(a: &[Ratio<i128>], b: &[Ratio<i128>]) -> Result<Ratio<i128>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let dot: Ratio<i128> = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: Ratio<i128> = a.iter().map(|x| x * x).sum();
    let nb: Ratio<i128> = b.iter().map(|y| y * y).sum();
    if na.is_zero() || nb.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(dot * dot / (na * nb))
}

/// Exact cosine of the angle between the orthocentre-to-chord line and its
/// image under a coordinate permutation:
/// `sum (p_k - c)(p_perm(k) - c) / sum (p_k - c)^2` with `c = L/n`.
///
/// The permuted squared norm equals the unpermuted one, so the ratio is the
/// full cosine with its sign.
pub fn permutation_cosine(chord: &Chord, perm: &[usize]) -> Result<Ratio<i128>> {
    let parts = chord.parts();
    let n = parts.len();
    if perm.len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: perm.len(),
        });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidSelector);
        }
        seen[p] = true;
    }
    let centre = ratio(chord.span() as i128, n as i128);
    let dev: Vec<Ratio<i128>> = parts
        .iter()
        .map(|&p| ratio(p as i128, 1) - centre)
        .collect();
    let denom: Ratio<i128> = dev.iter().map(|d| d * d).sum();
    if denom.is_zero() {
        return Err(Error::DegenerateAtOrthocentre);
    }
    let numer: Ratio<i128> = (0..n).map(|k| dev[k] * dev[perm[k]]).sum();
    Ok(numer / denom)
}

/// True when the orthocentre of the simplex lies on the line through the
/// orthocentres of a face and of its complementary face.  A theorem for
/// opposite faces; false for generic perturbed points.
pub fn orthocentre_aligned(simplex: &LatticeSimplex, face: &FaceSelector) -> Result<bool> {
    let n = simplex.dimension_count;
    if face.order() >= n {
        return Err(Error::InvalidSelector);
    }
    let h_face = face_orthocentre(simplex, face)?;
    let h_opposite = face_orthocentre(simplex, &face.complement(n)?)?;
    let (h, _) = orthocentre(simplex);
    collinear(&h_face, &h_opposite, &h)
}

/// Collinearity of three points, decided exactly.
pub fn collinear(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Result<bool> {
    if a.dimension() != b.dimension() || a.dimension() != c.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.dimension(),
            right: b.dimension().max(c.dimension()),
        });
    }
    let u: Vec<Ratio<i128>> = b
        .coords()
        .iter()
        .zip(a.coords())
        .map(|(x, y)| x - y)
        .collect();
    let v: Vec<Ratio<i128>> = c
        .coords()
        .iter()
        .zip(a.coords())
        .map(|(x, y)| x - y)
        .collect();
    // Parallel iff every 2x2 minor vanishes.
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if u[i] * v[j] != u[j] * v[i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Vertices of the nested shell at offset `k` from every facet:
/// `k + delta_i * (L - k*n)` per coordinate.  `k = 0` gives the outer
/// simplex; `k = L/n` (when integral) collapses onto the orthocentre.
pub fn shell_vertices(temperament: Temperament, n: usize, k: u32) -> Result<Vec<Vec<u32>>> {
    let l = temperament.semitones();
    if n < 1 || n > l as usize {
        return Err(Error::CardinalityOutOfRange { n, l });
    }
    if k as u64 * n as u64 > l as u64 {
        return Err(Error::ShellOutOfRange { k, n, l });
    }
    let spread = l - k * n as u32;
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { k + spread } else { k })
                .collect()
        })
        .collect())
}

/// The palindrome-point line of one shell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeLocus {
    pub temperament: Temperament,
    pub cardinality: usize,
    pub shell: u32,
    /// Coordinates pinned to the shell offset (0-based positions).
    pub fixed_positions: Vec<usize>,
    /// The two points the line joins: mean points of opposite sides for
    /// even cardinality, a vertex and an opposite mean point for odd.
    pub endpoints: (RationalPoint, RationalPoint),
    /// Lattice points strictly between the endpoints; all palindromes.
    pub points: Vec<Chord>,
}

/// Palindrome-coordinate lattice points on shell `k`: for even `n`, the
/// family `(k,..,k,a,b,b,a,k,..,k)` with `a + b` fixed by the shell; for
/// odd `n`, `(k,..,k,a,m,a,k,..,k)` with `2a + m` fixed.  Endpoints of the
/// segment are excluded; interior lattice points are returned.
pub fn palindrome_locus(temperament: Temperament, n: usize, k: u32) -> Result<PalindromeLocus> {
    let l = temperament.semitones();
    if n < 3 || n > l as usize {
        return Err(Error::CardinalityOutOfRange { n, l });
    }
    if k < 1 || k as u64 * n as u64 > l as u64 {
        return Err(Error::ShellOutOfRange { k, n, l });
    }
    let spread = l as i128 - k as i128 * n as i128; // L - k*n >= 0
    let kk = k as i128;
    let make_point = |centre: &[Ratio<i128>], left_pad: usize| {
        let mut coords = vec![ratio(kk, 1); n];
        for (offset, value) in centre.iter().enumerate() {
            coords[left_pad + offset] = *value;
        }
        RationalPoint::new(coords)
    };
    let chord_from = |centre: &[i128], left_pad: usize| {
        let mut parts = vec![k; n];
        for (offset, &value) in centre.iter().enumerate() {
            parts[left_pad + offset] = value as u32;
        }
        Chord::from_validated(parts)
    };
    if n.is_multiple_of(2) {
        // Positions n/2-1 .. n/2+2 (0-based) carry (a, b, b, a) with
        // a + b = 2k + spread/2.
        let pad = n / 2 - 2;
        let fixed_positions: Vec<usize> = (0..pad).chain(n / 2 + 2..n).collect();
        let half = ratio(spread, 2);
        let a_low = ratio(kk, 1);
        let a_high = ratio(kk, 1) + half;
        let endpoint_a = make_point(&[a_low, a_high, a_high, a_low], pad);
        let endpoint_b = make_point(&[a_high, a_low, a_low, a_high], pad);
        let mut points = Vec::new();
        // Interior integer a: k < a < k + spread/2 and a + b integral.
        if spread % 2 == 0 {
            let pair_sum = 2 * kk + spread / 2;
            for a in kk + 1..kk + (spread + 1) / 2 {
                let b = pair_sum - a;
                points.push(chord_from(&[a, b, b, a], pad));
            }
        }
        Ok(PalindromeLocus {
            temperament,
            cardinality: n,
            shell: k,
            fixed_positions,
            endpoints: (endpoint_a, endpoint_b),
            points,
        })
    } else {
        // Positions (n-3)/2 .. (n+1)/2 carry (a, m, a) with
        // 2a + m = 2k + spread + k.
        let pad = (n - 3) / 2;
        let fixed_positions: Vec<usize> = (0..pad).chain((n + 3) / 2..n).collect();
        let vertex = make_point(&[ratio(kk, 1), ratio(kk + spread, 1), ratio(kk, 1)], pad);
        let mean_a = ratio(kk, 1) + ratio(spread, 2);
        let mean_point = make_point(&[mean_a, ratio(kk, 1), mean_a], pad);
        let total = 3 * kk + spread; // 2a + m
        let mut points = Vec::new();
        // Interior integer a: k < a < k + spread/2 (m stays above k).
        let mut a = kk + 1;
        while 2 * a < 2 * kk + spread {
            let m = total - 2 * a;
            points.push(chord_from(&[a, m, a], pad));
            a += 1;
        }
        Ok(PalindromeLocus {
            temperament,
            cardinality: n,
            shell: k,
            fixed_positions,
            endpoints: (vertex, mean_point),
            points,
        })
    }
}
