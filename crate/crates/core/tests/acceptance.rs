//! Acceptance suite: reproduces every reference table row exactly, checks
//! the three counting routes against each other, and runs the property
//! suites.  Each numbered criterion prints one PASS line on success; a
//! failed assertion is the FAIL signal.

use proptest::prelude::*;

use nchord::binomial;
use nchord::blocks::{repeating_count_formula, total_class_count_formula};
use nchord::burnside::{
    burnside_cyclic_chords, colored_count_brute, colored_count_burnside, fixed_point_terms,
    fractional_repeating_group, ColoredRingProblem,
};
use nchord::chord::{Chord, Symmetry, Temperament};
use nchord::enumerate::{conjugate_point, count_distinct, ChordStream};
use nchord::orbits::{census, cyclic_orbits, repeating_count_bruteforce};
use nchord::report::verify;
use nchord::simplex::{
    boundary_count_oracle, face_count, interior_count_recursive, orthocentre_aligned,
    palindrome_locus, surface_count_formula, FaceSelector, LatticeSimplex,
};
use nchord::tables::{
    bracelet_table, face_table, fractional_comparison_table, repeat_class_table,
    repeat_count_table, scale_table, Table,
};

fn twelve() -> Temperament {
    Temperament::twelve()
}

fn row(table: &Table, label: &str) -> Vec<String> {
    table
        .row(label)
        .unwrap_or_else(|| panic!("missing row {label}"))
        .cells
        .clone()
}

fn assert_row(table: &Table, label: &str, expected: &[&str]) {
    assert_eq!(row(table, label), expected, "row {label}");
}

#[test]
fn criterion_1_scale_table() {
    let table = scale_table(twelve()).unwrap();
    assert_row(
        &table,
        "N_C",
        &[
            "0", "1", "11", "55", "165", "330", "462", "462", "330", "165", "55", "11", "1",
        ],
    );
    assert_row(
        &table,
        "N_C/n",
        &[
            "1/12", "1", "11/2", "55/3", "165/4", "66", "77", "66", "165/4", "55/3", "11/2", "1",
            "1/12",
        ],
    );
    assert_row(
        &table,
        "I_C",
        &[
            "0", "1", "5", "18", "41", "66", "77", "66", "41", "18", "5", "1", "0",
        ],
    );
    assert_row(
        &table,
        "Delta_N",
        &[
            "0", "0", "1", "2", "7", "0", "18", "0", "14", "6", "5", "0", "11",
        ],
    );
    assert_row(
        &table,
        "Delta_N/n",
        &[
            "11/12", "0", "1/2", "2/3", "7/4", "0", "3", "0", "7/4", "2/3", "1/2", "0", "11/12",
        ],
    );
    assert_row(
        &table,
        "N_M",
        &[
            "0", "1", "12", "57", "172", "330", "480", "462", "344", "171", "60", "11", "12",
        ],
    );
    assert_row(
        &table,
        "N_M/n",
        &[
            "1", "1", "6", "19", "43", "66", "80", "66", "43", "19", "6", "1", "1",
        ],
    );
    println!("criterion 1 (scale table reproduction): PASS");
}

#[test]
fn criterion_2_repeat_tables() {
    let counts = repeat_count_table(twelve()).unwrap();
    assert_row(
        &counts,
        "Delta_N_1",
        &[
            "0", "0", "1", "2", "3", "0", "5", "0", "0", "0", "0", "0", "11",
        ],
    );
    assert_row(
        &counts,
        "Delta_N_2",
        &[
            "0", "0", "0", "0", "4", "0", "4", "0", "6", "0", "0", "0", "0",
        ],
    );
    assert_row(
        &counts,
        "Delta_N_3",
        &[
            "0", "0", "0", "0", "0", "0", "9", "0", "0", "6", "0", "0", "0",
        ],
    );
    assert_row(
        &counts,
        "Delta_N_4",
        &[
            "0", "0", "0", "0", "0", "0", "0", "0", "8", "0", "0", "0", "0",
        ],
    );
    assert_row(
        &counts,
        "Delta_N_5",
        &[
            "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "5", "0", "0",
        ],
    );
    assert_row(
        &counts,
        "Delta_N",
        &[
            "0", "0", "1", "2", "7", "0", "18", "0", "14", "6", "5", "0", "11",
        ],
    );
    // Delta N(6) decomposes as 5 + 4 + 9.
    let b6 = repeating_count_formula(twelve(), 6).unwrap();
    assert_eq!(
        (
            b6.repeat_count_for(1),
            b6.repeat_count_for(2),
            b6.repeat_count_for(3)
        ),
        (5, 4, 9)
    );

    let classes = repeat_class_table(twelve()).unwrap();
    assert_row(
        &classes,
        "nu_1",
        &[
            "1", "0", "1", "1", "1", "0", "1", "0", "0", "0", "0", "0", "1",
        ],
    );
    assert_row(
        &classes,
        "nu_2",
        &[
            "0", "0", "0", "0", "2", "0", "1", "0", "1", "0", "0", "0", "0",
        ],
    );
    assert_row(
        &classes,
        "nu_3",
        &[
            "0", "0", "0", "0", "0", "0", "3", "0", "0", "1", "0", "0", "0",
        ],
    );
    assert_row(
        &classes,
        "nu_4",
        &[
            "0", "0", "0", "0", "0", "0", "0", "0", "2", "0", "0", "0", "0",
        ],
    );
    assert_row(
        &classes,
        "nu_5",
        &[
            "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0",
        ],
    );
    assert_row(
        &classes,
        "nu",
        &[
            "1", "0", "1", "1", "3", "0", "5", "0", "3", "1", "1", "0", "1",
        ],
    );
    assert_row(
        &classes,
        "nu_C",
        &[
            "0", "1", "5", "18", "40", "66", "75", "66", "40", "18", "5", "1", "0",
        ],
    );
    assert_row(
        &classes,
        "nu_M",
        &[
            "1", "1", "6", "19", "43", "66", "80", "66", "43", "19", "6", "1", "1",
        ],
    );
    println!("criterion 2 (repeat count and class tables): PASS");
}

#[test]
fn criterion_3_bracelet_table() {
    // Route check: these rows come from orbit reflection flags, not from
    // stored constants.
    let table = bracelet_table(twelve()).unwrap();
    assert_row(
        &table,
        "nu_P",
        &[
            "1", "1", "6", "5", "15", "10", "20", "10", "15", "5", "6", "1", "1",
        ],
    );
    assert_row(
        &table,
        "nu_N",
        &[
            "0", "0", "0", "14", "28", "56", "60", "56", "28", "14", "0", "0", "0",
        ],
    );
    assert_row(
        &table,
        "nu_Q",
        &[
            "1", "1", "6", "12", "29", "38", "50", "38", "29", "12", "6", "1", "1",
        ],
    );
    for n in 1..=12 {
        let c = census(twelve(), n, Symmetry::Dihedral).unwrap();
        let flagged = c
            .orbits
            .iter()
            .filter(|o| o.is_reflection_invariant())
            .count() as u128;
        assert_eq!(flagged, c.reflective.unwrap().invariant);
    }
    println!("criterion 3 (bracelet class table from orbit detection): PASS");
}

#[test]
fn criterion_4_triple_agreement() {
    for l in [7u32, 12, 15, 20] {
        let t = Temperament::new(l).unwrap();
        for n in 1..=l as usize {
            let orbit = census(t, n, Symmetry::Cyclic).unwrap();
            let block_classes = total_class_count_formula(t, n).unwrap();
            let burnside = burnside_cyclic_chords(t, n).unwrap();
            assert_eq!(orbit.class_count, block_classes, "classes at L={l}, n={n}");
            assert_eq!(orbit.class_count, burnside, "Burnside at L={l}, n={n}");
            let brute = repeating_count_bruteforce(t, n).unwrap();
            let formula = repeating_count_formula(t, n).unwrap().total;
            assert_eq!(brute, formula, "repeats at L={l}, n={n}");
        }
    }
    println!("criterion 4 (triple agreement, L in {{7, 12, 15, 20}}): PASS");
}

#[test]
fn criterion_5_fractional_comparison() {
    let table = fractional_comparison_table(twelve()).unwrap();
    for n in 0..=12usize {
        let cells = &table.row(&n.to_string()).unwrap().cells;
        assert_eq!(cells[2], cells[4], "route values differ at n={n}");
    }
    assert_eq!(row(&table, "0")[2], "11/12");
    // The decompositions differ at n = 4, 6, 8 even though the sums agree.
    let expectations = [
        (4usize, vec![15u128, 6], vec![3u128, 4]),
        (6, vec![20, 12, 4], vec![5, 4, 9]),
        (8, vec![15, 6], vec![6, 8]),
    ];
    for (n, group_expected, block_expected) in expectations {
        let group: Vec<u128> = fractional_repeating_group(twelve(), n)
            .unwrap()
            .addends
            .iter()
            .map(|a| a.product)
            .collect();
        let block: Vec<u128> = repeating_count_formula(twelve(), n)
            .unwrap()
            .entries
            .iter()
            .filter(|e| e.repeat_count > 0)
            .map(|e| e.repeat_count)
            .collect();
        assert_eq!(group, group_expected, "group addends at n={n}");
        assert_eq!(block, block_expected, "block addends at n={n}");
        assert_ne!(group, block, "addends must differ at n={n}");
    }
    println!("criterion 5 (fractional repeat comparison table): PASS");
}

#[test]
fn criterion_6_colored_rings() {
    let cake = ColoredRingProblem::new(4, 3, Symmetry::Cyclic);
    let census = colored_count_brute(&cake).unwrap();
    assert_eq!(
        (
            census.distinct,
            census.repeating,
            census.total,
            census.class_count
        ),
        (81, 15, 96, 24)
    );
    assert_eq!(colored_count_burnside(&cake).unwrap(), 24);
    assert_eq!(
        census
            .per_pattern
            .iter()
            .map(|p| p.class_count)
            .collect::<Vec<_>>(),
        [3, 6, 6, 9]
    );
    let terms: Vec<u128> = fixed_point_terms(&cake)
        .unwrap()
        .iter()
        .map(|t| t.fixed)
        .collect();
    assert_eq!(terms.iter().sum::<u128>(), 96);

    let necklace = ColoredRingProblem::new(4, 3, Symmetry::Dihedral);
    let census = colored_count_brute(&necklace).unwrap();
    assert_eq!(
        (
            census.distinct,
            census.repeating,
            census.total,
            census.class_count
        ),
        (81, 87, 168, 21)
    );
    assert_eq!(colored_count_burnside(&necklace).unwrap(), 21);
    assert_eq!(
        census
            .per_pattern
            .iter()
            .map(|p| p.class_count)
            .collect::<Vec<_>>(),
        [3, 6, 6, 6]
    );
    println!("criterion 6 (colored ring counts, 4 beads / 3 colors): PASS");
}

#[test]
fn criterion_7_faces_and_recursion() {
    let table = face_table().unwrap();
    assert_eq!(table.columns.len(), 14);
    for j in 0..=13usize {
        let cells = row(&table, &format!("F_{j}"));
        for (n, cell) in cells.iter().enumerate() {
            let expected = if j <= n {
                binomial(n as u64, j as u64).to_string()
            } else {
                String::new()
            };
            assert_eq!(cell, &expected, "F_{j} at n={n}");
        }
    }
    // Spot cells as published.
    assert_eq!(face_count(12, 6), 924);
    assert_eq!(face_count(13, 5), 1287);
    assert_eq!(face_count(6, 2), 15);
    // Pascal recursion across the whole table.
    for n in 1..=13usize {
        for j in 1..=n {
            assert_eq!(
                face_count(n, j),
                face_count(n - 1, j) + face_count(n - 1, j - 1)
            );
        }
    }

    // The full worked layer chains, every intermediate value.
    let chains: [(usize, &[u128], u128); 8] = [
        (5, &[1, 4, 10, 20, 35, 56, 84, 120], 330),
        (6, &[1, 5, 15, 35, 70, 126, 210], 462),
        (7, &[1, 6, 21, 56, 126, 252], 462),
        (8, &[1, 7, 28, 84, 210], 330),
        (9, &[1, 8, 36, 120], 165),
        (10, &[1, 9, 45], 55),
        (11, &[1, 10], 11),
        (12, &[1], 1),
    ];
    let trace = interior_count_recursive(twelve(), 12).unwrap();
    for (m, taus, subtotal) in chains {
        let level = trace.level(m).unwrap();
        assert_eq!(level.taus, taus, "layer chain at cardinality {m}");
        assert_eq!(level.subtotal, subtotal);
    }
    // tau_7 of the 6-chord chain is 210.
    assert_eq!(trace.level(6).unwrap().taus[6], 210);
    // Seeds are the previous cardinality's totals.
    assert_eq!(trace.level(5).unwrap().seed, 165);
    assert_eq!(trace.level(6).unwrap().seed, 330);
    // Early chains.
    assert_eq!(
        interior_count_recursive(twelve(), 3)
            .unwrap()
            .level(3)
            .unwrap()
            .taus,
        (1..=10).collect::<Vec<u128>>()
    );
    assert_eq!(
        interior_count_recursive(twelve(), 4)
            .unwrap()
            .level(4)
            .unwrap()
            .taus,
        [1, 3, 6, 10, 15, 21, 28, 36, 45]
    );
    println!("criterion 7 (face table and layer recursion chains): PASS");
}

#[test]
fn criterion_8_lattice_verification() {
    let expected_formula: [u128; 11] = [2, 36, 264, 1100, 2970, 5544, 7392, 7128, 4950, 2420, 792];
    for (idx, &want) in expected_formula.iter().enumerate() {
        let n = idx + 2;
        assert_eq!(surface_count_formula(twelve(), n), want, "N_S({n})");
    }
    // The oracle agrees with the formula exactly through n = 3.
    for n in 1..=3usize {
        assert_eq!(
            boundary_count_oracle(twelve(), n),
            surface_count_formula(twelve(), n),
            "boundary count at n={n}"
        );
    }
    let report = verify(twelve()).unwrap();
    assert!(report.all_checks_pass);
    let n4 = report.lattice_surface.iter().find(|r| r.n == 4).unwrap();
    assert_eq!(n4.delta, 26);
    assert!(!n4.agrees);
    for n in 4..=12usize {
        let row = report.lattice_surface.iter().find(|r| r.n == n).unwrap();
        assert!(row.delta > 0, "oracle must exceed the formula at n={n}");
    }
    let flags: Vec<(usize, String, String)> = report
        .reference_flags
        .iter()
        .map(|f| (f.n, f.published.clone(), f.computed.clone()))
        .collect();
    assert_eq!(
        flags,
        vec![
            (5, "1110".to_string(), "1100".to_string()),
            (7, "5944".to_string(), "5544".to_string())
        ]
    );
    println!("criterion 8 (lattice counts, oracle deltas, reference flags): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 9: property suites.

fn chord_strategy() -> impl Strategy<Value = (Temperament, Chord)> {
    (2u32..=16).prop_flat_map(|l| {
        (1usize..=l as usize).prop_flat_map(move |n| {
            let cuts: Vec<u32> = (1..l).collect();
            proptest::sample::subsequence(cuts, n - 1).prop_map(move |chosen| {
                let temperament = Temperament::new(l).unwrap();
                let mut parts = Vec::with_capacity(n);
                let mut prev = 0;
                for &c in &chosen {
                    parts.push(c - prev);
                    prev = c;
                }
                parts.push(l - prev);
                (temperament, Chord::new(parts, temperament).unwrap())
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn prime_form_is_orbit_constant(
        (t, c) in chord_strategy(),
        k in -24i64..24,
    ) {
        let _ = t;
        let rotated = c.transpose(k);
        prop_assert_eq!(
            rotated.prime_form(Symmetry::Cyclic),
            c.prime_form(Symmetry::Cyclic)
        );
        prop_assert_eq!(
            rotated.prime_form(Symmetry::Dihedral),
            c.prime_form(Symmetry::Dihedral)
        );
        prop_assert_eq!(
            c.reflect().prime_form(Symmetry::Dihedral),
            c.prime_form(Symmetry::Dihedral)
        );
    }

    #[test]
    fn reflect_is_an_involution((_t, c) in chord_strategy()) {
        prop_assert_eq!(c.reflect().reflect(), c.clone());
        prop_assert_eq!(c.reflect().span(), c.span());
        prop_assert_eq!(c.reflect().chord_type(), c.chord_type());
    }

    #[test]
    fn transpose_is_additive(
        (_t, c) in chord_strategy(),
        k1 in -30i64..30,
        k2 in -30i64..30,
    ) {
        prop_assert_eq!(c.transpose(k1 + k2), c.transpose(k1).transpose(k2));
        prop_assert_eq!(c.transpose(k1).span(), c.span());
        prop_assert_eq!(c.transpose(k1).chord_type(), c.chord_type());
    }

    #[test]
    fn orbit_sizes_divide_cardinality_and_chiral_classes_pair_up(
        l in 2u32..=12,
        n_seed in 1usize..=12,
    ) {
        let t = Temperament::new(l).unwrap();
        let n = 1 + n_seed % l as usize;
        let c = census(t, n, Symmetry::Dihedral).unwrap();
        for orbit in &c.orbits {
            prop_assert_eq!(n % orbit.size(), 0);
        }
        prop_assert_eq!(c.reflective.unwrap().non_invariant % 2, 0);
    }

    #[test]
    fn conjugate_is_injective_with_decreasing_image(
        l in 3u32..=12,
        n_seed in 0usize..=11,
    ) {
        let t = Temperament::new(l).unwrap();
        let n = 2 + n_seed % (l as usize - 1);
        let mut images = std::collections::BTreeSet::new();
        let mut total = 0u128;
        for chord in ChordStream::new(t, n).unwrap() {
            let q = conjugate_point(&chord).unwrap();
            prop_assert!(q.windows(2).all(|w| w[0] > w[1]));
            prop_assert!(q.iter().all(|&v| v >= 1 && v < l));
            images.insert(q);
            total += 1;
        }
        prop_assert_eq!(images.len() as u128, total);
        // Strictly decreasing (n-1)-tuples over 1..L are counted by the
        // same binomial, so the image is exactly that set.
        prop_assert_eq!(total, count_distinct(t, n));
        prop_assert_eq!(images.len() as u128, binomial(l as u64 - 1, n as u64 - 1));
    }

    #[test]
    fn compositions_sum_to_doubling(l in 1u32..=20) {
        let t = Temperament::new(l).unwrap();
        let total: u128 = (1..=l as usize).map(|n| count_distinct(t, n)).sum();
        prop_assert_eq!(total, 1u128 << (l - 1));
    }

    #[test]
    fn palindrome_locus_points_are_palindromes(
        l in 6u32..=24,
        n_seed in 0usize..=7,
        k_seed in 0u32..=7,
    ) {
        let t = Temperament::new(l).unwrap();
        let n = 3 + n_seed % 6;
        prop_assume!(n <= l as usize);
        let k_max = l / n as u32;
        prop_assume!(k_max >= 1);
        let k = 1 + k_seed % k_max;
        let locus = palindrome_locus(t, n, k).unwrap();
        for point in &locus.points {
            prop_assert!(point.is_palindrome());
            prop_assert_eq!(point.cardinality(), n);
            prop_assert_eq!(point.span(), l);
            prop_assert!(Chord::new(point.parts().to_vec(), t).is_ok());
        }
    }

    #[test]
    fn orthocentre_aligned_with_opposite_faces(
        n in 2usize..=8,
        picks in proptest::collection::btree_set(0usize..8, 1..8),
    ) {
        let t = Temperament::new(12).unwrap();
        let indices: Vec<usize> = picks.into_iter().filter(|&i| i < n).collect();
        prop_assume!(!indices.is_empty() && indices.len() < n);
        let simplex = LatticeSimplex::new(t, n).unwrap();
        let face = FaceSelector::new(indices, n).unwrap();
        prop_assert!(orthocentre_aligned(&simplex, &face).unwrap());
    }
}

/// Exhaustive companion to the sampled alignment property: every proper
/// non-empty face of every simplex up to 8 vertices, at three spans.
#[test]
fn criterion_9_alignment_exhaustive() {
    let mut cases = 0u32;
    for l in [9u32, 12, 20] {
        let t = Temperament::new(l).unwrap();
        for n in 2..=8usize {
            let simplex = LatticeSimplex::new(t, n).unwrap();
            for mask in 1u32..(1 << n) - 1 {
                let indices: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let face = FaceSelector::new(indices, n).unwrap();
                assert!(orthocentre_aligned(&simplex, &face).unwrap());
                cases += 1;
            }
        }
    }
    assert!(cases >= 1000, "exhaustive sweep covered {cases} cases");
    println!("criterion 9 (property suites + exhaustive alignment): PASS");
}

/// Deficit-weighted repeating points match the repeat totals, and the
/// unique repeating pair-chord is the orthocentre of the 2-simplex.
#[test]
fn geometric_repeat_census_agrees() {
    for n in 1..=12usize {
        let weighted: u128 = cyclic_orbits(twelve(), n)
            .unwrap()
            .iter()
            .map(|o| o.deficit() as u128)
            .sum();
        assert_eq!(
            weighted,
            repeating_count_formula(twelve(), n).unwrap().total
        );
    }
    let orbits = cyclic_orbits(twelve(), 2).unwrap();
    let repeating: Vec<_> = orbits.iter().filter(|o| o.deficit() > 0).collect();
    assert_eq!(repeating.len(), 1);
    assert_eq!(repeating[0].representative().parts(), &[6, 6]);
}
