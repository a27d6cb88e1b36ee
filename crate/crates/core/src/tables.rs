//! Assembly of the reference tables.
//!
//! Every table is a plain grid of strings: exact integers, or rationals
//! rendered `p/q`.  Each row carries the route that produced it, so a
//! consumer can tell a brute-force census cell from a closed-form one.
//! Builders are deterministic: identical inputs give identical tables.

use serde::{Deserialize, Serialize};

use crate::blocks::{repeating_count_formula, RepeatBreakdown};
use crate::burnside::{euler_phi, fractional_repeating_group};
use crate::chord::{Symmetry, Temperament};
use crate::enumerate::{count_distinct, fractional_distinct, integer_part_distinct};
use crate::error::{Error, Result};
use crate::orbits::census;
use crate::simplex::{
    boundary_count_oracle, face_count, lattice_count_oracle, surface_count_formula, Positivity,
};

/// The published tables this crate reproduces.
pub const TABLE_IDS: [&str; 7] = ["scale", "repN", "repn", "TTI", "core", "poli", "face"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub id: String,
    pub temperament: u32,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub provenance: String,
    pub cells: Vec<String>,
}

impl Table {
    /// CSV rendering: header then one line per row, LF endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("row,provenance");
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for row in &self.rows {
            debug_assert!(!row.label.contains(','));
            out.push_str(&row.label);
            out.push(',');
            out.push_str(&row.provenance);
            for cell in &row.cells {
                debug_assert!(!cell.contains(','));
                out.push(',');
                out.push_str(cell);
            }
            out.push('\n');
        }
        out
    }

    pub fn row(&self, label: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.label == label)
    }
}

/// Builds the table named by `id`.
pub fn build_table(id: &str, temperament: Temperament) -> Result<Table> {
    match id {
        "scale" => scale_table(temperament),
        "repN" => repeat_count_table(temperament),
        "repn" => repeat_class_table(temperament),
        "TTI" => bracelet_table(temperament),
        "core" => fractional_comparison_table(temperament),
        "poli" => lattice_point_table(temperament),
        "face" => face_table(),
        other => Err(Error::UnknownTable(other.to_string())),
    }
}

fn n_columns(l: u32) -> Vec<String> {
    (0..=l).map(|n| format!("n={n}")).collect()
}

/// Distinct, fractional, repeating and total chord counts per cardinality.
pub fn scale_table(temperament: Temperament) -> Result<Table> {
    let l = temperament.semitones();
    let censuses: Vec<_> = (0..=l as usize)
        .map(|n| census(temperament, n, Symmetry::Cyclic))
        .collect::<Result<_>>()?;
    let mut rows = vec![TableRow {
        label: "N_C".into(),
        provenance: "binomial".into(),
        cells: (0..=l as usize)
            .map(|n| count_distinct(temperament, n).to_string())
            .collect(),
    }];
    rows.push(TableRow {
        label: "N_C/n".into(),
        provenance: "binomial".into(),
        cells: (0..=l as usize)
            .map(|n| fractional_distinct(temperament, n).to_string())
            .collect(),
    });
    rows.push(TableRow {
        label: "I_C".into(),
        provenance: "binomial".into(),
        cells: (0..=l as usize)
            .map(|n| integer_part_distinct(temperament, n).to_string())
            .collect(),
    });
    rows.push(TableRow {
        label: "Delta_N".into(),
        provenance: "orbit-census".into(),
        cells: censuses.iter().map(|c| c.repeating.to_string()).collect(),
    });
    rows.push(TableRow {
        label: "Delta_N/n".into(),
        provenance: "orbit-census".into(),
        cells: censuses
            .iter()
            .map(|c| c.fractional_repeating.to_string())
            .collect(),
    });
    rows.push(TableRow {
        label: "N_M".into(),
        provenance: "orbit-census".into(),
        cells: censuses.iter().map(|c| c.total.to_string()).collect(),
    });
    rows.push(TableRow {
        label: "N_M/n".into(),
        provenance: "orbit-census".into(),
        cells: censuses.iter().map(|c| c.class_count.to_string()).collect(),
    });
    Ok(Table {
        id: "scale".into(),
        temperament: l,
        columns: n_columns(l),
        rows,
    })
}

/// Block lengths whose rows appear in the repeat tables: those contributing
/// anywhere at this temperament (the n = 0 convention keeps length 1).
fn active_block_lengths(breakdowns: &[RepeatBreakdown]) -> Vec<usize> {
    let l = breakdowns.len();
    (1..=l / 2)
        .filter(|&i| i == 1 || breakdowns.iter().any(|b| b.class_count_for(i) > 0))
        .collect()
}

fn all_breakdowns(temperament: Temperament) -> Result<Vec<RepeatBreakdown>> {
    (1..=temperament.semitones() as usize)
        .map(|n| repeating_count_formula(temperament, n))
        .collect()
}

/// Repeating-chord counts split by block length.
pub fn repeat_count_table(temperament: Temperament) -> Result<Table> {
    let l = temperament.semitones();
    let breakdowns = all_breakdowns(temperament)?;
    let mut rows = Vec::new();
    for i in active_block_lengths(&breakdowns) {
        let mut cells = vec!["0".to_string()];
        cells.extend(breakdowns.iter().map(|b| b.repeat_count_for(i).to_string()));
        rows.push(TableRow {
            label: format!("Delta_N_{i}"),
            provenance: "divisor-blocks".into(),
            cells,
        });
    }
    let mut total_cells = vec!["0".to_string()];
    total_cells.extend(breakdowns.iter().map(|b| b.total.to_string()));
    rows.push(TableRow {
        label: "Delta_N".into(),
        provenance: "divisor-blocks".into(),
        cells: total_cells,
    });
    rows.push(TableRow {
        label: "N_C".into(),
        provenance: "binomial".into(),
        cells: (0..=l as usize)
            .map(|n| count_distinct(temperament, n).to_string())
            .collect(),
    });
    let mut nm_cells = vec!["0".to_string()];
    nm_cells.extend(
        breakdowns
            .iter()
            .enumerate()
            .map(|(idx, b)| (count_distinct(temperament, idx + 1) + b.total).to_string()),
    );
    rows.push(TableRow {
        label: "N_M".into(),
        provenance: "divisor-blocks".into(),
        cells: nm_cells,
    });
    Ok(Table {
        id: "repN".into(),
        temperament: l,
        columns: n_columns(l),
        rows,
    })
}

/// Class counts split by block length, plus the full-period and total
/// class rows.
pub fn repeat_class_table(temperament: Temperament) -> Result<Table> {
    let l = temperament.semitones();
    let breakdowns = all_breakdowns(temperament)?;
    let class_counts: Vec<u128> = (0..=l as usize)
        .map(|n| Ok(census(temperament, n, Symmetry::Cyclic)?.class_count))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let lengths = active_block_lengths(&breakdowns);
    for &i in &lengths {
        // The empty chord is conventionally a length-1 block class.
        let mut cells = vec![if i == 1 { "1" } else { "0" }.to_string()];
        cells.extend(breakdowns.iter().map(|b| b.class_count_for(i).to_string()));
        rows.push(TableRow {
            label: format!("nu_{i}"),
            provenance: "divisor-blocks".into(),
            cells,
        });
    }
    let repeat_classes: Vec<u128> = std::iter::once(1)
        .chain(
            breakdowns
                .iter()
                .map(|b| b.entries.iter().map(|e| e.class_count).sum::<u128>()),
        )
        .collect();
    rows.push(TableRow {
        label: "nu".into(),
        provenance: "divisor-blocks".into(),
        cells: repeat_classes.iter().map(|v| v.to_string()).collect(),
    });
    rows.push(TableRow {
        label: "nu_C".into(),
        provenance: "orbit-census".into(),
        cells: class_counts
            .iter()
            .zip(&repeat_classes)
            .enumerate()
            .map(|(n, (&total, &rep))| {
                if n == 0 {
                    "0".to_string()
                } else {
                    (total - rep).to_string()
                }
            })
            .collect(),
    });
    rows.push(TableRow {
        label: "nu_M".into(),
        provenance: "orbit-census".into(),
        cells: class_counts.iter().map(|v| v.to_string()).collect(),
    });
    Ok(Table {
        id: "repn".into(),
        temperament: l,
        columns: n_columns(l),
        rows,
    })
}

/// Necklace and bracelet class counts with the reflection split.
pub fn bracelet_table(temperament: Temperament) -> Result<Table> {
    let l = temperament.semitones();
    let censuses: Vec<_> = (0..=l as usize)
        .map(|n| census(temperament, n, Symmetry::Dihedral))
        .collect::<Result<Vec<_>>>()?;
    let reflective = |f: fn(&crate::orbits::ReflectiveCounts) -> u128| -> Vec<String> {
        censuses
            .iter()
            .map(|c| f(c.reflective.as_ref().unwrap()).to_string())
            .collect()
    };
    let rows = vec![
        TableRow {
            label: "nu_M".into(),
            provenance: "orbit-census".into(),
            cells: censuses.iter().map(|c| c.class_count.to_string()).collect(),
        },
        TableRow {
            label: "nu_P".into(),
            provenance: "orbit-census".into(),
            cells: reflective(|r| r.invariant),
        },
        TableRow {
            label: "nu_N".into(),
            provenance: "orbit-census".into(),
            cells: reflective(|r| r.non_invariant),
        },
        TableRow {
            label: "nu_Q".into(),
            provenance: "orbit-census".into(),
            cells: reflective(|r| r.bracelet_classes),
        },
    ];
    Ok(Table {
        id: "TTI".into(),
        temperament: l,
        columns: n_columns(l),
        rows,
    })
}

fn join_addends(addends: &[u128]) -> String {
    if addends.is_empty() {
        "0".to_string()
    } else {
        addends
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Fractional repeat counts by the group route and the block route, with
/// their addend decompositions side by side.  The sums agree everywhere;
/// the addends do not.
pub fn fractional_comparison_table(temperament: Temperament) -> Result<Table> {
    let l = temperament.semitones();
    let mut rows = Vec::new();
    for n in 0..=l as usize {
        let group = fractional_repeating_group(temperament, n)?;
        let group_addends: Vec<u128> = group.addends.iter().map(|a| a.product).collect();
        let (block_addends, block_value) = if n == 0 {
            let c = census(temperament, 0, Symmetry::Cyclic)?;
            ("-".to_string(), c.fractional_repeating.to_string())
        } else {
            let b = repeating_count_formula(temperament, n)?;
            let addends: Vec<u128> = b
                .entries
                .iter()
                .filter(|e| e.repeat_count > 0)
                .map(|e| e.repeat_count)
                .collect();
            let c = census(temperament, n, Symmetry::Cyclic)?;
            (join_addends(&addends), c.fractional_repeating.to_string())
        };
        let phi = if n == 0 { 1 } else { euler_phi(n as u64) };
        rows.push(TableRow {
            label: n.to_string(),
            provenance: "burnside|divisor-blocks".into(),
            cells: vec![
                phi.to_string(),
                join_addends(&group_addends),
                group.value.to_string(),
                block_addends,
                block_value,
            ],
        });
    }
    Ok(Table {
        id: "core".into(),
        temperament: l,
        columns: vec![
            "phi".into(),
            "group_addends".into(),
            "group_value".into(),
            "block_addends".into(),
            "block_value".into(),
        ],
        rows,
    })
}

/// Interior, surface and total lattice points: the facet formula beside the
/// stars-and-bars oracle, never merged.
pub fn lattice_point_table(temperament: Temperament) -> Result<Table> {
    let l = temperament.semitones();
    let ns = 0..=l as usize;
    let interior: Vec<u128> = ns.clone().map(|n| count_distinct(temperament, n)).collect();
    let surface_formula: Vec<u128> = ns
        .clone()
        .map(|n| surface_count_formula(temperament, n))
        .collect();
    let surface_oracle: Vec<u128> = ns
        .clone()
        .map(|n| boundary_count_oracle(temperament, n))
        .collect();
    let total_oracle: Vec<u128> = ns
        .clone()
        .map(|n| lattice_count_oracle(temperament, n, Positivity::Nonnegative))
        .collect();
    let rows = vec![
        TableRow {
            label: "N_C".into(),
            provenance: "binomial".into(),
            cells: interior.iter().map(|v| v.to_string()).collect(),
        },
        TableRow {
            label: "N_S_formula".into(),
            provenance: "facet-formula".into(),
            cells: surface_formula.iter().map(|v| v.to_string()).collect(),
        },
        TableRow {
            label: "N_V_formula".into(),
            provenance: "facet-formula".into(),
            cells: interior
                .iter()
                .zip(&surface_formula)
                .map(|(i, s)| (i + s).to_string())
                .collect(),
        },
        TableRow {
            label: "N_S_oracle".into(),
            provenance: "stars-and-bars".into(),
            cells: surface_oracle.iter().map(|v| v.to_string()).collect(),
        },
        TableRow {
            label: "N_V_oracle".into(),
            provenance: "stars-and-bars".into(),
            cells: total_oracle.iter().map(|v| v.to_string()).collect(),
        },
        TableRow {
            label: "N_S_delta".into(),
            provenance: "oracle-minus-formula".into(),
            cells: surface_oracle
                .iter()
                .zip(&surface_formula)
                .map(|(o, f)| (*o as i128 - *f as i128).to_string())
                .collect(),
        },
    ];
    Ok(Table {
        id: "poli".into(),
        temperament: l,
        columns: n_columns(l),
        rows,
    })
}

/// Pascal's triangle of face counts, one column per vertex count 0..=13.
pub fn face_table() -> Result<Table> {
    const MAX_N: usize = 13;
    let columns = (0..=MAX_N).map(|n| format!("n={n}")).collect();
    let mut rows = Vec::new();
    for j in 0..=MAX_N {
        let cells = (0..=MAX_N)
            .map(|n| {
                if j <= n {
                    face_count(n, j).to_string()
                } else {
                    String::new()
                }
            })
            .collect();
        rows.push(TableRow {
            label: format!("F_{j}"),
            provenance: "binomial".into(),
            cells,
        });
    }
    Ok(Table {
        id: "face".into(),
        temperament: 0,
        columns,
        rows,
    })
}
