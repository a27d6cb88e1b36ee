//! Command-line surface: reference tables, orbit listings, colored-ring
//! counts, geometry queries and the cross-check report, as CSV or JSON.
//!
//! Exit codes: 0 success, 2 usage or domain error, 3 verification failure.

use std::collections::BTreeMap;
use std::process::ExitCode;

use nchord::blocks::repeating_count_formula;
use nchord::burnside::{
    colored_count_brute, colored_count_burnside, fixed_point_terms, ColoredRingProblem,
};
use nchord::enumerate::count_distinct;
use nchord::orbits::census;
use nchord::report::verify;
use nchord::simplex::{
    boundary_count_oracle, face_count, interior_count_recursive, lattice_count_oracle, orthocentre,
    palindrome_locus, shell_vertices, surface_count_formula, LatticeSimplex, Positivity,
};
use nchord::tables::{build_table, Table, TableRow, TABLE_IDS};
use nchord::{Symmetry, Temperament};

const USAGE: &str = "\
usage: nchord <command> [flags]

commands:
  tables    --table scale|repN|repn|TTI|core|poli|face
  orbits    --cardinality N [--mode cyclic|dihedral]
  colored   --beads N --colors L [--mode cyclic|dihedral] [--method brute|burnside|types]
  verify
  geometry  --query summary|faces|recursion|shell|palindromes [--cardinality N] [--shell K]

common flags:
  --temperament L   scale size (default 12)
  --format csv|json (default csv)
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok((output, code)) => {
            // Output is assembled in full, then written once; a closed pipe
            // downstream is not an error.
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(output.as_bytes()) {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            code
        }
        Err(message) => {
            eprintln!("error: {message}");
            eprintln!("{USAGE}");
            ExitCode::from(2)
        }
    }
}

struct Flags {
    values: BTreeMap<String, String>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Flags, String> {
        let mut values = BTreeMap::new();
        let mut it = args.iter();
        while let Some(flag) = it.next() {
            let key = flag
                .strip_prefix("--")
                .ok_or_else(|| format!("unexpected argument: {flag}"))?;
            let value = it
                .next()
                .ok_or_else(|| format!("flag --{key} requires a value"))?;
            values.insert(key.to_string(), value.to_string());
        }
        Ok(Flags { values })
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|s| s.as_str())
    }

    fn temperament(&self) -> Result<Temperament, String> {
        let l = match self.get("temperament") {
            None => 12,
            Some(raw) => raw
                .parse::<u32>()
                .map_err(|_| format!("invalid temperament: {raw}"))?,
        };
        Temperament::new(l).map_err(|e| e.to_string())
    }

    fn format(&self) -> Result<Format, String> {
        match self.get("format").unwrap_or("csv") {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format: {other}")),
        }
    }

    fn symmetry(&self) -> Result<Symmetry, String> {
        match self.get("mode").unwrap_or("cyclic") {
            "cyclic" => Ok(Symmetry::Cyclic),
            "dihedral" => Ok(Symmetry::Dihedral),
            other => Err(format!("unknown mode: {other}")),
        }
    }

    fn required_usize(&self, key: &str) -> Result<usize, String> {
        self.get(key)
            .ok_or_else(|| format!("missing required flag --{key}"))?
            .parse::<usize>()
            .map_err(|_| format!("invalid value for --{key}"))
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Csv,
    Json,
}

/// A command's printable result: a table plus key/value summary lines.
struct Output {
    command: &'static str,
    table: Table,
    summary: Vec<(String, String)>,
}

impl Output {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = self.table.to_csv();
                for (key, value) in &self.summary {
                    out.push_str(&format!("# {key}={value}\n"));
                }
                out
            }
            Format::Json => {
                let summary: serde_json::Map<String, serde_json::Value> = self
                    .summary
                    .iter()
                    .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                    .collect();
                let provenance: serde_json::Map<String, serde_json::Value> = self
                    .table
                    .rows
                    .iter()
                    .map(|r| {
                        (
                            r.label.clone(),
                            serde_json::Value::String(r.provenance.clone()),
                        )
                    })
                    .collect();
                let doc = serde_json::json!({
                    "meta": {
                        "version": env!("CARGO_PKG_VERSION"),
                        "command": self.command,
                        "table": self.table.id,
                        "temperament": self.table.temperament,
                        "columns": self.table.columns,
                        "provenance": provenance,
                        "summary": summary,
                    },
                    "rows": self.table.rows,
                });
                let mut out = serde_json::to_string_pretty(&doc).unwrap();
                out.push('\n');
                out
            }
        }
    }
}

type CmdResult = Result<(String, ExitCode), String>;

fn run(args: &[String]) -> CmdResult {
    let Some((command, rest)) = args.split_first() else {
        return Err("missing command".into());
    };
    let flags = Flags::parse(rest)?;
    let format = flags.format()?;
    match command.as_str() {
        "tables" => cmd_tables(&flags, format),
        "orbits" => cmd_orbits(&flags, format),
        "colored" => cmd_colored(&flags, format),
        "verify" => cmd_verify(&flags, format),
        "geometry" => cmd_geometry(&flags, format),
        other => Err(format!("unknown command: {other}")),
    }
}

fn cmd_tables(flags: &Flags, format: Format) -> CmdResult {
    let id = flags.get("table").ok_or_else(|| {
        format!(
            "missing required flag --table (one of {})",
            TABLE_IDS.join("|")
        )
    })?;
    let temperament = flags.temperament()?;
    let table = build_table(id, temperament).map_err(|e| e.to_string())?;
    let output = Output {
        command: "tables",
        table,
        summary: Vec::new(),
    };
    Ok((output.render(format), ExitCode::SUCCESS))
}

fn cmd_orbits(flags: &Flags, format: Format) -> CmdResult {
    let temperament = flags.temperament()?;
    let n = flags.required_usize("cardinality")?;
    if n < 1 {
        return Err("cardinality must be at least 1".into());
    }
    let symmetry = flags.symmetry()?;
    let census = census(temperament, n, symmetry).map_err(|e| e.to_string())?;
    let rows = census
        .orbits
        .iter()
        .map(|orbit| TableRow {
            label: orbit.representative().to_string(),
            provenance: "orbit-census".into(),
            cells: vec![
                orbit.size().to_string(),
                orbit.deficit().to_string(),
                orbit.is_reflection_invariant().to_string(),
            ],
        })
        .collect();
    let mut summary = vec![
        ("N_C".to_string(), census.distinct.to_string()),
        ("Delta_N".to_string(), census.repeating.to_string()),
        ("N_M".to_string(), census.total.to_string()),
        ("nu_M".to_string(), census.class_count.to_string()),
    ];
    if let Some(r) = &census.reflective {
        summary.push(("nu_P".to_string(), r.invariant.to_string()));
        summary.push(("nu_N".to_string(), r.non_invariant.to_string()));
        summary.push(("nu_Q".to_string(), r.bracelet_classes.to_string()));
    }
    let output = Output {
        command: "orbits",
        table: Table {
            id: format!("orbits-{symmetry}"),
            temperament: temperament.semitones(),
            columns: vec![
                "size".into(),
                "deficit".into(),
                "reflection_invariant".into(),
            ],
            rows,
        },
        summary,
    };
    Ok((output.render(format), ExitCode::SUCCESS))
}

fn cmd_colored(flags: &Flags, format: Format) -> CmdResult {
    let beads = flags.required_usize("beads")?;
    let colors = flags.required_usize("colors")? as u64;
    let symmetry = flags.symmetry()?;
    let method = flags.get("method").unwrap_or("brute");
    let problem = ColoredRingProblem::new(beads, colors, symmetry);
    let burnside_classes = colored_count_burnside(&problem).map_err(|e| e.to_string())?;
    let (rows, brute_classes) = match method {
        "burnside" => {
            let rows = fixed_point_terms(&problem)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|term| TableRow {
                    label: term.element,
                    provenance: "burnside".into(),
                    cells: vec![term.fixed.to_string()],
                })
                .collect();
            (rows, None)
        }
        "brute" => {
            let census = colored_count_brute(&problem).map_err(|e| e.to_string())?;
            let row = TableRow {
                label: "totals".into(),
                provenance: "brute-census".into(),
                cells: vec![
                    census.distinct.to_string(),
                    census.repeating.to_string(),
                    census.total.to_string(),
                    census.class_count.to_string(),
                ],
            };
            (vec![row], Some(census.class_count))
        }
        "types" => {
            let census = colored_count_brute(&problem).map_err(|e| e.to_string())?;
            let rows = census
                .per_pattern
                .iter()
                .map(|p| TableRow {
                    label: p.pattern.clone(),
                    provenance: "brute-census".into(),
                    cells: vec![
                        p.distinct.to_string(),
                        p.repeating.to_string(),
                        p.total.to_string(),
                        p.class_count.to_string(),
                    ],
                })
                .collect();
            (rows, Some(census.class_count))
        }
        other => return Err(format!("unknown method: {other}")),
    };
    let columns = if method == "burnside" {
        vec!["fixed".into()]
    } else {
        vec![
            "distinct".into(),
            "repeating".into(),
            "total".into(),
            "classes".into(),
        ]
    };
    let output = Output {
        command: "colored",
        table: Table {
            id: format!("colored-{symmetry}-{method}"),
            temperament: colors as u32,
            columns,
            rows,
        },
        summary: vec![
            ("beads".into(), beads.to_string()),
            ("colors".into(), colors.to_string()),
            ("classes_burnside".into(), burnside_classes.to_string()),
        ],
    };
    let rendered = output.render(format);
    if let Some(brute) = brute_classes {
        if brute != burnside_classes {
            eprintln!(
                "verification failure: brute census found {brute} classes, \
                 Burnside count gives {burnside_classes}"
            );
            return Ok((rendered, ExitCode::from(3)));
        }
    }
    Ok((rendered, ExitCode::SUCCESS))
}

fn cmd_verify(flags: &Flags, format: Format) -> CmdResult {
    use std::fmt::Write;
    let temperament = flags.temperament()?;
    let report = verify(temperament).map_err(|e| e.to_string())?;
    let mut out = String::new();
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "meta": {
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": "verify",
                    "temperament": report.temperament,
                },
                "report": report,
            });
            out.push_str(&serde_json::to_string_pretty(&doc).unwrap());
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("kind,n,detail,status\n");
            for row in &report.triple_agreement {
                writeln!(
                    out,
                    "triple-agreement,{},orbit={} block={} burnside={} repeats={}|{},{}",
                    row.n,
                    row.orbit_classes,
                    row.block_classes,
                    row.burnside_classes,
                    row.orbit_repeats,
                    row.block_repeats,
                    status(row.pass)
                )
                .unwrap();
            }
            for row in &report.interior_counts {
                let stream = row
                    .stream
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| "skipped".into());
                writeln!(
                    out,
                    "interior-count,{},binomial={} recursion={} stream={},{}",
                    row.n,
                    row.binomial,
                    row.layer_recursion,
                    stream,
                    status(row.pass)
                )
                .unwrap();
            }
            for row in &report.fractional_repeats {
                writeln!(
                    out,
                    "fractional-repeat,{},group={} census={},{}",
                    row.n,
                    row.group_route,
                    row.census_route,
                    status(row.pass)
                )
                .unwrap();
            }
            for row in &report.lattice_surface {
                writeln!(
                    out,
                    "lattice-surface,{},formula={} oracle={} delta={},{}",
                    row.n,
                    row.facet_formula,
                    row.oracle,
                    row.delta,
                    if row.agrees { "pass" } else { "info" }
                )
                .unwrap();
            }
            for flag in &report.reference_flags {
                writeln!(
                    out,
                    "reference-flag,{},{}.{} published={} computed={},info",
                    flag.n, flag.table, flag.row, flag.published, flag.computed
                )
                .unwrap();
            }
            for note in &report.notes {
                writeln!(out, "note,,{},info", note.replace(',', ";")).unwrap();
            }
            writeln!(
                out,
                "summary,,all_checks_pass={},{}",
                report.all_checks_pass,
                status(report.all_checks_pass)
            )
            .unwrap();
        }
    }
    let code = if report.all_checks_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    };
    Ok((out, code))
}

fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn render_coords(point: &nchord::simplex::RationalPoint) -> String {
    point
        .coords()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_geometry(flags: &Flags, format: Format) -> CmdResult {
    let temperament = flags.temperament()?;
    let query = flags.get("query").unwrap_or("summary");
    let l = temperament.semitones();
    let table = match query {
        "summary" => {
            let n = flags.required_usize("cardinality")?;
            let simplex = LatticeSimplex::new(temperament, n).map_err(|e| e.to_string())?;
            let (h, integral) = orthocentre(&simplex);
            let rows = vec![
                TableRow {
                    label: "orthocentre".into(),
                    provenance: "closed-form".into(),
                    cells: vec![render_coords(&h)],
                },
                TableRow {
                    label: "orthocentre_integral".into(),
                    provenance: "closed-form".into(),
                    cells: vec![integral.to_string()],
                },
                TableRow {
                    label: "interior_points".into(),
                    provenance: "binomial".into(),
                    cells: vec![count_distinct(temperament, n).to_string()],
                },
                TableRow {
                    label: "interior_points_recursion".into(),
                    provenance: "layer-recursion".into(),
                    cells: vec![interior_count_recursive(temperament, n)
                        .map_err(|e| e.to_string())?
                        .total
                        .to_string()],
                },
                TableRow {
                    label: "surface_points_formula".into(),
                    provenance: "facet-formula".into(),
                    cells: vec![surface_count_formula(temperament, n).to_string()],
                },
                TableRow {
                    label: "surface_points_oracle".into(),
                    provenance: "stars-and-bars".into(),
                    cells: vec![boundary_count_oracle(temperament, n).to_string()],
                },
                TableRow {
                    label: "total_points_oracle".into(),
                    provenance: "stars-and-bars".into(),
                    cells: vec![
                        lattice_count_oracle(temperament, n, Positivity::Nonnegative).to_string(),
                    ],
                },
                TableRow {
                    label: "repeats".into(),
                    provenance: "divisor-blocks".into(),
                    cells: vec![repeating_count_formula(temperament, n)
                        .map_err(|e| e.to_string())?
                        .total
                        .to_string()],
                },
            ];
            Table {
                id: "geometry-summary".into(),
                temperament: l,
                columns: vec!["value".into()],
                rows,
            }
        }
        "faces" => {
            let n = flags.required_usize("cardinality")?;
            if n > l as usize {
                return Err(format!("cardinality {n} out of range for temperament {l}"));
            }
            let rows = (0..=n)
                .map(|j| TableRow {
                    label: format!("F_{j}"),
                    provenance: "binomial".into(),
                    cells: vec![face_count(n, j).to_string()],
                })
                .collect();
            Table {
                id: "geometry-faces".into(),
                temperament: l,
                columns: vec!["count".into()],
                rows,
            }
        }
        "recursion" => {
            let n = flags.required_usize("cardinality")?;
            let trace = interior_count_recursive(temperament, n).map_err(|e| e.to_string())?;
            let mut rows: Vec<TableRow> = trace
                .levels
                .iter()
                .map(|level| TableRow {
                    label: format!("m={}", level.cardinality),
                    provenance: "layer-recursion".into(),
                    cells: vec![
                        level.seed.to_string(),
                        level
                            .taus
                            .iter()
                            .map(|t| t.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                        level.subtotal.to_string(),
                    ],
                })
                .collect();
            rows.push(TableRow {
                label: "total".into(),
                provenance: "layer-recursion".into(),
                cells: vec![String::new(), String::new(), trace.total.to_string()],
            });
            Table {
                id: "geometry-recursion".into(),
                temperament: l,
                columns: vec!["seed".into(), "taus".into(), "subtotal".into()],
                rows,
            }
        }
        "shell" => {
            let n = flags.required_usize("cardinality")?;
            let k = flags.required_usize("shell")? as u32;
            let vertices = shell_vertices(temperament, n, k).map_err(|e| e.to_string())?;
            let rows = vertices
                .iter()
                .enumerate()
                .map(|(i, v)| TableRow {
                    label: format!("V_{}", i + 1),
                    provenance: "shell".into(),
                    cells: vec![v
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")],
                })
                .collect();
            Table {
                id: "geometry-shell".into(),
                temperament: l,
                columns: vec!["coordinates".into()],
                rows,
            }
        }
        "palindromes" => {
            let n = flags.required_usize("cardinality")?;
            let k = flags.required_usize("shell")? as u32;
            let locus = palindrome_locus(temperament, n, k).map_err(|e| e.to_string())?;
            let mut rows = vec![
                TableRow {
                    label: "endpoint_a".into(),
                    provenance: "shell-line".into(),
                    cells: vec![render_coords(&locus.endpoints.0)],
                },
                TableRow {
                    label: "endpoint_b".into(),
                    provenance: "shell-line".into(),
                    cells: vec![render_coords(&locus.endpoints.1)],
                },
            ];
            for (i, point) in locus.points.iter().enumerate() {
                rows.push(TableRow {
                    label: format!("P_{}", i + 1),
                    provenance: "shell-line".into(),
                    cells: vec![point
                        .parts()
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")],
                });
            }
            Table {
                id: "geometry-palindromes".into(),
                temperament: l,
                columns: vec!["coordinates".into()],
                rows,
            }
        }
        other => return Err(format!("unknown geometry query: {other}")),
    };
    let output = Output {
        command: "geometry",
        table,
        summary: Vec::new(),
    };
    Ok((output.render(format), ExitCode::SUCCESS))
}
