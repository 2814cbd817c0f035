//! Command-line front end: build tables, enumerate and classify torsion
//! pairs, compare counts, compute perps and wings, report hearts, render
//! SVG, and run the verification grid.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage errors
//! (including malformed input sets, with the offending element named).

use clap::{Args, Parser, Subcommand, ValueEnum};
use cy2::acceptance;
use cy2::category::{build, CategorySpec, CategoryTables, Family};
use cy2::counting;
use cy2::geometry_a::Diagonal;
use cy2::geometry_d::ArcDJson;
use cy2::hearts::heart_report;
use cy2::render::{render_svg, RenderSpec};
use cy2::torsion::{
    enumerate_torsion_pairs_with, wing_decomposition, EnumOptions, RecordJson, TorsionPairRecord,
};
use cy2::IndecSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "cy2", version, about = "Torsion pairs in the finite 2-Calabi-Yau categories A(n,t) and D(n,t)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    D,
}

#[derive(Args)]
struct SpecArgs {
    /// Category family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Rank parameter n >= 1.
    #[arg(long)]
    n: u32,
    /// Tube parameter t >= 1.
    #[arg(long)]
    t: u32,
}

impl SpecArgs {
    fn spec(&self) -> Result<CategorySpec, CliError> {
        let family = match self.family {
            FamilyArg::A => Family::A,
            FamilyArg::D => Family::D,
        };
        CategorySpec::new(family, self.n, self.t).map_err(|e| CliError::usage(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the category tables and dump them as JSON.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all torsion pairs and write the records as JSON.
    Enumerate {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Attach a heart report to every record.
        #[arg(long)]
        hearts: bool,
        /// Worker threads for the closed-set search.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Force the 2^k reference path instead of the structured search.
        #[arg(long)]
        brute_force: bool,
    },
    /// Closed-form count, optionally verified against the enumeration.
    Count {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also enumerate and compare; exit 1 on disagreement.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        brute_force: bool,
    },
    /// Perpendicular of a user-given set of indecomposables.
    Perp {
        #[command(flatten)]
        spec: SpecArgs,
        /// JSON set, e.g. "[[1,3]]" (family A) or
        /// "[{\"pair\":[1,3]},{\"diam\":1,\"color\":\"g\"}]" (family D).
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        /// Shift applied to the result, e.g. -1.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Wing decomposition of an all-rigid torsion half.
    Wings {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        set: String,
    },
    /// Enumerate with heart reports attached (same as enumerate --hearts).
    Hearts {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Render a (lifted) collection as SVG.
    Render {
        #[command(flatten)]
        spec: SpecArgs,
        /// JSON set in orbit-representative form; omitted = bare polygon.
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full verification grid and print the pass/fail table.
    Verify {
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Side {
    Left,
    Right,
}

struct CliError {
    message: String,
    code: i32,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("cy2: {e}");
            std::process::exit(e.code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Build { spec, out } => {
            let tables = build(spec.spec()?);
            let dump = tables.dump_json();
            emit(out.as_deref(), &serde_json::to_string_pretty(&dump).unwrap())?;
            Ok(0)
        }
        Cmd::Enumerate {
            spec,
            out,
            hearts,
            workers,
            brute_force,
        } => {
            let tables = build(spec.spec()?);
            let records = enumerate_cached(&tables, workers, brute_force)?;
            let json = records_json(&tables, &records, hearts)?;
            emit(out.as_deref(), &serde_json::to_string_pretty(&json).unwrap())?;
            Ok(0)
        }
        Cmd::Count {
            spec,
            verify,
            workers,
            brute_force,
        } => {
            let s = spec.spec()?;
            let formula = counting::count_torsion_pairs_formula(s);
            if !verify {
                println!("{{\"formula\": {formula}, \"enumerated\": null, \"agree\": null}}");
                return Ok(0);
            }
            let tables = build(s);
            let records = enumerate_cached(&tables, workers, brute_force)?;
            let enumerated = records.len();
            let agree = formula == num_bigint::BigUint::from(enumerated);
            println!(
                "{{\"formula\": {formula}, \"enumerated\": {enumerated}, \"agree\": {agree}}}"
            );
            Ok(if agree { 0 } else { 1 })
        }
        Cmd::Perp {
            spec,
            set,
            side,
            shift,
        } => {
            let tables = build(spec.spec()?);
            let x = parse_set(&tables, &set)?;
            let perp = match side {
                Side::Right => tables.right_perp(&x),
                Side::Left => tables.left_perp(&x),
            };
            let shifted = tables.shift(&perp, shift);
            let out: Vec<serde_json::Value> = shifted
                .iter()
                .map(|id| {
                    serde_json::json!({
                        "id": id,
                        "rep": cy2::category::rep_json(&tables.indec(id).rep),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string(&out).unwrap());
            Ok(0)
        }
        Cmd::Wings { spec, set } => {
            let tables = build(spec.spec()?);
            let x = parse_set(&tables, &set)?;
            let dec = wing_decomposition(&tables, &x)
                .map_err(|e| CliError::usage(e.to_string()))?;
            let out: Vec<serde_json::Value> = dec
                .wings
                .iter()
                .map(|w| {
                    serde_json::json!({
                        "apex": {
                            "id": w.apex,
                            "rep": cy2::category::rep_json(&tables.indec(w.apex).rep),
                        },
                        "members": w.members.ids(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string(&out).unwrap());
            Ok(0)
        }
        Cmd::Hearts { spec, out, workers } => {
            let tables = build(spec.spec()?);
            let records = enumerate_cached(&tables, workers, false)?;
            let json = records_json(&tables, &records, true)?;
            emit(out.as_deref(), &serde_json::to_string_pretty(&json).unwrap())?;
            Ok(0)
        }
        Cmd::Render { spec, set, out } => {
            let tables = build(spec.spec()?);
            let content = match set {
                None => None,
                Some(s) => {
                    let x = parse_set(&tables, &s)?;
                    Some(tables.lift(&x))
                }
            };
            let svg = render_svg(&RenderSpec {
                polygon: tables.spec().polygon(),
                content,
            });
            emit(out.as_deref(), &svg)?;
            Ok(0)
        }
        Cmd::Verify { workers } => {
            let outcomes = acceptance::run_acceptance_grid(workers);
            print!("{}", acceptance::format_outcomes(&outcomes));
            Ok(if acceptance::all_passed(&outcomes) { 0 } else { 1 })
        }
    }
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

/// Parse a user-given set of orbit representatives for the tables' family.
fn parse_set(tables: &CategoryTables, raw: &str) -> Result<IndecSet, CliError> {
    let mut out = tables.empty_set();
    match tables.spec().family {
        Family::A => {
            let pairs: Vec<(i64, i64)> = serde_json::from_str(raw).map_err(|e| {
                CliError::usage(format!("expected a JSON array of [i, j] pairs: {e}"))
            })?;
            for (a, b) in pairs {
                let d = Diagonal::new(a, b, tables.spec().polygon())
                    .map_err(|e| CliError::usage(format!("bad element [{a}, {b}]: {e}")))?;
                let id = tables
                    .indec_of_diagonal(d)
                    .map_err(|e| CliError::usage(format!("bad element [{a}, {b}]: {e}")))?;
                out.insert(id);
            }
        }
        Family::D => {
            let arcs: Vec<ArcDJson> = serde_json::from_str(raw).map_err(|e| {
                CliError::usage(format!(
                    "expected a JSON array of {{\"pair\":[i,j]}} / {{\"diam\":i,\"color\":\"g|r\"}} objects: {e}"
                ))
            })?;
            let u = tables.spec().polygon() / 2;
            for (k, a) in arcs.into_iter().enumerate() {
                let arc = a
                    .into_arc(u)
                    .map_err(|e| CliError::usage(format!("bad element #{k}: {e}")))?;
                let id = tables
                    .indec_of_arc(arc)
                    .map_err(|e| CliError::usage(format!("bad element #{k}: {e}")))?;
                out.insert(id);
            }
        }
    }
    Ok(out)
}

fn records_json(
    tables: &CategoryTables,
    records: &[TorsionPairRecord],
    hearts: bool,
) -> Result<Vec<RecordJson>, CliError> {
    records
        .iter()
        .map(|r| {
            let mut json = r.to_json();
            if hearts {
                let report = heart_report(r, tables)
                    .map_err(|e| CliError::internal(e.to_string()))?;
                json.heart = Some(serde_json::to_value(&report).unwrap());
            }
            Ok(json)
        })
        .collect()
}

/// Enumeration with an optional file cache keyed by spec and crate version;
/// the brute-force path is never cached (it exists to cross-check).
fn enumerate_cached(
    tables: &CategoryTables,
    workers: usize,
    brute_force: bool,
) -> Result<Vec<TorsionPairRecord>, CliError> {
    let opts = EnumOptions {
        workers,
        brute_force,
    };
    let cache_dir = std::env::var_os("CY2_CACHE_DIR").map(PathBuf::from);
    if brute_force || cache_dir.is_none() {
        return enumerate_torsion_pairs_with(tables, opts)
            .map_err(|e| CliError::internal(e.to_string()));
    }
    let dir = cache_dir.unwrap();
    let s = tables.spec();
    let key = format!(
        "cy2-{}-{}-{}-v{}.json",
        s.family,
        s.n,
        s.t,
        env!("CARGO_PKG_VERSION")
    );
    let path = dir.join(key);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(parsed) = serde_json::from_str::<Vec<RecordJson>>(&text) {
            let restored: Result<Vec<_>, _> = parsed
                .iter()
                .map(|j| TorsionPairRecord::from_json(tables, j))
                .collect();
            if let Ok(records) = restored {
                return Ok(records);
            }
        }
        // Unreadable cache entries are recomputed and overwritten.
    }
    let records = enumerate_torsion_pairs_with(tables, opts)
        .map_err(|e| CliError::internal(e.to_string()))?;
    let json: Vec<RecordJson> = records.iter().map(|r| r.to_json()).collect();
    let _ = fs::create_dir_all(&dir);
    let _ = fs::write(&path, serde_json::to_string(&json).unwrap());
    Ok(records)
}
