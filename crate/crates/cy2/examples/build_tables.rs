//! Build the category tables for A(2,2) and D(1,2) and print the
//! indecomposable lists: representative, level, length, rigidity, orbit.
//!
//! Run: `cargo run -p cy2 --example build_tables`

use cy2::category::{build, CategorySpec, Family};

fn main() {
    for spec in [
        CategorySpec::new(Family::A, 2, 2).unwrap(),
        CategorySpec::new(Family::D, 1, 2).unwrap(),
    ] {
        let tables = build(spec);
        println!(
            "{spec}: polygon = {}, {} indecomposables, symmetry order {}",
            spec.polygon(),
            tables.indec_count(),
            spec.group_order()
        );
        for indec in tables.indecs() {
            let orbit: Vec<String> = indec
                .members
                .iter()
                .map(|&m| tables.cell(m).label())
                .collect();
            println!(
                "  #{:<2} {:<8} level {}  length {}  rigid {:<5}  orbit {}",
                indec.id,
                indec.rep.label(),
                indec.level,
                indec.length,
                indec.rigid,
                orbit.join(" ")
            );
        }
        println!();
    }
}
