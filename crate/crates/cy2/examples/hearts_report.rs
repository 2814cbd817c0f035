//! Heart data of every cotorsion pair of A(2,2): core, number of simples,
//! the End(I) Hom-dimension matrix, and the catalog note.
//!
//! Run: `cargo run -p cy2 --example hearts_report`

use cy2::category::{build, CategorySpec, Family};
use cy2::hearts::{heart_catalog, heart_report};
use cy2::torsion::enumerate_torsion_pairs;

fn main() {
    let tables = build(CategorySpec::new(Family::A, 2, 2).unwrap());
    let records = enumerate_torsion_pairs(&tables).unwrap();
    for r in &records {
        let report = heart_report(r, &tables).unwrap();
        let core: Vec<String> = report
            .core
            .iter()
            .map(|&id| tables.indec(id).rep.label())
            .collect();
        println!(
            "core = {{{}}}  simples = {}  End dim = {:?}  note: {}",
            core.join(" "),
            report.num_simples,
            report.algebra_dim,
            report.catalog_note
        );
    }

    println!("\nstatic heart catalog:");
    for entry in heart_catalog() {
        println!(
            "  {}: {} | relations: {} | {}",
            entry.family, entry.quiver, entry.relations, entry.k_range
        );
    }
}
