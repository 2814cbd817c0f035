//! Wing decompositions of every all-rigid torsion half of A(2,2): each half
//! is covered by apex wings satisfying the separation condition.
//!
//! Run: `cargo run -p cy2 --example wing_decompositions`

use cy2::category::{build, CategorySpec, Family};
use cy2::torsion::enumerate_torsion_pairs;

fn main() {
    let tables = build(CategorySpec::new(Family::A, 2, 2).unwrap());
    let records = enumerate_torsion_pairs(&tables).unwrap();
    for r in records.iter().filter(|r| r.x_all_rigid) {
        let x_labels: Vec<String> = r.x.iter().map(|id| tables.indec(id).rep.label()).collect();
        let dec = r.wings.as_ref().expect("all-rigid halves carry wings");
        let wings: Vec<String> = dec
            .wings
            .iter()
            .map(|w| {
                format!(
                    "({}, {{{}}})",
                    tables.indec(w.apex).rep.label(),
                    w.members
                        .iter()
                        .map(|id| tables.indec(id).rep.label())
                        .collect::<Vec<_>>()
                        .join(" ")
                )
            })
            .collect();
        println!(
            "x = {{{}}}  ->  {}",
            x_labels.join(" "),
            if wings.is_empty() {
                "(empty decomposition)".into()
            } else {
                wings.join(", ")
            }
        );
    }
}
