//! Enumerate every torsion pair of A(2,2) and print each half with its
//! perp, core, and classification flags.
//!
//! Run: `cargo run -p cy2 --example enumerate_pairs`

use cy2::category::{build, CategorySpec, Family};
use cy2::torsion::enumerate_torsion_pairs;
use cy2::IndecSet;

fn main() {
    let tables = build(CategorySpec::new(Family::A, 2, 2).unwrap());
    let records = enumerate_torsion_pairs(&tables).unwrap();
    println!("A(2,2): {} torsion pairs\n", records.len());

    let show = |s: &IndecSet| -> String {
        let labels: Vec<String> = s
            .iter()
            .map(|id| tables.indec(id).rep.label())
            .collect();
        if labels.is_empty() {
            "0".into()
        } else {
            labels.join(" ")
        }
    };

    for (k, r) in records.iter().enumerate() {
        println!("pair {:>2}: x = {}", k + 1, show(&r.x));
        println!("         y = {}", show(&r.y));
        println!(
            "         core = {}  t-structure: {}  x rigid: {}  y rigid: {}",
            show(&r.core),
            r.is_t_structure,
            r.x_all_rigid,
            r.y_all_rigid
        );
    }
}
