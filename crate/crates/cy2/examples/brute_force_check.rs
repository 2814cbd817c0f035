//! Cross-check the structured enumeration against the 2^k reference path,
//! element for element, on every category of the small grid.
//!
//! Run: `cargo run -p cy2 --example brute_force_check`

use cy2::category::{build, CategorySpec, Family};
use cy2::torsion::{brute_force_torsion_pairs, enumerate_torsion_pairs};

fn main() {
    for (family, n, t) in [
        (Family::A, 2, 2),
        (Family::A, 2, 1),
        (Family::A, 1, 2),
        (Family::A, 1, 3),
        (Family::D, 1, 1),
        (Family::D, 1, 2),
    ] {
        let spec = CategorySpec::new(family, n, t).unwrap();
        let tables = build(spec);
        let structured = enumerate_torsion_pairs(&tables).unwrap();
        let brute = brute_force_torsion_pairs(&tables).unwrap();
        assert_eq!(structured, brute, "{spec}");
        println!(
            "{spec}: {} pairs, structured == brute-force over 2^{} subsets",
            structured.len(),
            tables.indec_count()
        );
    }
}
