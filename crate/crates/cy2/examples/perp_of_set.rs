//! Perpendicular categories of a user-style input set: the right perp of
//! {[(1,3)]} in A(2,2), shifted by [-1], is the eight-element list that the
//! fixtures pin down.
//!
//! Run: `cargo run -p cy2 --example perp_of_set`

use cy2::category::{build, CategorySpec, Family};
use cy2::geometry_a::Diagonal;
use cy2::IndecSet;

fn main() {
    let tables = build(CategorySpec::new(Family::A, 2, 2).unwrap());
    let ngon = tables.spec().polygon();
    let id = tables
        .indec_of_diagonal(Diagonal::new(1, 3, ngon).unwrap())
        .unwrap();
    let x = IndecSet::from_ids(tables.indec_count(), [id]);

    let right = tables.right_perp(&x);
    let shifted = tables.shift(&right, -1);
    println!("x = {{[(1,3)]}} in A(2,2)");
    println!(
        "right perp, shifted by [-1]: {}",
        shifted
            .iter()
            .map(|id| tables.indec(id).rep.label())
            .collect::<Vec<_>>()
            .join(" ")
    );

    let left = tables.left_perp(&x);
    println!(
        "left perp: {}",
        left.iter()
            .map(|id| tables.indec(id).rep.label())
            .collect::<Vec<_>>()
            .join(" ")
    );

    // The Galois identities behind torsion-half recognition.
    assert!(x.is_subset(&tables.left_perp(&right)));
    assert_eq!(tables.right_perp(&tables.left_perp(&right)), right);
    println!("Galois identities hold for this x");
}
