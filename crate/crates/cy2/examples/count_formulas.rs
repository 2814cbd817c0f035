//! Closed-form torsion-pair counts next to the enumerated values over a
//! small grid, plus the Ptolemy-diagram counts compared with the geometric
//! counter.
//!
//! Run: `cargo run -p cy2 --example count_formulas`

use cy2::category::{build, CategorySpec, Family};
use cy2::counting::{
    cluster_tube_count, count_ptolemy, count_torsion_pairs_formula, ptolemy_count_formula, t_n1,
    CountReport,
};
use cy2::torsion::enumerate_torsion_pairs;

fn main() {
    println!("cluster-tube counts: T(2) = {}, T(3) = {}, T(4) = {}",
        cluster_tube_count(2).unwrap(),
        cluster_tube_count(3).unwrap(),
        cluster_tube_count(4).unwrap());
    println!("t(1,1) = {}, t(2,1) = {}\n", t_n1(1).unwrap(), t_n1(2).unwrap());

    for (family, n, t) in [
        (Family::A, 2, 2),
        (Family::A, 2, 1),
        (Family::A, 1, 2),
        (Family::D, 1, 1),
        (Family::D, 1, 2),
    ] {
        let spec = CategorySpec::new(family, n, t).unwrap();
        let tables = build(spec);
        let enumerated = enumerate_torsion_pairs(&tables).unwrap().len();
        let report = CountReport::with_enumerated(spec, enumerated as u64);
        println!(
            "{spec}: formula {} enumerated {} agree {}",
            report.formula_value,
            enumerated,
            report.agree.unwrap()
        );
        assert_eq!(count_torsion_pairs_formula(spec), report.formula_value);
    }

    println!("\nPtolemy diagrams of the m-gon, formula vs geometric count:");
    for m in 4..=8u64 {
        println!(
            "  s({m}) = {} = {}",
            ptolemy_count_formula(m).unwrap(),
            count_ptolemy(m).unwrap()
        );
    }
}
