//! Property suites over randomly generated inputs: closure-operator laws,
//! Galois-connection laws, serde round-trips.

use cy2::category::{build, CategorySpec, Family, Lifted};
use cy2::geometry_a::{Diagonal, DiagonalSet};
use cy2::geometry_d::{ArcD, ArcSetD, Color};
use cy2::IndecSet;
use proptest::prelude::*;

fn diagonal_set(ngon: u32) -> impl Strategy<Value = DiagonalSet> {
    let all: Vec<Diagonal> = DiagonalSet::all(ngon).unwrap().iter().copied().collect();
    proptest::collection::vec(0..all.len(), 0..=all.len()).prop_map(move |picks| {
        DiagonalSet::from_diagonals(ngon, picks.iter().map(|&i| all[i])).unwrap()
    })
}

fn arc_set(u: u32) -> impl Strategy<Value = ArcSetD> {
    let all: Vec<ArcD> = ArcSetD::all(u).unwrap().iter().copied().collect();
    proptest::collection::vec(0..all.len(), 0..=all.len())
        .prop_map(move |picks| ArcSetD::from_arcs(u, picks.iter().map(|&i| all[i])).unwrap())
}

proptest! {
    #[test]
    fn closure_a_laws(x in (4u32..=10).prop_flat_map(diagonal_set)) {
        let cx = x.ptolemy_closure();
        prop_assert!(x.iter().all(|d| cx.contains(d)));
        prop_assert!(cx.is_ptolemy());
        prop_assert_eq!(cx.ptolemy_closure(), cx.clone());
        // Monotone on a sub-collection.
        let sub = DiagonalSet::from_diagonals(
            x.ngon(),
            x.iter().copied().skip(1),
        ).unwrap();
        let csub = sub.ptolemy_closure();
        prop_assert!(csub.iter().all(|d| cx.contains(d)));
    }

    #[test]
    fn closure_d_laws(x in (3u32..=6).prop_flat_map(arc_set)) {
        let cx = x.ptolemy_closure_d();
        prop_assert!(x.iter().all(|a| cx.contains(a)));
        prop_assert!(cx.is_ptolemy_d());
        prop_assert_eq!(cx.ptolemy_closure_d(), cx.clone());
        let sub = ArcSetD::from_arcs(
            x.half_polygon(),
            x.iter().copied().skip(1),
        ).unwrap();
        let csub = sub.ptolemy_closure_d();
        prop_assert!(csub.iter().all(|a| cx.contains(a)));
    }

    #[test]
    fn diagonal_set_roundtrip(x in (4u32..=12).prop_flat_map(diagonal_set)) {
        let text = serde_json::to_string(&x).unwrap();
        let back: DiagonalSet = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn arc_set_roundtrip(x in (2u32..=6).prop_flat_map(arc_set)) {
        let text = serde_json::to_string(&x).unwrap();
        let back: ArcSetD = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn perp_galois_laws(bits in any::<u64>(), which in 0usize..3) {
        let spec = [
            CategorySpec::new(Family::A, 2, 2).unwrap(),
            CategorySpec::new(Family::A, 2, 1).unwrap(),
            CategorySpec::new(Family::D, 1, 2).unwrap(),
        ][which];
        let tables = build(spec);
        let k = tables.indec_count();
        let x = IndecSet::from_ids(k, (0..k).filter(|i| bits & (1 << (i % 64)) != 0));
        let rp = tables.right_perp(&x);
        let lrp = tables.left_perp(&rp);
        prop_assert!(x.is_subset(&lrp));
        prop_assert_eq!(tables.right_perp(&lrp), rp);
    }

    #[test]
    fn lift_project_inverse(bits in any::<u64>(), which in 0usize..2) {
        let spec = [
            CategorySpec::new(Family::A, 1, 2).unwrap(),
            CategorySpec::new(Family::D, 1, 1).unwrap(),
        ][which];
        let tables = build(spec);
        let k = tables.indec_count();
        let x = IndecSet::from_ids(k, (0..k).filter(|i| bits & (1 << (i % 64)) != 0));
        let lifted = tables.lift(&x);
        prop_assert_eq!(tables.project(&lifted).unwrap(), x);
        match lifted {
            Lifted::A(set) => prop_assert!(set.is_k_periodic(2).unwrap()),
            Lifted::D(set) => prop_assert!(set.is_f_periodic(1, 1).unwrap()),
        }
    }

    #[test]
    fn diameter_color_flip_symmetry(i in 1i64..=8, which in 0usize..2) {
        // The colour swap is an automorphism commuting with tau and phi.
        let u = 4;
        let color = [Color::Green, Color::Red][which];
        let d = ArcD::diameter(i, color, u).unwrap();
        let swap = |a: ArcD| match a {
            ArcD::Diameter { i, color, u } => ArcD::Diameter { i, color: color.flipped(), u },
            other => other,
        };
        prop_assert_eq!(swap(cy2::geometry_d::tau_d(d)), cy2::geometry_d::tau_d(swap(d)));
        prop_assert_eq!(swap(cy2::geometry_d::phi_d(d)), cy2::geometry_d::phi_d(swap(d)));
    }
}
