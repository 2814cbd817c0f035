//! A tour of the type-D polygon model: colored diameters, the three
//! crossing clauses, the tau/phi/F actions, and the Ptolemy closure.
//!
//! Run: `cargo run -p cy2 --example type_d_model`

use cy2::geometry_d::{cross_d, f_d, phi_d, tau_d, ArcD, ArcSetD, Color};

fn main() {
    let u = 4; // the 8-gon of D(1,1)

    let g1 = ArcD::diameter(1, Color::Green, u).unwrap();
    let r1 = ArcD::diameter(1, Color::Red, u).unwrap();
    let r2 = ArcD::diameter(2, Color::Red, u).unwrap();
    let pair = ArcD::pair(1, 3, u).unwrap();

    println!("paired diameters do not cross: {}", !cross_d(&g1, &r1).unwrap());
    println!("different colours, different feet cross: {}", cross_d(&g1, &r2).unwrap());
    println!("diameter vs arc pair {:?}: {}", pair, cross_d(&g1, &pair).unwrap());

    println!("\ntau flips a diameter's colour while rotating: {:?} -> {:?}", g1, tau_d(g1));
    println!("phi only flips the colour: {:?} -> {:?}", g1, phi_d(g1));
    println!("F = tau^(n+1) phi^n with n = 1: {:?} -> {:?}", g1, f_d(g1, 1, 1));

    // Two crossing diameters force the connecting arc pair (Pt2).
    let start = ArcSetD::from_arcs(u, [g1, r2]).unwrap();
    println!("\nstart is Ptolemy: {}", start.is_ptolemy_d());
    let closed = start.ptolemy_closure_d();
    let members: Vec<String> = closed.iter().map(|a| format!("{a:?}")).collect();
    println!("closure adds the connecting pair: {}", members.join(", "));
    println!("closure is Ptolemy: {}", closed.is_ptolemy_d());

    // F-periodicity of the full collection.
    let all = ArcSetD::all(u).unwrap();
    println!("\nthe full arc collection is F-periodic: {}", all.is_f_periodic(1, 1).unwrap());
}
