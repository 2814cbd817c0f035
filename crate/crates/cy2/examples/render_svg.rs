//! Write SVG pictures: a periodic Ptolemy diagram in the 15-gon of A(2,2)
//! and a type-D collection with colored diameters in the 8-gon of D(1,1).
//!
//! Run: `cargo run -p cy2 --example render_svg`

use cy2::category::{build, CategorySpec, Family};
use cy2::geometry_a::Diagonal;
use cy2::geometry_d::{ArcD, Color};
use cy2::render::{render_svg, RenderSpec};
use cy2::IndecSet;

fn main() {
    let out_dir = std::env::temp_dir();

    // The lift of the half {[(1,3)], [(1,4)], [(2,4)]} of A(2,2).
    let a22 = build(CategorySpec::new(Family::A, 2, 2).unwrap());
    let x = IndecSet::from_ids(
        a22.indec_count(),
        [(1, 3), (1, 4), (2, 4)].iter().map(|&(i, j)| {
            a22.indec_of_diagonal(Diagonal::new(i, j, 15).unwrap()).unwrap()
        }),
    );
    let svg = render_svg(&RenderSpec {
        polygon: 15,
        content: Some(a22.lift(&x)),
    });
    let path = out_dir.join("a22_half.svg");
    std::fs::write(&path, svg).unwrap();
    println!("wrote {}", path.display());

    // A type-D collection with one green and one red diameter.
    let d11 = build(CategorySpec::new(Family::D, 1, 1).unwrap());
    let u = 4;
    let y = IndecSet::from_ids(
        d11.indec_count(),
        [
            d11.indec_of_arc(ArcD::pair(1, 3, u).unwrap()).unwrap(),
            d11.indec_of_arc(ArcD::diameter(1, Color::Green, u).unwrap()).unwrap(),
            d11.indec_of_arc(ArcD::diameter(1, Color::Red, u).unwrap()).unwrap(),
        ],
    );
    let svg = render_svg(&RenderSpec {
        polygon: 8,
        content: Some(d11.lift(&y)),
    });
    let path = out_dir.join("d11_diameters.svg");
    std::fs::write(&path, svg).unwrap();
    println!("wrote {}", path.display());
}
