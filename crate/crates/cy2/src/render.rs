//! Static SVG pictures of (periodic) Ptolemy diagrams.
//!
//! Layout: vertices on a circle with vertex 1 at the top, labels running
//! clockwise. Green diameters are straight lines, red diameters are dashed
//! (a flat stand-in for the wavy drawing convention).

use crate::category::Lifted;
use crate::geometry_d::{ArcD, Color};
use std::fmt::Write;

const SIZE: f64 = 640.0;
const RADIUS: f64 = 270.0;
const GREEN: &str = "#2a9d2a";
const RED: &str = "#d0342c";

/// What to draw: the polygon size and the highlighted collection.
pub struct RenderSpec {
    pub polygon: u32,
    pub content: Option<Lifted>,
}

fn vertex_xy(v: u32, polygon: u32) -> (f64, f64) {
    // Vertex 1 at 90 degrees; clockwise labelling in screen coordinates.
    let theta = -std::f64::consts::FRAC_PI_2
        + (v as f64 - 1.0) * std::f64::consts::TAU / polygon as f64;
    let c = SIZE / 2.0;
    (c + RADIUS * theta.cos(), c + RADIUS * theta.sin())
}

pub fn render_svg(spec: &RenderSpec) -> String {
    let n = spec.polygon;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(
        s,
        r##"  <circle cx="{}" cy="{}" r="{RADIUS}" fill="none" stroke="#888" stroke-width="1.5"/>"##,
        SIZE / 2.0,
        SIZE / 2.0
    )
    .unwrap();

    match &spec.content {
        Some(Lifted::A(set)) => {
            for d in set.iter() {
                chord(&mut s, d.i(), d.j(), n, "#222", false);
            }
        }
        Some(Lifted::D(set)) => {
            for arc in set.iter() {
                match *arc {
                    ArcD::Pair { i, j, u } => {
                        chord(&mut s, i, norm(j, 2 * u), n, "#222", false);
                        chord(&mut s, norm(i + u, 2 * u), norm(j + u, 2 * u), n, "#222", false);
                    }
                    ArcD::Diameter { i, color, u } => {
                        let (stroke, dashed) = match color {
                            Color::Green => (GREEN, false),
                            Color::Red => (RED, true),
                        };
                        chord(&mut s, i, norm(i + u, 2 * u), n, stroke, dashed);
                    }
                }
            }
        }
        None => {}
    }

    for v in 1..=n {
        let (x, y) = vertex_xy(v, n);
        writeln!(
            s,
            r##"  <circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#000"/>"##
        )
        .unwrap();
        let lx = SIZE / 2.0 + (x - SIZE / 2.0) * 1.09;
        let ly = SIZE / 2.0 + (y - SIZE / 2.0) * 1.09;
        writeln!(
            s,
            r#"  <text x="{lx:.2}" y="{ly:.2}" font-size="16" text-anchor="middle" dominant-baseline="middle">{v}</text>"#
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

fn norm(v: u32, m: u32) -> u32 {
    ((v - 1) % m) + 1
}

fn chord(s: &mut String, a: u32, b: u32, polygon: u32, stroke: &str, dashed: bool) {
    let (x1, y1) = vertex_xy(a, polygon);
    let (x2, y2) = vertex_xy(b, polygon);
    let dash = if dashed { r#" stroke-dasharray="9,6""# } else { "" };
    writeln!(
        s,
        r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="2"{dash}/>"#
    )
    .unwrap();
}
