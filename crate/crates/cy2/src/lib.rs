//! Combinatorial models of the finite 2-Calabi-Yau triangulated categories
//! `A(n,t)` and `D(n,t)`, with exhaustive enumeration and classification of
//! their (co)torsion pairs.
//!
//! The categories are realised as polygon models: type A by the diagonals of
//! an `N`-gon with `N = (2t+1)(n+1)` modulo rotation by `n + 1` vertices,
//! type D by 180-degree-symmetric arc pairs and green/red diameters of a
//! `2u`-gon with `u = 2t(n+1)` modulo the glide symmetry
//! `F = tau^{n+1} phi^n`. Torsion pairs correspond to periodic Ptolemy
//! diagrams, which this crate enumerates as the fixed points of a closure
//! operator and cross-checks against closed-form counts and a brute-force
//! reference.
//!
//! Modules:
//!
//! - [`geometry_a`] — polygon diagonals, crossing, rotation, the type-A
//!   Ptolemy condition and its closure operator.
//! - [`geometry_d`] — the type-D arc model with colored diameters and the
//!   three-clause Ptolemy condition.
//! - [`category`] — builds the orbit-category tables: indecomposables,
//!   shift, Ext/Hom non-vanishing, Hom dimensions, perpendiculars.
//! - [`torsion`] — recognition, enumeration and structural classification of
//!   torsion pairs (wing decompositions, the `D(n,1)` diameter dichotomy,
//!   t-structure detection).
//! - [`counting`] — exact closed-form counts and independent brute-force
//!   cross-checks, in big-integer arithmetic.
//! - [`hearts`] — cores of cotorsion pairs and the data determining their
//!   hearts.
//! - [`render`] — static SVG pictures of (periodic) Ptolemy diagrams.
//! - [`acceptance`] — the deterministic verification grid behind
//!   `cy2 verify`.
//!
//! The `cy2` binary exposes the same functionality as subcommands; see the
//! `examples/` directory for one runnable example per capability.

pub mod acceptance;
pub mod bitset;
pub mod category;
pub mod counting;
pub mod geometry_a;
pub mod geometry_d;
pub mod hearts;
pub mod render;
pub mod torsion;

pub use bitset::IndecSet;
pub use category::{build, CategorySpec, CategoryTables, Family};
