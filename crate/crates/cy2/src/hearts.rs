//! Cores of cotorsion pairs and the data determining their hearts.
//!
//! A torsion pair `(x, y)` has the associated cotorsion pair `(x, y[-1])`
//! with core `x ∩ y[-1]`. The heart of the cotorsion pair is equivalent to
//! the module category of the endomorphism algebra of the core's additive
//! generator, a rigid object; this module reports the core, its size, and
//! (family A) the Hom-dimension matrix of that endomorphism algebra. The
//! catalog note names the algebra only when one entry of the static catalog
//! is forced by the computed data.

use crate::bitset::IndecSet;
use crate::category::{CategoryTables, Family};
use crate::torsion::TorsionPairRecord;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HeartError {
    #[error("core is not rigid: Ext^1 does not vanish on {a} x {b}; shift convention broken upstream")]
    CoreNotRigid { a: String, b: String },
    #[error("record does not belong to this category")]
    ForeignRecord,
}

/// Core and heart data of one cotorsion pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HeartReport {
    pub core: Vec<usize>,
    pub num_simples: usize,
    /// Hom-dimension matrix of `End(I)` over the core summands; family A
    /// only.
    pub hom_matrix: Option<Vec<Vec<u32>>>,
    /// Total dimension of `End(I)`; family A only.
    pub algebra_dim: Option<u32>,
    pub catalog_note: String,
    pub t_structure: bool,
}

/// Quiver-with-relations descriptors for the hearts that occur.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct HeartCatalogEntry {
    pub family: &'static str,
    pub quiver: &'static str,
    pub relations: &'static str,
    pub k_range: &'static str,
}

/// The static catalog of heart algebras, by family.
pub fn heart_catalog() -> &'static [HeartCatalogEntry] {
    &[
        HeartCatalogEntry {
            family: "A(n,t)",
            quiver: "1 -> 2 -> ... -> k",
            relations: "none",
            k_range: "1 <= k <= n",
        },
        HeartCatalogEntry {
            family: "A(n,t)",
            quiver: "1 -> 2 -> ... -> k with loop alpha at k",
            relations: "alpha^2",
            k_range: "1 <= k <= n",
        },
        HeartCatalogEntry {
            family: "A(n,t)",
            quiver: "mutations of the two entries above",
            relations: "mutation class",
            k_range: "1 <= k <= n",
        },
        HeartCatalogEntry {
            family: "D(n,t)",
            quiver: "1 -> 2 -> ... -> k",
            relations: "none",
            k_range: "1 <= k <= n",
        },
        HeartCatalogEntry {
            family: "D(n,t)",
            quiver: "1 -> 2 -> ... -> k with loop alpha at k",
            relations: "alpha^2",
            k_range: "1 <= k <= n",
        },
        HeartCatalogEntry {
            family: "D(n,t)",
            quiver: "mutations of the two entries above",
            relations: "mutation class",
            k_range: "1 <= k <= n",
        },
        HeartCatalogEntry {
            family: "E7 orbit, square shift",
            quiver: "one vertex with loop alpha",
            relations: "alpha^3",
            k_range: "k = 1",
        },
        HeartCatalogEntry {
            family: "E7 orbit, fifth-power shift",
            quiver: "one vertex with loop alpha",
            relations: "alpha^2",
            k_range: "k = 1",
        },
        HeartCatalogEntry {
            family: "E7 orbit, fifth-power shift",
            quiver: "two vertices, loops alpha and gamma, arrow beta",
            relations: "beta alpha - gamma beta, alpha^2, gamma^2",
            k_range: "k = 2",
        },
    ]
}

/// Core, heart size, and (family A) the `End(I)` matrix for one record.
pub fn heart_report(
    record: &TorsionPairRecord,
    tables: &CategoryTables,
) -> Result<HeartReport, HeartError> {
    if record.x.universe() != tables.indec_count() {
        return Err(HeartError::ForeignRecord);
    }
    let core = record.x.intersection(&tables.shift(&record.y, -1));
    debug_assert_eq!(core, record.core);
    // The core of a cotorsion pair is rigid; anything else means the shift
    // convention broke upstream.
    let ids = core.ids();
    for &a in &ids {
        for &b in &ids {
            if tables.ext_nonzero(a, b) {
                return Err(HeartError::CoreNotRigid {
                    a: tables.indec(a).rep.label(),
                    b: tables.indec(b).rep.label(),
                });
            }
        }
    }
    let (hom_matrix, algebra_dim) = match tables.spec().family {
        Family::A => {
            let matrix: Vec<Vec<u32>> = ids
                .iter()
                .map(|&a| {
                    ids.iter()
                        .map(|&b| tables.hom_dim(a, b).expect("family A"))
                        .collect()
                })
                .collect();
            let dim = matrix.iter().flatten().sum::<u32>();
            (Some(matrix), Some(dim))
        }
        Family::D => (None, None),
    };
    let t_structure = ids.is_empty();
    let catalog_note = note_for(&ids, algebra_dim, t_structure);
    Ok(HeartReport {
        num_simples: ids.len(),
        core: ids,
        hom_matrix,
        algebra_dim,
        catalog_note,
        t_structure,
    })
}

/// A catalog entry is named only when the computed data forces it; a single
/// simple with total dimension 1 or 2 is decisive, anything larger is left
/// to the catalog.
fn note_for(core: &[usize], algebra_dim: Option<u32>, t_structure: bool) -> String {
    if t_structure {
        return "zero category (t-structure)".into();
    }
    match (core.len(), algebra_dim) {
        (1, Some(1)) => "field k (A1 quiver)".into(),
        (1, Some(2)) => "loop alpha with relation alpha^2 (k = 1)".into(),
        _ => "undetermined: see catalog".into(),
    }
}

/// Convenience: the core of the cotorsion pair associated with `(x, y)`.
pub fn core_of(tables: &CategoryTables, x: &IndecSet, y: &IndecSet) -> IndecSet {
    x.intersection(&tables.shift(y, -1))
}
