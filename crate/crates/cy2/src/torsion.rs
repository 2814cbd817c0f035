//! Recognition, exhaustive enumeration and structural classification of
//! (co)torsion pairs in a built category.
//!
//! A subcategory `x` is a torsion half exactly when `x` equals the left perp
//! of its right perp; equivalently, its lift is a periodic Ptolemy diagram.
//! The enumerator walks the fixed points of the periodic Ptolemy closure by
//! a close-by-one search (each closed set is produced from a unique
//! canonical augmentation, so no deduplication pass is needed), then filters
//! by the perp condition. A `2^k` brute-force reference over all subsets is
//! kept alongside as the correctness oracle for small categories.

use crate::bitset::IndecSet;
use crate::category::{CategoryError, CategoryTables, CoverCell, Family, Lifted};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TorsionError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error("wing decomposition needs an all-rigid half, but {element} has level > n")]
    NonRigidMember { element: String },
    #[error("{indecs} indecomposables exceed the {limit}-indecomposable brute-force guard")]
    TooLargeForBruteForce { indecs: usize, limit: usize },
    #[error("wing decomposition disagrees with the enumeration: {reason}")]
    WingDiscrepancy { reason: String },
    #[error("the diameter classification only applies to family D with t = 1")]
    UnsupportedClassification,
    #[error("record does not belong to this category: {0}")]
    ForeignRecord(String),
}

/// How a `D(n,1)` torsion pair distributes its diameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum D1Class {
    /// `x` contains a paired (green + red) diameter; `y` is all rigid.
    PairedInX,
    /// `y` contains a paired diameter; `x` is all rigid.
    PairedInY,
    /// One non-paired diameter on each side, all other members rigid.
    SplitDiameters,
}

/// One wing of a decomposition: an apex of level at most `n` together with
/// the members of the half that its wing covers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Wing {
    pub apex: usize,
    pub members: IndecSet,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WingDecomposition {
    pub wings: Vec<Wing>,
}

/// A classified torsion pair `(x, y)` with `y = x^perp`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsionPairRecord {
    pub x: IndecSet,
    pub y: IndecSet,
    /// Core of the associated cotorsion pair `(x, y[-1])`.
    pub core: IndecSet,
    pub is_t_structure: bool,
    pub x_all_rigid: bool,
    pub y_all_rigid: bool,
    /// Family D, t = 1 only.
    pub d1_class: Option<D1Class>,
    /// Present exactly when `x` is all rigid.
    pub wings: Option<WingDecomposition>,
}

/// `x = perp(x^perp)`. For these categories this coincides with the lift
/// being a periodic Ptolemy diagram; the test suite checks the coincidence.
pub fn is_torsion_half(tables: &CategoryTables, x: &IndecSet) -> bool {
    let rp = tables.right_perp(x);
    tables.left_perp(&rp) == *x
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub workers: usize,
    pub brute_force: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            workers: 1,
            brute_force: false,
        }
    }
}

/// Complete, duplicate-free list of torsion pairs, sorted by the `x`
/// bitmask.
pub fn enumerate_torsion_pairs(
    tables: &CategoryTables,
) -> Result<Vec<TorsionPairRecord>, TorsionError> {
    enumerate_torsion_pairs_with(tables, EnumOptions::default())
}

pub fn enumerate_torsion_pairs_with(
    tables: &CategoryTables,
    opts: EnumOptions,
) -> Result<Vec<TorsionPairRecord>, TorsionError> {
    let halves = if opts.brute_force {
        brute_force_halves(tables)?
    } else {
        let mut halves: Vec<IndecSet> = closed_sets(tables, opts.workers.max(1))
            .into_iter()
            .filter(|x| is_torsion_half(tables, x))
            .collect();
        halves.sort();
        halves
    };
    halves
        .into_iter()
        .map(|x| record_for(tables, x))
        .collect()
}

/// The `2^k` reference path: every subset, tested directly.
pub fn brute_force_torsion_pairs(
    tables: &CategoryTables,
) -> Result<Vec<TorsionPairRecord>, TorsionError> {
    brute_force_halves(tables)?
        .into_iter()
        .map(|x| record_for(tables, x))
        .collect()
}

const BRUTE_FORCE_LIMIT: usize = 24;

fn brute_force_halves(tables: &CategoryTables) -> Result<Vec<IndecSet>, TorsionError> {
    let k = tables.indec_count();
    if k > BRUTE_FORCE_LIMIT {
        return Err(TorsionError::TooLargeForBruteForce {
            indecs: k,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << k) {
        let x = IndecSet::from_ids(k, (0..k).filter(|i| mask & (1 << i) != 0));
        if is_torsion_half(tables, &x) {
            out.push(x);
        }
    }
    Ok(out)
}

/// All fixed points of the periodic Ptolemy closure, via close-by-one: the
/// closure of `A + {j}` is accepted as a child of `A` exactly when it adds
/// nothing below `j`. Worker threads split the top-level branches; the
/// caller sorts, so the output is independent of the worker count.
fn closed_sets(tables: &CategoryTables, workers: usize) -> Vec<IndecSet> {
    let k = tables.indec_count();
    let root = tables.closure(&tables.empty_set());
    let mut out = vec![root.clone()];
    if k == 0 {
        return out;
    }
    if workers <= 1 {
        cbo_branch(tables, &root, 0..k, &mut out);
        return out;
    }
    let chunks: Vec<Vec<usize>> = (0..workers)
        .map(|w| (0..k).filter(|j| j % workers == w).collect())
        .collect();
    let results: Vec<Vec<IndecSet>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let root = root.clone();
                scope.spawn(move || {
                    let mut local = Vec::new();
                    for &j in chunk {
                        cbo_child(tables, &root, j, &mut local);
                    }
                    local
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for r in results {
        out.extend(r);
    }
    out
}

fn cbo_branch(
    tables: &CategoryTables,
    a: &IndecSet,
    range: std::ops::Range<usize>,
    out: &mut Vec<IndecSet>,
) {
    for j in range {
        cbo_child(tables, a, j, out);
    }
}

fn cbo_child(tables: &CategoryTables, a: &IndecSet, j: usize, out: &mut Vec<IndecSet>) {
    if a.contains(j) {
        return;
    }
    let mut cand = a.clone();
    cand.insert(j);
    let b = tables.closure(&cand);
    if b.below(j) == a.below(j) {
        out.push(b.clone());
        cbo_branch(tables, &b, j + 1..tables.indec_count(), out);
    }
}

fn record_for(tables: &CategoryTables, x: IndecSet) -> Result<TorsionPairRecord, TorsionError> {
    let y = tables.right_perp(&x);
    let core = x.intersection(&tables.shift(&y, -1));
    let rigid = tables.rigid_set();
    let x_all_rigid = x.is_subset(&rigid);
    let y_all_rigid = y.is_subset(&rigid);
    let wings = if x_all_rigid {
        Some(wing_decomposition(tables, &x)?)
    } else {
        None
    };
    let mut record = TorsionPairRecord {
        is_t_structure: core.is_empty(),
        x,
        y,
        core,
        x_all_rigid,
        y_all_rigid,
        d1_class: None,
        wings,
    };
    if tables.spec().family == Family::D && tables.spec().t == 1 {
        record.d1_class = Some(classify_d1(tables, &record)?);
    }
    Ok(record)
}

/// A chord with its clockwise window `(start, start + len)` on the polygon.
#[derive(Clone, Copy, Debug)]
struct Interval {
    start: u32,
    len: u32,
    cell: usize,
}

/// Window containment: `a` sits inside `b` when `a`'s window, read from
/// `b`'s start, ends no later than `b`'s.
fn inside(a: &Interval, b: &Interval, polygon: u32) -> bool {
    (a.start + polygon - b.start) % polygon + a.len <= b.len
}

/// The unique minimal family of apex wings covering an all-rigid half.
///
/// Members are lifted to concrete chords, grouped under the maximal chords
/// of the lift, and each group projects to one `(apex, members)` entry per
/// apex orbit. Any violation of the expected structure is reported as a
/// discrepancy instead of being patched over.
pub fn wing_decomposition(
    tables: &CategoryTables,
    x: &IndecSet,
) -> Result<WingDecomposition, TorsionError> {
    let spec = tables.spec();
    let polygon = spec.polygon();
    for id in x.iter() {
        let indec = tables.indec(id);
        if !indec.rigid {
            return Err(TorsionError::NonRigidMember {
                element: indec.rep.label(),
            });
        }
    }
    if x.is_empty() {
        return Ok(WingDecomposition::default());
    }

    // Concrete short chords of the lift; type-D pairs contribute both arcs.
    let mut intervals: Vec<Interval> = Vec::new();
    for id in x.iter() {
        for chord in indec_chords(tables, id) {
            intervals.push(chord);
        }
    }

    // Maximal chords under window containment become the apex candidates.
    let strictly_inside = |a: &Interval, b: &Interval| -> bool {
        !(a.start == b.start && a.len == b.len) && inside(a, b, polygon)
    };
    let maximal: Vec<Interval> = intervals
        .iter()
        .filter(|a| !intervals.iter().any(|b| strictly_inside(a, b)))
        .copied()
        .collect();

    // Each chord must sit under exactly one maximal chord.
    let mut blocks: Vec<(Interval, Vec<usize>)> =
        maximal.iter().map(|&m| (m, Vec::new())).collect();
    for iv in &intervals {
        let mut owners = blocks
            .iter_mut()
            .filter(|(m, _)| inside(iv, m, polygon))
            .collect::<Vec<_>>();
        if owners.len() != 1 {
            return Err(TorsionError::WingDiscrepancy {
                reason: format!(
                    "chord starting at {} lies under {} maximal chords",
                    iv.start,
                    owners.len()
                ),
            });
        }
        owners[0].1.push(iv.cell);
    }

    // Project blocks to apex orbits; all blocks of one orbit must agree.
    let mut by_apex: Vec<(usize, IndecSet)> = Vec::new();
    for (m, cells) in &blocks {
        let apex = tables.orbit_of_cell(m.cell);
        let members = IndecSet::from_ids(
            tables.indec_count(),
            cells.iter().map(|&c| tables.orbit_of_cell(c)),
        );
        match by_apex.iter().find(|(a, _)| *a == apex) {
            Some((_, existing)) if *existing != members => {
                return Err(TorsionError::WingDiscrepancy {
                    reason: format!(
                        "blocks of apex {} project to different member sets",
                        tables.indec(apex).rep.label()
                    ),
                });
            }
            Some(_) => {}
            None => by_apex.push((apex, members)),
        }
    }
    by_apex.sort_by_key(|(a, _)| *a);

    let decomposition = WingDecomposition {
        wings: by_apex
            .into_iter()
            .map(|(apex, members)| Wing { apex, members })
            .collect(),
    };
    validate_wings(tables, x, &decomposition)?;
    Ok(decomposition)
}

/// Separation and coverage checks for a computed decomposition.
fn validate_wings(
    tables: &CategoryTables,
    x: &IndecSet,
    dec: &WingDecomposition,
) -> Result<(), TorsionError> {
    let mut union = tables.empty_set();
    for w in &dec.wings {
        let full = full_wing(tables, w.apex);
        if !w.members.is_subset(&full) {
            return Err(TorsionError::WingDiscrepancy {
                reason: format!(
                    "members escape the wing of {}",
                    tables.indec(w.apex).rep.label()
                ),
            });
        }
        if !tables.is_closed(&w.members) {
            return Err(TorsionError::WingDiscrepancy {
                reason: format!(
                    "the wing members of {} do not lift to a Ptolemy diagram",
                    tables.indec(w.apex).rep.label()
                ),
            });
        }
        union.union_with(&w.members);
    }
    if union != *x {
        return Err(TorsionError::WingDiscrepancy {
            reason: "wings do not cover the half exactly".into(),
        });
    }
    for a in &dec.wings {
        for b in &dec.wings {
            if a.apex == b.apex {
                continue;
            }
            let shifted = tables.shift(&full_wing(tables, a.apex), 1);
            if !shifted.intersection(&full_wing(tables, b.apex)).is_empty() {
                return Err(TorsionError::WingDiscrepancy {
                    reason: format!(
                        "wings of {} and {} violate the separation condition",
                        tables.indec(a.apex).rep.label(),
                        tables.indec(b.apex).rep.label()
                    ),
                });
            }
        }
    }
    Ok(())
}

/// Every indecomposable with a concrete chord overarched by the apex
/// representative.
pub fn full_wing(tables: &CategoryTables, apex: usize) -> IndecSet {
    let polygon = tables.spec().polygon();
    let apex_chords = indec_chords(tables, apex);
    let window = apex_chords[0];
    let mut out = tables.empty_set();
    for id in 0..tables.indec_count() {
        if indec_chords(tables, id)
            .iter()
            .any(|chord| inside(chord, &window, polygon))
        {
            out.insert(id);
        }
    }
    out
}

/// The short concrete chords of every orbit member of one indecomposable.
fn indec_chords(tables: &CategoryTables, id: usize) -> Vec<Interval> {
    let polygon = tables.spec().polygon();
    let mut out = Vec::new();
    for &cell_idx in &tables.indec(id).members {
        match tables.cell(cell_idx) {
            CoverCell::Diag(d) => {
                let (i, j) = d.endpoints();
                let fwd = j - i;
                let (start, len) = if fwd <= polygon - fwd {
                    (i, fwd)
                } else {
                    (j, polygon - fwd)
                };
                out.push(Interval {
                    start,
                    len,
                    cell: cell_idx,
                });
            }
            CoverCell::Arc(arc) => {
                for e in arc.elems() {
                    if let crate::geometry_d::Elem::Arc { a, b } = e {
                        let fwd = (b + polygon - a) % polygon;
                        let (start, len) = if fwd <= polygon - fwd {
                            (a, fwd)
                        } else {
                            (b, polygon - fwd)
                        };
                        out.push(Interval {
                            start,
                            len,
                            cell: cell_idx,
                        });
                    }
                    // Diameters carry no wing data; they are never rigid.
                }
            }
        }
    }
    out
}

/// The `D(n,1)` dichotomy: paired diameters on one side with the other side
/// all rigid, or one non-paired diameter on each side.
pub fn classify_d1(
    tables: &CategoryTables,
    record: &TorsionPairRecord,
) -> Result<D1Class, TorsionError> {
    let spec = tables.spec();
    if spec.family != Family::D || spec.t != 1 {
        return Err(TorsionError::UnsupportedClassification);
    }
    let u = spec.polygon() / 2;
    let paired = |s: &IndecSet| -> bool {
        if let Lifted::D(lift) = tables.lift(s) {
            (1..=u).any(|i| {
                let g = crate::geometry_d::ArcD::diameter(i as i64, crate::geometry_d::Color::Green, u).unwrap();
                let r = crate::geometry_d::ArcD::diameter(i as i64, crate::geometry_d::Color::Red, u).unwrap();
                lift.contains(&g) && lift.contains(&r)
            })
        } else {
            unreachable!("family D lift")
        }
    };
    let diameter_classes = |s: &IndecSet| -> usize {
        s.iter()
            .filter(|&id| tables.indec(id).rep_is_diameter())
            .count()
    };
    let x_paired = paired(&record.x);
    let y_paired = paired(&record.y);
    assert!(
        !(x_paired && y_paired),
        "paired diameters on both sides contradict Hom-vanishing"
    );
    if x_paired {
        assert!(record.y_all_rigid, "paired side forces an all-rigid perp");
        Ok(D1Class::PairedInX)
    } else if y_paired {
        assert!(record.x_all_rigid, "paired side forces an all-rigid perp");
        Ok(D1Class::PairedInY)
    } else {
        assert_eq!(diameter_classes(&record.x), 1, "split case has one diameter in x");
        assert_eq!(diameter_classes(&record.y), 1, "split case has one diameter in y");
        for id in record.x.iter().chain(record.y.iter()) {
            let indec = tables.indec(id);
            assert!(
                indec.rigid || indec.rep_is_diameter(),
                "split case allows only rigid objects besides the diameters"
            );
        }
        Ok(D1Class::SplitDiameters)
    }
}

/// All enumerated pairs with empty core. For a connected finite 2-CY
/// category these are exactly `(C, 0)` and `(0, C)`; the caller checks the
/// count, this only collects.
pub fn check_t_structures(
    tables: &CategoryTables,
    records: &[TorsionPairRecord],
) -> Vec<TorsionPairRecord> {
    records
        .iter()
        .filter(|r| {
            debug_assert_eq!(r.x.universe(), tables.indec_count());
            r.is_t_structure
        })
        .cloned()
        .collect()
}

/// Wire form of a record: indecomposable ids plus flags.
#[derive(Clone, PartialEq, Serialize, Deserialize, Debug)]
pub struct RecordJson {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub core: Vec<usize>,
    pub t_structure: bool,
    pub wings: Option<Vec<WingJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d1_class: Option<D1Class>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heart: Option<serde_json::Value>,
}

#[derive(Clone, PartialEq, Serialize, Deserialize, Debug)]
pub struct WingJson {
    pub apex: usize,
    pub members: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{build, CategorySpec};
    use crate::geometry_a::Diagonal;
    use crate::geometry_d::{ArcD, Color};

    fn tables(family: Family, n: u32, t: u32) -> CategoryTables {
        build(CategorySpec::new(family, n, t).unwrap())
    }

    fn a_ids(tb: &CategoryTables, pairs: &[(i64, i64)]) -> IndecSet {
        let ngon = tb.spec().polygon();
        IndecSet::from_ids(
            tb.indec_count(),
            pairs.iter().map(|&(i, j)| {
                tb.indec_of_diagonal(Diagonal::new(i, j, ngon).unwrap()).unwrap()
            }),
        )
    }

    enum E {
        P(i64, i64),
        D(i64, Color),
    }

    fn d_ids(tb: &CategoryTables, elems: &[E]) -> IndecSet {
        let u = tb.spec().polygon() / 2;
        IndecSet::from_ids(
            tb.indec_count(),
            elems.iter().map(|e| match e {
                E::P(a, b) => tb.indec_of_arc(ArcD::pair(*a, *b, u).unwrap()).unwrap(),
                E::D(i, c) => tb.indec_of_arc(ArcD::diameter(*i, *c, u).unwrap()).unwrap(),
            }),
        )
    }

    #[test]
    fn torsion_half_examples() {
        let tb = tables(Family::A, 2, 2);
        assert!(is_torsion_half(&tb, &tb.empty_set()));
        assert!(is_torsion_half(&tb, &a_ids(&tb, &[(1, 3)])));
        assert!(!is_torsion_half(&tb, &a_ids(&tb, &[(1, 3), (2, 4)])));
    }

    #[test]
    fn torsion_half_matches_geometry() {
        // The perp condition coincides with the lift being Ptolemy:
        // exhaustively for the two smallest categories, sampled for the
        // larger ones.
        for tb in [tables(Family::A, 1, 2), tables(Family::D, 1, 1)] {
            let k = tb.indec_count();
            for mask in 0u64..(1 << k) {
                let x = IndecSet::from_ids(k, (0..k).filter(|i| mask & (1 << i) != 0));
                let geometric = match tb.lift(&x) {
                    Lifted::A(set) => set.is_ptolemy(),
                    Lifted::D(set) => set.is_ptolemy_d(),
                };
                assert_eq!(is_torsion_half(&tb, &x), geometric, "{x:?}");
            }
        }
        for tb in [tables(Family::A, 2, 2), tables(Family::D, 1, 2)] {
            let k = tb.indec_count();
            let mut seed = 0x8f3c_a9d1_7b42_e015u64;
            for _ in 0..500 {
                seed ^= seed << 13;
                seed ^= seed >> 7;
                seed ^= seed << 17;
                let x = IndecSet::from_ids(k, (0..k).filter(|i| seed & (1 << (i % 64)) != 0));
                let geometric = match tb.lift(&x) {
                    Lifted::A(set) => set.is_ptolemy(),
                    Lifted::D(set) => set.is_ptolemy_d(),
                };
                assert_eq!(is_torsion_half(&tb, &x), geometric, "{x:?}");
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        for (family, n, t, expected) in [
            (Family::A, 2, 2, 32usize),
            (Family::A, 2, 1, 20),
            (Family::D, 1, 1, 10),
            (Family::D, 1, 2, 6),
        ] {
            let tb = tables(family, n, t);
            let records = enumerate_torsion_pairs(&tb).unwrap();
            assert_eq!(records.len(), expected, "{family:?}({n},{t})");
            // Sorted by the x bitmask, no duplicates.
            for w in records.windows(2) {
                assert!(w[0].x < w[1].x);
            }
        }
    }

    #[test]
    fn enumeration_equals_brute_force() {
        for (family, n, t) in [(Family::A, 1, 2), (Family::A, 2, 1), (Family::D, 1, 1)] {
            let tb = tables(family, n, t);
            let fast = enumerate_torsion_pairs(&tb).unwrap();
            let brute = brute_force_torsion_pairs(&tb).unwrap();
            assert_eq!(fast.len(), brute.len());
            for (a, b) in fast.iter().zip(&brute) {
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn workers_do_not_change_the_list() {
        let tb = tables(Family::A, 2, 2);
        let one = enumerate_torsion_pairs(&tb).unwrap();
        for workers in [2usize, 3, 7] {
            let many = enumerate_torsion_pairs_with(
                &tb,
                EnumOptions {
                    workers,
                    brute_force: false,
                },
            )
            .unwrap();
            assert_eq!(one, many, "workers = {workers}");
        }
    }

    #[test]
    fn a21_fixture_perps() {
        let tb = tables(Family::A, 2, 1);
        let rows: &[(&[(i64, i64)], &[(i64, i64)])] = &[
            (&[(1, 3)], &[(1, 3), (1, 4), (1, 6), (3, 6)]),
            (&[(2, 4)], &[(1, 4), (1, 5), (2, 4), (2, 5)]),
            (&[(3, 5)], &[(2, 5), (2, 6), (3, 5), (3, 6)]),
            (&[(1, 4)], &[(1, 3), (1, 4), (2, 4)]),
            (&[(2, 5)], &[(2, 4), (2, 5), (3, 5)]),
            (&[(3, 6)], &[(1, 3), (3, 5), (3, 6)]),
        ];
        for (x_coords, perp_coords) in rows {
            let x = a_ids(&tb, x_coords);
            assert!(is_torsion_half(&tb, &x), "{x_coords:?}");
            let got = tb.shift(&tb.right_perp(&x), -1);
            assert_eq!(got, a_ids(&tb, perp_coords), "{x_coords:?}");
        }

        // Self-perpendicular halves of the t = 1 category.
        for y in [
            a_ids(&tb, &[(1, 3), (1, 4)]),
            a_ids(&tb, &[(2, 4), (2, 5)]),
            a_ids(&tb, &[(3, 5), (3, 6)]),
            a_ids(&tb, &[(1, 4), (2, 4)]),
            a_ids(&tb, &[(2, 5), (3, 5)]),
            a_ids(&tb, &[(1, 3), (3, 6)]),
        ] {
            assert!(is_torsion_half(&tb, &y));
            assert_eq!(tb.shift(&tb.right_perp(&y), -1), y);
        }
    }

    #[test]
    fn d12_fixture_perps() {
        let tb = tables(Family::D, 1, 2);
        let x2 = d_ids(&tb, &[E::P(1, 3)]);
        let got = tb.shift(&tb.right_perp(&x2), -1);
        let want = d_ids(
            &tb,
            &[
                E::P(1, 3),
                E::P(1, 5),
                E::P(1, 7),
                E::D(1, Color::Green),
                E::D(1, Color::Red),
            ],
        );
        assert_eq!(got, want);

        let x3 = d_ids(&tb, &[E::P(2, 4)]);
        let got = tb.shift(&tb.right_perp(&x3), -1);
        let want = d_ids(
            &tb,
            &[
                E::P(2, 4),
                E::P(2, 6),
                E::P(2, 8),
                E::D(2, Color::Green),
                E::D(2, Color::Red),
            ],
        );
        assert_eq!(got, want);

        // Only the halves described by the rigid-side classification exist:
        // 6 = the t > 1 count, with exactly two trivial t-structures.
        let records = enumerate_torsion_pairs(&tb).unwrap();
        assert_eq!(records.len(), 6);
        let halves: Vec<&IndecSet> = records.iter().map(|r| &r.x).collect();
        assert!(halves.contains(&&x2));
        assert!(halves.contains(&&x3));
    }

    #[test]
    fn wing_examples() {
        let tb = tables(Family::A, 2, 2);
        let x14 = a_ids(&tb, &[(1, 3), (1, 4), (2, 4)]);
        let dec = wing_decomposition(&tb, &x14).unwrap();
        assert_eq!(dec.wings.len(), 1);
        assert_eq!(dec.wings[0].apex, a_ids(&tb, &[(1, 4)]).ids()[0]);
        assert_eq!(dec.wings[0].members, x14);

        let x2 = a_ids(&tb, &[(1, 3)]);
        let dec = wing_decomposition(&tb, &x2).unwrap();
        assert_eq!(dec.wings.len(), 1);
        assert_eq!(dec.wings[0].apex, a_ids(&tb, &[(1, 3)]).ids()[0]);

        assert!(wing_decomposition(&tb, &tb.empty_set()).unwrap().wings.is_empty());

        // A non-rigid member is refused by name.
        let bad = a_ids(&tb, &[(1, 5)]);
        match wing_decomposition(&tb, &bad) {
            Err(TorsionError::NonRigidMember { element }) => assert_eq!(element, "(1,5)"),
            other => panic!("expected a non-rigid error, got {other:?}"),
        }
    }

    #[test]
    fn multi_apex_wings() {
        // A(3,2): the 20-gon with period 4. The classes of (1,3) and (3,5)
        // are distinct, non-crossing, and separated, so the half they span
        // decomposes into two singleton wings.
        let tb = tables(Family::A, 3, 2);
        let x = a_ids(&tb, &[(1, 3), (3, 5)]);
        assert!(is_torsion_half(&tb, &x));
        let dec = wing_decomposition(&tb, &x).unwrap();
        assert_eq!(dec.wings.len(), 2);
        let apexes: Vec<usize> = dec.wings.iter().map(|w| w.apex).collect();
        assert!(apexes.contains(&a_ids(&tb, &[(1, 3)]).ids()[0]));
        assert!(apexes.contains(&a_ids(&tb, &[(3, 5)]).ids()[0]));
        for w in &dec.wings {
            assert_eq!(w.members.count(), 1);
        }
    }

    #[test]
    fn classify_d1_examples() {
        let tb = tables(Family::D, 1, 1);
        let records = enumerate_torsion_pairs(&tb).unwrap();
        let by_x = |x: &IndecSet| records.iter().find(|r| r.x == *x).unwrap();

        // One non-paired diameter on each side.
        let x4 = d_ids(&tb, &[E::P(1, 3), E::D(1, Color::Green)]);
        assert_eq!(by_x(&x4).d1_class, Some(D1Class::SplitDiameters));

        // All-rigid side: the paired diameters sit in the perp.
        let x2 = d_ids(&tb, &[E::P(1, 3)]);
        assert_eq!(by_x(&x2).d1_class, Some(D1Class::PairedInY));

        // (C, 0) carries its paired diameters on the x side.
        assert_eq!(by_x(&tb.full_set()).d1_class, Some(D1Class::PairedInX));

        // Exactly one case holds for every record.
        for r in &records {
            assert!(r.d1_class.is_some());
        }

        // Unsupported outside D with t = 1.
        let a22 = tables(Family::A, 2, 2);
        let rec = enumerate_torsion_pairs(&a22).unwrap().remove(0);
        assert!(matches!(
            classify_d1(&a22, &rec),
            Err(TorsionError::UnsupportedClassification)
        ));
    }

    #[test]
    fn t_structures_are_trivial() {
        for (family, n, t) in [
            (Family::A, 2, 2),
            (Family::A, 1, 1),
            (Family::D, 1, 2),
        ] {
            let tb = tables(family, n, t);
            let records = enumerate_torsion_pairs(&tb).unwrap();
            let trivial = check_t_structures(&tb, &records);
            assert_eq!(trivial.len(), 2, "{family:?}({n},{t})");
            let xs: Vec<IndecSet> = trivial.iter().map(|r| r.x.clone()).collect();
            assert!(xs.contains(&tb.empty_set()));
            assert!(xs.contains(&tb.full_set()));
        }
    }

    #[test]
    fn record_json_roundtrip() {
        let tb = tables(Family::D, 1, 1);
        let records = enumerate_torsion_pairs(&tb).unwrap();
        let text = serde_json::to_string(
            &records.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        )
        .unwrap();
        let parsed: Vec<RecordJson> = serde_json::from_str(&text).unwrap();
        let restored: Vec<TorsionPairRecord> = parsed
            .iter()
            .map(|j| TorsionPairRecord::from_json(&tb, j).unwrap())
            .collect();
        assert_eq!(records, restored);
    }

    #[test]
    fn brute_force_guard() {
        let tb = tables(Family::A, 3, 3); // 7 * 4 = 28-gon, 50 indecs exceed the guard
        assert!(matches!(
            brute_force_torsion_pairs(&tb),
            Err(TorsionError::TooLargeForBruteForce { .. })
        ));
    }
}

impl TorsionPairRecord {
    pub fn to_json(&self) -> RecordJson {
        RecordJson {
            x: self.x.ids(),
            y: self.y.ids(),
            core: self.core.ids(),
            t_structure: self.is_t_structure,
            wings: self.wings.as_ref().map(|d| {
                d.wings
                    .iter()
                    .map(|w| WingJson {
                        apex: w.apex,
                        members: w.members.ids(),
                    })
                    .collect()
            }),
            d1_class: self.d1_class,
            heart: None,
        }
    }

    pub fn from_json(tables: &CategoryTables, json: &RecordJson) -> Result<Self, TorsionError> {
        let k = tables.indec_count();
        let check = |ids: &[usize]| -> Result<IndecSet, TorsionError> {
            for &id in ids {
                if id >= k {
                    return Err(TorsionError::ForeignRecord(format!(
                        "indecomposable id {id} out of range"
                    )));
                }
            }
            Ok(IndecSet::from_ids(k, ids.iter().copied()))
        };
        Ok(TorsionPairRecord {
            x: check(&json.x)?,
            y: check(&json.y)?,
            core: check(&json.core)?,
            is_t_structure: json.t_structure,
            x_all_rigid: check(&json.x)?.is_subset(&tables.rigid_set()),
            y_all_rigid: check(&json.y)?.is_subset(&tables.rigid_set()),
            d1_class: json.d1_class,
            wings: match &json.wings {
                None => None,
                Some(ws) => Some(WingDecomposition {
                    wings: ws
                        .iter()
                        .map(|w| {
                            Ok(Wing {
                                apex: w.apex,
                                members: check(&w.members)?,
                            })
                        })
                        .collect::<Result<Vec<_>, TorsionError>>()?,
                }),
            },
        })
    }
}
