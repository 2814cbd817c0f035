//! Diagonals of a convex polygon: crossing, rotation, periodicity, and the
//! type-A Ptolemy condition with its closure operator.
//!
//! Vertices of the `N`-gon are labelled `1..=N` clockwise. A diagonal joins
//! two non-neighbouring vertices and is stored canonically as `(i, j)` with
//! `1 <= i < j <= N` and `2 <= j - i <= N - 2`. One application of the
//! rotation `tau` moves `(i, j)` to `(i - 1, j - 1)` modulo `N`; every sign
//! convention downstream hangs off this single choice.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("polygon must have at least 4 vertices, got {0}")]
    PolygonTooSmall(u32),
    #[error("({a}, {b}) is not a diagonal of the {ngon}-gon: {reason}")]
    InvalidDiagonal { a: i64, b: i64, ngon: u32, reason: String },
    #[error("period {k} does not divide the polygon size {ngon}")]
    PeriodMismatch { k: u32, ngon: u32 },
    #[error("diagonal ({i}, {j}) does not fit a {ngon}-gon")]
    ForeignDiagonal { i: u32, j: u32, ngon: u32 },
}

/// A chord of the `N`-gon joining two non-neighbouring vertices.
///
/// The pair is stored with `i < j`; construction normalises any mod-`N`
/// representative of either endpoint to this canonical form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Diagonal {
    i: u32,
    j: u32,
}

/// Map an arbitrary integer label to `1..=n`.
pub(crate) fn norm_vertex(v: i64, n: u32) -> u32 {
    let n = n as i64;
    (((v - 1).rem_euclid(n)) + 1) as u32
}

impl Diagonal {
    pub fn new(a: i64, b: i64, ngon: u32) -> Result<Self, GeometryError> {
        if ngon < 4 {
            return Err(GeometryError::PolygonTooSmall(ngon));
        }
        let x = norm_vertex(a, ngon);
        let y = norm_vertex(b, ngon);
        if x == y {
            return Err(GeometryError::InvalidDiagonal {
                a,
                b,
                ngon,
                reason: "endpoints coincide".into(),
            });
        }
        let (i, j) = if x < y { (x, y) } else { (y, x) };
        if j - i == 1 || j - i == ngon - 1 {
            return Err(GeometryError::InvalidDiagonal {
                a,
                b,
                ngon,
                reason: "endpoints are neighbouring vertices".into(),
            });
        }
        Ok(Diagonal { i, j })
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.i, self.j)
    }

    fn valid_for(&self, ngon: u32) -> bool {
        self.i >= 1 && self.j <= ngon && self.j - self.i >= 2 && self.j - self.i <= ngon - 2
    }
}

impl std::fmt::Debug for Diagonal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// True iff the endpoints of `a` and `b` are four distinct vertices that
/// interleave around the polygon. Symmetric, irreflexive.
pub fn cross(a: Diagonal, b: Diagonal, ngon: u32) -> bool {
    debug_assert!(a.valid_for(ngon) && b.valid_for(ngon));
    // In canonical form interleaving is a linear condition.
    (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j)
}

/// `k` applications of the rotation `tau`: both endpoints shift by `-k`
/// modulo `N`. Negative `k` rotates the other way.
pub fn rotate(a: Diagonal, k: i64, ngon: u32) -> Diagonal {
    Diagonal::new(a.i as i64 - k, a.j as i64 - k, ngon)
        .expect("rotation preserves diagonals")
}

/// A finite set of diagonals of one polygon.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagonalSet {
    ngon: u32,
    members: BTreeSet<Diagonal>,
}

impl DiagonalSet {
    pub fn new(ngon: u32) -> Result<Self, GeometryError> {
        if ngon < 4 {
            return Err(GeometryError::PolygonTooSmall(ngon));
        }
        Ok(DiagonalSet {
            ngon,
            members: BTreeSet::new(),
        })
    }

    pub fn from_diagonals<I>(ngon: u32, diags: I) -> Result<Self, GeometryError>
    where
        I: IntoIterator<Item = Diagonal>,
    {
        let mut set = Self::new(ngon)?;
        for d in diags {
            set.insert(d)?;
        }
        Ok(set)
    }

    /// Every diagonal of the polygon.
    pub fn all(ngon: u32) -> Result<Self, GeometryError> {
        let mut set = Self::new(ngon)?;
        for i in 1..=ngon {
            for j in i + 2..=ngon {
                if j - i <= ngon - 2 {
                    set.members.insert(Diagonal { i, j });
                }
            }
        }
        Ok(set)
    }

    pub fn ngon(&self) -> u32 {
        self.ngon
    }

    pub fn insert(&mut self, d: Diagonal) -> Result<(), GeometryError> {
        if !d.valid_for(self.ngon) {
            return Err(GeometryError::ForeignDiagonal {
                i: d.i,
                j: d.j,
                ngon: self.ngon,
            });
        }
        self.members.insert(d);
        Ok(())
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.members.contains(d)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Diagonal> {
        self.members.iter()
    }

    /// The defining condition: for every crossing pair in the set, each of
    /// the four connecting chords that is a diagonal must also be a member.
    pub fn is_ptolemy(&self) -> bool {
        let members: Vec<Diagonal> = self.members.iter().copied().collect();
        for (idx, &a) in members.iter().enumerate() {
            for &b in &members[idx + 1..] {
                if !cross(a, b, self.ngon) {
                    continue;
                }
                for d in connecting_diagonals(a, b, self.ngon) {
                    if !self.members.contains(&d) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Least fixed point of the Ptolemy condition containing `self`.
    /// Extensive, monotone, idempotent.
    pub fn ptolemy_closure(&self) -> DiagonalSet {
        let mut members: Vec<Diagonal> = self.members.iter().copied().collect();
        let mut present: BTreeSet<Diagonal> = self.members.clone();
        let mut next = 0;
        while next < members.len() {
            let a = members[next];
            next += 1;
            // Pair the newly processed diagonal against everything already
            // present, including entries queued after it.
            for k in 0..members.len() {
                let b = members[k];
                if b == a || !cross(a, b, self.ngon) {
                    continue;
                }
                for d in connecting_diagonals(a, b, self.ngon) {
                    if present.insert(d) {
                        members.push(d);
                    }
                }
            }
        }
        DiagonalSet {
            ngon: self.ngon,
            members: present,
        }
    }

    /// Invariance under rotation by `k` vertices. `k` must divide `N`.
    pub fn is_k_periodic(&self, k: u32) -> Result<bool, GeometryError> {
        if k == 0 || !self.ngon.is_multiple_of(k) {
            return Err(GeometryError::PeriodMismatch { k, ngon: self.ngon });
        }
        Ok(self
            .members
            .iter()
            .all(|&d| self.members.contains(&rotate(d, k as i64, self.ngon))))
    }

    /// First member whose rotate-by-`k` image is missing, if any.
    pub fn periodicity_violation(&self, k: u32) -> Option<Diagonal> {
        self.members
            .iter()
            .copied()
            .find(|&d| !self.members.contains(&rotate(d, k as i64, self.ngon)))
    }
}

/// The chords connecting the endpoints of a crossing pair, filtered down to
/// genuine diagonals (edges and repeated vertices drop out).
pub(crate) fn connecting_diagonals(a: Diagonal, b: Diagonal, ngon: u32) -> Vec<Diagonal> {
    let mut out = Vec::with_capacity(4);
    for &p in &[a.i, a.j] {
        for &q in &[b.i, b.j] {
            if let Ok(d) = Diagonal::new(p as i64, q as i64, ngon) {
                out.push(d);
            }
        }
    }
    out
}

impl Serialize for DiagonalSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = ser.serialize_struct("DiagonalSet", 2)?;
        s.serialize_field("ngon", &self.ngon)?;
        let diags: Vec<(u32, u32)> = self.members.iter().map(|d| (d.i, d.j)).collect();
        s.serialize_field("diagonals", &diags)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for DiagonalSet {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            ngon: u32,
            diagonals: Vec<(i64, i64)>,
        }
        let raw = Raw::deserialize(de)?;
        let mut set = DiagonalSet::new(raw.ngon).map_err(serde::de::Error::custom)?;
        for (a, b) in raw.diagonals {
            let d = Diagonal::new(a, b, raw.ngon).map_err(serde::de::Error::custom)?;
            set.insert(d).map_err(serde::de::Error::custom)?;
        }
        Ok(set)
    }
}
