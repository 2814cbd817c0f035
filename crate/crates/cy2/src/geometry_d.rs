//! The type-D model on a 2u-gon: 180-degree-symmetric arc pairs, green/red
//! diameters, the three-clause Ptolemy conditions, and the tau/phi/F actions
//! with colour bookkeeping.
//!
//! Vertices of the 2u-gon are labelled `1..=2u` clockwise, and rotation
//! follows the same convention as the type-A model: one application of `tau`
//! sends vertex `v` to `v - 1`. On diameters `tau` additionally flips the
//! colour, while `phi` flips the colour and fixes everything else. The
//! composite `F = tau^{n+1} phi^n` therefore rotates by `n + 1` and flips a
//! diameter's colour exactly when applied an odd number of times.
//!
//! An [`ArcD`] pair value stands for both arcs `{i,j}` and `{i+u, j+u}` at
//! once; crossing and closure expand to the concrete arcs internally.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryDError {
    #[error("half-polygon parameter u must be at least 2, got {0}")]
    PolygonTooSmall(u32),
    #[error("({a}, {b}) is not an arc of the {two_u}-gon: {reason}")]
    InvalidArc { a: i64, b: i64, two_u: u32, reason: String },
    #[error("ambient mismatch: one value lives in a {0}-gon, the other in a {1}-gon")]
    AmbientMismatch(u32, u32),
    #[error("arc collection in a {two_u}-gon does not fit the orbit parameters n={n}, t={t}")]
    ParameterMismatch { two_u: u32, n: u32, t: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "g")]
    Green,
    #[serde(rename = "r")]
    Red,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::Green => Color::Red,
            Color::Red => Color::Green,
        }
    }
}

/// An indecomposable of the type-D polygon model: either the pair of arcs
/// `{{i,j}, {i+u,j+u}}` (stored once, canonically with `1 <= i <= u` and
/// `j - i` in `2..=u-1`), or a coloured diameter `{i, i+u}` with `1 <= i <= u`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ArcD {
    Pair { i: u32, j: u32, u: u32 },
    Diameter { i: u32, color: Color, u: u32 },
}

fn norm(v: i64, m: u32) -> u32 {
    let m = m as i64;
    (((v - 1).rem_euclid(m)) + 1) as u32
}

impl ArcD {
    /// The pair of arcs through `{a, b}` (taken modulo 2u) and its
    /// 180-degree rotation.
    pub fn pair(a: i64, b: i64, u: u32) -> Result<Self, GeometryDError> {
        if u < 2 {
            return Err(GeometryDError::PolygonTooSmall(u));
        }
        let two_u = 2 * u;
        let x = norm(a, two_u);
        let y = norm(b, two_u);
        if x == y {
            return Err(GeometryDError::InvalidArc {
                a,
                b,
                two_u,
                reason: "endpoints coincide".into(),
            });
        }
        let d = (y + two_u - x) % two_u;
        if d == 1 || d == two_u - 1 {
            return Err(GeometryDError::InvalidArc {
                a,
                b,
                two_u,
                reason: "endpoints are neighbouring vertices".into(),
            });
        }
        if d == u {
            return Err(GeometryDError::InvalidArc {
                a,
                b,
                two_u,
                reason: "opposite vertices form a diameter; give it a colour".into(),
            });
        }
        // Orient so the clockwise span is shorter than u, then shift the
        // start into 1..=u: of the four writings of the pair this is unique.
        let (mut start, span) = if d < u { (x, d) } else { (y, two_u - d) };
        if start > u {
            start -= u;
        }
        Ok(ArcD::Pair {
            i: start,
            j: start + span,
            u,
        })
    }

    pub fn diameter(i: i64, color: Color, u: u32) -> Result<Self, GeometryDError> {
        if u < 2 {
            return Err(GeometryDError::PolygonTooSmall(u));
        }
        let mut pos = norm(i, 2 * u);
        if pos > u {
            pos -= u;
        }
        Ok(ArcD::Diameter { i: pos, color, u })
    }

    pub fn half_polygon(&self) -> u32 {
        match *self {
            ArcD::Pair { u, .. } | ArcD::Diameter { u, .. } => u,
        }
    }

    pub fn is_diameter(&self) -> bool {
        matches!(self, ArcD::Diameter { .. })
    }

    /// `j - i` of the canonical writing; `u` for diameters.
    pub fn length(&self) -> u32 {
        match *self {
            ArcD::Pair { i, j, .. } => j - i,
            ArcD::Diameter { u, .. } => u,
        }
    }

    /// `j - i - 1` of the canonical writing; `u - 1` for diameters.
    pub fn level(&self) -> u32 {
        self.length() - 1
    }

    /// The concrete arcs this value stands for.
    pub(crate) fn elems(&self) -> Vec<Elem> {
        match *self {
            ArcD::Pair { i, j, u } => {
                let two_u = 2 * u;
                vec![
                    Elem::arc(i, j, two_u),
                    Elem::arc(norm(i as i64 + u as i64, two_u), norm(j as i64 + u as i64, two_u), two_u),
                ]
            }
            ArcD::Diameter { i, color, .. } => vec![Elem::Diam { i, color }],
        }
    }
}

/// One application of `tau`: rotate by one vertex; diameters also change
/// colour.
pub fn tau_d(a: ArcD) -> ArcD {
    match a {
        ArcD::Pair { i, j, u } => ArcD::pair(i as i64 - 1, j as i64 - 1, u).unwrap(),
        ArcD::Diameter { i, color, u } => {
            ArcD::diameter(i as i64 - 1, color.flipped(), u).unwrap()
        }
    }
}

/// `phi`: flips a diameter's colour; identity on arc pairs.
pub fn phi_d(a: ArcD) -> ArcD {
    match a {
        ArcD::Pair { .. } => a,
        ArcD::Diameter { i, color, u } => ArcD::Diameter {
            i,
            color: color.flipped(),
            u,
        },
    }
}

/// `F^r` where `F = tau^{n+1} phi^n`: rotation by `r (n+1)`, with the colour
/// of a diameter flipped exactly when `r` is odd.
pub fn f_d(a: ArcD, n: u32, r: i64) -> ArcD {
    let step = r * (n as i64 + 1);
    match a {
        ArcD::Pair { i, j, u } => ArcD::pair(i as i64 - step, j as i64 - step, u).unwrap(),
        ArcD::Diameter { i, color, u } => {
            let c = if r.rem_euclid(2) == 1 { color.flipped() } else { color };
            ArcD::diameter(i as i64 - step, c, u).unwrap()
        }
    }
}

/// Concrete element on the 2u-gon: a single arc or a coloured diameter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) enum Elem {
    Arc { a: u32, b: u32 },
    Diam { i: u32, color: Color },
}

impl Elem {
    pub(crate) fn arc(a: u32, b: u32, _two_u: u32) -> Elem {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        Elem::Arc { a, b }
    }

    fn vertices(&self, u: u32) -> (u32, u32) {
        match *self {
            Elem::Arc { a, b } => (a, b),
            Elem::Diam { i, .. } => (i, i + u),
        }
    }
}

/// Strictly inside the open clockwise interval from `s` to `e` on the
/// `m`-gon.
fn in_open(x: u32, s: u32, e: u32, m: u32) -> bool {
    let span = (e + m - s) % m;
    let off = (x + m - s) % m;
    off > 0 && off < span
}

fn chords_interleave(p: (u32, u32), q: (u32, u32), m: u32) -> bool {
    let vs = [p.0, p.1, q.0, q.1];
    let distinct = vs.iter().collect::<BTreeSet<_>>().len() == 4;
    distinct && (in_open(q.0, p.0, p.1, m) != in_open(q.1, p.0, p.1, m))
}

pub(crate) fn elem_cross(x: &Elem, y: &Elem, u: u32) -> bool {
    let two_u = 2 * u;
    match (x, y) {
        (Elem::Diam { i, color: cx }, Elem::Diam { i: j, color: cy }) => cx != cy && i != j,
        _ => chords_interleave(x.vertices(u), y.vertices(u), two_u),
    }
}

/// The elements a crossing pair forces into a Ptolemy diagram of type D.
pub(crate) fn elem_demands(x: &Elem, y: &Elem, u: u32) -> Vec<Elem> {
    debug_assert!(elem_cross(x, y, u));
    let two_u = 2 * u;
    let mut out = Vec::new();
    let push_chord = |p: u32, q: u32, out: &mut Vec<Elem>| {
        let d = (q + two_u - p) % two_u;
        if d == 0 || d == 1 || d == two_u - 1 {
            return;
        }
        if d == u {
            // Opposite vertices: both coloured diameters.
            let pos = if p > u { p - u } else { p };
            out.push(Elem::Diam { i: pos, color: Color::Green });
            out.push(Elem::Diam { i: pos, color: Color::Red });
        } else {
            out.push(Elem::arc(p, q, two_u));
        }
    };
    match (x, y) {
        // (Pt1) two crossing non-diameter arcs.
        (Elem::Arc { a: i, b: j }, Elem::Arc { a: k, b: l }) => {
            for &p in &[*i, *j] {
                for &q in &[*k, *l] {
                    push_chord(p, q, &mut out);
                }
            }
        }
        // (Pt2) two crossing diameters, necessarily of different colour.
        (Elem::Diam { i, .. }, Elem::Diam { i: k, .. }) => {
            for &p in &[*i, *i + u] {
                for &q in &[*k, *k + u] {
                    push_chord(p, q, &mut out);
                }
            }
        }
        // (Pt3) a diameter crossing a non-diameter arc.
        (Elem::Diam { i, color }, Elem::Arc { a: k, b: l })
        | (Elem::Arc { a: k, b: l }, Elem::Diam { i, color }) => {
            let partner = (norm(*k as i64 + u as i64, two_u), norm(*l as i64 + u as i64, two_u));
            for &p in &[*i, *i + u] {
                for &q in &[*k, *l] {
                    let d = (q + two_u - p) % two_u;
                    if d == 0 || d == 1 || d == two_u - 1 {
                        continue;
                    }
                    debug_assert_ne!(d, u);
                    if !chords_interleave((p, q), partner, two_u) {
                        out.push(Elem::arc(p, q, two_u));
                    }
                }
            }
            // The induced diameters keep the colour of the crossing one.
            for &q in &[*k, *l] {
                let pos = if q > u { q - u } else { q };
                out.push(Elem::Diam { i: pos, color: *color });
            }
        }
    }
    out
}

/// A collection of [`ArcD`] values of one 2u-gon. Arc pairs implicitly carry
/// both of their arcs, so the set is invariant under rotation by 180 degrees
/// by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcSetD {
    u: u32,
    members: BTreeSet<ArcD>,
}

impl ArcSetD {
    pub fn new(u: u32) -> Result<Self, GeometryDError> {
        if u < 2 {
            return Err(GeometryDError::PolygonTooSmall(u));
        }
        Ok(ArcSetD {
            u,
            members: BTreeSet::new(),
        })
    }

    pub fn from_arcs<I>(u: u32, arcs: I) -> Result<Self, GeometryDError>
    where
        I: IntoIterator<Item = ArcD>,
    {
        let mut set = Self::new(u)?;
        for a in arcs {
            set.insert(a)?;
        }
        Ok(set)
    }

    /// Every pair and every coloured diameter of the 2u-gon.
    pub fn all(u: u32) -> Result<Self, GeometryDError> {
        let mut set = Self::new(u)?;
        for i in 1..=u {
            for d in 2..u {
                set.members.insert(ArcD::Pair { i, j: i + d, u });
            }
            set.members.insert(ArcD::Diameter { i, color: Color::Green, u });
            set.members.insert(ArcD::Diameter { i, color: Color::Red, u });
        }
        Ok(set)
    }

    pub fn half_polygon(&self) -> u32 {
        self.u
    }

    pub fn insert(&mut self, a: ArcD) -> Result<(), GeometryDError> {
        if a.half_polygon() != self.u {
            return Err(GeometryDError::AmbientMismatch(
                2 * a.half_polygon(),
                2 * self.u,
            ));
        }
        self.members.insert(a);
        Ok(())
    }

    pub fn contains(&self, a: &ArcD) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArcD> {
        self.members.iter()
    }

    fn elems(&self) -> BTreeSet<Elem> {
        self.members.iter().flat_map(|a| a.elems()).collect()
    }

    fn from_elems(u: u32, elems: &BTreeSet<Elem>) -> ArcSetD {
        let two_u = 2 * u;
        let mut members = BTreeSet::new();
        for e in elems {
            match *e {
                Elem::Arc { a, b } => {
                    let pair = ArcD::pair(a as i64, b as i64, u).expect("closure keeps arcs valid");
                    // The partner arc travels with the pair.
                    let partner = Elem::arc(norm(a as i64 + u as i64, two_u), norm(b as i64 + u as i64, two_u), two_u);
                    debug_assert!(elems.contains(&partner), "pair lost its 180-degree partner");
                    members.insert(pair);
                }
                Elem::Diam { i, color } => {
                    members.insert(ArcD::Diameter { i, color, u });
                }
            }
        }
        ArcSetD { u, members }
    }

    /// All three Ptolemy clauses, checked over every crossing pair of
    /// concrete arcs and diameters.
    pub fn is_ptolemy_d(&self) -> bool {
        let elems: Vec<Elem> = self.elems().into_iter().collect();
        let present: BTreeSet<Elem> = elems.iter().copied().collect();
        for (idx, x) in elems.iter().enumerate() {
            for y in &elems[idx + 1..] {
                if elem_cross(x, y, self.u) && !elem_demands(x, y, self.u).iter().all(|e| present.contains(e)) {
                    return false;
                }
            }
        }
        true
    }

    /// Least Ptolemy diagram of type D containing `self`.
    pub fn ptolemy_closure_d(&self) -> ArcSetD {
        let mut elems: Vec<Elem> = self.elems().into_iter().collect();
        let mut present: BTreeSet<Elem> = elems.iter().copied().collect();
        let mut next = 0;
        while next < elems.len() {
            let x = elems[next];
            next += 1;
            for k in 0..elems.len() {
                let y = elems[k];
                if y == x || !elem_cross(&x, &y, self.u) {
                    continue;
                }
                for e in elem_demands(&x, &y, self.u) {
                    if present.insert(e) {
                        elems.push(e);
                    }
                }
            }
        }
        Self::from_elems(self.u, &present)
    }

    /// Invariance under `F = tau^{n+1} phi^n` for a 2u-gon with
    /// `u = 2t(n+1)`.
    pub fn is_f_periodic(&self, n: u32, t: u32) -> Result<bool, GeometryDError> {
        self.check_params(n, t)?;
        Ok(self
            .members
            .iter()
            .all(|&a| self.members.contains(&f_d(a, n, 1))))
    }

    pub fn f_periodicity_violation(&self, n: u32, t: u32) -> Result<Option<ArcD>, GeometryDError> {
        self.check_params(n, t)?;
        Ok(self
            .members
            .iter()
            .copied()
            .find(|&a| !self.members.contains(&f_d(a, n, 1))))
    }

    fn check_params(&self, n: u32, t: u32) -> Result<(), GeometryDError> {
        if n == 0 || t == 0 || self.u != 2 * t * (n + 1) {
            return Err(GeometryDError::ParameterMismatch {
                two_u: 2 * self.u,
                n,
                t,
            });
        }
        Ok(())
    }
}

impl Serialize for ArcD {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match *self {
            ArcD::Pair { i, j, .. } => {
                let mut s = ser.serialize_struct("ArcD", 1)?;
                s.serialize_field("pair", &(i, j))?;
                s.end()
            }
            ArcD::Diameter { i, color, .. } => {
                let mut s = ser.serialize_struct("ArcD", 2)?;
                s.serialize_field("diam", &i)?;
                s.serialize_field("color", &color)?;
                s.end()
            }
        }
    }
}

/// Untagged JSON form of an [`ArcD`]; the ambient comes from the caller.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum ArcDJson {
    Pair { pair: (i64, i64) },
    Diameter { diam: i64, color: Color },
}

impl ArcDJson {
    pub fn into_arc(self, u: u32) -> Result<ArcD, GeometryDError> {
        match self {
            ArcDJson::Pair { pair: (a, b) } => ArcD::pair(a, b, u),
            ArcDJson::Diameter { diam, color } => ArcD::diameter(diam, color, u),
        }
    }
}

impl Serialize for ArcSetD {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut s = ser.serialize_struct("ArcSetD", 2)?;
        s.serialize_field("ngon", &(2 * self.u))?;
        let arcs: Vec<&ArcD> = self.members.iter().collect();
        s.serialize_field("arcs", &arcs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for ArcSetD {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            ngon: u32,
            arcs: Vec<ArcDJson>,
        }
        let raw = Raw::deserialize(de)?;
        if raw.ngon % 2 != 0 {
            return Err(serde::de::Error::custom("type-D polygon size must be even"));
        }
        let u = raw.ngon / 2;
        let mut set = ArcSetD::new(u).map_err(serde::de::Error::custom)?;
        for a in raw.arcs {
            let arc = a.into_arc(u).map_err(serde::de::Error::custom)?;
            set.insert(arc).map_err(serde::de::Error::custom)?;
        }
        Ok(set)
    }
}


/// Whether two type-D values cross, by the clause matching their kinds.
pub fn cross_d(a: &ArcD, b: &ArcD) -> Result<bool, GeometryDError> {
    let u = a.half_polygon();
    if u != b.half_polygon() {
        return Err(GeometryDError::AmbientMismatch(
            2 * u,
            2 * b.half_polygon(),
        ));
    }
    let ea = a.elems();
    let eb = b.elems();
    Ok(ea
        .iter()
        .any(|x| eb.iter().any(|y| elem_cross(x, y, u))))
}
