//! Points of the de Sitter plane and the geodesic segments joining them.
//!
//! The causal character of the segment from `p` to `q` is read off `<p,q>`:
//!
//! | `<p,q>`        | plane `span{p,q}` | segment          |
//! |----------------|-------------------|------------------|
//! | `(-1, 1)`      | space-like        | arc of ellipse   |
//! | `> 1`          | time-like         | arc of hyperbola |
//! | `= 1`          | null              | null line        |
//! | `< -1`         | time-like         | none             |
//!
//! `<p,q> = -1` (with `q != -p`) puts `q` on the null line through `-p`, which
//! no geodesic from `p` reaches; it is grouped with the impossible case.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{mink_inner, CausalType, MinkVec3, EPS_NULL, EPS_UNIT, EPS_ZERO};

/// A point `p` with `<p,p> = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MinkVec3", into = "MinkVec3")]
pub struct DeSitterPoint(MinkVec3);

impl DeSitterPoint {
    pub fn new(v: MinkVec3) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::NonFinite);
        }
        let q = v.norm_sq();
        if (q - 1.0).abs() > EPS_UNIT {
            return Err(Error::NotOnQuadric(q));
        }
        Ok(Self(v))
    }

    /// Point of the chart `(sinh u, cosh u cos psi, cosh u sin psi)`, which
    /// covers the whole quadric.
    pub fn from_chart(u: f64, psi: f64) -> Self {
        let ch = u.cosh();
        Self(MinkVec3::new(u.sinh(), ch * psi.cos(), ch * psi.sin()))
    }

    /// Inverse of [`DeSitterPoint::from_chart`], with `psi` in `[0, 2 pi)`.
    pub fn chart(&self) -> (f64, f64) {
        let u = self.0.x0().asinh();
        let psi = self.0.x2().atan2(self.0.x1()).rem_euclid(TAU);
        (u, psi)
    }

    #[inline]
    pub fn vec(&self) -> &MinkVec3 {
        &self.0
    }

    pub fn antipode(&self) -> Self {
        Self(-self.0)
    }

    #[inline]
    pub fn inner(&self, other: &Self) -> f64 {
        mink_inner(&self.0, &other.0)
    }
}

impl TryFrom<MinkVec3> for DeSitterPoint {
    type Error = Error;
    fn try_from(v: MinkVec3) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DeSitterPoint> for MinkVec3 {
    fn from(p: DeSitterPoint) -> Self {
        p.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    EllipsePart,
    HyperbolaPart,
    NullLine,
    Impossible,
}

impl SegmentKind {
    pub fn from_inner(c: f64) -> Self {
        if c > 1.0 + EPS_NULL {
            SegmentKind::HyperbolaPart
        } else if c >= 1.0 - EPS_NULL {
            SegmentKind::NullLine
        } else if c > -1.0 + EPS_NULL {
            SegmentKind::EllipsePart
        } else {
            SegmentKind::Impossible
        }
    }

    /// Causal character of the segment, or `None` when no segment exists.
    pub fn causal_type(self) -> Option<CausalType> {
        match self {
            SegmentKind::EllipsePart => Some(CausalType::SpaceLike),
            SegmentKind::HyperbolaPart => Some(CausalType::TimeLike),
            SegmentKind::NullLine => Some(CausalType::Null),
            SegmentKind::Impossible => None,
        }
    }

    pub fn is_traceable(self) -> bool {
        matches!(self, SegmentKind::EllipsePart | SegmentKind::HyperbolaPart)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeodesicSegment {
    a: DeSitterPoint,
    b: DeSitterPoint,
    kind: SegmentKind,
    inner: f64,
    separation: f64,
}

impl GeodesicSegment {
    pub fn a(&self) -> &DeSitterPoint {
        &self.a
    }

    pub fn b(&self) -> &DeSitterPoint {
        &self.b
    }

    pub fn kind(&self) -> SegmentKind {
        self.kind
    }

    /// `<a,b>`.
    pub fn inner(&self) -> f64 {
        self.inner
    }

    /// Elliptic arc angle or hyperbolic rapidity; zero for the other kinds.
    pub fn separation(&self) -> f64 {
        self.separation
    }
}

pub fn project_to_quadric(v: &MinkVec3) -> Result<DeSitterPoint> {
    let q = v.norm_sq();
    if q.is_nan() || q <= EPS_NULL || !v.is_finite() {
        return Err(Error::NotSpaceLikePosition(q));
    }
    DeSitterPoint::new(*v * (1.0 / q.sqrt()))
}

fn proportional(p: &DeSitterPoint, q: &DeSitterPoint) -> bool {
    let c = p.inner(q);
    (*q.vec() - *p.vec() * c).euclidean_norm() <= EPS_ZERO * (1.0 + c.abs())
}

/// Unit tangent at `p` along the geodesic toward `q`, from `w = q - <p,q> p`.
pub fn tangent_toward(p: &DeSitterPoint, q: &DeSitterPoint) -> Result<MinkVec3> {
    if proportional(p, q) {
        return Err(Error::CoincidentPoints);
    }
    let c = p.inner(q);
    if (c.abs() - 1.0).abs() <= EPS_NULL {
        return Err(Error::NullTangent(c));
    }
    let w = *q.vec() - *p.vec() * c;
    w.normalized().ok_or(Error::NullTangent(c))
}

/// Causal character of the plane `span{p,q}`.
pub fn classify_span(p: &DeSitterPoint, q: &DeSitterPoint) -> Result<CausalType> {
    if proportional(p, q) {
        return Err(Error::CoincidentPoints);
    }
    let c = p.inner(q).abs();
    Ok(if c < 1.0 - EPS_NULL {
        CausalType::SpaceLike
    } else if c > 1.0 + EPS_NULL {
        CausalType::TimeLike
    } else {
        CausalType::Null
    })
}

pub fn classify_segment(p: &DeSitterPoint, q: &DeSitterPoint) -> Result<GeodesicSegment> {
    if (*p.vec() - *q.vec()).euclidean_norm() <= EPS_ZERO {
        return Err(Error::CoincidentPoints);
    }
    let c = p.inner(q);
    let kind = SegmentKind::from_inner(c);
    let separation = match kind {
        SegmentKind::EllipsePart => c.acos(),
        SegmentKind::HyperbolaPart => c.acosh(),
        _ => 0.0,
    };
    Ok(GeodesicSegment {
        a: *p,
        b: *q,
        kind,
        inner: c,
        separation,
    })
}

/// `sin(x s) / sin(s)` for the ellipse (`c < 1`, `s = acos c`) or the sinh
/// analogue for the hyperbola (`c > 1`). Continuous through `c = 1`.
fn interpolation_weight(c: f64, x: f64) -> f64 {
    if c < 1.0 {
        let s = c.acos();
        if s < 1e-3 {
            series_weight(s * s, x)
        } else {
            (x * s).sin() / s.sin()
        }
    } else {
        let s = c.acosh();
        if s < 1e-3 {
            series_weight(-s * s, x)
        } else {
            (x * s).sinh() / s.sinh()
        }
    }
}

fn series_weight(lambda: f64, x: f64) -> f64 {
    let x2 = x * x;
    let num = x * (1.0 - lambda * x2 / 6.0 + lambda * lambda * x2 * x2 / 120.0);
    let den = 1.0 - lambda / 6.0 + lambda * lambda / 120.0;
    num / den
}

/// Point at parameter `t` on the geodesic from `a` to `b` (`t = 0` gives `a`).
/// Defined for every pair with `<a,b> > -1`, including null pairs, where the
/// geodesic is the straight line `(1-t) a + t b`.
pub(crate) fn interpolate(a: &MinkVec3, b: &MinkVec3, c: f64, t: f64) -> MinkVec3 {
    *a * interpolation_weight(c, 1.0 - t) + *b * interpolation_weight(c, t)
}

/// Point of an ellipse or hyperbola segment at parameter `t`, `t in [0, 1]`.
pub fn geodesic_point(seg: &GeodesicSegment, t: f64) -> Result<DeSitterPoint> {
    if !seg.kind.is_traceable() {
        return Err(Error::UnsupportedKind(seg.kind));
    }
    let x = interpolate(seg.a.vec(), seg.b.vec(), seg.inner, t);
    Ok(DeSitterPoint(x))
}

pub fn edge_length(seg: &GeodesicSegment) -> Result<f64> {
    if !seg.kind.is_traceable() {
        return Err(Error::UnsupportedKind(seg.kind));
    }
    Ok(seg.separation)
}
