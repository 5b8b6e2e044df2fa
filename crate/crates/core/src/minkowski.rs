//! Arithmetic in 3-dimensional Minkowski space with signature (-,+,+).
//!
//! `x0` is the time coordinate. Future-pointing time-like vectors have
//! `x0 > 0`. The de Sitter plane is the quadric `<p,p> = +1`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Width of the band around a causal boundary that is classified null.
pub const EPS_NULL: f64 = 1e-9;
/// Allowed deviation of `|<u,u>|` from 1 for vectors that must be unit.
pub const EPS_UNIT: f64 = 1e-9;
/// Components below this magnitude count as zero.
pub const EPS_ZERO: f64 = 1e-12;

/// Complex numbers carrying pseudo-norms, pseudo-angles and complex areas.
pub type ComplexScalar = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct MinkVec3 {
    x0: f64,
    x1: f64,
    x2: f64,
}

impl MinkVec3 {
    pub const T: Self = Self::new(1.0, 0.0, 0.0);
    pub const X: Self = Self::new(0.0, 1.0, 0.0);
    pub const Y: Self = Self::new(0.0, 0.0, 1.0);

    /// Builds a vector without checking finiteness. Prefer [`MinkVec3::try_new`]
    /// for data that did not originate in this crate.
    pub const fn new(x0: f64, x1: f64, x2: f64) -> Self {
        Self { x0, x1, x2 }
    }

    pub fn try_new(x0: f64, x1: f64, x2: f64) -> Result<Self> {
        if x0.is_finite() && x1.is_finite() && x2.is_finite() {
            Ok(Self { x0, x1, x2 })
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub fn x0(&self) -> f64 {
        self.x0
    }

    #[inline]
    pub fn x1(&self) -> f64 {
        self.x1
    }

    #[inline]
    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x0, self.x1, self.x2]
    }

    #[inline]
    pub fn dot(&self, other: &Self) -> f64 {
        mink_inner(self, other)
    }

    /// Minkowski squared norm `<u,u>`.
    #[inline]
    pub fn norm_sq(&self) -> f64 {
        mink_inner(self, self)
    }

    /// Euclidean length of the coordinate triple. Used only for degeneracy tests.
    pub fn euclidean_norm(&self) -> f64 {
        (self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x0.is_finite() && self.x1.is_finite() && self.x2.is_finite()
    }

    /// Rescales so that `|<u,u>| = 1`. Returns `None` for null or zero input.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm_sq().abs();
        if n <= EPS_NULL * EPS_NULL || !n.is_finite() {
            return None;
        }
        Some(*self * (1.0 / n.sqrt()))
    }

    fn is_zero(&self) -> bool {
        self.x0.abs() < EPS_ZERO && self.x1.abs() < EPS_ZERO && self.x2.abs() < EPS_ZERO
    }
}

impl From<[f64; 3]> for MinkVec3 {
    fn from(v: [f64; 3]) -> Self {
        Self::new(v[0], v[1], v[2])
    }
}

impl From<MinkVec3> for [f64; 3] {
    fn from(v: MinkVec3) -> Self {
        v.to_array()
    }
}

impl fmt::Display for MinkVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x0, self.x1, self.x2)
    }
}

impl Add for MinkVec3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x0 + o.x0, self.x1 + o.x1, self.x2 + o.x2)
    }
}

impl Sub for MinkVec3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x0 - o.x0, self.x1 - o.x1, self.x2 - o.x2)
    }
}

impl Mul<f64> for MinkVec3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.x0 * s, self.x1 * s, self.x2 * s)
    }
}

impl Mul<MinkVec3> for f64 {
    type Output = MinkVec3;
    fn mul(self, v: MinkVec3) -> MinkVec3 {
        v * self
    }
}

impl Neg for MinkVec3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x0, -self.x1, -self.x2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CausalType {
    SpaceLike,
    TimeLike,
    Null,
}

impl CausalType {
    /// Classifies a squared norm (or Gram determinant) against the null band.
    pub fn from_norm_sq(q: f64) -> Self {
        if q > EPS_NULL {
            CausalType::SpaceLike
        } else if q < -EPS_NULL {
            CausalType::TimeLike
        } else {
            CausalType::Null
        }
    }

    /// Space-like and time-like swap; null stays null.
    pub fn dual(self) -> Self {
        match self {
            CausalType::SpaceLike => CausalType::TimeLike,
            CausalType::TimeLike => CausalType::SpaceLike,
            CausalType::Null => CausalType::Null,
        }
    }
}

/// `<u,v> = -u0 v0 + u1 v1 + u2 v2`.
#[inline]
pub fn mink_inner(u: &MinkVec3, v: &MinkVec3) -> f64 {
    -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2
}

pub fn causal_type(u: &MinkVec3) -> Result<CausalType> {
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(CausalType::from_norm_sq(u.norm_sq()))
}

/// Complex pseudo-norm: `0` for null, `sqrt|<u,u>|` for space-like and
/// `i sqrt|<u,u>|` for time-like vectors.
pub fn pseudo_norm(u: &MinkVec3) -> ComplexScalar {
    let q = u.norm_sq();
    match CausalType::from_norm_sq(q) {
        CausalType::Null => Complex64::new(0.0, 0.0),
        CausalType::SpaceLike => Complex64::new(q.abs().sqrt(), 0.0),
        CausalType::TimeLike => Complex64::new(0.0, q.abs().sqrt()),
    }
}

/// Which row of the pseudo-angle table produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Space-like pair with `<u,v>` in `[-1,1]`: `phi = theta`.
    RealSector,
    /// Space-like pair with `<u,v> < -1`: `phi = pi - i theta`.
    PiMinusImag,
    /// Space-like pair with `<u,v> > 1`: `phi = i theta`.
    PureImag,
    /// Time-like pair in the same time cone: `phi = -i theta`.
    NegImag,
    /// Time-like pair in opposite time cones: `phi = pi + i theta`.
    PiPlusImag,
    /// One space-like and one time-like vector: `phi = pi/2 + i theta`.
    HalfPiPlusImag,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PseudoAngle {
    pub value: ComplexScalar,
    pub branch: Branch,
}

impl PseudoAngle {
    fn from_theta(branch: Branch, theta: f64) -> Self {
        let value = match branch {
            Branch::RealSector => Complex64::new(theta, 0.0),
            Branch::PiMinusImag => Complex64::new(PI, -theta),
            Branch::PureImag => Complex64::new(0.0, theta),
            Branch::NegImag => Complex64::new(0.0, -theta),
            Branch::PiPlusImag => Complex64::new(PI, theta),
            Branch::HalfPiPlusImag => Complex64::new(FRAC_PI_2, theta),
        };
        Self { value, branch }
    }

    /// The real angle encoded by this pseudo-angle, read back through its branch.
    pub fn theta(&self) -> f64 {
        match self.branch {
            Branch::RealSector => self.value.re,
            Branch::PureImag | Branch::PiPlusImag | Branch::HalfPiPlusImag => self.value.im,
            Branch::PiMinusImag | Branch::NegImag => -self.value.im,
        }
    }

    pub fn cos(&self) -> ComplexScalar {
        self.value.cos()
    }
}

fn require_unit(u: &MinkVec3) -> Result<f64> {
    let q = u.norm_sq();
    if (q.abs() - 1.0).abs() > EPS_UNIT {
        return Err(Error::NotUnit(q));
    }
    Ok(q)
}

/// Complex angle with `cos(phi) = <u,v> / (|u|_p |v|_p)`, on the branch picked
/// by the causal types of `u`, `v`, the size of `<u,v>` and time-cone membership.
pub fn pseudo_angle(u: &MinkVec3, v: &MinkVec3) -> Result<PseudoAngle> {
    if CausalType::from_norm_sq(u.norm_sq()) == CausalType::Null
        || CausalType::from_norm_sq(v.norm_sq()) == CausalType::Null
    {
        return Err(Error::NullInput);
    }
    let qu = require_unit(u)?;
    let qv = require_unit(v)?;
    let g = mink_inner(u, v);
    let angle = match (qu > 0.0, qv > 0.0) {
        (true, true) => {
            if g > 1.0 + EPS_NULL {
                PseudoAngle::from_theta(Branch::PureImag, g.acosh())
            } else if g < -1.0 - EPS_NULL {
                PseudoAngle::from_theta(Branch::PiMinusImag, (-g).acosh())
            } else {
                PseudoAngle::from_theta(Branch::RealSector, g.clamp(-1.0, 1.0).acos())
            }
        }
        (false, false) => {
            // |<u,v>| >= 1 for two unit time-like vectors; clamp rounding.
            if g < 0.0 {
                PseudoAngle::from_theta(Branch::NegImag, (-g).max(1.0).acosh())
            } else {
                PseudoAngle::from_theta(Branch::PiPlusImag, g.max(1.0).acosh())
            }
        }
        _ => PseudoAngle::from_theta(Branch::HalfPiPlusImag, g.asinh()),
    };
    Ok(angle)
}

/// Real angle between unit non-null vectors spanning a non-null plane.
pub fn real_angle(u: &MinkVec3, v: &MinkVec3) -> Result<f64> {
    let qu = require_unit(u)?;
    let qv = require_unit(v)?;
    let g = mink_inner(u, v);
    if qu * qv < 0.0 {
        return Ok(g.asinh());
    }
    if (g.abs() - 1.0).abs() <= EPS_NULL {
        return Err(Error::NullSpan(g));
    }
    if qu > 0.0 && g.abs() < 1.0 {
        Ok(g.acos())
    } else if g < 0.0 {
        Ok((-g).acosh())
    } else {
        Ok(g.acosh())
    }
}

/// Two time-like vectors share a time cone iff `<u,v> < 0`.
pub fn same_time_cone(u: &MinkVec3, v: &MinkVec3) -> Result<bool> {
    if u.norm_sq() >= -EPS_NULL || v.norm_sq() >= -EPS_NULL {
        return Err(Error::NotTimeLike);
    }
    Ok(mink_inner(u, v) < 0.0)
}

/// Lorentzian cross product: `<u x v, u> = <u x v, v> = 0`.
///
/// With this sign choice `lorentz_cross(X, Y) = -T` and
/// `lorentz_cross(T, X) = Y`.
pub fn lorentz_cross(u: &MinkVec3, v: &MinkVec3) -> Result<MinkVec3> {
    let w = MinkVec3::new(
        u.x2 * v.x1 - u.x1 * v.x2,
        u.x2 * v.x0 - u.x0 * v.x2,
        u.x0 * v.x1 - u.x1 * v.x0,
    );
    let e = w.x0 * w.x0 + w.x1 * w.x1 + w.x2 * w.x2;
    if e < EPS_ZERO * EPS_ZERO {
        return Err(Error::DegeneratePair);
    }
    Ok(w)
}

/// Euclidean determinant of the 3x3 matrix with rows `a`, `b`, `c`.
pub fn det3(a: &MinkVec3, b: &MinkVec3, c: &MinkVec3) -> f64 {
    a.x0 * (b.x1 * c.x2 - b.x2 * c.x1) - a.x1 * (b.x0 * c.x2 - b.x2 * c.x0)
        + a.x2 * (b.x0 * c.x1 - b.x1 * c.x0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn v(a: f64, b: f64, c: f64) -> MinkVec3 {
        MinkVec3::new(a, b, c)
    }

    #[test]
    fn inner_product_basics() {
        assert_eq!(mink_inner(&MinkVec3::T, &MinkVec3::T), -1.0);
        assert_eq!(mink_inner(&MinkVec3::X, &MinkVec3::Y), 0.0);
        assert_eq!(mink_inner(&v(1.0, 1.0, 0.0), &v(1.0, 1.0, 0.0)), 0.0);
    }

    #[test]
    fn causal_types() {
        assert_eq!(causal_type(&MinkVec3::X).unwrap(), CausalType::SpaceLike);
        assert_eq!(causal_type(&MinkVec3::T).unwrap(), CausalType::TimeLike);
        assert_eq!(causal_type(&v(1.0, 1.0, 0.0)).unwrap(), CausalType::Null);
        assert_eq!(causal_type(&v(0.0, 0.0, 0.0)), Err(Error::ZeroVector));
        // Inside the band counts as null.
        assert_eq!(
            causal_type(&v(1.0, 1.0 + 1e-11, 0.0)).unwrap(),
            CausalType::Null
        );
    }

    #[test]
    fn try_new_rejects_nan() {
        assert_eq!(MinkVec3::try_new(f64::NAN, 0.0, 0.0), Err(Error::NonFinite));
        assert_eq!(
            MinkVec3::try_new(0.0, f64::INFINITY, 0.0),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn pseudo_norms() {
        assert_eq!(pseudo_norm(&v(0.0, 2.0, 0.0)), Complex64::new(2.0, 0.0));
        assert_eq!(pseudo_norm(&v(3.0, 0.0, 0.0)), Complex64::new(0.0, 3.0));
        assert_eq!(pseudo_norm(&v(1.0, 1.0, 0.0)), Complex64::new(0.0, 0.0));
        assert_eq!(pseudo_norm(&v(0.0, 0.0, 0.0)), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn pseudo_angle_rows() {
        let a = pseudo_angle(&MinkVec3::X, &MinkVec3::Y).unwrap();
        assert_eq!(a.branch, Branch::RealSector);
        assert_abs_diff_eq!(a.value.re, FRAC_PI_2, epsilon = 1e-15);
        assert_eq!(a.value.im, 0.0);

        let b = pseudo_angle(&MinkVec3::X, &v(1f64.sinh(), 1f64.cosh(), 0.0)).unwrap();
        assert_eq!(b.branch, Branch::PureImag);
        assert_abs_diff_eq!(b.value.re, 0.0);
        assert_abs_diff_eq!(b.value.im, 1.0, epsilon = 1e-12);

        let c = pseudo_angle(&MinkVec3::T, &v(1f64.cosh(), 1f64.sinh(), 0.0)).unwrap();
        assert_eq!(c.branch, Branch::NegImag);
        assert_abs_diff_eq!(c.value.im, -1.0, epsilon = 1e-12);
        // cos(-i) = cosh 1 = <u,v> / (i * i)
        assert_abs_diff_eq!(c.cos().re, 1f64.cosh(), epsilon = 1e-12);

        let d = pseudo_angle(&MinkVec3::X, &v(-1f64.sinh(), -1f64.cosh(), 0.0)).unwrap();
        assert_eq!(d.branch, Branch::PiMinusImag);
        assert_abs_diff_eq!(d.theta(), 1.0, epsilon = 1e-12);

        let e = pseudo_angle(&MinkVec3::T, &v(-1f64.cosh(), 1f64.sinh(), 0.0)).unwrap();
        assert_eq!(e.branch, Branch::PiPlusImag);
        assert_abs_diff_eq!(e.value.re, PI);
        assert_abs_diff_eq!(e.theta(), 1.0, epsilon = 1e-12);

        let f = pseudo_angle(&MinkVec3::X, &v(1f64.cosh(), 1f64.sinh(), 0.0)).unwrap();
        assert_eq!(f.branch, Branch::HalfPiPlusImag);
        assert_abs_diff_eq!(f.theta(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn pseudo_angle_errors() {
        assert_eq!(
            pseudo_angle(&v(1.0, 1.0, 0.0), &MinkVec3::X),
            Err(Error::NullInput)
        );
        assert!(matches!(
            pseudo_angle(&v(0.0, 2.0, 0.0), &MinkVec3::X),
            Err(Error::NotUnit(_))
        ));
    }

    #[test]
    fn real_angle_rows() {
        assert_abs_diff_eq!(
            real_angle(&MinkVec3::X, &MinkVec3::Y).unwrap(),
            FRAC_PI_2,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            real_angle(&MinkVec3::X, &v(1f64.sinh(), 1f64.cosh(), 0.0)).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            real_angle(&MinkVec3::X, &v(1f64.cosh(), 1f64.sinh(), 0.0)).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        // Both time-like, opposite cones.
        assert_abs_diff_eq!(
            real_angle(&MinkVec3::T, &v(-2f64.cosh(), 2f64.sinh(), 0.0)).unwrap(),
            2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn real_angle_rejects_null_span() {
        // Two unit space-like vectors with <u,v> = 1 span a null plane.
        let s = 0.5f64;
        let u = MinkVec3::X;
        let w = v(s, 1.0, s);
        assert_abs_diff_eq!(w.norm_sq(), 1.0);
        assert!(matches!(real_angle(&u, &w), Err(Error::NullSpan(_))));
    }

    #[test]
    fn time_cones() {
        let one = 1f64;
        assert!(same_time_cone(&MinkVec3::T, &v(one.cosh(), one.sinh(), 0.0)).unwrap());
        assert!(!same_time_cone(&MinkVec3::T, &-MinkVec3::T).unwrap());
        assert!(same_time_cone(&-MinkVec3::T, &v(-one.cosh(), 0.0, one.sinh())).unwrap());
        assert_eq!(
            same_time_cone(&MinkVec3::X, &MinkVec3::T),
            Err(Error::NotTimeLike)
        );
    }

    #[test]
    fn cross_products() {
        let w = lorentz_cross(&MinkVec3::X, &MinkVec3::Y).unwrap();
        assert_eq!(w, v(-1.0, 0.0, 0.0));
        // Solving <w,T> = <w,X> = 0 by hand leaves w parallel to Y.
        let w = lorentz_cross(&MinkVec3::T, &MinkVec3::X).unwrap();
        assert_eq!(w, v(0.0, 0.0, 1.0));
        assert_eq!(
            lorentz_cross(&MinkVec3::X, &(MinkVec3::X * 2.0)),
            Err(Error::DegeneratePair)
        );
    }

    #[test]
    fn dual_causal_type() {
        assert_eq!(CausalType::SpaceLike.dual(), CausalType::TimeLike);
        assert_eq!(CausalType::Null.dual(), CausalType::Null);
    }
}
