//! Canonical triangles, one per type with non-null edges.

use crate::geodesic::DeSitterPoint;
use crate::minkowski::MinkVec3;
use crate::taxonomy::{build_triangle, DeSitterTriangle};

fn point(x0: f64, x1: f64, x2: f64) -> DeSitterPoint {
    DeSitterPoint::new(MinkVec3::new(x0, x1, x2)).expect("fixture lies on the quadric")
}

/// Contractible spatiolateral.
pub fn sp0_points() -> [DeSitterPoint; 3] {
    let (c, s) = (1f64.cos(), 1f64.sin());
    [
        point(0.3f64.sinh(), 0.3f64.cosh(), 0.0),
        point(0.0, c, s),
        point(0.0, c, -s),
    ]
}

/// Chronosceles with the space-like edge opposite vertex 0.
pub fn cr0_points() -> [DeSitterPoint; 3] {
    let (c, s) = (0.5f64.cos(), 0.5f64.sin());
    [
        point(1f64.sinh(), 1f64.cosh(), 0.0),
        point(0.0, c, s),
        point(0.0, c, -s),
    ]
}

/// Chorosceles with the time-like edge opposite vertex 0.
pub fn ch0_points() -> [DeSitterPoint; 3] {
    let (sh, ch) = (0.5f64.sinh(), 0.5f64.cosh());
    [
        point(0.0, 1.2f64.cos(), 1.2f64.sin()),
        point(-sh, ch, 0.0),
        point(sh, ch, 0.0),
    ]
}

/// Tempolateral whose largest angle sits at vertex 2.
pub fn tp1_points() -> [DeSitterPoint; 3] {
    [
        point(0.0, 1.0, 0.0),
        point(1f64.sinh(), 1f64.cosh(), 0.0),
        DeSitterPoint::from_chart(0.5, 0.3),
    ]
}

/// All pairwise products exceed 1, but the third vertex is a multiple of
/// the sum of the first two, so the triple is collinear.
pub fn tp0_points() -> [DeSitterPoint; 3] {
    let (s2, c2) = (2f64.sinh(), 2f64.cosh());
    [
        point(s2, c2, 0.0),
        point(-s2, c2 * 2f64.cos(), c2 * 2f64.sin()),
        point(0.0, 1f64.cos(), 1f64.sin()),
    ]
}

fn build(p: [DeSitterPoint; 3]) -> DeSitterTriangle {
    build_triangle(&p[0], &p[1], &p[2]).expect("fixture is a valid triangle")
}

pub fn sp0() -> DeSitterTriangle {
    build(sp0_points())
}

pub fn cr0() -> DeSitterTriangle {
    build(cr0_points())
}

pub fn ch0() -> DeSitterTriangle {
    build(ch0_points())
}

pub fn tp1() -> DeSitterTriangle {
    build(tp1_points())
}

/// `(name, triangle)` for the four canonical fixtures.
pub fn named() -> [(&'static str, DeSitterTriangle); 4] {
    [
        ("SP0", sp0()),
        ("TP1", tp1()),
        ("CH0", ch0()),
        ("CR0", cr0()),
    ]
}

pub fn all() -> [DeSitterTriangle; 4] {
    named().map(|(_, t)| t)
}
