//! Interior angles, pseudo-angles and the Girard-type area formulas for the
//! four triangle types without null edges.
//!
//! Every formula is evaluated on the triangle rotated so that its
//! distinguished vertex is vertex 0. With `t0` the angle there and `t1`, `t2`
//! the other two:
//!
//! | type                       | area              |
//! |----------------------------|-------------------|
//! | spatiolateral (contractible) | `-t0 + t1 + t2` |
//! | tempolateral               | `t0 - t1 - t2`    |
//! | chorosceles                | `t0 + t1 + t2`    |
//! | chronosceles               | `-t0 + t1 + t2`   |
//!
//! The same areas are the imaginary part of the complex angle excess
//! `phi_0 + phi_1 + phi_2 - pi`, whose real part vanishes.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{pseudo_angle, real_angle, Branch, ComplexScalar, PseudoAngle};
use crate::taxonomy::{distinguished_vertex, others, DeSitterTriangle, ProperName};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleSet {
    /// Real angle at each vertex.
    pub theta: [f64; 3],
    /// Pseudo-angle at each vertex.
    pub phi: [PseudoAngle; 3],
}

/// Which signed angle sum produced an area.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    Spatiolateral,
    Tempolateral,
    Chorosceles,
    Chronosceles,
}

impl Formula {
    pub fn for_type(name: ProperName) -> Option<Self> {
        match name {
            ProperName::Spatiolateral => Some(Formula::Spatiolateral),
            ProperName::Tempolateral => Some(Formula::Tempolateral),
            ProperName::Chorosceles => Some(Formula::Chorosceles),
            ProperName::Chronosceles => Some(Formula::Chronosceles),
            _ => None,
        }
    }

    /// Signs applied to `(t0, t1, t2)`.
    pub fn signs(self) -> [f64; 3] {
        match self {
            Formula::Spatiolateral | Formula::Chronosceles => [-1.0, 1.0, 1.0],
            Formula::Tempolateral => [1.0, -1.0, -1.0],
            Formula::Chorosceles => [1.0, 1.0, 1.0],
        }
    }

    /// Pseudo-angle branches at the distinguished vertex and at the other two.
    pub fn branches(self) -> (Branch, Branch) {
        match self {
            Formula::Spatiolateral => (Branch::PiMinusImag, Branch::PureImag),
            Formula::Tempolateral => (Branch::PiPlusImag, Branch::NegImag),
            Formula::Chorosceles => (Branch::PureImag, Branch::HalfPiPlusImag),
            Formula::Chronosceles => (Branch::NegImag, Branch::HalfPiPlusImag),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Formula::Spatiolateral => "spatiolateral",
            Formula::Tempolateral => "tempolateral",
            Formula::Chorosceles => "chorosceles",
            Formula::Chronosceles => "chronosceles",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AreaResult {
    pub complex_area: ComplexScalar,
    pub real_area: f64,
    pub formula_used: Formula,
    /// Index of the distinguished vertex in the caller's labelling.
    pub distinguished_vertex: usize,
    /// `permutation[i]` is the caller's index of the vertex the formula calls `i`.
    pub permutation: [usize; 3],
    /// Angles in the caller's labelling.
    pub angles: AngleSet,
}

fn supported(tri: &DeSitterTriangle) -> Result<Formula> {
    let name = tri.proper_name();
    Formula::for_type(name).ok_or(Error::UnsupportedTriangleType(Some(name)))
}

pub fn interior_angles(tri: &DeSitterTriangle) -> Result<AngleSet> {
    supported(tri)?;
    let mut theta = [0.0; 3];
    let mut phi = [PseudoAngle {
        value: ComplexScalar::new(0.0, 0.0),
        branch: Branch::RealSector,
    }; 3];
    for j in 0..3 {
        let (k, l) = others(j);
        let (a, b) = (tri.tangent(j, k), tri.tangent(j, l));
        phi[j] = pseudo_angle(a, b)?;
        theta[j] = real_angle(a, b)?;
    }
    Ok(AngleSet { theta, phi })
}

fn area_vertex(tri: &DeSitterTriangle) -> Result<(Formula, usize)> {
    let formula = supported(tri)?;
    let j = distinguished_vertex(tri)?;
    Ok((formula, j))
}

/// `phi_0 + phi_1 + phi_2 - pi`.
pub fn complex_area(tri: &DeSitterTriangle) -> Result<ComplexScalar> {
    area_vertex(tri)?;
    let angles = interior_angles(tri)?;
    Ok(angles.phi.iter().map(|p| p.value).sum::<ComplexScalar>() - PI)
}

pub fn girard_area(tri: &DeSitterTriangle) -> Result<AreaResult> {
    let (formula, j) = area_vertex(tri)?;
    let angles = interior_angles(tri)?;
    let (k, l) = others(j);
    let permutation = [j, k, l];
    let signs = formula.signs();
    let real_area = permutation
        .iter()
        .zip(signs)
        .map(|(&v, s)| s * angles.theta[v])
        .sum();
    let complex_area = angles.phi.iter().map(|p| p.value).sum::<ComplexScalar>() - PI;
    Ok(AreaResult {
        complex_area,
        real_area,
        formula_used: formula,
        distinguished_vertex: j,
        permutation,
        angles,
    })
}

/// Area straight from the tangent products `g_i = <V_i^k, V_i^l>`, without
/// extracting angles first.
pub fn girard_area_from_products(tri: &DeSitterTriangle) -> Result<f64> {
    let (formula, j) = area_vertex(tri)?;
    let (k, l) = others(j);
    let (g0, g1, g2) = (
        tri.vertex_product(j),
        tri.vertex_product(k),
        tri.vertex_product(l),
    );
    Ok(match formula {
        Formula::Spatiolateral => -(-g0).acosh() + g1.acosh() + g2.acosh(),
        Formula::Tempolateral => g0.acosh() - (-g1).acosh() - (-g2).acosh(),
        Formula::Chorosceles => g0.acosh() + g1.asinh() + g2.asinh(),
        Formula::Chronosceles => -(-g0).acosh() + g1.asinh() + g2.asinh(),
    })
}

/// Whether the tangent products have the signs each formula relies on:
/// spatiolateral `(< -1, > 1, > 1)`, tempolateral `(> 1, < -1, < -1)`,
/// chorosceles `g0 > 1`, chronosceles `g0 < -1`, with `g0` at the
/// distinguished vertex.
pub fn sign_pattern_holds(tri: &DeSitterTriangle) -> Result<bool> {
    let (formula, j) = area_vertex(tri)?;
    let (k, l) = others(j);
    let g = [
        tri.vertex_product(j),
        tri.vertex_product(k),
        tri.vertex_product(l),
    ];
    Ok(match formula {
        Formula::Spatiolateral => g[0] < -1.0 && g[1] > 1.0 && g[2] > 1.0,
        Formula::Tempolateral => g[0] > 1.0 && g[1] < -1.0 && g[2] < -1.0,
        Formula::Chorosceles => g[0] > 1.0,
        Formula::Chronosceles => g[0] < -1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use approx::assert_abs_diff_eq;

    // Reference areas from a separate double-precision fan integration with
    // Richardson extrapolation at n = 256 and 512 (agreement to ~1e-12).
    const SP0_AREA: f64 = 0.326065369226880;
    const CR0_AREA: f64 = 0.474200606887878;
    const CH0_AREA: f64 = 0.676611707914951;
    const TP1_AREA: f64 = 0.168102836194468;

    #[test]
    fn fixture_areas() {
        for (tri, area, formula) in [
            (fixtures::sp0(), SP0_AREA, Formula::Spatiolateral),
            (fixtures::cr0(), CR0_AREA, Formula::Chronosceles),
            (fixtures::ch0(), CH0_AREA, Formula::Chorosceles),
            (fixtures::tp1(), TP1_AREA, Formula::Tempolateral),
        ] {
            let r = girard_area(&tri).unwrap();
            assert_eq!(r.formula_used, formula);
            assert_abs_diff_eq!(r.real_area, area, epsilon = 1e-11);
            assert_abs_diff_eq!(
                girard_area_from_products(&tri).unwrap(),
                area,
                epsilon = 1e-11
            );
            assert_abs_diff_eq!(r.complex_area.re, 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(r.complex_area.im, area, epsilon = 1e-11);
            assert!(sign_pattern_holds(&tri).unwrap());
        }
    }

    #[test]
    fn branch_patterns() {
        for tri in fixtures::all() {
            let r = girard_area(&tri).unwrap();
            let (at, rest) = r.formula_used.branches();
            let [j, k, l] = r.permutation;
            assert_eq!(r.angles.phi[j].branch, at);
            assert_eq!(r.angles.phi[k].branch, rest);
            assert_eq!(r.angles.phi[l].branch, rest);
        }
    }

    #[test]
    fn tempolateral_largest_angle() {
        let r = girard_area(&fixtures::tp1()).unwrap();
        assert_eq!(r.distinguished_vertex, 2);
        let t = r.angles.theta;
        assert!(t[2] > t[0] + t[1]);
    }

    #[test]
    fn spatiolateral_angles_from_products() {
        let tri = fixtures::sp0();
        let a = interior_angles(&tri).unwrap();
        assert_abs_diff_eq!(
            a.theta[0],
            (-tri.vertex_product(0)).acosh(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(a.theta[1], tri.vertex_product(1).acosh(), epsilon = 1e-14);
        // cos(phi) reproduces the tangent product for space-like tangents.
        for j in 0..3 {
            let c = a.phi[j].cos();
            assert_abs_diff_eq!(c.re, tri.vertex_product(j), epsilon = 1e-12);
            assert_abs_diff_eq!(c.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn non_contractible_has_no_area() {
        let tri = fixtures::sp0().with_antipodal_vertex(0).unwrap();
        assert_eq!(girard_area(&tri), Err(Error::NonContractible));
        assert_eq!(complex_area(&tri), Err(Error::NonContractible));
        assert_eq!(girard_area_from_products(&tri), Err(Error::NonContractible));
    }
}
