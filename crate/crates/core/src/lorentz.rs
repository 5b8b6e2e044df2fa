//! Proper orthochronous Lorentz maps of Minkowski 3-space.

use rand::Rng;

use crate::minkowski::MinkVec3;

/// A 3x3 matrix acting on column vectors `(x0, x1, x2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMap {
    m: [[f64; 3]; 3],
}

impl LorentzMap {
    pub const IDENTITY: Self = Self {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    /// Boost with the given rapidity along the spatial direction at `angle`
    /// in the (x1, x2) plane.
    pub fn boost(rapidity: f64, angle: f64) -> Self {
        let (ch, sh) = (rapidity.cosh(), rapidity.sinh());
        let (c, s) = (angle.cos(), angle.sin());
        Self {
            m: [
                [ch, sh * c, sh * s],
                [sh * c, 1.0 + (ch - 1.0) * c * c, (ch - 1.0) * c * s],
                [sh * s, (ch - 1.0) * c * s, 1.0 + (ch - 1.0) * s * s],
            ],
        }
    }

    /// Rotation of the spatial plane.
    pub fn rotation(angle: f64) -> Self {
        let (c, s) = (angle.cos(), angle.sin());
        Self {
            m: [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]],
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        Self { m }
    }

    pub fn apply(&self, v: &MinkVec3) -> MinkVec3 {
        let x = v.to_array();
        let r = |i: usize| self.m[i][0] * x[0] + self.m[i][1] * x[1] + self.m[i][2] * x[2];
        MinkVec3::new(r(0), r(1), r(2))
    }

    /// A rotation, boost, rotation composite with rapidity at most `max_rapidity`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_rapidity: f64) -> Self {
        use std::f64::consts::TAU;
        let r1 = Self::rotation(rng.random_range(0.0..TAU));
        let b = Self::boost(
            rng.random_range(0.0..=max_rapidity),
            rng.random_range(0.0..TAU),
        );
        let r2 = Self::rotation(rng.random_range(0.0..TAU));
        r2.compose(&b).compose(&r1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::mink_inner;
    use approx::assert_abs_diff_eq;

    #[test]
    fn boost_preserves_inner_product() {
        let l = LorentzMap::boost(1.3, 0.7).compose(&LorentzMap::rotation(2.1));
        let u = MinkVec3::new(0.3, -1.2, 2.0);
        let v = MinkVec3::new(-0.8, 0.5, 0.1);
        assert_abs_diff_eq!(
            mink_inner(&l.apply(&u), &l.apply(&v)),
            mink_inner(&u, &v),
            epsilon = 1e-12
        );
    }

    #[test]
    fn boost_keeps_future_cone() {
        let l = LorentzMap::boost(2.5, 4.0);
        assert!(l.apply(&MinkVec3::T).x0() > 0.0);
        assert_abs_diff_eq!(l.apply(&MinkVec3::T).x0(), 2.5f64.cosh(), epsilon = 1e-12);
    }
}
