//! Brute-force area of a geodesic triangle by integrating the induced area
//! element over a fan parameterization.
//!
//! With apex `a` and opposite edge from `b` to `c`, the fan is
//! `X(s, t) = geodesic(a, q(s))(t)` with `q(s) = geodesic(b, c)(s)`. The
//! area element is `sqrt|det G|`, `G` the Minkowski first fundamental form of
//! `X`, with partial derivatives taken by central differences of step
//! `h = 1/(4n)`. The integral uses the composite midpoint rule on an
//! `n x n` grid; the error estimate is the Richardson term
//! `|A(2n) - A(n)| / 3`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geodesic::interpolate;
use crate::minkowski::{mink_inner, MinkVec3, EPS_NULL};
use crate::taxonomy::{distinguished_vertex, others, DeSitterTriangle};

/// Extra grid doublings allowed when the error estimate fails to shrink.
pub const MAX_EXTRA_REFINEMENTS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleResult {
    /// Midpoint-rule area on the finest grid.
    pub area: f64,
    pub est_error: f64,
    /// Resolution `(n_s, n_t)` of the finest grid.
    pub grid: (usize, usize),
    /// Number of grid doublings performed.
    pub refinements: usize,
    /// Fan apex.
    pub apex: usize,
}

/// Sum in a fixed binary tree over the slice, independent of thread count.
pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        n => {
            let (l, r) = xs.split_at(n / 2);
            pairwise_sum(l) + pairwise_sum(r)
        }
    }
}

struct Fan {
    apex: MinkVec3,
    b: MinkVec3,
    c: MinkVec3,
    bc: f64,
    apex_index: usize,
}

impl Fan {
    fn new(tri: &DeSitterTriangle, apex: usize) -> Self {
        let (k, l) = others(apex);
        Fan {
            apex: *tri.vertex(apex).vec(),
            b: *tri.vertex(k).vec(),
            c: *tri.vertex(l).vec(),
            bc: tri.edge(apex).inner(),
            apex_index: apex,
        }
    }

    fn base(&self, s: f64) -> MinkVec3 {
        interpolate(&self.b, &self.c, self.bc, s)
    }

    /// The ray from the apex to `q`, as `(q, <apex, q>)`.
    fn ray(&self, q: MinkVec3) -> Result<(MinkVec3, f64)> {
        let c = mink_inner(&self.apex, &q);
        if c <= -1.0 + EPS_NULL || !c.is_finite() {
            return Err(Error::DegenerateFan(self.apex_index));
        }
        Ok((q, c))
    }

    fn point(&self, ray: &(MinkVec3, f64), t: f64) -> MinkVec3 {
        interpolate(&self.apex, &ray.0, ray.1, t)
    }

    fn row(&self, s: f64, n: usize) -> Result<f64> {
        let h = 0.25 / n as f64;
        let inv = 1.0 / (2.0 * h);
        let lo = self.ray(self.base(s - h))?;
        let mid = self.ray(self.base(s))?;
        let hi = self.ray(self.base(s + h))?;
        let mut cells = Vec::with_capacity(n);
        for j in 0..n {
            let t = (j as f64 + 0.5) / n as f64;
            let xs = (self.point(&hi, t) - self.point(&lo, t)) * inv;
            let xt = (self.point(&mid, t + h) - self.point(&mid, t - h)) * inv;
            let det = mink_inner(&xs, &xs) * mink_inner(&xt, &xt) - mink_inner(&xs, &xt).powi(2);
            cells.push(det.abs().sqrt());
        }
        Ok(pairwise_sum(&cells))
    }
}

/// Composite midpoint value of the fan integral from `apex` on an `n x n` grid.
pub fn midpoint_area(tri: &DeSitterTriangle, apex: usize, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::GridTooSmall(n));
    }
    let fan = Fan::new(tri, apex);
    let rows: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|i| fan.row((i as f64 + 0.5) / n as f64, n))
        .collect::<Result<_>>()?;
    let cell = 1.0 / (n as f64 * n as f64);
    Ok(pairwise_sum(&rows) * cell)
}

/// Oracle area with the distinguished vertex as fan apex.
pub fn integrate_area(tri: &DeSitterTriangle, n: usize) -> Result<OracleResult> {
    let apex = distinguished_vertex(tri)?;
    integrate_area_from(tri, apex, n)
}

/// Oracle area from an arbitrary apex. Evaluates the grids `n/2`, `n` and
/// `2n`; the estimate must shrink across the last two doublings, otherwise
/// the grid is doubled again up to [`MAX_EXTRA_REFINEMENTS`] times.
pub fn integrate_area_from(tri: &DeSitterTriangle, apex: usize, n: usize) -> Result<OracleResult> {
    if n < 8 {
        return Err(Error::GridTooSmall(n));
    }
    let mut m = 2 * n;
    let mut coarse = midpoint_area(tri, apex, n / 2)?;
    let mut mid = midpoint_area(tri, apex, n)?;
    let mut fine = midpoint_area(tri, apex, m)?;
    let mut refinements = 1;
    loop {
        let prev = (mid - coarse).abs() / 3.0;
        let est = (fine - mid).abs() / 3.0;
        if est < prev || est <= 1e-14 * fine.abs().max(1.0) {
            return Ok(OracleResult {
                area: fine,
                est_error: est,
                grid: (m, m),
                refinements,
                apex,
            });
        }
        if refinements > MAX_EXTRA_REFINEMENTS {
            return Err(Error::NonConvergent {
                est_error: est,
                refinements,
            });
        }
        m *= 2;
        coarse = mid;
        mid = fine;
        fine = midpoint_area(tri, apex, m)?;
        refinements += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use approx::assert_abs_diff_eq;

    #[test]
    fn pairwise_sum_matches_naive() {
        let xs: Vec<f64> = (1..=100).map(f64::from).collect();
        assert_eq!(pairwise_sum(&xs), 5050.0);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }

    #[test]
    fn fixture_oracle_values() {
        // Midpoint values at n = 64 from an independent numpy evaluation of
        // the same fan rule.
        let tri = fixtures::sp0();
        assert_abs_diff_eq!(
            midpoint_area(&tri, 0, 64).unwrap(),
            0.32605590740149915,
            epsilon = 1e-10
        );
        let tri = fixtures::ch0();
        assert_abs_diff_eq!(
            midpoint_area(&tri, 0, 64).unwrap(),
            0.6766219877409932,
            epsilon = 1e-10
        );
    }

    #[test]
    fn oracle_reports_grid_and_error() {
        let r = integrate_area(&fixtures::cr0(), 16).unwrap();
        assert_eq!(r.grid, (32, 32));
        assert_eq!(r.refinements, 1);
        assert_eq!(r.apex, 0);
        assert!(r.est_error > 0.0 && r.est_error < 1e-4);
    }

    #[test]
    fn small_grids_rejected() {
        assert_eq!(
            integrate_area(&fixtures::sp0(), 4),
            Err(Error::GridTooSmall(4))
        );
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let tri = fixtures::tp1();
        let serial = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| midpoint_area(&tri, 2, 48).unwrap());
        let parallel = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| midpoint_area(&tri, 2, 48).unwrap());
        assert_eq!(serial.to_bits(), parallel.to_bits());
    }
}
