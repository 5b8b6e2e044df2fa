//! Seeded rejection sampling of triangles of a requested type.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesic::DeSitterPoint;
use crate::taxonomy::{build_triangle, classify_triangle, DeSitterTriangle, ProperName};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub target: ProperName,
    /// Vertices are drawn with `u` uniform in `[-u_max, u_max]` in the chart
    /// `(sinh u, cosh u cos psi, cosh u sin psi)`.
    pub u_max: f64,
    pub max_attempts: usize,
}

impl GeneratorConfig {
    pub fn new(target: ProperName, seed: u64) -> Self {
        Self {
            seed,
            target,
            u_max: 2.0,
            max_attempts: 100_000,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.u_max > 0.0 && self.u_max.is_finite()) {
            return Err(Error::InvalidConfig("u_max must be positive"));
        }
        if self.max_attempts == 0 {
            return Err(Error::InvalidConfig("max_attempts must be at least 1"));
        }
        Ok(())
    }
}

/// A stream of triangles of one type, deterministic for a fixed config.
#[derive(Debug, Clone)]
pub struct TriangleSampler {
    cfg: GeneratorConfig,
    rng: ChaCha8Rng,
}

impl TriangleSampler {
    pub fn new(cfg: GeneratorConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self {
            cfg,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        })
    }

    fn point(&mut self) -> DeSitterPoint {
        let u = self.rng.random_range(-self.cfg.u_max..=self.cfg.u_max);
        let psi = self.rng.random_range(0.0..TAU);
        DeSitterPoint::from_chart(u, psi)
    }

    fn accepts(&self, p: &[DeSitterPoint; 3]) -> bool {
        let Ok(class) = classify_triangle(&p[0], &p[1], &p[2]) else {
            return false;
        };
        class.proper_name == Some(self.cfg.target)
            && (self.cfg.target != ProperName::Spatiolateral || class.contractible == Some(true))
    }

    /// Next matching vertex triple. Null-edge targets are accepted here too,
    /// although continuous sampling essentially never hits one.
    pub fn next_points(&mut self) -> Result<[DeSitterPoint; 3]> {
        for _ in 0..self.cfg.max_attempts {
            let p = [self.point(), self.point(), self.point()];
            if self.accepts(&p) {
                return Ok(p);
            }
        }
        Err(Error::ExhaustedAttempts {
            target: self.cfg.target,
            attempts: self.cfg.max_attempts,
        })
    }

    pub fn next_triangle(&mut self) -> Result<DeSitterTriangle> {
        for _ in 0..self.cfg.max_attempts {
            let p = self.next_points()?;
            if let Ok(tri) = build_triangle(&p[0], &p[1], &p[2]) {
                return Ok(tri);
            }
        }
        Err(Error::ExhaustedAttempts {
            target: self.cfg.target,
            attempts: self.cfg.max_attempts,
        })
    }
}

/// First triangle of the requested type for the configured seed.
pub fn random_triangle(cfg: &GeneratorConfig) -> Result<DeSitterTriangle> {
    TriangleSampler::new(*cfg)?.next_triangle()
}
