//! Batch verification: random triangles of one type checked against every
//! structural invariant and against the integration oracle.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generator::{GeneratorConfig, TriangleSampler};
use crate::girard::{complex_area, girard_area, girard_area_from_products, sign_pattern_holds};
use crate::minkowski::causal_type;
use crate::oracle::integrate_area;
use crate::taxonomy::{others, same_cone_normal_vertices, DeSitterTriangle, ProperName};

pub const EQ_TANGENT_NORMAL_TOL: f64 = 1e-8;
pub const COMPLEX_AREA_TOL: f64 = 1e-8;
pub const PRODUCT_FORMULA_TOL: f64 = 1e-9;
pub const ORACLE_ABS_TOL: f64 = 1e-3;
pub const ORACLE_EST_FACTOR: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub grid: usize,
    pub u_max: f64,
    /// Flip one normal of every triangle before checking.
    pub corrupt_normals: bool,
    pub run_oracle: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            grid: 64,
            u_max: 2.0,
            corrupt_normals: false,
            run_oracle: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    /// `<V_j^k, V_j^l> = <u_k, u_l>` at every vertex.
    TangentNormalIdentity,
    /// A tangent along an edge and that edge's normal have opposite types.
    TangentNormalDuality,
    /// Complex excess is purely imaginary, positive, equal to the real area.
    ComplexAreaShape,
    /// Product formula equals the angle formula.
    ProductFormula,
    /// Tangent products have the signs the formula relies on.
    SignPattern,
    /// Pseudo-angle branches match the type.
    BranchPattern,
    Positivity,
    /// Tempolateral only: the distinguished angle exceeds the other two combined.
    TempolateralInequality,
    /// Spatiolateral only: exactly one vertex has same-cone normals.
    UniqueSameConeVertex,
    OracleAgreement,
}

impl Invariant {
    fn applies_to(self, target: ProperName) -> bool {
        match self {
            Invariant::TempolateralInequality => target == ProperName::Tempolateral,
            Invariant::UniqueSameConeVertex => target == ProperName::Spatiolateral,
            _ => true,
        }
    }
}

const INVARIANTS: [Invariant; 10] = [
    Invariant::TangentNormalIdentity,
    Invariant::TangentNormalDuality,
    Invariant::ComplexAreaShape,
    Invariant::ProductFormula,
    Invariant::SignPattern,
    Invariant::BranchPattern,
    Invariant::Positivity,
    Invariant::TempolateralInequality,
    Invariant::UniqueSameConeVertex,
    Invariant::OracleAgreement,
];

#[derive(Debug, Clone, Serialize)]
pub struct InvariantTally {
    pub invariant: Invariant,
    pub passed: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub invariant: Invariant,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeReport {
    pub target: ProperName,
    pub trials: usize,
    pub seed: u64,
    pub grid: usize,
    pub invariants: Vec<InvariantTally>,
    pub max_tangent_normal_residual: f64,
    pub max_product_formula_gap: f64,
    pub max_complex_area_residual: f64,
    pub max_oracle_discrepancy: f64,
    pub failures: Vec<TrialFailure>,
}

impl TypeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tally(&self, invariant: Invariant) -> Option<&InvariantTally> {
        self.invariants.iter().find(|t| t.invariant == invariant)
    }
}

#[derive(Debug, Default)]
struct TrialOutcome {
    checks: Vec<(Invariant, std::result::Result<(), String>)>,
    tangent_normal: f64,
    product_gap: f64,
    complex_residual: f64,
    oracle_gap: f64,
}

impl TrialOutcome {
    fn check(&mut self, inv: Invariant, ok: bool, detail: impl FnOnce() -> String) {
        self.checks
            .push((inv, if ok { Ok(()) } else { Err(detail()) }));
    }
}

fn run_trial(tri: &DeSitterTriangle, opts: &VerifyOptions) -> TrialOutcome {
    let residual = (0..3)
        .map(|j| (tri.vertex_product(j) - tri.normal_product(j)).abs())
        .fold(0.0, f64::max);
    let mut out = TrialOutcome {
        tangent_normal: residual,
        ..Default::default()
    };
    out.check(
        Invariant::TangentNormalIdentity,
        residual <= EQ_TANGENT_NORMAL_TOL,
        || format!("residual {residual:e}"),
    );

    let dual_ok = (0..3).all(|j| {
        let (k, l) = others(j);
        // V_j^k lies in the plane of the edge opposite l, and V_j^l in that opposite k.
        let pairs = [
            (tri.tangent(j, k), tri.normal(l)),
            (tri.tangent(j, l), tri.normal(k)),
        ];
        pairs
            .iter()
            .all(|(v, u)| match (causal_type(v), causal_type(u)) {
                (Ok(a), Ok(b)) => a == b.dual(),
                _ => false,
            })
    });
    out.check(Invariant::TangentNormalDuality, dual_ok, || {
        "causal types agree".into()
    });

    let area = match girard_area(tri) {
        Ok(a) => a,
        Err(e) => {
            for inv in INVARIANTS.iter().skip(2) {
                out.check(*inv, false, || format!("area unavailable: {e}"));
            }
            return out;
        }
    };

    match complex_area(tri) {
        Ok(z) => {
            out.complex_residual = z.re.abs().max((z.im - area.real_area).abs());
            let ok = z.re.abs() <= COMPLEX_AREA_TOL
                && z.im > 0.0
                && (z.im - area.real_area).abs() <= COMPLEX_AREA_TOL;
            out.check(Invariant::ComplexAreaShape, ok, || {
                format!("complex area {z}, real area {}", area.real_area)
            });
        }
        Err(e) => out.check(Invariant::ComplexAreaShape, false, || e.to_string()),
    }

    match girard_area_from_products(tri) {
        Ok(v) => {
            out.product_gap = (v - area.real_area).abs();
            let gap = out.product_gap;
            out.check(
                Invariant::ProductFormula,
                gap <= PRODUCT_FORMULA_TOL,
                || format!("gap {gap:e}"),
            );
        }
        Err(e) => out.check(Invariant::ProductFormula, false, || e.to_string()),
    }

    let signs = sign_pattern_holds(tri).unwrap_or(false);
    out.check(Invariant::SignPattern, signs, || {
        "tangent product signs".into()
    });

    let (at, rest) = area.formula_used.branches();
    let [j, k, l] = area.permutation;
    let phi = &area.angles.phi;
    let branches_ok = phi[j].branch == at && phi[k].branch == rest && phi[l].branch == rest;
    out.check(Invariant::BranchPattern, branches_ok, || {
        format!("branches {:?}", phi.map(|p| p.branch))
    });

    out.check(Invariant::Positivity, area.real_area > 0.0, || {
        format!("area {}", area.real_area)
    });

    if tri.proper_name() == ProperName::Tempolateral {
        let t = area.angles.theta;
        out.check(
            Invariant::TempolateralInequality,
            t[j] > t[k] + t[l],
            || format!("angles {t:?}"),
        );
    }
    if tri.proper_name() == ProperName::Spatiolateral {
        let hits = same_cone_normal_vertices(tri).map(|h| h.len()).unwrap_or(0);
        out.check(Invariant::UniqueSameConeVertex, hits == 1, || {
            format!("{hits} same-cone vertices")
        });
    }

    if opts.run_oracle {
        match integrate_area(tri, opts.grid) {
            Ok(r) => {
                out.oracle_gap = (r.area - area.real_area).abs();
                let tol = ORACLE_ABS_TOL.max(ORACLE_EST_FACTOR * r.est_error);
                let gap = out.oracle_gap;
                out.check(Invariant::OracleAgreement, gap <= tol, || {
                    format!("discrepancy {gap:e} > tolerance {tol:e}")
                });
            }
            // Non-convergence lands here too and is reported as such.
            Err(e) => out.check(Invariant::OracleAgreement, false, || e.to_string()),
        }
    }
    out
}

/// Draws `trials` triangles of `target` from `seed` and checks each one.
pub fn verify_type(
    target: ProperName,
    trials: usize,
    seed: u64,
    opts: &VerifyOptions,
) -> Result<TypeReport> {
    if !ProperName::NON_NULL.contains(&target) {
        return Err(Error::UnsupportedTriangleType(Some(target)));
    }
    let mut cfg = GeneratorConfig::new(target, seed);
    cfg.u_max = opts.u_max;
    let mut sampler = TriangleSampler::new(cfg)?;
    let triangles = (0..trials)
        .map(|_| {
            let t = sampler.next_triangle()?;
            Ok(if opts.corrupt_normals {
                t.with_corrupted_normals()
            } else {
                t
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let outcomes: Vec<TrialOutcome> = triangles.par_iter().map(|t| run_trial(t, opts)).collect();

    let mut invariants: Vec<InvariantTally> = INVARIANTS
        .iter()
        .filter(|inv| inv.applies_to(target))
        .filter(|inv| opts.run_oracle || **inv != Invariant::OracleAgreement)
        .map(|&invariant| InvariantTally {
            invariant,
            passed: 0,
            total: 0,
        })
        .collect();
    let mut report_failures = Vec::new();
    let mut max = [0.0f64; 4];
    for (trial, o) in outcomes.iter().enumerate() {
        max[0] = max[0].max(o.tangent_normal);
        max[1] = max[1].max(o.product_gap);
        max[2] = max[2].max(o.complex_residual);
        max[3] = max[3].max(o.oracle_gap);
        for (inv, res) in &o.checks {
            if let Some(t) = invariants.iter_mut().find(|t| t.invariant == *inv) {
                t.total += 1;
                match res {
                    Ok(()) => t.passed += 1,
                    Err(detail) => report_failures.push(TrialFailure {
                        trial,
                        invariant: *inv,
                        detail: detail.clone(),
                    }),
                }
            }
        }
    }
    Ok(TypeReport {
        target,
        trials,
        seed,
        grid: opts.grid,
        invariants,
        max_tangent_normal_residual: max[0],
        max_product_formula_gap: max[1],
        max_complex_area_residual: max[2],
        max_oracle_discrepancy: max[3],
        failures: report_failures,
    })
}
