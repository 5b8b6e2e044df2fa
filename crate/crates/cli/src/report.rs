//! JSON reports for `classify` and `area`. Every report carries `schema`.

use dstrig_core::taxonomy::others;
use dstrig_core::{
    build_triangle, classify_segment, classify_triangle, girard_area, integrate_area, Branch,
    DeSitterPoint, EdgeCounts, Error, Formula, PolarVertexKind, ProperName, SegmentKind,
    TriangleKind,
};
use serde::Serialize;

use crate::document::SCHEMA;
use crate::exit::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeReport {
    /// The edge opposite this vertex.
    pub opposite: usize,
    pub endpoints: [usize; 2],
    pub inner: f64,
    pub kind: SegmentKind,
    /// Arc angle or rapidity; zero for null and impossible edges.
    pub separation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolarReport {
    pub kind: TriangleKind,
    pub tags: [PolarVertexKind; 3],
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: TriangleKind,
    pub edge_counts: EdgeCounts,
    pub proper_name: Option<ProperName>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contractible: Option<bool>,
    pub edges: Vec<EdgeReport>,
    pub polar: Option<PolarReport>,
}

pub fn classify(p: &[DeSitterPoint; 3], name: Option<String>) -> Result<ClassifyReport, Failure> {
    let class = classify_triangle(&p[0], &p[1], &p[2])?;
    let mut edges = Vec::with_capacity(3);
    for j in 0..3 {
        let (k, l) = others(j);
        let seg = classify_segment(&p[k], &p[l])?;
        edges.push(EdgeReport {
            opposite: j,
            endpoints: [k, l],
            inner: seg.inner(),
            kind: seg.kind(),
            separation: seg.separation(),
        });
    }
    let polar = build_triangle(&p[0], &p[1], &p[2]).ok().map(|t| {
        let polar = t.polar();
        PolarReport {
            kind: polar.kind,
            tags: polar.tags,
        }
    });
    Ok(ClassifyReport {
        schema: SCHEMA,
        name,
        kind: class.kind,
        edge_counts: class.edge_counts,
        proper_name: class.proper_name,
        contractible: class.contractible,
        edges,
        polar,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexAngles {
    pub vertex: usize,
    pub theta: f64,
    pub phi: Complex,
    pub branch: Branch,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub area: f64,
    pub est_error: f64,
    pub grid: [usize; 2],
    pub refinements: usize,
    pub apex: usize,
    pub discrepancy: f64,
    pub tolerance: f64,
    pub within_tolerance: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AreaReport {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub proper_name: ProperName,
    pub formula_used: Formula,
    pub real_area: f64,
    pub complex_area: Complex,
    pub distinguished_vertex: usize,
    pub angles: Vec<VertexAngles>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_error: Option<String>,
}

impl AreaReport {
    /// False when the oracle ran and either failed or disagreed.
    pub fn oracle_ok(&self) -> bool {
        self.oracle_error.is_none() && self.oracle.as_ref().is_none_or(|o| o.within_tolerance)
    }
}

/// `grid` runs the oracle at that resolution.
pub fn area(
    p: &[DeSitterPoint; 3],
    name: Option<String>,
    grid: Option<usize>,
) -> Result<AreaReport, Failure> {
    let tri = build_triangle(&p[0], &p[1], &p[2])?;
    let r = girard_area(&tri)?;
    let angles = (0..3)
        .map(|j| VertexAngles {
            vertex: j,
            theta: r.angles.theta[j],
            phi: Complex {
                re: r.angles.phi[j].value.re,
                im: r.angles.phi[j].value.im,
            },
            branch: r.angles.phi[j].branch,
        })
        .collect();
    let (mut oracle, mut oracle_error) = (None, None);
    if let Some(n) = grid {
        match integrate_area(&tri, n) {
            Ok(o) => {
                let discrepancy = (o.area - r.real_area).abs();
                let tolerance = dstrig_core::verify::ORACLE_ABS_TOL
                    .max(dstrig_core::verify::ORACLE_EST_FACTOR * o.est_error);
                oracle = Some(OracleReport {
                    area: o.area,
                    est_error: o.est_error,
                    grid: [o.grid.0, o.grid.1],
                    refinements: o.refinements,
                    apex: o.apex,
                    discrepancy,
                    tolerance,
                    within_tolerance: discrepancy <= tolerance,
                });
            }
            Err(e @ Error::GridTooSmall(_)) => return Err(e.into()),
            Err(e) => oracle_error = Some(e.to_string()),
        }
    }
    Ok(AreaReport {
        schema: SCHEMA,
        name,
        proper_name: tri.proper_name(),
        formula_used: r.formula_used,
        real_area: r.real_area,
        complex_area: Complex {
            re: r.complex_area.re,
            im: r.complex_area.im,
        },
        distinguished_vertex: r.distinguished_vertex,
        angles,
        oracle,
        oracle_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dstrig_core::fixtures;

    #[test]
    fn sp0_classification() {
        let r = classify(&fixtures::sp0_points(), None).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["proper_name"], "spatiolateral");
        assert_eq!(v["edge_counts"], serde_json::json!([3, 0, 0]));
        assert_eq!(v["contractible"], true);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["edges"].as_array().unwrap().len(), 3);
        assert!(v["polar"].is_object());
    }

    #[test]
    fn cr0_classification() {
        let r = classify(&fixtures::cr0_points(), Some("CR0".into())).unwrap();
        assert_eq!(r.proper_name, Some(ProperName::Chronosceles));
        assert!(r.contractible.is_none());
    }

    #[test]
    fn ch0_area_with_oracle() {
        let r = area(&fixtures::ch0_points(), None, Some(32)).unwrap();
        assert_eq!(r.formula_used, Formula::Chorosceles);
        assert!(r.oracle_ok());
        let o = r.oracle.unwrap();
        assert!(o.discrepancy <= o.tolerance);
    }

    #[test]
    fn tp1_angles() {
        let r = area(&fixtures::tp1_points(), None, None).unwrap();
        let j = r.distinguished_vertex;
        let (k, l) = others(j);
        assert!(r.angles[j].theta > r.angles[k].theta + r.angles[l].theta);
    }

    #[test]
    fn flipped_sp0_exits_4() {
        let flipped = fixtures::sp0().with_antipodal_vertex(0).unwrap();
        let err = area(flipped.vertices(), None, None).unwrap_err();
        assert_eq!(err.code, crate::exit::NON_CONTRACTIBLE);
    }
}
