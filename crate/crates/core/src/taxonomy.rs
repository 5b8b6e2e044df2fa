//! Triangle construction and the causal taxonomy of de Sitter triangles.
//!
//! Indexing: edge `j` is opposite vertex `j`, i.e. it joins vertices `j+1`
//! and `j+2` (mod 3). The angle at vertex `j` is formed by the tangents
//! toward `j+1` and `j+2`. Normal `j` is the unit normal of the plane of
//! edge `j`.

use std::f64::consts::TAU;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesic::{
    classify_segment, tangent_toward, DeSitterPoint, GeodesicSegment, SegmentKind,
};
use crate::minkowski::{
    det3, lorentz_cross, mink_inner, same_time_cone, CausalType, MinkVec3, EPS_NULL, EPS_ZERO,
};

/// The two other indices of a vertex, in cyclic order.
#[inline]
pub fn others(j: usize) -> (usize, usize) {
    ((j + 1) % 3, (j + 2) % 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleKind {
    ProperDeSitter,
    Hyperbolic,
    AntipodalHyperbolic,
    Strange,
    Impossible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProperName {
    Spatiolateral,
    Tempolateral,
    Chorosceles,
    Chronosceles,
    Lucilateral,
    Multiple,
    PhotoscelesSpaceBase,
    PhotoscelesTimeBase,
    BimetricalChronosceles,
    BimetricalChorosceles,
}

impl ProperName {
    pub const ALL: [ProperName; 10] = [
        ProperName::Spatiolateral,
        ProperName::Tempolateral,
        ProperName::Chorosceles,
        ProperName::Chronosceles,
        ProperName::Lucilateral,
        ProperName::Multiple,
        ProperName::PhotoscelesSpaceBase,
        ProperName::PhotoscelesTimeBase,
        ProperName::BimetricalChronosceles,
        ProperName::BimetricalChorosceles,
    ];

    /// The four types whose edges are all non-null.
    pub const NON_NULL: [ProperName; 4] = [
        ProperName::Spatiolateral,
        ProperName::Tempolateral,
        ProperName::Chorosceles,
        ProperName::Chronosceles,
    ];

    pub fn from_counts(counts: EdgeCounts) -> Option<Self> {
        use ProperName::*;
        Some(match (counts.space, counts.time, counts.null) {
            (3, 0, 0) => Spatiolateral,
            (0, 3, 0) => Tempolateral,
            (2, 1, 0) => Chorosceles,
            (1, 2, 0) => Chronosceles,
            (0, 0, 3) => Lucilateral,
            (1, 1, 1) => Multiple,
            (1, 0, 2) => PhotoscelesSpaceBase,
            (0, 1, 2) => PhotoscelesTimeBase,
            (0, 2, 1) => BimetricalChronosceles,
            (2, 0, 1) => BimetricalChorosceles,
            _ => return None,
        })
    }

    pub fn counts(self) -> EdgeCounts {
        use ProperName::*;
        let (space, time, null) = match self {
            Spatiolateral => (3, 0, 0),
            Tempolateral => (0, 3, 0),
            Chorosceles => (2, 1, 0),
            Chronosceles => (1, 2, 0),
            Lucilateral => (0, 0, 3),
            Multiple => (1, 1, 1),
            PhotoscelesSpaceBase => (1, 0, 2),
            PhotoscelesTimeBase => (0, 1, 2),
            BimetricalChronosceles => (0, 2, 1),
            BimetricalChorosceles => (2, 0, 1),
        };
        EdgeCounts { space, time, null }
    }

    pub fn has_null_edge(self) -> bool {
        self.counts().null > 0
    }

    pub fn as_str(self) -> &'static str {
        use ProperName::*;
        match self {
            Spatiolateral => "spatiolateral",
            Tempolateral => "tempolateral",
            Chorosceles => "chorosceles",
            Chronosceles => "chronosceles",
            Lucilateral => "lucilateral",
            Multiple => "multiple",
            PhotoscelesSpaceBase => "photosceles_space_base",
            PhotoscelesTimeBase => "photosceles_time_base",
            BimetricalChronosceles => "bimetrical_chronosceles",
            BimetricalChorosceles => "bimetrical_chorosceles",
        }
    }
}

impl fmt::Display for ProperName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ProperName {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        ProperName::ALL
            .into_iter()
            .find(|n| n.as_str() == key)
            .ok_or_else(|| format!("unknown triangle type `{s}`"))
    }
}

/// Numbers of space-like, time-like and light-like edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[u8; 3]", into = "[u8; 3]")]
pub struct EdgeCounts {
    pub space: u8,
    pub time: u8,
    pub null: u8,
}

impl From<[u8; 3]> for EdgeCounts {
    fn from(c: [u8; 3]) -> Self {
        Self {
            space: c[0],
            time: c[1],
            null: c[2],
        }
    }
}

impl From<EdgeCounts> for [u8; 3] {
    fn from(c: EdgeCounts) -> Self {
        [c.space, c.time, c.null]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleClass {
    pub kind: TriangleKind,
    pub edge_counts: EdgeCounts,
    pub proper_name: Option<ProperName>,
    /// Set for spatiolateral triangles away from the `2 pi` boundary.
    pub contractible: Option<bool>,
}

fn check_distinct_and_spread(p: &[DeSitterPoint; 3]) -> Result<()> {
    for j in 0..3 {
        let (k, _) = others(j);
        if (*p[j].vec() - *p[k].vec()).euclidean_norm() <= EPS_ZERO {
            return Err(Error::DegenerateTriangle);
        }
    }
    let scale: f64 = p.iter().map(|q| q.vec().euclidean_norm()).product();
    if det3(p[0].vec(), p[1].vec(), p[2].vec()).abs() <= 1e-9 * scale {
        return Err(Error::DegenerateTriangle);
    }
    Ok(())
}

fn contractibility(length_sum: f64) -> Option<bool> {
    if length_sum < TAU - EPS_NULL {
        Some(true)
    } else if length_sum > TAU + EPS_NULL {
        Some(false)
    } else {
        None
    }
}

fn segments(p: &[DeSitterPoint; 3]) -> Result<[GeodesicSegment; 3]> {
    let seg = |j: usize| {
        let (k, l) = others(j);
        classify_segment(&p[k], &p[l]).map_err(|_| Error::DegenerateTriangle)
    };
    Ok([seg(0)?, seg(1)?, seg(2)?])
}

fn class_of(edges: &[GeodesicSegment; 3]) -> TriangleClass {
    let mut counts = EdgeCounts::default();
    let mut impossible = false;
    for e in edges {
        match e.kind() {
            SegmentKind::EllipsePart => counts.space += 1,
            SegmentKind::HyperbolaPart => counts.time += 1,
            SegmentKind::NullLine => counts.null += 1,
            SegmentKind::Impossible => impossible = true,
        }
    }
    if impossible {
        return TriangleClass {
            kind: TriangleKind::Impossible,
            edge_counts: counts,
            proper_name: None,
            contractible: None,
        };
    }
    let proper_name = ProperName::from_counts(counts);
    let contractible = match proper_name {
        Some(ProperName::Spatiolateral) => {
            contractibility(edges.iter().map(|e| e.separation()).sum())
        }
        _ => None,
    };
    TriangleClass {
        kind: TriangleKind::ProperDeSitter,
        edge_counts: counts,
        proper_name,
        contractible,
    }
}

/// Classifies a vertex triple from its pairwise inner products alone. Works
/// for every type, including those with null or impossible edges.
pub fn classify_triangle(
    p1: &DeSitterPoint,
    p2: &DeSitterPoint,
    p3: &DeSitterPoint,
) -> Result<TriangleClass> {
    let p = [*p1, *p2, *p3];
    check_distinct_and_spread(&p)?;
    Ok(class_of(&segments(&p)?))
}

/// A triangle with non-null edges, together with its unit tangents at the
/// vertices and the outer unit normals of its edge planes.
#[derive(Debug, Clone, PartialEq)]
pub struct DeSitterTriangle {
    vertices: [DeSitterPoint; 3],
    edges: [GeodesicSegment; 3],
    tangents: [[MinkVec3; 3]; 3],
    normals: [MinkVec3; 3],
    class: TriangleClass,
}

/// Builds the triangle `p1 p2 p3`.
///
/// Normal `j` is `lorentz_cross(p_{j+1}, p_{j+2})`, rescaled to unit length
/// and oriented so that `<u_j, p_j> < 0` (the opposite vertex lies on the
/// inner side). The cyclic order makes
/// `<V_j^k, V_j^l> = <u_k, u_l>` hold at every vertex.
pub fn build_triangle(
    p1: &DeSitterPoint,
    p2: &DeSitterPoint,
    p3: &DeSitterPoint,
) -> Result<DeSitterTriangle> {
    let p = [*p1, *p2, *p3];
    check_distinct_and_spread(&p)?;
    let edges = segments(&p)?;
    for (j, e) in edges.iter().enumerate() {
        match e.kind() {
            SegmentKind::Impossible => {
                return Err(Error::ImpossibleEdge {
                    edge: j,
                    inner: e.inner(),
                })
            }
            SegmentKind::NullLine => {
                return Err(Error::NullEdge {
                    edge: j,
                    inner: e.inner(),
                })
            }
            _ => {}
        }
    }

    let mut tangents = [[MinkVec3::default(); 3]; 3];
    for j in 0..3 {
        let (k, l) = others(j);
        tangents[j][k] = tangent_toward(&p[j], &p[k]).map_err(|_| Error::DegenerateTriangle)?;
        tangents[j][l] = tangent_toward(&p[j], &p[l]).map_err(|_| Error::DegenerateTriangle)?;
    }

    let mut normals = [MinkVec3::default(); 3];
    for (j, n) in normals.iter_mut().enumerate() {
        let (k, l) = others(j);
        *n = lorentz_cross(p[k].vec(), p[l].vec())
            .ok()
            .and_then(|w| w.normalized())
            .ok_or(Error::DegenerateTriangle)?;
    }
    let side = mink_inner(&normals[0], p[0].vec());
    let flip = if side.abs() > EPS_ZERO {
        side > 0.0
    } else {
        normals[0].x0() < 0.0
    };
    if flip {
        for n in &mut normals {
            *n = -*n;
        }
    }

    Ok(DeSitterTriangle {
        vertices: p,
        edges,
        tangents,
        normals,
        class: class_of(&edges),
    })
}

impl DeSitterTriangle {
    pub fn vertices(&self) -> &[DeSitterPoint; 3] {
        &self.vertices
    }

    pub fn vertex(&self, j: usize) -> &DeSitterPoint {
        &self.vertices[j]
    }

    /// Edge opposite vertex `j`.
    pub fn edge(&self, j: usize) -> &GeodesicSegment {
        &self.edges[j]
    }

    pub fn edges(&self) -> &[GeodesicSegment; 3] {
        &self.edges
    }

    /// Unit tangent at vertex `j` toward vertex `k`.
    ///
    /// # Panics
    /// If `j == k` or either index is out of range.
    pub fn tangent(&self, j: usize, k: usize) -> &MinkVec3 {
        assert!(j != k && j < 3 && k < 3, "tangent({j}, {k}) is undefined");
        &self.tangents[j][k]
    }

    /// Outer unit normal of the plane of edge `j`.
    pub fn normal(&self, j: usize) -> &MinkVec3 {
        &self.normals[j]
    }

    pub fn normals(&self) -> &[MinkVec3; 3] {
        &self.normals
    }

    pub fn class(&self) -> &TriangleClass {
        &self.class
    }

    /// Always set: built triangles have no null or impossible edges.
    pub fn proper_name(&self) -> ProperName {
        self.class
            .proper_name
            .expect("built triangles always carry a proper name")
    }

    /// `<V_j^k, V_j^l>`, the product of the two tangents at vertex `j`.
    pub fn vertex_product(&self, j: usize) -> f64 {
        let (k, l) = others(j);
        mink_inner(&self.tangents[j][k], &self.tangents[j][l])
    }

    /// `<u_k, u_l>` for the two normals adjacent to vertex `j`.
    pub fn normal_product(&self, j: usize) -> f64 {
        let (k, l) = others(j);
        mink_inner(&self.normals[k], &self.normals[l])
    }

    pub fn edge_length_sum(&self) -> f64 {
        self.edges.iter().map(|e| e.separation()).sum()
    }

    /// Rebuilds the triangle with its vertices rotated so that vertex `j`
    /// becomes vertex 0. Orientation is preserved.
    pub fn rotated(&self, j: usize) -> Result<Self> {
        let (k, l) = others(j);
        build_triangle(&self.vertices[j], &self.vertices[k], &self.vertices[l])
    }

    /// Same triangle with vertex `j` replaced by its antipode.
    pub fn with_antipodal_vertex(&self, j: usize) -> Result<Self> {
        let mut p = self.vertices;
        p[j] = p[j].antipode();
        build_triangle(&p[0], &p[1], &p[2])
    }

    /// Fault injection for the verification driver: flips one normal so the
    /// tangent/normal identity fails at two vertices.
    #[doc(hidden)]
    pub fn with_corrupted_normals(mut self) -> Self {
        self.normals[0] = -self.normals[0];
        self
    }
}

pub fn is_contractible(tri: &DeSitterTriangle) -> Result<bool> {
    if tri.class.proper_name != Some(ProperName::Spatiolateral) {
        return Err(Error::NotSpatiolateral);
    }
    let sum = tri.edge_length_sum();
    contractibility(sum).ok_or(Error::BoundaryCase(sum))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolarVertexKind {
    OnDeSitter,
    OnH2,
    OnAntiH2,
}

impl PolarVertexKind {
    fn of(u: &MinkVec3) -> Self {
        if u.norm_sq() > 0.0 {
            PolarVertexKind::OnDeSitter
        } else if u.x0() > 0.0 {
            PolarVertexKind::OnH2
        } else {
            PolarVertexKind::OnAntiH2
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarTriangle {
    pub vertices: [MinkVec3; 3],
    pub tags: [PolarVertexKind; 3],
    pub kind: TriangleKind,
}

impl DeSitterTriangle {
    /// Triangle of outer normals.
    pub fn polar(&self) -> PolarTriangle {
        let vertices = self.normals;
        let tags = vertices.map(|u| PolarVertexKind::of(&u));
        let kind = if tags.iter().all(|t| *t == PolarVertexKind::OnH2) {
            TriangleKind::Hyperbolic
        } else if tags.iter().all(|t| *t == PolarVertexKind::OnAntiH2) {
            TriangleKind::AntipodalHyperbolic
        } else if tags.iter().all(|t| *t == PolarVertexKind::OnDeSitter) {
            let empty_edge = (0..3).any(|j| self.normal_product(j) < -1.0 - EPS_NULL);
            if empty_edge {
                TriangleKind::Impossible
            } else {
                TriangleKind::ProperDeSitter
            }
        } else {
            TriangleKind::Strange
        };
        PolarTriangle {
            vertices,
            tags,
            kind,
        }
    }
}

/// Polar triangle of a vertex triple. Only the four types without null edges
/// have one.
pub fn polar_triangle(
    p1: &DeSitterPoint,
    p2: &DeSitterPoint,
    p3: &DeSitterPoint,
) -> Result<PolarTriangle> {
    match build_triangle(p1, p2, p3) {
        Ok(tri) => Ok(tri.polar()),
        Err(Error::NullEdge { .. }) => {
            let class = classify_triangle(p1, p2, p3)?;
            Err(match class.proper_name {
                Some(name) => Error::NoPolarTriangle(name),
                None => Error::UnsupportedTriangleType(None),
            })
        }
        Err(e) => Err(e),
    }
}

fn unique(candidates: impl Iterator<Item = bool>) -> Result<usize> {
    let hits: Vec<usize> = candidates
        .enumerate()
        .filter_map(|(j, hit)| hit.then_some(j))
        .collect();
    match hits.as_slice() {
        [j] => Ok(*j),
        _ => Err(Error::AmbiguousVertex(hits.len())),
    }
}

/// Vertices of a spatiolateral triangle whose two adjacent outer normals lie
/// in the same time cone.
pub fn same_cone_normal_vertices(tri: &DeSitterTriangle) -> Result<Vec<usize>> {
    if tri.class.proper_name != Some(ProperName::Spatiolateral) {
        return Err(Error::NotSpatiolateral);
    }
    let mut out = Vec::new();
    for j in 0..3 {
        let (k, l) = others(j);
        if same_time_cone(&tri.normals[k], &tri.normals[l])? {
            out.push(j);
        }
    }
    Ok(out)
}

/// The vertex each area formula singles out:
///
/// * spatiolateral (contractible only): adjacent normals in the same time cone;
/// * tempolateral: tangents in different time cones (the largest angle);
/// * chorosceles: opposite the time-like edge;
/// * chronosceles: opposite the space-like edge.
pub fn distinguished_vertex(tri: &DeSitterTriangle) -> Result<usize> {
    match tri.proper_name() {
        ProperName::Spatiolateral => {
            if !is_contractible(tri)? {
                return Err(Error::NonContractible);
            }
            let hits = same_cone_normal_vertices(tri)?;
            match hits.as_slice() {
                [j] => Ok(*j),
                _ => Err(Error::AmbiguousVertex(hits.len())),
            }
        }
        ProperName::Tempolateral => {
            let mut flags = [false; 3];
            for (j, flag) in flags.iter_mut().enumerate() {
                let (k, l) = others(j);
                *flag = !same_time_cone(&tri.tangents[j][k], &tri.tangents[j][l])?;
            }
            unique(flags.into_iter())
        }
        ProperName::Chorosceles => unique(
            tri.edges
                .iter()
                .map(|e| e.kind().causal_type() == Some(CausalType::TimeLike)),
        ),
        ProperName::Chronosceles => unique(
            tri.edges
                .iter()
                .map(|e| e.kind().causal_type() == Some(CausalType::SpaceLike)),
        ),
        _ => Err(Error::NotApplicable),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::minkowski::causal_type;
    use approx::assert_abs_diff_eq;

    #[test]
    fn names_match_counts() {
        for name in ProperName::ALL {
            assert_eq!(ProperName::from_counts(name.counts()), Some(name));
            assert_eq!(name.as_str().parse::<ProperName>().unwrap(), name);
            let c = name.counts();
            assert_eq!(c.space + c.time + c.null, 3);
        }
        assert!("triangle".parse::<ProperName>().is_err());
        assert_eq!(
            "Photosceles-Space-Base".parse::<ProperName>().unwrap(),
            ProperName::PhotoscelesSpaceBase
        );
    }

    #[test]
    fn spatiolateral_fixture() {
        let tri = fixtures::sp0();
        assert_abs_diff_eq!(
            tri.vertex(0).inner(tri.vertex(1)),
            0.3f64.cosh() * 1f64.cos(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            tri.vertex(1).inner(tri.vertex(2)),
            2f64.cos(),
            epsilon = 1e-15
        );
        let class = tri.class();
        assert_eq!(class.proper_name, Some(ProperName::Spatiolateral));
        assert_eq!(class.edge_counts, EdgeCounts::from([3, 0, 0]));
        assert_eq!(class.contractible, Some(true));
        assert_abs_diff_eq!(tri.edge_length_sum(), 3.9412137863004116, epsilon = 1e-12);
        assert_eq!(distinguished_vertex(&tri).unwrap(), 0);
    }

    #[test]
    fn chronosceles_fixture() {
        let tri = fixtures::cr0();
        assert_abs_diff_eq!(
            tri.vertex(0).inner(tri.vertex(1)),
            1f64.cosh() * 0.5f64.cos(),
            epsilon = 1e-15
        );
        assert_eq!(tri.class().proper_name, Some(ProperName::Chronosceles));
        assert_eq!(tri.class().edge_counts, EdgeCounts::from([1, 2, 0]));
        assert_eq!(distinguished_vertex(&tri).unwrap(), 0);
    }

    #[test]
    fn chorosceles_fixture() {
        let tri = fixtures::ch0();
        assert_eq!(tri.class().proper_name, Some(ProperName::Chorosceles));
        assert_eq!(distinguished_vertex(&tri).unwrap(), 0);
        let polar = tri.polar();
        assert_eq!(polar.tags[0], PolarVertexKind::OnDeSitter);
        assert_ne!(polar.tags[1], PolarVertexKind::OnDeSitter);
        assert_ne!(polar.tags[2], PolarVertexKind::OnDeSitter);
        assert_ne!(polar.tags[1], polar.tags[2]);
        assert_eq!(polar.kind, TriangleKind::Strange);
    }

    #[test]
    fn tempolateral_fixture() {
        let tri = fixtures::tp1();
        assert_eq!(tri.class().proper_name, Some(ProperName::Tempolateral));
        assert_eq!(distinguished_vertex(&tri).unwrap(), 2);
        let polar = tri.polar();
        assert!(polar.tags.iter().all(|t| *t == PolarVertexKind::OnDeSitter));
    }

    #[test]
    fn collinear_tempolateral_triple_is_degenerate() {
        // p3 is proportional to p1 + p2, so all three lie on one geodesic.
        let [p1, p2, p3] = fixtures::tp0_points();
        assert_eq!(
            build_triangle(&p1, &p2, &p3),
            Err(Error::DegenerateTriangle)
        );
        assert_eq!(
            classify_triangle(&p1, &p2, &p3),
            Err(Error::DegenerateTriangle)
        );
    }

    #[test]
    fn coincident_vertices_rejected() {
        let [p1, _, p3] = fixtures::sp0_points();
        assert_eq!(
            build_triangle(&p1, &p1, &p3),
            Err(Error::DegenerateTriangle)
        );
    }

    #[test]
    fn spatiolateral_polar_structure() {
        let tri = fixtures::sp0();
        assert!(tri
            .normals()
            .iter()
            .all(|u| causal_type(u).unwrap() == CausalType::TimeLike));
        assert_eq!(same_cone_normal_vertices(&tri).unwrap(), vec![0]);
        assert_eq!(tri.polar().kind, TriangleKind::Strange);
    }

    #[test]
    fn antipodal_flip_is_non_contractible() {
        let tri = fixtures::sp0().with_antipodal_vertex(0).unwrap();
        assert_eq!(tri.class().proper_name, Some(ProperName::Spatiolateral));
        assert_eq!(is_contractible(&tri), Ok(false));
        assert_eq!(distinguished_vertex(&tri), Err(Error::NonContractible));
        assert_eq!(same_cone_normal_vertices(&tri).unwrap(), vec![0, 1, 2]);
        assert!(matches!(
            tri.polar().kind,
            TriangleKind::Hyperbolic | TriangleKind::AntipodalHyperbolic
        ));
    }

    #[test]
    fn small_triangle_near_waist_is_contractible() {
        let e = 1e-3;
        let p1 = DeSitterPoint::from_chart(0.0, 0.0);
        let p2 = DeSitterPoint::from_chart(0.0, 2.0 * e);
        let p3 = DeSitterPoint::from_chart(0.3 * e, e);
        let tri = build_triangle(&p1, &p2, &p3).unwrap();
        assert_eq!(tri.proper_name(), ProperName::Spatiolateral);
        assert_eq!(is_contractible(&tri), Ok(true));
    }

    #[test]
    fn is_contractible_needs_spatiolateral() {
        assert_eq!(
            is_contractible(&fixtures::ch0()),
            Err(Error::NotSpatiolateral)
        );
    }

    #[test]
    fn null_edge_triples_classify_but_do_not_build() {
        // <p1,p2> = 1; the other two edges are space-like.
        let p1 = DeSitterPoint::new(MinkVec3::X).unwrap();
        let p2 = DeSitterPoint::new(MinkVec3::new(1.0, 1.0, 1.0)).unwrap();
        let p3 = DeSitterPoint::from_chart(0.0, 1.0);
        let class = classify_triangle(&p1, &p2, &p3).unwrap();
        assert_eq!(class.edge_counts.null, 1);
        assert!(class.proper_name.unwrap().has_null_edge());
        assert!(matches!(
            build_triangle(&p1, &p2, &p3),
            Err(Error::NullEdge { edge: 2, .. })
        ));
        assert!(matches!(
            polar_triangle(&p1, &p2, &p3),
            Err(Error::NoPolarTriangle(_))
        ));
    }

    #[test]
    fn impossible_triangles() {
        let p1 = DeSitterPoint::from_chart(1.0, 0.0);
        let p2 = DeSitterPoint::from_chart(-1.5, 3.1);
        let p3 = DeSitterPoint::from_chart(0.0, 1.5);
        assert!(p1.inner(&p2) < -1.0);
        let class = classify_triangle(&p1, &p2, &p3).unwrap();
        assert_eq!(class.kind, TriangleKind::Impossible);
        assert_eq!(class.proper_name, None);
        assert!(matches!(
            build_triangle(&p1, &p2, &p3),
            Err(Error::ImpossibleEdge { edge: 2, .. })
        ));
    }

    #[test]
    fn tangent_normal_identity_on_fixtures() {
        for tri in fixtures::all() {
            for j in 0..3 {
                assert_abs_diff_eq!(
                    tri.vertex_product(j),
                    tri.normal_product(j),
                    epsilon = 1e-12
                );
                assert!(mink_inner(tri.normal(j), tri.vertex(j).vec()) < 0.0);
            }
        }
    }
}
