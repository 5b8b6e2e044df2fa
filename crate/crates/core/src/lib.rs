//! Triangles on the 2-dimensional de Sitter plane `<p,p> = 1` in Minkowski
//! space of signature (-,+,+).
//!
//! The crate classifies vertex triples by the causal character of their
//! edges, computes interior angles and complex pseudo-angles, and evaluates
//! the Girard-type area formulas of the four triangle types without null
//! edges. [`oracle`] integrates the area element directly and serves as an
//! independent check of those formulas.
//!
//! ```
//! use dstrig_core::{fixtures, girard_area, Formula};
//!
//! let tri = fixtures::ch0();
//! let area = girard_area(&tri).unwrap();
//! assert_eq!(area.formula_used, Formula::Chorosceles);
//! assert!((area.real_area - 0.676611707914951).abs() < 1e-12);
//! ```

pub mod error;
pub mod fixtures;
pub mod generator;
pub mod geodesic;
pub mod girard;
pub mod lorentz;
pub mod minkowski;
pub mod oracle;
pub mod taxonomy;
pub mod verify;

pub use error::{Error, Result};
pub use generator::{random_triangle, GeneratorConfig, TriangleSampler};
pub use geodesic::{
    classify_segment, classify_span, edge_length, geodesic_point, project_to_quadric,
    tangent_toward, DeSitterPoint, GeodesicSegment, SegmentKind,
};
pub use girard::{
    complex_area, girard_area, girard_area_from_products, interior_angles, AngleSet, AreaResult,
    Formula,
};
pub use lorentz::LorentzMap;
pub use minkowski::{
    causal_type, lorentz_cross, mink_inner, pseudo_angle, pseudo_norm, real_angle, same_time_cone,
    Branch, CausalType, ComplexScalar, MinkVec3, PseudoAngle, EPS_NULL, EPS_UNIT, EPS_ZERO,
};
pub use oracle::{integrate_area, integrate_area_from, midpoint_area, OracleResult};
pub use taxonomy::{
    build_triangle, classify_triangle, distinguished_vertex, is_contractible, polar_triangle,
    DeSitterTriangle, EdgeCounts, PolarTriangle, PolarVertexKind, ProperName, TriangleClass,
    TriangleKind,
};
pub use verify::{verify_type, Invariant, TypeReport, VerifyOptions};
