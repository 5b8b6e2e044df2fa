//! Exit codes and the mapping from library errors onto them.

use std::f64::consts::TAU;
use std::fmt;

use dstrig_core::Error;

pub const OK: i32 = 0;
/// A verification batch or oracle comparison failed.
pub const CHECK_FAILED: i32 = 1;
pub const INVALID_INPUT: i32 = 2;
pub const DEGENERATE: i32 = 3;
pub const NON_CONTRACTIBLE: i32 = 4;
pub const UNTRACEABLE: i32 = 5;
pub const EXHAUSTED: i32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: String) -> Self {
        Self { code, message }
    }

    pub fn input(message: String) -> Self {
        Self::new(INVALID_INPUT, message)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub fn code_for(e: &Error) -> i32 {
    match e {
        Error::NonFinite
        | Error::NotOnQuadric(_)
        | Error::NotSpaceLikePosition(_)
        | Error::InvalidConfig(_)
        | Error::GridTooSmall(_) => INVALID_INPUT,
        Error::DegenerateTriangle | Error::CoincidentPoints | Error::DegeneratePair => DEGENERATE,
        Error::NonContractible | Error::BoundaryCase(_) => NON_CONTRACTIBLE,
        Error::NullEdge { .. }
        | Error::ImpossibleEdge { .. }
        | Error::NullTangent(_)
        | Error::UnsupportedKind(_)
        | Error::UnsupportedTriangleType(_)
        | Error::NoPolarTriangle(_) => UNTRACEABLE,
        Error::ExhaustedAttempts { .. } => EXHAUSTED,
        _ => CHECK_FAILED,
    }
}

fn explain(e: &Error) -> String {
    match e {
        Error::NonContractible => "spatiolateral triangle is not contractible: its edges do not \
             enclose a region of the surface, so no area can be assigned to it"
            .to_owned(),
        Error::BoundaryCase(sum) => format!(
            "spatiolateral triangle sits on the contractibility boundary (edge lengths sum to \
             {sum}, 2*pi = {TAU}); refusing to assign an area"
        ),
        Error::ExhaustedAttempts { target, attempts } if target.has_null_edge() => format!(
            "no {target} triangle found in {attempts} attempts: a null edge needs <p,q> = 1 \
             exactly, which continuous sampling hits with probability zero"
        ),
        Error::NullEdge { edge, inner } => format!(
            "edge opposite vertex {edge} is null (<p,q> = {inner}); angle, area and plot \
             commands need space-like or time-like edges"
        ),
        Error::ImpossibleEdge { edge, inner } => format!(
            "no geodesic joins the endpoints of the edge opposite vertex {edge} (<p,q> = {inner})"
        ),
        e => e.to_string(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(code_for(&e), explain(&e))
    }
}
