//! Exact rational polygons in the plane and their lattice covariograms.

use thiserror::Error;

use crate::lattice::LatticeError;
use crate::rational::Q;

pub mod builtins;
pub mod clip;
pub mod covariogram;
pub mod difference_body;
pub mod polygon;
pub mod triangulate;
pub mod vdc;

pub use builtins::{builtin, BUILTIN_NAMES};
pub use clip::Triangulation;
pub use covariogram::{
    check_multitile_polygon, classify_difference_points, continuous_covariogram_sum, cover_count,
    interior_covariogram_sum, interior_lattice_points, intersection_area, shifted_covariogram_sum,
    ClassifiedPoint, CovariogramSum, CovariogramTerm,
};
pub use difference_body::{convex_hull, DifferenceBody};
pub use polygon::{Location, RationalPolygon};
pub use triangulate::triangulate;
pub use vdc::{
    compare_difference_with_double, symmetric_difference_body_check, van_der_corput_counts,
    van_der_corput_symmetric, DoublingCheck, VanDerCorputCounts,
};

pub type Point = [Q; 2];
pub type Triangle = [Point; 3];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("polygon is not centrally symmetric about the origin")]
    NotCentrallySymmetric,
    #[error("polygon is not convex")]
    NotConvex,
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown built-in polygon `{0}`")]
    UnknownBuiltin(String),
}
