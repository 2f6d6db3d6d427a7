//! Fourier transforms of polygons and point sets, truncated dual-lattice
//! sums and the identities they satisfy.

use thiserror::Error;

use crate::discrete::DiscreteError;
use crate::geometry::GeometryError;
use crate::lattice::LatticeError;

pub mod hp;
pub mod identities;
pub mod sum;
pub mod transforms;
pub mod zeta;

pub use identities::{
    bombieri_siegel_verify, discretized_bs_sides, kolountzakis_check, nonzero_dual_points,
    spectral_volume, KolountzakisCheck, MAX_TERMS,
};
pub use sum::{pairwise_sum, Checkpoint, SpectralReport};
pub use transforms::{
    cube_ft, polygon_ft, simplex_ft, simplex_ft_quadrature, sinc, thickening_ft, PolygonTransform,
};
pub use zeta::{zeta2_demo, zeta4_demo, ZetaDemo};

pub use num_complex::Complex64 as FourierValue;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Discrete(#[from] DiscreteError),
}
