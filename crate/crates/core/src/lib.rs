//! Exact and spectral checks for translational multi-tiling.
//!
//! * [`lattice`]: integer and rational lattices, duals, enumeration.
//! * [`discrete`]: finite sets of integer points tiling `Z^d` with a sublattice.
//! * [`geometry`]: exact rational polygons, intersection areas, covariogram sums.
//! * [`spectral`]: Fourier transforms and truncated dual-lattice sums.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod discrete;
pub mod geometry;
pub mod lattice;
pub mod rational;
pub mod spectral;
