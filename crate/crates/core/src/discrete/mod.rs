//! Multi-tiling of `Z^d` by a finite point set translated by a sublattice.

pub mod cyclotomic;
pub mod oracle;
mod point_set;
pub mod tiling;

use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use crate::lattice::{IntegerLattice, LatticeError};

pub use cyclotomic::CyclotomicPoly;
pub use oracle::{brute_force_auto, brute_force_multiplicity, CoverCounts};
pub use point_set::FinitePointSet;
pub use crate::spectral::discretized_bs_sides;
pub use tiling::{
    check_multitile_b, check_multitile_c, check_vanishing, covariogram_count, exp_sum_is_zero,
    lattice_covariogram_sum, lattice_covariogram_terms, CosetWitness, ExemptionRule,
    TilingVerdict, VanishingCheck,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiscreteError {
    #[error("point set is empty")]
    EmptySet,
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("window half-width {window} does not reach every residue class")]
    WindowTooSmall { window: usize },
    #[error("window half-width {window} exceeds the brute-force work budget")]
    WindowTooLarge { window: usize },
    #[error("lattice determinant too large for root-of-unity arithmetic")]
    DeterminantTooLarge,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("malformed point set JSON: {0}")]
    Parse(String),
}

/// Packing bound for sets whose difference set meets `L` only at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinkowskiCheck {
    /// `(F - F) ∩ L = {0}`.
    pub applicable: bool,
    /// `det L >= |F|`; vacuously true when not applicable.
    pub holds: bool,
    /// `det L = |F|` under the hypothesis, which is exactly the 1-tiling case.
    pub equality: bool,
    pub tiles: bool,
}

impl MinkowskiCheck {
    pub fn to_json(&self) -> Value {
        json!({
            "applicable": self.applicable,
            "holds": self.holds,
            "equality": self.equality,
            "tiles": self.tiles,
        })
    }
}

pub fn discrete_minkowski_check(
    f: &FinitePointSet,
    l: &IntegerLattice,
) -> Result<MinkowskiCheck, DiscreteError> {
    let terms = lattice_covariogram_terms(f, l)?;
    let applicable = terms.len() == 1;
    let size = BigInt::from(f.len());
    let holds = !applicable || l.det() >= &size;
    let equality = applicable && l.det() == &size;
    let tiles = check_multitile_b(f, l)?.is_multitiling;
    if applicable {
        assert!(holds, "det L < |F| although (F - F) ∩ L = {{0}}");
        assert_eq!(equality, tiles, "equality must coincide with a 1-tiling");
    }
    Ok(MinkowskiCheck {
        applicable,
        holds,
        equality,
        tiles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(m: i64) -> IntegerLattice {
        IntegerLattice::from_i64_columns(&[&[m]]).unwrap()
    }

    #[test]
    fn minkowski_examples() {
        let pair = FinitePointSet::from_integers(&[0, 1]).unwrap();
        let c = discrete_minkowski_check(&pair, &line(2)).unwrap();
        assert!(c.applicable && c.holds && c.equality && c.tiles);

        let triple = FinitePointSet::from_integers(&[0, 1, 2]).unwrap();
        assert!(!discrete_minkowski_check(&triple, &line(2)).unwrap().applicable);

        let c = discrete_minkowski_check(&pair, &line(3)).unwrap();
        assert!(c.applicable && c.holds && !c.equality && !c.tiles);
    }
}
