use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::cyclotomic::CyclotomicPoly;
use super::{DiscreteError, FinitePointSet};
use crate::lattice::{DualCosetRep, IntVec, IntegerLattice};
use crate::rational::{self, Q};

/// Outcome of a multi-tiling test, shared by the discrete and polygon checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingVerdict {
    pub is_multitiling: bool,
    /// `|F| / det L` (or `vol Q / det L`); an integer whenever tiling.
    pub multiplicity: Q,
    /// Exact covariogram lattice sum.
    pub lhs_sum: Q,
    /// `multiplicity * |F|` (or `vol^2 Q / det L`).
    pub rhs_target: Q,
    pub witnesses: Vec<CosetWitness>,
}

impl TilingVerdict {
    /// The integer multiplicity, when the verdict is affirmative.
    pub fn k(&self) -> Option<BigInt> {
        (self.is_multitiling && self.multiplicity.is_integer()).then(|| self.multiplicity.to_integer())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "is_multitiling": self.is_multitiling,
            "multiplicity": rational::to_json(&self.multiplicity),
            "lhs_sum": rational::to_json(&self.lhs_sum),
            "rhs_target": rational::to_json(&self.rhs_target),
            "witnesses": self.witnesses.iter().map(CosetWitness::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Result of the exponential-sum test at one class of `L* / Z^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetWitness {
    pub rep: DualCosetRep,
    pub vanishes: bool,
    /// Whether the selected [`ExemptionRule`] skips this class.
    pub exempt: bool,
}

impl CosetWitness {
    pub fn to_json(&self) -> Value {
        json!({
            "rep": self.rep.to_json(),
            "vanishes": self.vanishes,
            "exempt": self.exempt,
        })
    }
}

/// `|F ∩ (F + n)|`.
pub fn covariogram_count(f: &FinitePointSet, n: &[BigInt]) -> Result<usize, DiscreteError> {
    f.check_dim(n.len())?;
    Ok(count_unchecked(f, n))
}

fn count_unchecked(f: &FinitePointSet, n: &[BigInt]) -> usize {
    let mut shifted: IntVec = vec![BigInt::zero(); n.len()];
    f.iter()
        .filter(|x| {
            for ((s, a), b) in shifted.iter_mut().zip(x.iter()).zip(n) {
                *s = a - b;
            }
            f.contains(&shifted)
        })
        .count()
}

/// Nonzero terms `(n, |F ∩ (F+n)|)` for `n ∈ (F - F) ∩ L`, in ascending
/// lexicographic order of `n`.
pub fn lattice_covariogram_terms(
    f: &FinitePointSet,
    l: &IntegerLattice,
) -> Result<Vec<(IntVec, usize)>, DiscreteError> {
    f.check_dim(l.dim())?;
    let diffs = f.difference_set();
    let mut in_lattice = Vec::new();
    for n in diffs.iter() {
        if l.contains(n)? {
            in_lattice.push(n.clone());
        }
    }
    Ok(in_lattice
        .into_par_iter()
        .map(|n| {
            let c = count_unchecked(f, &n);
            (n, c)
        })
        .collect())
}

/// `sum_{n ∈ (F-F) ∩ L} |F ∩ (F+n)|`, which is at least `|F|^2 / det L`.
pub fn lattice_covariogram_sum(
    f: &FinitePointSet,
    l: &IntegerLattice,
) -> Result<BigInt, DiscreteError> {
    let total: BigInt = lattice_covariogram_terms(f, l)?
        .iter()
        .map(|(_, c)| BigInt::from(*c))
        .sum();
    let size = BigInt::from(f.len());
    assert!(
        &total * l.det() >= &size * &size,
        "covariogram lattice sum fell below |F|^2 / det L"
    );
    Ok(total)
}

/// `|F| / det L`.
pub fn multiplicity(f: &FinitePointSet, l: &IntegerLattice) -> Q {
    Q::new(BigInt::from(f.len()), l.det().clone())
}

/// The covariogram-sum criterion: tiling iff `det L` divides `|F|` and the
/// lattice covariogram sum equals `|F|^2 / det L`.
pub fn check_multitile_b(
    f: &FinitePointSet,
    l: &IntegerLattice,
) -> Result<TilingVerdict, DiscreteError> {
    let lhs = lattice_covariogram_sum(f, l)?;
    let k = multiplicity(f, l);
    let target = &k * Q::from_integer(BigInt::from(f.len()));
    let lhs = Q::from_integer(lhs);
    Ok(TilingVerdict {
        is_multitiling: k.is_integer() && lhs == target,
        multiplicity: k,
        lhs_sum: lhs,
        rhs_target: target,
        witnesses: Vec::new(),
    })
}

/// Exponents `M <r, n> mod M` for the points of `F`.
pub fn coset_exponents(f: &FinitePointSet, rep: &DualCosetRep) -> Vec<u64> {
    let m = &rep.denominator;
    let num = rep.scaled_numerators();
    f.iter()
        .map(|n| {
            let dot: BigInt = num.iter().zip(n).map(|(a, b)| a * b).sum();
            dot.mod_floor(m)
                .to_u64()
                .expect("exponent is below the lattice determinant")
        })
        .collect()
}

/// Exact test of `sum_{n ∈ F} exp(2 pi i <r, n>) = 0`.
pub fn exp_sum_is_zero(f: &FinitePointSet, rep: &DualCosetRep) -> Result<bool, DiscreteError> {
    f.check_dim(rep.vector.len())?;
    let m = rep
        .denominator
        .to_u64()
        .ok_or(DiscreteError::DeterminantTooLarge)?;
    Ok(CyclotomicPoly::from_exponents(m, coset_exponents(f, rep)).is_zero())
}

/// Which classes of `L* / Z^d` must have a vanishing exponential sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExemptionRule {
    /// Every nonzero class. Equivalent to tiling once `|F| / det L` is an
    /// integer.
    #[default]
    AllNonzeroCosets,
    /// Only classes whose reduced representative has no integer coordinate.
    NoIntegerCoordinate,
}

/// Outcome of the exponential-sum criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingCheck {
    pub holds: bool,
    pub rule: ExemptionRule,
    pub witnesses: Vec<CosetWitness>,
}

/// Tests the exponential sums over the nonzero classes of `L* / Z^d`
/// selected by `rule`. This alone does not encode integrality of
/// `|F| / det L`; see [`check_multitile_c`].
pub fn check_vanishing(
    f: &FinitePointSet,
    l: &IntegerLattice,
    rule: ExemptionRule,
) -> Result<VanishingCheck, DiscreteError> {
    f.check_dim(l.dim())?;
    let reps: Vec<DualCosetRep> = l
        .dual_coset_reps()
        .into_iter()
        .filter(|r| !r.is_zero())
        .collect();
    let witnesses = reps
        .into_par_iter()
        .map(|rep| {
            let vanishes = exp_sum_is_zero(f, &rep)?;
            let exempt = match rule {
                ExemptionRule::AllNonzeroCosets => false,
                ExemptionRule::NoIntegerCoordinate => !rep.all_coords_noninteger,
            };
            Ok(CosetWitness {
                rep,
                vanishes,
                exempt,
            })
        })
        .collect::<Result<Vec<_>, DiscreteError>>()?;
    let holds = witnesses.iter().all(|w| w.exempt || w.vanishes);
    Ok(VanishingCheck {
        holds,
        rule,
        witnesses,
    })
}

/// The exponential-sum criterion combined with the integrality gate
/// `|F| / det L ∈ Z_+`.
pub fn check_multitile_c(
    f: &FinitePointSet,
    l: &IntegerLattice,
    rule: ExemptionRule,
) -> Result<TilingVerdict, DiscreteError> {
    let check = check_vanishing(f, l, rule)?;
    let k = multiplicity(f, l);
    let target = &k * Q::from_integer(BigInt::from(f.len()));
    let lhs = Q::from_integer(lattice_covariogram_sum(f, l)?);
    Ok(TilingVerdict {
        is_multitiling: k.is_integer() && check.holds,
        multiplicity: k,
        lhs_sum: lhs,
        rhs_target: target,
        witnesses: check.witnesses,
    })
}
