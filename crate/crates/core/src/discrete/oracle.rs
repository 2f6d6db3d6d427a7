//! Direct cover counting, independent of the covariogram and Fourier
//! criteria.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{DiscreteError, FinitePointSet};
use crate::lattice::{IntVec, IntegerLattice};

/// Coefficient half-width used when none is given.
pub const DEFAULT_WINDOW: usize = 3;
const MAX_WINDOW: usize = 1 << 12;
const MAX_WORK: u128 = 50_000_000;

/// Cover counts per residue class of `Z^d / L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCounts {
    /// Residues are the integer points of the box `prod [0, H_ii)` spanned by
    /// the Hermite normal form diagonal.
    pub counts: BTreeMap<IntVec, usize>,
    pub window: usize,
}

impl CoverCounts {
    /// The common count, if every residue is covered equally often.
    pub fn uniform(&self) -> Option<usize> {
        let mut it = self.counts.values();
        let first = *it.next()?;
        it.all(|&c| c == first).then_some(first)
    }
}

/// For each residue `x` in the HNF box, counts pairs `(f, a)` with
/// `f + B a = x` and `a ∈ [-window, window]^d`. Every `f` lands in the box
/// exactly once for some `a`; if the window misses one, the count total falls
/// short and `WindowTooSmall` is returned.
pub fn brute_force_multiplicity(
    f: &FinitePointSet,
    l: &IntegerLattice,
    window: usize,
) -> Result<CoverCounts, DiscreteError> {
    f.check_dim(l.dim())?;
    let d = l.dim();
    let diag: Vec<BigInt> = (0..d).map(|i| l.hnf()[i][i].clone()).collect();
    let mut counts: BTreeMap<IntVec, usize> = BTreeMap::new();
    let mut residue = vec![BigInt::zero(); d];
    enumerate_box(&diag, 0, &mut residue, &mut |r| {
        counts.insert(r.to_vec(), 0);
    });

    let w = window as i64;
    let side = 2 * window as u128 + 1;
    let work = side.saturating_pow(d as u32).saturating_mul(f.len() as u128);
    if work > MAX_WORK {
        return Err(DiscreteError::WindowTooLarge { window });
    }
    let mut coeffs = vec![-w; d];
    let mut total = 0usize;
    loop {
        let a: IntVec = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let shift = l.combine(&a);
        for p in f.iter() {
            let x: IntVec = p.iter().zip(&shift).map(|(u, v)| u + v).collect();
            let inside = x
                .iter()
                .zip(&diag)
                .all(|(xi, hi)| !xi.is_negative() && xi < hi);
            if inside {
                *counts.get_mut(&x).expect("residue box is complete") += 1;
                total += 1;
            }
        }
        if !advance(&mut coeffs, w) {
            break;
        }
    }
    if total != f.len() {
        return Err(DiscreteError::WindowTooSmall { window });
    }
    Ok(CoverCounts { counts, window })
}

/// Starts from [`DEFAULT_WINDOW`] and doubles until every point is placed.
pub fn brute_force_auto(
    f: &FinitePointSet,
    l: &IntegerLattice,
) -> Result<CoverCounts, DiscreteError> {
    let mut window = DEFAULT_WINDOW;
    loop {
        match brute_force_multiplicity(f, l, window) {
            Err(DiscreteError::WindowTooSmall { .. }) if window < MAX_WINDOW => window *= 2,
            other => return other,
        }
    }
}

fn enumerate_box(diag: &[BigInt], i: usize, cur: &mut IntVec, visit: &mut impl FnMut(&[BigInt])) {
    if i == diag.len() {
        visit(cur);
        return;
    }
    let mut v = BigInt::zero();
    while v < diag[i] {
        cur[i] = v.clone();
        enumerate_box(diag, i + 1, cur, visit);
        v += 1;
    }
}

fn advance(coeffs: &mut [i64], w: i64) -> bool {
    for c in coeffs.iter_mut() {
        if *c < w {
            *c += 1;
            return true;
        }
        *c = -w;
    }
    false
}
