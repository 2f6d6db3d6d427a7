use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntVec, LatticeError};
use crate::rational::{self, Q};

pub const DEFAULT_MAX_POINTS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_points: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            max_points: DEFAULT_MAX_POINTS,
        }
    }
}

/// Points `H a` (integer) with `scale * lo <= H a <= scale * hi`, where `H`
/// is lower-triangular with positive diagonal. Output is in ascending
/// lexicographic order because each coordinate is strictly increasing in the
/// corresponding coefficient once the earlier coefficients are fixed.
pub(super) fn hnf_box(
    hnf: &[IntVec],
    scale: &BigInt,
    lo: &[Q],
    hi: &[Q],
    limits: EnumerationLimits,
) -> Result<Vec<IntVec>, LatticeError> {
    let d = hnf.len();
    if lo.len() != d || hi.len() != d {
        return Err(LatticeError::DimensionMismatch {
            expected: d,
            found: lo.len().min(hi.len()),
        });
    }
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return Err(LatticeError::InvalidBox);
    }
    let s = Q::from_integer(scale.clone());
    let lo: Vec<Q> = lo.iter().map(|x| x * &s).collect();
    let hi: Vec<Q> = hi.iter().map(|x| x * &s).collect();
    let mut out = Vec::new();
    let mut point = vec![BigInt::zero(); d];
    walk(hnf, &lo, &hi, 0, &mut point, &mut out, limits.max_points)?;
    Ok(out)
}

fn walk(
    hnf: &[IntVec],
    lo: &[Q],
    hi: &[Q],
    row: usize,
    partial: &mut IntVec,
    out: &mut Vec<IntVec>,
    cap: usize,
) -> Result<(), LatticeError> {
    let d = hnf.len();
    if row == d {
        if out.len() >= cap {
            return Err(LatticeError::BoxTooLarge { limit: cap });
        }
        out.push(partial.clone());
        return Ok(());
    }
    // partial[row] currently holds the contribution of earlier columns.
    let offset = Q::from_integer(partial[row].clone());
    let pivot = Q::from_integer(hnf[row][row].clone());
    let a_lo = rational::ceil(&((&lo[row] - &offset) / &pivot));
    let a_hi = rational::floor(&((&hi[row] - &offset) / &pivot));
    let mut a = a_lo;
    while a <= a_hi {
        for (r, p) in partial.iter_mut().enumerate().skip(row) {
            *p += &hnf[row][r] * &a;
        }
        let res = walk(hnf, lo, hi, row + 1, partial, out, cap);
        for (r, p) in partial.iter_mut().enumerate().skip(row) {
            *p -= &hnf[row][r] * &a;
        }
        res?;
        a += 1;
    }
    Ok(())
}
