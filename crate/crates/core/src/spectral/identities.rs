//! Poisson-summation identities checked against exact lattice sums.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::sum::{SpectralReport, SpectralSeries};
use super::transforms::{cis_rational, exp_sum_norm_sqr, sinc, PolygonTransform};
use super::SpectralError;
use crate::discrete::{lattice_covariogram_sum, FinitePointSet};
use crate::geometry::{continuous_covariogram_sum, shifted_covariogram_sum, Point, RationalPolygon};
use crate::lattice::{norm2, EnumerationLimits, IntegerLattice, QVec, RationalLattice};
use crate::rational::{self, Q};

/// Largest number of dual frequencies a single truncation may use.
pub const MAX_TERMS: usize = 1_000_000;

/// Nonzero dual vectors with `|ξ| <= radius`, ascending in norm.
pub fn nonzero_dual_points(l: &RationalLattice, radius: f64) -> Result<Vec<(f64, QVec)>, SpectralError> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(SpectralError::InvalidArgument(format!("radius must be positive, got {radius}")));
    }
    let r = rational::from_f64(radius).expect("finite radius");
    let pts = l.dual_in_ball(&r, EnumerationLimits::default())?;
    if pts.len() > MAX_TERMS {
        return Err(SpectralError::InvalidArgument(format!(
            "radius {radius} needs {} dual terms, above the cap of {MAX_TERMS}",
            pts.len()
        )));
    }
    Ok(pts
        .into_iter()
        .filter(|p| !p.iter().all(Zero::is_zero))
        .map(|p| (rational::to_f64(&norm2(&p)).sqrt(), p))
        .collect())
}

fn dot(a: &[Q], b: &Point) -> Q {
    &a[0] * &b[0] + &a[1] * &b[1]
}

fn cross_terms(
    a: &PolygonTransform,
    b: &PolygonTransform,
    x: &Point,
    freqs: &[(f64, QVec)],
) -> Vec<(f64, Complex64)> {
    freqs
        .par_iter()
        .map(|(norm, xi)| {
            let term = a.eval_exact(xi) * b.eval_exact(xi).conj() * cis_rational(&dot(xi, x));
            (*norm, term)
        })
        .collect()
}

/// `sum_n vol(A ∩ (B + x + n))` against
/// `(1/det L) sum_{ξ ∈ L*} 1̂_A(ξ) conj(1̂_B(ξ)) e^{2πi<ξ,x>}`.
pub fn bombieri_siegel_verify(
    a: &RationalPolygon,
    b: &RationalPolygon,
    l: &RationalLattice,
    x: &Point,
    radius: f64,
) -> Result<SpectralReport, SpectralError> {
    let lhs = shifted_covariogram_sum(a, b, l, x)?.total;
    let freqs = nonzero_dual_points(l, radius)?;
    let det = rational::to_f64(l.det());
    let series = SpectralSeries {
        terms: cross_terms(&PolygonTransform::new(a), &PolygonTransform::new(b), x, &freqs),
        base: Complex64::new(rational::to_f64(&(a.area() * b.area() / l.det())), 0.0),
        scale: 1.0 / det,
    };
    let monotone = a == b && x.iter().all(Zero::is_zero);
    Ok(series.report(lhs, radius, monotone))
}

/// `vol A · vol B = -Re sum_{ξ ≠ 0} 1̂_A(ξ) conj(1̂_B(ξ)) e^{2πi<ξ,x>}`,
/// valid when `A` misses every translate `B + x + n` and every `B + n`,
/// `n ≠ 0`, up to measure zero.
pub fn spectral_volume(
    a: &RationalPolygon,
    b: &RationalPolygon,
    l: &RationalLattice,
    x: &Point,
    radius: f64,
) -> Result<SpectralReport, SpectralError> {
    let shifted = shifted_covariogram_sum(a, b, l, x)?;
    if !shifted.total.is_zero() {
        return Err(SpectralError::HypothesisViolated(format!(
            "A meets translates of B + x in area {}",
            rational::format(&shifted.total)
        )));
    }
    let unshifted = continuous_covariogram_sum(a, b, l)?;
    if let Some(t) = unshifted.terms.iter().find(|t| !t.n.iter().all(Zero::is_zero)) {
        return Err(SpectralError::HypothesisViolated(format!(
            "A meets B + ({}, {}) in area {}",
            rational::format(&t.n[0]),
            rational::format(&t.n[1]),
            rational::format(&t.value)
        )));
    }
    let freqs = nonzero_dual_points(l, radius)?;
    let series = SpectralSeries {
        terms: cross_terms(&PolygonTransform::new(a), &PolygonTransform::new(b), x, &freqs),
        base: Complex64::zero(),
        scale: -1.0,
    };
    Ok(series.report(a.area() * b.area(), radius, false))
}

/// Largest `|1̂_Q(ξ)|` over nonzero dual frequencies in a ball.
#[derive(Debug, Clone, PartialEq)]
pub struct KolountzakisCheck {
    pub vanishes: bool,
    pub worst: f64,
    pub worst_at: Option<QVec>,
    pub term_count: usize,
}

impl KolountzakisCheck {
    pub fn to_json(&self) -> Value {
        json!({
            "vanishes": self.vanishes,
            "worst": self.worst,
            "worst_at": self.worst_at.as_ref().map(|v| v.iter().map(rational::to_json).collect::<Vec<_>>()),
            "term_count": self.term_count,
        })
    }
}

pub fn kolountzakis_check(
    q: &RationalPolygon,
    l: &RationalLattice,
    radius: f64,
    tol: f64,
) -> Result<KolountzakisCheck, SpectralError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(SpectralError::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if l.dim() != 2 {
        return Err(crate::geometry::GeometryError::DimensionMismatch { expected: 2, found: l.dim() }.into());
    }
    let freqs = nonzero_dual_points(l, radius)?;
    let ft = PolygonTransform::new(q);
    let values: Vec<f64> = freqs.par_iter().map(|(_, xi)| ft.eval_exact(xi).norm()).collect();
    let worst_idx = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i);
    let worst = worst_idx.map_or(0.0, |i| values[i]);
    Ok(KolountzakisCheck {
        vanishes: worst < tol,
        worst,
        worst_at: worst_idx.map(|i| freqs[i].1.clone()),
        term_count: freqs.len(),
    })
}

/// Both sides for the thickening `F + eps·[-1/2,1/2]^d`, divided by
/// `eps^d`: the exact covariogram sum of `F` against
/// `(eps^d / det L) sum_ξ prod_k sinc^2(eps ξ_k) |sum_{n ∈ F} e^{2πi<ξ,n>}|^2`.
pub fn discretized_bs_sides(
    f: &FinitePointSet,
    l: &IntegerLattice,
    eps: &Q,
    radius: f64,
) -> Result<SpectralReport, SpectralError> {
    if !eps.is_positive() || *eps > Q::from_integer(BigInt::from(1)) {
        return Err(SpectralError::InvalidArgument(format!(
            "eps must lie in (0, 1], got {}",
            rational::format(eps)
        )));
    }
    let lhs = Q::from_integer(lattice_covariogram_sum(f, l)?);
    let rl = l.to_rational();
    let freqs = nonzero_dual_points(&rl, radius)?;
    let e = rational::to_f64(eps);
    let vol = e.powi(f.dim() as i32);
    let det = rational::to_f64(rl.det());
    let size = f.len() as f64;
    let terms = freqs
        .par_iter()
        .map(|(norm, xi)| {
            let damping: f64 = xi.iter().map(|c| sinc(rational::to_f64(&(eps * c))).powi(2)).product();
            let term = if damping == 0.0 { 0.0 } else { damping * exp_sum_norm_sqr(f, xi) };
            (*norm, Complex64::new(term, 0.0))
        })
        .collect();
    let series = SpectralSeries {
        terms,
        base: Complex64::new(vol * size * size / det, 0.0),
        scale: vol / det,
    };
    Ok(series.report(lhs, radius, true))
}
