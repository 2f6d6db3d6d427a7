use num_complex::Complex64;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::rational::{self, Q};

const LEAF: usize = 8;

/// Tree summation: the result depends only on the input order.
pub fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    if values.len() <= LEAF {
        return values.iter().fold(Complex64::zero(), |a, b| a + b);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// The spectral side truncated at one radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Checkpoint {
    pub radius: f64,
    pub term_count: usize,
    pub rhs: f64,
    pub rhs_imag: f64,
    pub residual: f64,
}

impl Checkpoint {
    pub fn to_json(&self) -> Value {
        json!({
            "radius": self.radius,
            "term_count": self.term_count,
            "rhs": self.rhs,
            "rhs_imag": self.rhs_imag,
            "residual": self.residual,
        })
    }
}

/// An exact left-hand side against a dual-lattice sum truncated at a
/// sequence of doubling radii.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub lhs_exact: Q,
    pub lhs: f64,
    pub rhs_truncated: f64,
    pub rhs_imag: f64,
    pub radius: f64,
    pub term_count: usize,
    /// `lhs - rhs` at the final radius.
    pub residual: f64,
    /// The last doubling moved the residual by less than [`CONVERGENCE_TOL`].
    pub converged: bool,
    pub checkpoints: Vec<Checkpoint>,
    pub warnings: Vec<String>,
}

pub const CONVERGENCE_TOL: f64 = 1e-9;

/// Truncated spectral terms sorted by frequency norm, ready to be cut at
/// several radii.
pub(crate) struct SpectralSeries {
    /// `(|ξ|, term)` in ascending norm.
    pub terms: Vec<(f64, Complex64)>,
    /// Added once, outside the truncation (the `ξ = 0` term if any).
    pub base: Complex64,
    pub scale: f64,
}

impl SpectralSeries {
    fn value_at(&self, radius: f64) -> (usize, Complex64) {
        let count = self.terms.partition_point(|(n, _)| *n <= radius);
        let values: Vec<Complex64> = self.terms[..count].iter().map(|(_, t)| *t).collect();
        (count, self.base + pairwise_sum(&values) * self.scale)
    }

    /// Checkpoints at `radius / 8, / 4, / 2, / 1`. With `monotone`, a residual
    /// that grows between checkpoints raises a warning.
    pub fn report(&self, lhs_exact: Q, radius: f64, monotone: bool) -> SpectralReport {
        let lhs = rational::to_f64(&lhs_exact);
        let checkpoints: Vec<Checkpoint> = [8.0, 4.0, 2.0, 1.0]
            .iter()
            .map(|div| {
                let r = radius / div;
                let (term_count, value) = self.value_at(r);
                Checkpoint {
                    radius: r,
                    term_count,
                    rhs: value.re,
                    rhs_imag: value.im,
                    residual: lhs - value.re,
                }
            })
            .collect();
        let mut warnings = Vec::new();
        if monotone {
            for w in checkpoints.windows(2) {
                if w[1].residual > w[0].residual + 1e-12 {
                    warnings.push(format!(
                        "nonconvergence: residual grew from {:e} to {:e} between radius {} and {}",
                        w[0].residual, w[1].residual, w[0].radius, w[1].radius
                    ));
                }
            }
        }
        let last = checkpoints.last().expect("four checkpoints").clone();
        let prev = &checkpoints[checkpoints.len() - 2];
        SpectralReport {
            lhs_exact,
            lhs,
            rhs_truncated: last.rhs,
            rhs_imag: last.rhs_imag,
            radius,
            term_count: last.term_count,
            residual: last.residual,
            converged: (last.residual - prev.residual).abs() < CONVERGENCE_TOL,
            checkpoints,
            warnings,
        }
    }
}

impl SpectralReport {
    pub fn to_json(&self) -> Value {
        json!({
            "lhs_exact": rational::to_json(&self.lhs_exact),
            "lhs": self.lhs,
            "rhs_truncated": self.rhs_truncated,
            "rhs_imag": self.rhs_imag,
            "radius": self.radius,
            "term_count": self.term_count,
            "residual": self.residual,
            "converged": self.converged,
            "checkpoints": self.checkpoints.iter().map(Checkpoint::to_json).collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }
}
