//! `ζ(2)` and `ζ(4)` recovered from Parseval sums of simplex transforms.

use std::f64::consts::PI;

use serde_json::{json, Value};

use super::transforms::simplex_ft;

#[derive(Debug, Clone, PartialEq)]
pub struct ZetaDemo {
    pub order: u32,
    pub terms: u64,
    /// Truncated spectral sum the estimate is read from.
    pub partial: f64,
    pub estimate: f64,
    pub target: f64,
    pub err: f64,
    /// `vol Δ` minus the truncated right-hand side of the Parseval identity.
    pub identity_residual: f64,
    /// The exact identity rearranged for `ζ`, minus the closed form.
    pub consistency: f64,
}

impl ZetaDemo {
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "terms": self.terms,
            "partial": self.partial,
            "estimate": self.estimate,
            "target": self.target,
            "err": self.err,
            "identity_residual": self.identity_residual,
            "consistency": self.consistency,
        })
    }
}

/// `1/2 = 1/4 + sum_{ξ ≠ 0} |1̂_{Δ_2}(ξ)|^2` over the frequencies
/// `(0,±k), (±k,0), (±k,±k)`, the only nonzero integer points where the
/// triangle transform does not vanish.
pub fn zeta2_demo(k_max: u64) -> ZetaDemo {
    assert!(k_max >= 1, "need at least one term");
    let per_k: Vec<f64> = (1..=k_max)
        .map(|k| {
            let k = k as f64;
            [[0.0, k], [0.0, -k], [k, 0.0], [-k, 0.0], [k, k], [-k, -k]]
                .iter()
                .map(|xi| simplex_ft(xi).norm_sqr())
                .sum()
        })
        .collect();
    let partial = tail_first_sum(&per_k);
    let estimate = partial * 2.0 * PI * PI / 3.0;
    let target = PI * PI / 6.0;
    ZetaDemo {
        order: 2,
        terms: k_max,
        partial,
        estimate,
        target,
        err: (estimate - target).abs(),
        identity_residual: 0.5 - (0.25 + partial),
        consistency: (0.5 - 0.25) * 2.0 * PI * PI / 3.0 - target,
    }
}

/// The tetrahedron identity `1/6 = 11/72 + (5 / 4π^4) ζ(4)`. For each `k`,
/// `1/k^4 = 4π^4 |1̂_{Δ_3}(0,k,k)|^2`; the axis family `(0,0,k)` and the
/// diagonal `(k,k,k)` are evaluated alongside as a cross-check on the
/// decomposition, and must agree in modulus.
pub fn zeta4_demo(k_max: u64) -> ZetaDemo {
    assert!(k_max >= 1, "need at least one term");
    let pi4 = PI.powi(4);
    let per_k: Vec<f64> = (1..=k_max)
        .map(|k| {
            let k = k as f64;
            let plus = simplex_ft(&[0.0, k, k]).norm_sqr();
            let minus = simplex_ft(&[0.0, -k, -k]).norm_sqr();
            let axis = simplex_ft(&[0.0, 0.0, k]).norm_sqr();
            let diagonal = simplex_ft(&[k, k, k]).norm_sqr();
            debug_assert!((axis - diagonal).abs() <= 1e-12 * axis);
            debug_assert!((plus - minus).abs() <= 1e-12 * plus);
            2.0 * pi4 * (plus + minus)
        })
        .collect();
    let estimate = tail_first_sum(&per_k);
    let target = pi4 / 90.0;
    ZetaDemo {
        order: 4,
        terms: k_max,
        partial: estimate,
        estimate,
        target,
        err: (estimate - target).abs(),
        identity_residual: 1.0 / 6.0 - (11.0 / 72.0 + 5.0 / (4.0 * pi4) * estimate),
        consistency: (1.0 / 6.0 - 11.0 / 72.0) * 4.0 * pi4 / 5.0 - target,
    }
}

/// Sum from the smallest terms upward.
fn tail_first_sum(values: &[f64]) -> f64 {
    values.iter().rev().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta2_values() {
        let one = zeta2_demo(1);
        assert!((one.estimate - 1.0).abs() < 1e-14);
        assert!((one.err - 0.644934).abs() < 1e-6);
        let ten = zeta2_demo(10);
        assert!((ten.estimate - 1.549768).abs() < 1e-6);
        assert!((ten.err - 0.0951663).abs() < 1e-6);
        assert!(zeta2_demo(1000).err < 1.1e-3);
        assert!(one.consistency.abs() < 1e-14);
    }

    #[test]
    fn zeta4_values() {
        let one = zeta4_demo(1);
        assert!((one.estimate - 1.0).abs() < 1e-13);
        assert!((one.err - 0.0823232).abs() < 1e-6);
        assert!(zeta4_demo(100).err < 1e-6);
        assert!(one.consistency.abs() < 1e-13);
        let r = zeta4_demo(100);
        assert!(r.identity_residual.abs() < 1e-8);
    }
}
