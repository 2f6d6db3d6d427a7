//! Closed-form Fourier transforms `1̂_A(ξ) = ∫_A e^{-2πi<ξ,x>} dx`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::sum::pairwise_sum;
use crate::discrete::FinitePointSet;
use crate::geometry::polygon::sub;
use crate::geometry::{triangulate, Point, RationalPolygon};
use crate::rational::{self, Q};

/// Node separations below this switch the simplex transform to quadrature.
pub const CONFLUENCE_THRESHOLD: f64 = 1e-6;

/// `sin(πt) / (πt)`, with value 1 at the origin.
pub fn sinc(t: f64) -> f64 {
    if t == 0.0 {
        return 1.0;
    }
    if t.fract() == 0.0 {
        return 0.0;
    }
    let x = PI * t;
    if x.abs() < 1e-4 {
        1.0 - x * x / 6.0
    } else {
        (PI * reduce_half(t)).sin() / x
    }
}

/// `t` shifted by an even integer into `[-1, 1]`, so `sin(π·)` keeps its value.
fn reduce_half(t: f64) -> f64 {
    t - 2.0 * (t / 2.0).round()
}

/// `e^{-2πi t}` with the argument reduced modulo 1 first.
pub fn cis_neg(t: f64) -> Complex64 {
    let r = t - t.round();
    Complex64::from_polar(1.0, -2.0 * PI * r)
}

/// `e^{2πi q}` for rational `q`, reduced exactly modulo 1.
pub fn cis_rational(q: &Q) -> Complex64 {
    let frac = q - Q::from_integer(rational::floor(q));
    Complex64::from_polar(1.0, 2.0 * PI * rational::to_f64(&frac))
}

/// Transform of the cube `eps·[-1/2, 1/2]^d`.
pub fn cube_ft(xi: &[f64], eps: f64) -> Complex64 {
    let v: f64 = xi.iter().map(|&x| eps * sinc(eps * x)).product();
    Complex64::new(v, 0.0)
}

/// Transform of `F + eps·[-1/2, 1/2]^d`.
pub fn thickening_ft(f: &FinitePointSet, xi: &[f64], eps: f64) -> Complex64 {
    let phases: Vec<Complex64> = f
        .iter()
        .map(|a| {
            let t: f64 = xi.iter().zip(a).map(|(x, n)| x * n.to_f64().unwrap_or(f64::NAN)).sum();
            cis_neg(t)
        })
        .collect();
    cube_ft(xi, eps) * pairwise_sum(&phases)
}

/// `|sum_{a ∈ F} e^{2πi<ξ,a>}|^2` for rational `ξ`, with exact phases.
pub fn exp_sum_norm_sqr(f: &FinitePointSet, xi: &[Q]) -> f64 {
    let phases: Vec<Complex64> = f
        .iter()
        .map(|a| {
            let t: Q = xi.iter().zip(a).map(|(x, n)| x * Q::from_integer(n.clone())).sum();
            cis_rational(&t)
        })
        .collect();
    pairwise_sum(&phases).norm_sqr()
}

/// Transform of the standard simplex `{x >= 0, sum x <= 1}` in dimension
/// `xi.len()`.
///
/// Uses divided differences of `t -> e^{-2πit}` at the nodes `0, ξ_1, ..,
/// ξ_d`, with derivatives at repeated nodes. Nodes that nearly coincide
/// without being equal go to [`simplex_ft_quadrature`].
pub fn simplex_ft(xi: &[f64]) -> Complex64 {
    assert!(!xi.is_empty(), "simplex dimension must be positive");
    let mut nodes = Vec::with_capacity(xi.len() + 1);
    nodes.push(0.0);
    nodes.extend_from_slice(xi);
    nodes.sort_by(f64::total_cmp);
    let near_confluent = nodes.windows(2).any(|w| {
        let gap = w[1] - w[0];
        gap > 0.0 && gap < CONFLUENCE_THRESHOLD
    });
    if near_confluent {
        return simplex_ft_quadrature(xi);
    }
    let d = xi.len();
    let a = Complex64::new(0.0, -2.0 * PI);
    let dd = divided_difference(&nodes, a);
    dd / a.powi(d as i32)
}

/// `g[x_0, .., x_n]` for `g(t) = e^{a t}` at sorted nodes.
fn divided_difference(nodes: &[f64], a: Complex64) -> Complex64 {
    let n = nodes.len();
    // `table[i]` holds g[x_i, .., x_{i+level}].
    let mut table: Vec<Complex64> = nodes.iter().map(|&x| cis_neg(x)).collect();
    for level in 1..n {
        for i in 0..n - level {
            let (lo, hi) = (nodes[i], nodes[i + level]);
            table[i] = if lo == hi {
                a.powi(level as i32) / factorial(level) * cis_neg(lo)
            } else {
                (table[i + 1] - table[i]) / (hi - lo)
            };
        }
    }
    table[0]
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn gauss_legendre_16() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(16))
}

/// Nodes and weights on `[-1, 1]`, by Newton iteration on `P_n`.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            deriv = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let step = p1 / deriv;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * deriv * deriv);
    }
    (nodes, weights)
}

/// `∫_0^r e^{c t} dt`.
fn exp_integral(c: Complex64, r: f64) -> Complex64 {
    let z = c * r;
    if z.norm() < 1e-3 {
        let mut term = Complex64::new(r, 0.0);
        let mut total = term;
        for m in 1..12 {
            term = term * z / (m + 1) as f64;
            total += term;
        }
        total
    } else {
        (z.exp() - 1.0) / c
    }
}

/// Composite Gauss–Legendre over the simplex, nested one coordinate at a
/// time with the innermost integral in closed form. Panels double until two
/// passes agree to `1e-13`.
pub fn simplex_ft_quadrature(xi: &[f64]) -> Complex64 {
    assert!(!xi.is_empty(), "simplex dimension must be positive");
    let scale = xi.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let mut panels = (scale.ceil() as usize).max(2);
    let mut prev = nested(xi, panels);
    for _ in 0..6 {
        panels *= 2;
        let next = nested(xi, panels);
        if (next - prev).norm() < 1e-13 {
            return next;
        }
        prev = next;
    }
    prev
}

fn nested(xi: &[f64], panels: usize) -> Complex64 {
    let a = Complex64::new(0.0, -2.0 * PI);
    level(xi, 0, 1.0, Complex64::zero(), a, panels)
}

fn level(xi: &[f64], k: usize, remaining: f64, phase: Complex64, a: Complex64, panels: usize) -> Complex64 {
    let c = a * xi[k];
    if k + 1 == xi.len() {
        return phase.exp() * exp_integral(c, remaining);
    }
    let (nodes, weights) = gauss_legendre_16();
    let h = remaining / panels as f64;
    let mut total = Complex64::zero();
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        for (x, w) in nodes.iter().zip(weights) {
            let t = mid + 0.5 * h * x;
            total += level(xi, k + 1, remaining - t, phase + c * t, a, panels) * (0.5 * h * w);
        }
    }
    total
}

struct Piece {
    origin: Point,
    edges: [Point; 2],
    jacobian: f64,
}

/// A triangulated polygon ready for repeated transform evaluation. Each
/// triangle `v_0 + M Δ_2` contributes `|det M| e^{-2πi<ξ,v_0>} 1̂_Δ(Mᵀξ)`.
pub struct PolygonTransform {
    pieces: Vec<Piece>,
}

impl PolygonTransform {
    pub fn new(p: &RationalPolygon) -> Self {
        let pieces = triangulate(p)
            .into_iter()
            .map(|[v0, v1, v2]| {
                let e1 = sub(&v1, &v0);
                let e2 = sub(&v2, &v0);
                let det = &e1[0] * &e2[1] - &e1[1] * &e2[0];
                Piece {
                    jacobian: rational::to_f64(&rational::abs(&det)),
                    origin: v0,
                    edges: [e1, e2],
                }
            })
            .collect();
        Self { pieces }
    }

    /// Evaluation at a rational frequency; phases and node coordinates are
    /// formed exactly before rounding.
    pub fn eval_exact(&self, xi: &[Q]) -> Complex64 {
        assert_eq!(xi.len(), 2, "polygon transforms are planar");
        let dot = |p: &Point| &xi[0] * &p[0] + &xi[1] * &p[1];
        let parts: Vec<Complex64> = self
            .pieces
            .iter()
            .map(|piece| {
                let shift = cis_rational(&-dot(&piece.origin));
                let nodes = [
                    rational::to_f64(&dot(&piece.edges[0])),
                    rational::to_f64(&dot(&piece.edges[1])),
                ];
                shift * simplex_ft(&nodes) * piece.jacobian
            })
            .collect();
        pairwise_sum(&parts)
    }

    pub fn eval(&self, xi: &[f64]) -> Complex64 {
        assert_eq!(xi.len(), 2, "polygon transforms are planar");
        let dot = |p: &Point| xi[0] * rational::to_f64(&p[0]) + xi[1] * rational::to_f64(&p[1]);
        let parts: Vec<Complex64> = self
            .pieces
            .iter()
            .map(|piece| {
                let nodes = [dot(&piece.edges[0]), dot(&piece.edges[1])];
                cis_neg(dot(&piece.origin)) * simplex_ft(&nodes) * piece.jacobian
            })
            .collect();
        pairwise_sum(&parts)
    }
}

pub fn polygon_ft(p: &RationalPolygon, xi: &[f64]) -> Complex64 {
    PolygonTransform::new(p).eval(xi)
}
