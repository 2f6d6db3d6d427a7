mod common;

use std::f64::consts::PI;

use multitile::discrete::FinitePointSet;
use multitile::geometry::RationalPolygon;
use multitile::lattice::RationalLattice;
use multitile::rational::{ratio, to_f64, Q};
use multitile::spectral::{
    bombieri_siegel_verify, cube_ft, pairwise_sum, polygon_ft, simplex_ft, simplex_ft_quadrature,
    sinc, thickening_ft, FourierValue, PolygonTransform,
};
use num_traits::Zero;
use proptest::prelude::*;

fn close(a: FourierValue, b: FourierValue, tol: f64) -> bool {
    (a - b).norm() <= tol
}

/// Polygon transform as a sum of edge integrals (Gauss-Green).
fn edge_formula(p: &RationalPolygon, xi: [f64; 2]) -> FourierValue {
    let i = FourierValue::i();
    let phi = |u: f64| {
        if u.abs() < 1e-12 {
            FourierValue::new(1.0, 0.0)
        } else {
            (FourierValue::new(1.0, 0.0) - (-2.0 * PI * i * u).exp()) / (2.0 * PI * i * u)
        }
    };
    let vs: Vec<[f64; 2]> = p.vertices().iter().map(|v| [to_f64(&v[0]), to_f64(&v[1])]).collect();
    let norm2 = xi[0] * xi[0] + xi[1] * xi[1];
    let sum: FourierValue = (0..vs.len())
        .map(|k| {
            let (a, b) = (vs[k], vs[(k + 1) % vs.len()]);
            let d = [b[0] - a[0], b[1] - a[1]];
            let flux = xi[0] * d[1] - xi[1] * d[0];
            let phase = (-2.0 * PI * i * (xi[0] * a[0] + xi[1] * a[1])).exp();
            phase * phi(xi[0] * d[0] + xi[1] * d[1]) * flux
        })
        .sum();
    sum / (-2.0 * PI * i * norm2)
}

fn frequency() -> impl Strategy<Value = [f64; 2]> {
    [-6.0f64..6.0, -6.0f64..6.0].prop_filter("away from the origin", |x| x[0].hypot(x[1]) > 0.05)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn simplex_quadrature_matches_closed_form(xi in prop::collection::vec(-25.0f64..25.0, 1..=3)) {
        let closed = simplex_ft(&xi);
        let quad = simplex_ft_quadrature(&xi);
        prop_assert!(close(closed, quad, 1e-10), "{:?}: {} vs {}", xi, closed, quad);
    }

    #[test]
    fn simplex_is_continuous_across_confluence(x in -10.0f64..10.0, y in -10.0f64..10.0, h in 1e-9f64..1e-5) {
        let a = simplex_ft(&[x, y]);
        let b = simplex_ft(&[x + h, y]);
        let c = simplex_ft(&[x, x + h]);
        let d = simplex_ft(&[x, x]);
        prop_assert!(close(a, b, 1e-4));
        prop_assert!(close(c, d, 1e-4));
    }

    #[test]
    fn polygon_transform_matches_edge_formula(seed in any::<u64>(), xi in frequency()) {
        let p = common::star_polygon(&mut common::rng(seed));
        let got = polygon_ft(&p, &xi);
        let want = edge_formula(&p, xi);
        prop_assert!(close(got, want, 1e-9), "{} vs {}", got, want);
    }

    #[test]
    fn polygon_transform_symmetries(seed in any::<u64>(), xi in frequency(), tx in -9i64..=9, ty in -9i64..=9) {
        let p = common::star_polygon(&mut common::rng(seed));
        let ft = PolygonTransform::new(&p);
        let at_zero = ft.eval(&[0.0, 0.0]);
        prop_assert!(close(at_zero, FourierValue::new(to_f64(&p.area()), 0.0), 1e-12));
        let plus = ft.eval(&xi);
        prop_assert!(close(ft.eval(&[-xi[0], -xi[1]]), plus.conj(), 1e-12));
        let t = [ratio(tx, 3), ratio(ty, 2)];
        let moved = PolygonTransform::new(&p.translate(&t)).eval(&xi);
        let phase = FourierValue::from_polar(1.0, -2.0 * PI * (xi[0] * to_f64(&t[0]) + xi[1] * to_f64(&t[1])));
        prop_assert!(close(moved, phase * plus, 1e-9));
        prop_assert!(plus.norm() <= to_f64(&p.area()) + 1e-12);
    }

    #[test]
    fn exact_and_float_evaluation_agree(seed in any::<u64>(), a in -40i64..=40, b in -40i64..=40, den in 1i64..=6) {
        let p = common::star_polygon(&mut common::rng(seed));
        let ft = PolygonTransform::new(&p);
        let exact = ft.eval_exact(&[ratio(a, den), ratio(b, den)]);
        let float = ft.eval(&[a as f64 / den as f64, b as f64 / den as f64]);
        prop_assert!(close(exact, float, 1e-9));
    }

    #[test]
    fn sinc_and_cube_transforms(t in -50.0f64..50.0, n in 1i64..=40, eps in 0.05f64..2.0) {
        prop_assert_eq!(sinc(t), sinc(-t));
        prop_assert!(sinc(n as f64).abs() < 1e-12);
        prop_assert!(sinc(t).abs() <= 1.0);
        let origin = FinitePointSet::from_i64(2, &[&[0, 0]]).unwrap();
        let xi = [t, t / 3.0];
        prop_assert!(close(thickening_ft(&origin, &xi, eps), cube_ft(&xi, eps), 1e-14));
    }

    #[test]
    fn pairwise_sum_matches_naive(values in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 0..200)) {
        let zs: Vec<FourierValue> = values.iter().map(|&(re, im)| FourierValue::new(re, im)).collect();
        let naive: FourierValue = zs.iter().sum();
        prop_assert!(close(pairwise_sum(&zs), naive, 1e-9));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn self_overlap_residual_decreases(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let q = common::star_polygon(&mut rng);
        let l = match seed % 3 {
            0 => RationalLattice::standard(2),
            _ => common::random_rational_lattice(&mut rng),
        };
        let origin = [Q::zero(), Q::zero()];
        let r = bombieri_siegel_verify(&q, &q, &l, &origin, 16.0).unwrap();
        prop_assert!(r.warnings.is_empty(), "{:?}", r.warnings);
        for pair in r.checkpoints.windows(2) {
            prop_assert!(pair[1].residual <= pair[0].residual + 1e-12);
            prop_assert!(pair[1].residual >= -1e-9);
        }
        prop_assert!(r.rhs_imag.abs() < 1e-10);
    }
}
