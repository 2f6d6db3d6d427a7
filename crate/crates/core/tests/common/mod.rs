//! Seeded random instances shared by the integration tests.
#![allow(dead_code)]

use multitile::discrete::FinitePointSet;
use multitile::geometry::{convex_hull, Point, RationalPolygon};
use multitile::lattice::{IntVec, IntegerLattice, RationalLattice};
use multitile::rational::{int, ratio, Q};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn big(v: &[i64]) -> IntVec {
    v.iter().map(|&a| BigInt::from(a)).collect()
}

/// A sublattice of `Z^d` with `det <= max_det`, given by a non-reduced basis.
pub fn random_integer_lattice(rng: &mut StdRng, dim: usize, max_det: i64) -> IntegerLattice {
    match dim {
        1 => IntegerLattice::from_i64_columns(&[&[rng.gen_range(1..=max_det)]]).unwrap(),
        2 => {
            let a = rng.gen_range(1..=max_det);
            let b = rng.gen_range(1..=max_det / a);
            let c = rng.gen_range(0..b.max(1));
            let (mut u, mut v) = ([a, c], [0, b]);
            let s = rng.gen_range(-2..=2);
            v = [v[0] + s * u[0], v[1] + s * u[1]];
            let t = rng.gen_range(-1..=1);
            u = [u[0] + t * v[0], u[1] + t * v[1]];
            if rng.gen_bool(0.5) {
                std::mem::swap(&mut u, &mut v);
            }
            IntegerLattice::from_i64_columns(&[&u, &v]).unwrap()
        }
        _ => unreachable!("tests only use d <= 2"),
    }
}

/// Residues of `Z^d / L`: the integer points of the HNF diagonal box.
pub fn residues(l: &IntegerLattice) -> Vec<IntVec> {
    let diag: Vec<i64> = (0..l.dim()).map(|i| l.hnf()[i][i].to_i64().unwrap()).collect();
    let mut out = vec![Vec::new()];
    for &h in &diag {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| (0..h).map(move |x| [p.clone(), vec![x]].concat()))
            .collect();
    }
    out.iter().map(|p| big(p)).collect()
}

/// Each residue lifted by `k` distinct lattice vectors, so the union
/// `k`-tiles with `L`.
pub fn constructed_tiler(rng: &mut StdRng, l: &IntegerLattice, k: usize) -> FinitePointSet {
    let spread = k as i64;
    let mut points = Vec::new();
    for r in residues(l) {
        let mut lifts: Vec<IntVec> = Vec::new();
        while lifts.len() < k {
            let coeffs: IntVec = (0..l.dim()).map(|_| BigInt::from(rng.gen_range(-spread..=spread))).collect();
            let v = l.combine(&coeffs);
            if !lifts.contains(&v) {
                lifts.push(v);
            }
        }
        points.extend(lifts.into_iter().map(|v| r.iter().zip(&v).map(|(a, b)| a + b).collect()));
    }
    FinitePointSet::new(l.dim(), points).unwrap()
}

pub fn random_point_set(rng: &mut StdRng, dim: usize, max_len: usize) -> FinitePointSet {
    let len = rng.gen_range(1..=max_len);
    let reach = if dim == 1 { max_len as i64 } else { 3 };
    let mut points: Vec<Vec<i64>> = Vec::new();
    while points.len() < len {
        let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(-reach..=reach)).collect();
        if !points.contains(&p) {
            points.push(p);
        }
    }
    FinitePointSet::new(dim, points.iter().map(|p| big(p)).collect()).unwrap()
}

/// Moves one point of `f` to a free nearby position.
pub fn perturb(rng: &mut StdRng, f: &FinitePointSet) -> FinitePointSet {
    let mut points = f.points().to_vec();
    let i = rng.gen_range(0..points.len());
    let reach = points.len() as i64;
    loop {
        let step: Vec<i64> = (0..f.dim()).map(|_| rng.gen_range(-reach..=reach)).collect();
        if step.iter().all(|&s| s == 0) {
            continue;
        }
        let moved: IntVec = points[i].iter().zip(&step).map(|(a, &s)| a + s).collect();
        if !points.contains(&moved) {
            points[i] = moved;
            return FinitePointSet::new(f.dim(), points).unwrap();
        }
    }
}

pub struct DiscreteInstance {
    pub f: FinitePointSet,
    pub l: IntegerLattice,
    pub constructed_tiler: bool,
}

/// `d <= 2`, `|F| <= 12`, `det L <= 8`. Roughly half are constructed tilers.
pub fn random_discrete_instance(rng: &mut StdRng) -> DiscreteInstance {
    let dim = rng.gen_range(1..=2);
    let l = random_integer_lattice(rng, dim, 8);
    let det = l.det().to_usize().unwrap();
    let max_k = 12 / det;
    match rng.gen_range(0..4) {
        0 | 1 if max_k >= 1 => {
            let k = rng.gen_range(1..=max_k);
            let f = constructed_tiler(rng, &l, k);
            DiscreteInstance { f, l, constructed_tiler: true }
        }
        2 if max_k >= 1 => {
            let k = rng.gen_range(1..=max_k);
            let f = constructed_tiler(rng, &l, k);
            DiscreteInstance { f: perturb(rng, &f), l, constructed_tiler: false }
        }
        _ => DiscreteInstance { f: random_point_set(rng, dim, 12), l, constructed_tiler: false },
    }
}

pub fn discrete_corpus(seed: u64, count: usize) -> Vec<DiscreteInstance> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_discrete_instance(&mut rng)).collect()
}

fn small_rational(rng: &mut StdRng, max_num: i64, dens: &[i64]) -> Q {
    ratio(rng.gen_range(-max_num..=max_num), *dens.choose(rng).unwrap())
}

/// A region between a piecewise-linear graph and its vertical translate,
/// paired with a lattice that `pq`-tiles it.
pub fn strip_tiler(rng: &mut StdRng) -> (RationalPolygon, RationalLattice, u32) {
    let width = rng.gen_range(1..=3);
    let height = int(rng.gen_range(1..=2));
    let steps = rng.gen_range(1..=3);
    let xs: Vec<Q> = (0..=steps).map(|i| ratio(width * i, steps)).collect();
    let ys: Vec<Q> = xs.iter().map(|_| small_rational(rng, 2, &[1, 2])).collect();
    let mut vertices: Vec<Point> = xs.iter().zip(&ys).map(|(x, y)| [x.clone(), y.clone()]).collect();
    vertices.extend(xs.iter().zip(&ys).rev().map(|(x, y)| [x.clone(), y + &height]));
    let polygon = RationalPolygon::new(vertices).unwrap();

    let (p, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
    let rise = &ys[steps as usize] - &ys[0];
    let l = RationalLattice::new(vec![
        vec![ratio(width, p), rise / int(p)],
        vec![int(0), height / int(q)],
    ])
    .unwrap();
    (polygon, l, (p * q) as u32)
}

/// A simple polygon, star-shaped about the origin, on a `1/den` grid.
pub fn star_polygon(rng: &mut StdRng) -> RationalPolygon {
    loop {
        let n = rng.gen_range(3..=8);
        let den = rng.gen_range(1..=3);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let mut vertices: Vec<Point> = Vec::new();
        for a in angles {
            let r = rng.gen_range(1.0..4.0) * den as f64;
            let v = [
                ratio((r * a.cos()).round() as i64, den),
                ratio((r * a.sin()).round() as i64, den),
            ];
            if !vertices.contains(&v) {
                vertices.push(v);
            }
        }
        if let Ok(p) = RationalPolygon::new(vertices) {
            if p.area().is_positive() {
                return p;
            }
        }
    }
}

/// A lattice with small rational entries and `1/4 <= |det| <= 4`.
pub fn random_rational_lattice(rng: &mut StdRng) -> RationalLattice {
    loop {
        let columns: Vec<Vec<Q>> = (0..2)
            .map(|_| (0..2).map(|_| small_rational(rng, 3, &[1, 2])).collect())
            .collect();
        if let Ok(l) = RationalLattice::new(columns) {
            let det = l.det().abs();
            if det >= ratio(1, 4) && det <= int(4) {
                return l;
            }
        }
    }
}

pub fn named_lattices() -> Vec<(&'static str, RationalLattice)> {
    vec![
        ("Z2", RationalLattice::standard(2)),
        ("D2", RationalLattice::from_i64_columns(&[&[1, 1], &[1, -1]]).unwrap()),
        ("Z2/2", RationalLattice::from_ratio_columns(&[&[(1, 2), (0, 1)], &[(0, 1), (1, 2)]]).unwrap()),
    ]
}

/// Polygon and lattice pairs for the transform-vanishing comparison: strip
/// tilers, perturbed strip tilers, fundamental parallelograms and star
/// polygons against assorted lattices.
pub fn polygon_lattice_corpus(seed: u64, count: usize) -> Vec<(RationalPolygon, RationalLattice)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| match i % 4 {
            0 => {
                let (p, l, _) = strip_tiler(&mut rng);
                (p, l)
            }
            1 => {
                let (p, l, _) = strip_tiler(&mut rng);
                (nudge_vertex(&mut rng, &p), l)
            }
            2 => {
                let l = random_rational_lattice(&mut rng);
                (fundamental_parallelogram(&l), l)
            }
            _ => {
                let p = star_polygon(&mut rng);
                let l = if rng.gen_bool(0.5) {
                    random_rational_lattice(&mut rng)
                } else {
                    named_lattices().choose(&mut rng).unwrap().1.clone()
                };
                (p, l)
            }
        })
        .collect()
}

pub fn fundamental_parallelogram(l: &RationalLattice) -> RationalPolygon {
    let [u, v] = [&l.basis()[0], &l.basis()[1]];
    let o = [int(0), int(0)];
    let a = [u[0].clone(), u[1].clone()];
    let c = [v[0].clone(), v[1].clone()];
    let b = [&u[0] + &v[0], &u[1] + &v[1]];
    RationalPolygon::new(vec![o, a, b, c]).unwrap()
}

/// Shifts one vertex by a small rational step, keeping the polygon simple.
pub fn nudge_vertex(rng: &mut StdRng, p: &RationalPolygon) -> RationalPolygon {
    loop {
        let mut vertices = p.vertices().to_vec();
        let i = rng.gen_range(0..vertices.len());
        let step = [small_rational(rng, 1, &[3, 4]), small_rational(rng, 1, &[3, 4])];
        if step.iter().all(Zero::is_zero) {
            continue;
        }
        vertices[i] = [&vertices[i][0] + &step[0], &vertices[i][1] + &step[1]];
        if let Ok(q) = RationalPolygon::new(vertices) {
            return q;
        }
    }
}

/// Hull of random points and their negatives, scaled by a small rational.
pub fn symmetric_convex_polygon(rng: &mut StdRng) -> RationalPolygon {
    loop {
        let n = rng.gen_range(1..=4);
        let mut points: Vec<Point> = Vec::new();
        for _ in 0..n {
            let (x, y) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            points.push([int(x), int(y)]);
            points.push([int(-x), int(-y)]);
        }
        let hull = convex_hull(&points);
        if hull.len() < 4 {
            continue;
        }
        let scale = ratio(rng.gen_range(1..=3), rng.gen_range(1..=3));
        if let Ok(p) = RationalPolygon::new(hull).and_then(|p| p.scale(&scale)) {
            return p;
        }
    }
}
