//! Named polygons used in examples, tests and the CLI.

use super::covariogram::check_multitile_polygon;
use super::polygon::RationalPolygon;
use crate::discrete::TilingVerdict;
use crate::lattice::RationalLattice;

pub const BUILTIN_NAMES: &[&str] = &[
    "unit_square",
    "rect_1x2",
    "standard_triangle",
    "crown",
    "lshape",
    "nontiler",
    "square_pm1",
    "octagon",
];

pub fn builtin(name: &str) -> Option<RationalPolygon> {
    Some(match name {
        "unit_square" => unit_square(),
        "rect_1x2" => rect_1x2(),
        "standard_triangle" => standard_triangle(),
        "crown" => crown(),
        "lshape" => lshape(),
        "nontiler" => nontiler(),
        "square_pm1" => square_pm1(),
        "octagon" => octagon(),
        _ => return None,
    })
}

fn from_i64(v: &[(i64, i64)]) -> RationalPolygon {
    RationalPolygon::from_i64(v).expect("built-in polygon is valid")
}

/// The checkerboard lattice `{(a, b) : a + b even}`.
pub fn checkerboard() -> RationalLattice {
    RationalLattice::from_i64_columns(&[&[1, 1], &[1, -1]]).expect("nonsingular basis")
}

/// [`crown`] against [`checkerboard`].
pub fn crown_example_check() -> TilingVerdict {
    check_multitile_polygon(&crown(), &checkerboard()).expect("planar lattice")
}

/// `[0,1]^2`.
pub fn unit_square() -> RationalPolygon {
    from_i64(&[(0, 0), (1, 0), (1, 1), (0, 1)])
}

/// `[0,2] x [0,1]`.
pub fn rect_1x2() -> RationalPolygon {
    from_i64(&[(0, 0), (2, 0), (2, 1), (0, 1)])
}

pub fn standard_triangle() -> RationalPolygon {
    from_i64(&[(0, 0), (1, 0), (0, 1)])
}

/// A zigzag band of area 4: height 2 over `[0,2]`, with a sawtooth of period
/// 1 along top and bottom. Covers the plane twice under `D_2` and four times
/// under `Z^2`.
pub fn crown() -> RationalPolygon {
    RationalPolygon::from_ratios(&[
        ((0, 1), (0, 1)),
        ((1, 2), (1, 1)),
        ((1, 1), (0, 1)),
        ((3, 2), (1, 1)),
        ((2, 1), (0, 1)),
        ((2, 1), (2, 1)),
        ((3, 2), (3, 1)),
        ((1, 1), (2, 1)),
        ((1, 2), (3, 1)),
        ((0, 1), (2, 1)),
    ])
    .expect("built-in polygon is valid")
}

pub fn lshape() -> RationalPolygon {
    from_i64(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
}

/// A `5 x 1` bar with a half cell moved from its far end to its top. Area 5;
/// points are covered 4 or 6 times by `Z^2` translates, so it never
/// multi-tiles.
pub fn nontiler() -> RationalPolygon {
    from_i64(&[(0, 0), (5, 0), (4, 1), (1, 1), (0, 2)])
}

/// `[-1,1]^2`.
pub fn square_pm1() -> RationalPolygon {
    from_i64(&[(-1, -1), (1, -1), (1, 1), (-1, 1)])
}

pub fn octagon() -> RationalPolygon {
    from_i64(&[(-2, -1), (-1, -2), (1, -2), (2, -1), (2, 1), (1, 2), (-1, 2), (-2, 1)])
}
