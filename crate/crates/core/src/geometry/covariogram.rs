use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::clip::Triangulation;
use super::difference_body::DifferenceBody;
use super::polygon::{add, Location, RationalPolygon};
use super::triangulate::triangulate;
use super::{GeometryError, Point};
use crate::discrete::TilingVerdict;
use crate::lattice::{EnumerationLimits, RationalLattice};
use crate::rational::{self, Q};

/// One positive term `vol(A ∩ (B + n))` of a lattice covariogram sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovariogramTerm {
    pub n: Point,
    pub value: Q,
}

impl CovariogramTerm {
    pub fn to_json(&self) -> Value {
        json!({
            "n": [rational::to_json(&self.n[0]), rational::to_json(&self.n[1])],
            "value": rational::to_json(&self.value),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovariogramSum {
    /// Positive terms in ascending lexicographic order of `n`.
    pub terms: Vec<CovariogramTerm>,
    pub total: Q,
    /// Lattice points examined in the bounding box.
    pub candidates: usize,
}

pub fn intersection_area(p: &RationalPolygon, q: &RationalPolygon) -> Q {
    let tp = Triangulation::new(triangulate(p));
    let tq = Triangulation::new(triangulate(q));
    tp.intersection_area(&tq, &[Q::zero(), Q::zero()])
}

pub(crate) fn require_planar(l: &RationalLattice) -> Result<(), GeometryError> {
    if l.dim() == 2 {
        Ok(())
    } else {
        Err(GeometryError::DimensionMismatch {
            expected: 2,
            found: l.dim(),
        })
    }
}

/// Lattice points `n` for which `A` and `B + shift + n` can meet.
pub(crate) fn candidate_translates(
    a: &Triangulation,
    b: &Triangulation,
    l: &RationalLattice,
    shift: &Point,
    limits: EnumerationLimits,
) -> Result<Vec<Point>, GeometryError> {
    require_planar(l)?;
    let (alo, ahi) = a.bbox();
    let (blo, bhi) = b.bbox();
    let lo: Vec<Q> = (0..2).map(|k| &alo[k] - &bhi[k] - &shift[k]).collect();
    let hi: Vec<Q> = (0..2).map(|k| &ahi[k] - &blo[k] - &shift[k]).collect();
    Ok(l.enumerate_in_box(&lo, &hi, limits)?
        .into_iter()
        .map(|v| [v[0].clone(), v[1].clone()])
        .collect())
}

/// `sum_{n ∈ L} vol(A ∩ (B + shift + n))`, exact.
pub fn shifted_covariogram_sum(
    a: &RationalPolygon,
    b: &RationalPolygon,
    l: &RationalLattice,
    shift: &Point,
) -> Result<CovariogramSum, GeometryError> {
    let ta = Triangulation::new(triangulate(a));
    let tb = Triangulation::new(triangulate(b));
    let cands = candidate_translates(&ta, &tb, l, shift, EnumerationLimits::default())?;
    let candidates = cands.len();
    let terms: Vec<CovariogramTerm> = cands
        .into_par_iter()
        .filter_map(|n| {
            let value = ta.intersection_area(&tb, &add(&n, shift));
            value.is_positive().then_some(CovariogramTerm { n, value })
        })
        .collect();
    let total = terms.iter().fold(Q::zero(), |acc, t| acc + &t.value);
    Ok(CovariogramSum {
        terms,
        total,
        candidates,
    })
}

/// `sum_{n ∈ L} vol(A ∩ (B + n))`. Terms outside the interior of `A - B`
/// vanish, so summing the positive terms over a bounding box gives the
/// interior-indexed sum.
pub fn continuous_covariogram_sum(
    a: &RationalPolygon,
    b: &RationalPolygon,
    l: &RationalLattice,
) -> Result<CovariogramSum, GeometryError> {
    shifted_covariogram_sum(a, b, l, &[Q::zero(), Q::zero()])
}

/// A lattice point classified against the difference body `A - B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedPoint {
    pub n: Point,
    pub location: Location,
    /// `A` and `B + n` share a point.
    pub touches: bool,
    pub area: Q,
}

/// Every lattice point of the bounding box of `A - B` that lies in the
/// closed difference body, with its exact location and overlap area.
pub fn classify_difference_points(
    a: &RationalPolygon,
    b: &RationalPolygon,
    l: &RationalLattice,
) -> Result<Vec<ClassifiedPoint>, GeometryError> {
    let ta = Triangulation::new(triangulate(a));
    let tb = Triangulation::new(triangulate(b));
    let body = DifferenceBody::new(&ta, &tb);
    let zero = [Q::zero(), Q::zero()];
    let cands = candidate_translates(&ta, &tb, l, &zero, EnumerationLimits::default())?;
    Ok(cands
        .into_par_iter()
        .filter_map(|n| {
            let location = body.locate(&n);
            if location == Location::Outside {
                debug_assert!(!ta.touches(&tb, &n));
                return None;
            }
            let touches = ta.touches(&tb, &n);
            let area = ta.intersection_area(&tb, &n);
            Some(ClassifiedPoint {
                n,
                location,
                touches,
                area,
            })
        })
        .collect())
}

/// The sum indexed literally by `int(A - B) ∩ L`, with its index count.
pub fn interior_covariogram_sum(
    a: &RationalPolygon,
    b: &RationalPolygon,
    l: &RationalLattice,
) -> Result<(Q, usize), GeometryError> {
    let pts = classify_difference_points(a, b, l)?;
    let interior: Vec<&ClassifiedPoint> =
        pts.iter().filter(|p| p.location == Location::Inside).collect();
    let total = interior.iter().fold(Q::zero(), |acc, p| acc + &p.area);
    Ok((total, interior.len()))
}

/// Multi-tiling test for a polygon: tiling iff the covariogram lattice sum
/// equals `vol^2 / det L`, with multiplicity `vol / det L`.
pub fn check_multitile_polygon(
    q: &RationalPolygon,
    l: &RationalLattice,
) -> Result<TilingVerdict, GeometryError> {
    let sum = continuous_covariogram_sum(q, q, l)?;
    let vol = q.area();
    let k = &vol / l.det();
    let target = &k * &vol;
    assert!(
        sum.total >= target,
        "covariogram lattice sum fell below vol^2 / det L"
    );
    let is_multitiling = sum.total == target;
    if is_multitiling {
        assert!(
            k.is_integer() && k.is_positive(),
            "an exact tiling must have a positive integer multiplicity"
        );
    }
    Ok(TilingVerdict {
        is_multitiling,
        multiplicity: k,
        lhs_sum: sum.total,
        rhs_target: target,
        witnesses: Vec::new(),
    })
}

/// Pointwise cover count `#{n ∈ L : p ∈ Q + n}` for a point off the
/// boundaries of all translates. `None` if `p` lies on such a boundary.
pub fn cover_count(q: &RationalPolygon, l: &RationalLattice, p: &Point) -> Result<Option<usize>, GeometryError> {
    require_planar(l)?;
    let (lo, hi) = q.bbox();
    let box_lo: Vec<Q> = (0..2).map(|k| &p[k] - &hi[k]).collect();
    let box_hi: Vec<Q> = (0..2).map(|k| &p[k] - &lo[k]).collect();
    let mut count = 0;
    for n in l.enumerate_in_box(&box_lo, &box_hi, EnumerationLimits::default())? {
        let local = [&p[0] - &n[0], &p[1] - &n[1]];
        match q.locate(&local) {
            Location::Inside => count += 1,
            Location::Boundary => return Ok(None),
            Location::Outside => {}
        }
    }
    Ok(Some(count))
}

/// Lattice points strictly inside `Q`.
pub fn interior_lattice_points(q: &RationalPolygon, l: &RationalLattice) -> Result<usize, GeometryError> {
    require_planar(l)?;
    let (lo, hi) = q.bbox();
    Ok(l.enumerate_in_box(&lo, &hi, EnumerationLimits::default())?
        .into_iter()
        .filter(|n| q.locate(&[n[0].clone(), n[1].clone()]) == Location::Inside)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::builtins;
    use crate::rational::{int, ratio};

    fn z2() -> RationalLattice {
        RationalLattice::standard(2)
    }

    #[test]
    fn unit_square_sum() {
        let sq = builtins::unit_square();
        let s = continuous_covariogram_sum(&sq, &sq, &z2()).unwrap();
        assert_eq!(s.total, int(1));
        assert_eq!(s.terms.len(), 1);
    }

    #[test]
    fn rectangle_sum_and_terms() {
        let r = builtins::rect_1x2();
        let s = continuous_covariogram_sum(&r, &r, &z2()).unwrap();
        assert_eq!(s.total, int(4));
        let values: Vec<Q> = s.terms.iter().map(|t| t.value.clone()).collect();
        assert_eq!(values, vec![int(1), int(2), int(1)]);
    }

    #[test]
    fn triangle_sum() {
        let t = builtins::standard_triangle();
        let s = continuous_covariogram_sum(&t, &t, &z2()).unwrap();
        assert_eq!(s.total, ratio(1, 2));
    }

    #[test]
    fn verdicts() {
        let v = check_multitile_polygon(&builtins::rect_1x2(), &z2()).unwrap();
        assert!(v.is_multitiling);
        assert_eq!(v.multiplicity, int(2));
        assert!(check_multitile_polygon(&builtins::unit_square(), &z2()).unwrap().is_multitiling);
        let t = check_multitile_polygon(&builtins::standard_triangle(), &z2()).unwrap();
        assert!(!t.is_multitiling);
        assert_eq!((t.lhs_sum, t.rhs_target), (ratio(1, 2), ratio(1, 4)));
    }

    #[test]
    fn crown_two_tiles_with_d2() {
        let d2 = RationalLattice::from_i64_columns(&[&[1, 1], &[1, -1]]).unwrap();
        let crown = builtins::crown();
        assert_eq!(crown.area(), int(4));
        assert!(!crown.is_convex());
        let v = check_multitile_polygon(&crown, &d2).unwrap();
        assert!(v.is_multitiling);
        assert_eq!(v.lhs_sum, int(8));
        assert_eq!(v.multiplicity, int(2));
        // Rows of the rectangle shift by one against each other: a tiling.
        let rect = check_multitile_polygon(&builtins::rect_1x2(), &d2).unwrap();
        assert!(rect.is_multitiling);
        assert_eq!((rect.lhs_sum, rect.multiplicity), (int(2), int(1)));
        let z2 = check_multitile_polygon(&crown, &z2()).unwrap();
        assert!(z2.is_multitiling);
        assert_eq!(z2.multiplicity, int(4));
    }

    #[test]
    fn shifted_sum_is_constant_for_a_tiler() {
        let r = builtins::rect_1x2();
        for x in [ratio(1, 2), ratio(1, 3), ratio(7, 5)] {
            let s = shifted_covariogram_sum(&r, &r, &z2(), &[x, ratio(1, 4)]).unwrap();
            assert_eq!(s.total, int(4));
        }
    }

    #[test]
    fn interior_indexing_agrees() {
        for q in [builtins::rect_1x2(), builtins::lshape(), builtins::crown(), builtins::standard_triangle()] {
            let full = continuous_covariogram_sum(&q, &q, &z2()).unwrap();
            let (interior, _) = interior_covariogram_sum(&q, &q, &z2()).unwrap();
            assert_eq!(full.total, interior);
        }
    }

    #[test]
    fn boundary_points_have_zero_area() {
        let pts = classify_difference_points(&builtins::lshape(), &builtins::lshape(), &z2()).unwrap();
        let boundary: Vec<_> = pts.iter().filter(|p| p.location == Location::Boundary).collect();
        assert!(!boundary.is_empty());
        assert!(boundary.iter().all(|p| p.touches && p.area.is_zero()));
    }

    #[test]
    fn cover_counts() {
        let r = builtins::rect_1x2();
        assert_eq!(cover_count(&r, &z2(), &[ratio(1, 3), ratio(1, 7)]).unwrap(), Some(2));
        assert_eq!(cover_count(&r, &z2(), &[int(0), ratio(1, 2)]).unwrap(), None);
        let t = builtins::standard_triangle();
        assert_eq!(cover_count(&t, &z2(), &[ratio(1, 4), ratio(1, 4)]).unwrap(), Some(1));
        assert_eq!(cover_count(&t, &z2(), &[ratio(3, 4), ratio(3, 4)]).unwrap(), Some(0));
    }

    #[test]
    fn interior_points_of_symmetric_square() {
        let sq = builtins::square_pm1();
        assert_eq!(interior_lattice_points(&sq, &z2()).unwrap(), 1);
    }
}
