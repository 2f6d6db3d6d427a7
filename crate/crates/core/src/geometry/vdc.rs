//! Lattice point counts in bodies and difference bodies.

use num_traits::Zero;
use serde_json::{json, Value};

use super::clip::{covers_point, Triangulation};
use super::covariogram::{classify_difference_points, interior_lattice_points};
use super::polygon::{Location, RationalPolygon};
use super::triangulate::triangulate;
use super::{GeometryError, Point};
use crate::lattice::RationalLattice;
use crate::rational::{self, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanDerCorputCounts {
    /// Lattice points `n` with `vol(Q ∩ (Q+n)) > 0`; a lower bound for
    /// `interior_diff_count`.
    pub diff_count: usize,
    /// `#(int(Q - Q) ∩ L)`, located exactly.
    pub interior_diff_count: usize,
    /// `#(int Q ∩ L)`, only for convex centrally symmetric `Q`.
    pub q_count: Option<usize>,
    /// `vol Q / det L`.
    pub volume_ratio: Q,
    pub bounds_hold: bool,
}

impl VanDerCorputCounts {
    pub fn to_json(&self) -> Value {
        json!({
            "diff_count": self.diff_count,
            "interior_diff_count": self.interior_diff_count,
            "q_count": self.q_count,
            "volume_ratio": rational::to_json(&self.volume_ratio),
            "bounds_hold": self.bounds_hold,
        })
    }
}

/// Counts for both inequalities. The symmetric-body count is filled in only
/// when `Q` is convex and symmetric about the origin.
pub fn van_der_corput_counts(
    q: &RationalPolygon,
    l: &RationalLattice,
) -> Result<VanDerCorputCounts, GeometryError> {
    let pts = classify_difference_points(q, q, l)?;
    let diff_count = pts.iter().filter(|p| !p.area.is_zero()).count();
    let interior_diff_count = pts.iter().filter(|p| p.location == Location::Inside).count();
    assert!(
        interior_diff_count >= diff_count,
        "a positive overlap must come from an interior point of Q - Q"
    );
    let volume_ratio = q.area() / l.det();
    let q_count = if q.is_convex() && q.is_centrally_symmetric() {
        Some(interior_lattice_points(q, l)?)
    } else {
        None
    };
    let part_a = Q::from_integer(interior_diff_count.into()) >= volume_ratio
        && Q::from_integer(diff_count.into()) >= volume_ratio;
    let part_b = q_count
        .map(|c| Q::from_integer(c.into()) * rational::int(4) >= volume_ratio)
        .unwrap_or(true);
    Ok(VanDerCorputCounts {
        diff_count,
        interior_diff_count,
        q_count,
        volume_ratio,
        bounds_hold: part_a && part_b,
    })
}

/// As [`van_der_corput_counts`], rejecting bodies that are not convex and
/// centrally symmetric.
pub fn van_der_corput_symmetric(
    q: &RationalPolygon,
    l: &RationalLattice,
) -> Result<VanDerCorputCounts, GeometryError> {
    if !q.is_convex() {
        return Err(GeometryError::NotConvex);
    }
    if !q.is_centrally_symmetric() {
        return Err(GeometryError::NotCentrallySymmetric);
    }
    van_der_corput_counts(q, l)
}

/// Grid comparison of `C - C` against `2C` for a union of polygons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingCheck {
    pub samples: usize,
    /// Every sampled point of `2C` lies in `C - C`.
    pub double_contained: bool,
    /// The two sets agree on every sample.
    pub equal: bool,
    /// A sample in exactly one of the two sets.
    pub witness: Option<Point>,
}

/// Samples a `(grid+1)^2` lattice over the common bounding box. Membership
/// in `C - C` is decided as `C ∩ (C + x) ≠ ∅`.
pub fn compare_difference_with_double(pieces: &[RationalPolygon], grid: usize) -> DoublingCheck {
    assert!(!pieces.is_empty() && grid > 0);
    let tris: Vec<Triangulation> = pieces
        .iter()
        .map(|p| Triangulation::new(triangulate(p)))
        .collect();
    let (mut lo, mut hi) = pieces[0].bbox();
    for p in &pieces[1..] {
        let (a, b) = p.bbox();
        for k in 0..2 {
            if a[k] < lo[k] {
                lo[k] = a[k].clone();
            }
            if b[k] > hi[k] {
                hi[k] = b[k].clone();
            }
        }
    }
    // Both C - C and 2C sit inside [2 lo, 2 hi] when C is symmetric; the
    // wider of the two boxes is used in general.
    let box_lo: Vec<Q> = (0..2)
        .map(|k| (&lo[k] - &hi[k]).min(&lo[k] * rational::int(2)))
        .collect();
    let box_hi: Vec<Q> = (0..2)
        .map(|k| (&hi[k] - &lo[k]).max(&hi[k] * rational::int(2)))
        .collect();
    let g = Q::from_integer(grid.into());
    let half = rational::ratio(1, 2);
    let mut double_contained = true;
    let mut equal = true;
    let mut witness = None;
    let mut samples = 0;
    for i in 0..=grid {
        for j in 0..=grid {
            let x = [
                &box_lo[0] + (&box_hi[0] - &box_lo[0]) * Q::from_integer(i.into()) / &g,
                &box_lo[1] + (&box_hi[1] - &box_lo[1]) * Q::from_integer(j.into()) / &g,
            ];
            samples += 1;
            let in_diff = tris
                .iter()
                .any(|a| tris.iter().any(|b| a.touches(b, &x)));
            let halved = [&x[0] * &half, &x[1] * &half];
            let in_double = tris.iter().any(|t| covers_point(t, &halved));
            if in_double && !in_diff {
                double_contained = false;
            }
            if in_double != in_diff {
                equal = false;
                witness.get_or_insert(x);
            }
        }
    }
    DoublingCheck {
        samples,
        double_contained,
        equal,
        witness,
    }
}

/// For a convex body symmetric about the origin, confirms `Q - Q = 2Q` on a
/// sample grid.
pub fn symmetric_difference_body_check(q: &RationalPolygon, grid: usize) -> Result<bool, GeometryError> {
    if !q.is_convex() {
        return Err(GeometryError::NotConvex);
    }
    if !q.is_centrally_symmetric() {
        return Err(GeometryError::NotCentrallySymmetric);
    }
    Ok(compare_difference_with_double(std::slice::from_ref(q), grid).equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::builtins;
    use crate::geometry::polygon::ipoint;
    use crate::rational::{int, ratio};

    fn z2() -> RationalLattice {
        RationalLattice::standard(2)
    }

    #[test]
    fn counts_for_simple_bodies() {
        let c = van_der_corput_counts(&builtins::unit_square(), &z2()).unwrap();
        assert_eq!(c.diff_count, 1);
        assert!(c.bounds_hold);
        assert_eq!(c.q_count, None);

        let c = van_der_corput_counts(&builtins::square_pm1(), &z2()).unwrap();
        assert_eq!(c.q_count, Some(1));
        assert_eq!(c.volume_ratio, int(4));
        assert!(c.bounds_hold);

        let c = van_der_corput_counts(&builtins::rect_1x2(), &z2()).unwrap();
        assert_eq!(c.diff_count, 3);
        assert_eq!(c.interior_diff_count, 3);
    }

    #[test]
    fn symmetric_variant_rejects() {
        assert_eq!(
            van_der_corput_symmetric(&builtins::rect_1x2(), &z2()),
            Err(GeometryError::NotCentrallySymmetric)
        );
        assert_eq!(
            van_der_corput_symmetric(&builtins::crown(), &z2()),
            Err(GeometryError::NotConvex)
        );
    }

    #[test]
    fn convex_symmetric_doubling() {
        assert!(symmetric_difference_body_check(&builtins::square_pm1(), 16).unwrap());
        assert!(symmetric_difference_body_check(&builtins::octagon(), 16).unwrap());
    }

    #[test]
    fn two_intervals_double_is_strictly_smaller() {
        let h = ratio(1, 8);
        let left = RationalPolygon::rectangle(int(-2), -h.clone(), int(-1), h.clone()).unwrap();
        let right = RationalPolygon::rectangle(int(1), -h.clone(), int(2), h).unwrap();
        let check = compare_difference_with_double(&[left, right], 32);
        assert!(check.double_contained);
        assert!(!check.equal);
        assert!(check.witness.is_some());

        // Along the axis, C - C = [-4,-2] ∪ [-1,1] ∪ [2,4].
        let pieces = [
            RationalPolygon::rectangle(int(-2), ratio(-1, 8), int(-1), ratio(1, 8)).unwrap(),
            RationalPolygon::rectangle(int(1), ratio(-1, 8), int(2), ratio(1, 8)).unwrap(),
        ];
        let tris: Vec<Triangulation> = pieces.iter().map(|p| Triangulation::new(triangulate(p))).collect();
        let in_diff = |x: Point| tris.iter().any(|a| tris.iter().any(|b| a.touches(b, &x)));
        assert!(in_diff(ipoint(0, 0)));
        assert!(in_diff(ipoint(3, 0)));
        assert!(!in_diff([ratio(3, 2), int(0)]));
    }
}
