//! Exact location of a point relative to the difference body `A - B`.
//!
//! `A - B` is the union of the convex sets `t - s` over triangle pairs. A
//! point is interior to the union exactly when the tangent cones of the
//! pieces containing it cover every direction.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::clip::Triangulation;
use super::polygon::{add, cross, orient, sub, Location};
use super::Point;

/// Convex hull, counterclockwise, with collinear points removed.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Directions from a point into a convex set containing it.
#[derive(Debug, Clone)]
enum Cone {
    Full,
    /// `{d : cross(edge, d) >= 0}`.
    HalfPlane(Point),
    /// From `first` counterclockwise to `second`, opening below a half turn.
    Wedge(Point, Point),
}

impl Cone {
    fn contains(&self, d: &Point) -> bool {
        match self {
            Cone::Full => true,
            Cone::HalfPlane(e) => !cross(e, d).is_negative(),
            Cone::Wedge(a, b) => !cross(a, d).is_negative() && !cross(d, b).is_negative(),
        }
    }

    fn rays(&self) -> Vec<Point> {
        match self {
            Cone::Full => vec![],
            Cone::HalfPlane(e) => vec![e.clone(), [-&e[0], -&e[1]]],
            Cone::Wedge(a, b) => vec![a.clone(), b.clone()],
        }
    }
}

/// Tangent cone of the strictly convex ccw polygon `hull` at `p`, or `None`
/// if `p` is outside.
fn tangent_cone(hull: &[Point], p: &Point) -> Option<Cone> {
    let n = hull.len();
    let mut on_edges = Vec::new();
    for i in 0..n {
        let s = orient(&hull[i], &hull[(i + 1) % n], p);
        if s.is_negative() {
            return None;
        }
        if s.is_zero() {
            on_edges.push(i);
        }
    }
    match on_edges.as_slice() {
        [] => Some(Cone::Full),
        [i] => Some(Cone::HalfPlane(sub(&hull[(i + 1) % n], &hull[*i]))),
        [i, j] => {
            // Consecutive edges meet at the shared vertex.
            let v = if (i + 1) % n == *j { *j } else { *i };
            let next = &hull[(v + 1) % n];
            let prev = &hull[(v + n - 1) % n];
            Some(Cone::Wedge(sub(next, &hull[v]), sub(prev, &hull[v])))
        }
        _ => unreachable!("a point meets at most two edges of a strictly convex polygon"),
    }
}

fn half(d: &Point) -> u8 {
    if d[1].is_positive() || (d[1].is_zero() && d[0].is_positive()) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(a, b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

fn cones_cover_plane(cones: &[Cone]) -> bool {
    if cones.iter().any(|c| matches!(c, Cone::Full)) {
        return true;
    }
    let mut dirs: Vec<Point> = cones.iter().flat_map(Cone::rays).collect();
    if dirs.is_empty() {
        return false;
    }
    dirs.sort_by(angle_cmp);
    dirs.dedup_by(|a, b| angle_cmp(a, b) == Ordering::Equal);
    let mut probes = dirs.clone();
    let n = dirs.len();
    for i in 0..n {
        let u = &dirs[i];
        let v = &dirs[(i + 1) % n];
        let perp = [-&u[1], u[0].clone()];
        let between = if n == 1 {
            [-&u[0], -&u[1]]
        } else if cross(u, v).is_positive() {
            add(u, v)
        } else {
            perp.clone()
        };
        probes.push(between);
        if n == 1 {
            probes.push(perp);
        }
    }
    probes.iter().all(|d| cones.iter().any(|c| c.contains(d)))
}

/// Precomputed pieces `t - s` of a difference body.
pub struct DifferenceBody {
    pieces: Vec<(Vec<Point>, Point, Point)>,
}

impl DifferenceBody {
    pub fn new(a: &Triangulation, b: &Triangulation) -> Self {
        let mut pieces = Vec::new();
        for t in &a.triangles {
            for s in &b.triangles {
                let pts: Vec<Point> = t
                    .iter()
                    .flat_map(|p| s.iter().map(move |q| sub(p, q)))
                    .collect();
                let hull = convex_hull(&pts);
                let (lo, hi) = bounds(&hull);
                pieces.push((hull, lo, hi));
            }
        }
        Self { pieces }
    }

    pub fn locate(&self, p: &Point) -> Location {
        let cones: Vec<Cone> = self
            .pieces
            .iter()
            .filter(|(_, lo, hi)| (0..2).all(|k| lo[k] <= p[k] && p[k] <= hi[k]))
            .filter_map(|(hull, _, _)| tangent_cone(hull, p))
            .collect();
        if cones.is_empty() {
            Location::Outside
        } else if cones_cover_plane(&cones) {
            Location::Inside
        } else {
            Location::Boundary
        }
    }

    pub fn bbox(&self) -> (Point, Point) {
        let all: Vec<Point> = self
            .pieces
            .iter()
            .flat_map(|(_, lo, hi)| [lo.clone(), hi.clone()])
            .collect();
        bounds(&all)
    }
}

fn bounds(pts: &[Point]) -> (Point, Point) {
    let mut lo = pts[0].clone();
    let mut hi = pts[0].clone();
    for p in &pts[1..] {
        for k in 0..2 {
            if p[k] < lo[k] {
                lo[k] = p[k].clone();
            }
            if p[k] > hi[k] {
                hi[k] = p[k].clone();
            }
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polygon::{ipoint, RationalPolygon};
    use crate::geometry::triangulate::triangulate;
    use crate::rational::{int, ratio};

    fn tri(p: &RationalPolygon) -> Triangulation {
        Triangulation::new(triangulate(p))
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let pts = vec![ipoint(0, 0), ipoint(1, 0), ipoint(2, 0), ipoint(1, 1), ipoint(2, 2), ipoint(0, 2)];
        assert_eq!(convex_hull(&pts), vec![ipoint(0, 0), ipoint(2, 0), ipoint(2, 2), ipoint(0, 2)]);
    }

    #[test]
    fn square_difference_body() {
        let sq = tri(&RationalPolygon::from_i64(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap());
        let body = DifferenceBody::new(&sq, &sq);
        assert_eq!(body.locate(&ipoint(0, 0)), Location::Inside);
        assert_eq!(body.locate(&ipoint(1, 0)), Location::Boundary);
        assert_eq!(body.locate(&ipoint(1, 1)), Location::Boundary);
        assert_eq!(body.locate(&ipoint(2, 0)), Location::Outside);
        assert_eq!(body.locate(&[ratio(1, 2), ratio(-1, 2)]), Location::Inside);
    }

    #[test]
    fn triangle_difference_body_is_a_hexagon() {
        let t = tri(&RationalPolygon::from_i64(&[(0, 0), (1, 0), (0, 1)]).unwrap());
        let body = DifferenceBody::new(&t, &t);
        assert_eq!(body.locate(&ipoint(1, 1)), Location::Outside);
        assert_eq!(body.locate(&ipoint(1, -1)), Location::Boundary);
        assert_eq!(body.locate(&ipoint(1, 0)), Location::Boundary);
        assert_eq!(body.locate(&[ratio(1, 2), int(0)]), Location::Inside);
    }

    #[test]
    fn nonconvex_union_detects_interior_seams() {
        let l = tri(&RationalPolygon::from_i64(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]).unwrap());
        let body = DifferenceBody::new(&l, &l);
        assert_eq!(body.locate(&ipoint(1, 0)), Location::Inside);
        assert_eq!(body.locate(&ipoint(-1, 1)), Location::Inside);
        // Translates by (1,1) meet only along a segment, and the notch of the
        // L-shape makes (1,1) a reentrant boundary point of the body.
        assert_eq!(body.locate(&ipoint(1, 1)), Location::Boundary);
        assert_eq!(body.locate(&ipoint(0, 0)), Location::Inside);
        assert_eq!(body.locate(&ipoint(2, 2)), Location::Outside);
        assert_eq!(body.locate(&ipoint(2, 1)), Location::Boundary);
    }
}
