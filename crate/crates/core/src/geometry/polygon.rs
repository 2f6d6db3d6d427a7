use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::{GeometryError, Point};
use crate::rational::{self, Q};

pub fn sub(a: &Point, b: &Point) -> Point {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

pub fn add(a: &Point, b: &Point) -> Point {
    [&a[0] + &b[0], &a[1] + &b[1]]
}

pub fn cross(u: &Point, v: &Point) -> Q {
    &u[0] * &v[1] - &u[1] * &v[0]
}

pub fn dot(u: &Point, v: &Point) -> Q {
    &u[0] * &v[0] + &u[1] * &v[1]
}

/// Twice the signed area of `abc`; positive for a left turn.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Q {
    cross(&sub(b, a), &sub(c, a))
}

pub fn point(x: Q, y: Q) -> Point {
    [x, y]
}

pub fn ipoint(x: i64, y: i64) -> Point {
    [rational::int(x), rational::int(y)]
}

/// `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p).is_zero()
        && p[0] >= a[0].clone().min(b[0].clone())
        && p[0] <= a[0].clone().max(b[0].clone())
        && p[1] >= a[1].clone().min(b[1].clone())
        && p[1] <= a[1].clone().max(b[1].clone())
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let d1 = orient(c, d, a).signum();
    let d2 = orient(c, d, b).signum();
    let d3 = orient(a, b, c).signum();
    let d4 = orient(a, b, d).signum();
    if &d1 * &d2 < Q::zero() && &d3 * &d4 < Q::zero() {
        return true;
    }
    on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b)
}

/// Twice the signed area (shoelace).
pub fn signed_area2(vertices: &[Point]) -> Q {
    let n = vertices.len();
    (0..n).fold(Q::zero(), |acc, i| {
        acc + cross(&vertices[i], &vertices[(i + 1) % n])
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Simple polygon with exact rational vertices in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolygon {
    vertices: Vec<Point>,
}

impl RationalPolygon {
    /// Validates and canonicalizes: repeated and collinear vertices are
    /// dropped, clockwise input is reversed, and self-intersections are
    /// rejected.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        let mut v = vertices;
        v.dedup();
        while v.len() > 1 && v.first() == v.last() {
            v.pop();
        }
        let mut changed = true;
        while changed && v.len() >= 3 {
            changed = false;
            let n = v.len();
            if let Some(i) = (0..n).find(|&i| orient(&v[(i + n - 1) % n], &v[i], &v[(i + 1) % n]).is_zero()) {
                v.remove(i);
                changed = true;
            }
        }
        if v.len() < 3 {
            return Err(GeometryError::InvalidPolygon(
                "fewer than three non-collinear vertices".into(),
            ));
        }
        let a2 = signed_area2(&v);
        if a2.is_zero() {
            return Err(GeometryError::InvalidPolygon("zero area".into()));
        }
        if a2.is_negative() {
            v.reverse();
        }
        let n = v.len();
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                if segments_intersect(&v[i], &v[(i + 1) % n], &v[j], &v[(j + 1) % n]) {
                    return Err(GeometryError::InvalidPolygon(format!(
                        "edges {i} and {j} intersect"
                    )));
                }
            }
        }
        Ok(Self { vertices: v })
    }

    pub fn from_i64(vertices: &[(i64, i64)]) -> Result<Self, GeometryError> {
        Self::new(vertices.iter().map(|&(x, y)| ipoint(x, y)).collect())
    }

    pub fn from_ratios(vertices: &[((i64, i64), (i64, i64))]) -> Result<Self, GeometryError> {
        Self::new(
            vertices
                .iter()
                .map(|&((a, b), (c, d))| [rational::ratio(a, b), rational::ratio(c, d)])
                .collect(),
        )
    }

    /// Axis-parallel rectangle `[x0, x1] x [y0, y1]`.
    pub fn rectangle(x0: Q, y0: Q, x1: Q, y1: Q) -> Result<Self, GeometryError> {
        Self::new(vec![
            [x0.clone(), y0.clone()],
            [x1.clone(), y0],
            [x1, y1.clone()],
            [x0, y1],
        ])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> Q {
        signed_area2(&self.vertices) / rational::int(2)
    }

    pub fn translate(&self, t: &Point) -> RationalPolygon {
        RationalPolygon {
            vertices: self.vertices.iter().map(|p| add(p, t)).collect(),
        }
    }

    /// Image under `x -> s x` for `s > 0`.
    pub fn scale(&self, s: &Q) -> Result<RationalPolygon, GeometryError> {
        if !s.is_positive() {
            return Err(GeometryError::InvalidPolygon("scale must be positive".into()));
        }
        Ok(RationalPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|p| [&p[0] * s, &p[1] * s])
                .collect(),
        })
    }

    /// Point reflection through the origin.
    pub fn negate(&self) -> RationalPolygon {
        RationalPolygon {
            vertices: self.vertices.iter().map(|p| [-&p[0], -&p[1]]).collect(),
        }
    }

    /// `(min corner, max corner)`.
    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for p in &self.vertices[1..] {
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

    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            orient(
                &self.vertices[i],
                &self.vertices[(i + 1) % n],
                &self.vertices[(i + 2) % n],
            )
            .is_positive()
        })
    }

    /// Invariant under `x -> -x`.
    pub fn is_centrally_symmetric(&self) -> bool {
        let n = self.vertices.len();
        if n % 2 == 1 {
            return false;
        }
        let neg = self.negate();
        let Some(start) = neg.vertices.iter().position(|p| *p == self.vertices[0]) else {
            return false;
        };
        (0..n).all(|i| self.vertices[i] == neg.vertices[(start + i) % n])
    }

    pub fn locate(&self, p: &Point) -> Location {
        if self.edges().any(|(a, b)| on_segment(p, a, b)) {
            return Location::Boundary;
        }
        let mut inside = false;
        for (a, b) in self.edges() {
            if (a[1] > p[1]) != (b[1] > p[1]) {
                let x = &a[0] + (&p[1] - &a[1]) * (&b[0] - &a[0]) / (&b[1] - &a[1]);
                if p[0] < x {
                    inside = !inside;
                }
            }
        }
        if inside {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter()
                .map(|p| vec![rational::to_json(&p[0]), rational::to_json(&p[1])])
                .collect::<Vec<_>>(),
        })
    }

    /// Parses `{"vertices": [["p/q", "r/s"], ...]}`.
    pub fn from_json(v: &Value) -> Result<Self, GeometryError> {
        let verts = v
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| GeometryError::Parse("missing `vertices` array".into()))?;
        let mut pts = Vec::with_capacity(verts.len());
        for p in verts {
            let xy = p
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| GeometryError::Parse("each vertex must be a pair".into()))?;
            let x = rational::from_json(&xy[0]).map_err(|e| GeometryError::Parse(e.to_string()))?;
            let y = rational::from_json(&xy[1]).map_err(|e| GeometryError::Parse(e.to_string()))?;
            pts.push([x, y]);
        }
        Self::new(pts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn areas() {
        let sq = RationalPolygon::from_i64(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(sq.area(), int(1));
        let tri = RationalPolygon::from_i64(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(tri.area(), ratio(1, 2));
        let rect = RationalPolygon::from_i64(&[(0, 0), (2, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(rect.area(), int(2));
    }

    #[test]
    fn canonicalization() {
        let cw = RationalPolygon::from_i64(&[(0, 0), (0, 1), (1, 1), (1, 0)]).unwrap();
        assert_eq!(cw.area(), int(1));
        let collinear =
            RationalPolygon::from_i64(&[(0, 0), (1, 0), (2, 0), (2, 2), (2, 2), (0, 2)]).unwrap();
        assert_eq!(collinear.len(), 4);
        assert_eq!(collinear.area(), int(4));
    }

    #[test]
    fn rejects_invalid() {
        assert!(RationalPolygon::from_i64(&[(0, 0), (1, 1), (2, 2)]).is_err());
        assert!(RationalPolygon::from_i64(&[(0, 0), (1, 0)]).is_err());
        let bowtie = RationalPolygon::from_i64(&[(0, 0), (2, 2), (2, 0), (0, 2)]);
        assert!(matches!(bowtie, Err(GeometryError::InvalidPolygon(_))));
        // Two squares meeting at a single vertex.
        let pinched =
            RationalPolygon::from_i64(&[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (1, 2), (1, 1), (0, 1)]);
        assert!(pinched.is_err());
    }

    #[test]
    fn location() {
        let l = RationalPolygon::from_i64(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(l.locate(&[ratio(1, 2), ratio(3, 2)]), Location::Inside);
        assert_eq!(l.locate(&[ratio(3, 2), ratio(3, 2)]), Location::Outside);
        assert_eq!(l.locate(&ipoint(1, 1)), Location::Boundary);
        assert_eq!(l.locate(&[ratio(3, 2), int(1)]), Location::Boundary);
        assert_eq!(l.locate(&[int(3), int(0)]), Location::Outside);
    }

    #[test]
    fn convexity_and_symmetry() {
        let sq = RationalPolygon::from_i64(&[(-1, -1), (1, -1), (1, 1), (-1, 1)]).unwrap();
        assert!(sq.is_convex() && sq.is_centrally_symmetric());
        let off = sq.translate(&ipoint(1, 0));
        assert!(off.is_convex() && !off.is_centrally_symmetric());
        let l = RationalPolygon::from_i64(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!l.is_convex());
    }

    #[test]
    fn json_round_trip() {
        let p = RationalPolygon::from_ratios(&[((0, 1), (0, 1)), ((3, 2), (0, 1)), ((0, 1), (5, 3))]).unwrap();
        assert_eq!(RationalPolygon::from_json(&p.to_json()).unwrap(), p);
        assert!(RationalPolygon::from_json(&serde_json::json!({"vertices": [[0, 0], [1]]})).is_err());
        assert!(RationalPolygon::from_json(&serde_json::json!({"vertices": [[0, 0], [1, "x"], [0, 1]]})).is_err());
    }
}
