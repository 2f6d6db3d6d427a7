//! Convex clipping and closed-set contact tests on triangulations.

use num_traits::{Signed, Zero};

use super::polygon::{add, on_segment, orient, segments_intersect, signed_area2, sub};
use super::{Point, Triangle};
use crate::rational::{self, Q};

/// Sutherland–Hodgman: the part of convex `subject` inside convex `clip`
/// (both counterclockwise). The result may contain repeated points.
pub fn clip_convex(subject: &[Point], clip: &[Point]) -> Vec<Point> {
    let mut out: Vec<Point> = subject.to_vec();
    let m = clip.len();
    for i in 0..m {
        if out.is_empty() {
            break;
        }
        let a = &clip[i];
        let b = &clip[(i + 1) % m];
        let input = std::mem::take(&mut out);
        let k = input.len();
        for j in 0..k {
            let cur = &input[j];
            let prev = &input[(j + k - 1) % k];
            let s_cur = orient(a, b, cur);
            let s_prev = orient(a, b, prev);
            let cur_in = !s_cur.is_negative();
            let prev_in = !s_prev.is_negative();
            if cur_in != prev_in {
                out.push(crossing(prev, cur, &s_prev, &s_cur));
            }
            if cur_in {
                out.push(cur.clone());
            }
        }
    }
    out
}

fn crossing(p: &Point, q: &Point, sp: &Q, sq: &Q) -> Point {
    let t = sp / (sp - sq);
    let d = sub(q, p);
    [&p[0] + &t * &d[0], &p[1] + &t * &d[1]]
}

pub fn convex_area(pts: &[Point]) -> Q {
    if pts.len() < 3 {
        return Q::zero();
    }
    signed_area2(pts) / rational::int(2)
}

fn bbox(t: &[Point]) -> (Point, Point) {
    let mut lo = t[0].clone();
    let mut hi = t[0].clone();
    for p in &t[1..] {
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

/// Triangles with cached bounding boxes, ready for repeated queries.
#[derive(Debug, Clone)]
pub struct Triangulation {
    pub triangles: Vec<Triangle>,
    boxes: Vec<(Point, Point)>,
}

impl Triangulation {
    pub fn new(triangles: Vec<Triangle>) -> Self {
        let boxes = triangles.iter().map(|t| bbox(t)).collect();
        Self { triangles, boxes }
    }

    /// Area of `self ∩ (other + shift)`.
    pub fn intersection_area(&self, other: &Triangulation, shift: &Point) -> Q {
        let mut total = Q::zero();
        for (t, (tlo, thi)) in self.triangles.iter().zip(&self.boxes) {
            for (s, (slo, shi)) in other.triangles.iter().zip(&other.boxes) {
                if !boxes_overlap_open(tlo, thi, &add(slo, shift), &add(shi, shift)) {
                    continue;
                }
                let moved: Vec<Point> = s.iter().map(|p| add(p, shift)).collect();
                total += convex_area(&clip_convex(t, &moved));
            }
        }
        total
    }

    /// Whether `self` and `other + shift` share a point (as closed sets).
    pub fn touches(&self, other: &Triangulation, shift: &Point) -> bool {
        self.triangles.iter().zip(&self.boxes).any(|(t, (tlo, thi))| {
            other.triangles.iter().zip(&other.boxes).any(|(s, (slo, shi))| {
                if !boxes_overlap_closed(tlo, thi, &add(slo, shift), &add(shi, shift)) {
                    return false;
                }
                let moved: Vec<Point> = s.iter().map(|p| add(p, shift)).collect();
                triangles_touch(t, &moved)
            })
        })
    }

    pub fn bbox(&self) -> (Point, Point) {
        let all: Vec<Point> = self.boxes.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        bbox(&all)
    }
}

fn boxes_overlap_open(alo: &Point, ahi: &Point, blo: &Point, bhi: &Point) -> bool {
    (0..2).all(|k| alo[k] < bhi[k] && blo[k] < ahi[k])
}

fn boxes_overlap_closed(alo: &Point, ahi: &Point, blo: &Point, bhi: &Point) -> bool {
    (0..2).all(|k| alo[k] <= bhi[k] && blo[k] <= ahi[k])
}

fn in_closed_triangle(p: &Point, t: &[Point]) -> bool {
    (0..3).all(|i| !orient(&t[i], &t[(i + 1) % 3], p).is_negative())
}

fn triangles_touch(t: &[Point], s: &[Point]) -> bool {
    for i in 0..3 {
        for j in 0..3 {
            if segments_intersect(&t[i], &t[(i + 1) % 3], &s[j], &s[(j + 1) % 3]) {
                return true;
            }
        }
    }
    in_closed_triangle(&t[0], s) || in_closed_triangle(&s[0], t)
}

/// Whether `p` lies in the closed union of the triangles.
pub fn covers_point(tri: &Triangulation, p: &Point) -> bool {
    tri.triangles.iter().any(|t| {
        in_closed_triangle(p, t) || (0..3).any(|i| on_segment(p, &t[i], &t[(i + 1) % 3]))
    })
}
