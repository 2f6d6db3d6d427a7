use num_traits::{Signed, Zero};

use super::polygon::{orient, signed_area2, RationalPolygon};
use super::{Point, Triangle};
use crate::rational::{self, Q};

/// Ear-clipping triangulation. Triangles are counterclockwise and their
/// interiors are pairwise disjoint.
pub fn triangulate(p: &RationalPolygon) -> Vec<Triangle> {
    let mut ring: Vec<Point> = p.vertices().to_vec();
    let mut out = Vec::with_capacity(ring.len().saturating_sub(2));
    while ring.len() > 3 {
        let n = ring.len();
        let ear = (0..n)
            .find(|&i| is_ear(&ring, i))
            .expect("a simple polygon always has an ear");
        let prev = (ear + n - 1) % n;
        let next = (ear + 1) % n;
        out.push([ring[prev].clone(), ring[ear].clone(), ring[next].clone()]);
        ring.remove(ear);
        drop_collinear(&mut ring);
    }
    if ring.len() == 3 {
        out.push([ring[0].clone(), ring[1].clone(), ring[2].clone()]);
    }
    out
}

fn is_ear(ring: &[Point], i: usize) -> bool {
    let n = ring.len();
    let a = &ring[(i + n - 1) % n];
    let b = &ring[i];
    let c = &ring[(i + 1) % n];
    if !orient(a, b, c).is_positive() {
        return false;
    }
    ring.iter().enumerate().all(|(j, p)| {
        j == i || j == (i + 1) % n || j == (i + n - 1) % n || !in_closed_triangle(p, a, b, c)
    })
}

fn in_closed_triangle(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    !orient(a, b, p).is_negative() && !orient(b, c, p).is_negative() && !orient(c, a, p).is_negative()
}

fn drop_collinear(ring: &mut Vec<Point>) {
    loop {
        let n = ring.len();
        if n <= 3 {
            return;
        }
        match (0..n).find(|&i| orient(&ring[(i + n - 1) % n], &ring[i], &ring[(i + 1) % n]).is_zero()) {
            Some(i) => {
                ring.remove(i);
            }
            None => return,
        }
    }
}

pub fn triangle_area(t: &Triangle) -> Q {
    signed_area2(t) / rational::int(2)
}

pub fn total_area(ts: &[Triangle]) -> Q {
    ts.iter().map(triangle_area).fold(Q::zero(), |a, b| a + b)
}
