//! Column-style Hermite normal form and exact determinants.
//!
//! Matrices are stored column-major as `Vec<column>`, so `m[j][i]` is the
//! entry in row `i` of column `j`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::Q;

/// Absolute determinant by fraction-free (Bareiss) elimination.
pub fn int_determinant(columns: &[Vec<BigInt>]) -> BigInt {
    let d = columns.len();
    if d == 0 {
        return BigInt::from(1);
    }
    // Work row-major on a copy: a[i][j] = row i, column j.
    let mut a: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| columns[j][i].clone()).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..d {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..d).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[d - 1][d - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Signed determinant over the rationals (Gaussian elimination).
pub fn rational_determinant(columns: &[Vec<Q>]) -> Q {
    let d = columns.len();
    let mut a: Vec<Vec<Q>> = (0..d)
        .map(|i| (0..d).map(|j| columns[j][i].clone()).collect())
        .collect();
    let mut det = Q::from_integer(BigInt::from(1));
    for k in 0..d {
        let Some(p) = (k..d).find(|&r| !a[r][k].is_zero()) else {
            return Q::zero();
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..d {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..d {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

/// Inverse over the rationals, row-major in and out. `None` if singular.
pub fn rational_inverse(rows: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let d = rows.len();
    let one = Q::from_integer(BigInt::from(1));
    let mut a: Vec<Vec<Q>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..d).map(|j| if i == j { one.clone() } else { Q::zero() }));
            row
        })
        .collect();
    for k in 0..d {
        let p = (k..d).find(|&r| !a[r][k].is_zero())?;
        a.swap(k, p);
        let pivot = a[k][k].clone();
        for v in a[k].iter_mut() {
            *v /= &pivot;
        }
        for i in 0..d {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..2 * d {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    Some(a.into_iter().map(|r| r[d..].to_vec()).collect())
}

/// Lower-triangular column HNF: `H = B U` with `U` unimodular, positive
/// diagonal, and `0 <= H[i][j] < H[i][i]` for `j < i`. Returns `None` when the
/// columns are linearly dependent.
pub fn column_hnf(columns: &[Vec<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    let d = columns.len();
    let mut h: Vec<Vec<BigInt>> = columns.to_vec();
    for row in 0..d {
        for j in row + 1..d {
            if h[j][row].is_zero() {
                continue;
            }
            let a = h[row][row].clone();
            let b = h[j][row].clone();
            let eg = a.extended_gcd(&b);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let ag = &a / &g;
            let bg = &b / &g;
            let (left, right) = h.split_at_mut(j);
            let col_r = &mut left[row];
            let col_j = &mut right[0];
            for i in 0..d {
                let r = col_r[i].clone();
                let c = col_j[i].clone();
                col_r[i] = &s * &r + &t * &c;
                col_j[i] = &ag * &c - &bg * &r;
            }
        }
        if h[row][row].is_zero() {
            return None;
        }
        if h[row][row].is_negative() {
            for v in h[row].iter_mut() {
                *v = -v.clone();
            }
        }
        let pivot_col = h[row].clone();
        let pivot = pivot_col[row].clone();
        for col in h.iter_mut().take(row) {
            let q = col[row].div_floor(&pivot);
            if q.is_zero() {
                continue;
            }
            for i in row..d {
                col[i] -= &q * &pivot_col[i];
            }
        }
    }
    Some(h)
}
