//! Exact lattice arithmetic.
//!
//! Basis vectors are the *columns* of the basis matrix. Integer lattices keep
//! a cached lower-triangular column Hermite normal form, which drives
//! membership tests and box enumeration. Rational lattices are stored as an
//! integer lattice scaled by `1/q`.

mod enumerate;
pub mod hnf;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::rational::{self, Q};

pub use enumerate::{EnumerationLimits, DEFAULT_MAX_POINTS};

pub type IntVec = Vec<BigInt>;
pub type QVec = Vec<Q>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("basis is singular (determinant 0)")]
    SingularBasis,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis must contain at least one vector")]
    EmptyBasis,
    #[error("enumeration would exceed the cap of {limit} points")]
    BoxTooLarge { limit: usize },
    #[error("box lower corner exceeds upper corner")]
    InvalidBox,
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("lattice is not contained in Z^d")]
    NotIntegral,
    #[error("malformed lattice JSON: {0}")]
    Parse(String),
}

fn check_square<T>(columns: &[Vec<T>]) -> Result<usize, LatticeError> {
    let d = columns.len();
    if d == 0 {
        return Err(LatticeError::EmptyBasis);
    }
    for c in columns {
        if c.len() != d {
            return Err(LatticeError::DimensionMismatch {
                expected: d,
                found: c.len(),
            });
        }
    }
    Ok(d)
}

/// Full-rank sublattice of Z^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<IntVec>,
    hnf: Vec<IntVec>,
    det: BigInt,
}

impl IntegerLattice {
    pub fn new(columns: Vec<IntVec>) -> Result<Self, LatticeError> {
        let dim = check_square(&columns)?;
        let hnf = hnf::column_hnf(&columns).ok_or(LatticeError::SingularBasis)?;
        let det = (0..dim).fold(BigInt::one(), |acc, i| acc * &hnf[i][i]);
        Ok(Self {
            dim,
            basis: columns,
            hnf,
            det,
        })
    }

    pub fn from_i64_columns(columns: &[&[i64]]) -> Result<Self, LatticeError> {
        Self::new(
            columns
                .iter()
                .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// `Z^d`.
    pub fn standard(dim: usize) -> Self {
        let cols = (0..dim)
            .map(|j| {
                (0..dim)
                    .map(|i| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        Self::new(cols).expect("identity is nonsingular")
    }

    /// `m Z^d`.
    pub fn scaled_standard(dim: usize, m: i64) -> Result<Self, LatticeError> {
        let cols = (0..dim)
            .map(|j| {
                (0..dim)
                    .map(|i| if i == j { BigInt::from(m) } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        Self::new(cols)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    pub fn hnf(&self) -> &[IntVec] {
        &self.hnf
    }

    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// Coefficients of `n` in the HNF basis, if `n` is a lattice vector.
    pub fn hnf_coordinates(&self, n: &[BigInt]) -> Result<Option<IntVec>, LatticeError> {
        if n.len() != self.dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dim,
                found: n.len(),
            });
        }
        let mut coeffs = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut r = n[i].clone();
            for (j, a) in coeffs.iter().enumerate() {
                r -= &self.hnf[j][i] * a;
            }
            let (q, rem) = r.div_rem(&self.hnf[i][i]);
            if !rem.is_zero() {
                return Ok(None);
            }
            coeffs.push(q);
        }
        Ok(Some(coeffs))
    }

    pub fn contains(&self, n: &[BigInt]) -> Result<bool, LatticeError> {
        Ok(self.hnf_coordinates(n)?.is_some())
    }

    /// Canonical representative of `n + L` in the box `prod [0, H_ii)`.
    pub fn reduce(&self, n: &[BigInt]) -> Result<IntVec, LatticeError> {
        if n.len() != self.dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dim,
                found: n.len(),
            });
        }
        let mut x = n.to_vec();
        for i in 0..self.dim {
            let q = x[i].div_floor(&self.hnf[i][i]);
            if q.is_zero() {
                continue;
            }
            for (r, xr) in x.iter_mut().enumerate().skip(i) {
                *xr -= &q * &self.hnf[i][r];
            }
        }
        Ok(x)
    }

    /// `B a` for an integer coefficient vector.
    pub fn combine(&self, coeffs: &[BigInt]) -> IntVec {
        let mut out = vec![BigInt::zero(); self.dim];
        for (col, a) in self.basis.iter().zip(coeffs) {
            for (o, c) in out.iter_mut().zip(col) {
                *o += c * a;
            }
        }
        out
    }

    pub fn to_rational(&self) -> RationalLattice {
        RationalLattice::new(
            self.basis
                .iter()
                .map(|c| c.iter().map(rational::from_bigint).collect())
                .collect(),
        )
        .expect("integer lattice is nonsingular")
    }

    /// Representatives of `L* / Z^d`, reduced into `[0,1)^d`, sorted.
    pub fn dual_coset_reps(&self) -> Vec<DualCosetRep> {
        let dual = self.to_rational().dual();
        let gens: Vec<QVec> = dual.basis().iter().map(|v| frac_vec(v)).collect();
        let zero: QVec = vec![Q::zero(); self.dim];
        let mut seen: BTreeSet<QVec> = BTreeSet::new();
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(v) = frontier.pop() {
            for g in &gens {
                let w: QVec = v.iter().zip(g).map(|(a, b)| frac(&(a + b))).collect();
                if seen.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        seen.into_iter()
            .map(|vector| {
                let all_coords_noninteger = vector.iter().all(|c| !c.is_zero());
                DualCosetRep {
                    vector,
                    denominator: self.det.clone(),
                    all_coords_noninteger,
                }
            })
            .collect()
    }

    pub fn enumerate_in_box(
        &self,
        lo: &[Q],
        hi: &[Q],
        limits: EnumerationLimits,
    ) -> Result<Vec<IntVec>, LatticeError> {
        enumerate::hnf_box(&self.hnf, &BigInt::one(), lo, hi, limits)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "basis": self.basis.iter()
                .map(|c| c.iter().map(|x| Value::String(x.to_string())).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

fn frac(q: &Q) -> Q {
    q - Q::from_integer(rational::floor(q))
}

fn frac_vec(v: &[Q]) -> QVec {
    v.iter().map(frac).collect()
}

/// A class of `L* / Z^d`. Exponential sums over integer points depend on a
/// dual vector only through this class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualCosetRep {
    pub vector: QVec,
    pub denominator: BigInt,
    pub all_coords_noninteger: bool,
}

impl DualCosetRep {
    pub fn is_zero(&self) -> bool {
        self.vector.iter().all(Zero::is_zero)
    }

    /// `M * vector` as integers.
    pub fn scaled_numerators(&self) -> IntVec {
        self.vector
            .iter()
            .map(|c| {
                let s = c * Q::from_integer(self.denominator.clone());
                debug_assert!(s.is_integer());
                s.to_integer()
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vector": self.vector.iter().map(rational::to_json).collect::<Vec<_>>(),
            "denominator": self.denominator.to_string(),
            "all_coords_noninteger": self.all_coords_noninteger,
        })
    }
}

/// Full-rank lattice in Q^d, kept as `(1/scale) * integer`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalLattice {
    dim: usize,
    basis: Vec<QVec>,
    det: Q,
    scale: BigInt,
    integer: IntegerLattice,
}

impl RationalLattice {
    pub fn new(columns: Vec<QVec>) -> Result<Self, LatticeError> {
        let dim = check_square(&columns)?;
        let scale = rational::lcm_of_denominators(columns.iter().flatten());
        let scale_q = Q::from_integer(scale.clone());
        let int_cols: Vec<IntVec> = columns
            .iter()
            .map(|c| c.iter().map(|x| (x * &scale_q).to_integer()).collect())
            .collect();
        let integer = IntegerLattice::new(int_cols)?;
        let det = Q::new(integer.det().clone(), num_traits::pow(scale.clone(), dim));
        Ok(Self {
            dim,
            basis: columns,
            det,
            scale,
            integer,
        })
    }

    pub fn from_ratio_columns(columns: &[&[(i64, i64)]]) -> Result<Self, LatticeError> {
        Self::new(
            columns
                .iter()
                .map(|c| c.iter().map(|&(p, q)| rational::ratio(p, q)).collect())
                .collect(),
        )
    }

    pub fn from_i64_columns(columns: &[&[i64]]) -> Result<Self, LatticeError> {
        Ok(IntegerLattice::from_i64_columns(columns)?.to_rational())
    }

    pub fn standard(dim: usize) -> Self {
        IntegerLattice::standard(dim).to_rational()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    pub fn det(&self) -> &Q {
        &self.det
    }

    /// Integer lattice `scale * L`.
    pub fn scaled_integer(&self) -> (&BigInt, &IntegerLattice) {
        (&self.scale, &self.integer)
    }

    pub fn to_integer(&self) -> Result<IntegerLattice, LatticeError> {
        if self.scale.is_one() {
            Ok(self.integer.clone())
        } else {
            Err(LatticeError::NotIntegral)
        }
    }

    pub fn contains(&self, x: &[Q]) -> Result<bool, LatticeError> {
        if x.len() != self.dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let s = Q::from_integer(self.scale.clone());
        let mut n = Vec::with_capacity(self.dim);
        for c in x {
            let y = c * &s;
            if !y.is_integer() {
                return Ok(false);
            }
            n.push(y.to_integer());
        }
        self.integer.contains(&n)
    }

    /// Dual lattice: basis `B^{-T}`, so that `<b_i, b*_j> = delta_ij`.
    pub fn dual(&self) -> RationalLattice {
        let rows: Vec<QVec> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis[j][i].clone()).collect())
            .collect();
        let inv = hnf::rational_inverse(&rows).expect("lattice basis is nonsingular");
        // Columns of (B^{-1})^T are the rows of B^{-1}.
        let dual = RationalLattice::new(inv).expect("inverse is nonsingular");
        assert!(
            (&dual.det * &self.det).is_one(),
            "dual determinant must be the reciprocal"
        );
        dual
    }

    pub fn enumerate_in_box(
        &self,
        lo: &[Q],
        hi: &[Q],
        limits: EnumerationLimits,
    ) -> Result<Vec<QVec>, LatticeError> {
        for v in [lo, hi] {
            if v.len() != self.dim {
                return Err(LatticeError::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let s = Q::from_integer(self.scale.clone());
        let pts = enumerate::hnf_box(self.integer.hnf(), &self.scale, lo, hi, limits)?;
        Ok(pts
            .into_iter()
            .map(|p| p.into_iter().map(|x| Q::from_integer(x) / &s).collect())
            .collect())
    }

    /// All dual vectors with Euclidean norm at most `radius`, sorted by
    /// squared norm and then lexicographically. Includes the origin.
    pub fn dual_in_ball(
        &self,
        radius: &Q,
        limits: EnumerationLimits,
    ) -> Result<Vec<QVec>, LatticeError> {
        self.dual().points_in_ball(radius, limits)
    }

    /// Lattice points (of `self`) in the closed ball of the given radius.
    pub fn points_in_ball(
        &self,
        radius: &Q,
        limits: EnumerationLimits,
    ) -> Result<Vec<QVec>, LatticeError> {
        if !radius.is_positive() {
            return Err(LatticeError::NonPositiveRadius);
        }
        let lo = vec![-radius.clone(); self.dim];
        let hi = vec![radius.clone(); self.dim];
        let r2 = radius * radius;
        let mut pts: Vec<(Q, QVec)> = self
            .enumerate_in_box(&lo, &hi, limits)?
            .into_iter()
            .map(|p| (norm2(&p), p))
            .filter(|(n, _)| *n <= r2)
            .collect();
        pts.sort();
        Ok(pts.into_iter().map(|(_, p)| p).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "basis": self.basis.iter()
                .map(|c| c.iter().map(rational::to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    /// Parses `{"dim": d, "basis": [[...], ...]}`; each inner array is one
    /// basis vector. Entries are integers or `"p/q"` strings.
    pub fn from_json(v: &Value) -> Result<Self, LatticeError> {
        let basis = v
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(|| LatticeError::Parse("missing `basis` array".into()))?;
        let mut cols = Vec::with_capacity(basis.len());
        for col in basis {
            let col = col
                .as_array()
                .ok_or_else(|| LatticeError::Parse("basis vectors must be arrays".into()))?;
            let parsed: Result<QVec, _> = col.iter().map(rational::from_json).collect();
            cols.push(parsed.map_err(|e| LatticeError::Parse(e.to_string()))?);
        }
        if let Some(d) = v.get("dim") {
            let d = d
                .as_u64()
                .ok_or_else(|| LatticeError::Parse("`dim` must be a positive integer".into()))?
                as usize;
            if d != cols.len() {
                return Err(LatticeError::DimensionMismatch {
                    expected: d,
                    found: cols.len(),
                });
            }
        }
        RationalLattice::new(cols)
    }
}

pub fn norm2(v: &[Q]) -> Q {
    v.iter().fold(Q::zero(), |acc, x| acc + x * x)
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}
