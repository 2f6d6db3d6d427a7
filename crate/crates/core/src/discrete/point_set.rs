use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::DiscreteError;
use crate::lattice::IntVec;

/// Nonempty finite subset of `Z^d`, kept sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePointSet {
    dim: usize,
    points: Vec<IntVec>,
}

impl FinitePointSet {
    pub fn new(dim: usize, mut points: Vec<IntVec>) -> Result<Self, DiscreteError> {
        if dim == 0 {
            return Err(DiscreteError::ZeroDimension);
        }
        if points.is_empty() {
            return Err(DiscreteError::EmptySet);
        }
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(DiscreteError::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        points.sort();
        points.dedup();
        Ok(Self { dim, points })
    }

    pub fn from_i64(dim: usize, points: &[&[i64]]) -> Result<Self, DiscreteError> {
        Self::new(
            dim,
            points
                .iter()
                .map(|p| p.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// One-dimensional set from plain integers.
    pub fn from_integers(values: &[i64]) -> Result<Self, DiscreteError> {
        Self::new(1, values.iter().map(|&x| vec![BigInt::from(x)]).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[IntVec] {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &IntVec> {
        self.points.iter()
    }

    pub fn contains(&self, p: &[BigInt]) -> bool {
        self.points
            .binary_search_by(|q| q.as_slice().cmp(p))
            .is_ok()
    }

    pub(crate) fn check_dim(&self, found: usize) -> Result<(), DiscreteError> {
        if found == self.dim {
            Ok(())
        } else {
            Err(DiscreteError::DimensionMismatch {
                expected: self.dim,
                found,
            })
        }
    }

    /// `F - F`; contains the origin and is symmetric under negation.
    pub fn difference_set(&self) -> FinitePointSet {
        let diffs = self
            .points
            .iter()
            .flat_map(|a| {
                self.points
                    .iter()
                    .map(move |b| a.iter().zip(b).map(|(x, y)| x - y).collect())
            })
            .collect();
        FinitePointSet::new(self.dim, diffs).expect("difference set of a nonempty set")
    }

    pub fn translate(&self, t: &[BigInt]) -> Result<FinitePointSet, DiscreteError> {
        self.check_dim(t.len())?;
        let moved = self
            .points
            .iter()
            .map(|p| p.iter().zip(t).map(|(x, y)| x + y).collect())
            .collect();
        FinitePointSet::new(self.dim, moved)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "points": self.points.iter()
                .map(|p| p.iter().map(json_int).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    /// Parses `{"dim": d, "points": [[...], ...]}`. Coordinates may be JSON
    /// integers or decimal strings.
    pub fn from_json(v: &Value) -> Result<Self, DiscreteError> {
        let pts = v
            .get("points")
            .and_then(Value::as_array)
            .ok_or_else(|| DiscreteError::Parse("missing `points` array".into()))?;
        let mut points = Vec::with_capacity(pts.len());
        for p in pts {
            let coords = p
                .as_array()
                .ok_or_else(|| DiscreteError::Parse("each point must be an array".into()))?;
            let parsed: Result<IntVec, _> = coords.iter().map(parse_int).collect();
            points.push(parsed?);
        }
        let dim = match v.get("dim") {
            Some(d) => d
                .as_u64()
                .ok_or_else(|| DiscreteError::Parse("`dim` must be a positive integer".into()))?
                as usize,
            None => points
                .first()
                .map(Vec::len)
                .ok_or(DiscreteError::EmptySet)?,
        };
        FinitePointSet::new(dim, points)
    }
}

fn json_int(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    }
}

fn parse_int(v: &Value) -> Result<BigInt, DiscreteError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| DiscreteError::Parse(format!("`{n}` is not an integer"))),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| DiscreteError::Parse(format!("`{s}` is not an integer"))),
        other => Err(DiscreteError::Parse(format!("`{other}` is not an integer"))),
    }
}

impl fmt::Display for FinitePointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if self.dim == 1 {
                write!(f, "{}", p[0])?;
            } else {
                let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(","))?;
            }
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_deduplicated() {
        let f = FinitePointSet::from_integers(&[6, 1, 4, 3, 1]).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.to_string(), "{1, 3, 4, 6}");
    }

    #[test]
    fn rejects_empty_and_ragged() {
        assert_eq!(FinitePointSet::new(1, vec![]), Err(DiscreteError::EmptySet));
        assert!(matches!(
            FinitePointSet::from_i64(2, &[&[0, 0], &[1]]),
            Err(DiscreteError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn difference_set_one_dimensional() {
        let f = FinitePointSet::from_integers(&[1, 3, 4, 6]).unwrap();
        let d = f.difference_set();
        let expected = FinitePointSet::from_integers(&[-5, -3, -2, -1, 0, 1, 2, 3, 5]).unwrap();
        assert_eq!(d, expected);
        let single = FinitePointSet::from_integers(&[0]).unwrap();
        assert_eq!(single.difference_set(), single);
    }

    #[test]
    fn json_round_trip() {
        let f = FinitePointSet::from_i64(2, &[&[0, 0], &[1, -3]]).unwrap();
        assert_eq!(FinitePointSet::from_json(&f.to_json()).unwrap(), f);
        let v = serde_json::json!({"dim": 1, "points": [[1], ["3"], [4]]});
        assert_eq!(FinitePointSet::from_json(&v).unwrap().len(), 3);
        assert!(FinitePointSet::from_json(&serde_json::json!({"points": [[1.5]]})).is_err());
        assert!(FinitePointSet::from_json(&serde_json::json!({"dim": 2})).is_err());
    }
}
