//! Parsing of command-line operands: inline JSON, file paths and names.

use std::path::Path;

use serde_json::Value;

use super::CliError;
use crate::discrete::FinitePointSet;
use crate::geometry::{builtin, Point, RationalPolygon, BUILTIN_NAMES};
use crate::lattice::{IntegerLattice, RationalLattice};
use crate::rational::{self, Q};

/// Inline JSON if the text parses as JSON, otherwise the contents of the
/// named file.
fn json_operand(text: &str) -> Result<Value, CliError> {
    match serde_json::from_str::<Value>(text) {
        Ok(v) => return Ok(v),
        Err(e) if text.trim_start().starts_with(['{', '[']) => {
            return Err(CliError::Input(format!("malformed JSON: {e}")))
        }
        Err(_) => {}
    }
    let path = Path::new(text);
    let body = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read `{text}`: {e}")))?;
    serde_json::from_str(&body).map_err(|e| CliError::Input(format!("`{text}` is not valid JSON: {e}")))
}

/// Named lattices: `Z1`, `Z2`, `Z3`, `D2`, and scaled forms such as `4Z`
/// or `3Z2`. Anything else is read as JSON: `{"dim", "basis"}` or a bare
/// array of basis columns.
pub fn lattice(text: &str) -> Result<RationalLattice, CliError> {
    if let Some(l) = named_lattice(text)? {
        return Ok(l);
    }
    let v = json_operand(text)?;
    let v = if v.is_array() {
        serde_json::json!({ "basis": v })
    } else {
        v
    };
    Ok(RationalLattice::from_json(&v)?)
}

fn named_lattice(text: &str) -> Result<Option<RationalLattice>, CliError> {
    if text == "D2" {
        return Ok(Some(crate::geometry::builtins::checkerboard()));
    }
    let Some(pos) = text.find('Z') else {
        return Ok(None);
    };
    let (scale, dim) = (&text[..pos], &text[pos + 1..]);
    let dim: usize = match dim {
        "" => 1,
        d => match d.parse() {
            Ok(d) => d,
            Err(_) => return Ok(None),
        },
    };
    let scale: i64 = match scale {
        "" => 1,
        s => match s.parse() {
            Ok(s) => s,
            Err(_) => return Ok(None),
        },
    };
    if dim == 0 || dim > 8 || scale <= 0 {
        return Err(CliError::Input(format!("bad lattice name `{text}`")));
    }
    Ok(Some(IntegerLattice::scaled_standard(dim, scale)?.to_rational()))
}

pub fn integer_lattice(text: &str) -> Result<IntegerLattice, CliError> {
    Ok(lattice(text)?.to_integer()?)
}

/// `{"dim", "points"}`, a bare array of integers (dimension 1) or a bare
/// array of integer vectors.
pub fn point_set(text: &str) -> Result<FinitePointSet, CliError> {
    let v = json_operand(text)?;
    let v = match &v {
        Value::Array(items) => {
            let dim = match items.first() {
                Some(Value::Array(p)) => p.len(),
                _ => 1,
            };
            let points: Vec<Value> = items
                .iter()
                .map(|p| if p.is_array() { p.clone() } else { Value::Array(vec![p.clone()]) })
                .collect();
            serde_json::json!({ "dim": dim, "points": points })
        }
        _ => v,
    };
    Ok(FinitePointSet::from_json(&v)?)
}

/// A built-in name, inline `{"vertices": ...}` JSON or a file.
pub fn polygon(text: &str) -> Result<RationalPolygon, CliError> {
    if let Some(p) = builtin(text) {
        return Ok(p);
    }
    if !text.trim_start().starts_with('{') && !Path::new(text).exists() {
        return Err(CliError::Input(format!(
            "`{text}` is neither a file nor a built-in polygon ({})",
            BUILTIN_NAMES.join(", ")
        )));
    }
    Ok(RationalPolygon::from_json(&json_operand(text)?)?)
}

/// Comma-separated rationals such as `1/2,0`.
pub fn rational_vector(text: &str) -> Result<Vec<Q>, CliError> {
    text.split(',')
        .map(|s| rational::parse(s.trim()).map_err(|e| CliError::Input(format!("bad number `{s}`: {e}"))))
        .collect()
}

pub fn point(text: &str) -> Result<Point, CliError> {
    let v = rational_vector(text)?;
    match <[Q; 2]>::try_from(v) {
        Ok(p) => Ok(p),
        Err(v) => Err(CliError::Input(format!("expected 2 coordinates, got {}", v.len()))),
    }
}

/// Comma-separated reals.
pub fn real_vector(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            match rational::parse(s) {
                Ok(q) => Ok(rational::to_f64(&q)),
                Err(_) => s
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| CliError::Input(format!("bad number `{s}`"))),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn lattice_names() {
        assert_eq!(lattice("Z2").unwrap().det(), &int(1));
        assert_eq!(lattice("4Z").unwrap().det(), &int(4));
        assert_eq!(lattice("3Z2").unwrap().det(), &int(9));
        assert_eq!(lattice("D2").unwrap().det(), &int(2));
        assert_eq!(lattice("[[3,0],[1,1]]").unwrap().det(), &int(3));
        assert_eq!(lattice(r#"{"dim":1,"basis":[["1/2"]]}"#).unwrap().det(), &ratio(1, 2));
        assert!(lattice("0Z").is_err());
        assert!(integer_lattice(r#"[["1/2"]]"#).is_err());
    }

    #[test]
    fn point_set_forms() {
        assert_eq!(point_set("[1,3,4,6]").unwrap().len(), 4);
        assert_eq!(point_set("[[0,0],[1,0]]").unwrap().dim(), 2);
        assert_eq!(point_set(r#"{"dim":1,"points":[[0],[2]]}"#).unwrap().len(), 2);
        assert!(point_set("[]").is_err());
        assert!(point_set("/nonexistent/file.json").is_err());
    }

    #[test]
    fn numbers_and_polygons() {
        assert_eq!(point("1/2, 0").unwrap(), [ratio(1, 2), int(0)]);
        assert!(point("1").is_err());
        assert_eq!(real_vector("0.5,-2").unwrap(), vec![0.5, -2.0]);
        assert!(real_vector("x").is_err());
        assert!(polygon("crown").is_ok());
        assert!(polygon("hexagon").is_err());
        assert!(polygon(r#"{"vertices":[[0,0],[1,0],[0,1]]}"#).is_ok());
    }
}
