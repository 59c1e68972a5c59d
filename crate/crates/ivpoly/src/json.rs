//! JSON schemas for polynomials and matrices.
//!
//! All numbers are emitted as exact JSON integers (arbitrary precision), and
//! objects use sorted key order, so identical values serialize byte-identically.
//!
//! Schemas:
//! - polynomial: `{"coeffs":[c0,c1,...]}` (ascending powers)
//! - rational polynomial: `{"num":{"coeffs":[...]},"den":d}`
//! - matrix: `{"n":2,"entries":[[a,b],[c,d]]}` (row-major)
//! - matrix-coefficient polynomial: `{"n":2,"coeffs":[{"entries":[[...]],"den":1},...]}`
//! - matrix of polynomials: `{"n":2,"entries":[[rational poly, ...], ...]}`

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{Map, Number, Value};
use thiserror::Error;

use ivpoly_core::{IntMatrix, IntPoly, MatCoeffPoly, MatOfPoly, RatMatrix, RationalPolyRep};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("missing field {0:?}")]
    Missing(&'static str),
    #[error("invalid value: {0}")]
    Invalid(String),
}

type Result<T> = core::result::Result<T, JsonError>;

pub fn bigint_to_value(v: &BigInt) -> Value {
    Value::Number(
        Number::from_string_unchecked(v.to_string()),
    )
}

pub fn value_to_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| JsonError::Invalid(n.to_string())),
        other => Err(JsonError::Invalid(other.to_string())),
    }
}

fn get<'a>(obj: &'a Map<String, Value>, key: &'static str) -> Result<&'a Value> {
    obj.get(key).ok_or(JsonError::Missing(key))
}

fn as_object<'a>(v: &'a Value, what: &'static str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or(JsonError::Expected(what))
}

fn as_array<'a>(v: &'a Value, what: &'static str) -> Result<&'a [Value]> {
    v.as_array().map(Vec::as_slice).ok_or(JsonError::Expected(what))
}

pub fn poly_to_json(p: &IntPoly) -> Value {
    let coeffs: Vec<Value> = p.coeffs().iter().map(bigint_to_value).collect();
    let mut obj = Map::new();
    obj.insert("coeffs".into(), Value::Array(coeffs));
    Value::Object(obj)
}

pub fn poly_from_json(v: &Value) -> Result<IntPoly> {
    let obj = as_object(v, "polynomial object")?;
    let coeffs = as_array(get(obj, "coeffs")?, "coefficient array")?
        .iter()
        .map(value_to_bigint)
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::from_coeffs(coeffs))
}

pub fn rational_poly_to_json(f: &RationalPolyRep) -> Value {
    let mut obj = Map::new();
    obj.insert("den".into(), bigint_to_value(f.denominator()));
    obj.insert("num".into(), poly_to_json(f.numerator()));
    Value::Object(obj)
}

pub fn rational_poly_from_json(v: &Value) -> Result<RationalPolyRep> {
    let obj = as_object(v, "rational polynomial object")?;
    let num = poly_from_json(get(obj, "num")?)?;
    let den = value_to_bigint(get(obj, "den")?)?;
    RationalPolyRep::new(num, den).map_err(|e| JsonError::Invalid(e.to_string()))
}

fn rows_to_json(n: usize, entry: impl Fn(usize, usize) -> Value) -> Value {
    let rows: Vec<Value> = (0..n)
        .map(|i| Value::Array((0..n).map(|j| entry(i, j)).collect()))
        .collect();
    Value::Array(rows)
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    let mut obj = Map::new();
    obj.insert("entries".into(), rows_to_json(m.dim(), |i, j| bigint_to_value(m.entry(i, j))));
    obj.insert("n".into(), Value::Number(Number::from(m.dim() as u64)));
    Value::Object(obj)
}

pub fn matrix_from_json(v: &Value) -> Result<IntMatrix> {
    let obj = as_object(v, "matrix object")?;
    let n = get(obj, "n")?
        .as_u64()
        .ok_or(JsonError::Expected("dimension"))? as usize;
    let rows = as_array(get(obj, "entries")?, "entry rows")?;
    if rows.len() != n {
        return Err(JsonError::Invalid(format!("expected {n} rows, got {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(n * n);
    for row in rows {
        let row = as_array(row, "entry row")?;
        if row.len() != n {
            return Err(JsonError::Invalid(format!("expected {n} entries per row")));
        }
        for e in row {
            entries.push(value_to_bigint(e)?);
        }
    }
    IntMatrix::new(n, entries).map_err(|e| JsonError::Invalid(e.to_string()))
}

fn rat_matrix_to_json(m: &RatMatrix) -> Value {
    let (num, den) = m.to_num_den();
    let mut obj = Map::new();
    obj.insert("den".into(), bigint_to_value(&den));
    obj.insert(
        "entries".into(),
        rows_to_json(num.dim(), |i, j| bigint_to_value(num.entry(i, j))),
    );
    Value::Object(obj)
}

fn rat_matrix_from_json(v: &Value, n: usize) -> Result<RatMatrix> {
    let obj = as_object(v, "coefficient matrix object")?;
    let den = value_to_bigint(get(obj, "den")?)?;
    if den.sign() == num_bigint::Sign::NoSign {
        return Err(JsonError::Invalid("zero denominator".into()));
    }
    let rows = as_array(get(obj, "entries")?, "entry rows")?;
    if rows.len() != n {
        return Err(JsonError::Invalid(format!("expected {n} rows, got {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(n * n);
    for row in rows {
        let row = as_array(row, "entry row")?;
        if row.len() != n {
            return Err(JsonError::Invalid(format!("expected {n} entries per row")));
        }
        for e in row {
            entries.push(BigRational::new(value_to_bigint(e)?, den.clone()));
        }
    }
    RatMatrix::new(n, entries).map_err(|e| JsonError::Invalid(e.to_string()))
}

pub fn matcoeff_to_json(f: &MatCoeffPoly) -> Value {
    let coeffs: Vec<Value> = f.coeffs().iter().map(rat_matrix_to_json).collect();
    let mut obj = Map::new();
    obj.insert("coeffs".into(), Value::Array(coeffs));
    obj.insert("n".into(), Value::Number(Number::from(f.dim() as u64)));
    Value::Object(obj)
}

pub fn matcoeff_from_json(v: &Value) -> Result<MatCoeffPoly> {
    let obj = as_object(v, "matrix-coefficient polynomial object")?;
    let n = get(obj, "n")?
        .as_u64()
        .ok_or(JsonError::Expected("dimension"))? as usize;
    if n == 0 {
        return Err(JsonError::Invalid("dimension must be at least 1".into()));
    }
    let coeffs = as_array(get(obj, "coeffs")?, "coefficient array")?
        .iter()
        .map(|c| rat_matrix_from_json(c, n))
        .collect::<Result<Vec<_>>>()?;
    MatCoeffPoly::new(n, coeffs).map_err(|e| JsonError::Invalid(e.to_string()))
}

pub fn matofpoly_to_json(m: &MatOfPoly) -> Value {
    let mut obj = Map::new();
    obj.insert(
        "entries".into(),
        rows_to_json(m.dim(), |i, j| rational_poly_to_json(m.entry(i, j))),
    );
    obj.insert("n".into(), Value::Number(Number::from(m.dim() as u64)));
    Value::Object(obj)
}

pub fn matofpoly_from_json(v: &Value) -> Result<MatOfPoly> {
    let obj = as_object(v, "matrix-of-polynomials object")?;
    let n = get(obj, "n")?
        .as_u64()
        .ok_or(JsonError::Expected("dimension"))? as usize;
    let rows = as_array(get(obj, "entries")?, "entry rows")?;
    if rows.len() != n {
        return Err(JsonError::Invalid(format!("expected {n} rows, got {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(n * n);
    for row in rows {
        let row = as_array(row, "entry row")?;
        if row.len() != n {
            return Err(JsonError::Invalid(format!("expected {n} entries per row")));
        }
        for e in row {
            entries.push(rational_poly_from_json(e)?);
        }
    }
    MatOfPoly::new(n, entries).map_err(|e| JsonError::Invalid(e.to_string()))
}
