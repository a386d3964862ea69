//! JSON wire formats: integer matrices as full row arrays, 2×2 tuples as
//! lists of row-major matrices, big integers as JSON numbers.

use std::str::FromStr;

use serde_json::{Number, Value};

use crate::exact::{Int, Mat2, MultiPoly, Rat, UniPoly};
use crate::stokes::StokesMat;
use crate::{Error, Result};

pub fn int(n: &Int) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

/// Integers as numbers, other rationals as "p/q" strings.
pub fn rat(q: &Rat) -> Value {
    if q.is_integer() {
        int(q.numer())
    } else {
        Value::String(q.to_string())
    }
}

pub fn rows(m: &crate::exact::Mat<Int>) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(int).collect()))
            .collect(),
    )
}

pub fn stokes(s: &StokesMat<Int>) -> Value {
    rows(s.as_mat())
}

pub fn mat2(m: &Mat2<Int>) -> Value {
    let [a, b, c, d] = m.coords();
    Value::Array(vec![
        Value::Array(vec![int(&a), int(&b)]),
        Value::Array(vec![int(&c), int(&d)]),
    ])
}

pub fn mat2_list(ms: &[Mat2<Int>]) -> Value {
    Value::Array(ms.iter().map(mat2).collect())
}

/// Coefficients from λ⁰ upwards.
pub fn poly_coeffs(p: &UniPoly<Int>) -> Value {
    Value::Array(p.coeffs().iter().map(int).collect())
}

pub fn multipoly(f: &MultiPoly<Rat>, names: &[String]) -> Value {
    Value::String(f.display_with(names))
}

fn as_int(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => Int::from_str(&n.to_string())
            .map_err(|_| Error::Invalid(format!("{n} is not an integer"))),
        Value::String(s) => Int::from_str(s.trim()).map_err(|_| Error::Invalid(format!("{s:?} is not an integer"))),
        other => Err(Error::Invalid(format!("expected an integer, got {other}"))),
    }
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Invalid(format!("{what} must be a JSON array")))
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(format!("malformed JSON: {e}")))
}

pub fn parse_int_rows(v: &Value) -> Result<Vec<Vec<Int>>> {
    as_array(v, "matrix")?
        .iter()
        .map(|row| as_array(row, "matrix row")?.iter().map(as_int).collect())
        .collect()
}

/// Reads a unitriangular integer matrix.
pub fn parse_stokes(v: &Value) -> Result<StokesMat<Int>> {
    let rows = parse_int_rows(v)?;
    StokesMat::new(crate::exact::Mat::from_rows(rows)?)
}

pub fn parse_mat2(v: &Value) -> Result<Mat2<Int>> {
    let rows = parse_int_rows(v)?;
    if rows.len() != 2 || rows.iter().any(|r| r.len() != 2) {
        return Err(Error::Dimension("expected a 2×2 matrix".into()));
    }
    let [[a, b], [c, d]] = [
        [rows[0][0].clone(), rows[0][1].clone()],
        [rows[1][0].clone(), rows[1][1].clone()],
    ];
    Ok(Mat2::new(a, b, c, d))
}

pub fn parse_mat2_list(v: &Value) -> Result<Vec<Mat2<Int>>> {
    as_array(v, "tuple")?.iter().map(parse_mat2).collect()
}

/// "x,y,z" or a JSON array of three integers.
pub fn parse_int_list(text: &str) -> Result<Vec<Int>> {
    let t = text.trim();
    if t.starts_with('[') {
        return as_array(&parse_json(t)?, "list")?.iter().map(as_int).collect();
    }
    t.split(',')
        .map(|p| Int::from_str(p.trim()).map_err(|_| Error::Invalid(format!("{p:?} is not an integer"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_survive() {
        let n = Int::from_str("123456789012345678901234567890").unwrap();
        let text = serde_json::to_string(&int(&n)).unwrap();
        assert_eq!(text, "123456789012345678901234567890");
        assert_eq!(as_int(&parse_json(&text).unwrap()).unwrap(), n);
    }

    #[test]
    fn matrices_round_trip() {
        let v = parse_json("[[1,2,3],[0,1,4],[0,0,1]]").unwrap();
        let s = parse_stokes(&v).unwrap();
        assert_eq!(stokes(&s), v);
        assert!(parse_stokes(&parse_json("[[1,2],[1,1]]").unwrap()).is_err());
        assert!(parse_stokes(&parse_json("[[1,2.5],[0,1]]").unwrap()).is_err());
        assert_eq!(parse_int_list("2, 5,5").unwrap().len(), 3);
    }
}
