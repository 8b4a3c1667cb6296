//! JSON encodings of algebra elements.
//!
//! Octonions are arrays of 8 rational strings, matrices 8×8 arrays of them.
//! Elements are objects (`{"P","Q","u","v","w"}` for e8, `{"A","u","v","w"}`
//! for f4, `{"P","Q","X"}` for so16) or flat coordinate arrays.

use serde_json::{Map, Value};

use crate::algebra::Algebra;
use crate::e8::E8Element;
use crate::error::{Error, Result};
use crate::f4::F4Element;
use crate::matrix::Mat8;
use crate::octoct::{OctOct, So16Element, SoPair};
use crate::octonion::Octonion;
use crate::rational::{self, Rational};
use crate::so8::Skew8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Encoding {
    Object,
    Coordinates,
}

fn rationals(v: &Value, len: usize, name: &str) -> Result<Vec<Rational>> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("{name} must be an array")))?;
    if arr.len() != len {
        return Err(Error::Parse(format!("{name} must have {len} entries, found {}", arr.len())));
    }
    arr.iter()
        .map(|x| rational::from_json(x).map_err(|e| Error::Parse(format!("{name}: {e}"))))
        .collect()
}

fn strings(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational::to_json).collect())
}

pub fn octonion_from_json(v: &Value, name: &str) -> Result<Octonion> {
    let c = rationals(v, 8, name)?;
    Ok(Octonion::new(std::array::from_fn(|i| c[i].clone())))
}

pub fn octonion_to_json(x: &Octonion) -> Value {
    strings(x.coeffs())
}

pub fn mat8_from_json(v: &Value, name: &str) -> Result<Mat8> {
    let rows = v.as_array().ok_or_else(|| Error::Parse(format!("{name} must be an 8×8 array")))?;
    if rows.len() != 8 {
        return Err(Error::Parse(format!("{name} must have 8 rows, found {}", rows.len())));
    }
    let mut flat = Vec::with_capacity(64);
    for (i, r) in rows.iter().enumerate() {
        flat.extend(rationals(r, 8, &format!("{name} row {i}"))?);
    }
    Ok(Mat8::from_row_major(&flat))
}

pub fn mat8_to_json(m: &Mat8) -> Value {
    Value::Array(m.rows().iter().map(|r| strings(r)).collect())
}

pub fn skew8_from_json(v: &Value, name: &str) -> Result<Skew8> {
    Skew8::new(mat8_from_json(v, name)?).map_err(|_| Error::NotSkew(name.into()))
}

fn object<'a>(v: &'a Value, keys: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("element must be a JSON object or array".into()))?;
    for k in keys {
        if !obj.contains_key(*k) {
            return Err(Error::Parse(format!("missing field \"{k}\"")));
        }
    }
    if let Some(extra) = obj.keys().find(|k| !keys.contains(&k.as_str())) {
        return Err(Error::Parse(format!("unexpected field \"{extra}\"")));
    }
    Ok(obj)
}

/// Parses either encoding and reports which one was used.
pub fn element_from_json(algebra: Algebra, v: &Value) -> Result<(Vec<Rational>, Encoding)> {
    if v.is_array() {
        return Ok((rationals(v, algebra.dim(), "coordinate vector")?, Encoding::Coordinates));
    }
    let coords = match algebra {
        Algebra::F4 => {
            let o = object(v, &["A", "u", "v", "w"])?;
            F4Element::new(
                skew8_from_json(&o["A"], "A")?,
                octonion_from_json(&o["u"], "u")?,
                octonion_from_json(&o["v"], "v")?,
                octonion_from_json(&o["w"], "w")?,
            )
            .coords()
        }
        Algebra::E8 | Algebra::E8Split => {
            let o = object(v, &["P", "Q", "u", "v", "w"])?;
            let oo = |k: &str| mat8_from_json(&o[k], k).map(OctOct::from_matrix);
            E8Element::new(
                SoPair::new(skew8_from_json(&o["P"], "P")?, skew8_from_json(&o["Q"], "Q")?),
                oo("u")?,
                oo("v")?,
                oo("w")?,
            )
            .coords()
        }
        Algebra::So16 => {
            let o = object(v, &["P", "Q", "X"])?;
            So16Element {
                a: SoPair::new(skew8_from_json(&o["P"], "P")?, skew8_from_json(&o["Q"], "Q")?),
                x: OctOct::from_matrix(mat8_from_json(&o["X"], "X")?),
            }
            .coords()
        }
    };
    Ok((coords, Encoding::Object))
}

pub fn element_to_json(algebra: Algebra, coords: &[Rational], encoding: Encoding) -> Result<Value> {
    if coords.len() != algebra.dim() {
        return Err(Error::Dimension { expected: algebra.dim(), found: coords.len() });
    }
    if encoding == Encoding::Coordinates {
        return Ok(strings(coords));
    }
    let mut o = Map::new();
    match algebra {
        Algebra::F4 => {
            let x = F4Element::from_coords(coords)?;
            o.insert("A".into(), mat8_to_json(x.a.matrix()));
            o.insert("u".into(), octonion_to_json(&x.u));
            o.insert("v".into(), octonion_to_json(&x.v));
            o.insert("w".into(), octonion_to_json(&x.w));
        }
        Algebra::E8 | Algebra::E8Split => {
            let x = E8Element::from_coords(coords)?;
            o.insert("P".into(), mat8_to_json(x.a.p.matrix()));
            o.insert("Q".into(), mat8_to_json(x.a.q.matrix()));
            o.insert("u".into(), mat8_to_json(x.u.matrix()));
            o.insert("v".into(), mat8_to_json(x.v.matrix()));
            o.insert("w".into(), mat8_to_json(x.w.matrix()));
        }
        Algebra::So16 => {
            let x = So16Element::from_coords(coords)?;
            o.insert("P".into(), mat8_to_json(x.a.p.matrix()));
            o.insert("Q".into(), mat8_to_json(x.a.q.matrix()));
            o.insert("X".into(), mat8_to_json(x.x.matrix()));
        }
    }
    Ok(Value::Object(o))
}
