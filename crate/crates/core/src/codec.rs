//! JSON encodings of matrices, weights, certificates and decompositions.
//!
//! Matrix: `{"backend": "Q" | "Qi" | "Fp", "p": <prime, Fp only>, "dim": n,
//! "entries": [[...], ...]}`. Rationals are `"n/d"` or `"n"`, Gaussian
//! rationals `[re, im]`, prime-field residues integer strings.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::characterize::{Decomposition, Flavor, Side};
use crate::error::{Error, Result};
use crate::ginverse::{GInverseKind, InverseCertificate};
use crate::matrix::{Mat, Weight};
use crate::scalar::{Backend, StarScalar};

pub fn mat_to_json<S: StarScalar>(m: &Mat<S>) -> Value {
    let mut obj = Map::new();
    obj.insert("backend".into(), json!(S::BACKEND.tag()));
    if let Backend::PrimeField(p) = S::BACKEND {
        obj.insert("p".into(), json!(p));
    }
    obj.insert("dim".into(), json!(m.dim()));
    let rows: Vec<Value> = m
        .rows()
        .map(|r| Value::Array(r.iter().map(S::to_json).collect()))
        .collect();
    obj.insert("entries".into(), Value::Array(rows));
    Value::Object(obj)
}

fn field<'v>(v: &'v Value, name: &str) -> Result<&'v Value> {
    v.get(name)
        .ok_or_else(|| Error::Malformed(format!("missing field {name:?}")))
}

/// Backend named by a serialized matrix.
pub fn backend_of(v: &Value) -> Result<Backend> {
    let tag = field(v, "backend")?
        .as_str()
        .ok_or_else(|| Error::Malformed("backend must be a string".into()))?;
    match tag {
        "Q" => Ok(Backend::Rational),
        "Qi" => Ok(Backend::GaussianRational),
        "Fp" => {
            let p = field(v, "p")?
                .as_u64()
                .ok_or_else(|| Error::Malformed("p must be an integer".into()))?;
            match p {
                2 | 3 | 5 => Ok(Backend::PrimeField(p as u32)),
                other => Err(Error::Malformed(format!("unsupported modulus {other}"))),
            }
        }
        other => Err(Error::Malformed(format!("unknown backend {other:?}"))),
    }
}

pub fn mat_from_json<S: StarScalar>(v: &Value) -> Result<Mat<S>> {
    let backend = backend_of(v)?;
    if backend != S::BACKEND {
        return Err(Error::BackendMismatch {
            expected: S::BACKEND.to_string(),
            found: backend.to_string(),
        });
    }
    let dim = field(v, "dim")?
        .as_u64()
        .ok_or_else(|| Error::Malformed("dim must be a positive integer".into()))?
        as usize;
    let rows = field(v, "entries")?
        .as_array()
        .ok_or_else(|| Error::Malformed("entries must be an array of rows".into()))?;
    if rows.len() != dim {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: rows.len(),
        });
    }
    let parsed = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Malformed("each row must be an array".into()))?
                .iter()
                .map(S::from_json)
                .collect::<Result<Vec<S>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Mat::from_rows(parsed)
}

/// Load a weight, rejecting non-Hermitian or singular matrices.
pub fn weight_from_json<S: StarScalar>(v: &Value) -> Result<Weight<S>> {
    Weight::new(mat_from_json(v)?)
}

pub fn certificate_to_json<S: StarScalar>(c: &InverseCertificate<S>) -> Value {
    let witnesses: Map<String, Value> = c
        .witnesses
        .iter()
        .map(|(k, m)| (k.clone(), mat_to_json(m)))
        .collect();
    json!({
        "kind": c.kind.name(),
        "value": mat_to_json(&c.value),
        "witnesses": witnesses,
        "n": c.n,
        "verified": true,
    })
}

pub fn certificate_from_json<S: StarScalar>(v: &Value) -> Result<InverseCertificate<S>> {
    let kind: GInverseKind = field(v, "kind")?
        .as_str()
        .ok_or_else(|| Error::Malformed("kind must be a string".into()))?
        .parse()?;
    let value = mat_from_json(field(v, "value")?)?;
    let mut witnesses = BTreeMap::new();
    if let Some(w) = v.get("witnesses") {
        let obj = w
            .as_object()
            .ok_or_else(|| Error::Malformed("witnesses must be an object".into()))?;
        for (name, m) in obj {
            witnesses.insert(name.clone(), mat_from_json(m)?);
        }
    }
    let n = match v.get("n") {
        None | Some(Value::Null) => None,
        Some(n) => Some(
            n.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| Error::Malformed("n must be a small integer or null".into()))?,
        ),
    };
    Ok(InverseCertificate {
        kind,
        value,
        witnesses,
        n,
    })
}

pub fn decomposition_to_json<S: StarScalar>(d: &Decomposition<S>) -> Value {
    json!({
        "flavor": d.flavor.letter(),
        "side": d.side.name(),
        "n": d.n,
        "element": mat_to_json(&d.element),
        "unit": mat_to_json(&d.unit),
    })
}

pub fn decomposition_from_json<S: StarScalar>(v: &Value) -> Result<Decomposition<S>> {
    let text = |name: &str| -> Result<&str> {
        field(v, name)?
            .as_str()
            .ok_or_else(|| Error::Malformed(format!("{name} must be a string")))
    };
    let n = field(v, "n")?
        .as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Error::Malformed("n must be a positive integer".into()))?;
    Ok(Decomposition {
        flavor: Flavor::from_letter(text("flavor")?)?,
        side: Side::from_name(text("side")?)?,
        n,
        element: mat_from_json(field(v, "element")?)?,
        unit: mat_from_json(field(v, "unit")?)?,
    })
}
