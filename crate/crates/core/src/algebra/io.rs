//! JSON files for algebras and eigenvector systems.
//!
//! ```json
//! {"field": {"kind":"prime","p":3}, "dim": 2, "alpha": [[[0,1],[1,0]],[[1,0],[1,1]]]}
//! ```
//!
//! `alpha[i][k][j]` is `α_{ik,j}`, zero-based. Instead of `alpha` a file may
//! give `"products": {"e1*e2": [1, 0], …}` with one-based basis names;
//! products not listed are zero. A system file adds
//! `"perturbation": [{"eps": [...], "phis": [[...], ...]}, ...]`.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::fields::{Field, FieldDescriptor};
use crate::solver::{Perturbation, QuadraticSystem};

use super::{AlgebraElement, StructureTensor};

fn format_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

/// The field named in a file, unless `override_field` replaces it.
pub fn file_field(v: &Value, override_field: Option<&FieldDescriptor>) -> Result<FieldDescriptor> {
    match override_field {
        Some(d) => Ok(d.clone()),
        None => {
            let f = v.get("field").ok_or_else(|| format_err("missing \"field\""))?;
            Ok(FieldDescriptor::from_json(f)?)
        }
    }
}

pub fn element_to_json<F: Field>(field: &F, x: &AlgebraElement<F>) -> Value {
    Value::Array(x.coords().iter().map(|c| field.to_json(c)).collect())
}

pub fn element_from_json<F: Field>(field: &F, v: &Value) -> Result<AlgebraElement<F>> {
    let items = v.as_array().ok_or_else(|| format_err("an element is a JSON array"))?;
    Ok(AlgebraElement::new(
        items.iter().map(|c| field.from_json(c)).collect::<Result<_, _>>()?,
    ))
}

pub fn algebra_to_json<F: Field>(a: &StructureTensor<F>) -> Value {
    let f = a.field();
    let n = a.dim();
    let alpha: Vec<Vec<Vec<Value>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| (0..n).map(|j| f.to_json(a.get(i, k, j))).collect())
                .collect()
        })
        .collect();
    json!({ "field": f.descriptor(), "dim": n, "alpha": alpha })
}

/// Reads `alpha` or the `products` table over `field`.
pub fn algebra_from_json<F: Field>(field: &F, v: &Value) -> Result<StructureTensor<F>> {
    let dim = match v.get("dim") {
        Some(d) => Some(d.as_u64().ok_or_else(|| format_err("\"dim\" must be a positive integer"))? as usize),
        None => None,
    };
    if let Some(alpha) = v.get("alpha") {
        let rows = alpha.as_array().ok_or_else(|| format_err("\"alpha\" must be an array"))?;
        let mut nested = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_array().ok_or_else(|| format_err("alpha[i] must be an array"))?;
            let mut cols = Vec::with_capacity(row.len());
            for col in row {
                cols.push(element_from_json(field, col)?.into_coords());
            }
            nested.push(cols);
        }
        let a = StructureTensor::new(field, nested)?;
        if let Some(d) = dim.filter(|&d| d != a.dim()) {
            return Err(Error::DimensionMismatch { expected: d, found: a.dim() });
        }
        return Ok(a);
    }
    let products = v
        .get("products")
        .and_then(Value::as_object)
        .ok_or_else(|| format_err("need \"alpha\" or a \"products\" table"))?;
    let n = match dim {
        Some(d) => d,
        None => products
            .values()
            .filter_map(Value::as_array)
            .map(Vec::len)
            .next()
            .ok_or_else(|| format_err("empty \"products\" needs \"dim\""))?,
    };
    let mut a = StructureTensor::zeros(field, n)?;
    for (key, coords) in products {
        let (i, k) = parse_product_key(key, n)?;
        let x = element_from_json(field, coords)?;
        if x.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: x.len() });
        }
        a.set_product(i, k, x.coords());
    }
    Ok(a)
}

/// `"e1*e2"` → `(0, 1)`.
fn parse_product_key(key: &str, n: usize) -> Result<(usize, usize)> {
    let bad = || format_err(format!("bad product key {key:?}, expected like \"e1*e2\""));
    let (l, r) = key.split_once('*').ok_or_else(bad)?;
    let index = |s: &str| -> Result<usize> {
        let i: usize = s.trim().strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if i == 0 || i > n {
            return Err(format_err(format!("basis index {i} outside 1..={n}")));
        }
        Ok(i - 1)
    };
    Ok((index(l)?, index(r)?))
}

/// An algebra file with an extra `provenance` object.
pub fn algebra_to_json_with_provenance<F: Field>(a: &StructureTensor<F>, provenance: Value) -> Value {
    let mut v = algebra_to_json(a);
    v["provenance"] = provenance;
    v
}

pub fn system_to_json<F: Field>(s: &QuadraticSystem<F>) -> Value {
    let f = s.field();
    let mut v = algebra_to_json(s.tensor());
    let scalars = |xs: &[F::Elem]| Value::Array(xs.iter().map(|c| f.to_json(c)).collect());
    let layers: Vec<Value> = s
        .perturbations()
        .iter()
        .map(|p| {
            let mut m = Map::new();
            m.insert("eps".into(), scalars(&p.eps));
            m.insert("phis".into(), Value::Array(p.phis.iter().map(|phi| scalars(phi)).collect()));
            Value::Object(m)
        })
        .collect();
    v["perturbation"] = Value::Array(layers);
    v
}

/// Reads an algebra file, applying any `perturbation` layers.
pub fn system_from_json<F: Field>(field: &F, v: &Value) -> Result<QuadraticSystem<F>> {
    let mut s = QuadraticSystem::build(&algebra_from_json(field, v)?);
    let layers = match v.get("perturbation") {
        None | Some(Value::Null) => return Ok(s),
        Some(Value::Array(layers)) => layers.clone(),
        Some(single @ Value::Object(_)) => vec![single.clone()],
        Some(_) => return Err(format_err("\"perturbation\" must be an array of layers")),
    };
    for layer in layers {
        let eps = element_from_json(field, layer.get("eps").ok_or_else(|| format_err("layer without \"eps\""))?)?;
        let phis = layer
            .get("phis")
            .and_then(Value::as_array)
            .ok_or_else(|| format_err("layer without \"phis\""))?
            .iter()
            .map(|phi| element_from_json(field, phi).map(AlgebraElement::into_coords))
            .collect::<Result<Vec<_>>>()?;
        s = s.with_perturbation(Perturbation { eps: eps.into_coords(), phis })?;
    }
    Ok(s)
}
