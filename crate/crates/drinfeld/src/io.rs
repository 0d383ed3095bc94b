//! Algebra-spec resolution and JSON import/export of Hopf algebra data.

use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::hopf::HopfAlgebraData;
use crate::linalg::{sparse_nullspace, Matrix, SparseRow};
use crate::zoo;

/// Resolve a textual algebra spec: "group:<name>", "dualgroup:<name>",
/// "sweedler", "taft:<n>", or "file:<path>".
pub fn resolve_spec(spec: &str) -> Result<HopfAlgebraData> {
    if spec == "sweedler" {
        return Ok(zoo::sweedler());
    }
    if let Some(name) = spec.strip_prefix("group:") {
        let g = zoo::make_group(name)?;
        return Ok(zoo::group_algebra(&g, FieldDescriptor::Rationals));
    }
    if let Some(name) = spec.strip_prefix("dualgroup:") {
        let g = zoo::make_group(name)?;
        return Ok(zoo::dual_group_algebra(&g, FieldDescriptor::Rationals));
    }
    if let Some(n) = spec.strip_prefix("taft:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::UnsupportedSpec(format!("bad Taft order '{n}'")))?;
        return zoo::taft(n);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        return import_file(path);
    }
    Err(Error::UnsupportedSpec(spec.into()))
}

fn field_to_json(field: FieldDescriptor) -> Value {
    match field {
        FieldDescriptor::Rationals => json!({"type": "Q"}),
        FieldDescriptor::PrimeField(p) => json!({"type": "GF", "p": p}),
        FieldDescriptor::Cyclotomic(m) => json!({"type": "Cyc", "m": m}),
    }
}

/// Serialize an algebra to the interchange schema (sparse, 0-based,
/// coefficients in canonical text form, zero entries omitted).
pub fn to_json(a: &HopfAlgebraData) -> Value {
    let mut mult = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            for (k, c) in a.mult_row(i, j) {
                mult.push(json!([i, j, k, c.to_text()]));
            }
        }
    }
    let mut comult = Vec::new();
    for i in 0..a.dim {
        for (j, k, c) in a.comult_row(i) {
            comult.push(json!([i, j, k, c.to_text()]));
        }
    }
    let counit: Vec<Value> = a
        .counit
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| json!([i, c.to_text()]))
        .collect();
    let mut antipode = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            let c = a.antipode.at(i, j);
            if !c.is_zero() {
                antipode.push(json!([i, j, c.to_text()]));
            }
        }
    }
    json!({
        "name": a.name,
        "field": field_to_json(a.field),
        "dim": a.dim,
        "basis": a.basis,
        "mult": mult,
        "comult": comult,
        "counit": counit,
        "antipode": antipode,
    })
}

pub fn export_file(a: &HopfAlgebraData, path: impl AsRef<Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(&to_json(a)).expect("serializable value");
    fs::write(path.as_ref(), text).map_err(|e| Error::ParseError(format!("write failed: {e}")))
}

fn schema_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::SchemaError { location: location.into(), message: message.into() }
}

fn get<'v>(obj: &'v Map<String, Value>, key: &str) -> Result<&'v Value> {
    obj.get(key).ok_or_else(|| schema_err(format!("/{key}"), "missing key"))
}

fn as_usize(v: &Value, location: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema_err(location, "expected a nonnegative integer"))
}

fn index(v: &Value, dim: usize, location: &str) -> Result<usize> {
    let n = as_usize(v, location)?;
    if n >= dim {
        return Err(schema_err(location, format!("index {n} out of range (dim {dim})")));
    }
    Ok(n)
}

fn scalar(field: FieldDescriptor, v: &Value, location: &str) -> Result<Scalar> {
    let text = v
        .as_str()
        .ok_or_else(|| schema_err(location, "expected a coefficient string"))?;
    field
        .parse(text)
        .map_err(|e| schema_err(location, format!("bad coefficient '{text}': {e}")))
}

fn parse_field(v: &Value) -> Result<FieldDescriptor> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema_err("/field", "expected an object"))?;
    let ty = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| schema_err("/field/type", "missing or non-string"))?;
    match ty {
        "Q" => Ok(FieldDescriptor::Rationals),
        "GF" => {
            let p = obj
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| schema_err("/field/p", "missing prime modulus"))?;
            FieldDescriptor::prime_field(p)
                .map_err(|e| schema_err("/field/p", e.to_string()))
        }
        "Cyc" => {
            let m = obj
                .get("m")
                .and_then(Value::as_u64)
                .ok_or_else(|| schema_err("/field/m", "missing root order"))?;
            if m == 0 {
                return Err(schema_err("/field/m", "root order must be positive"));
            }
            Ok(FieldDescriptor::Cyclotomic(m))
        }
        other => Err(schema_err("/field/type", format!("unknown field type '{other}'"))),
    }
}

/// Recover the unit vector from the multiplication tensor by solving
/// u·e_j = e_j for all j exactly.
fn solve_unit(field: FieldDescriptor, dim: usize, mult: &[SparseRow]) -> Result<Vec<Scalar>> {
    // unknowns (u_0..u_{dim-1}, t); rows: Σ_i u_i m(i,j)_k − t δ_{kj} = 0
    let mut rows: Vec<SparseRow> = Vec::new();
    for j in 0..dim {
        for k in 0..dim {
            let mut row = SparseRow::new();
            for i in 0..dim {
                for (kk, c) in &mult[i * dim + j] {
                    if *kk == k {
                        row.push((i, c.clone()));
                    }
                }
            }
            if k == j {
                row.push((dim, -&field.one()));
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    let kernel = sparse_nullspace(field, dim + 1, &rows);
    for v in kernel {
        if !v[dim].is_zero() {
            let t_inv = v[dim].inv()?;
            return Ok(v[..dim].iter().map(|c| c * &t_inv).collect());
        }
    }
    Err(Error::InvalidAlgebra("multiplication has no unit element".into()))
}

/// Deserialize the interchange schema into validated-ready algebra data.
pub fn from_json(v: &Value) -> Result<HopfAlgebraData> {
    let obj = v.as_object().ok_or_else(|| schema_err("", "expected a JSON object"))?;
    let name = get(obj, "name")?
        .as_str()
        .ok_or_else(|| schema_err("/name", "expected a string"))?
        .to_string();
    let field = parse_field(get(obj, "field")?)?;
    let dim = as_usize(get(obj, "dim")?, "/dim")?;
    if dim == 0 {
        return Err(schema_err("/dim", "dimension must be positive"));
    }
    let basis_val = get(obj, "basis")?
        .as_array()
        .ok_or_else(|| schema_err("/basis", "expected an array"))?;
    if basis_val.len() != dim {
        return Err(schema_err("/basis", format!("expected {dim} labels, got {}", basis_val.len())));
    }
    let mut basis = Vec::with_capacity(dim);
    for (i, b) in basis_val.iter().enumerate() {
        basis.push(
            b.as_str()
                .ok_or_else(|| schema_err(format!("/basis/{i}"), "expected a string"))?
                .to_string(),
        );
    }

    let quad = |key: &str| -> Result<Vec<(usize, usize, usize, Scalar)>> {
        let arr = get(obj, key)?
            .as_array()
            .ok_or_else(|| schema_err(format!("/{key}"), "expected an array"))?;
        let mut out = Vec::with_capacity(arr.len());
        for (t, entry) in arr.iter().enumerate() {
            let loc = format!("/{key}/{t}");
            let quad = entry
                .as_array()
                .filter(|q| q.len() == 4)
                .ok_or_else(|| schema_err(&loc, "expected [i, j, k, coeff]"))?;
            out.push((
                index(&quad[0], dim, &loc)?,
                index(&quad[1], dim, &loc)?,
                index(&quad[2], dim, &loc)?,
                scalar(field, &quad[3], &loc)?,
            ));
        }
        Ok(out)
    };

    let mut mult: Vec<SparseRow> = vec![SparseRow::new(); dim * dim];
    for (i, j, k, c) in quad("mult")? {
        match mult[i * dim + j].iter_mut().find(|(kk, _)| *kk == k) {
            Some((_, old)) => *old = &*old + &c,
            None => mult[i * dim + j].push((k, c)),
        }
    }
    for row in &mut mult {
        row.retain(|(_, c)| !c.is_zero());
    }

    let mut comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); dim];
    for (i, j, k, c) in quad("comult")? {
        match comult[i].iter_mut().find(|(jj, kk, _)| *jj == j && *kk == k) {
            Some((_, _, old)) => *old = &*old + &c,
            None => comult[i].push((j, k, c)),
        }
    }
    for row in &mut comult {
        row.retain(|(_, _, c)| !c.is_zero());
    }

    let counit_arr = get(obj, "counit")?
        .as_array()
        .ok_or_else(|| schema_err("/counit", "expected an array"))?;
    let mut counit = vec![field.zero(); dim];
    for (t, entry) in counit_arr.iter().enumerate() {
        let loc = format!("/counit/{t}");
        let pair = entry
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| schema_err(&loc, "expected [i, coeff]"))?;
        let i = index(&pair[0], dim, &loc)?;
        counit[i] = &counit[i] + &scalar(field, &pair[1], &loc)?;
    }

    let antipode_arr = get(obj, "antipode")?
        .as_array()
        .ok_or_else(|| schema_err("/antipode", "expected an array"))?;
    let mut antipode = Matrix::zero(field, dim, dim);
    for (t, entry) in antipode_arr.iter().enumerate() {
        let loc = format!("/antipode/{t}");
        let triple = entry
            .as_array()
            .filter(|p| p.len() == 3)
            .ok_or_else(|| schema_err(&loc, "expected [i, j, coeff]"))?;
        let i = index(&triple[0], dim, &loc)?;
        let j = index(&triple[1], dim, &loc)?;
        let old = antipode.at(i, j).clone();
        *antipode.at_mut(i, j) = &old + &scalar(field, &triple[2], &loc)?;
    }

    let unit = solve_unit(field, dim, &mult)?;
    Ok(HopfAlgebraData::new(name, field, basis, mult, unit, comult, counit, antipode))
}

pub fn import_file(path: impl AsRef<Path>) -> Result<HopfAlgebraData> {
    let text = fs::read_to_string(path.as_ref())
        .map_err(|e| Error::ParseError(format!("read failed: {e}")))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::ParseError(format!("invalid JSON: {e}")))?;
    from_json(&value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(a: &HopfAlgebraData) {
        let b = from_json(&to_json(a)).unwrap();
        assert_eq!(*a, b, "{}", a.name);
    }

    #[test]
    fn roundtrip_builtins() {
        roundtrip(&zoo::sweedler());
        roundtrip(&zoo::taft(3).unwrap());
        for spec in ["group:C2", "group:S3", "dualgroup:S3", "group:Q8", "group:C2xC2"] {
            roundtrip(&resolve_spec(spec).unwrap());
        }
    }

    #[test]
    fn resolve_spec_errors() {
        assert!(matches!(resolve_spec("nonsense"), Err(Error::UnsupportedSpec(_))));
        assert!(resolve_spec("group:C17x").is_err());
        assert!(resolve_spec("taft:abc").is_err());
    }

    #[test]
    fn handwritten_group_algebra() {
        // k[ℤ2] written by hand
        let v = serde_json::json!({
            "name": "Z2 by hand",
            "field": {"type": "Q"},
            "dim": 2,
            "basis": ["e", "g"],
            "mult": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],
            "comult": [[0,0,0,"1"],[1,1,1,"1"]],
            "counit": [[0,"1"],[1,"1"]],
            "antipode": [[0,0,"1"],[1,1,"1"]],
        });
        let a = from_json(&v).unwrap();
        assert!(a.validate().unwrap().passed());
        assert_eq!(a.unit, vec![a.field.one(), a.field.zero()]);
    }

    #[test]
    fn schema_errors_carry_locations() {
        let mut v = to_json(&zoo::sweedler());
        v.as_object_mut().unwrap().remove("antipode");
        match from_json(&v) {
            Err(Error::SchemaError { location, .. }) => assert_eq!(location, "/antipode"),
            other => panic!("expected schema error, got {other:?}"),
        }
        let mut v = to_json(&zoo::sweedler());
        v["mult"][2] = serde_json::json!([0, 0, 99, "1"]);
        match from_json(&v) {
            Err(Error::SchemaError { location, .. }) => assert_eq!(location, "/mult/2"),
            other => panic!("expected schema error, got {other:?}"),
        }
        let mut v = to_json(&zoo::sweedler());
        v["counit"][0] = serde_json::json!([0, "1/0"]);
        assert!(matches!(from_json(&v), Err(Error::SchemaError { .. })));
    }

    #[test]
    fn file_roundtrip() {
        let dir = std::env::temp_dir().join("drinfeld-io-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("sweedler.json");
        let a = zoo::sweedler();
        export_file(&a, &path).unwrap();
        let b = import_file(&path).unwrap();
        assert_eq!(a, b);
        let c = resolve_spec(&format!("file:{}", path.display())).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn unitless_mult_is_rejected() {
        let v = serde_json::json!({
            "name": "no unit",
            "field": {"type": "Q"},
            "dim": 2,
            "basis": ["a", "b"],
            "mult": [[0,0,0,"0"]],
            "comult": [[0,0,0,"1"],[1,1,1,"1"]],
            "counit": [[0,"1"]],
            "antipode": [[0,0,"1"],[1,1,"1"]],
        });
        assert!(matches!(from_json(&v), Err(Error::InvalidAlgebra(_))));
    }
}
