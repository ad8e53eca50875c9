//! JSON interchange formats.
//!
//! Rationals are exact strings `"p/q"` in canonical reduced form with a
//! positive denominator; the emitters always include the denominator, so
//! parse-then-emit is bit-exact. Omitted series coefficients mean zero.
//!
//! - series: `{"s": 2, "maxdeg": 3, "coeffs": [{"word": [1,2], "value": "1/2"}, ...]}`
//! - partitions: sorted block lists of 1-based integers, `[[1,4],[2,3]]`
//! - one-variable series: coefficient arrays, index = degree
//! - matrices: row-major arrays of rational strings with the ordered basis
//!   manifest and the parameters that reproduce it

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use boxconv::ncpart::NcPartition;
use boxconv::onedim::PowerSeries1;
use boxconv::rational::Rational;
use boxconv::repr::{MonomialBasis, RationalMatrix};
use boxconv::series::{NcSeries, Word};

/// A malformed document or a value violating the library invariants.
#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

/// Canonical rational string `p/q`.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p` or `p/q`; canonicalizes via the rational constructor.
pub fn rational_from_str(s: &str) -> Result<Rational, FormatError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| FormatError(format!("bad numerator {num:?}: {e}")))?;
    let d = BigInt::from_str(den).map_err(|e| FormatError(format!("bad denominator {den:?}: {e}")))?;
    if d == BigInt::from(0) {
        return err("zero denominator");
    }
    Ok(Rational::new(n, d))
}

fn rational_field(v: &Value) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => rational_from_str(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(BigInt::from(i)))
            } else {
                err(format!("non-integer numeric value {n}; use a \"p/q\" string"))
            }
        }
        _ => err(format!("expected rational string, got {v}")),
    }
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> Result<u64, FormatError> {
    obj.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| FormatError(format!("missing or invalid field {key:?}")))
}

pub fn series_to_json(f: &NcSeries) -> Value {
    let coeffs: Vec<Value> = f
        .iter()
        .map(|(w, c)| {
            json!({
                "word": w.letters(),
                "value": rational_to_string(c),
            })
        })
        .collect();
    json!({ "s": f.s(), "maxdeg": f.maxdeg(), "coeffs": coeffs })
}

pub fn series_from_json(v: &Value) -> Result<NcSeries, FormatError> {
    let obj = v.as_object().ok_or_else(|| FormatError("series must be an object".into()))?;
    let s = usize_field(obj, "s")? as u32;
    let maxdeg = usize_field(obj, "maxdeg")? as u32;
    if s == 0 || maxdeg == 0 {
        return err("s and maxdeg must be at least 1");
    }
    let mut pairs = Vec::new();
    if let Some(coeffs) = obj.get("coeffs") {
        let arr = coeffs
            .as_array()
            .ok_or_else(|| FormatError("coeffs must be an array".into()))?;
        for entry in arr {
            let eobj = entry
                .as_object()
                .ok_or_else(|| FormatError("coefficient entries must be objects".into()))?;
            let word = eobj
                .get("word")
                .and_then(Value::as_array)
                .ok_or_else(|| FormatError("missing word array".into()))?;
            let letters: Option<Vec<u32>> =
                word.iter().map(|x| x.as_u64().map(|u| u as u32)).collect();
            let letters = letters.ok_or_else(|| FormatError("letters must be integers".into()))?;
            let value = eobj
                .get("value")
                .ok_or_else(|| FormatError("missing value".into()))?;
            pairs.push((Word::new(letters), rational_field(value)?));
        }
    }
    NcSeries::from_coeffs(s, maxdeg, pairs).map_err(|e| FormatError(format!("invalid series: {e}")))
}

pub fn partition_to_json(p: &NcPartition) -> Value {
    Value::Array(
        p.blocks()
            .iter()
            .map(|b| Value::Array(b.iter().map(|&e| json!(e)).collect()))
            .collect(),
    )
}

/// Parses block lists; `n` defaults to the number of covered elements.
pub fn partition_from_json(v: &Value, n: Option<usize>) -> Result<NcPartition, FormatError> {
    let blocks = blocks_from_json(v)?;
    let inferred = blocks.iter().flatten().count();
    let n = n.unwrap_or(inferred);
    NcPartition::new(n, blocks).map_err(|e| FormatError(format!("invalid partition: {e}")))
}

/// Raw block lists without the non-crossing validation, for the checker.
pub fn blocks_from_json(v: &Value) -> Result<Vec<Vec<usize>>, FormatError> {
    let arr = v
        .as_array()
        .ok_or_else(|| FormatError("partition must be an array of blocks".into()))?;
    let mut blocks = Vec::with_capacity(arr.len());
    for b in arr {
        let barr = b
            .as_array()
            .ok_or_else(|| FormatError("blocks must be arrays".into()))?;
        let block: Option<Vec<usize>> =
            barr.iter().map(|x| x.as_u64().map(|u| u as usize)).collect();
        blocks.push(block.ok_or_else(|| FormatError("block elements must be integers".into()))?);
    }
    Ok(blocks)
}

pub fn ps1_to_json(p: &PowerSeries1) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(rational_to_string(c)))
            .collect(),
    )
}

pub fn ps1_from_json(v: &Value) -> Result<PowerSeries1, FormatError> {
    let arr = v
        .as_array()
        .ok_or_else(|| FormatError("one-variable series must be a coefficient array".into()))?;
    if arr.is_empty() {
        return err("coefficient array must be non-empty");
    }
    let coeffs: Result<Vec<Rational>, FormatError> = arr.iter().map(rational_field).collect();
    Ok(PowerSeries1::from_coeffs(coeffs?))
}

/// Matrix with its basis manifest and the parameters that rebuild the basis.
pub fn matrix_to_json(
    m: &RationalMatrix,
    basis: &MonomialBasis,
    variant: &str,
    s: u32,
    maxdeg: u32,
    bound: u32,
) -> Value {
    let rows: Vec<Value> = (0..m.dim())
        .map(|i| {
            Value::Array(
                (0..m.dim())
                    .map(|j| Value::String(rational_to_string(m.get(i, j))))
                    .collect(),
            )
        })
        .collect();
    json!({
        "variant": variant,
        "s": s,
        "maxdeg": maxdeg,
        "bound": bound,
        "dim": m.dim(),
        "basis": basis.render_keys(),
        "rows": rows,
    })
}

/// Reads back a matrix and rebuilds its basis from the recorded parameters.
pub fn matrix_from_json(v: &Value) -> Result<(RationalMatrix, MonomialBasis), FormatError> {
    let obj = v.as_object().ok_or_else(|| FormatError("matrix must be an object".into()))?;
    let s = usize_field(obj, "s")? as u32;
    let maxdeg = usize_field(obj, "maxdeg")? as u32;
    let bound = usize_field(obj, "bound")? as u32;
    let variant = obj
        .get("variant")
        .and_then(Value::as_str)
        .ok_or_else(|| FormatError("missing variant".into()))?;
    let basis = match variant {
        "reduced" => boxconv::repr::build_rep_basis(s, maxdeg, bound),
        "full" => boxconv::repr::s_transform_basis(s, maxdeg, bound),
        other => return err(format!("unknown variant {other:?}")),
    };
    let rows = obj
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError("missing rows".into()))?;
    let dim = rows.len();
    if dim != basis.len() {
        return err(format!(
            "matrix dimension {dim} does not match basis size {}",
            basis.len()
        ));
    }
    let mut m = RationalMatrix::zero(dim);
    for (i, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| FormatError("rows must be arrays".into()))?;
        if cells.len() != dim {
            return err("matrix is not square");
        }
        for (j, cell) in cells.iter().enumerate() {
            m.set(i, j, rational_field(cell)?);
        }
    }
    Ok((m, basis))
}

/// Map from words to rationals (bracket structure constants, grouped sums).
pub fn word_map_to_json(entries: &std::collections::BTreeMap<Word, Rational>) -> Value {
    let list: Vec<Value> = entries
        .iter()
        .map(|(w, c)| json!({"word": w.letters(), "value": rational_to_string(c)}))
        .collect();
    json!({ "entries": list })
}
