//! JSON documents for tuples, words and reports.
//!
//! Integers are written as JSON numbers while they fit in a double exactly
//! and as decimal strings beyond that; both spellings are accepted on input.

use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Number, Value};

use crate::arith::{Int, Residue};
use crate::error::{Error, Result};
use crate::form::{ClasperForm, LevineForm};
use crate::intlin::IntMatrix;
use crate::invariants::{InvariantReport, InvariantValue};
use crate::moves::{pair_word, Generator, MoveWord};

const SAFE: i64 = 1 << 53;

/// A parsed instance document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Clasper(ClasperForm),
    Levine(LevineForm),
}

impl Instance {
    /// The clasper form, converting Levine input on demand.
    pub fn to_clasper(&self) -> ClasperForm {
        match self {
            Instance::Clasper(l) => l.clone(),
            Instance::Levine(t) => crate::moves::levine_to_clasper(t),
        }
    }
}

/// An instance with its optional label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceDocument {
    pub instance: Instance,
    pub label: Option<String>,
}

pub fn int_to_json(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) if v.abs() <= SAFE => Value::Number(Number::from(v)),
        _ => Value::String(x.to_string()),
    }
}

pub fn ints_to_json(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

pub fn residue_to_json(r: &Residue) -> Value {
    json!({ "value": int_to_json(r.value()), "modulus": int_to_json(r.modulus()) })
}

fn parse_decimal(s: &str) -> Option<Int> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn json_to_int(v: &Value, path: &str) -> Result<Int> {
    let parsed = match v {
        Value::Number(n) => parse_decimal(&n.to_string()),
        Value::String(s) => parse_decimal(s.trim()),
        _ => None,
    };
    parsed.ok_or_else(|| Error::parse(path, format!("expected an integer, found {v}")))
}

fn json_to_ints<const N: usize>(v: Option<&Value>, path: &str) -> Result<[Int; N]> {
    let v = v.ok_or_else(|| Error::parse(path, "missing field"))?;
    let arr = v.as_array().ok_or_else(|| Error::parse(path, "expected an array"))?;
    if arr.len() != N {
        return Err(Error::parse(path, format!("must have {N} entries, found {}", arr.len())));
    }
    let out: Vec<Int> = arr.iter().enumerate().map(|(i, x)| json_to_int(x, &format!("{path}[{i}]"))).collect::<Result<_>>()?;
    Ok(out.try_into().expect("length checked"))
}

fn field_int(obj: &Map<String, Value>, key: &str) -> Result<Int> {
    json_to_int(obj.get(key).ok_or_else(|| Error::parse(key, "missing field"))?, key)
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], prefix: &str) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::parse(format!("{prefix}{k}"), "unknown field")),
        None => Ok(()),
    }
}

pub fn parse_instance_value(v: &Value) -> Result<InstanceDocument> {
    let obj = v.as_object().ok_or_else(|| Error::parse("$", "expected a JSON object"))?;
    let label = match obj.get("label") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(Error::parse("label", "expected a string")),
    };
    let form = obj.get("form").ok_or_else(|| Error::parse("form", "missing field"))?;
    let instance = match form.as_str() {
        Some("clasper") => {
            reject_unknown(obj, &["form", "label", "c", "f", "t"], "")?;
            Instance::Clasper(ClasperForm::new(
                json_to_ints(obj.get("c"), "c")?,
                json_to_ints(obj.get("f"), "f")?,
                json_to_ints(obj.get("t"), "t")?,
            ))
        }
        Some("levine") => {
            reject_unknown(obj, &["form", "label", "k", "l", "r", "d", "e"], "")?;
            let t = LevineForm {
                k: field_int(obj, "k")?,
                l: field_int(obj, "l")?,
                r: field_int(obj, "r")?,
                d: field_int(obj, "d")?,
                e: json_to_ints(obj.get("e"), "e")?,
            };
            if !t.is_normalized() {
                return Err(Error::parse("d", "must satisfy 0 <= d < gcd(k, l, r)"));
            }
            Instance::Levine(t)
        }
        _ => return Err(Error::parse("form", format!("expected \"clasper\" or \"levine\", found {form}"))),
    };
    Ok(InstanceDocument { instance, label })
}

pub fn parse_instance(text: &str) -> Result<InstanceDocument> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", format!("invalid JSON: {e}")))?;
    parse_instance_value(&v)
}

pub fn clasper_to_json(l: &ClasperForm) -> Value {
    json!({ "form": "clasper", "c": ints_to_json(&l.c), "f": ints_to_json(&l.f), "t": ints_to_json(&l.t) })
}

pub fn levine_to_json(t: &LevineForm) -> Value {
    json!({
        "form": "levine",
        "k": int_to_json(&t.k),
        "l": int_to_json(&t.l),
        "r": int_to_json(&t.r),
        "d": int_to_json(&t.d),
        "e": ints_to_json(&t.e),
    })
}

pub fn instance_to_json(doc: &InstanceDocument) -> Value {
    let mut v = match &doc.instance {
        Instance::Clasper(l) => clasper_to_json(l),
        Instance::Levine(t) => levine_to_json(t),
    };
    if let Some(label) = &doc.label {
        v["label"] = Value::String(label.clone());
    }
    v
}

pub fn word_to_json(w: &MoveWord) -> Value {
    Value::Array(
        w.steps()
            .iter()
            .map(|s| json!({ "i": s.generator.disc(), "j": s.generator.pushed(), "power": int_to_json(&s.power) }))
            .collect(),
    )
}

/// Parse a word document; derived pairs are expanded into primitive steps.
pub fn parse_word_value(v: &Value) -> Result<MoveWord> {
    let arr = v.as_array().ok_or_else(|| Error::parse("$", "a word is a JSON array"))?;
    let mut w = MoveWord::new();
    for (n, item) in arr.iter().enumerate() {
        let at = |k: &str| format!("[{n}].{k}");
        let obj = item.as_object().ok_or_else(|| Error::parse(format!("[{n}]"), "expected an object"))?;
        reject_unknown(obj, &["i", "j", "power"], &format!("[{n}]."))?;
        let index = |k: &str| -> Result<u8> {
            let x = json_to_int(obj.get(k).ok_or_else(|| Error::parse(at(k), "missing field"))?, &at(k))?;
            x.to_u8().filter(|x| (1..=4).contains(x)).ok_or_else(|| Error::parse(at(k), "must be in 1..4"))
        };
        let (i, j) = (index("i")?, index("j")?);
        let power = json_to_int(obj.get("power").ok_or_else(|| Error::parse(at("power"), "missing field"))?, &at("power"))?;
        if power.is_zero() {
            return Err(Error::parse(at("power"), "must be nonzero"));
        }
        match Generator::new(i, j) {
            Ok(g) => w.push(g, power),
            Err(_) => {
                let expanded = pair_word(i, j, &power).map_err(|e| Error::parse(format!("[{n}]"), e.to_string()))?;
                w.extend(&expanded);
            }
        }
    }
    Ok(w)
}

pub fn parse_word(text: &str) -> Result<MoveWord> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", format!("invalid JSON: {e}")))?;
    parse_word_value(&v)
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", format!("invalid JSON: {e}")))?;
    let rows = v.as_array().ok_or_else(|| Error::parse("$", "a matrix is an array of rows"))?;
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| Error::parse(format!("[{i}]"), "expected an array"))?;
        out.push(row.iter().enumerate().map(|(j, x)| json_to_int(x, &format!("[{i}][{j}]"))).collect::<Result<Vec<_>>>()?);
    }
    IntMatrix::from_rows(out).map_err(|e| Error::parse("$", e.to_string()))
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints_to_json(r)).collect())
}

pub fn report_to_json(r: &InvariantReport) -> Value {
    let mut values = Map::new();
    for (name, v) in &r.values {
        let entry = match v {
            InvariantValue::Integer(x) => int_to_json(x),
            InvariantValue::Residue(x) => residue_to_json(x),
        };
        values.insert((*name).to_string(), entry);
    }
    json!({ "family": r.family.id(), "values": values })
}

/// Whether a value is small enough for a JSON number.
pub fn fits_number(x: &Int) -> bool {
    x.abs() <= Int::from(SAFE)
}
