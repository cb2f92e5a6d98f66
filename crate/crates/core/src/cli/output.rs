//! JSON and CSV encodings of exact values, characters and report entries.
//!
//! Rationals are strings `"p/q"` (or `"p"`), never floats. A special value is
//! `{pi_power, coeff}` where `coeff` is a rational string when it lies in `Q` and
//! `{conductor, coeffs}` otherwise.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::exactnum::rational::{format_rational, parse_rational};
use crate::exactnum::{CycNum, Rational};
use crate::lvalues::SpecialValue;

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    v.as_str()
        .ok_or_else(|| Error::Parse(format!("expected a rational string, got {v}")))
        .and_then(parse_rational)
}

pub fn cycnum_to_json(z: &CycNum) -> Value {
    match z.as_rational() {
        Some(q) => rational_to_json(&q),
        None => json!({
            "conductor": z.conductor(),
            "coeffs": z.coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn cycnum_from_json(v: &Value) -> Result<CycNum> {
    if v.is_string() {
        return Ok(CycNum::from_rational(rational_from_json(v)?, 1));
    }
    let conductor = v
        .get("conductor")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse(format!("missing conductor in {v}")))?;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse(format!("missing coeffs in {v}")))?
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>>>()?;
    CycNum::new(conductor, coeffs)
}

pub fn special_value_to_json(v: &SpecialValue) -> Value {
    json!({ "pi_power": v.pi_power, "coeff": cycnum_to_json(&v.coeff) })
}

pub fn special_value_from_json(v: &Value) -> Result<SpecialValue> {
    let pi_power = v
        .get("pi_power")
        .and_then(Value::as_i64)
        .ok_or_else(|| Error::Parse(format!("missing pi_power in {v}")))?;
    let coeff = v
        .get("coeff")
        .ok_or_else(|| Error::Parse(format!("missing coeff in {v}")))?;
    Ok(SpecialValue::new(pi_power as i32, cycnum_from_json(coeff)?))
}

/// Compact rendering of a JSON value for a CSV cell.
pub fn json_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn character_to_json(index: usize, chi: &DirichletCharacter) -> Value {
    json!({
        "index": index,
        "modulus": chi.modulus(),
        "generator_residues": chi.generators(),
        "exponents": chi.exponents(),
        "order": chi.order(),
        "parity": chi.parity().to_string(),
        "conductor": chi.conductor(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    pub check_name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
    pub elapsed_ms: f64,
}

impl ReportEntry {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn parameters_cell(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub const CSV_HEADER: [&'static str; 6] = [
        "check_name",
        "parameters",
        "status",
        "lhs",
        "rhs",
        "elapsed_ms",
    ];

    pub fn csv_row(&self) -> [String; 6] {
        [
            self.check_name.clone(),
            self.parameters_cell(),
            match self.status {
                Status::Pass => "pass".into(),
                Status::Fail => "fail".into(),
            },
            json_cell(&self.lhs),
            json_cell(&self.rhs),
            self.elapsed_ms.to_string(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    #[test]
    fn round_trips() {
        let z = &CycNum::root_of_unity(12, 1).scale(&rat(3, 7)) + &CycNum::one(12);
        let j = cycnum_to_json(&z);
        assert_eq!(cycnum_to_json(&cycnum_from_json(&j).unwrap()), j);
        let v = SpecialValue::rational(2, rat(1, 6));
        let j = special_value_to_json(&v);
        assert_eq!(j, json!({"pi_power": 2, "coeff": "1/6"}));
        assert_eq!(special_value_from_json(&j).unwrap(), v);
        assert!(rational_from_json(&json!(0.5)).is_err());
    }
}
