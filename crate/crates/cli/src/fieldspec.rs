//! The field spec file: structured text with exact rationals.
//!
//! ```json
//! {
//!   "label": "Q(sqrt2)",
//!   "min_poly": [-2, 0, 1],
//!   "elements": {"one": [1], "a": ["2", "1"], "half": ["1/2"]}
//! }
//! ```
//!
//! Rationals are written as integers or `"p/q"` strings and parsed
//! bit-exactly — float literals are rejected rather than round-tripped.

use std::collections::BTreeMap;
use std::sync::Arc;

use compositum_core::{AlgebraicNumber, BigInt, BigRational, NumberField, RationalPoly};
use num_traits::Zero;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone)]
pub struct FieldSpec {
    pub label: String,
    pub min_poly: RationalPoly,
    /// Element name -> residue coefficients, low degree first.
    pub elements: BTreeMap<String, Vec<BigRational>>,
}

fn parse_rational(value: &Value, context: &str) -> Result<BigRational, CliError> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(BigRational::from_integer(u.into()))
            } else {
                Err(CliError::parse(format!(
                    "{context}: non-integer numeric literal {n}; write rationals as \"p/q\" strings"
                )))
            }
        }
        Value::String(s) => parse_rational_str(s.trim())
            .map_err(|why| CliError::parse(format!("{context}: invalid rational '{s}': {why}"))),
        other => Err(CliError::parse(format!(
            "{context}: expected an integer or a \"p/q\" string, found {other}"
        ))),
    }
}

/// Parses `p` or `p/q` with arbitrary-size integers, rejecting zero
/// denominators instead of panicking.
fn parse_rational_str(s: &str) -> Result<BigRational, String> {
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| format!("bad numerator '{num}'"))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| format!("bad denominator '{den}'"))?;
            if d.is_zero() {
                return Err("zero denominator".to_string());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| format!("bad integer '{s}'"))?;
            Ok(BigRational::from_integer(n))
        }
    }
}

fn parse_rational_list(value: &Value, context: &str) -> Result<Vec<BigRational>, CliError> {
    let array = value
        .as_array()
        .ok_or_else(|| CliError::parse(format!("{context}: expected an array")))?;
    array
        .iter()
        .enumerate()
        .map(|(i, v)| parse_rational(v, &format!("{context}[{i}]")))
        .collect()
}

pub fn parse_field_spec(text: &str) -> Result<FieldSpec, CliError> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| CliError::parse(format!("invalid field spec: {e}")))?;
    let object = root
        .as_object()
        .ok_or_else(|| CliError::parse("field spec must be a JSON object"))?;
    let label = object
        .get("label")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::parse("field spec needs a string 'label'"))?
        .to_string();
    let min_poly_value = object
        .get("min_poly")
        .ok_or_else(|| CliError::parse("field spec needs 'min_poly'"))?;
    let min_poly = RationalPoly::new(parse_rational_list(min_poly_value, "min_poly")?);
    let mut elements = BTreeMap::new();
    if let Some(value) = object.get("elements") {
        let map = value
            .as_object()
            .ok_or_else(|| CliError::parse("'elements' must be an object"))?;
        for (name, coeffs) in map {
            elements.insert(
                name.clone(),
                parse_rational_list(coeffs, &format!("elements.{name}"))?,
            );
        }
    }
    for key in object.keys() {
        if !matches!(key.as_str(), "label" | "min_poly" | "elements") {
            return Err(CliError::parse(format!("unknown field spec key '{key}'")));
        }
    }
    Ok(FieldSpec {
        label,
        min_poly,
        elements,
    })
}

impl FieldSpec {
    /// Builds the number field and its named elements in name order.
    pub fn realize(
        &self,
        assert_irreducible: bool,
    ) -> Result<(Arc<NumberField>, Vec<(String, AlgebraicNumber)>), CliError> {
        let field = if assert_irreducible {
            NumberField::new_asserted_irreducible(&self.label, self.min_poly.clone())?
        } else {
            NumberField::new(&self.label, self.min_poly.clone())?
        };
        let elements = self
            .elements
            .iter()
            .map(|(name, coeffs)| (name.clone(), field.element(coeffs.clone())))
            .collect();
        Ok((field, elements))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_rationals() {
        let spec = parse_field_spec(
            r#"{"label": "Q(sqrt2)", "min_poly": [-2, 0, 1],
                "elements": {"a": ["2", 1], "half": ["1/2"]}}"#,
        )
        .unwrap();
        assert_eq!(spec.label, "Q(sqrt2)");
        assert_eq!(spec.min_poly.degree(), Some(2));
        assert_eq!(spec.elements.len(), 2);
        let (field, elements) = spec.realize(false).unwrap();
        assert_eq!(field.degree(), 2);
        assert_eq!(elements[0].0, "a");
        assert_eq!(elements[0].1.trace(), BigRational::from_integer(4.into()));
    }

    #[test]
    fn rejects_floats() {
        let err = parse_field_spec(r#"{"label": "x", "min_poly": [-2.0, 0, 1]}"#).unwrap_err();
        assert_eq!(err.code, crate::EXIT_PARSE);
        assert!(err.message.contains("p/q"));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_strings() {
        assert!(parse_field_spec(r#"{"label": "x", "min_poly": [1], "extra": 1}"#).is_err());
        assert!(parse_field_spec(r#"{"label": "x", "min_poly": ["1/0"]}"#).is_err());
        assert!(parse_field_spec(r#"{"label": "x", "min_poly": ["a/b"]}"#).is_err());
    }

    #[test]
    fn exact_round_trip_of_rationals() {
        // A denominator that would not survive a float round trip.
        let spec = parse_field_spec(
            r#"{"label": "q", "min_poly": [-2, 0, 1],
                "elements": {"x": ["1000000000000000000001/3"]}}"#,
        )
        .unwrap();
        let coeff = &spec.elements["x"][0];
        assert_eq!(
            coeff.to_string(),
            "1000000000000000000001/3"
        );
    }
}
