//! JSON for Hecke and Temperley-Lieb elements over the rationals.
//!
//! An element is an array of `{"word": "<tokens>", "coeff": [[exp, num, den], …]}`
//! sorted by (length, canonical word). Temperley-Lieb terms also carry an
//! `"affine_length"` field. Numerators and denominators are JSON integers
//! when they fit in 64 bits and decimal strings otherwise.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::combination::Combination;
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;
use crate::hecke::HeckeElement;
use crate::laurent::LaurentPoly;
use crate::tl::TlElement;
use crate::{Laurent, Rational};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: String,
    pub coeff: Vec<[Value; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub affine_length: Option<usize>,
}

fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Input(format!("{n} is not an integer"))),
        Value::String(s) => BigInt::from_str(s).map_err(|_| Error::Input(format!("{s:?} is not an integer"))),
        other => Err(Error::Input(format!("{other} is not an integer"))),
    }
}

pub fn laurent_to_json(p: &Laurent) -> Vec<[Value; 3]> {
    p.terms()
        .map(|(e, c)| [Value::from(e), int_value(c.numer()), int_value(c.denom())])
        .collect()
}

pub fn laurent_from_json(v: &[[Value; 3]]) -> Result<Laurent> {
    let mut p = LaurentPoly::zero();
    for [e, n, d] in v {
        let e = e
            .as_i64()
            .ok_or_else(|| Error::Input(format!("exponent {e} is not an integer")))?;
        let d = parse_int(d)?;
        if d == BigInt::from(0) {
            return Err(Error::Input("zero denominator".into()));
        }
        p.add_term(e, Rational::new(parse_int(n)?, d));
    }
    Ok(p)
}

fn combination_to_terms(c: &Combination<Rational>, with_affine: bool) -> Vec<TermJson> {
    let affine = c.graph().affine_generator();
    c.terms()
        .map(|(x, p)| TermJson {
            word: x.format(),
            coeff: laurent_to_json(p),
            affine_length: if with_affine { affine.map(|a| x.count(a)) } else { None },
        })
        .collect()
}

fn combination_from_terms(graph: &Arc<CoxeterGraph>, terms: &[TermJson]) -> Result<Combination<Rational>> {
    let mut c = Combination::zero(graph);
    for t in terms {
        let x = GroupElement::parse(graph, &t.word)?;
        c.add_term(x, laurent_from_json(&t.coeff)?);
    }
    Ok(c)
}

fn parse_terms(text: &str) -> Result<Vec<TermJson>> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("bad element JSON: {e}")))
}

pub fn hecke_to_json(x: &HeckeElement<Rational>) -> String {
    serde_json::to_string(&combination_to_terms(x, false)).expect("terms serialize")
}

pub fn hecke_from_json(graph: &Arc<CoxeterGraph>, text: &str) -> Result<HeckeElement<Rational>> {
    Ok(HeckeElement::from_combination(combination_from_terms(graph, &parse_terms(text)?)?))
}

pub fn tl_to_json(x: &TlElement<Rational>) -> String {
    serde_json::to_string(&combination_to_terms(x, true)).expect("terms serialize")
}

pub fn tl_from_json(graph: &Arc<CoxeterGraph>, text: &str) -> Result<TlElement<Rational>> {
    TlElement::from_combination(combination_from_terms(graph, &parse_terms(text)?)?)
}

/// A JSON array of elements, or a single element.
pub fn parse_element_list(text: &str) -> Result<Vec<String>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Input(format!("bad JSON: {e}")))?;
    match &v {
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_array) => {
            Ok(items.iter().map(Value::to_string).collect())
        }
        Value::Array(_) => Ok(vec![v.to_string()]),
        _ => Err(Error::Input("expected a JSON array".into())),
    }
}
