//! Normal forms of fully commutative elements of C̃.
//!
//! With `a` the affine generator and `n` the end of the line part:
//!
//! * first type: `[i,n] a ([-n,n] a)^k ([f,n])⁻¹`, affine length `k+1 ≥ 2`;
//! * second type: `[i₁,n] a … [i_p,n] a ([0,n] a)^k w_r`, affine length `p+k ≥ 2`;
//! * affine length one: `[i,n] a v`;
//! * affine length zero: a Stembridge form of the line parabolic.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::stembridge::{peel, StembridgeBForm};
use crate::brackets::bracket_letters;
use crate::element::GroupElement;
use crate::error::{input, Error, Result};
use crate::graph::{CoxeterGraph, Family};
use crate::word::Word;

/// Tail `w_r` of a second-type form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SecondTail {
    /// `[0,r₁]…[0,r_u]` with `n ≥ r₁ > … > r_u ≥ 0`; used when `k > 0`.
    Columns(Vec<i64>),
    /// Any Stembridge form; used when `k = 0`.
    Stembridge(StembridgeBForm),
}

/// Tail `v` of an affine-length-one form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AffineOneTail {
    /// `([h,n])⁻¹`.
    InverseBracket { h: i64 },
    /// `([z,n])⁻¹ [0,r₁]…[0,r_u]` with `z > r₁ > … > r_u ≥ 0`.
    Columns { z: i64, cols: Vec<i64> },
    Stembridge(StembridgeBForm),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum CtildeNormalForm {
    #[serde(rename = "finite")]
    Finite { form: StembridgeBForm },
    #[serde(rename = "first")]
    FirstType { i: i64, k: usize, f: i64 },
    #[serde(rename = "second")]
    SecondType {
        i_list: Vec<i64>,
        k: usize,
        w_r: SecondTail,
    },
    #[serde(rename = "affine1")]
    AffineOne { i: i64, v: AffineOneTail },
}

/// The three blocks of the partition of fully commutative elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionClass {
    /// Affine length zero.
    B,
    /// First type or affine length one.
    W1,
    /// Second type.
    W2,
}

impl CtildeNormalForm {
    pub fn affine_length(&self) -> usize {
        match self {
            Self::Finite { .. } => 0,
            Self::FirstType { k, .. } => k + 1,
            Self::SecondType { i_list, k, .. } => i_list.len() + k,
            Self::AffineOne { .. } => 1,
        }
    }

    pub fn partition_class(&self) -> PartitionClass {
        match self {
            Self::Finite { .. } => PartitionClass::B,
            Self::FirstType { .. } | Self::AffineOne { .. } => PartitionClass::W1,
            Self::SecondType { .. } => PartitionClass::W2,
        }
    }

    pub fn class_name(&self) -> &'static str {
        match self {
            Self::Finite { .. } => "finite",
            Self::FirstType { .. } => "first",
            Self::SecondType { .. } => "second",
            Self::AffineOne { .. } => "affine1",
        }
    }

    /// Empty tails are ambiguous in JSON; pick the variant that matches `k`.
    pub fn normalized(mut self) -> Self {
        if let Self::SecondType { k, w_r, .. } = &mut self {
            let empty = match w_r {
                SecondTail::Columns(c) => c.is_empty(),
                SecondTail::Stembridge(s) => s.is_empty(),
            };
            if empty {
                *w_r = if *k > 0 {
                    SecondTail::Columns(Vec::new())
                } else {
                    SecondTail::Stembridge(StembridgeBForm::default())
                };
            }
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("normal forms always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<Self>(text)
            .map(Self::normalized)
            .map_err(|e| Error::Input(format!("bad normal form JSON: {e}")))
    }

    /// Checks the parameter constraints for a line ending at `n`.
    pub fn validate(&self, n: i64) -> Result<()> {
        let in_range = |x: i64| (-n..=n + 1).contains(&x);
        match self {
            Self::Finite { form } => form.validate(n),
            Self::FirstType { i, k, f } => {
                if !in_range(*i) || !in_range(*f) {
                    return input(format!("first type parameters i={i}, f={f} out of [-{n},{}]", n + 1));
                }
                if *k == 0 {
                    return input("first type needs k ≥ 1");
                }
                Ok(())
            }
            Self::SecondType { i_list, k, w_r } => validate_second(n, i_list, *k, w_r),
            Self::AffineOne { i, v } => {
                if !in_range(*i) {
                    return input(format!("i={i} out of [-{n},{}]", n + 1));
                }
                match v {
                    AffineOneTail::Stembridge(form) if *i > 0 => form.validate(n),
                    AffineOneTail::InverseBracket { h } if *i <= 0 => {
                        if in_range(*h) {
                            Ok(())
                        } else {
                            input(format!("h={h} out of [-{n},{}]", n + 1))
                        }
                    }
                    AffineOneTail::Columns { z, cols } if *i == 0 => {
                        if !(1..=n + 1).contains(z) || cols.is_empty() {
                            return input("column tail needs 1 ≤ z ≤ n+1 and at least one column");
                        }
                        if *z == 1 && cols == &[0] {
                            return input("z=1 with column [0] is written as h=0");
                        }
                        validate_columns(cols, z - 1)
                    }
                    _ => input(format!("tail {v:?} does not fit i={i}")),
                }
            }
        }
    }

    /// Letters of the normal-form word for a line ending at `n`.
    pub fn letters(&self, n: i64) -> Result<Vec<usize>> {
        let a = (n + 1) as usize;
        let br = |i: i64, j: i64| bracket_letters(n, i, j);
        let rev = |i: i64, j: i64| -> Result<Vec<usize>> {
            let mut v = bracket_letters(n, i, j)?;
            v.reverse();
            Ok(v)
        };
        let cols = |cs: &[i64]| -> Result<Vec<usize>> {
            let mut v = Vec::new();
            for &r in cs {
                v.extend(br(0, r)?);
            }
            Ok(v)
        };
        let mut out = Vec::new();
        match self {
            Self::Finite { form } => out.extend(form.letters(n)?),
            Self::FirstType { i, k, f } => {
                out.extend(br(*i, n)?);
                out.push(a);
                for _ in 0..*k {
                    out.extend(br(-n, n)?);
                    out.push(a);
                }
                out.extend(rev(*f, n)?);
            }
            Self::SecondType { i_list, k, w_r } => {
                for &i in i_list {
                    out.extend(br(i, n)?);
                    out.push(a);
                }
                for _ in 0..*k {
                    out.extend(br(0, n)?);
                    out.push(a);
                }
                match w_r {
                    SecondTail::Columns(cs) => out.extend(cols(cs)?),
                    SecondTail::Stembridge(form) => out.extend(form.letters(n)?),
                }
            }
            Self::AffineOne { i, v } => {
                out.extend(br(*i, n)?);
                out.push(a);
                match v {
                    AffineOneTail::Stembridge(form) => out.extend(form.letters(n)?),
                    AffineOneTail::InverseBracket { h } => out.extend(rev(*h, n)?),
                    AffineOneTail::Columns { z, cols: cs } => {
                        out.extend(rev(*z, n)?);
                        out.extend(cols(cs)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Strictly decreasing columns in `[0, max]`.
fn validate_columns(cols: &[i64], max: i64) -> Result<()> {
    let ok = cols.windows(2).all(|w| w[0] > w[1])
        && cols.first().is_none_or(|&r| r <= max)
        && cols.last().is_none_or(|&r| r >= 0);
    if ok {
        Ok(())
    } else {
        input(format!("columns {cols:?} must strictly decrease within [0,{max}]"))
    }
}

fn validate_second(n: i64, i_list: &[i64], k: usize, w_r: &SecondTail) -> Result<()> {
    let p = i_list.len();
    if p + k < 2 {
        return input("second type needs affine length p+k ≥ 2");
    }
    if p as i64 > n + 1 {
        return input(format!("p={p} exceeds n+1"));
    }
    if let Some((&last, head)) = i_list.split_last() {
        let chain = head.windows(2).all(|w| w[0] > w[1])
            && head.first().is_none_or(|&i| i <= n + 1)
            && head.last().is_none_or(|&i| i > last.abs())
            && last != 0
            && last.abs() <= n + 1;
        if !chain {
            return input(format!("i_list {i_list:?} must satisfy n+1 ≥ i₁ > … > |i_p| > 0"));
        }
        if last < 0 {
            let empty_tail = matches!(w_r, SecondTail::Stembridge(s) if s.is_empty());
            if k != 0 || !empty_tail || last == -n {
                return input("a negative i_p needs k=0, w_r=1 and i_p ≠ -n");
            }
        }
    }
    match (k > 0, w_r) {
        (true, SecondTail::Columns(cols)) => validate_columns(cols, n),
        (false, SecondTail::Stembridge(form)) => {
            form.validate(n)?;
            if let (Some(&ip), Some(&(l1, _))) = (i_list.last(), form.segments.first()) {
                if ip > 0 && l1.abs() >= ip {
                    return input(format!("w_r must have |l₁| < i_p = {ip}"));
                }
            }
            Ok(())
        }
        _ => input("w_r must be a column list when k > 0 and a Stembridge form when k = 0"),
    }
}

fn require_ctilde(graph: &CoxeterGraph) -> Result<(i64, usize)> {
    graph.require(Family::Ctilde)?;
    Ok((graph.rank() as i64 - 2, graph.rank() - 1))
}

/// Peels `[i,n] a` off the left, with `[i,n]` the lower ideal of the first
/// affine letter.
fn peel_affine(n: i64, a: usize, x: &GroupElement) -> Result<(i64, GroupElement)> {
    for i in (-n..=n + 1).rev() {
        let mut prefix = bracket_letters(n, i, n)?;
        prefix.push(a);
        if let Some(rest) = x.strip_prefix(&prefix) {
            return Ok((i, rest));
        }
    }
    Err(Error::Domain(format!("{} has no prefix [i,n] a", x.format())))
}

fn inverse_bracket_param(n: i64, x: &GroupElement) -> Option<i64> {
    (-n..=n + 1).find(|&h| {
        let mut v = bracket_letters(n, h, n).expect("h in range");
        v.reverse();
        x.word().letters() == v.as_slice()
    })
}

fn column_params(n: i64, x: &GroupElement) -> Option<Vec<i64>> {
    peel(n, x).ok()?.columns()
}

fn affine_one_tail(n: i64, i: i64, v: &GroupElement) -> Result<AffineOneTail> {
    if i > 0 {
        return Ok(AffineOneTail::Stembridge(peel(n, v)?));
    }
    if let Some(h) = inverse_bracket_param(n, v) {
        return Ok(AffineOneTail::InverseBracket { h });
    }
    if i == 0 {
        for z in 1..=n + 1 {
            let mut prefix = bracket_letters(n, z, n)?;
            prefix.reverse();
            let Some(rest) = v.strip_prefix(&prefix) else {
                continue;
            };
            if let Some(cols) = column_params(n, &rest) {
                if !cols.is_empty() && cols[0] < z {
                    return Ok(AffineOneTail::Columns { z, cols });
                }
            }
        }
    }
    Err(Error::Domain(format!(
        "tail {} does not fit an affine-length-one form with i={i}",
        v.format()
    )))
}

/// Normal form of a fully commutative element of a C̃ graph.
pub fn classify(x: &GroupElement) -> Result<CtildeNormalForm> {
    let (n, a) = require_ctilde(x.graph())?;
    if !super::element_is_fc(x) {
        return Err(Error::Domain(format!("{} is not fully commutative", x.format())));
    }
    let big_l = x.count(a);
    let form = if big_l == 0 {
        CtildeNormalForm::Finite { form: peel(n, x)? }
    } else {
        let mut is = Vec::with_capacity(big_l);
        let mut rest = x.clone();
        for _ in 0..big_l {
            let (i, r) = peel_affine(n, a, &rest)?;
            is.push(i);
            rest = r;
        }
        if big_l == 1 {
            CtildeNormalForm::AffineOne {
                i: is[0],
                v: affine_one_tail(n, is[0], &rest)?,
            }
        } else if is[1] == -n {
            if is[1..].iter().any(|&i| i != -n) {
                return Err(Error::Invariant(format!("first-type peel {is:?} is not constant")));
            }
            let f = inverse_bracket_param(n, &rest).ok_or_else(|| {
                Error::Invariant(format!("first-type tail {} is not ([f,n])⁻¹", rest.format()))
            })?;
            CtildeNormalForm::FirstType { i: is[0], k: big_l - 1, f }
        } else {
            let p = is.iter().position(|&i| i == 0).unwrap_or(big_l);
            if is[p..].iter().any(|&i| i != 0) {
                return Err(Error::Invariant(format!("second-type peel {is:?} has a gap")));
            }
            let k = big_l - p;
            let w_r = if k > 0 {
                SecondTail::Columns(column_params(n, &rest).ok_or_else(|| {
                    Error::Invariant(format!("tail {} is not a column product", rest.format()))
                })?)
            } else {
                SecondTail::Stembridge(peel(n, &rest)?)
            };
            CtildeNormalForm::SecondType {
                i_list: is[..p].to_vec(),
                k,
                w_r,
            }
        }
    };
    form.validate(n).map_err(|e| {
        Error::Invariant(format!("classification of {} broke its constraints: {e}", x.format()))
    })?;
    Ok(form)
}

/// The normal-form word, after checking that it is reduced, fully
/// commutative and classifies back to `form`.
pub fn realize(graph: &Arc<CoxeterGraph>, form: &CtildeNormalForm) -> Result<Word> {
    let (n, _) = require_ctilde(graph)?;
    let form = form.clone().normalized();
    form.validate(n)?;
    let word = Word::new(form.letters(n)?);
    let x = GroupElement::evaluate(graph, &word)?;
    if x.length() != word.len() {
        return input(format!("{} is not reduced", word.format(graph)));
    }
    if !super::element_is_fc(&x) {
        return input(format!("{} is not fully commutative", word.format(graph)));
    }
    let back = classify(&x)?;
    if back != form {
        return input(format!(
            "{} is not in normal form; it classifies as {}",
            word.format(graph),
            back.to_json()
        ));
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> Arc<CoxeterGraph> {
        CoxeterGraph::ctilde(3).unwrap()
    }

    fn classify_str(g: &Arc<CoxeterGraph>, w: &str) -> CtildeNormalForm {
        classify(&GroupElement::parse(g, w).unwrap()).unwrap()
    }

    #[test]
    fn affine_one_example() {
        let g = c2();
        let form = classify_str(&g, "s1 u s1");
        assert_eq!(
            form,
            CtildeNormalForm::AffineOne {
                i: 1,
                v: AffineOneTail::Stembridge(StembridgeBForm::new(vec![(1, 1)]))
            }
        );
        assert_eq!(form.to_json(), r#"{"class":"affine1","i":1,"v":[[1,1]]}"#);
    }

    #[test]
    fn first_type_example() {
        let g = c2();
        let form = classify_str(&g, "u s1 t s1 u s1");
        assert_eq!(form, CtildeNormalForm::FirstType { i: 2, k: 1, f: 1 });
        assert_eq!(realize(&g, &form).unwrap().format(&g), "u s1 t s1 u s1");
    }

    #[test]
    fn second_type_example() {
        let g = c2();
        let form = classify_str(&g, "t s1 u t s1 u");
        let expected = CtildeNormalForm::SecondType {
            i_list: vec![],
            k: 2,
            w_r: SecondTail::Columns(vec![]),
        };
        assert_eq!(form, expected);
        assert_eq!(realize(&g, &expected).unwrap().format(&g), "t s1 u t s1 u");
    }

    #[test]
    fn finite_empty() {
        let g = c2();
        let form = CtildeNormalForm::Finite { form: StembridgeBForm::default() };
        assert!(realize(&g, &form).unwrap().is_empty());
        assert_eq!(classify_str(&g, ""), form);
    }

    #[test]
    fn json_round_trip() {
        let forms = [
            CtildeNormalForm::FirstType { i: -1, k: 3, f: 2 },
            CtildeNormalForm::SecondType {
                i_list: vec![3, 1],
                k: 0,
                w_r: SecondTail::Stembridge(StembridgeBForm::default()),
            },
            CtildeNormalForm::SecondType {
                i_list: vec![],
                k: 2,
                w_r: SecondTail::Columns(vec![]),
            },
            CtildeNormalForm::AffineOne { i: 0, v: AffineOneTail::Columns { z: 2, cols: vec![1, 0] } },
            CtildeNormalForm::AffineOne { i: -1, v: AffineOneTail::InverseBracket { h: 0 } },
        ];
        for f in forms {
            assert_eq!(CtildeNormalForm::from_json(&f.to_json()).unwrap(), f);
        }
    }

    #[test]
    fn invalid_forms_rejected() {
        let g = c2();
        let bad = CtildeNormalForm::FirstType { i: 3, k: 1, f: 0 };
        assert!(matches!(realize(&g, &bad), Err(Error::Input(_))));
        let bad = CtildeNormalForm::SecondType {
            i_list: vec![1],
            k: 0,
            w_r: SecondTail::Stembridge(StembridgeBForm::default()),
        };
        assert!(realize(&g, &bad).is_err());
        let not_fc = GroupElement::parse(&g, "t s1 t s1").unwrap();
        assert!(matches!(classify(&not_fc), Err(Error::Domain(_))));
    }
}
