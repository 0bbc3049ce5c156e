//! The Hecke algebra with basis `g_w` and `g_s² = q + (q−1) g_s`.

use std::ops::Deref;
use std::sync::Arc;

use crate::combination::{Combination, GroupAlgebraElement};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Family};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;
use crate::towers::p_embed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement<S>(Combination<S>);

impl<S> Deref for HeckeElement<S> {
    type Target = Combination<S>;
    fn deref(&self) -> &Combination<S> {
        &self.0
    }
}

impl<S: Scalar> HeckeElement<S> {
    pub fn zero(graph: &Arc<CoxeterGraph>) -> Self {
        Self(Combination::zero(graph))
    }

    pub fn one(graph: &Arc<CoxeterGraph>) -> Self {
        Self::basis(&GroupElement::identity(graph))
    }

    /// `g_x`.
    pub fn basis(x: &GroupElement) -> Self {
        Self(Combination::basis(x))
    }

    pub fn from_combination(c: Combination<S>) -> Self {
        Self(c)
    }

    pub fn into_combination(self) -> Combination<S> {
        self.0
    }

    pub fn generator(graph: &Arc<CoxeterGraph>, s: usize) -> Result<Self> {
        Ok(Self::basis(&GroupElement::generator(graph, s)?))
    }

    /// `g_s⁻¹ = q⁻¹ g_s + (q⁻¹ − 1)`.
    pub fn generator_inverse(graph: &Arc<CoxeterGraph>, s: usize) -> Result<Self> {
        let mut c = Combination::zero(graph);
        c.add_term(GroupElement::generator(graph, s)?, LaurentPoly::p());
        c.add_term(GroupElement::identity(graph), LaurentPoly::p() - LaurentPoly::one());
        Ok(Self(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.0.same_graph(&other.0)?;
        Ok(Self(self.0.add(&other.0)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.0.same_graph(&other.0)?;
        Ok(Self(self.0.sub(&other.0)))
    }

    pub fn scale(&self, c: &LaurentPoly<S>) -> Self {
        Self(self.0.scale(c))
    }

    /// `g_s · self`.
    pub fn left_mul_gen(&self, s: usize) -> Self {
        let mut out = Combination::zero(self.graph());
        let q = LaurentPoly::<S>::q();
        let qm1 = &q - &LaurentPoly::one();
        for (w, c) in self.0.terms() {
            let sw = w.left_mul(s);
            if w.is_left_descent(s) {
                out.add_term(sw, &q * c);
                out.add_term(w.clone(), &qm1 * c);
            } else {
                out.add_term(sw, c.clone());
            }
        }
        Self(out)
    }

    /// `g_s⁻¹ · self`.
    pub fn left_mul_gen_inverse(&self, s: usize) -> Self {
        let mut out = self.left_mul_gen(s).scale(&LaurentPoly::p()).0;
        out.add_scaled(&self.0, &(LaurentPoly::p() - LaurentPoly::one()));
        Self(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.0.same_graph(&other.0)?;
        let mut out = Combination::zero(self.graph());
        for (x, c) in self.0.terms() {
            let mut acc = other.clone();
            for &s in x.word().iter().rev() {
                acc = acc.left_mul_gen(s);
            }
            out.add_scaled(&acc.0, c);
        }
        Ok(Self(out))
    }

    pub fn specialize_q1(&self) -> GroupAlgebraElement<S> {
        self.0.specialize_q1()
    }
}

pub fn hecke_multiply<S: Scalar>(a: &HeckeElement<S>, b: &HeckeElement<S>) -> Result<HeckeElement<S>> {
    a.mul(b)
}

/// `R`: `e_{σ_i} ↦ g_{σ_i}` and `e_{t_n} ↦ g_{σ_n} g_{t_{n+1}} g_{σ_n}⁻¹`,
/// from the C̃ graph of rank `m` to rank `m+1`.
pub fn r_embed_hecke<S: Scalar>(x: &HeckeElement<S>) -> Result<HeckeElement<S>> {
    let source = x.graph();
    source.require(Family::Ctilde)?;
    let m = source.rank();
    let target = CoxeterGraph::ctilde(m + 1)?;
    let mut out = HeckeElement::zero(&target);
    for (w, c) in x.terms() {
        let mut acc = HeckeElement::one(&target);
        for &s in w.word().iter().rev() {
            acc = if s == m - 1 {
                acc.left_mul_gen_inverse(m - 1).left_mul_gen(m).left_mul_gen(m - 1)
            } else {
                acc.left_mul_gen(s)
            };
        }
        out.0.add_scaled(&acc.0, c);
    }
    Ok(out)
}

/// Checks `R(e_w) = q^a g_{P(w)} + (residual vanishing at q = 1)` and returns
/// `(a, residual)`.
pub fn lemma_decompose<S: Scalar>(w: &GroupElement) -> Result<(i64, HeckeElement<S>)> {
    let image = r_embed_hecke(&HeckeElement::<S>::basis(w))?;
    let pw = p_embed(w)?;
    let lead = image.coefficient(&pw);
    let a = lead.as_q_power().ok_or_else(|| {
        Error::LemmaViolation(format!(
            "coefficient of g_P(w) for w = {} is not a power of q",
            w.format()
        ))
    })?;
    let mut residual = image.0.clone();
    residual.add_term(pw, -lead);
    if let Some((x, _)) = residual.terms().find(|(_, c)| !c.eval_q1().is_zero()) {
        return Err(Error::LemmaViolation(format!(
            "residual of w = {} has a term g_{} not vanishing at q = 1",
            w.format(),
            x.format()
        )));
    }
    Ok((a, HeckeElement(residual)))
}

/// Checks the quadratic and braid relations for the generators of a graph.
pub fn presentation_holds<S: Scalar>(graph: &Arc<CoxeterGraph>) -> Result<bool> {
    let rank = graph.rank();
    let q = LaurentPoly::<S>::q();
    let one = HeckeElement::<S>::one(graph);
    for s in 0..rank {
        let gs = HeckeElement::<S>::generator(graph, s)?;
        let lhs = gs.mul(&gs)?;
        let rhs = one.scale(&q).add(&gs.scale(&(&q - &LaurentPoly::one())))?;
        if lhs != rhs {
            return Ok(false);
        }
        if HeckeElement::generator_inverse(graph, s)?.mul(&gs)? != one {
            return Ok(false);
        }
        for t in s + 1..rank {
            let m = graph.m(s, t) as usize;
            let side = |a: usize, b: usize| -> Result<HeckeElement<S>> {
                let mut acc = one.clone();
                for k in 0..m {
                    acc = acc.left_mul_gen(if k % 2 == 0 { b } else { a });
                }
                Ok(acc)
            };
            if side(s, t)? != side(t, s)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
