//! Finite linear combinations of group elements with Laurent coefficients.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::element::GroupElement;
use crate::error::{input, Result};
use crate::graph::CoxeterGraph;
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination<S> {
    graph: Arc<CoxeterGraph>,
    terms: BTreeMap<GroupElement, LaurentPoly<S>>,
}

impl<S: Scalar> Combination<S> {
    pub fn zero(graph: &Arc<CoxeterGraph>) -> Self {
        Self {
            graph: Arc::clone(graph),
            terms: BTreeMap::new(),
        }
    }

    pub fn term(x: &GroupElement, c: LaurentPoly<S>) -> Self {
        let mut out = Self::zero(x.graph());
        out.add_term(x.clone(), c);
        out
    }

    pub fn basis(x: &GroupElement) -> Self {
        Self::term(x, LaurentPoly::one())
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing (length, canonical word) order.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &LaurentPoly<S>)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, x: &GroupElement) -> LaurentPoly<S> {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, x: GroupElement, c: LaurentPoly<S>) {
        if c.is_zero() {
            return;
        }
        debug_assert!(**x.graph() == *self.graph);
        match self.terms.get_mut(&x) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&x);
                }
            }
            None => {
                self.terms.insert(x, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &LaurentPoly<S>) {
        if c.is_zero() {
            return;
        }
        for (x, d) in &other.terms {
            self.add_term(x.clone(), d * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-LaurentPoly::one());
        out
    }

    pub fn scale(&self, c: &LaurentPoly<S>) -> Self {
        let mut out = Self::zero(&self.graph);
        out.add_scaled(self, c);
        out
    }

    pub(crate) fn same_graph(&self, other: &Self) -> Result<()> {
        if *self.graph != *other.graph {
            return input(format!("elements live over {} and {}", self.graph, other.graph));
        }
        Ok(())
    }

    /// Evaluate every coefficient at `q = 1`.
    pub fn specialize_q1(&self) -> GroupAlgebraElement<S> {
        let mut out = GroupAlgebraElement::zero(&self.graph);
        for (x, c) in &self.terms {
            out.add_term(x.clone(), c.eval_q1());
        }
        out
    }
}

/// An element of the group algebra `S[W]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement<S> {
    graph: Arc<CoxeterGraph>,
    terms: BTreeMap<GroupElement, S>,
}

impl<S: Scalar> GroupAlgebraElement<S> {
    pub fn zero(graph: &Arc<CoxeterGraph>) -> Self {
        Self {
            graph: Arc::clone(graph),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(x: &GroupElement) -> Self {
        let mut out = Self::zero(x.graph());
        out.add_term(x.clone(), S::one());
        out
    }

    pub fn add_term(&mut self, x: GroupElement, c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(x);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get().clone() + c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &S)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.graph);
        for (x, c) in &self.terms {
            for (y, d) in &other.terms {
                out.add_term(x.mul(y), c.clone() * d.clone());
            }
        }
        out
    }
}
