//! The Temperley-Lieb quotient of the Hecke algebra in its basis `T_w`,
//! `w` fully commutative.
//!
//! Left multiplication by a generator `T_s` on `T_w`:
//!
//! 1. `s ∈ 𝓛(w)`: `(q−1) T_w + q T_{sw}`;
//! 2. `sw` fully commutative: `T_{sw}`;
//! 3. otherwise `sw` has a reduced word `d·b·u` with `b` a braid word on a
//!    pair `{s', t'}`, and `Σ_{x ∈ ⟨s',t'⟩} T_x = 0` rewrites `T_b` as minus
//!    the sum over the shorter elements of the dihedral subgroup. Every
//!    resulting product has total length below `l(sw)`, so the recursion ends.

use std::collections::HashMap;
use std::ops::Deref;
use std::sync::{Arc, Mutex};

use crate::combination::Combination;
use crate::element::GroupElement;
use crate::error::{input, Error, Result};
use crate::fullcomm::{element_is_fc, Heap};
use crate::graph::{CoxeterGraph, Family};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlElement<S>(Combination<S>);

impl<S> Deref for TlElement<S> {
    type Target = Combination<S>;
    fn deref(&self) -> &Combination<S> {
        &self.0
    }
}

impl<S: Scalar> TlElement<S> {
    pub fn zero(graph: &Arc<CoxeterGraph>) -> Self {
        Self(Combination::zero(graph))
    }

    pub fn one(graph: &Arc<CoxeterGraph>) -> Self {
        Self(Combination::basis(&GroupElement::identity(graph)))
    }

    /// `T_x` for a fully commutative `x`.
    pub fn basis(x: &GroupElement) -> Result<Self> {
        if !element_is_fc(x) {
            return input(format!("{} is not fully commutative", x.format()));
        }
        Ok(Self(Combination::basis(x)))
    }

    pub fn from_combination(c: Combination<S>) -> Result<Self> {
        if let Some((x, _)) = c.terms().find(|(x, _)| !element_is_fc(x)) {
            return input(format!("{} is not fully commutative", x.format()));
        }
        Ok(Self(c))
    }

    pub fn into_combination(self) -> Combination<S> {
        self.0
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
}

type Terms<S> = Vec<(GroupElement, LaurentPoly<S>)>;

/// Multiplication context for one graph, caching generator actions.
pub struct TlAlgebra<S> {
    graph: Arc<CoxeterGraph>,
    cache: Mutex<HashMap<(usize, GroupElement), Arc<Terms<S>>>>,
}

/// Reduced words of the elements of `⟨s,t⟩` other than the longest one.
fn proper_dihedral_words(s: usize, t: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for len in 1..m {
        for start in [s, t] {
            let other = if start == s { t } else { s };
            out.push((0..len).map(|k| if k % 2 == 0 { start } else { other }).collect());
        }
    }
    out
}

impl<S: Scalar> TlAlgebra<S> {
    pub fn new(graph: &Arc<CoxeterGraph>) -> Self {
        Self {
            graph: Arc::clone(graph),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn generator(&self, s: usize) -> Result<TlElement<S>> {
        TlElement::basis(&GroupElement::generator(&self.graph, s)?)
    }

    /// `T_s⁻¹ = q⁻¹ T_s + (q⁻¹ − 1)`.
    pub fn generator_inverse(&self, s: usize) -> Result<TlElement<S>> {
        let mut c = Combination::zero(&self.graph);
        c.add_term(GroupElement::generator(&self.graph, s)?, LaurentPoly::p());
        c.add_term(GroupElement::identity(&self.graph), LaurentPoly::p() - LaurentPoly::one());
        Ok(TlElement(c))
    }

    fn check_graph(&self, x: &TlElement<S>) -> Result<()> {
        if **x.graph() != *self.graph {
            return input(format!("element of {} used in the algebra of {}", x.graph(), self.graph));
        }
        Ok(())
    }

    fn mul_gen_basis(&self, s: usize, w: &GroupElement) -> Result<Arc<Terms<S>>> {
        let key = (s, w.clone());
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let sw = w.left_mul(s);
        let terms: Terms<S> = if w.is_left_descent(s) {
            let q = LaurentPoly::q();
            vec![(w.clone(), &q - &LaurentPoly::one()), (sw, q)]
        } else if element_is_fc(&sw) {
            vec![(sw, LaurentPoly::one())]
        } else {
            self.reduce_non_fc(&sw)?.0.terms().map(|(x, c)| (x.clone(), c.clone())).collect()
        };
        let terms = Arc::new(terms);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, Arc::clone(&terms));
        Ok(terms)
    }

    /// The image of `g_x` in the basis, for any `x`.
    pub fn reduce_non_fc(&self, x: &GroupElement) -> Result<TlElement<S>> {
        let heap = Heap::new(&self.graph, x.word());
        let Some(b) = heap.find_braid() else {
            return TlElement::basis(x);
        };
        let (s, t) = b.pair;
        let m = self.graph.m(s, t) as usize;
        if b.braid.len() != m {
            return Err(Error::Invariant(format!("braid chain of wrong length in {}", x.format())));
        }
        let tail = self.word_product(&b.suffix)?;
        let mut out = Combination::zero(&self.graph);
        for mid in proper_dihedral_words(s, t, m) {
            let mut acc = tail.clone();
            for &r in b.prefix.iter().chain(mid.iter()).rev() {
                acc = self.left_mul_gen(r, &acc)?;
            }
            out.add_scaled(&acc.0, &-LaurentPoly::one());
        }
        Ok(TlElement(out))
    }

    /// `T_s · x`.
    pub fn left_mul_gen(&self, s: usize, x: &TlElement<S>) -> Result<TlElement<S>> {
        self.check_graph(x)?;
        if s >= self.graph.rank() {
            return input(format!("generator {s} out of range for {}", self.graph));
        }
        let mut out = Combination::zero(&self.graph);
        for (w, c) in x.terms() {
            for (y, d) in self.mul_gen_basis(s, w)?.iter() {
                out.add_term(y.clone(), d * c);
            }
        }
        Ok(TlElement(out))
    }

    /// `T_{s₁} ⋯ T_{s_k}` for any word.
    pub fn word_product(&self, word: &[usize]) -> Result<TlElement<S>> {
        let mut acc = TlElement::one(&self.graph);
        for &s in word.iter().rev() {
            acc = self.left_mul_gen(s, &acc)?;
        }
        Ok(acc)
    }

    pub fn mul(&self, a: &TlElement<S>, b: &TlElement<S>) -> Result<TlElement<S>> {
        self.check_graph(a)?;
        self.check_graph(b)?;
        let mut out = Combination::zero(&self.graph);
        for (x, c) in a.terms() {
            let mut acc = b.clone();
            for &s in x.word().iter().rev() {
                acc = self.left_mul_gen(s, &acc)?;
            }
            out.add_scaled(&acc.0, c);
        }
        Ok(TlElement(out))
    }

    /// `R`: `h_{σ_i} ↦ T_{σ_i}` and `h_{t_n} ↦ T_{σ_n} T_{t_{n+1}} T_{σ_n}⁻¹`,
    /// where `self` is the algebra of the target (rank `m+1`).
    pub fn r_embed(&self, x: &TlElement<S>) -> Result<TlElement<S>> {
        let source = x.graph();
        source.require(Family::Ctilde)?;
        self.graph.require(Family::Ctilde)?;
        let m = source.rank();
        if self.graph.rank() != m + 1 {
            return input(format!("R maps rank {m} to rank {}, not {}", m + 1, self.graph.rank()));
        }
        let p = LaurentPoly::<S>::p();
        let pm1 = &p - &LaurentPoly::one();
        let mut out = Combination::zero(&self.graph);
        for (w, c) in x.terms() {
            let mut acc = TlElement::one(&self.graph);
            for &s in w.word().iter().rev() {
                acc = if s == m - 1 {
                    let mut inner = self.left_mul_gen(m - 1, &acc)?.scale(&p);
                    inner.0.add_scaled(&acc.0, &pm1);
                    self.left_mul_gen(m - 1, &self.left_mul_gen(m, &inner)?)?
                } else {
                    self.left_mul_gen(s, &acc)?
                };
            }
            out.add_scaled(&acc.0, c);
        }
        Ok(TlElement(out))
    }

    pub fn cache_size(&self) -> usize {
        self.cache.lock().expect("cache lock").len()
    }
}

pub fn tl_multiply<S: Scalar>(a: &TlElement<S>, b: &TlElement<S>) -> Result<TlElement<S>> {
    TlAlgebra::new(a.graph()).mul(a, b)
}

pub fn r_embed_tl<S: Scalar>(x: &TlElement<S>) -> Result<TlElement<S>> {
    let target = CoxeterGraph::ctilde(x.graph().rank() + 1)?;
    TlAlgebra::new(&target).r_embed(x)
}

/// The maximal affine length among the terms, and the terms of that affine
/// length sorted by decreasing Coxeter length.
pub fn leading_terms<S: Scalar>(x: &TlElement<S>) -> Result<(usize, Vec<(GroupElement, LaurentPoly<S>)>)> {
    let a = x.graph().affine_generator().ok_or_else(|| {
        Error::Input(format!("affine length needs a C̃ graph, got {}", x.graph()))
    })?;
    let top = x
        .terms()
        .map(|(w, _)| w.count(a))
        .max()
        .ok_or_else(|| Error::Input("leading terms of zero".into()))?;
    let mut terms: Vec<_> = x
        .terms()
        .filter(|(w, _)| w.count(a) == top)
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    terms.sort_by(|(u, _), (v, _)| v.length().cmp(&u.length()).then_with(|| u.cmp(v)));
    Ok((top, terms))
}

/// `V(x,y)` (order three) or `Z(x,y)` (order four): the sum of all products
/// of alternating factors of length below `m`, plus the longest one.
pub fn braid_relator<S: Scalar>(alg: &TlAlgebra<S>, s: usize, t: usize) -> Result<TlElement<S>> {
    let m = alg.graph().m(s, t) as usize;
    if m < 3 {
        return input(format!("generators {s} and {t} commute"));
    }
    let mut out = Combination::zero(alg.graph());
    let mut words = proper_dihedral_words(s, t, m);
    words.push((0..m).map(|k| if k % 2 == 0 { s } else { t }).collect());
    for w in words {
        out.add_scaled(&alg.word_product(&w)?.0, &LaurentPoly::one());
    }
    Ok(TlElement(out))
}

/// Parses `T_w` from a word, which must be reduced and fully commutative.
pub fn basis_from_word<S: Scalar>(graph: &Arc<CoxeterGraph>, word: &Word) -> Result<TlElement<S>> {
    let x = GroupElement::evaluate(graph, word)?;
    if x.length() != word.len() {
        return input(format!("{} is not reduced", word.format(graph)));
    }
    TlElement::basis(&x)
}
