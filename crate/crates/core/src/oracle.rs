//! Slow reference implementations used to cross-check the fast paths.
//!
//! Nothing here uses heaps or the Temperley-Lieb multiplication tables: the
//! full-commutativity test closes the commutation class explicitly, and the
//! projection of a Hecke element to the Temperley-Lieb quotient rewrites
//! braid factors found in that closure.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::combination::Combination;
use crate::element::GroupElement;
use crate::error::{input, Result};
use crate::graph::CoxeterGraph;
use crate::hecke::HeckeElement;
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;
use crate::tl::TlElement;
use crate::word::Word;

/// All words reachable from `word` by swapping adjacent commuting letters.
pub fn commutation_class(graph: &CoxeterGraph, word: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![word.to_vec()];
    seen.insert(word.to_vec());
    while let Some(w) = stack.pop() {
        for k in 1..w.len() {
            if w[k - 1] != w[k] && graph.commute(w[k - 1], w[k]) {
                let mut v = w.clone();
                v.swap(k - 1, k);
                if seen.insert(v.clone()) {
                    stack.push(v);
                }
            }
        }
    }
    seen
}

/// A braid factor `sts…` of length `m(s,t) ≥ 3` at position `start`.
fn braid_factor_at(graph: &CoxeterGraph, w: &[usize], start: usize) -> Option<(usize, usize)> {
    let (s, t) = (w[start], *w.get(start + 1)?);
    let m = graph.m(s, t) as usize;
    if s == t || m < 3 || start + m > w.len() {
        return None;
    }
    (0..m)
        .all(|k| w[start + k] == if k % 2 == 0 { s } else { t })
        .then_some((s, t))
}

/// Some word of the class of `word` written `prefix · braid · suffix`.
pub fn find_braid_factor(graph: &CoxeterGraph, word: &[usize]) -> Option<(Vec<usize>, (usize, usize), Vec<usize>)> {
    for w in commutation_class(graph, word) {
        for start in 0..w.len() {
            if let Some((s, t)) = braid_factor_at(graph, &w, start) {
                let m = graph.m(s, t) as usize;
                return Some((w[..start].to_vec(), (s, t), w[start + m..].to_vec()));
            }
        }
    }
    None
}

/// Full commutativity by definition: `word` is reduced and no word of its
/// commutation class contains a braid factor.
pub fn is_fc_by_closure(graph: &Arc<CoxeterGraph>, word: &Word) -> Result<bool> {
    let x = GroupElement::evaluate(graph, word)?;
    Ok(x.length() == word.len() && find_braid_factor(graph, word).is_none())
}

/// Projects Hecke elements onto the Temperley-Lieb basis.
///
/// For non-FC `x` pick a reduced word `d·b·u` with `b` a braid word on
/// `{s,t}`; then `g_x = g_d g_b g_u` and `g_d (Σ_{y ∈ ⟨s,t⟩} g_y) g_u` lies in
/// the kernel, so `g_x ≡ −Σ_{y ≠ b} g_d g_y g_u`. Those products are computed
/// in the Hecke algebra and projected recursively; all their terms are
/// shorter than `x`.
pub struct HeckeProjection<S> {
    graph: Arc<CoxeterGraph>,
    memo: HashMap<GroupElement, Combination<S>>,
}

impl<S: Scalar> HeckeProjection<S> {
    pub fn new(graph: &Arc<CoxeterGraph>) -> Self {
        Self {
            graph: Arc::clone(graph),
            memo: HashMap::new(),
        }
    }

    fn word_product(&self, word: &[usize]) -> HeckeElement<S> {
        let mut acc = HeckeElement::one(&self.graph);
        for &s in word.iter().rev() {
            acc = acc.left_mul_gen(s);
        }
        acc
    }

    fn project_basis(&mut self, x: &GroupElement) -> Combination<S> {
        if let Some(hit) = self.memo.get(x) {
            return hit.clone();
        }
        let out = match find_braid_factor(&self.graph, x.word()) {
            None => Combination::basis(x),
            Some((prefix, (s, t), suffix)) => {
                let m = self.graph.m(s, t) as usize;
                let mut sum = Combination::zero(&self.graph);
                for len in 0..m {
                    for start in [s, t] {
                        if len == 0 && start == t {
                            continue;
                        }
                        let other = if start == s { t } else { s };
                        let mut w = prefix.clone();
                        w.extend((0..len).map(|k| if k % 2 == 0 { start } else { other }));
                        w.extend_from_slice(&suffix);
                        let h = self.word_product(&w);
                        for (y, c) in h.terms() {
                            let p = self.project_basis(y);
                            sum.add_scaled(&p, c);
                        }
                    }
                }
                sum.scale(&-LaurentPoly::one())
            }
        };
        self.memo.insert(x.clone(), out.clone());
        out
    }

    pub fn project(&mut self, h: &HeckeElement<S>) -> Result<TlElement<S>> {
        if **h.graph() != *self.graph {
            return input(format!("element of {} projected in {}", h.graph(), self.graph));
        }
        let mut out = Combination::zero(&self.graph);
        for (x, c) in h.terms() {
            let p = self.project_basis(x);
            out.add_scaled(&p, c);
        }
        TlElement::from_combination(out)
    }
}
