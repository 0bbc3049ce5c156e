//! Tower maps between Coxeter groups and the injections `I`, `J` on fully
//! commutative elements.
//!
//! * `P`: C̃ rank `m` → rank `m+1`, fixing `t, σ_i` and sending the affine end
//!   to `σ a σ` (new `σ` and new affine end).
//! * `i_n`: C̃ rank `n+1` → Ã rank `2n`, `σ_i ↦ s_{n-i} s_{n+i}`, `t ↦ s_n`,
//!   affine end ↦ `a_{2n}` (index 0).
//! * `L_n`: Ã rank `2n` → rank `2n+2`, the rotation `i ↦ i+1 mod 2n+2` after
//!   two steps `a_k ↦ s_k a_{k+1} s_k`.

use std::sync::Arc;

use crate::element::GroupElement;
use crate::error::{input, Error, Result};
use crate::fullcomm::{classify, realize, AffineOneTail, CtildeNormalForm, SecondTail, StembridgeBForm};
use crate::graph::{CoxeterGraph, Family};
use crate::word::Word;

/// A homomorphism given by the images of the generators.
#[derive(Clone, Debug)]
pub struct GeneratorMap {
    source: Arc<CoxeterGraph>,
    target: Arc<CoxeterGraph>,
    images: Vec<Word>,
}

impl GeneratorMap {
    pub fn new(source: Arc<CoxeterGraph>, target: Arc<CoxeterGraph>, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.rank() {
            return input("one image per source generator is required");
        }
        for w in &images {
            w.validate(&target)?;
        }
        Ok(Self { source, target, images })
    }

    pub fn source(&self) -> &Arc<CoxeterGraph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CoxeterGraph> {
        &self.target
    }

    pub fn image_of_generator(&self, s: usize) -> &Word {
        &self.images[s]
    }

    pub fn apply_word(&self, word: &Word) -> Word {
        word.iter().flat_map(|&s| self.images[s].iter().copied()).collect()
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if **x.graph() != *self.source {
            return input(format!("element of {} given to a map from {}", x.graph(), self.source));
        }
        GroupElement::evaluate(&self.target, &self.apply_word(x.word()))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GeneratorMap) -> Result<GeneratorMap> {
        if *self.target != *other.source {
            return input("maps do not compose");
        }
        let images = self.images.iter().map(|w| other.apply_word(w)).collect();
        GeneratorMap::new(Arc::clone(&self.source), Arc::clone(&other.target), images)
    }
}

/// `P` from the C̃ graph of rank `m`.
pub fn p_map(m: usize) -> Result<GeneratorMap> {
    let source = CoxeterGraph::ctilde(m)?;
    let target = CoxeterGraph::ctilde(m + 1)?;
    let mut images: Vec<Word> = (0..m - 1).map(|s| Word::new(vec![s])).collect();
    images.push(Word::new(vec![m - 1, m, m - 1]));
    GeneratorMap::new(source, target, images)
}

/// `i_n` from the C̃ graph of rank `n+1` into Ã of rank `2n`.
pub fn a_map(n: usize) -> Result<GeneratorMap> {
    let source = CoxeterGraph::ctilde(n + 1)?;
    let target = CoxeterGraph::atilde(2 * n)?;
    let mut images = vec![Word::new(vec![n])];
    images.extend((1..n).map(|i| Word::new(vec![n - i, n + i])));
    images.push(Word::new(vec![0]));
    GeneratorMap::new(source, target, images)
}

/// One step of the Ã tower, rank `k` to `k+1`.
pub fn a_step(k: usize) -> Result<GeneratorMap> {
    let source = CoxeterGraph::atilde(k)?;
    let target = CoxeterGraph::atilde(k + 1)?;
    let mut images = vec![Word::new(vec![k, 0, k])];
    images.extend((1..k).map(|i| Word::new(vec![i])));
    GeneratorMap::new(source, target, images)
}

/// The rotation `i ↦ i+1 mod N` of the Ã graph of rank `N`.
pub fn rotation(rank: usize) -> Result<GeneratorMap> {
    let g = CoxeterGraph::atilde(rank)?;
    let images = (0..rank).map(|i| Word::new(vec![(i + 1) % rank])).collect();
    GeneratorMap::new(Arc::clone(&g), g, images)
}

/// `L_n`, Ã rank `2n` → `2n+2`.
pub fn l_map(n: usize) -> Result<GeneratorMap> {
    a_step(2 * n)?.then(&a_step(2 * n + 1)?)?.then(&rotation(2 * n + 2)?)
}

fn ctilde_rank(x: &GroupElement) -> Result<usize> {
    x.graph().require(Family::Ctilde)?;
    Ok(x.rank())
}

pub fn p_embed(x: &GroupElement) -> Result<GroupElement> {
    p_map(ctilde_rank(x)?)?.apply(x)
}

pub fn a_embed(x: &GroupElement) -> Result<GroupElement> {
    a_map(ctilde_rank(x)? - 1)?.apply(x)
}

pub fn l_compose(x: &GroupElement) -> Result<GroupElement> {
    x.graph().require(Family::Atilde)?;
    let rank = x.rank();
    if rank % 2 != 0 {
        return input("L_n is defined on Ã graphs of even rank");
    }
    l_map(rank / 2)?.apply(x)
}

/// Whether `L_n ∘ i_n` and `i_{n+1} ∘ P` agree on `x`, for `x` in the C̃
/// graph of rank `n+1`.
pub fn check_diagram(n: usize, x: &GroupElement) -> Result<bool> {
    if n < 2 || ctilde_rank(x)? != n + 1 {
        return input(format!("expected an element of the C̃ graph of rank {} with n ≥ 2", n + 1));
    }
    Ok(l_compose(&a_embed(x)?)? == a_embed(&p_embed(x)?)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Injection {
    I,
    J,
}

fn expected_image(which: Injection, n_t: i64, form: &CtildeNormalForm) -> CtildeNormalForm {
    use CtildeNormalForm::*;
    match (form, which) {
        (AffineOne { i, v: AffineOneTail::Stembridge(b) }, _) => {
            let mut segments = vec![(n_t, n_t)];
            segments.extend(&b.segments);
            AffineOne { i: *i, v: AffineOneTail::Stembridge(StembridgeBForm::new(segments)) }
        }
        (SecondType { i_list, k, w_r }, Injection::J) => {
            let mut new_list = vec![n_t + 1];
            if *k > 0 {
                new_list.extend(i_list);
                let SecondTail::Columns(cols) = w_r else {
                    unreachable!("validated forms with k > 0 carry columns")
                };
                let mut new_cols = vec![n_t];
                new_cols.extend(cols);
                let w_r = if *k > 1 {
                    SecondTail::Columns(new_cols)
                } else {
                    SecondTail::Stembridge(StembridgeBForm::from_columns(&new_cols))
                };
                SecondType { i_list: new_list, k: k - 1, w_r }
            } else {
                let (&last, head) = i_list.split_last().expect("k = 0 forces p ≥ 2");
                new_list.extend(head);
                let SecondTail::Stembridge(b) = w_r else {
                    unreachable!("validated forms with k = 0 carry a Stembridge tail")
                };
                let mut segments = vec![(last, n_t)];
                segments.extend(&b.segments);
                SecondType {
                    i_list: new_list,
                    k: 0,
                    w_r: SecondTail::Stembridge(StembridgeBForm::new(segments)),
                }
            }
        }
        _ => form.clone(),
    }
}

/// `I(x)` or `J(x)` with its normal form. The image is obtained by
/// substitution in the normal-form word of `x`; its classification is then
/// compared with the predicted target form, and its length with `l(x) + L(x)`
/// (second type) or `l(x) + 2L(x)` (first type and affine length one).
pub fn inject(
    which: Injection,
    x: &GroupElement,
    form: &CtildeNormalForm,
) -> Result<(GroupElement, CtildeNormalForm)> {
    let m = ctilde_rank(x)?;
    let source = x.graph();
    if classify(x)? != *form {
        return input(format!("{} does not have normal form {}", x.format(), form.to_json()));
    }
    let target = CoxeterGraph::ctilde(m + 1)?;
    let (sigma, a_old, a_new) = (m - 1, m - 1, m);
    let subst: Vec<usize> = match (form.partition_class(), which) {
        (crate::fullcomm::PartitionClass::B, _) => vec![a_old],
        (crate::fullcomm::PartitionClass::W1, _) => vec![sigma, a_new, sigma],
        (crate::fullcomm::PartitionClass::W2, Injection::I) => vec![sigma, a_new],
        (crate::fullcomm::PartitionClass::W2, Injection::J) => vec![a_new, sigma],
    };
    let word = realize(source, form)?;
    let image_word: Word = word
        .iter()
        .flat_map(|&s| if s == a_old { subst.clone() } else { vec![s] })
        .collect();
    let y = GroupElement::evaluate(&target, &image_word)?;
    let big_l = form.affine_length();
    let expected_len = match form.partition_class() {
        crate::fullcomm::PartitionClass::B => x.length(),
        crate::fullcomm::PartitionClass::W1 => x.length() + 2 * big_l,
        crate::fullcomm::PartitionClass::W2 => x.length() + big_l,
    };
    if y.length() != image_word.len() || y.length() != expected_len {
        return Err(Error::LemmaViolation(format!(
            "image {} of {} has length {}, expected {expected_len}",
            image_word.format(&target),
            x.format(),
            y.length()
        )));
    }
    let got = classify(&y).map_err(|e| {
        Error::LemmaViolation(format!("image {} is not classifiable: {e}", y.format()))
    })?;
    let expected = expected_image(which, target.rank() as i64 - 2, form);
    if got != expected {
        return Err(Error::LemmaViolation(format!(
            "image of {} classifies as {}, expected {}",
            x.format(),
            got.to_json(),
            expected.to_json()
        )));
    }
    Ok((y, got))
}

pub fn inject_i(x: &GroupElement, form: &CtildeNormalForm) -> Result<(GroupElement, CtildeNormalForm)> {
    inject(Injection::I, x, form)
}

pub fn inject_j(x: &GroupElement, form: &CtildeNormalForm) -> Result<(GroupElement, CtildeNormalForm)> {
    inject(Injection::J, x, form)
}
