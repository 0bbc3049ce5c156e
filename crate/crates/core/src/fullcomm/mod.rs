//! Fully commutative elements: testing, normal forms and enumeration.

mod cyclic;
mod heap;
mod normal_form;
mod stembridge;

use std::sync::Arc;

pub use cyclic::{is_cyclically_fc, rotate};
pub use heap::{reduced_word_is_fc, BraidWitness, Heap};
pub use normal_form::{classify, realize, AffineOneTail, CtildeNormalForm, PartitionClass, SecondTail};
pub use stembridge::{stembridge_form, SignPattern, StembridgeBForm};

use crate::element::GroupElement;
use crate::enumerate::{layers_by_length, Limits};
use crate::error::{input, Result};
use crate::graph::{CoxeterGraph, Family};
use crate::word::Word;

fn require_reduced(graph: &Arc<CoxeterGraph>, word: &Word) -> Result<GroupElement> {
    let x = GroupElement::evaluate(graph, word)?;
    if x.length() != word.len() {
        return input(format!("{} is not reduced", word.format(graph)));
    }
    Ok(x)
}

pub fn element_is_fc(x: &GroupElement) -> bool {
    reduced_word_is_fc(x.graph(), x.word())
}

/// Full commutativity of the element represented by a reduced word.
pub fn is_fully_commutative(graph: &Arc<CoxeterGraph>, word: &Word) -> Result<bool> {
    require_reduced(graph, word)?;
    Ok(reduced_word_is_fc(graph, word))
}

/// Number of occurrences of the affine generator in a reduced word.
pub fn affine_length(graph: &Arc<CoxeterGraph>, word: &Word) -> Result<usize> {
    graph.require(Family::Ctilde)?;
    require_reduced(graph, word)?;
    Ok(word.count(graph.rank() - 1))
}

/// Fully commutative elements of length at most `max_length`, optionally
/// bounded in affine length (C̃ only), ordered by length then canonical word.
pub fn enumerate_fc_elements(
    graph: &Arc<CoxeterGraph>,
    max_length: usize,
    max_affine_length: Option<usize>,
    limits: Limits,
) -> Result<Vec<GroupElement>> {
    let affine = match (max_affine_length, graph.affine_generator()) {
        (Some(k), Some(a)) => Some((k, a)),
        (Some(_), None) => return input("an affine-length bound needs a C̃ graph"),
        (None, _) => None,
    };
    let keep = |x: &GroupElement| {
        affine.is_none_or(|(k, a)| x.count(a) <= k) && element_is_fc(x)
    };
    let layers = layers_by_length(graph, max_length, limits, "fully commutative elements", keep)?;
    Ok(layers.into_iter().flatten().collect())
}

/// As [`enumerate_fc_elements`], paired with normal forms. B graphs get
/// their Stembridge form wrapped as a finite form.
pub fn enumerate_fc(
    graph: &Arc<CoxeterGraph>,
    max_length: usize,
    max_affine_length: Option<usize>,
) -> Result<Vec<(GroupElement, CtildeNormalForm)>> {
    enumerate_fc_with(graph, max_length, max_affine_length, Limits::from_env())
}

pub fn enumerate_fc_with(
    graph: &Arc<CoxeterGraph>,
    max_length: usize,
    max_affine_length: Option<usize>,
    limits: Limits,
) -> Result<Vec<(GroupElement, CtildeNormalForm)>> {
    let classify_one = |x: &GroupElement| match graph.family() {
        Family::Ctilde => classify(x),
        Family::B => Ok(CtildeNormalForm::Finite { form: stembridge_form(x)? }),
        Family::Atilde => input("normal forms exist only for C̃ and B graphs"),
    };
    enumerate_fc_elements(graph, max_length, max_affine_length, limits)?
        .into_iter()
        .map(|x| classify_one(&x).map(|f| (x, f)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fc_examples() {
        let g = CoxeterGraph::ctilde(3).unwrap();
        let fc = |w: &str| is_fully_commutative(&g, &Word::parse(&g, w).unwrap());
        assert!(fc("t s1 t").unwrap());
        assert!(!fc("t s1 t s1").unwrap());
        assert!(fc("s1 t s1").unwrap());
        assert!(fc("t t").is_err());
    }

    #[test]
    fn affine_length_counts_u() {
        let g = CoxeterGraph::ctilde(3).unwrap();
        let al = |w: &str| affine_length(&g, &Word::parse(&g, w).unwrap()).unwrap();
        assert_eq!(al("t s1 u t s1 u"), 2);
        assert_eq!(al("t s1 t"), 0);
        assert_eq!(al("s1 t s1 u"), 1);
    }

    #[test]
    fn b2_has_seven_fc_elements() {
        let g = CoxeterGraph::b(2).unwrap();
        assert_eq!(enumerate_fc(&g, 10, None).unwrap().len(), 7);
    }

    #[test]
    fn b_counts() {
        for (rank, count) in [(3, 24), (4, 83)] {
            let g = CoxeterGraph::b(rank).unwrap();
            assert_eq!(enumerate_fc(&g, 100, None).unwrap().len(), count);
        }
    }

    #[test]
    fn length_zero() {
        let g = CoxeterGraph::ctilde(3).unwrap();
        let all = enumerate_fc(&g, 0, None).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].1, CtildeNormalForm::Finite { form: StembridgeBForm::default() });
    }
}
