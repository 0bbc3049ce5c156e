//! Cyclic full commutativity of a given reduced word.

use std::sync::Arc;

use crate::element::GroupElement;
use crate::error::{input, Result};
use crate::graph::CoxeterGraph;
use crate::word::Word;

use super::heap::reduced_word_is_fc;

/// Rotate left by `k`: the first `k` letters move to the end.
pub fn rotate(word: &Word, k: usize) -> Word {
    if word.is_empty() {
        return word.clone();
    }
    let k = k % word.len();
    let mut v = word[k..].to_vec();
    v.extend_from_slice(&word[..k]);
    Word::new(v)
}

fn is_reduced_fc(graph: &Arc<CoxeterGraph>, word: &Word) -> Result<bool> {
    let x = GroupElement::evaluate(graph, word)?;
    Ok(x.length() == word.len() && reduced_word_is_fc(graph, word))
}

/// Whether every rotation of `word` is a reduced word of a fully
/// commutative element. A rotation that is not reduced counts as a failure.
pub fn is_cyclically_fc(graph: &Arc<CoxeterGraph>, word: &Word) -> Result<bool> {
    if !is_reduced_fc(graph, word)? {
        return input(format!("{} is not a reduced fully commutative word", word.format(graph)));
    }
    for k in 1..word.len() {
        if !is_reduced_fc(graph, &rotate(word, k))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fullcomm::{realize, CtildeNormalForm};

    #[test]
    fn rotation() {
        let w = Word::new(vec![0, 1, 2]);
        assert_eq!(rotate(&w, 1).letters(), &[1, 2, 0]);
        assert_eq!(rotate(&w, 3), w);
    }

    #[test]
    fn first_type_examples() {
        let g = CoxeterGraph::ctilde(3).unwrap();
        for k in 1..=3 {
            let good = realize(&g, &CtildeNormalForm::FirstType { i: 2, k, f: -1 }).unwrap();
            assert!(is_cyclically_fc(&g, &good).unwrap());
            let bad = realize(&g, &CtildeNormalForm::FirstType { i: 2, k, f: 1 }).unwrap();
            assert!(!is_cyclically_fc(&g, &bad).unwrap());
        }
        assert!(is_cyclically_fc(&g, &Word::empty()).unwrap());
    }

    #[test]
    fn rejects_non_fc() {
        let g = CoxeterGraph::ctilde(3).unwrap();
        assert!(is_cyclically_fc(&g, &Word::new(vec![0, 1, 0, 1])).is_err());
        assert!(is_cyclically_fc(&g, &Word::new(vec![0, 0])).is_err());
    }
}
