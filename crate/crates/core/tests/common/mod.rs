//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use ctilde_core::oracle::find_braid_factor;
use ctilde_core::{CoxeterGraph, GroupElement, Word};
use proptest::prelude::*;

pub fn ctilde(rank: usize) -> Arc<CoxeterGraph> {
    CoxeterGraph::ctilde(rank).unwrap()
}

pub fn el(g: &Arc<CoxeterGraph>, w: &str) -> GroupElement {
    GroupElement::parse(g, w).unwrap()
}

/// Breadth-first search over words: every element within `radius`, with the
/// first (hence reduced) word reaching it. Lengths come from the search
/// depth, not from the library's length function.
pub fn ball_by_words(g: &Arc<CoxeterGraph>, radius: usize) -> HashMap<GroupElement, Vec<usize>> {
    let mut seen: HashMap<GroupElement, Vec<usize>> = HashMap::new();
    let mut frontier = vec![(GroupElement::identity(g), Vec::new())];
    seen.insert(frontier[0].0.clone(), Vec::new());
    for _ in 0..radius {
        let mut next = Vec::new();
        for (x, w) in &frontier {
            for s in 0..g.rank() {
                let y = GroupElement::generator(g, s).unwrap().mul(x);
                if !seen.contains_key(&y) {
                    let mut v = vec![s];
                    v.extend(w);
                    seen.insert(y.clone(), v.clone());
                    next.push((y, v));
                }
            }
        }
        frontier = next;
    }
    seen
}

/// Coefficients up to `q^max_len` of `Π [d_i]_q / (1 − q^{d_i − 1})`, the
/// length generating function of the affine Weyl group whose finite part
/// has degrees `d_i`.
pub fn affine_poincare(degrees: &[usize], max_len: usize) -> Vec<u64> {
    let mut series = vec![0u64; max_len + 1];
    series[0] = 1;
    for &d in degrees {
        let mut num = vec![0u64; max_len + 1];
        for (k, c) in series.iter().enumerate() {
            for j in 0..d {
                if k + j <= max_len {
                    num[k + j] += c;
                }
            }
        }
        for k in (d - 1)..=max_len {
            num[k] += num[k - (d - 1)];
        }
        series = num;
    }
    series
}

/// Number of fully commutative elements with `l ≤ max_len`, by reducing
/// all words and testing each commutation class for braid factors.
pub fn fc_count_by_words(g: &Arc<CoxeterGraph>, max_len: usize) -> usize {
    ball_by_words(g, max_len)
        .values()
        .filter(|w| find_braid_factor(g, w).is_none())
        .count()
}

pub fn word_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..rank, 0..=max_len).prop_map(Word::new)
}

/// A rank in `3..=5` together with a random word in it.
pub fn ranked_word(max_len: usize) -> impl Strategy<Value = (usize, Word)> {
    (3usize..=5).prop_flat_map(move |r| (Just(r), word_strategy(r, max_len)))
}
