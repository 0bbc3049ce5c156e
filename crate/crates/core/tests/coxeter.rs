mod common;

use common::*;
use ctilde_core::enumerate::{enumerate_ball_with, length_series};
use ctilde_core::{bracket_word, enumerate_ball, CoxeterGraph, Error, GroupElement, Limits, Word};
use proptest::prelude::*;

#[test]
fn evaluate_examples() {
    let g = ctilde(3);
    assert!(el(&g, "").is_identity());
    assert!(el(&g, "t t").is_identity());
    assert_eq!(el(&g, "t s1 t s1"), el(&g, "s1 t s1 t"));
}

#[test]
fn descent_examples() {
    let g = ctilde(3);
    assert!(el(&g, "").left_descents().is_empty());
    assert_eq!(el(&g, "t s1").left_descents(), vec![0]);
    assert_eq!(el(&g, "s1 t s1").left_descents(), vec![1]);
}

#[test]
fn reduce_examples() {
    let g = ctilde(3);
    assert_eq!(el(&g, "").length_and_reduce(), (0, Word::new(vec![])));
    let (l, w) = el(&g, "t t s1").length_and_reduce();
    assert_eq!((l, w.format(&g)), (1, "s1".to_string()));
    let (l, w) = el(&g, "s1 t s1 t").length_and_reduce();
    assert_eq!((l, w.format(&g)), (4, "t s1 t s1".to_string()));
}

#[test]
fn ball_examples() {
    let g = ctilde(3);
    assert_eq!(enumerate_ball(&g, 0).unwrap(), vec![GroupElement::identity(&g)]);
    assert_eq!(enumerate_ball(&CoxeterGraph::b(2).unwrap(), 4).unwrap().len(), 8);
    assert_eq!(enumerate_ball(&CoxeterGraph::b(2).unwrap(), 10).unwrap().len(), 8);
    // frozen from the word search oracle
    assert_eq!(enumerate_ball(&g, 6).unwrap().len(), 57);
    assert_eq!(ball_by_words(&g, 6).len(), 57);
}

#[test]
fn balls_match_word_search() {
    for (rank, radius) in [(3, 8), (4, 6), (5, 5)] {
        let g = ctilde(rank);
        let oracle = ball_by_words(&g, radius);
        let ball = enumerate_ball(&g, radius).unwrap();
        assert_eq!(ball.len(), oracle.len());
        for x in &ball {
            assert_eq!(oracle[x].len(), x.length(), "{}", x.format());
        }
    }
}

#[test]
fn length_series_matches_poincare_series() {
    let g = ctilde(3);
    let ball = enumerate_ball(&g, 14).unwrap();
    assert_eq!(length_series(&ball, 14), affine_poincare(&[2, 4], 14));
    let g = ctilde(4);
    let ball = enumerate_ball(&g, 9).unwrap();
    assert_eq!(length_series(&ball, 9), affine_poincare(&[2, 4, 6], 9));
}

#[test]
fn atilde_and_b_series() {
    // Ã₂: degrees 2, 3
    let g = CoxeterGraph::atilde(3).unwrap();
    assert_eq!(length_series(&enumerate_ball(&g, 10).unwrap(), 10), affine_poincare(&[2, 3], 10));
    // B₃ has order 48 and longest length 9
    let b3 = enumerate_ball(&CoxeterGraph::b(3).unwrap(), 20).unwrap();
    assert_eq!(b3.len(), 48);
    assert_eq!(b3.iter().map(|x| x.length()).max(), Some(9));
}

#[test]
fn bracket_examples() {
    let g = ctilde(4);
    assert!(bracket_word(&g, 0, -1).unwrap().is_empty());
    assert!(bracket_word(&g, 3, 2).unwrap().is_empty());
    assert_eq!(bracket_word(&g, -1, 2).unwrap().format(&g), "s1 t s1 s2");
}

#[test]
fn resource_cap() {
    let g = ctilde(5);
    let err = enumerate_ball_with(&g, 20, Limits { max_elements: 100 }).unwrap_err();
    assert!(matches!(err, Error::Resource { limit: 100, .. }));
}

#[test]
fn small_ranks_rejected() {
    assert!(CoxeterGraph::ctilde(2).is_err());
    assert!(GroupElement::parse(&ctilde(3), "s3").is_err());
}

proptest! {
    #[test]
    fn canonical_word_round_trip((rank, w) in ranked_word(14)) {
        let g = ctilde(rank);
        let x = GroupElement::evaluate(&g, &w).unwrap();
        let (l, word) = x.length_and_reduce();
        prop_assert_eq!(word.len(), l);
        prop_assert!(l <= w.len() && (w.len() - l) % 2 == 0);
        prop_assert_eq!(GroupElement::evaluate(&g, &word).unwrap(), x.clone());
        prop_assert_eq!(Word::parse(&g, &x.format()).unwrap(), word);
    }

    #[test]
    fn generators_are_involutions((rank, w) in ranked_word(12), s in 0usize..5) {
        let g = ctilde(rank);
        let s = s % rank;
        let x = GroupElement::evaluate(&g, &w).unwrap();
        let gs = GroupElement::generator(&g, s).unwrap();
        prop_assert_eq!(gs.mul(&gs.mul(&x)), x.clone());
        let y = gs.mul(&x);
        prop_assert_eq!(y.length().abs_diff(x.length()), 1);
        prop_assert_eq!(x.is_left_descent(s), y.length() + 1 == x.length());
        prop_assert_eq!(x.is_right_descent(s), x.right_mul(s).length() + 1 == x.length());
    }

    #[test]
    fn group_laws((rank, u) in ranked_word(8), v in word_strategy(3, 8), w in word_strategy(3, 8)) {
        let g = ctilde(rank);
        let (u, v, w) = [u, v, w].map(|x| GroupElement::evaluate(&g, &x).unwrap()).into();
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        prop_assert!(u.mul(&u.inverse()).is_identity());
        prop_assert_eq!(u.inverse().length(), u.length());
        prop_assert!(u.mul(&v).length() <= u.length() + v.length());
    }
}

#[test]
fn braid_relations_hold() {
    for g in [ctilde(3), ctilde(5), CoxeterGraph::b(4).unwrap(), CoxeterGraph::atilde(4).unwrap()] {
        for (s, t) in g.braid_pairs().collect::<Vec<_>>() {
            let m = g.m(s, t) as usize;
            let side = |a, b| Word::new((0..m).map(|k| if k % 2 == 0 { a } else { b }).collect());
            let lhs = GroupElement::evaluate(&g, &side(s, t)).unwrap();
            assert_eq!(lhs, GroupElement::evaluate(&g, &side(t, s)).unwrap());
            assert_eq!(lhs.length(), m);
        }
    }
}
