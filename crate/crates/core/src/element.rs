//! Group elements in the geometric representation.
//!
//! An element is stored as its matrix on the simple-root basis together with
//! the inverse matrix and a canonical reduced word. Equality and hashing use
//! the matrix; ordering is by length, then lexicographically by canonical word.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::Result;
use crate::graph::CoxeterGraph;
use crate::quadint::QuadInt;
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct GroupElement {
    graph: Arc<CoxeterGraph>,
    mat: Vec<QuadInt>,
    inv: Vec<QuadInt>,
    word: Word,
}

fn identity_matrix(rank: usize) -> Vec<QuadInt> {
    let mut m = vec![QuadInt::ZERO; rank * rank];
    for i in 0..rank {
        m[i * rank + i] = QuadInt::ONE;
    }
    m
}

/// `A ← M_s · A`; only row `s` changes.
fn reflect_rows(graph: &CoxeterGraph, a: &mut [QuadInt], s: usize) {
    let rank = graph.rank();
    for j in 0..rank {
        let mut acc = -a[s * rank + j];
        for t in 0..rank {
            if t != s && !graph.commute(s, t) {
                acc -= graph.form2(s, t) * a[t * rank + j];
            }
        }
        a[s * rank + j] = acc;
    }
}

/// `A ← A · M_s`; only column `s` can change.
fn reflect_cols(graph: &CoxeterGraph, a: &mut [QuadInt], s: usize) {
    let rank = graph.rank();
    for i in 0..rank {
        let pivot = a[i * rank + s];
        if pivot == QuadInt::ZERO {
            continue;
        }
        for j in 0..rank {
            if !graph.commute(s, j) {
                a[i * rank + j] -= pivot * graph.form2(s, j);
            }
        }
    }
}

/// A root is positive or negative as a whole, so its first nonzero
/// coordinate decides.
fn column_is_negative(a: &[QuadInt], rank: usize, col: usize) -> bool {
    (0..rank)
        .map(|i| a[i * rank + col])
        .find(|x| *x != QuadInt::ZERO)
        .is_some_and(QuadInt::is_negative)
}

impl GroupElement {
    pub fn identity(graph: &Arc<CoxeterGraph>) -> Self {
        let rank = graph.rank();
        Self {
            graph: Arc::clone(graph),
            mat: identity_matrix(rank),
            inv: identity_matrix(rank),
            word: Word::empty(),
        }
    }

    pub fn generator(graph: &Arc<CoxeterGraph>, s: usize) -> Result<Self> {
        Self::evaluate(graph, &Word::new(vec![s]))
    }

    /// The element represented by `word`, which need not be reduced.
    pub fn evaluate(graph: &Arc<CoxeterGraph>, word: &Word) -> Result<Self> {
        word.validate(graph)?;
        let rank = graph.rank();
        let mut mat = identity_matrix(rank);
        let mut inv = identity_matrix(rank);
        for &s in word.iter().rev() {
            reflect_rows(graph, &mut mat, s);
            reflect_cols(graph, &mut inv, s);
        }
        Ok(Self::from_matrices(graph, mat, inv))
    }

    pub fn parse(graph: &Arc<CoxeterGraph>, text: &str) -> Result<Self> {
        Self::evaluate(graph, &Word::parse(graph, text)?)
    }

    fn from_matrices(graph: &Arc<CoxeterGraph>, mat: Vec<QuadInt>, inv: Vec<QuadInt>) -> Self {
        let rank = graph.rank();
        let mut word = Vec::new();
        let mut m = mat.clone();
        let mut iv = inv.clone();
        while let Some(s) = (0..rank).find(|&s| column_is_negative(&iv, rank, s)) {
            word.push(s);
            reflect_rows(graph, &mut m, s);
            reflect_cols(graph, &mut iv, s);
        }
        Self {
            graph: Arc::clone(graph),
            mat,
            inv,
            word: Word::new(word),
        }
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Canonical reduced word: the smallest-index left descent is stripped first.
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn length_and_reduce(&self) -> (usize, Word) {
        (self.length(), self.word.clone())
    }

    pub fn matrix(&self) -> &[QuadInt] {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &[QuadInt] {
        &self.inv
    }

    pub fn is_left_descent(&self, s: usize) -> bool {
        column_is_negative(&self.inv, self.rank(), s)
    }

    pub fn is_right_descent(&self, s: usize) -> bool {
        column_is_negative(&self.mat, self.rank(), s)
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_left_descent(s)).collect()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_right_descent(s)).collect()
    }

    /// `s · self`.
    pub fn left_mul(&self, s: usize) -> Self {
        let mut mat = self.mat.clone();
        let mut inv = self.inv.clone();
        reflect_rows(&self.graph, &mut mat, s);
        reflect_cols(&self.graph, &mut inv, s);
        Self::from_matrices(&self.graph, mat, inv)
    }

    /// `self · s`.
    pub fn right_mul(&self, s: usize) -> Self {
        let mut mat = self.mat.clone();
        let mut inv = self.inv.clone();
        reflect_cols(&self.graph, &mut mat, s);
        reflect_rows(&self.graph, &mut inv, s);
        Self::from_matrices(&self.graph, mat, inv)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(
            *self.graph == *other.graph,
            "multiplying elements of different groups"
        );
        let mut mat = self.mat.clone();
        let mut inv = self.inv.clone();
        for &s in other.word.iter() {
            reflect_cols(&self.graph, &mut mat, s);
            reflect_rows(&self.graph, &mut inv, s);
        }
        Self::from_matrices(&self.graph, mat, inv)
    }

    pub fn inverse(&self) -> Self {
        Self::from_matrices(&self.graph, self.inv.clone(), self.mat.clone())
    }

    /// If `prefix` followed by some word is a reduced expression of `self`,
    /// return the element represented by the rest.
    pub fn strip_prefix(&self, prefix: &[usize]) -> Option<Self> {
        let rank = self.rank();
        let mut mat = self.mat.clone();
        let mut inv = self.inv.clone();
        for &s in prefix {
            if !column_is_negative(&inv, rank, s) {
                return None;
            }
            reflect_rows(&self.graph, &mut mat, s);
            reflect_cols(&self.graph, &mut inv, s);
        }
        Some(Self::from_matrices(&self.graph, mat, inv))
    }

    /// Number of occurrences of `s` in any reduced word, for generators whose
    /// count is invariant under braid moves (such as the affine end of C̃).
    pub fn count(&self, s: usize) -> usize {
        self.word.count(s)
    }

    pub fn format(&self) -> String {
        self.word.format(&self.graph)
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat && *self.graph == *other.graph
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.graph.rank().cmp(&other.graph.rank()))
            .then_with(|| self.graph.family().cmp(&other.graph.family()))
    }
}
