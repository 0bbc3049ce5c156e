//! Heaps of words and the braid-factor criterion for full commutativity.
//!
//! Positions `i < j` of a word are related in the heap when a chain of
//! non-commuting letters joins them. A braid factor `sts…` of length
//! `m(s,t)` appears in some commutation-equivalent word exactly when `m`
//! consecutive `{s,t}` occurrences form a convex chain of the heap.

use crate::graph::CoxeterGraph;

pub struct Heap<'a> {
    graph: &'a CoxeterGraph,
    letters: &'a [usize],
    below: Vec<Vec<u64>>,
}

/// A braid factor located in a heap: the chain positions, and a word
/// `prefix · braid · suffix` commutation-equivalent to the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWitness {
    pub pair: (usize, usize),
    pub positions: Vec<usize>,
    pub prefix: Vec<usize>,
    pub braid: Vec<usize>,
    pub suffix: Vec<usize>,
}

impl<'a> Heap<'a> {
    pub fn new(graph: &'a CoxeterGraph, letters: &'a [usize]) -> Self {
        let len = letters.len();
        let blocks = len.div_ceil(64).max(1);
        let mut below: Vec<Vec<u64>> = Vec::with_capacity(len);
        for j in 0..len {
            let mut set = vec![0u64; blocks];
            for i in 0..j {
                if graph.commute(letters[i], letters[j]) || bit(&set, i) {
                    continue;
                }
                set[i / 64] |= 1 << (i % 64);
                for (dst, src) in set.iter_mut().zip(&below[i]) {
                    *dst |= *src;
                }
            }
            below.push(set);
        }
        Self { graph, letters, below }
    }

    /// Strict heap order between positions.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        i < j && bit(&self.below[j], i)
    }

    /// First convex braid chain, scanning pairs and windows in order.
    pub fn find_braid(&self) -> Option<BraidWitness> {
        let rank = self.graph.rank();
        for s in 0..rank {
            for t in s + 1..rank {
                let m = self.graph.m(s, t) as usize;
                if m < 3 {
                    continue;
                }
                let occ: Vec<usize> = (0..self.letters.len())
                    .filter(|&p| self.letters[p] == s || self.letters[p] == t)
                    .collect();
                for window in occ.windows(m) {
                    let alternating = window
                        .windows(2)
                        .all(|w| self.letters[w[0]] != self.letters[w[1]]);
                    if alternating && self.is_convex(window) {
                        return Some(self.witness((s, t), window));
                    }
                }
            }
        }
        None
    }

    fn is_convex(&self, chain: &[usize]) -> bool {
        let (first, last) = (chain[0], chain[chain.len() - 1]);
        (first + 1..last)
            .filter(|x| !chain.contains(x))
            .all(|x| !(self.precedes(first, x) && self.precedes(x, last)))
    }

    fn witness(&self, pair: (usize, usize), chain: &[usize]) -> BraidWitness {
        let last = chain[chain.len() - 1];
        let mut prefix = Vec::new();
        let mut suffix = Vec::new();
        for x in 0..self.letters.len() {
            if chain.contains(&x) {
                continue;
            }
            if self.precedes(x, last) {
                prefix.push(self.letters[x]);
            } else {
                suffix.push(self.letters[x]);
            }
        }
        BraidWitness {
            pair,
            positions: chain.to_vec(),
            prefix,
            braid: chain.iter().map(|&p| self.letters[p]).collect(),
            suffix,
        }
    }
}

fn bit(set: &[u64], i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

/// Full commutativity of a reduced word (reducedness is the caller's job).
pub fn reduced_word_is_fc(graph: &CoxeterGraph, letters: &[usize]) -> bool {
    Heap::new(graph, letters).find_braid().is_none()
}
