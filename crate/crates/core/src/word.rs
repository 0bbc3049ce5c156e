//! Words in the generators and their text syntax.
//!
//! Tokens are separated by whitespace: `t` is generator 0, `s<k>` is
//! generator `k` (k ≥ 1), `u` is the last generator, and a bare decimal is
//! the generator with that index. The empty string is the identity.

use std::fmt;
use std::ops::Deref;

use crate::error::{input, Result};
use crate::graph::{CoxeterGraph, Family};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn push(&mut self, s: usize) {
        self.0.push(s);
    }

    pub fn extend_from(&mut self, other: &[usize]) {
        self.0.extend_from_slice(other);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn count(&self, s: usize) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }

    pub fn validate(&self, graph: &CoxeterGraph) -> Result<()> {
        match self.0.iter().find(|&&s| s >= graph.rank()) {
            Some(s) => input(format!("generator index {s} out of range for {graph}")),
            None => Ok(()),
        }
    }

    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<Word> {
        let rank = graph.rank();
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let idx = match tok {
                    "t" => 0,
                    "u" => rank - 1,
                    _ => {
                        let digits = tok.strip_prefix('s').unwrap_or(tok);
                        let k: usize = digits
                            .parse()
                            .map_err(|_| crate::Error::Input(format!("bad token {tok:?}")))?;
                        if tok.starts_with('s') && k == 0 {
                            return input(format!("bad token {tok:?}: use `t` for generator 0"));
                        }
                        k
                    }
                };
                if idx >= rank {
                    return input(format!("token {tok:?} out of range for {graph}"));
                }
                Ok(idx)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }

    /// Text form in the token grammar; inverse of [`Word::parse`].
    pub fn format(&self, graph: &CoxeterGraph) -> String {
        let rank = graph.rank();
        let family = graph.family();
        self.0
            .iter()
            .map(|&s| match (family, s) {
                (Family::Atilde, 0) => "0".to_string(),
                (_, 0) => "t".to_string(),
                (Family::Ctilde, s) if s == rank - 1 => "u".to_string(),
                (_, s) => format!("s{s}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Deref for Word {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
