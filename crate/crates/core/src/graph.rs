//! Coxeter graphs for the three families used here.
//!
//! Generator numbering (rank `m`):
//!
//! | family | index 0 | indices `1..` | index `m-1` |
//! |--------|---------|---------------|-------------|
//! | C̃      | `t = σ₀` | `σ₁ … σ_{m-2}` | affine end `t_{m-1}` |
//! | B      | `t = σ₀` | `σ₁ … σ_{m-1}` | `σ_{m-1}` |
//! | Ã      | affine node `a_m` | `s₁ … s_{m-1}` | `s_{m-1}` |
//!
//! So a C̃ graph of rank `m` is the group usually written `W(C̃_{m-1})`, and
//! its first `m-1` generators span the parabolic `W(B_{m-1})`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::quadint::QuadInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Ctilde,
    B,
    Atilde,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Ctilde => "ctilde",
            Family::B => "b",
            Family::Atilde => "atilde",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ctilde" | "c" => Ok(Family::Ctilde),
            "b" => Ok(Family::B),
            "atilde" | "a" => Ok(Family::Atilde),
            other => input(format!("unknown family {other:?}")),
        }
    }
}

/// A Coxeter graph, stored as its full Coxeter matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    family: Family,
    rank: usize,
    matrix: Vec<u8>,
}

impl CoxeterGraph {
    pub fn new(family: Family, rank: usize) -> Result<Arc<Self>> {
        let min = match family {
            Family::Ctilde | Family::Atilde => 3,
            Family::B => 2,
        };
        if rank < min {
            return input(format!("{family} graphs need at least {min} generators, got {rank}"));
        }
        if rank > 64 {
            return input(format!("rank {rank} is too large"));
        }
        let mut matrix = vec![2u8; rank * rank];
        let mut set = |i: usize, j: usize, m: u8| {
            matrix[i * rank + j] = m;
            matrix[j * rank + i] = m;
        };
        for i in 0..rank {
            set(i, i, 1);
        }
        match family {
            Family::Ctilde | Family::B => {
                for i in 0..rank - 1 {
                    set(i, i + 1, 3);
                }
                set(0, 1, 4);
                if family == Family::Ctilde {
                    set(rank - 2, rank - 1, 4);
                }
            }
            Family::Atilde => {
                for i in 0..rank {
                    set(i, (i + 1) % rank, 3);
                }
            }
        }
        Ok(Arc::new(Self { family, rank, matrix }))
    }

    pub fn ctilde(rank: usize) -> Result<Arc<Self>> {
        Self::new(Family::Ctilde, rank)
    }

    pub fn b(rank: usize) -> Result<Arc<Self>> {
        Self::new(Family::B, rank)
    }

    pub fn atilde(rank: usize) -> Result<Arc<Self>> {
        Self::new(Family::Atilde, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of `st`.
    pub fn m(&self, s: usize, t: usize) -> u8 {
        self.matrix[s * self.rank + t]
    }

    pub fn commute(&self, s: usize, t: usize) -> bool {
        self.m(s, t) == 2
    }

    /// Twice the bilinear form on simple roots, `-2cos(π/m)`.
    pub fn form2(&self, s: usize, t: usize) -> QuadInt {
        match self.m(s, t) {
            1 => QuadInt::new(2, 0),
            2 => QuadInt::ZERO,
            3 => QuadInt::new(-1, 0),
            4 => QuadInt::new(0, -1),
            m => unreachable!("unsupported Coxeter matrix entry {m}"),
        }
    }

    /// Largest index `n` of the line part `σ₀ … σ_n` (C̃ and B only).
    pub fn line_end(&self) -> Option<usize> {
        match self.family {
            Family::Ctilde => Some(self.rank - 2),
            Family::B => Some(self.rank - 1),
            Family::Atilde => None,
        }
    }

    /// Index of the affine generator `t_{n+1}` of a C̃ graph.
    pub fn affine_generator(&self) -> Option<usize> {
        (self.family == Family::Ctilde).then_some(self.rank - 1)
    }

    /// The B parabolic spanned by the line part of a C̃ graph.
    pub fn finite_parabolic(&self) -> Result<Arc<Self>> {
        match self.family {
            Family::Ctilde => Self::b(self.rank - 1),
            _ => input("only C̃ graphs have a distinguished B parabolic"),
        }
    }

    /// All pairs `s < t` that do not commute.
    pub fn braid_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rank).flat_map(move |s| {
            (s + 1..self.rank)
                .filter(move |&t| !self.commute(s, t))
                .map(move |t| (s, t))
        })
    }

    pub fn require(&self, family: Family) -> Result<()> {
        if self.family != family {
            return input(format!("expected a {family} graph, got {}", self.family));
        }
        Ok(())
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.rank)
    }
}
