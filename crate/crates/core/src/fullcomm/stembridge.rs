//! Stembridge's normal form for fully commutative elements of type B.
//!
//! Every such element is uniquely a product `[l₁,g₁][l₂,g₂]…[l_r,g_r]` with
//! `n ≥ g₁ > … > g_r ≥ 0`, `|l_t| ≤ g_t`, and either
//!
//! 1. `l₁ > … > l_s > 0 = l_{s+1} = … = l_r`, or
//! 2. `l₁ > … > l_{r-1} > -l_r > 0`.

use serde::{Deserialize, Serialize};

use crate::brackets::bracket_letters;
use crate::element::GroupElement;
use crate::error::{input, Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StembridgeBForm {
    pub segments: Vec<(i64, i64)>,
}

/// Which of the two sign patterns a form satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignPattern {
    /// Positive decreasing entries followed by zeros.
    Descending,
    /// Decreasing entries ending in a negative one of smaller absolute value.
    NegativeLast,
}

impl StembridgeBForm {
    pub fn new(segments: Vec<(i64, i64)>) -> Self {
        Self { segments }
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// The segment `[0,r₁][0,r₂]…` for a column list.
    pub fn from_columns(cols: &[i64]) -> Self {
        Self::new(cols.iter().map(|&r| (0, r)).collect())
    }

    pub fn pattern(&self) -> Option<SignPattern> {
        let ls: Vec<i64> = self.segments.iter().map(|s| s.0).collect();
        let positive = ls.iter().take_while(|&&l| l > 0).count();
        let decreasing = ls[..positive].windows(2).all(|w| w[0] > w[1]);
        if decreasing && ls[positive..].iter().all(|&l| l == 0) {
            return Some(SignPattern::Descending);
        }
        if let Some((&last, head)) = ls.split_last() {
            let chain_ok = head.windows(2).all(|w| w[0] > w[1]);
            let tail_ok = last < 0 && head.last().is_none_or(|&h| h > -last);
            if chain_ok && tail_ok {
                return Some(SignPattern::NegativeLast);
            }
        }
        None
    }

    /// Checks the shape constraints for a line ending at `n`.
    pub fn validate(&self, n: i64) -> Result<()> {
        let mut prev = n + 1;
        for &(l, g) in &self.segments {
            if g >= prev || g < 0 {
                return input(format!("segment heights must decrease within [0,{n}]: {self:?}"));
            }
            if l.abs() > g {
                return input(format!("segment [{l},{g}] has |l| > g"));
            }
            prev = g;
        }
        if self.pattern().is_none() {
            return input(format!("segments {self:?} satisfy neither sign pattern"));
        }
        Ok(())
    }

    pub fn letters(&self, n: i64) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for &(l, g) in &self.segments {
            out.extend(bracket_letters(n, l, g)?);
        }
        Ok(out)
    }

    /// Column list if every segment starts at 0.
    pub fn columns(&self) -> Option<Vec<i64>> {
        self.segments
            .iter()
            .map(|&(l, g)| (l == 0).then_some(g))
            .collect()
    }

    /// Whether `σ_n` occurs, i.e. the element is extremal.
    pub fn is_extremal(&self, n: i64) -> bool {
        self.segments.first().is_some_and(|s| s.1 == n)
    }
}

/// Stembridge form of an element supported on the line `σ₀ … σ_n`.
pub(crate) fn peel(n: i64, x: &GroupElement) -> Result<StembridgeBForm> {
    if x.is_identity() {
        return Ok(StembridgeBForm::default());
    }
    let g = *x.word().iter().max().expect("non-identity") as i64;
    if g > n {
        return Err(Error::Domain(format!("{} is not in the line parabolic", x.format())));
    }
    for l in -g..=g {
        let prefix = bracket_letters(n, l, g)?;
        let Some(rest) = x.strip_prefix(&prefix) else {
            continue;
        };
        if rest.word().iter().any(|&s| s as i64 >= g) {
            continue;
        }
        let Ok(tail) = peel(n, &rest) else {
            continue;
        };
        let mut segments = vec![(l, g)];
        segments.extend(tail.segments);
        let form = StembridgeBForm::new(segments);
        if form.pattern().is_some() {
            return Ok(form);
        }
    }
    Err(Error::Domain(format!("{} is not fully commutative", x.format())))
}

/// Stembridge form of a fully commutative element of a B graph, or of the
/// line parabolic of a C̃ graph.
pub fn stembridge_form(x: &GroupElement) -> Result<StembridgeBForm> {
    let n = match x.graph().line_end() {
        Some(n) => n as i64,
        None => return input(format!("{} has no type B line", x.graph())),
    };
    peel(n, x)
}
