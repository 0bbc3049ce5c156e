//! Bounded enumeration of group elements.

use std::collections::HashSet;
use std::sync::Arc;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::graph::CoxeterGraph;

/// Environment variable overriding [`Limits::default`].
pub const MAX_ELEMENTS_VAR: &str = "CTILDE_MAX_ELEMENTS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_elements: 2_000_000 }
    }
}

impl Limits {
    /// Default limits, with the cap taken from `CTILDE_MAX_ELEMENTS` if set.
    pub fn from_env() -> Self {
        std::env::var(MAX_ELEMENTS_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_elements| Self { max_elements })
            .unwrap_or_default()
    }

    pub(crate) fn check(&self, what: &str, size: usize) -> Result<()> {
        if size > self.max_elements {
            return Err(Error::Resource {
                what: what.to_string(),
                limit: self.max_elements,
            });
        }
        Ok(())
    }
}

/// Breadth-first layers: layer `k` holds the elements of length `k` that pass
/// `keep`, assuming the kept set is closed under removing left descents.
pub(crate) fn layers_by_length(
    graph: &Arc<CoxeterGraph>,
    radius: usize,
    limits: Limits,
    what: &str,
    mut keep: impl FnMut(&GroupElement) -> bool,
) -> Result<Vec<Vec<GroupElement>>> {
    let mut layers = vec![vec![GroupElement::identity(graph)]];
    let mut total = 1usize;
    for _ in 0..radius {
        let prev = layers.last().expect("at least one layer");
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for w in prev {
            for s in 0..graph.rank() {
                if w.is_left_descent(s) {
                    continue;
                }
                let x = w.left_mul(s);
                if seen.contains(&x) || !keep(&x) {
                    continue;
                }
                seen.insert(x.clone());
                next.push(x);
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        limits.check(what, total)?;
        next.sort();
        layers.push(next);
    }
    Ok(layers)
}

/// All elements of length at most `radius`, ordered by length then canonical word.
pub fn enumerate_ball(graph: &Arc<CoxeterGraph>, radius: usize) -> Result<Vec<GroupElement>> {
    enumerate_ball_with(graph, radius, Limits::from_env())
}

pub fn enumerate_ball_with(
    graph: &Arc<CoxeterGraph>,
    radius: usize,
    limits: Limits,
) -> Result<Vec<GroupElement>> {
    let layers = layers_by_length(graph, radius, limits, "ball size", |_| true)?;
    Ok(layers.into_iter().flatten().collect())
}

/// Coefficients of the truncated length generating function `Σ q^{l(w)}`.
pub fn length_series(elements: &[GroupElement], max_len: usize) -> Vec<u64> {
    let mut series = vec![0u64; max_len + 1];
    for w in elements {
        if w.length() <= max_len {
            series[w.length()] += 1;
        }
    }
    series
}
