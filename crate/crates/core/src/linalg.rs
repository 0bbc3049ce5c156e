//! Exact rank over the fraction field `ℚ(q)`.
//!
//! Rows are sparse vectors of Laurent polynomials. Elimination is fraction
//! free: a pivot that is a monomial `c q^e` is a unit of `ℚ[q, q⁻¹]` and is
//! divided out exactly; any other pivot is used by cross-multiplication,
//! after which the row's common power of `q` is removed. The result is
//! checked against plain Gaussian elimination at several rational points.

use std::collections::{BTreeMap, HashMap};

use crate::combination::Combination;
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

pub type SparseRow<S> = BTreeMap<usize, LaurentPoly<S>>;

/// Points used by the evaluation cross-check.
pub fn check_points<S: Scalar>() -> Vec<S> {
    let r = |a: i64, b: i64| S::from_int(a) / S::from_int(b);
    vec![r(2, 1), r(3, 1), r(-5, 2), r(7, 3), r(11, 13)]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub point_ranks: Vec<usize>,
}

fn pivot_score<S: Scalar>(entry: &LaurentPoly<S>, row_len: usize) -> (bool, usize, usize) {
    let span = match (entry.min_exp(), entry.max_exp()) {
        (Some(a), Some(b)) => (b - a) as usize,
        _ => 0,
    };
    (entry.as_monomial().is_none(), span + entry.num_terms(), row_len)
}

fn strip_q_power<S: Scalar>(row: &mut SparseRow<S>) {
    let Some(min) = row.values().filter_map(|p| p.min_exp()).min() else {
        return;
    };
    if min != 0 {
        for p in row.values_mut() {
            *p = p.shift(-min);
        }
    }
}

/// Rank over `ℚ(q)` by fraction-free sparse elimination.
pub fn laurent_rank<S: Scalar>(rows: &[SparseRow<S>]) -> usize {
    let mut rows: Vec<SparseRow<S>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut rank = 0;
    while !rows.is_empty() {
        let (pi, pc) = {
            let mut best: Option<((bool, usize, usize), usize, usize)> = None;
            for (i, row) in rows.iter().enumerate() {
                for (&c, entry) in row {
                    let score = pivot_score(entry, row.len());
                    if best.as_ref().is_none_or(|(b, _, _)| score < *b) {
                        best = Some((score, i, c));
                    }
                }
            }
            let (_, i, c) = best.expect("rows are nonempty");
            (i, c)
        };
        let pivot_row = rows.swap_remove(pi);
        let pivot = pivot_row[&pc].clone();
        let unit = pivot.as_monomial().map(|(c, e)| (c.clone(), e));
        rank += 1;
        for row in rows.iter_mut() {
            let Some(a) = row.get(&pc).cloned() else {
                continue;
            };
            match &unit {
                Some((c, e)) => {
                    let factor = a.scale(&(S::one() / c.clone())).shift(-e);
                    for (&col, entry) in &pivot_row {
                        let v = row.entry(col).or_default();
                        *v -= &(entry * &factor);
                    }
                }
                None => {
                    for v in row.values_mut() {
                        *v = &*v * &pivot;
                    }
                    for (&col, entry) in &pivot_row {
                        let v = row.entry(col).or_default();
                        *v -= &(entry * &a);
                    }
                }
            }
            row.retain(|_, v| !v.is_zero());
            if unit.is_none() {
                strip_q_power(row);
            }
        }
        rows.retain(|r| !r.is_empty());
    }
    rank
}

/// Rank of a dense matrix over the scalar field.
pub fn scalar_rank<S: Scalar>(mut m: Vec<Vec<S>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pv = m[rank][c].clone();
        for r in 0..m.len() {
            if r == rank || m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone() / pv.clone();
            for k in c..cols {
                let delta = m[rank][k].clone() * f.clone();
                m[r][k] = m[r][k].clone() - delta;
            }
        }
        rank += 1;
    }
    rank
}

fn rank_at<S: Scalar>(rows: &[SparseRow<S>], ncols: usize, x: &S) -> usize {
    let dense = rows
        .iter()
        .map(|row| {
            let mut v = vec![S::zero(); ncols];
            for (&c, p) in row {
                v[c] = p.eval(x);
            }
            v
        })
        .collect();
    scalar_rank(dense)
}

/// Exact rank with the evaluation cross-check: each specialization can only
/// lose rank, and at least one of the points must attain it.
pub fn checked_rank<S: Scalar>(rows: &[SparseRow<S>]) -> Result<RankReport> {
    let rank = laurent_rank(rows);
    let ncols = rows
        .iter()
        .filter_map(|r| r.keys().next_back())
        .max()
        .map_or(0, |c| c + 1);
    let point_ranks: Vec<usize> = check_points::<S>()
        .iter()
        .map(|x| rank_at(rows, ncols, x))
        .collect();
    if point_ranks.iter().any(|&r| r > rank) || point_ranks.iter().all(|&r| r < rank) {
        return Err(Error::Invariant(format!(
            "rank {rank} over Q(q) disagrees with ranks {point_ranks:?} at sample points"
        )));
    }
    Ok(RankReport { rank, point_ranks })
}

/// Rows indexed by group elements, one per combination.
pub fn rows_of<'a, S: Scalar + 'a>(elems: impl IntoIterator<Item = &'a Combination<S>>) -> Vec<SparseRow<S>> {
    let mut index: HashMap<GroupElement, usize> = HashMap::new();
    elems
        .into_iter()
        .map(|c| {
            c.terms()
                .map(|(x, p)| {
                    let next = index.len();
                    (*index.entry(x.clone()).or_insert(next), p.clone())
                })
                .collect()
        })
        .collect()
}

/// Rank over `ℚ(q)` of a family of combinations over a common basis.
pub fn linear_rank<'a, S: Scalar + 'a>(elems: impl IntoIterator<Item = &'a Combination<S>>) -> Result<usize> {
    Ok(checked_rank(&rows_of(elems))?.rank)
}
