//! Bracket words on the line part `σ₀ σ₁ … σ_n` of a B or C̃ graph.
//!
//! * `[i, j] = σ_i σ_{i+1} … σ_j` for `0 ≤ i ≤ j ≤ n`;
//! * `[-i, j] = σ_i … σ₁ t σ₁ … σ_j` for `1 ≤ i ≤ j ≤ n`;
//! * `[n+1, n]` and `[0, -1]` are the empty word.

use crate::error::{input, Result};
use crate::graph::CoxeterGraph;
use crate::word::Word;

/// Bracket letters for a line ending at `n`, without reference to a graph.
pub fn bracket_letters(n: i64, i: i64, j: i64) -> Result<Vec<usize>> {
    if (i == n + 1 && j == n) || (i == 0 && j == -1) {
        return Ok(Vec::new());
    }
    if j > n || j < 0 {
        return input(format!("bracket [{i},{j}] out of range for line end {n}"));
    }
    if 0 <= i && i <= j {
        return Ok((i..=j).map(|k| k as usize).collect());
    }
    if i < 0 && -i <= j {
        let a = -i;
        let mut v: Vec<usize> = (1..=a).rev().map(|k| k as usize).collect();
        v.push(0);
        v.extend((1..=j).map(|k| k as usize));
        return Ok(v);
    }
    input(format!("bracket [{i},{j}] is not defined"))
}

fn line_end(graph: &CoxeterGraph) -> Result<i64> {
    match graph.line_end() {
        Some(n) => Ok(n as i64),
        None => input(format!("{graph} has no line part for bracket words")),
    }
}

pub fn bracket_word(graph: &CoxeterGraph, i: i64, j: i64) -> Result<Word> {
    Ok(Word::new(bracket_letters(line_end(graph)?, i, j)?))
}

/// `([i, j])⁻¹`, the reversed bracket.
pub fn inverse_bracket_word(graph: &CoxeterGraph, i: i64, j: i64) -> Result<Word> {
    Ok(bracket_word(graph, i, j)?.reversed())
}
