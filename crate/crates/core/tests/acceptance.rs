//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are reported honestly but do not
//! change the exit status; any other failure exits with status 1.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use ctilde_core::brackets::bracket_letters;
use ctilde_core::fullcomm::{
    classify, element_is_fc, enumerate_fc, is_cyclically_fc, realize, rotate, CtildeNormalForm, PartitionClass,
};
use ctilde_core::hecke::{lemma_decompose, presentation_holds, r_embed_hecke};
use ctilde_core::laurent::LaurentPoly;
use ctilde_core::linalg::{checked_rank, rows_of};
use ctilde_core::oracle::{is_fc_by_closure, HeckeProjection};
use ctilde_core::tl::{braid_relator, TlAlgebra as Algebra};
use ctilde_core::towers::{check_diagram, inject, p_embed, Injection};
use ctilde_core::verify::{full_power_word, leading_shape_holds};
use ctilde_core::{
    enumerate_ball, CoxeterGraph, GroupAlgebraElement, GroupElement, Hecke, Rational, Result, Tl, TlAlgebra, Word,
};

const KNOWN_UNATTAINABLE: &[usize] = &[3, 9];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn el(g: &Arc<CoxeterGraph>, w: &str) -> GroupElement {
    GroupElement::parse(g, w).expect("valid word")
}

fn criterion_1() -> Result<Outcome> {
    let start = Instant::now();
    let g = CoxeterGraph::b(2)?;
    let got: BTreeSet<String> = enumerate_fc(&g, 10, None)?.iter().map(|(x, _)| x.format()).collect();
    let expected: BTreeSet<String> = ["", "t", "s1", "t s1", "s1 t", "t s1 t", "s1 t s1"]
        .iter()
        .map(|w| el(&g, w).format())
        .collect();
    let elapsed = start.elapsed();
    Ok(outcome(
        got == expected && elapsed < Duration::from_secs(1),
        format!("{} elements in {elapsed:?}", got.len()),
    ))
}

fn criterion_2() -> Result<Outcome> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut fc_total = 0;
    for rank in [3, 4] {
        let g = CoxeterGraph::ctilde(rank)?;
        let n = rank as i64 - 2;
        for x in enumerate_ball(&g, 12)? {
            let fc = element_is_fc(&x);
            if fc != is_fc_by_closure(&g, x.word())? {
                mismatches.push(format!("fc status of {}", x.format()));
            }
            if !fc {
                continue;
            }
            fc_total += 1;
            let form = match classify(&x) {
                Ok(f) => f,
                Err(e) => {
                    mismatches.push(format!("{}: {e}", x.format()));
                    continue;
                }
            };
            let back = GroupElement::evaluate(&g, &realize(&g, &form)?)?;
            let p_ok = match &form {
                CtildeNormalForm::SecondType { i_list, .. } => i_list.len() as i64 <= n + 1,
                _ => true,
            };
            if back != x || form.validate(n).is_err() || form.affine_length() != x.count(rank - 1) || !p_ok {
                mismatches.push(format!("{} -> {}", x.format(), form.to_json()));
            }
        }
    }
    let elapsed = start.elapsed();
    Ok(outcome(
        mismatches.is_empty() && elapsed < Duration::from_secs(300),
        format!("{fc_total} fc elements, {} mismatches{}, {elapsed:?}", mismatches.len(), eg(mismatches.first())),
    ))
}

/// The three C̃₂ families with the listed tails: second-type tails `b` and
/// the tails `f` after `e = σ₁tσ₁`.
fn family_words(b_tails: &[&str], f_after_long: &[&str]) -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    let cat = |parts: &[&str]| parts.iter().filter(|p| !p.is_empty()).cloned().collect::<Vec<_>>().join(" ");
    for h in 1..=3 {
        for c in ["", "u", "s1 u", "t s1 u"] {
            if c.is_empty() && h < 2 {
                continue;
            }
            for d in ["", "s1", "s1 t", "s1 t s1"] {
                out.push(("first", cat(&[c, &["s1 t s1 u"; 3][..h].join(" "), d])));
            }
        }
    }
    for k in 1..=3 {
        for a in ["", "u", "s1 u"] {
            if a.is_empty() && k < 2 {
                continue;
            }
            for b in b_tails {
                out.push(("second", cat(&[a, &["t s1 u"; 3][..k].join(" "), b])));
            }
        }
    }
    for f in f_after_long {
        out.push(("affine1", cat(&["s1 t s1 u", f])));
    }
    for e in ["", "s1", "t s1"] {
        for f in ["", "t", "t s1", "t s1 t", "s1", "s1 t", "s1 t s1"] {
            out.push(("affine1", cat(&[e, "u", f])));
        }
    }
    out
}

fn bad_family_members(g: &Arc<CoxeterGraph>, words: &[(&'static str, String)]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let mut seen = HashSet::new();
    for (family, w) in words {
        let word = Word::parse(g, w)?;
        let x = GroupElement::evaluate(g, &word)?;
        let ok = x.length() == word.len()
            && element_is_fc(&x)
            && classify(&x).is_ok_and(|f| {
                f.class_name() == *family
                    && realize(g, &f).is_ok_and(|r| GroupElement::evaluate(g, &r).is_ok_and(|y| y == x))
            });
        if !ok || !seen.insert(x) {
            bad.push(w.clone());
        }
    }
    Ok(bad)
}

/// The lists as printed, plus a run with the tails that actually occur
/// (`b ∈ {1, t, tσ₁, tσ₁t}`, `f ∈ {1, σ₁, σ₁t, σ₁tσ₁}`).
fn criterion_3() -> Result<Outcome> {
    let g = CoxeterGraph::ctilde(3)?;
    let printed = family_words(&["", "s1", "t", "s1 t", "t s1"], &["", "s1", "t s1", "s1 t s1"]);
    let bad = bad_family_members(&g, &printed)?;
    let corrected = family_words(&["", "t", "t s1", "t s1 t"], &["", "s1", "s1 t", "s1 t s1"]);
    let bad_corrected = bad_family_members(&g, &corrected)?;
    Ok(outcome(
        bad.is_empty(),
        format!(
            "{} listed members, {} not fc or misclassified{}; corrected tails: {} members, {} bad",
            printed.len(),
            bad.len(),
            eg(bad.first()),
            corrected.len(),
            bad_corrected.len()
        ),
    ))
}

fn criterion_4() -> Result<Outcome> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in [2usize, 3, 4] {
        let g = CoxeterGraph::ctilde(n + 1)?;
        for s in 0..=n {
            checked += 1;
            if !check_diagram(n, &GroupElement::generator(&g, s)?)? {
                bad.push(format!("n={n} s={s}"));
            }
        }
    }
    let g = CoxeterGraph::ctilde(3)?;
    for x in enumerate_ball(&g, 8)? {
        checked += 1;
        if !check_diagram(2, &x)? {
            bad.push(x.format());
        }
    }
    Ok(outcome(bad.is_empty(), format!("{checked} cases, {} bad{}", bad.len(), eg(bad.first()))))
}

fn criterion_5() -> Result<Outcome> {
    let g = CoxeterGraph::ctilde(3)?;
    let mut violations = Vec::new();
    let mut images: [HashMap<GroupElement, (GroupElement, PartitionClass)>; 2] = [HashMap::new(), HashMap::new()];
    let elements = enumerate_fc(&g, 10, None)?;
    for (x, form) in &elements {
        let class = form.partition_class();
        let big_l = form.affine_length();
        for (slot, which) in [Injection::I, Injection::J].into_iter().enumerate() {
            let (y, yf) = match inject(which, x, form) {
                Ok(r) => r,
                Err(e) => {
                    violations.push(format!("{which:?}({}): {e}", x.format()));
                    continue;
                }
            };
            let expected_len = match class {
                PartitionClass::W2 => x.length() + big_l,
                PartitionClass::W1 => x.length() + 2 * big_l,
                PartitionClass::B => x.length(),
            };
            let ok = element_is_fc(&y)
                && is_fc_by_closure(y.graph(), y.word())?
                && yf.partition_class() == class
                && y.count(3) == big_l
                && y.length() == expected_len;
            if !ok {
                violations.push(format!("{which:?}({}) = {}", x.format(), y.format()));
            }
            if let Some((other, _)) = images[slot].insert(y.clone(), (x.clone(), class)) {
                violations.push(format!("{which:?} not injective: {} and {}", other.format(), x.format()));
            }
        }
    }
    for (y, (x, class)) in &images[0] {
        if *class == PartitionClass::W2 && images[1].get(y).is_some_and(|(_, c)| *c == PartitionClass::W2) {
            violations.push(format!("I({}) lies in J(W2)", x.format()));
        }
    }
    Ok(outcome(
        violations.is_empty(),
        format!("{} elements, {} violations{}", elements.len(), violations.len(), eg(violations.first())),
    ))
}

fn criterion_6() -> Result<Outcome> {
    let g = CoxeterGraph::ctilde(3)?;
    let mut bad = Vec::new();
    for rank in [3, 4] {
        if !presentation_holds::<Rational>(&CoxeterGraph::ctilde(rank)?)? {
            bad.push(format!("presentation in rank {rank}"));
        }
    }
    let ball = enumerate_ball(&g, 6)?;
    let mut images = Vec::new();
    for x in &ball {
        if let Err(e) = lemma_decompose::<Rational>(x) {
            bad.push(format!("decomposition of {}: {e}", x.format()));
        }
        let image = r_embed_hecke(&Hecke::basis(x))?;
        if image.specialize_q1() != GroupAlgebraElement::basis(&p_embed(x)?) {
            bad.push(format!("specialization of {}", x.format()));
        }
        images.push(image.into_combination());
    }
    let report = checked_rank(&rows_of(images.iter()))?;
    if report.rank != images.len() {
        bad.push(format!("rank {} of {}", report.rank, images.len()));
    }
    Ok(outcome(bad.is_empty(), format!("{} elements, rank {}, {} bad{}", ball.len(), report.rank, bad.len(), eg(bad.first()))))
}

fn criterion_7() -> Result<Outcome> {
    type L = LaurentPoly<Rational>;
    let mut bad = Vec::new();
    for rank in [3, 4] {
        let g = CoxeterGraph::ctilde(rank)?;
        let alg = TlAlgebra::new(&g);
        for s in 0..rank {
            for t in s + 1..rank {
                if g.m(s, t) >= 3 && !braid_relator(&alg, s, t)?.is_zero() {
                    bad.push(format!("relator ({s},{t}) in rank {rank}"));
                }
            }
        }
    }

    let g = CoxeterGraph::ctilde(3)?;
    let up_graph = CoxeterGraph::ctilde(4)?;
    let alg: TlAlgebra = Algebra::new(&g);
    let up: TlAlgebra = Algebra::new(&up_graph);
    let (sigma, a) = (1, 2);
    let rs = up.r_embed(&alg.generator(sigma)?)?;
    let ra = up.r_embed(&alg.generator(a)?)?;
    // Z(x, y) = 1 + x + y + xy + yx + xyx + yxy + xyxy
    let words: [&[&Tl]; 8] = [&[], &[&rs], &[&ra], &[&rs, &ra], &[&ra, &rs], &[&rs, &ra, &rs], &[&ra, &rs, &ra], &[&rs, &ra, &rs, &ra]];
    let mut z = Tl::zero(&up_graph);
    for w in words {
        let mut acc = Tl::one(&up_graph);
        for f in w {
            acc = up.mul(&acc, f)?;
        }
        z = z.add(&acc)?;
    }
    if !z.is_zero() {
        bad.push("Z(R(h_σ), R(h_a)) ≠ 0".into());
    }
    let mut basic = ctilde_core::Combination::zero(&up_graph);
    basic.add_term(el(&up_graph, "s2 u s2"), L::p());
    basic.add_term(el(&up_graph, "s2 u"), L::p() - L::one());
    if ra != Tl::from_combination(basic)? {
        bad.push("R(h_a) expansion".into());
    }

    let mut proj = HeckeProjection::<Rational>::new(&g);
    let mut products = 0;
    for (x, _) in enumerate_fc(&g, 8, None)? {
        for s in 0..3 {
            products += 1;
            let got = alg.left_mul_gen(s, &Tl::basis(&x)?)?;
            if proj.project(&Hecke::basis(&x).left_mul_gen(s))? != got {
                bad.push(format!("T_{s} T_{}", x.format()));
            }
        }
    }

    let mut shapes = 0;
    for (x, form) in enumerate_fc(&g, 10, Some(3))? {
        shapes += 1;
        let image = up.r_embed(&Tl::basis(&x)?)?;
        if !leading_shape_holds(&x, &image)? {
            bad.push(format!("leading terms of R(T_{}) ({})", x.format(), form.class_name()));
        }
    }
    Ok(outcome(
        bad.is_empty(),
        format!("{products} products, {shapes} leading-term checks, {} bad{}", bad.len(), eg(bad.first())),
    ))
}

fn criterion_8() -> Result<Outcome> {
    let start = Instant::now();
    let g = CoxeterGraph::ctilde(3)?;
    let up: TlAlgebra = Algebra::new(&CoxeterGraph::ctilde(4)?);
    let elements = enumerate_fc(&g, 8, None)?;
    let images = elements
        .iter()
        .map(|(x, _)| up.r_embed(&Tl::basis(x)?).map(Tl::into_combination))
        .collect::<Result<Vec<_>>>()?;
    let report = checked_rank(&rows_of(images.iter()))?;
    let elapsed = start.elapsed();
    Ok(outcome(
        report.rank == images.len() && elapsed < Duration::from_secs(600),
        format!("rank {} of {} images, point ranks {:?}, {elapsed:?}", report.rank, images.len(), report.point_ranks),
    ))
}

/// The statement as written: cyclically FC iff (0 ≤ i ≤ n+1 and f = −(i−1))
/// or (−n ≤ i < 0 and f = −(i+1)), after a cyclic shift of n−(i+1) (first
/// case) or n−(i−1) (second case) letters.
fn criterion_9() -> Result<Outcome> {
    let mut characterization = Vec::new();
    let mut shifts = Vec::new();
    let mut checked = 0;
    for rank in [3usize, 4] {
        let g = CoxeterGraph::ctilde(rank)?;
        let n = rank as i64 - 2;
        for (x, form) in enumerate_fc(&g, 12, None)? {
            let CtildeNormalForm::FirstType { i, k, f } = form else { continue };
            checked += 1;
            let word = realize(&g, &form)?;
            let observed = is_cyclically_fc(&g, &word)?;
            let stated = if i >= 0 { f == -(i - 1) } else { f == -(i + 1) };
            if observed != stated {
                characterization.push(format!("{} (i={i}, f={f}, cyclically fc: {observed})", x.format()));
            }
            if stated {
                let shift = if i >= 0 { n - (i + 1) } else { n - (i - 1) };
                let target = full_power_word(n, k)?;
                let len = word.len() as i64;
                let lands = shift >= 0
                    && (rotate(&word, shift as usize) == target || rotate(&word, (len - shift % len) as usize) == target);
                if !lands {
                    let actual = bracket_letters(n, i, n)?.len() + 1;
                    shifts.push(format!("{} shift {shift}, needed {actual}", x.format()));
                }
            }
        }
    }
    Ok(outcome(
        characterization.is_empty() && shifts.is_empty(),
        format!(
            "{checked} first-type elements; characterization mismatches {}{}; shift mismatches {}{}",
            characterization.len(),
            eg(characterization.first()),
            shifts.len(),
            eg(shifts.first())
        ),
    ))
}

fn main() {
    let criteria: [(usize, &str, fn() -> Result<Outcome>); 9] = [
        (1, "B2 base case", criterion_1),
        (2, "normal form certification", criterion_2),
        (3, "C̃2 example families", criterion_3),
        (4, "tower diagram", criterion_4),
        (5, "injections I and J", criterion_5),
        (6, "Hecke certification", criterion_6),
        (7, "Temperley-Lieb certification", criterion_7),
        (8, "faithfulness of R at desk scale", criterion_8),
        (9, "cyclic characterization of first type", criterion_9),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let result = run().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        let status = if result.pass { "PASS" } else { "FAIL" };
        let known = KNOWN_UNATTAINABLE.contains(&id);
        let note = if known && !result.pass { " [known, see README]" } else { "" };
        println!(
            "criterion {id}: {status}{note} - {name} - {} ({:.1}s)",
            result.detail,
            start.elapsed().as_secs_f64()
        );
        if !result.pass && !known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}

fn eg<T: std::fmt::Display>(first: Option<&T>) -> String {
    first.map(|x| format!(", e.g. {x}")).unwrap_or_default()
}
