//! Shuffle product, deconcatenation and the letter-deletion operators e_i, e*_i, e_i^(r).

use super::wordsum::{Word, WordSum};
use crate::error::GrothendieckError;
use std::collections::BTreeMap;

fn shuffle_words(u: &[usize], v: &[usize], prefix: &mut Word, out: &mut WordSum) {
    match (u.split_first(), v.split_first()) {
        (None, _) | (_, None) => {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            out.add_term(w, 1);
        }
        (Some((&a, ur)), Some((&b, vr))) => {
            prefix.push(a);
            shuffle_words(ur, v, prefix, out);
            prefix.pop();
            prefix.push(b);
            shuffle_words(u, vr, prefix, out);
            prefix.pop();
        }
    }
}

/// Bilinear shuffle product: the character of an induced ⊛-product.
pub fn shuffle(u: &WordSum, v: &WordSum) -> WordSum {
    let mut out = WordSum::zero();
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let mut part = WordSum::zero();
            shuffle_words(a, b, &mut Vec::new(), &mut part);
            out = out.add(&part.scale(ca * cb));
        }
    }
    out
}

/// The (k, n−k) component of the deconcatenation coproduct.
pub fn deconcatenate(u: &WordSum, k: usize) -> BTreeMap<(Word, Word), i64> {
    let mut out = BTreeMap::new();
    for (w, c) in u.terms() {
        if w.len() >= k {
            let e = out.entry((w[..k].to_vec(), w[k..].to_vec())).or_insert(0);
            *e += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// e_i: delete a trailing letter i; words not ending in i are dropped.
pub fn e_drop(u: &WordSum, i: usize) -> WordSum {
    let mut out = WordSum::zero();
    for (w, c) in u.terms() {
        if w.last() == Some(&i) {
            out.add_term(w[..w.len() - 1].to_vec(), c);
        }
    }
    out
}

/// e*_i: delete a leading letter i.
pub fn e_star_drop(u: &WordSum, i: usize) -> WordSum {
    let mut out = WordSum::zero();
    for (w, c) in u.terms() {
        if w.first() == Some(&i) {
            out.add_term(w[1..].to_vec(), c);
        }
    }
    out
}

/// Apply e_{a_1} e_{a_2} ⋯ e_{a_k} (so e_{a_k} acts first).
pub fn e_word(u: &WordSum, ops: &[usize]) -> WordSum {
    ops.iter().rev().fold(u.clone(), |acc, &i| e_drop(&acc, i))
}

/// e_i^(r) = e_i^r / r!, failing when a coefficient is not divisible by r!.
pub fn divided(u: &WordSum, i: usize, r: usize) -> Result<WordSum, GrothendieckError> {
    let fact: i64 = (1..=r as i64).product();
    let raw = e_word(u, &vec![i; r]);
    let mut out = WordSum::zero();
    for (w, c) in raw.terms() {
        if c % fact != 0 {
            return Err(GrothendieckError::IntegralityViolation { word: w.clone(), coeff: c, divisor: fact });
        }
        out.add_term(w.clone(), c / fact);
    }
    Ok(out)
}
