//! B(∞) as finitely supported paths in ⋯ ⊗ B_{ι_3} ⊗ B_{ι_2} ⊗ B_{ι_1}, with ι cyclic from a
//! chosen start color. ε*_i comes from re-expressing an element in the realization that
//! starts at i; B(λ) is the subset cut out by ε*_i ≤ λ(h_i).

mod graph;
mod checks;

pub use checks::{check_binfty, check_blambda, CrystalReport, NamedCheck};
pub use graph::{
    generate_binfty, generate_binfty_from, generate_blambda, generate_blambda_cut, same_graph, CrystalGraph, GraphEdge,
    GraphNode, StarData,
};

use crate::cartan::{CartanData, Weight};
use crate::crystal::{Crystal, Ext};
use crate::error::RealizationError;
use std::fmt;

#[cfg(test)]
mod tests;

/// An element ⋯ ⊗ b_{ι_2}(−a_2) ⊗ b_{ι_1}(−a_1) with ι_k = (iota_start + k − 1) mod l;
/// coordinates past the end of `a` are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathElem {
    pub iota_start: usize,
    pub a: Vec<u32>,
}

impl PathElem {
    pub fn vacuum(iota_start: usize) -> Self {
        PathElem { iota_start, a: Vec::new() }
    }

    pub fn is_vacuum(&self) -> bool {
        self.a.is_empty()
    }

    /// Color of coordinate k (1-based).
    pub fn color(&self, l: usize, k: usize) -> usize {
        (self.iota_start + k - 1) % l
    }

    /// a_k, zero past the support.
    pub fn coord(&self, k: usize) -> u32 {
        self.a.get(k - 1).copied().unwrap_or(0)
    }

    fn trimmed(mut self) -> Self {
        while self.a.last() == Some(&0) {
            self.a.pop();
        }
        self
    }

    /// Drop the first coordinate: the remaining path lives in the realization starting one
    /// color later.
    pub fn strip_first(&self, l: usize) -> (PathElem, u32) {
        let rest = PathElem { iota_start: (self.iota_start + 1) % l, a: self.a.iter().skip(1).copied().collect() };
        (rest.trimmed(), self.coord(1))
    }
}

impl fmt::Display for PathElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "<{}|{}>", self.iota_start, coords.join(","))
    }
}

/// Number of coordinates that covers the support plus one zero factor of every color.
fn span(cd: &CartanData, p: &PathElem) -> usize {
    p.a.len() + cd.l
}

/// ε_i and φ_i of coordinate k, and ⟨h_i, wt⟩ of that factor.
fn factor(cd: &CartanData, p: &PathElem, i: usize, k: usize) -> (Ext, Ext, i64) {
    let c = p.color(cd.l, k);
    let a = p.coord(k) as i64;
    let shift = -a * cd.a[i][c];
    if c == i {
        (Ext::Fin(a), Ext::Fin(-a), shift)
    } else {
        (Ext::NegInf, Ext::NegInf, shift)
    }
}

/// ε_i of the right segments F_k ⊗ ⋯ ⊗ F_1 for k = 0..=K, from the tensor rule
/// ε(F ⊗ S) = max(ε(F), ε(S) − ⟨h_i, wt F⟩).
fn suffix_eps(cd: &CartanData, p: &PathElem, i: usize) -> Vec<Ext> {
    let n = span(cd, p);
    let mut s = Vec::with_capacity(n + 1);
    s.push(Ext::NegInf);
    for k in 1..=n {
        let (eps, _, shift) = factor(cd, p, i, k);
        s.push(eps.max(s[k - 1] - shift));
    }
    s
}

pub fn path_wt(cd: &CartanData, p: &PathElem) -> Weight {
    let mut w = Weight::zero(cd.l);
    for (k, &a) in p.a.iter().enumerate() {
        w.alpha[p.color(cd.l, k + 1)] -= a as i64;
    }
    w
}

pub fn path_eps(cd: &CartanData, p: &PathElem, i: usize) -> i64 {
    let s = suffix_eps(cd, p, i);
    s.last().and_then(|e| e.finite()).expect("a zero i-factor bounds ε_i below by 0")
}

pub fn path_phi(cd: &CartanData, p: &PathElem, i: usize) -> i64 {
    path_eps(cd, p, i) + cd.pairing(i, &path_wt(cd, p))
}

/// f̃_i: act on the leftmost factor F_k with φ_i(F_k) > ε_i(F_{k−1} ⊗ ⋯ ⊗ F_1).
pub fn path_f(cd: &CartanData, p: &PathElem, i: usize) -> PathElem {
    let s = suffix_eps(cd, p, i);
    for k in (1..s.len()).rev() {
        let (_, phi, _) = factor(cd, p, i, k);
        if phi > s[k - 1] {
            let mut a = p.a.clone();
            a.resize(a.len().max(k), 0);
            a[k - 1] += 1;
            return PathElem { iota_start: p.iota_start, a }.trimmed();
        }
    }
    unreachable!("the rightmost i-colored factor always accepts f̃_i")
}

/// ẽ_i: act on the leftmost factor with φ_i(F_k) ≥ ε_i of its right segment; 0 when that
/// factor is b_i(0) (ε_i(p) = 0).
pub fn path_e(cd: &CartanData, p: &PathElem, i: usize) -> Option<PathElem> {
    let s = suffix_eps(cd, p, i);
    for k in (1..s.len()).rev() {
        let (_, phi, _) = factor(cd, p, i, k);
        if phi >= s[k - 1] {
            if p.color(cd.l, k) != i || p.coord(k) == 0 {
                return None;
            }
            let mut a = p.a.clone();
            a[k - 1] -= 1;
            return Some(PathElem { iota_start: p.iota_start, a }.trimmed());
        }
    }
    None
}

/// Apply f̃_{w_1}, then f̃_{w_2}, … to the vacuum of the realization starting at `start`.
pub fn replay(cd: &CartanData, start: usize, word: &[usize]) -> PathElem {
    word.iter().fold(PathElem::vacuum(start), |p, &i| path_f(cd, &p, i))
}

/// An f̃-word reaching p, found by descending with the smallest i such that ε_i > 0.
pub fn descent_word(cd: &CartanData, p: &PathElem) -> Result<Vec<usize>, RealizationError> {
    let mut word = Vec::new();
    let mut x = p.clone();
    while !x.is_vacuum() {
        let i = (0..cd.l)
            .find(|&i| path_eps(cd, &x, i) > 0)
            .ok_or_else(|| RealizationError::Unknown(format!("{x} has no raising operator")))?;
        x = path_e(cd, &x, i).expect("ε_i > 0");
        word.push(i);
    }
    word.reverse();
    Ok(word)
}

/// ε*_i(p): the first coordinate of p re-expressed in the realization starting at i, via any
/// f̃-word reaching p.
pub fn eps_star_of(cd: &CartanData, p: &PathElem, i: usize) -> Result<u32, RealizationError> {
    let word = descent_word(cd, p)?;
    Ok(replay(cd, i, &word).coord(1))
}

/// The realization starting at `start`, as a crystal on `PathElem`s.
#[derive(Clone, Debug)]
pub struct PathCrystal {
    pub cd: CartanData,
}

impl PathCrystal {
    pub fn new(cd: &CartanData) -> Self {
        PathCrystal { cd: cd.clone() }
    }
}

impl Crystal for PathCrystal {
    type Elem = PathElem;

    fn cartan(&self) -> &CartanData {
        &self.cd
    }

    fn wt(&self, p: &PathElem) -> Weight {
        path_wt(&self.cd, p)
    }

    fn eps(&self, p: &PathElem, i: usize) -> Ext {
        Ext::Fin(path_eps(&self.cd, p, i))
    }

    fn phi(&self, p: &PathElem, i: usize) -> Ext {
        Ext::Fin(path_phi(&self.cd, p, i))
    }

    fn e(&self, p: &PathElem, i: usize) -> Option<PathElem> {
        path_e(&self.cd, p, i)
    }

    fn f(&self, p: &PathElem, i: usize) -> Option<PathElem> {
        Some(path_f(&self.cd, p, i))
    }
}

/// B(λ) inside B(∞) ⊗ T_λ: members satisfy ε*_i ≤ λ(h_i); f̃^λ is f̃ followed by the
/// membership test.
#[derive(Clone, Debug)]
pub struct BLambda {
    pub cd: CartanData,
    pub lambda: Weight,
}

impl BLambda {
    pub fn new(cd: &CartanData, lambda: Weight) -> Result<Self, RealizationError> {
        if lambda.lam.len() != cd.l || !lambda.is_dominant_lambda() {
            return Err(RealizationError::NotDominant);
        }
        Ok(BLambda { cd: cd.clone(), lambda })
    }

    pub fn member(&self, p: &PathElem) -> Result<bool, RealizationError> {
        let word = descent_word(&self.cd, p)?;
        Ok((0..self.cd.l).all(|i| replay(&self.cd, i, &word).coord(1) as i64 <= self.cd.pairing(i, &self.lambda)))
    }

    /// φ^λ_i from ε_i + ⟨h_i, λ + wt⟩, cross-checked against the length of the f̃^λ_i-string.
    pub fn phi_checked(&self, p: &PathElem, i: usize) -> Result<i64, RealizationError> {
        let formula = self.phi(p, i).finite().expect("finite");
        let measured = self.string_length(p, i, formula.max(0) as usize + 1);
        if measured != formula {
            return Err(RealizationError::PhiMismatch { path: p.to_string(), i, formula, measured });
        }
        Ok(formula)
    }

    /// max{k ≤ cap : (f̃^λ_i)^k p ≠ 0}.
    pub fn string_length(&self, p: &PathElem, i: usize, cap: usize) -> i64 {
        let mut x = p.clone();
        let mut k = 0;
        while k < cap {
            match self.f(&x, i) {
                Some(y) => {
                    x = y;
                    k += 1;
                }
                None => break,
            }
        }
        k as i64
    }
}

impl Crystal for BLambda {
    type Elem = PathElem;

    fn cartan(&self) -> &CartanData {
        &self.cd
    }

    fn wt(&self, p: &PathElem) -> Weight {
        path_wt(&self.cd, p).add(&self.lambda)
    }

    fn eps(&self, p: &PathElem, i: usize) -> Ext {
        Ext::Fin(path_eps(&self.cd, p, i))
    }

    fn phi(&self, p: &PathElem, i: usize) -> Ext {
        Ext::Fin(path_eps(&self.cd, p, i) + self.cd.pairing(i, &self.wt(p)))
    }

    fn e(&self, p: &PathElem, i: usize) -> Option<PathElem> {
        path_e(&self.cd, p, i)
    }

    fn f(&self, p: &PathElem, i: usize) -> Option<PathElem> {
        let q = path_f(&self.cd, p, i);
        self.member(&q).expect("paths descend to the vacuum").then_some(q)
    }
}
