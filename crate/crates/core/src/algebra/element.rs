//! PBW normal form X^α C^β T_w and multiplication by generator folding.

use super::perm::{self, Perm};
use crate::scalars::{xi, FieldCtx, FieldElem};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Generators of H_n, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X(usize),
    Xinv(usize),
    C(usize),
    T(usize),
}

impl Gen {
    pub fn is_odd(&self) -> bool {
        matches!(self, Gen::C(_))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::X(k) => write!(f, "X{k}"),
            Gen::Xinv(k) => write!(f, "X{k}^-1"),
            Gen::C(k) => write!(f, "C{k}"),
            Gen::T(k) => write!(f, "T{k}"),
        }
    }
}

/// X^α C^β T_w with β a bitmask (bit k−1 for C_k) and w in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub alpha: Vec<i32>,
    pub beta: u32,
    pub w: Perm,
}

impl Monomial {
    pub fn identity(n: usize) -> Self {
        Monomial { alpha: vec![0; n], beta: 0, w: perm::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn parity(&self) -> u32 {
        self.beta.count_ones() % 2
    }

    pub fn t_length(&self) -> usize {
        perm::length(&self.w)
    }

    /// Generator factorization in product order: X steps, C's increasing, then T's.
    pub fn factors(&self) -> Vec<Gen> {
        let mut out = Vec::new();
        for (k, &a) in self.alpha.iter().enumerate() {
            let g = if a > 0 { Gen::X(k + 1) } else { Gen::Xinv(k + 1) };
            out.extend(std::iter::repeat_n(g, a.unsigned_abs() as usize));
        }
        for k in 0..self.n() {
            if self.beta & (1 << k) != 0 {
                out.push(Gen::C(k + 1));
            }
        }
        out.extend(perm::reduced_word(&self.w).into_iter().map(Gen::T));
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &a) in self.alpha.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(format!("X{}", k + 1)),
                _ => parts.push(format!("X{}^{}", k + 1, a)),
            }
        }
        for k in 0..self.n() {
            if self.beta & (1 << k) != 0 {
                parts.push(format!("C{}", k + 1));
            }
        }
        for i in perm::reduced_word(&self.w) {
            parts.push(format!("T{i}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A finite linear combination of normal monomials.
#[derive(Clone, PartialEq)]
pub struct HElement {
    ctx: Arc<FieldCtx>,
    n: usize,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl HElement {
    pub fn zero(ctx: &Arc<FieldCtx>, n: usize) -> Self {
        HElement { ctx: ctx.clone(), n, terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Arc<FieldCtx>, n: usize) -> Self {
        Self::monomial(ctx, Monomial::identity(n), FieldElem::one(ctx))
    }

    pub fn monomial(ctx: &Arc<FieldCtx>, m: Monomial, c: FieldElem) -> Self {
        let mut e = Self::zero(ctx, m.n());
        e.add_term(m, c);
        e
    }

    pub fn scalar(ctx: &Arc<FieldCtx>, n: usize, c: FieldElem) -> Self {
        Self::monomial(ctx, Monomial::identity(n), c)
    }

    pub fn gen(ctx: &Arc<FieldCtx>, n: usize, g: Gen) -> Self {
        Self::one(ctx, n).left_gen(g)
    }

    /// Product of generators in the given order.
    pub fn word(ctx: &Arc<FieldCtx>, n: usize, gens: &[Gen]) -> Self {
        gens.iter().rev().fold(Self::one(ctx, n), |acc, &g| acc.left_gen(g))
    }

    pub fn t_word(ctx: &Arc<FieldCtx>, n: usize, w: &Perm) -> Self {
        let mut m = Monomial::identity(n);
        m.w = w.clone();
        Self::monomial(ctx, m, FieldElem::one(ctx))
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(|| FieldElem::zero(&self.ctx))
    }

    /// Parity if all terms share one.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    pub fn add_term(&mut self, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &HElement, c: &FieldElem) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), c * v);
        }
    }

    pub fn add(&self, other: &HElement) -> HElement {
        let mut out = self.clone();
        out.add_scaled(other, &FieldElem::one(&self.ctx));
        out
    }

    pub fn sub(&self, other: &HElement) -> HElement {
        let mut out = self.clone();
        out.add_scaled(other, &FieldElem::from_int(&self.ctx, -1));
        out
    }

    pub fn scale(&self, c: &FieldElem) -> HElement {
        let mut out = HElement::zero(&self.ctx, self.n);
        out.add_scaled(self, c);
        out
    }

    /// Normal-form product self·other.
    pub fn mul(&self, other: &HElement) -> HElement {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = HElement::zero(&self.ctx, self.n);
        for (m, c) in &self.terms {
            let mut acc = other.clone();
            for g in m.factors().into_iter().rev() {
                acc = acc.left_gen(g);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// g·self for a generator g.
    pub fn left_gen(&self, g: Gen) -> HElement {
        let mut out = HElement::zero(&self.ctx, self.n);
        for (m, c) in &self.terms {
            let prod = left_gen_monomial(&self.ctx, g, m);
            out.add_scaled(&prod, c);
        }
        out
    }
}

fn mono_elem(ctx: &Arc<FieldCtx>, m: Monomial) -> HElement {
    HElement::monomial(ctx, m, FieldElem::one(ctx))
}

/// g · X^α C^β T_w in normal form.
fn left_gen_monomial(ctx: &Arc<FieldCtx>, g: Gen, m: &Monomial) -> HElement {
    match g {
        Gen::X(k) => {
            let mut m = m.clone();
            m.alpha[k - 1] += 1;
            mono_elem(ctx, m)
        }
        Gen::Xinv(k) => {
            let mut m = m.clone();
            m.alpha[k - 1] -= 1;
            mono_elem(ctx, m)
        }
        Gen::C(k) => {
            let mut m = m.clone();
            // C_k X_k^a = X_k^{-a} C_k
            m.alpha[k - 1] = -m.alpha[k - 1];
            let below = (m.beta & ((1u32 << (k - 1)) - 1)).count_ones();
            m.beta ^= 1 << (k - 1);
            let sign = if below % 2 == 0 { 1 } else { -1 };
            HElement::monomial(ctx, m, FieldElem::from_int(ctx, sign))
        }
        Gen::T(i) => t_times_monomial(ctx, i, m),
    }
}

/// T_i · X^α C^β T_w.
fn t_times_monomial(ctx: &Arc<FieldCtx>, i: usize, m: &Monomial) -> HElement {
    let n = m.n();
    let (a, b) = (m.alpha[i - 1], m.alpha[i]);
    if a == 0 && b == 0 {
        // X^α commutes with T_i; move T_i past the C's
        let mut rest = m.clone();
        let outer = std::mem::replace(&mut rest.alpha, vec![0; n]);
        let inner = t_times_cliff(ctx, i, &rest);
        return shift_x(&inner, &outer);
    }
    let xi = xi(ctx);
    let neg_xi = -&xi;
    let cc = [Gen::C(i), Gen::C(i + 1)];
    let mut peeled = m.clone();
    let mut out = HElement::zero(ctx, n);
    let word = |gens: &[Gen], base: &Monomial| -> HElement {
        gens.iter().rev().fold(mono_elem(ctx, base.clone()), |acc, &g| acc.left_gen(g))
    };
    if a > 0 {
        // T_i X_i = X_{i+1} T_i − ξ X_{i+1} − ξ C_i C_{i+1} X_i
        peeled.alpha[i - 1] -= 1;
        let t = t_times_monomial(ctx, i, &peeled);
        out.add_scaled(&t.left_gen(Gen::X(i + 1)), &FieldElem::one(ctx));
        out.add_scaled(&word(&[Gen::X(i + 1)], &peeled), &neg_xi);
        out.add_scaled(&word(&[cc[0], cc[1], Gen::X(i)], &peeled), &neg_xi);
    } else if a < 0 {
        // T_i X_i⁻¹ = X_{i+1}⁻¹ T_i + ξ X_i⁻¹ + ξ X_{i+1}⁻¹ C_i C_{i+1}
        peeled.alpha[i - 1] += 1;
        let t = t_times_monomial(ctx, i, &peeled);
        out.add_scaled(&t.left_gen(Gen::Xinv(i + 1)), &FieldElem::one(ctx));
        out.add_scaled(&word(&[Gen::Xinv(i)], &peeled), &xi);
        out.add_scaled(&word(&[Gen::Xinv(i + 1), cc[0], cc[1]], &peeled), &xi);
    } else if b > 0 {
        // T_i X_{i+1} = X_i T_i + ξ X_{i+1} − ξ C_i C_{i+1} X_{i+1}
        peeled.alpha[i] -= 1;
        let t = t_times_monomial(ctx, i, &peeled);
        out.add_scaled(&t.left_gen(Gen::X(i)), &FieldElem::one(ctx));
        out.add_scaled(&word(&[Gen::X(i + 1)], &peeled), &xi);
        out.add_scaled(&word(&[cc[0], cc[1], Gen::X(i + 1)], &peeled), &neg_xi);
    } else {
        // T_i X_{i+1}⁻¹ = X_i⁻¹ T_i − ξ X_i⁻¹ + ξ X_i⁻¹ C_i C_{i+1}
        peeled.alpha[i] += 1;
        let t = t_times_monomial(ctx, i, &peeled);
        out.add_scaled(&t.left_gen(Gen::Xinv(i)), &FieldElem::one(ctx));
        out.add_scaled(&word(&[Gen::Xinv(i)], &peeled), &neg_xi);
        out.add_scaled(&word(&[Gen::Xinv(i), cc[0], cc[1]], &peeled), &xi);
    }
    out
}

/// Multiply every term on the left by X^shift (X's commute with each other).
fn shift_x(e: &HElement, shift: &[i32]) -> HElement {
    if shift.iter().all(|&s| s == 0) {
        return e.clone();
    }
    let mut out = HElement::zero(e.ctx(), e.n());
    for (m, c) in e.terms() {
        let mut m = m.clone();
        for (a, s) in m.alpha.iter_mut().zip(shift) {
            *a += s;
        }
        out.add_term(m, c.clone());
    }
    out
}

/// T_i · C^β T_w (no X part).
fn t_times_cliff(ctx: &Arc<FieldCtx>, i: usize, m: &Monomial) -> HElement {
    let n = m.n();
    let Some(j0) = (0..n).find(|&k| m.beta & (1 << k) != 0) else {
        return t_times_t(ctx, i, &m.w);
    };
    let j = j0 + 1;
    let mut rest = m.clone();
    rest.beta &= !(1 << j0);
    let t_rest = t_times_cliff(ctx, i, &rest);
    if j != i && j != i + 1 {
        t_rest.left_gen(Gen::C(j))
    } else if j == i {
        // T_i C_i = C_{i+1} T_i
        t_rest.left_gen(Gen::C(i + 1))
    } else {
        // T_i C_{i+1} = C_i T_i − ξ C_i + ξ C_{i+1}
        let xi = xi(ctx);
        let rest_e = mono_elem(ctx, rest);
        let mut out = t_rest.left_gen(Gen::C(i));
        out.add_scaled(&rest_e.left_gen(Gen::C(i)), &-&xi);
        out.add_scaled(&rest_e.left_gen(Gen::C(i + 1)), &xi);
        out
    }
}

/// T_i · T_w.
fn t_times_t(ctx: &Arc<FieldCtx>, i: usize, w: &Perm) -> HElement {
    let n = w.len();
    let sw = perm::left_mul_simple(i, w);
    let mut m = Monomial::identity(n);
    m.w = sw;
    let mut out = mono_elem(ctx, m);
    if !perm::left_ascent(i, w) {
        let mut mw = Monomial::identity(n);
        mw.w = w.clone();
        out.add_term(mw, xi(ctx));
    }
    out
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HElement[n={}]({})", self.n, self)
    }
}
