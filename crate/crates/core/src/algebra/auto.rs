//! The automorphism σ and the antiautomorphism τ.

use super::element::{Gen, HElement};
use crate::scalars::{xi, FieldElem};

/// Image of a generator under σ: T_i ↦ −T_{n−i} + ξ, C_j ↦ C_{n+1−j}, X_j ↦ X_{n+1−j}.
fn sigma_gen(h: &HElement, g: Gen) -> HElement {
    let (ctx, n) = (h.ctx(), h.n());
    match g {
        Gen::X(j) => HElement::gen(ctx, n, Gen::X(n + 1 - j)),
        Gen::Xinv(j) => HElement::gen(ctx, n, Gen::Xinv(n + 1 - j)),
        Gen::C(j) => HElement::gen(ctx, n, Gen::C(n + 1 - j)),
        Gen::T(i) => {
            let t = HElement::gen(ctx, n, Gen::T(n - i)).scale(&FieldElem::from_int(ctx, -1));
            t.add(&HElement::scalar(ctx, n, xi(ctx)))
        }
    }
}

/// Image of a generator under τ: T_i ↦ T_i + ξC_iC_{i+1}, C and X fixed.
fn tau_gen(h: &HElement, g: Gen) -> HElement {
    let (ctx, n) = (h.ctx(), h.n());
    match g {
        Gen::T(i) => {
            let cc = HElement::word(ctx, n, &[Gen::C(i), Gen::C(i + 1)]).scale(&xi(ctx));
            HElement::gen(ctx, n, Gen::T(i)).add(&cc)
        }
        other => HElement::gen(ctx, n, other),
    }
}

pub fn sigma(h: &HElement) -> HElement {
    let mut out = HElement::zero(h.ctx(), h.n());
    for (m, c) in h.terms() {
        let img = m
            .factors()
            .into_iter()
            .fold(HElement::one(h.ctx(), h.n()), |acc, g| acc.mul(&sigma_gen(h, g)));
        out.add_scaled(&img, c);
    }
    out
}

pub fn tau(h: &HElement) -> HElement {
    let mut out = HElement::zero(h.ctx(), h.n());
    for (m, c) in h.terms() {
        let img = m
            .factors()
            .into_iter()
            .fold(HElement::one(h.ctx(), h.n()), |acc, g| tau_gen(h, g).mul(&acc));
        out.add_scaled(&img, c);
    }
    out
}
