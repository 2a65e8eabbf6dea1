//! Decomposition of H_n as a right H_μ-module: h = Σ_d T_d h_d over minimal coset representatives.

use super::element::{HElement, Monomial};
use super::perm::{self, Perm};
use std::collections::BTreeMap;

/// h = Σ_d T_d·h_d with each h_d in the parabolic subalgebra H_μ.
pub fn coset_decompose(h: &HElement, mu: &[usize]) -> BTreeMap<Perm, HElement> {
    let n = h.n();
    assert_eq!(mu.iter().sum::<usize>(), n, "composition does not match rank");
    let ctx = h.ctx().clone();
    let mut rest = h.clone();
    let mut out: BTreeMap<Perm, HElement> = BTreeMap::new();
    while let Some((m, c)) = rest
        .terms()
        .iter()
        .max_by(|(a, _), (b, _)| a.t_length().cmp(&b.t_length()).then_with(|| a.cmp(b)))
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        let d = perm::min_coset_rep(&m.w, mu);
        let u = perm::compose(&perm::inverse(&d), &m.w);
        // X^α C^β T_d ≈ T_d X^{α'} C^{β'} with α'_k = α_{d(k)}
        let mut g = Monomial::identity(n);
        for k in 0..n {
            let dk = d[k] as usize;
            g.alpha[k] = m.alpha[dk];
            if m.beta & (1 << dk) != 0 {
                g.beta |= 1 << k;
            }
        }
        g.w = u;
        let g_elem = HElement::monomial(&ctx, g, crate::scalars::FieldElem::one(&ctx));
        let p = HElement::t_word(&ctx, n, &d).mul(&g_elem);
        let kappa = p.coeff(&m);
        let factor = &c * &kappa.inv().expect("leading coefficient is a unit");
        rest.add_scaled(&p, &-&factor);
        out.entry(d)
            .or_insert_with(|| HElement::zero(&ctx, n))
            .add_scaled(&g_elem, &factor);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Whether every term lies in H_μ.
pub fn in_parabolic(h: &HElement, mu: &[usize]) -> bool {
    h.terms().keys().all(|m| perm::in_young(&m.w, mu))
}
