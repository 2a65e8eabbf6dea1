//! Outer tensor products, the ⊛ construction and induction from parabolics.

use super::module::{generators, Evaluator, MatrixSupermodule};
use crate::algebra::{coset_decompose, perm, Gen, HElement};
use crate::error::SupermoduleError;
use crate::linalg::{TMat, TVec};
use crate::scalars::sqrt_minus_one;
use std::collections::BTreeMap;

/// Even-first reordering of a list of parities: returns (perm, number of even vectors).
fn even_first(parities: &[u32]) -> (Vec<usize>, usize) {
    let mut perm = vec![0; parities.len()];
    let even = parities.iter().filter(|&&p| p == 0).count();
    let (mut e, mut o) = (0, even);
    for (k, &p) in parities.iter().enumerate() {
        if p == 0 {
            perm[k] = e;
            e += 1;
        } else {
            perm[k] = o;
            o += 1;
        }
    }
    (perm, even)
}

/// V ⊗ W as a module over H_{μ_V, μ_W}, with (a⊗b)(v⊗w) = (−1)^{|b||v|} av ⊗ bw.
pub fn tensor(v: &MatrixSupermodule, w: &MatrixSupermodule) -> Result<MatrixSupermodule, SupermoduleError> {
    if v.tower() != w.tower() {
        return Err(SupermoduleError::TowerMismatch);
    }
    let t = v.tower();
    let (iv, iw) = (TMat::identity(t, v.dim()), TMat::identity(t, w.dim()));
    let pv = v.parity_matrix();
    let shift = v.n();
    let mut mats = BTreeMap::new();
    for g in v.generators() {
        mats.insert(g, v.mat(g).kron(&iw));
    }
    for g in w.generators() {
        let left = if g.is_odd() { &pv } else { &iv };
        let shifted = match g {
            Gen::X(k) => Gen::X(k + shift),
            Gen::Xinv(k) => Gen::Xinv(k + shift),
            Gen::C(k) => Gen::C(k + shift),
            Gen::T(k) => Gen::T(k + shift),
        };
        mats.insert(shifted, left.kron(w.mat(g)));
    }
    let mu: Vec<usize> = v.mu().iter().chain(w.mu()).copied().collect();
    let mut labels = Vec::new();
    let mut parities = Vec::new();
    for a in 0..v.dim() {
        for b in 0..w.dim() {
            labels.push(v.labels()[a].iter().chain(&w.labels()[b]).copied().collect());
            parities.push((v.parity(a) + w.parity(b)) % 2);
        }
    }
    let raw = MatrixSupermodule::new(format!("{}(x){}", v.label, w.label), t, &mu, v.dim() * w.dim(), 0, mats)?;
    let (perm, even) = even_first(&parities);
    Ok(raw.with_labels(labels).permuted(&perm, even))
}

/// Check that θ is an odd involution super-commuting with the action.
fn check_involution(m: &MatrixSupermodule, theta: &TMat) -> Result<(), SupermoduleError> {
    let t = m.tower();
    let d = m.dim();
    if theta.mul(theta) != TMat::identity(t, d) {
        return Err(SupermoduleError::NotInvolution(format!("theta^2 != 1 on {}", m.label)));
    }
    for r in 0..d {
        for c in 0..d {
            if m.parity(r) == m.parity(c) && !theta.data[r][c].is_zero() {
                return Err(SupermoduleError::NotInvolution(format!("theta is not odd on {}", m.label)));
            }
        }
    }
    for g in m.generators() {
        let (a, b) = (theta.mul(m.mat(g)), m.mat(g).mul(theta));
        let ok = if g.is_odd() { a.add(&b).is_zero() } else { a == b };
        if !ok {
            return Err(SupermoduleError::NotInvolution(format!("theta does not super-commute with {g} on {}", m.label)));
        }
    }
    Ok(())
}

/// (V, θ_V) ⊛ (W, θ_W). `None` stands for the identity; when both involutions are given
/// the result is the +√−1 eigenspace of v⊗w ↦ (−1)^{|v|} θ_V v ⊗ θ_W w.
pub fn circled_star(
    v: &MatrixSupermodule,
    theta_v: Option<&TMat>,
    w: &MatrixSupermodule,
    theta_w: Option<&TMat>,
) -> Result<MatrixSupermodule, SupermoduleError> {
    let prod = tensor(v, w)?;
    let (Some(tv), Some(tw)) = (theta_v, theta_w) else {
        return Ok(prod.with_label(format!("{}*{}", v.label, w.label)));
    };
    check_involution(v, tv)?;
    check_involution(w, tw)?;
    let t = v.tower();
    // Θ in the raw tensor basis, then moved to the even-first basis
    let raw = tv.mul(&v.parity_matrix()).kron(tw);
    let mut parities = Vec::new();
    for a in 0..v.dim() {
        for b in 0..w.dim() {
            parities.push((v.parity(a) + w.parity(b)) % 2);
        }
    }
    let (perm, _) = even_first(&parities);
    let big = raw.permuted(&perm);
    let i = t.from_field(&sqrt_minus_one(v.ctx()));
    let shifted = big.minus_scalar(&i);
    let block = |idx: &[usize]| -> Vec<TVec> {
        let sub = shifted.select(idx, idx);
        sub.kernel()
            .into_iter()
            .map(|k| {
                let mut full = vec![t.zero(); prod.dim()];
                for (pos, &j) in idx.iter().enumerate() {
                    full[j] = k[pos].clone();
                }
                full
            })
            .collect()
    };
    let even = block(&prod.even_indices());
    let odd = block(&prod.odd_indices());
    prod.restrict_to(&even, &odd, prod.mu(), format!("{}*{}", v.label, w.label))
}

/// Ind_{H_μ}^{H_n} M with basis T_d ⊗ v over minimal left coset representatives d
/// (ordered by length), reordered even first; labels are `[coset index, inner label…]`.
pub fn induced(m: &MatrixSupermodule) -> Result<MatrixSupermodule, SupermoduleError> {
    let n = m.n();
    let ctx = m.ctx().clone();
    let t = m.tower();
    let reps = perm::min_coset_reps(m.mu());
    let dm = m.dim();
    let big = reps.len() * dm;
    let mut ev = Evaluator::new(m);
    let mut mats = BTreeMap::new();
    for g in generators(&[n]) {
        let mut mat = TMat::zero(t, big, big);
        for (ci, d) in reps.iter().enumerate() {
            let prod = HElement::gen(&ctx, n, g).mul(&HElement::t_word(&ctx, n, d));
            for (dp, h) in coset_decompose(&prod, m.mu()) {
                let cj = reps.iter().position(|r| *r == dp).expect("coset representative");
                let block = ev.act(&h)?;
                for a in 0..dm {
                    for b in 0..dm {
                        if !block.data[a][b].is_zero() {
                            mat.data[cj * dm + a][ci * dm + b] = block.data[a][b].clone();
                        }
                    }
                }
            }
        }
        mats.insert(g, mat);
    }
    let mut labels = Vec::new();
    let mut parities = Vec::new();
    for ci in 0..reps.len() {
        for a in 0..dm {
            labels.push(std::iter::once(ci).chain(m.labels()[a].iter().copied()).collect());
            parities.push(m.parity(a));
        }
    }
    let raw = MatrixSupermodule::new(format!("Ind({})", m.label), t, &[n], big, 0, mats)?;
    let (perm, even) = even_first(&parities);
    Ok(raw.with_labels(labels).permuted(&perm, even))
}

/// Reduced words of the coset representatives used by [`induced`], in label order.
pub fn coset_words(mu: &[usize]) -> Vec<Vec<usize>> {
    perm::min_coset_reps(mu).iter().map(|p| perm::reduced_word(p)).collect()
}
