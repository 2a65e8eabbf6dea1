//! Cartan data of affine type D(2)_l, weights and the cyclotomic polynomial f^λ.

use crate::scalars::{q_of, FieldCtx, FieldElem};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("rank l must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("weight has {got} entries, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("weight is not dominant integral")]
    NotDominant,
    #[error("cannot parse weight: {0}")]
    Parse(String),
}

/// Generalized Cartan matrix and canonical central element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub l: usize,
    pub a: Vec<Vec<i64>>,
    pub c: Vec<i64>,
}

/// The D(2)_l Cartan matrix: the end nodes 0 and l−1 carry −2 toward the chain.
pub fn cartan_matrix(l: usize) -> Result<CartanData, CartanError> {
    if l < 2 {
        return Err(CartanError::RankTooSmall(l));
    }
    let mut a = vec![vec![0i64; l]; l];
    for i in 0..l {
        a[i][i] = 2;
        for j in [i.wrapping_sub(1), i + 1] {
            if j < l {
                a[i][j] = if i == 0 || i == l - 1 { -2 } else { -1 };
            }
        }
    }
    let c = (0..l).map(|i| if i == 0 || i == l - 1 { 1 } else { 2 }).collect();
    Ok(CartanData { l, a, c })
}

impl CartanData {
    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.a[i][j] != 0
    }

    /// ⟨h_i, w⟩.
    pub fn pairing(&self, i: usize, w: &Weight) -> i64 {
        w.lam[i] + (0..self.l).map(|j| self.a[i][j] * w.alpha[j]).sum::<i64>()
    }

    /// ⟨c, w⟩ with c the canonical central element.
    pub fn level(&self, w: &Weight) -> i64 {
        (0..self.l).map(|i| self.c[i] * self.pairing(i, w)).sum()
    }
}

/// A weight Σ lam_i Λ_i + Σ alpha_i α_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub lam: Vec<i64>,
    pub alpha: Vec<i64>,
}

impl Weight {
    pub fn zero(l: usize) -> Self {
        Weight { lam: vec![0; l], alpha: vec![0; l] }
    }

    pub fn fundamental(l: usize, i: usize) -> Self {
        let mut w = Self::zero(l);
        w.lam[i] = 1;
        w
    }

    pub fn simple_root(l: usize, i: usize) -> Self {
        let mut w = Self::zero(l);
        w.alpha[i] = 1;
        w
    }

    pub fn from_lambda(lam: Vec<i64>) -> Self {
        let l = lam.len();
        Weight { lam, alpha: vec![0; l] }
    }

    /// Parse "k0,k1,…" as Σ k_i Λ_i.
    pub fn parse_lambda(s: &str, l: usize) -> Result<Self, CartanError> {
        let lam: Vec<i64> = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| CartanError::Parse(s.to_string())))
            .collect::<Result<_, _>>()?;
        if lam.len() != l {
            return Err(CartanError::WrongLength { got: lam.len(), expected: l });
        }
        Ok(Self::from_lambda(lam))
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight {
            lam: self.lam.iter().zip(&o.lam).map(|(a, b)| a + b).collect(),
            alpha: self.alpha.iter().zip(&o.alpha).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight { lam: self.lam.iter().map(|a| a * k).collect(), alpha: self.alpha.iter().map(|a| a * k).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.lam.iter().chain(&self.alpha).all(|&x| x == 0)
    }

    pub fn is_dominant_lambda(&self) -> bool {
        self.alpha.iter().all(|&x| x == 0) && self.lam.iter().all(|&x| x >= 0)
    }
}

/// f^λ = (X−1)^{λ(h_0)} (X+1)^{λ(h_{l−1})} ∏ (X² − q(i)X + 1)^{λ(h_i)}, low degree first.
pub fn f_lambda(l: usize, lambda: &Weight) -> Result<Vec<FieldElem>, CartanError> {
    if lambda.lam.len() != l || lambda.alpha.len() != l {
        return Err(CartanError::WrongLength { got: lambda.lam.len(), expected: l });
    }
    if !lambda.is_dominant_lambda() {
        return Err(CartanError::NotDominant);
    }
    let ctx = FieldCtx::get(l);
    let one = FieldElem::one(&ctx);
    let mut poly = vec![one.clone()];
    for i in 0..l {
        let factor = if i == 0 {
            vec![-&one, one.clone()]
        } else if i == l - 1 {
            vec![one.clone(), one.clone()]
        } else {
            vec![one.clone(), -&q_of(&ctx, i), one.clone()]
        };
        for _ in 0..lambda.lam[i] {
            poly = poly_mul(&poly, &factor);
        }
    }
    Ok(poly)
}

fn poly_mul(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let ctx = a[0].ctx().clone();
    let mut out = vec![FieldElem::zero(&ctx); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        assert_eq!(cartan_matrix(2).unwrap().a, vec![vec![2, -2], vec![-2, 2]]);
        let a4 = cartan_matrix(4).unwrap().a;
        assert_eq!(a4, vec![vec![2, -2, 0, 0], vec![-1, 2, -1, 0], vec![0, -1, 2, -1], vec![0, 0, -2, 2]]);
        assert_eq!(cartan_matrix(3).unwrap().c, vec![1, 2, 1]);
        assert!(cartan_matrix(1).is_err());
    }

    #[test]
    fn central_element_annihilates() {
        for l in 2..=8 {
            let cd = cartan_matrix(l).unwrap();
            for j in 0..l {
                let s: i64 = (0..l).map(|i| cd.c[i] * cd.a[i][j]).sum();
                assert_eq!(s, 0, "l={l} column {j}");
            }
        }
    }

    #[test]
    fn pairings() {
        let cd = cartan_matrix(4).unwrap();
        assert_eq!(cd.pairing(2, &Weight::fundamental(4, 2)), 1);
        assert_eq!(cd.pairing(1, &Weight::simple_root(4, 1)), 2);
        assert_eq!(cd.pairing(0, &Weight::simple_root(4, 1)), -2);
    }

    #[test]
    fn f_lambda_examples() {
        let ctx = FieldCtx::get(3);
        let f0 = f_lambda(3, &Weight::fundamental(3, 0)).unwrap();
        assert_eq!(f0, vec![FieldElem::from_int(&ctx, -1), FieldElem::one(&ctx)]);
        let f1 = f_lambda(3, &Weight::fundamental(3, 1)).unwrap();
        assert_eq!(f1, vec![FieldElem::one(&ctx), FieldElem::zero(&ctx), FieldElem::one(&ctx)]);
        assert_eq!(f_lambda(3, &Weight::zero(3)).unwrap(), vec![FieldElem::one(&ctx)]);
        assert!(f_lambda(3, &Weight::from_lambda(vec![-1, 0, 0])).is_err());
    }

    #[test]
    fn parse_lambda() {
        let w = Weight::parse_lambda("1, 0,2", 3).unwrap();
        assert_eq!(w.lam, vec![1, 0, 2]);
        assert!(Weight::parse_lambda("1,x", 2).is_err());
        assert!(Weight::parse_lambda("1", 2).is_err());
    }
}
