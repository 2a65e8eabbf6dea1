//! Crystals: the interface, the elementary crystals B_i and T_λ, tensor products
//! and a pointwise axiom checker.

use crate::cartan::{CartanData, Weight};
use serde::Serialize;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Sub};


/// Z ⊔ {−∞}. The derived order puts −∞ below every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    NegInf,
    Fin(i64),
}

impl Ext {
    pub fn finite(self) -> Option<i64> {
        match self {
            Ext::Fin(k) => Some(k),
            Ext::NegInf => None,
        }
    }
}

impl Add<i64> for Ext {
    type Output = Ext;
    fn add(self, k: i64) -> Ext {
        match self {
            Ext::Fin(a) => Ext::Fin(a + k),
            Ext::NegInf => Ext::NegInf,
        }
    }
}

impl Sub<i64> for Ext {
    type Output = Ext;
    fn sub(self, k: i64) -> Ext {
        self + (-k)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Fin(k) => write!(f, "{k}"),
            Ext::NegInf => write!(f, "-inf"),
        }
    }
}

/// A g-crystal. `None` plays the role of 0.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + fmt::Debug;

    fn cartan(&self) -> &CartanData;
    fn wt(&self, b: &Self::Elem) -> Weight;
    fn eps(&self, b: &Self::Elem, i: usize) -> Ext;
    fn phi(&self, b: &Self::Elem, i: usize) -> Ext;
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;

    fn rank(&self) -> usize {
        self.cartan().l
    }
}

/// b_i(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiElem {
    pub i: usize,
    pub n: i64,
}

/// The crystal B_i = {b_i(n) | n ∈ Z}.
#[derive(Clone, Debug)]
pub struct Bi {
    pub cd: CartanData,
    pub i: usize,
}

impl Bi {
    pub fn new(cd: &CartanData, i: usize) -> Self {
        assert!(i < cd.l, "color {i} out of range");
        Bi { cd: cd.clone(), i }
    }

    pub fn elem(&self, n: i64) -> BiElem {
        BiElem { i: self.i, n }
    }
}

impl Crystal for Bi {
    type Elem = BiElem;

    fn cartan(&self) -> &CartanData {
        &self.cd
    }

    fn wt(&self, b: &BiElem) -> Weight {
        Weight::simple_root(self.cd.l, b.i).scale(b.n)
    }

    fn eps(&self, b: &BiElem, j: usize) -> Ext {
        if j == b.i {
            Ext::Fin(-b.n)
        } else {
            Ext::NegInf
        }
    }

    fn phi(&self, b: &BiElem, j: usize) -> Ext {
        if j == b.i {
            Ext::Fin(b.n)
        } else {
            Ext::NegInf
        }
    }

    fn e(&self, b: &BiElem, j: usize) -> Option<BiElem> {
        (j == b.i).then_some(BiElem { i: b.i, n: b.n + 1 })
    }

    fn f(&self, b: &BiElem, j: usize) -> Option<BiElem> {
        (j == b.i).then_some(BiElem { i: b.i, n: b.n - 1 })
    }
}

/// The single element t_λ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TLambdaElem {
    pub lambda: Weight,
}

/// T_λ = {t_λ}.
#[derive(Clone, Debug)]
pub struct TLambda {
    pub cd: CartanData,
    pub lambda: Weight,
}

impl TLambda {
    pub fn new(cd: &CartanData, lambda: Weight) -> Self {
        TLambda { cd: cd.clone(), lambda }
    }

    pub fn elem(&self) -> TLambdaElem {
        TLambdaElem { lambda: self.lambda.clone() }
    }
}

impl Crystal for TLambda {
    type Elem = TLambdaElem;

    fn cartan(&self) -> &CartanData {
        &self.cd
    }

    fn wt(&self, b: &TLambdaElem) -> Weight {
        b.lambda.clone()
    }

    fn eps(&self, _: &TLambdaElem, _: usize) -> Ext {
        Ext::NegInf
    }

    fn phi(&self, _: &TLambdaElem, _: usize) -> Ext {
        Ext::NegInf
    }

    fn e(&self, _: &TLambdaElem, _: usize) -> Option<TLambdaElem> {
        None
    }

    fn f(&self, _: &TLambdaElem, _: usize) -> Option<TLambdaElem> {
        None
    }
}

/// B ⊗ B′ with elements (b, b′). f̃ acts on the left factor iff φ_i(b) > ε_i(b′), ẽ iff
/// φ_i(b) ≥ ε_i(b′).
#[derive(Clone, Debug)]
pub struct Tensor<A, B> {
    pub left: A,
    pub right: B,
}

impl<A, B> Tensor<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Tensor { left, right }
    }
}

impl<A: Crystal, B: Crystal> Crystal for Tensor<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn cartan(&self) -> &CartanData {
        self.left.cartan()
    }

    fn wt(&self, (b, c): &Self::Elem) -> Weight {
        self.left.wt(b).add(&self.right.wt(c))
    }

    fn eps(&self, (b, c): &Self::Elem, i: usize) -> Ext {
        let shift = self.cartan().pairing(i, &self.left.wt(b));
        self.left.eps(b, i).max(self.right.eps(c, i) - shift)
    }

    fn phi(&self, (b, c): &Self::Elem, i: usize) -> Ext {
        let shift = self.cartan().pairing(i, &self.right.wt(c));
        (self.left.phi(b, i) + shift).max(self.right.phi(c, i))
    }

    fn e(&self, (b, c): &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.left.phi(b, i) >= self.right.eps(c, i) {
            Some((self.left.e(b, i)?, c.clone()))
        } else {
            Some((b.clone(), self.right.e(c, i)?))
        }
    }

    fn f(&self, (b, c): &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.left.phi(b, i) > self.right.eps(c, i) {
            Some((self.left.f(b, i)?, c.clone()))
        } else {
            Some((b.clone(), self.right.f(c, i)?))
        }
    }
}

/// Outcome of one axiom on a sample.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub item: u8,
    pub pass: bool,
    /// First failing element and color, if any.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub checked: usize,
    pub items: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|r| r.pass)
    }

    pub fn item(&self, k: u8) -> &AxiomResult {
        &self.items[k as usize - 1]
    }
}

/// Check the six crystal axioms pointwise on `elems`. Images under ẽ_i, f̃_i need not lie in
/// the sample; their data is evaluated directly.
pub fn verify_axioms<C: Crystal>(c: &C, elems: &[C::Elem]) -> AxiomReport {
    let cd = c.cartan();
    let l = c.rank();
    let mut fails: [Option<String>; 6] = Default::default();
    let mut note = |k: usize, b: &C::Elem, i: usize| {
        if fails[k].is_none() {
            fails[k] = Some(format!("{b:?} at color {i}"));
        }
    };
    for b in elems {
        let wt = c.wt(b);
        for i in 0..l {
            let (eps, phi) = (c.eps(b, i), c.phi(b, i));
            // item (1) holds by construction: 0 is `None` and never acted on
            if phi != eps + cd.pairing(i, &wt) {
                note(1, b, i);
            }
            let alpha = Weight::simple_root(l, i);
            if let Some(eb) = c.e(b, i) {
                if c.eps(&eb, i) != eps - 1 || c.phi(&eb, i) != phi + 1 || c.wt(&eb) != wt.add(&alpha) {
                    note(2, b, i);
                }
                if c.f(&eb, i).as_ref() != Some(b) {
                    note(4, b, i);
                }
            }
            if let Some(fb) = c.f(b, i) {
                if c.eps(&fb, i) != eps + 1 || c.phi(&fb, i) != phi - 1 || c.wt(&fb) != wt.sub(&alpha) {
                    note(3, b, i);
                }
                if c.e(&fb, i).as_ref() != Some(b) {
                    note(4, b, i);
                }
            }
            if phi == Ext::NegInf && (c.e(b, i).is_some() || c.f(b, i).is_some()) {
                note(5, b, i);
            }
        }
    }
    let items = fails
        .into_iter()
        .enumerate()
        .map(|(k, w)| AxiomResult { item: k as u8 + 1, pass: w.is_none(), witness: w })
        .collect();
    AxiomReport { checked: elems.len(), items }
}
