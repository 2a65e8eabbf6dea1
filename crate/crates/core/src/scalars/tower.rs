//! Quadratic tower rings over Q(ζ) holding the square roots √(q(i)²/4 − 1).
//!
//! A tower adjoins at most two discriminants `d_k` with symbols `r_k`, `r_k² = d_k`.
//! A discriminant may turn out to be a square, in which case the quotient ring has
//! zero divisors; inversion then reports the discovered root and the caller splits
//! the tower by substituting `r_k ↦ s` and reruns.

use super::census;
use super::field::{self, owned_ops, FieldCtx, FieldElem};
use crate::error::ScalarError;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub const MAX_DISCS: usize = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct Disc {
    /// The index i with d = q(i)²/4 − 1.
    pub index: usize,
    pub value: FieldElem,
    /// Some(s) once split, with s expressed in the tower's symbolic basis.
    pub root: Option<Vec<FieldElem>>,
}

/// The ring Q(ζ)[r_0, r_1] / (r_k² − d_k), possibly with some r_k specialized.
#[derive(Clone, Debug, PartialEq)]
pub struct Tower {
    field: Arc<FieldCtx>,
    discs: Vec<Disc>,
}

impl Tower {
    /// The tower containing b±(i) for every listed index.
    pub fn for_indices(field: &Arc<FieldCtx>, indices: &[usize]) -> Result<Arc<Tower>, ScalarError> {
        let mut discs: Vec<Disc> = Vec::new();
        for &i in indices {
            if i >= field.l {
                return Err(ScalarError::IndexOutOfRange { i, l: field.l });
            }
            let qi = field::q_of(field, i);
            let d = &(&qi * &qi) * &FieldElem::from_ratio(field, 1, 4) - FieldElem::one(field);
            if d.is_zero() || discs.iter().any(|x| x.index == i) {
                continue;
            }
            if discs.len() == MAX_DISCS {
                return Err(ScalarError::TooManyDiscriminants);
            }
            discs.push(Disc { index: i, value: d, root: None });
        }
        Ok(Arc::new(Tower { field: field.clone(), discs }))
    }

    /// Like [`Tower::for_indices`], but discriminants (or a product of two) that are
    /// squares in Q(ζ) are substituted at once, so the resulting ring is a field.
    pub fn field_for_indices(field: &Arc<FieldCtx>, indices: &[usize]) -> Result<Arc<Tower>, ScalarError> {
        let mut t = Self::for_indices(field, indices)?;
        let zero = FieldElem::zero(field);
        for k in 0..t.discs.len() {
            if let Some(s) = census::field_sqrt(&t.discs[k].value) {
                let mut coords = vec![zero.clone(); t.width()];
                coords[0] = s;
                t = t.split(k, &coords);
            }
        }
        if t.symbolic_bits().len() == 2 {
            let (d0, d1) = (&t.discs[0].value, &t.discs[1].value);
            if let Some(s) = census::field_sqrt(&(d0 * d1)) {
                // r_1 = s·r_0 / d_0
                let mut coords = vec![zero.clone(); t.width()];
                coords[1] = &s * &d0.inv().expect("nonzero discriminant");
                t = t.split(1, &coords);
            }
        }
        Ok(t)
    }

    /// The base field viewed as a tower with no discriminants.
    pub fn base(field: &Arc<FieldCtx>) -> Arc<Tower> {
        Arc::new(Tower { field: field.clone(), discs: Vec::new() })
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn discs(&self) -> &[Disc] {
        &self.discs
    }

    /// Number of basis masks (coordinate vector length).
    pub fn width(&self) -> usize {
        1 << self.discs.len()
    }

    /// Bits of discriminants that are still symbolic.
    pub fn symbolic_bits(&self) -> Vec<usize> {
        (0..self.discs.len()).filter(|&k| self.discs[k].root.is_none()).collect()
    }

    /// Masks built only from symbolic bits, ascending.
    pub fn active_masks(&self) -> Vec<usize> {
        let sym: usize = self.symbolic_bits().iter().map(|k| 1 << k).sum();
        (0..self.width()).filter(|m| m & !sym == 0).collect()
    }

    /// Dimension of the tower as a vector space over the field.
    pub fn rank(&self) -> usize {
        1 << self.symbolic_bits().len()
    }

    pub fn zero(self: &Arc<Self>) -> TowerElem {
        TowerElem { tower: self.clone(), coords: vec![FieldElem::zero(&self.field); self.width()] }
    }

    pub fn one(self: &Arc<Self>) -> TowerElem {
        self.from_field(&FieldElem::one(&self.field))
    }

    pub fn from_int(self: &Arc<Self>, v: i64) -> TowerElem {
        self.from_field(&FieldElem::from_int(&self.field, v))
    }

    pub fn from_field(self: &Arc<Self>, x: &FieldElem) -> TowerElem {
        let mut e = self.zero();
        e.coords[0] = x.clone();
        e
    }

    pub fn from_coords(self: &Arc<Self>, coords: Vec<FieldElem>) -> TowerElem {
        assert_eq!(coords.len(), self.width());
        TowerElem { tower: self.clone(), coords }
    }

    /// The element r_k, or its substituted value once split.
    pub fn root(self: &Arc<Self>, k: usize) -> TowerElem {
        match &self.discs[k].root {
            Some(s) => self.from_coords(s.clone()),
            None => {
                let mut e = self.zero();
                e.coords[1 << k] = FieldElem::one(&self.field);
                e
            }
        }
    }

    /// √(q(i)²/4 − 1) in this tower; zero when q(i) = ±2.
    pub fn sqrt_disc(self: &Arc<Self>, i: usize) -> TowerElem {
        match self.discs.iter().position(|d| d.index == i) {
            Some(k) => self.root(k),
            None => {
                let qi = field::q_of(&self.field, i);
                let d = &(&qi * &qi) * &FieldElem::from_ratio(&self.field, 1, 4) - FieldElem::one(&self.field);
                assert!(d.is_zero(), "index {i} has no discriminant in this tower");
                self.zero()
            }
        }
    }

    /// b±(i) = q(i)/2 ± √(q(i)²/4 − 1).
    pub fn b_pm(self: &Arc<Self>, i: usize, plus: bool) -> TowerElem {
        let half = self.from_field(&(&field::q_of(&self.field, i) * &FieldElem::from_ratio(&self.field, 1, 2)));
        let r = self.sqrt_disc(i);
        if plus {
            &half + &r
        } else {
            &half - &r
        }
    }

    pub fn q_of(self: &Arc<Self>, i: usize) -> TowerElem {
        self.from_field(&field::q_of(&self.field, i))
    }

    /// A new tower with r_k specialized to `s` (coordinates in this tower).
    pub fn split(&self, k: usize, s: &[FieldElem]) -> Arc<Tower> {
        assert!(self.discs[k].root.is_none(), "discriminant already split");
        let mut discs = self.discs.clone();
        discs[k].root = Some(s.to_vec());
        let provisional = Tower { field: self.field.clone(), discs: discs.clone() };
        // re-express earlier substitutions that may mention r_k
        for (m, d) in discs.iter_mut().enumerate() {
            if m == k {
                continue;
            }
            if let Some(old) = &d.root {
                d.root = Some(provisional.reduce(old));
            }
        }
        Arc::new(Tower { field: self.field.clone(), discs })
    }

    /// Rewrite coordinates so that only active masks are used.
    fn reduce(&self, coords: &[FieldElem]) -> Vec<FieldElem> {
        let mut acc = vec![FieldElem::zero(&self.field); self.width()];
        for (mask, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut keep = 0;
            let mut subst = Vec::new();
            for (k, d) in self.discs.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    match &d.root {
                        Some(s) => subst.push(s),
                        None => keep |= 1 << k,
                    }
                }
            }
            let mut term = vec![FieldElem::zero(&self.field); self.width()];
            term[keep] = c.clone();
            for s in subst {
                term = mul_coords(self, &term, s);
            }
            for (a, t) in acc.iter_mut().zip(&term) {
                if !t.is_zero() {
                    *a = &*a + t;
                }
            }
        }
        acc
    }

    /// Carry an element of a coarser tower (same discriminants) into this one.
    pub fn import(self: &Arc<Self>, x: &TowerElem) -> TowerElem {
        assert_eq!(x.tower.discs.len(), self.discs.len(), "tower shapes differ");
        self.from_coords(self.reduce(&x.coords))
    }
}

/// An element of a [`Tower`].
#[derive(Clone)]
pub struct TowerElem {
    tower: Arc<Tower>,
    coords: Vec<FieldElem>,
}

impl TowerElem {
    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(FieldElem::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(FieldElem::is_zero)
    }

    /// The field value if this element has no irrational part.
    pub fn as_field(&self) -> Option<&FieldElem> {
        if self.coords[1..].iter().all(FieldElem::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn scale(&self, c: &FieldElem) -> TowerElem {
        TowerElem { tower: self.tower.clone(), coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// Field matrix of multiplication by `self` on the active basis (column convention).
    pub fn regular_matrix(&self) -> Vec<Vec<FieldElem>> {
        let masks = self.tower.active_masks();
        let mut cols = Vec::with_capacity(masks.len());
        for &m in &masks {
            let mut basis = self.tower.zero();
            basis.coords[m] = FieldElem::one(&self.tower.field);
            let prod = self * &basis;
            cols.push(masks.iter().map(|&r| prod.coords[r].clone()).collect::<Vec<_>>());
        }
        // transpose columns into rows
        (0..masks.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
    }

    /// Coordinates on the active masks only.
    pub fn active_coords(&self) -> Vec<FieldElem> {
        self.tower.active_masks().iter().map(|&m| self.coords[m].clone()).collect()
    }

    pub fn inv(&self) -> Result<TowerElem, ScalarError> {
        tower_invert(self)
    }

    pub fn pow(&self, e: u32) -> TowerElem {
        let mut acc = self.tower.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// Restrict `coords` to masks drawn from `bits`, multiply within that subring.
fn mul_coords(tower: &Tower, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let field = &tower.field;
    let mut out = vec![FieldElem::zero(field); a.len()];
    for (s, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (t, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let mut c = x * y;
            let both = s & t;
            for (k, d) in tower.discs.iter().enumerate() {
                if both & (1 << k) != 0 {
                    c = &c * &d.value;
                }
            }
            out[s ^ t] = &out[s ^ t] + &c;
        }
    }
    out
}

fn is_zero_coords(c: &[FieldElem]) -> bool {
    c.iter().all(FieldElem::is_zero)
}

/// Inverse of an element supported on masks built from `bits`.
fn invert_coords(tower: &Tower, x: &[FieldElem], bits: &[usize]) -> Result<Vec<FieldElem>, ScalarError> {
    let field = &tower.field;
    let Some((&k, lower)) = bits.split_last() else {
        let inv = x[0].inv().ok_or(ScalarError::NotInvertible)?;
        let mut out = vec![FieldElem::zero(field); x.len()];
        out[0] = inv;
        return Ok(out);
    };
    let bit = 1 << k;
    let mut u = vec![FieldElem::zero(field); x.len()];
    let mut v = vec![FieldElem::zero(field); x.len()];
    for (m, c) in x.iter().enumerate() {
        if m & bit != 0 {
            v[m ^ bit] = c.clone();
        } else {
            u[m] = c.clone();
        }
    }
    let uu = mul_coords(tower, &u, &u);
    let vv = mul_coords(tower, &v, &v);
    let d = &tower.discs[k].value;
    let norm: Vec<FieldElem> = uu.iter().zip(&vv).map(|(a, b)| a - &(b * d)).collect();
    if is_zero_coords(&norm) {
        if is_zero_coords(&v) {
            return Err(ScalarError::NotInvertible);
        }
        let vinv = invert_coords(tower, &v, lower)?;
        let mut s = mul_coords(tower, &u, &vinv);
        let lead = s.iter().rev().map(FieldElem::leading_sign).find(|&g| g != 0).unwrap_or(1);
        if lead < 0 {
            s = s.iter().map(|c| -c).collect();
        }
        return Err(ScalarError::ZeroDivisor { disc: k, root: s });
    }
    let ninv = invert_coords(tower, &norm, lower)?;
    // (u − v r_k) / N
    let mut conj = u.clone();
    for (m, c) in v.iter().enumerate() {
        if !c.is_zero() {
            conj[m | bit] = -c;
        }
    }
    Ok(mul_coords(tower, &conj, &ninv))
}

/// Inverse in the tower; reports a square root of a discriminant when one is uncovered.
pub fn tower_invert(x: &TowerElem) -> Result<TowerElem, ScalarError> {
    if x.is_zero() {
        return Err(ScalarError::NotInvertible);
    }
    let bits = x.tower.symbolic_bits();
    let coords = invert_coords(&x.tower, &x.coords, &bits)?;
    Ok(TowerElem { tower: x.tower.clone(), coords })
}

/// Run `f`, splitting the tower and retrying each time a zero divisor is uncovered.
pub fn with_lazy_split<T>(
    tower: &Arc<Tower>,
    mut f: impl FnMut(&Arc<Tower>) -> Result<T, ScalarError>,
) -> Result<T, ScalarError> {
    let mut t = tower.clone();
    loop {
        match f(&t) {
            Err(ScalarError::ZeroDivisor { disc, root }) => t = t.split(disc, &root),
            other => return other,
        }
    }
}

impl PartialEq for TowerElem {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for TowerElem {}

impl Add for &TowerElem {
    type Output = TowerElem;
    fn add(self, rhs: &TowerElem) -> TowerElem {
        TowerElem {
            tower: self.tower.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &TowerElem {
    type Output = TowerElem;
    fn sub(self, rhs: &TowerElem) -> TowerElem {
        TowerElem {
            tower: self.tower.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &TowerElem {
    type Output = TowerElem;
    fn neg(self) -> TowerElem {
        TowerElem { tower: self.tower.clone(), coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl Neg for TowerElem {
    type Output = TowerElem;
    fn neg(self) -> TowerElem {
        -&self
    }
}

impl Mul for &TowerElem {
    type Output = TowerElem;
    fn mul(self, rhs: &TowerElem) -> TowerElem {
        let raw = mul_coords(&self.tower, &self.coords, &rhs.coords);
        let coords = if self.tower.discs.iter().any(|d| d.root.is_some()) {
            self.tower.reduce(&raw)
        } else {
            raw
        };
        TowerElem { tower: self.tower.clone(), coords }
    }
}

owned_ops!(TowerElem, Add add, Sub sub, Mul mul);

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})")?;
                for k in 0..self.tower.discs.len() {
                    if m & (1 << k) != 0 {
                        write!(f, "*r{}", self.tower.discs[k].index)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TowerElem({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_pm_is_root_of_quadratic() {
        for l in 2..=6 {
            let ctx = FieldCtx::get(l);
            for i in 0..l {
                let t = Tower::for_indices(&ctx, &[i]).unwrap();
                let bp = t.b_pm(i, true);
                let bm = t.b_pm(i, false);
                assert!((&bp * &bm).is_one());
                assert_eq!(&bp + &bm, t.q_of(i));
                let quad = &(&bp * &bp) - &(&t.q_of(i) * &bp) + t.one();
                assert!(quad.is_zero());
                assert_eq!(bp.inv().unwrap(), bm);
            }
        }
    }

    #[test]
    fn ends_have_no_discriminant() {
        let ctx = FieldCtx::get(4);
        let t = Tower::for_indices(&ctx, &[0, 3]).unwrap();
        assert_eq!(t.rank(), 1);
        assert!(t.b_pm(0, true).is_one());
        assert_eq!(t.b_pm(3, false), t.from_int(-1));
    }

    #[test]
    fn zero_divisor_reports_root() {
        let ctx = FieldCtx::get(3);
        let t = Tower::for_indices(&ctx, &[1]).unwrap();
        let q3 = t.from_field(&FieldElem::zeta_pow(&ctx, 3));
        let x = &t.root(0) - &q3;
        match tower_invert(&x) {
            Err(ScalarError::ZeroDivisor { disc, root }) => {
                assert_eq!(disc, 0);
                assert_eq!(t.from_coords(root), q3);
            }
            other => panic!("expected a zero divisor, got {other:?}"),
        }
    }

    #[test]
    fn lazy_split_resolves_b_plus() {
        let ctx = FieldCtx::get(3);
        let t = Tower::for_indices(&ctx, &[1]).unwrap();
        let bp = with_lazy_split(&t, |t| {
            let q3 = t.from_field(&FieldElem::zeta_pow(&ctx, 3));
            (&t.root(0) + &q3).inv()?;
            Ok(t.b_pm(1, true))
        })
        .unwrap();
        assert_eq!(bp.as_field(), Some(&FieldElem::zeta_pow(&ctx, 3)));
        assert_eq!(bp.tower().rank(), 1);
    }

    #[test]
    fn zero_is_not_invertible() {
        let ctx = FieldCtx::get(2);
        let t = Tower::base(&ctx);
        assert!(matches!(t.zero().inv(), Err(ScalarError::NotInvertible)));
        assert_eq!(t.from_int(2).inv().unwrap(), t.from_field(&FieldElem::from_ratio(&ctx, 1, 2)));
    }

    #[test]
    fn field_towers_have_no_zero_divisors() {
        for (l, idx) in [(4usize, [1usize, 2usize]), (3, [1, 1]), (5, [1, 2]), (6, [2, 3])] {
            let f = FieldCtx::get(l);
            let t = Tower::field_for_indices(&f, &idx).unwrap();
            for &i in &idx {
                let bp = t.b_pm(i, true);
                let bm = t.b_pm(i, false);
                assert!((&bp * &bm).is_one());
                assert!(tower_invert(&(&bp - &bm)).is_ok());
            }
            let diff = &t.b_pm(idx[0], true) - &t.b_pm(idx[1], false);
            if !diff.is_zero() {
                assert!(tower_invert(&diff).is_ok(), "l={l}");
            }
        }
        let f = FieldCtx::get(4);
        assert_eq!(Tower::field_for_indices(&f, &[1, 2]).unwrap().rank(), 2);
        assert_eq!(Tower::field_for_indices(&f, &[1]).unwrap().rank(), 2);
    }

    #[test]
    fn two_discriminants_invert() {
        let ctx = FieldCtx::get(5);
        let t = Tower::for_indices(&ctx, &[1, 2]).unwrap();
        assert_eq!(t.rank(), 4);
        let x = &(&t.b_pm(1, true) + &t.b_pm(2, false)) + &t.from_int(3);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }
}
