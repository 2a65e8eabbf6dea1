//! The cyclotomic field Q(ζ) with ζ a primitive 4l-th root of unity.
//!
//! Elements are stored as an integer numerator polynomial of degree < φ(4l)
//! over a single positive denominator, always in lowest terms.

use super::int::Int;
use super::poly::{self, QPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// Shared per-`l` data: the modulus and reduction tables for powers of ζ.
#[derive(Debug)]
pub struct FieldCtx {
    pub l: usize,
    /// Order of ζ, equal to 4l.
    pub order: usize,
    /// Degree of the field, φ(4l).
    pub phi: usize,
    modulus: QPoly,
    /// `powers[k]` is ζ^k reduced, for k < max(order, 2φ−1).
    powers: Vec<Vec<i64>>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.l == other.l
    }
}

impl FieldCtx {
    fn new(l: usize) -> Self {
        assert!(l >= 1, "l must be positive");
        let order = 4 * l;
        let modulus_int = poly::cyclotomic_int(order);
        let phi = modulus_int.len() - 1;
        let count = order.max(2 * phi - 1);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic modulus
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            for k in 0..phi {
                next[k] -= top * modulus_int[k];
            }
            cur = next;
        }
        FieldCtx { l, order, phi, modulus: poly::from_ints(&modulus_int), powers }
    }

    /// The shared context for a given `l`.
    pub fn get(l: usize) -> Arc<FieldCtx> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<FieldCtx>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("field cache poisoned");
        guard.entry(l).or_insert_with(|| Arc::new(FieldCtx::new(l))).clone()
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }
}

/// An element of Q(ζ_{4l}).
#[derive(Clone)]
pub struct FieldElem {
    ctx: Arc<FieldCtx>,
    num: Vec<Int>,
    den: Int,
}

impl FieldElem {
    pub fn zero(ctx: &Arc<FieldCtx>) -> Self {
        FieldElem { ctx: ctx.clone(), num: vec![Int::zero(); ctx.phi], den: Int::one() }
    }

    pub fn one(ctx: &Arc<FieldCtx>) -> Self {
        Self::from_int(ctx, 1)
    }

    pub fn from_int(ctx: &Arc<FieldCtx>, v: i64) -> Self {
        let mut e = Self::zero(ctx);
        e.num[0] = Int::from(v);
        e
    }

    pub fn from_ratio(ctx: &Arc<FieldCtx>, n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        let mut e = Self::zero(ctx);
        e.num[0] = Int::from(n);
        e.den = Int::from(d);
        e.normalize();
        e
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(ctx: &Arc<FieldCtx>, k: i64) -> Self {
        let k = k.rem_euclid(ctx.order as i64) as usize;
        FieldElem {
            ctx: ctx.clone(),
            num: ctx.powers[k].iter().map(|&c| Int::from(c)).collect(),
            den: Int::one(),
        }
    }

    /// Build from rational coefficients of 1, ζ, ζ², …; higher powers are reduced.
    pub fn from_coeffs(ctx: &Arc<FieldCtx>, coeffs: &[BigRational]) -> Self {
        let mut acc = Self::zero(ctx);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::from_bigratio(ctx, c) * Self::zeta_pow(ctx, k as i64);
            acc = &acc + &term;
        }
        acc
    }

    fn from_bigratio(ctx: &Arc<FieldCtx>, c: &BigRational) -> Self {
        let mut e = Self::zero(ctx);
        e.num[0] = Int::from(c.numer().clone());
        e.den = Int::from(c.denom().clone());
        e.normalize();
        e
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn l(&self) -> usize {
        self.ctx.l
    }

    /// Rational coordinates on the power basis 1, ζ, …, ζ^{φ−1}.
    pub fn coeffs(&self) -> Vec<BigRational> {
        let d = self.den.to_big();
        self.num.iter().map(|c| BigRational::new(c.to_big(), d.clone())).collect()
    }

    pub(crate) fn den(&self) -> &Int {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Int::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Int::is_zero)
    }

    /// Is this a rational number, and if so which one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Int::is_zero) {
            Some(BigRational::new(self.num[0].to_big(), self.den.to_big()))
        } else {
            None
        }
    }

    /// Sign of the highest-degree nonzero coordinate (0 for zero).
    pub fn leading_sign(&self) -> i32 {
        self.num.iter().rev().find(|c| !c.is_zero()).map_or(0, Int::signum)
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = Int::one();
            return;
        }
        if self.den.signum() < 0 {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den = self.den.div_exact(&g);
            for c in self.num.iter_mut() {
                if !c.is_zero() {
                    *c = c.div_exact(&g);
                }
            }
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = Int::from(k);
        let mut out = FieldElem {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| c * &k).collect(),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let a = {
            let mut p = self.coeffs();
            poly::trim(&mut p);
            p
        };
        let mut r0 = self.ctx.modulus.clone();
        let mut r1 = a;
        let mut s0: QPoly = Vec::new();
        let mut s1: QPoly = vec![BigRational::one()];
        while poly::degree(&r1).is_some() {
            let (q, r) = poly::divmod(&r0, &r1);
            let s2 = poly::sub(&s0, &poly::mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant since the modulus is irreducible
        let c = r0[0].clone();
        let inv_c = BigRational::one() / c;
        let scaled: QPoly = s0.iter().map(|x| x * &inv_c).collect();
        Some(Self::from_coeffs(&self.ctx, &scaled))
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(&self.ctx);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    fn same_field(&self, other: &Self) {
        debug_assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.l == other.ctx.l,
            "mixing elements of different cyclotomic fields"
        );
    }
}

/// The quantum parameter q = ζ.
pub fn q(ctx: &Arc<FieldCtx>) -> FieldElem {
    FieldElem::zeta_pow(ctx, 1)
}

/// ξ = q − q⁻¹.
pub fn xi(ctx: &Arc<FieldCtx>) -> FieldElem {
    &FieldElem::zeta_pow(ctx, 1) - &FieldElem::zeta_pow(ctx, -1)
}

/// √−1 = q^l.
pub fn sqrt_minus_one(ctx: &Arc<FieldCtx>) -> FieldElem {
    FieldElem::zeta_pow(ctx, ctx.l as i64)
}

/// q(i) = 2(q^{2i+1} + q^{−(2i+1)}) / (q + q⁻¹).
pub fn q_of(ctx: &Arc<FieldCtx>, i: usize) -> FieldElem {
    assert!(i < ctx.l, "index {i} outside 0..{}", ctx.l);
    let e = 2 * i as i64 + 1;
    let num = &FieldElem::zeta_pow(ctx, e) + &FieldElem::zeta_pow(ctx, -e);
    let den = &FieldElem::zeta_pow(ctx, 1) + &FieldElem::zeta_pow(ctx, -1);
    (&num * &den.inv().expect("q + 1/q is nonzero")).scale_int(2)
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.l == other.ctx.l && self.den == other.den && self.num == other.num
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.l.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let mut out = if self.den == rhs.den {
            FieldElem {
                ctx: self.ctx.clone(),
                num: self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect(),
                den: self.den.clone(),
            }
        } else {
            FieldElem {
                ctx: self.ctx.clone(),
                num: self
                    .num
                    .iter()
                    .zip(&rhs.num)
                    .map(|(a, b)| &(a * &rhs.den) + &(b * &self.den))
                    .collect(),
                den: &self.den * &rhs.den,
            }
        };
        out.normalize();
        out
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { ctx: self.ctx.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return FieldElem::zero(&self.ctx);
        }
        let phi = self.ctx.phi;
        let mut prod = vec![Int::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] = &prod[i + j] + &(a * b);
            }
        }
        let mut num: Vec<Int> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (j, &p) in self.ctx.powers[k].iter().enumerate() {
                if p != 0 {
                    num[j] = &num[j] + &(c * &Int::from(p));
                }
            }
        }
        let mut out = FieldElem { ctx: self.ctx.clone(), num, den: &self.den * &rhs.den };
        out.normalize();
        out
    }
}

macro_rules! owned_ops {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { self.$m(&rhs) }
        }
    )*};
}
pub(crate) use owned_ops;

owned_ops!(FieldElem, Add add, Sub sub, Mul mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.den.to_big();
        let mut first = true;
        for (k, c) in self.num.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.to_big(), d.clone());
            let neg = r < BigRational::zero();
            let mag = if neg { -r } else { r };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem[l={}]({})", self.ctx.l, self)
    }
}

impl From<&FieldElem> for Vec<BigInt> {
    fn from(e: &FieldElem) -> Self {
        e.num.iter().map(Int::to_big).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_reduce() {
        for l in 2..=6 {
            let ctx = FieldCtx::get(l);
            let one = FieldElem::one(&ctx);
            assert_eq!(FieldElem::zeta_pow(&ctx, 4 * l as i64), one);
            assert_eq!(FieldElem::zeta_pow(&ctx, 2 * l as i64), -&one);
            let s = sqrt_minus_one(&ctx);
            assert_eq!(&s * &s, -&one);
        }
    }

    #[test]
    fn q_of_endpoints() {
        for l in 2..=6 {
            let ctx = FieldCtx::get(l);
            assert_eq!(q_of(&ctx, 0), FieldElem::from_int(&ctx, 2));
            assert_eq!(q_of(&ctx, l - 1), FieldElem::from_int(&ctx, -2));
        }
        let ctx = FieldCtx::get(3);
        assert!(q_of(&ctx, 1).is_zero());
    }

    #[test]
    fn inverse_of_two() {
        let ctx = FieldCtx::get(4);
        let two = FieldElem::from_int(&ctx, 2);
        assert_eq!(two.inv().unwrap(), FieldElem::from_ratio(&ctx, 1, 2));
    }

    #[test]
    fn inverse_round_trip() {
        let ctx = FieldCtx::get(5);
        let x = &(&q(&ctx) + &FieldElem::from_int(&ctx, 3)) * &FieldElem::zeta_pow(&ctx, 7);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn display_is_readable() {
        let ctx = FieldCtx::get(2);
        let x = &q(&ctx) - &FieldElem::from_ratio(&ctx, 1, 2);
        assert_eq!(x.to_string(), "q - 1/2");
        assert_eq!(xi(&ctx).to_string(), "q^3 + q");
    }
}
