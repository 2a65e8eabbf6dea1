//! Double-double complex evaluation of exact scalars, used as a secondary diagnostic.
//!
//! ζ is sent to exp(2π√−1/4l); a tower symbol r_k is sent to either square root of
//! the image of d_k, and an identity is accepted only if it vanishes under every choice.

use super::field::{FieldCtx, FieldElem};
use super::tower::TowerElem;
use num_traits::ToPrimitive;
use std::ops::{Add, Div, Mul, Neg, Sub};
use twofloat::TwoFloat;

/// Absolute tolerance for numeric zero tests.
pub const TOLERANCE: f64 = 1e-20;

#[derive(Clone, Copy, Debug)]
pub struct Complex {
    pub re: TwoFloat,
    pub im: TwoFloat,
}

impl Complex {
    pub fn new(re: TwoFloat, im: TwoFloat) -> Self {
        Complex { re, im }
    }

    pub fn real(x: f64) -> Self {
        Complex { re: TwoFloat::from(x), im: TwoFloat::from(0.0) }
    }

    pub fn zero() -> Self {
        Self::real(0.0)
    }

    pub fn norm(&self) -> TwoFloat {
        (self.re * self.re + self.im * self.im).sqrt()
    }

    pub fn sqrt(&self) -> Self {
        let r = self.norm();
        let zero = TwoFloat::from(0.0);
        let re = ((r + self.re) / 2.0).max(zero).sqrt();
        let mut im = ((r - self.re) / 2.0).max(zero).sqrt();
        if self.im < zero {
            im = -im;
        }
        Complex { re, im }
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, o: Complex) -> Complex {
        Complex { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, o: Complex) -> Complex {
        Complex { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, o: Complex) -> Complex {
        Complex { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

impl Div for Complex {
    type Output = Complex;
    fn div(self, o: Complex) -> Complex {
        let d = o.re * o.re + o.im * o.im;
        Complex { re: (self.re * o.re + self.im * o.im) / d, im: (self.im * o.re - self.re * o.im) / d }
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -self.re, im: -self.im }
    }
}

fn horner(coeffs: &[f64], z: Complex) -> Complex {
    coeffs.iter().rev().fold(Complex::zero(), |acc, &c| acc * z + Complex::real(c))
}

/// The image of ζ^k under the embedding ζ ↦ exp(2π√−1·k/4l), Newton-polished on Φ_{4l}.
pub fn zeta(ctx: &FieldCtx, k: usize) -> Complex {
    let angle = TwoFloat::from(2.0) * twofloat::consts::PI * TwoFloat::from(k as f64) / TwoFloat::from(ctx.order as f64);
    let mut z = Complex::new(angle.cos(), angle.sin());
    let phi: Vec<f64> = ctx.modulus().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let dphi: Vec<f64> = phi.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect();
    for _ in 0..3 {
        let step = horner(&phi, z) / horner(&dphi, z);
        z = z - step;
    }
    z
}

fn to_two(c: &num_rational::BigRational) -> TwoFloat {
    let n = TwoFloat::from(c.numer().to_f64().unwrap_or(f64::NAN));
    let d = TwoFloat::from(c.denom().to_f64().unwrap_or(f64::NAN));
    n / d
}

/// Evaluate under the embedding ζ ↦ `z`.
pub fn eval_field_at(x: &FieldElem, z: Complex) -> Complex {
    let coeffs = x.coeffs();
    coeffs.iter().rev().fold(Complex::zero(), |acc, c| acc * z + Complex::new(to_two(c), TwoFloat::from(0.0)))
}

pub fn eval_field(x: &FieldElem) -> Complex {
    eval_field_at(x, zeta(x.ctx(), 1))
}

/// Evaluate a tower element with r_k sent to ±√d_k according to bit k of `signs`.
pub fn eval_tower(x: &TowerElem, signs: usize) -> Complex {
    let tower = x.tower();
    let z = zeta(tower.field(), 1);
    let roots: Vec<Complex> = tower
        .discs()
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let r = eval_field_at(&d.value, z).sqrt();
            if signs & (1 << k) != 0 {
                -r
            } else {
                r
            }
        })
        .collect();
    let mut acc = Complex::zero();
    for (mask, c) in x.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = eval_field_at(c, z);
        for (k, r) in roots.iter().enumerate() {
            if mask & (1 << k) != 0 {
                term = term * *r;
            }
        }
        acc = acc + term;
    }
    acc
}

/// Numeric zero test across every choice of square roots.
pub fn numerically_zero(x: &TowerElem) -> bool {
    let n = x.tower().discs().len();
    (0..(1usize << n)).all(|s| eval_tower(x, s).norm() < TwoFloat::from(TOLERANCE))
}

/// Solve a small dense complex system by Gaussian elimination with partial pivoting.
pub fn solve(mut a: Vec<Vec<Complex>>, mut b: Vec<Complex>) -> Option<Vec<Complex>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].norm().partial_cmp(&a[j][col].norm()).unwrap())?;
        if a[piv][col].norm() < TwoFloat::from(1e-28) {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in (col + 1)..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let t = a[col][c];
                a[r][c] = a[r][c] - f * t;
            }
            let t = b[col];
            b[r] = b[r] - f * t;
        }
    }
    let mut x = vec![Complex::zero(); n];
    for r in (0..n).rev() {
        let mut s = b[r];
        for c in (r + 1)..n {
            s = s - a[r][c] * x[c];
        }
        x[r] = s / a[r][r];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{field, Tower};

    #[test]
    fn zeta_has_right_order() {
        for l in 2..=6 {
            let ctx = FieldCtx::get(l);
            let one = FieldElem::one(&ctx);
            let x = &FieldElem::zeta_pow(&ctx, 1).pow(4 * l as i64) - &one;
            assert!(eval_field(&x).norm() < TwoFloat::from(TOLERANCE));
            let z = zeta(&ctx, 1);
            let mut p = Complex::real(1.0);
            for _ in 0..(4 * l) {
                p = p * z;
            }
            assert!((p - Complex::real(1.0)).norm() < TwoFloat::from(TOLERANCE));
        }
    }

    #[test]
    fn b_plus_times_b_minus_numerically_one() {
        let ctx = FieldCtx::get(5);
        let t = Tower::for_indices(&ctx, &[1, 2]).unwrap();
        let x = &(&t.b_pm(1, true) * &t.b_pm(1, false)) - &t.one();
        assert!(numerically_zero(&x));
        let y = &t.b_pm(2, true) - &t.from_field(&field::q_of(&ctx, 2));
        assert!(!numerically_zero(&y));
    }
}
