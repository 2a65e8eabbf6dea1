//! Dense rational polynomials (low degree first) and cyclotomic polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QPoly = Vec<BigRational>;

/// Drop trailing zero coefficients.
pub fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &QPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let mut out: QPoly = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

pub fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division `a = q*b + r`; panics on a zero divisor.
pub fn divmod(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    let mut q = Vec::new();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        let shift = dr - db;
        if q.len() <= shift {
            q.resize(shift + 1, BigRational::zero());
        }
        q[shift] = c.clone();
        for (k, bk) in b.iter().enumerate().take(db + 1) {
            r[k + shift] -= &c * bk;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// The N-th cyclotomic polynomial, monic with integer coefficients, low degree first.
pub fn cyclotomic_polynomial(n: usize) -> QPoly {
    assert!(n >= 1, "cyclotomic_polynomial needs N >= 1");
    let mut p: QPoly = vec![BigRational::zero(); n + 1];
    p[0] = -BigRational::one();
    p[n] = BigRational::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = divmod(&p, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

/// Integer coefficients of Φ_N, low degree first.
pub fn cyclotomic_int(n: usize) -> Vec<i64> {
    use num_traits::ToPrimitive;
    cyclotomic_polynomial(n)
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer().to_i64().expect("cyclotomic coefficient fits i64")
        })
        .collect()
}

pub fn from_ints(v: &[i64]) -> QPoly {
    let mut p: QPoly = v.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    trim(&mut p);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_int(1), vec![-1, 1]);
        assert_eq!(cyclotomic_int(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_int(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_int(6), vec![1, -1, 1]);
    }

    #[test]
    fn degree_is_totient() {
        for (n, phi) in [(16, 8), (20, 8), (24, 8), (9, 6), (30, 8)] {
            assert_eq!(cyclotomic_int(n).len() - 1, phi);
        }
    }

    #[test]
    fn divmod_round_trip() {
        let a = from_ints(&[3, 0, 5, 1, 7]);
        let b = from_ints(&[1, 2, 1]);
        let (q, r) = divmod(&a, &b);
        let back = sub(&a, &r);
        assert_eq!(mul(&q, &b), back);
    }
}
