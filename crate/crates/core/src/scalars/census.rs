//! Exact square-root detection in Q(ζ) and the census of which discriminants are squares.
//!
//! A square root of an algebraic integer y lies in Z[ζ]; its images under the Galois
//! embeddings are ±√σ(y). Each sign pattern (compatible with complex conjugation)
//! gives a candidate whose power-basis coordinates are solved numerically, rounded
//! and then confirmed exactly.

use super::field::{self, FieldCtx, FieldElem};
use super::numeric::{self, Complex};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use std::sync::Arc;

/// A square root of `x` in Q(ζ) if one exists.
pub fn field_sqrt(x: &FieldElem) -> Option<FieldElem> {
    let ctx = x.ctx().clone();
    if x.is_zero() {
        return Some(x.clone());
    }
    // y = x·den² is integral
    let den = x.den().clone();
    let den_f = FieldElem::from_coeffs(&ctx, &[BigRational::from_integer(den.to_big())]);
    let y = &(x * &den_f) * &den_f;
    let embeds: Vec<usize> = (1..ctx.order).filter(|k| k.gcd(&ctx.order) == 1).collect();
    let upper: Vec<usize> = embeds.iter().copied().filter(|&k| 2 * k < ctx.order).collect();
    let zs: Vec<Complex> = embeds.iter().map(|&k| numeric::zeta(&ctx, k)).collect();
    let vals: Vec<Complex> = zs.iter().map(|&z| numeric::eval_field_at(&y, z).sqrt()).collect();
    let phi = ctx.phi;
    let matrix: Vec<Vec<Complex>> = zs
        .iter()
        .map(|&z| {
            let mut row = Vec::with_capacity(phi);
            let mut p = Complex::real(1.0);
            for _ in 0..phi {
                row.push(p);
                p = p * z;
            }
            row
        })
        .collect();
    for pattern in 0..(1usize << upper.len()) {
        let rhs: Vec<Complex> = embeds
            .iter()
            .zip(&vals)
            .map(|(&k, &v)| {
                let slot = upper.iter().position(|&u| u == k || u == ctx.order - k).expect("embedding pairs");
                let flip = pattern & (1 << slot) != 0;
                // the conjugate embedding must carry the conjugate value
                let v = if 2 * k < ctx.order { v } else { conj_of(&vals, &embeds, ctx.order - k) };
                if flip {
                    -v
                } else {
                    v
                }
            })
            .collect();
        let Some(sol) = numeric::solve(matrix.clone(), rhs) else { continue };
        let coeffs: Option<Vec<BigRational>> = sol
            .iter()
            .map(|c| {
                let r = c.re.hi().round();
                (r.is_finite() && r.abs() < 1e15).then(|| BigRational::from_integer(BigInt::from(r as i64)))
            })
            .collect();
        let Some(coeffs) = coeffs else { continue };
        let cand = FieldElem::from_coeffs(&ctx, &coeffs);
        if &cand * &cand == y {
            let inv_den = FieldElem::from_coeffs(&ctx, &[BigRational::new(BigInt::from(1), den.to_big())]);
            return Some(canonical_sign(&cand * &inv_den));
        }
    }
    None
}

fn conj_of(vals: &[Complex], embeds: &[usize], k: usize) -> Complex {
    let v = vals[embeds.iter().position(|&e| e == k).expect("embedding present")];
    Complex::new(v.re, -v.im)
}

/// Choose the root whose highest-degree nonzero coordinate is positive.
fn canonical_sign(s: FieldElem) -> FieldElem {
    if s.leading_sign() < 0 {
        -s
    } else {
        s
    }
}

/// The discriminant q(i)²/4 − 1.
pub fn discriminant(ctx: &Arc<FieldCtx>, i: usize) -> FieldElem {
    let qi = field::q_of(ctx, i);
    &(&qi * &qi) * &FieldElem::from_ratio(ctx, 1, 4) - FieldElem::one(ctx)
}

/// One line of the square census.
#[derive(Clone, Debug, PartialEq)]
pub struct CensusRow {
    pub l: usize,
    /// One index for d_i, two adjacent indices for the product d_i·d_j.
    pub indices: Vec<usize>,
    pub root: Option<FieldElem>,
}

/// Which d_i (middle nodes) and which adjacent products d_i·d_{i+1} are squares in Q(ζ_{4l}).
pub fn discriminant_census(l: usize) -> Vec<CensusRow> {
    let ctx = FieldCtx::get(l);
    let mut rows = Vec::new();
    let middle: Vec<usize> = (1..l.saturating_sub(1)).collect();
    for &i in &middle {
        rows.push(CensusRow { l, indices: vec![i], root: field_sqrt(&discriminant(&ctx, i)) });
    }
    for w in middle.windows(2) {
        let prod = &discriminant(&ctx, w[0]) * &discriminant(&ctx, w[1]);
        rows.push(CensusRow { l, indices: w.to_vec(), root: field_sqrt(&prod) });
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minus_one_is_a_square_at_l3() {
        let ctx = FieldCtx::get(3);
        let d = discriminant(&ctx, 1);
        assert_eq!(d, FieldElem::from_int(&ctx, -1));
        assert_eq!(field_sqrt(&d), Some(FieldElem::zeta_pow(&ctx, 3)));
    }

    #[test]
    fn rationals() {
        let ctx = FieldCtx::get(2);
        let r = field_sqrt(&FieldElem::from_ratio(&ctx, 9, 4)).unwrap();
        assert_eq!(r, FieldElem::from_ratio(&ctx, 3, 2));
        // 2 = (ζ + ζ⁻¹)² in Q(ζ_8)
        assert!(field_sqrt(&FieldElem::from_int(&ctx, 2)).is_some());
        assert!(field_sqrt(&FieldElem::from_int(&ctx, 3)).is_none());
    }

    #[test]
    fn found_roots_square_back() {
        for l in 3..=6 {
            for row in discriminant_census(l) {
                if let Some(s) = row.root {
                    let ctx = FieldCtx::get(l);
                    let target = row.indices.iter().fold(FieldElem::one(&ctx), |acc, &i| &acc * &discriminant(&ctx, i));
                    assert_eq!(&s * &s, target);
                }
            }
        }
    }
}
