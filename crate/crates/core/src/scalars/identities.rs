//! The scalar identities that underpin the explicit rank-2 modules.

use super::field::{self, FieldCtx, FieldElem};
use super::tower::{Tower, TowerElem};
use crate::error::ScalarError;
use std::sync::Arc;

/// With a = b₊(i), b = b₊(j):
/// a⁻²(ab−1)²(ab⁻¹−1)² · (a⁻²(ab−1)²(ab⁻¹−1)² − ξ²a⁻¹b⁻¹(ab−1)² − ξ²a⁻¹b(ab⁻¹−1)²).
/// Vanishes whenever |i − j| ≤ 1.
pub fn tech_expression(l: usize, i: usize, j: usize) -> Result<TowerElem, ScalarError> {
    let ctx = FieldCtx::get(l);
    let t = Tower::for_indices(&ctx, &[i, j])?;
    let a = t.b_pm(i, true);
    let ainv = t.b_pm(i, false);
    let b = t.b_pm(j, true);
    let binv = t.b_pm(j, false);
    let one = t.one();
    let xi = t.from_field(&field::xi(&ctx));
    let xi2 = &xi * &xi;
    let p = (&a * &b - &one).pow(2);
    let m = (&a * &binv - &one).pow(2);
    let core = &(&ainv * &ainv) * &(&p * &m);
    let inner = &(&core - &(&(&xi2 * &(&ainv * &binv)) * &p)) - &(&(&xi2 * &(&ainv * &b)) * &m);
    Ok(&core * &inner)
}

/// ξ²(q(i)q(j) − 4)/(q(j) − q(i))², or `None` when q(i) = q(j).
pub fn fund_value(l: usize, i: usize, j: usize) -> Option<FieldElem> {
    let ctx: Arc<FieldCtx> = FieldCtx::get(l);
    let qi = field::q_of(&ctx, i);
    let qj = field::q_of(&ctx, j);
    let diff = &qj - &qi;
    let dinv = diff.inv()?;
    let xi = field::xi(&ctx);
    let num = &(&xi * &xi) * &(&(&qi * &qj) - &FieldElem::from_int(&ctx, 4));
    Some(&num * &(&dinv * &dinv))
}
