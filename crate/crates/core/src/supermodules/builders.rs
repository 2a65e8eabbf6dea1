//! Explicit modules: the covering modules L_m^±(i), R_m(i), the rank two modules L(ij),
//! the rank three L(iij) and the small modules at a primitive 8th root of unity.

use super::module::MatrixSupermodule;
use super::ops::induced;
use crate::algebra::Gen;
use crate::error::SupermoduleError;
use crate::linalg::{TMat, TVec};
use crate::scalars::{q_of, sqrt_minus_one, xi, FieldElem, Tower, TowerElem};
use std::collections::BTreeMap;
use std::sync::Arc;

fn check_index(tower: &Arc<Tower>, i: usize) -> Result<(), SupermoduleError> {
    let l = tower.field().l;
    if i >= l {
        return Err(SupermoduleError::Precondition(format!("index {i} outside 0..{l}")));
    }
    Ok(())
}

/// Whether q(i) = ±2, i.e. i is an end node and L(i) has type Q.
pub fn is_end(l: usize, i: usize) -> bool {
    i == 0 || i + 1 == l
}

fn rows(t: &Arc<Tower>, r: Vec<Vec<TowerElem>>) -> TMat {
    let _ = t;
    TMat::from_rows(r)
}

/// The 2m-dimensional L_m^±(i): X_1 = J(b_±(i); m) ⊕ J(b_±(i); m)^{-1}, C_1 swapping halves.
pub fn build_l_m(tower: &Arc<Tower>, i: usize, m: usize, plus: bool) -> Result<MatrixSupermodule, SupermoduleError> {
    check_index(tower, i)?;
    if m == 0 {
        return Err(SupermoduleError::Precondition("m must be at least 1".into()));
    }
    let t = tower;
    let b = t.b_pm(i, plus);
    let mut j = TMat::scalar(t, m, &b);
    for k in 1..m {
        j.data[k][k - 1] = t.one();
    }
    let jinv = j.inverse().expect("Jordan block with nonzero eigenvalue");
    let z = TMat::zero(t, m, m);
    let e = TMat::identity(t, m);
    let mut mats = BTreeMap::new();
    mats.insert(Gen::X(1), TMat::blocks2(&j, &z, &z, &jinv));
    mats.insert(Gen::Xinv(1), TMat::blocks2(&jinv, &z, &z, &j));
    mats.insert(Gen::C(1), TMat::blocks2(&z, &e, &e, &z));
    let sign = if plus { "+" } else { "-" };
    MatrixSupermodule::new(format!("L{sign}_{m}({i})"), t, &[1], m, m, mats)
}

/// L(i) = L_1^+(i).
pub fn build_l(tower: &Arc<Tower>, i: usize) -> Result<MatrixSupermodule, SupermoduleError> {
    Ok(build_l_m(tower, i, 1, true)?.with_label(format!("L({i})")))
}

/// The odd involution θ v_0 = √−1 v_1, θ v_1 = −√−1 v_0 on L(i) for an end node i.
pub fn end_involution(tower: &Arc<Tower>, i: usize) -> Result<TMat, SupermoduleError> {
    if !is_end(tower.field().l, i) {
        return Err(SupermoduleError::Precondition(format!("L({i}) has type M")));
    }
    let s = tower.from_field(&sqrt_minus_one(tower.field()));
    Ok(rows(tower, vec![vec![tower.zero(), -&s], vec![s, tower.zero()]]))
}

/// R_m(i) = H_1 / (f(i)) as its own left regular representation, with even basis X^k and
/// odd basis X^k C_1, 0 ≤ k < deg. Here f(i) = (X + X^{-1} − q(i))^m, or (X − b(i))^m at
/// an end node.
pub fn build_r_m(tower: &Arc<Tower>, i: usize, m: usize) -> Result<MatrixSupermodule, SupermoduleError> {
    check_index(tower, i)?;
    if m == 0 {
        return Err(SupermoduleError::Precondition("m must be at least 1".into()));
    }
    let t = tower;
    let ctx = t.field().clone();
    // monic g with X^k f(X) = g(X) up to a unit, low degree first
    let base: Vec<FieldElem> = if is_end(ctx.l, i) {
        let b = t.b_pm(i, true).as_field().expect("end nodes have rational b").clone();
        vec![-&b, FieldElem::one(&ctx)]
    } else {
        vec![FieldElem::one(&ctx), -&q_of(&ctx, i), FieldElem::one(&ctx)]
    };
    let mut g = vec![FieldElem::one(&ctx)];
    for _ in 0..m {
        let mut next = vec![FieldElem::zero(&ctx); g.len() + base.len() - 1];
        for (a, x) in g.iter().enumerate() {
            for (c, y) in base.iter().enumerate() {
                next[a + c] = &next[a + c] + &(x * y);
            }
        }
        g = next;
    }
    let deg = g.len() - 1;
    // companion matrix of multiplication by X on 1, X, …, X^{deg−1}
    let mut comp = TMat::zero(t, deg, deg);
    for k in 0..deg {
        if k + 1 < deg {
            comp.data[k + 1][k] = t.one();
        } else {
            for r in 0..deg {
                comp.data[r][k] = t.from_field(&-&g[r]);
            }
        }
    }
    let cinv = comp.inverse().expect("g(0) is a unit");
    // column k of Q holds X^{-k}
    let mut cols: Vec<TVec> = Vec::new();
    let mut v: TVec = (0..deg).map(|r| if r == 0 { t.one() } else { t.zero() }).collect();
    for _ in 0..deg {
        cols.push(v.clone());
        v = cinv.apply(&v);
    }
    let qm = TMat::from_cols(t, deg, &cols);
    let z = TMat::zero(t, deg, deg);
    let mut mats = BTreeMap::new();
    // X·X^kC = X^{k+1}C, so X acts by the companion matrix on both halves
    mats.insert(Gen::X(1), TMat::blocks2(&comp, &z, &z, &comp));
    mats.insert(Gen::Xinv(1), TMat::blocks2(&cinv, &z, &z, &cinv));
    mats.insert(Gen::C(1), TMat::blocks2(&z, &qm, &qm, &z));
    MatrixSupermodule::new(format!("R_{m}({i})"), t, &[1], deg, deg, mats)
}

/// Direct sum of two modules over the same parabolic, even blocks first.
pub fn direct_sum(a: &MatrixSupermodule, b: &MatrixSupermodule) -> Result<MatrixSupermodule, SupermoduleError> {
    if a.mu() != b.mu() {
        return Err(SupermoduleError::Precondition("direct sum over different parabolics".into()));
    }
    let t = a.tower();
    let (ea, eb) = (a.even_dim(), b.even_dim());
    let mut mats = BTreeMap::new();
    for g in a.generators() {
        mats.insert(g, TMat::block_diag(&[a.mat(g), b.mat(g)]));
    }
    let raw = MatrixSupermodule::new(format!("{}+{}", a.label, b.label), t, a.mu(), a.dim() + b.dim(), 0, mats)?;
    let perm: Vec<usize> = (0..a.dim())
        .map(|k| if k < ea { k } else { k - ea + ea + eb })
        .chain((0..b.dim()).map(|k| if k < eb { ea + k } else { a.dim() + k }))
        .collect();
    Ok(raw.permuted(&perm, ea + eb))
}

fn check_pair(tower: &Arc<Tower>, i: usize, j: usize) -> Result<(), SupermoduleError> {
    check_index(tower, i)?;
    check_index(tower, j)?;
    let ctx = tower.field();
    if i.abs_diff(j) != 1 || q_of(ctx, i) == q_of(ctx, j) {
        return Err(SupermoduleError::Precondition(format!("({i},{j}) is not an adjacent pair with q(i) != q(j)")));
    }
    Ok(())
}

/// ξ/(q(j) − q(i)) as a tower element.
fn xi_over(tower: &Arc<Tower>, i: usize, j: usize) -> TowerElem {
    let ctx = tower.field();
    let d = (&q_of(ctx, j) - &q_of(ctx, i)).inv().expect("q(i) != q(j)");
    tower.from_field(&(&xi(ctx) * &d))
}

fn clifford_pair(t: &Arc<Tower>) -> (TMat, TMat) {
    let c1 = TMat::from_ints(t, &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let c2 = TMat::from_ints(t, &[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]);
    (c1, c2)
}

/// L(ij) on the basis X, Y, C_1X, C_1Y for adjacent i, j not both of type Q.
pub fn build_l_ij(tower: &Arc<Tower>, i: usize, j: usize) -> Result<MatrixSupermodule, SupermoduleError> {
    check_pair(tower, i, j)?;
    let l = tower.field().l;
    if is_end(l, i) && is_end(l, j) {
        return Err(SupermoduleError::Precondition("L(i) and L(j) both have type Q".into()));
    }
    let t = tower;
    let (bpi, bmi, bpj, bmj) = (t.b_pm(i, true), t.b_pm(i, false), t.b_pm(j, true), t.b_pm(j, false));
    let diag = |a: &TowerElem, b: &TowerElem| TMat::diag(t, &[a.clone(), b.clone(), a.clone(), b.clone()]);
    let (c1, c2) = clifford_pair(t);
    let z = t.zero();
    let t1 = rows(
        t,
        vec![
            vec![&bpj - &bmi, &bmi - &bmj, z.clone(), z.clone()],
            vec![&bpj - &bpi, &bmj - &bpi, z.clone(), z.clone()],
            vec![z.clone(), z.clone(), &bpj - &bpi, &bmj - &bpi],
            vec![z.clone(), z.clone(), &bmi - &bpj, &bmj - &bmi],
        ],
    )
    .scale(&xi_over(t, i, j));
    // C_1X_1 = X_1^{-1}C_1 puts b_∓(i) on C_1X and b_±(i) on C_1Y
    let x1 = |a: &TowerElem, b: &TowerElem| TMat::diag(t, &[a.clone(), b.clone(), b.clone(), a.clone()]);
    let mut mats = BTreeMap::new();
    mats.insert(Gen::X(1), x1(&bpi, &bmi));
    mats.insert(Gen::Xinv(1), x1(&bmi, &bpi));
    mats.insert(Gen::X(2), diag(&bpj, &bmj));
    mats.insert(Gen::Xinv(2), diag(&bmj, &bpj));
    mats.insert(Gen::C(1), c1);
    mats.insert(Gen::C(2), c2);
    mats.insert(Gen::T(1), t1);
    MatrixSupermodule::new(format!("L({i}{j})"), t, &[2], 2, 2, mats)
}

/// The realization W ⊂ L(ij) ⊗ L(i) of L(ij) ⊛ L(i) on X', Y', C_1X', C_1Y', for i an end
/// node and j its middle neighbour.
pub fn build_l_ij_star_i(tower: &Arc<Tower>, i: usize, j: usize) -> Result<MatrixSupermodule, SupermoduleError> {
    check_pair(tower, i, j)?;
    let l = tower.field().l;
    if !is_end(l, i) || is_end(l, j) {
        return Err(SupermoduleError::Precondition(format!("({i},{j}) must be (end, middle)")));
    }
    let t = tower;
    let a = t.b_pm(i, true);
    let (bpj, bmj) = (t.b_pm(j, true), t.b_pm(j, false));
    let s = t.from_field(&sqrt_minus_one(t.field()));
    let z = t.zero();
    let (c1, c2) = clifford_pair(t);
    let c3 = rows(
        t,
        vec![
            vec![z.clone(), z.clone(), s.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), -&s],
            vec![-&s, z.clone(), z.clone(), z.clone()],
            vec![z.clone(), s.clone(), z.clone(), z.clone()],
        ],
    );
    let t1 = rows(
        t,
        vec![
            vec![&bpj - &a, &a - &bmj, z.clone(), z.clone()],
            vec![&bpj - &a, &bmj - &a, z.clone(), z.clone()],
            vec![z.clone(), z.clone(), &bpj - &a, &bmj - &a],
            vec![z.clone(), z.clone(), &a - &bpj, &bmj - &a],
        ],
    )
    .scale(&xi_over(t, i, j));
    let ai = TMat::scalar(t, 4, &a);
    let mut mats = BTreeMap::new();
    mats.insert(Gen::X(1), ai.clone());
    mats.insert(Gen::Xinv(1), ai.clone());
    mats.insert(Gen::X(2), TMat::diag(t, &[bpj.clone(), bmj.clone(), bpj.clone(), bmj.clone()]));
    mats.insert(Gen::Xinv(2), TMat::diag(t, &[bmj.clone(), bpj.clone(), bmj, bpj]));
    mats.insert(Gen::X(3), ai.clone());
    mats.insert(Gen::Xinv(3), ai);
    mats.insert(Gen::C(1), c1);
    mats.insert(Gen::C(2), c2);
    mats.insert(Gen::C(3), c3);
    mats.insert(Gen::T(1), t1);
    MatrixSupermodule::new(format!("L({i}{j})*L({i})"), t, &[2, 1], 2, 2, mats)
}

/// `(X_last + X_last^{-1} − q(i))` on a module.
pub fn shifted_y(m: &MatrixSupermodule, k: usize, i: usize) -> TMat {
    let q = m.tower().q_of(i);
    m.mat(Gen::X(k)).add(m.mat(Gen::Xinv(k))).minus_scalar(&q)
}

/// The vectors Y_1..Y_4 of Ind_{H_{2,1}}^{H_3} (L(ij) ⊛ L(i)) spanning N_0, where
/// N = (X_3 + X_3^{-1} − q(i))M: Y_k uses T_2 ⊗ α_k and Y_{k+2} uses T_1T_2 ⊗ α_k.
pub fn iij_vectors(ind: &MatrixSupermodule, i: usize) -> Vec<TVec> {
    let p = shifted_y(ind, 3, i);
    [(1, 0), (1, 1), (2, 0), (2, 1)]
        .iter()
        .map(|&(coset, k)| p.apply(&ind.unit_vector(ind.index_of(&[coset, k]).expect("induced label"))))
        .collect()
}

/// L(iij) for i an end node and j its middle neighbour, realized as
/// N = (X_3 + X_3^{-1} − q(i))·Ind(L(ij) ⊛ L(i)) on the basis Y_1..Y_4, C_1Y_1..C_1Y_4.
pub fn build_l_iij(tower: &Arc<Tower>, i: usize, j: usize) -> Result<MatrixSupermodule, SupermoduleError> {
    let w = build_l_ij_star_i(tower, i, j)?;
    let ind = induced(&w)?;
    let ys = iij_vectors(&ind, i);
    let c1 = ind.mat(Gen::C(1));
    let cys: Vec<TVec> = ys.iter().map(|y| c1.apply(y)).collect();
    let m = ind.restrict_to(&ys, &cys, &[3], format!("L({i}{i}{j})"))?;
    let bad = iij_action_residuals(&m, i, j);
    if !bad.is_empty() {
        return Err(SupermoduleError::Precondition(format!("listed L(iij) action fails: {}", bad.join("; "))));
    }
    Ok(m)
}

/// The listed action of X_3, T_1, T_2 and C_3 on Y_1..Y_4 and C_1Y_k; returns the equations
/// that fail on `m`, whose basis must be Y_1..Y_4, C_1Y_1..C_1Y_4.
pub fn iij_action_residuals(m: &MatrixSupermodule, i: usize, j: usize) -> Vec<String> {
    let t = m.tower();
    let ctx = t.field();
    let a = t.b_pm(i, true);
    let (bpj, bmj) = (t.b_pm(j, true), t.b_pm(j, false));
    let s = t.from_field(&sqrt_minus_one(ctx));
    let k = xi_over(t, i, j);
    let xi_t = t.from_field(&xi(ctx));
    let one = t.one();
    let e = |idx: usize, c: &TowerElem| {
        let mut v = vec![t.zero(); 8];
        v[idx] = c.clone();
        v
    };
    let add = |u: &TVec, v: &TVec| -> TVec { u.iter().zip(v).map(|(x, y)| x + y).collect() };
    let mut bad = Vec::new();
    let mut expect = |name: &str, g: Gen, col: usize, want: TVec| {
        if m.mat(g).col(col) != want {
            bad.push(name.to_string());
        }
    };
    expect("Y3 = T1 Y1", Gen::T(1), 0, e(2, &one));
    expect("Y4 = T1 Y2", Gen::T(1), 1, e(3, &one));
    for (idx, b, bi) in [(0, &bpj, &bmj), (1, &bmj, &bpj), (2, &bpj, &bmj), (3, &bmj, &bpj)] {
        expect(&format!("X3 Y{}", idx + 1), Gen::X(3), idx, e(idx, b));
        expect(&format!("X3^-1 Y{}", idx + 1), Gen::Xinv(3), idx, e(idx, bi));
    }
    let u = &bpj - &a;
    let v = &a - &bmj;
    let c_big = &(&k * &k) * &(&u * &v);
    let one_m_s = &one - &s;
    let one_p_s = &one + &s;
    let ku = &k * &u;
    let kv = &k * &v;
    expect("T2 Y1", Gen::T(2), 0, add(&e(0, &ku), &e(1, &-&(&ku * &s))));
    expect("T2 Y2", Gen::T(2), 1, add(&e(0, &(&kv * &s)), &e(1, &-&kv)));
    let tail3 = add(&e(0, &(&c_big * &one_m_s)), &e(1, &(&c_big * &one_p_s)));
    expect("T2 Y3", Gen::T(2), 2, add(&add(&e(2, &ku), &e(3, &ku)), &tail3));
    let tail4 = add(&e(0, &(&c_big * &-&one_m_s)), &e(1, &(&c_big * &one_p_s)));
    expect("T2 Y4", Gen::T(2), 3, add(&add(&e(2, &kv), &e(3, &-&kv)), &tail4));
    // C_1Y_k sits at index 4 + k − 1
    expect("C3 Y1", Gen::C(3), 0, e(5, &-&one));
    expect("C3 Y2", Gen::C(3), 1, e(4, &one));
    expect("C3 Y3", Gen::C(3), 2, add(&e(7, &s), &e(5, &-&(&xi_t * &one_p_s))));
    expect("C3 Y4", Gen::C(3), 3, add(&e(6, &s), &e(4, &(&xi_t * &one_m_s))));
    bad
}

fn q_pow(t: &Arc<Tower>, k: i64) -> TowerElem {
    t.from_field(&FieldElem::zeta_pow(t.field(), k))
}

fn require_eighth_root(tower: &Arc<Tower>) -> Result<(), SupermoduleError> {
    if tower.field().l != 2 {
        return Err(SupermoduleError::Precondition("needs q a primitive 8th root of unity (l = 2)".into()));
    }
    Ok(())
}

/// L(01) at l = 2 on an even vector w_1 and an odd vector w_2.
pub fn build_l01(tower: &Arc<Tower>) -> Result<MatrixSupermodule, SupermoduleError> {
    require_eighth_root(tower)?;
    let t = tower;
    let z = t.zero();
    let q2 = q_pow(t, 2);
    let mut mats = BTreeMap::new();
    mats.insert(Gen::X(1), TMat::identity(t, 2));
    mats.insert(Gen::Xinv(1), TMat::identity(t, 2));
    mats.insert(Gen::X(2), TMat::identity(t, 2).neg());
    mats.insert(Gen::Xinv(2), TMat::identity(t, 2).neg());
    mats.insert(Gen::C(1), TMat::from_ints(t, &[&[0, 1], &[1, 0]]));
    mats.insert(Gen::C(2), rows(t, vec![vec![z.clone(), -&q2], vec![q2, z]]));
    mats.insert(Gen::T(1), TMat::diag(t, &[q_pow(t, 1), q_pow(t, 3)]));
    MatrixSupermodule::new("L(01)", t, &[2], 1, 1, mats)
}

/// Entries written as Σ c·q^k.
fn poly_entry(t: &Arc<Tower>, terms: &[(i64, i64)]) -> TowerElem {
    terms.iter().fold(t.zero(), |acc, &(c, k)| &acc + &q_pow(t, k).scale(&FieldElem::from_int(t.field(), c)))
}

fn poly_matrix(t: &Arc<Tower>, m: &[&[&[(i64, i64)]]]) -> TMat {
    TMat::from_rows(m.iter().map(|r| r.iter().map(|e| poly_entry(t, e)).collect()).collect())
}

/// L(001) at l = 2 on w_1..w_4 (even) and w_5..w_8 (odd).
pub fn build_l001(tower: &Arc<Tower>) -> Result<MatrixSupermodule, SupermoduleError> {
    require_eighth_root(tower)?;
    let t = tower;
    const O: &[(i64, i64)] = &[];
    let one: &[(i64, i64)] = &[(1, 0)];
    let mx1 = poly_matrix(
        t,
        &[
            &[one, O, &[(-2, 0)], &[(2, 1)]],
            &[O, one, &[(2, 1)], &[(-2, 2)]],
            &[&[(2, 0)], &[(2, -1)], one, O],
            &[&[(2, -1)], &[(-2, 2)], O, one],
        ],
    );
    let mx2 = poly_matrix(
        t,
        &[
            &[&[(-1, 0)], &[(-2, -1)], O, O],
            &[&[(2, 1)], &[(3, 0)], O, O],
            &[O, O, &[(-1, 0)], &[(2, 1)]],
            &[O, O, &[(-2, -1)], &[(3, 0)]],
        ],
    );
    let mc1 = poly_matrix(
        t,
        &[
            &[&[(1, 2)], O, &[(2, 2)], &[(2, -1)]],
            &[O, &[(1, 2)], &[(2, -1)], &[(-2, 0)]],
            &[&[(2, 2)], &[(2, 1)], &[(-1, 2)], O],
            &[&[(2, 1)], &[(2, 0)], O, &[(-1, 2)]],
        ],
    );
    let mc2 = poly_matrix(
        t,
        &[
            &[O, O, &[(1, 2)], O],
            &[O, O, &[(2, -1)], &[(-1, 0)]],
            &[&[(1, 2)], O, O, O],
            &[&[(2, 1)], one, O, O],
        ],
    );
    let mc3 = poly_matrix(
        t,
        &[&[O, O, &[(-1, 0)], O], &[O, O, O, &[(1, 2)]], &[one, O, O, O], &[O, &[(1, 2)], O, O]],
    );
    let mt1 = poly_matrix(
        t,
        &[
            &[&[(1, 3)], &[(1, 2)], &[(-1, 3)], &[(-1, 0)]],
            &[O, &[(1, 3)], O, &[(1, 1)]],
            &[&[(1, 3)], &[(1, 2)], &[(1, 3)], one],
            &[O, &[(1, 1)], O, &[(1, 3)]],
        ],
    );
    let mt2 = poly_matrix(t, &[&[&[(1, 3), (1, 1)], one], &[one, O]]);
    let z = TMat::zero(t, 4, 4);
    let two = TMat::scalar(t, 8, &t.from_int(2));
    let x1 = TMat::block_diag(&[&mx1, &mx1]);
    let x2 = TMat::block_diag(&[&mx2, &mx2]);
    let odd = |m: &TMat| TMat::blocks2(&z, m, &m.neg(), &z);
    let scale = (&t.one() + &q_pow(t, 2)).inv().expect("1 + q^2 is a unit");
    let mut mats = BTreeMap::new();
    mats.insert(Gen::Xinv(1), two.sub(&x1));
    mats.insert(Gen::Xinv(2), two.sub(&x2));
    mats.insert(Gen::X(1), x1);
    mats.insert(Gen::X(2), x2);
    mats.insert(Gen::X(3), TMat::identity(t, 8).neg());
    mats.insert(Gen::Xinv(3), TMat::identity(t, 8).neg());
    mats.insert(Gen::C(1), odd(&mc1));
    mats.insert(Gen::C(2), odd(&mc2));
    mats.insert(Gen::C(3), odd(&mc3));
    mats.insert(Gen::T(1), TMat::block_diag(&[&mt1, &mt1]).scale(&scale));
    mats.insert(Gen::T(2), TMat::block_diag(&[&mt2, &mt2, &mt2, &mt2]));
    MatrixSupermodule::new("L(001)", t, &[3], 4, 4, mats)
}

/// L(001) ⊛ L(0) at l = 2 on the basis of L(001): X_4^{±1} = 1, C_4 = −(swap halves).
pub fn build_l001_star_l0(tower: &Arc<Tower>) -> Result<MatrixSupermodule, SupermoduleError> {
    let base = build_l001(tower)?;
    let t = tower;
    let mut mats = BTreeMap::new();
    for g in base.generators() {
        mats.insert(g, base.mat(g).clone());
    }
    let z = TMat::zero(t, 4, 4);
    let e = TMat::identity(t, 4).neg();
    mats.insert(Gen::X(4), TMat::identity(t, 8));
    mats.insert(Gen::Xinv(4), TMat::identity(t, 8));
    mats.insert(Gen::C(4), TMat::blocks2(&z, &e, &e, &z));
    MatrixSupermodule::new("L(001)*L(0)", t, &[3, 1], 4, 4, mats)
}
