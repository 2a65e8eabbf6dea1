//! Formal characters from simultaneous generalized eigenspaces of Y_k = X_k + X_k^{-1},
//! the restriction functors Δ_{i^m}, ε_i and Jordan block sizes.

use super::module::{refine_composition, MatrixSupermodule};
use crate::algebra::Gen;
use crate::error::SupermoduleError;
use crate::grothendieck::WordSum;
use crate::linalg::{TMat, TVec};
use crate::scalars::TowerElem;

/// d(w) = 2^{n − ⌊m/2⌋}, m the number of end-node letters: the dimension of L(w_1)⊛⋯⊛L(w_n).
pub fn word_dim(l: usize, w: &[usize]) -> usize {
    let m = w.iter().filter(|&&x| x == 0 || x + 1 == l).count();
    1 << (w.len() - m / 2)
}

/// Y_k restricted to the even block.
fn even_y(m: &MatrixSupermodule, k: usize) -> TMat {
    let e = m.even_indices();
    m.mat(Gen::X(k)).add(m.mat(Gen::Xinv(k))).select(&e, &e)
}

/// Express the columns of `a·basis` in `basis` (which spans an a-invariant subspace).
fn restrict_op(a: &TMat, basis: &[TVec]) -> TMat {
    let t = a.tower();
    let coords = super::module::Coordinates::new(t, a.rows, basis).expect("independent basis");
    let cols: Vec<TVec> = basis.iter().map(|b| coords.of(&a.apply(b)).expect("invariant subspace")).collect();
    TMat::from_cols(t, basis.len(), &cols)
}

/// Kernel of (a − λ)^{dim}, by squaring until the kernel stops growing.
fn generalized_kernel(a: &TMat, lambda: &TowerElem) -> Vec<TVec> {
    let b = a.minus_scalar(lambda);
    let mut p = b.clone();
    let mut dim = p.kernel().len();
    loop {
        let sq = p.mul(&p);
        let d = sq.kernel().len();
        if d == dim {
            return p.kernel();
        }
        p = sq;
        dim = d;
    }
}

fn refine(
    l: usize,
    ys: &[TMat],
    k: usize,
    word: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, usize)>,
) -> Result<(), SupermoduleError> {
    let dv = ys[0].rows;
    if k == ys.len() {
        out.push((word.clone(), dv));
        return Ok(());
    }
    let t = ys[0].tower().clone();
    let mut found = 0;
    for i in 0..l {
        let lambda = t.q_of(i);
        if ys[k].minus_scalar(&lambda).rank() == dv {
            continue;
        }
        let basis = generalized_kernel(&ys[k], &lambda);
        found += basis.len();
        let sub: Vec<TMat> = ys.iter().map(|y| restrict_op(y, &basis)).collect();
        word.push(i);
        refine(l, &sub, k + 1, word, out)?;
        word.pop();
    }
    if found != dv {
        return Err(SupermoduleError::NonIntegral(k + 1));
    }
    Ok(())
}

/// Dimensions of the simultaneous generalized eigenspaces of (Y_1, …, Y_n) on the even
/// block, keyed by the word of eigenvalue indices.
pub fn even_weight_dims(m: &MatrixSupermodule) -> Result<Vec<(Vec<usize>, usize)>, SupermoduleError> {
    let l = m.ctx().l;
    let mut out = Vec::new();
    if m.even_dim() == 0 {
        return Ok(out);
    }
    let ys: Vec<TMat> = (1..=m.n()).map(|k| even_y(m, k)).collect();
    refine(l, &ys, 0, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// ch M = Σ_w (dim M[w] / d(w))·[w], where dim M[w] is twice the even part (C_1 swaps parity
/// and commutes with every Y_k).
pub fn formal_character(m: &MatrixSupermodule) -> Result<WordSum, SupermoduleError> {
    let l = m.ctx().l;
    if m.n() == 0 {
        return Ok(WordSum::term(&[], m.dim() as i64));
    }
    let mut ch = WordSum::zero();
    let mut total = 0;
    for (w, d) in even_weight_dims(m)? {
        let dim = 2 * d;
        let dw = word_dim(l, &w);
        if dim % dw != 0 {
            return Err(SupermoduleError::InexactDimension { word: w, dim, divisor: dw });
        }
        total += dim;
        ch.add_term(w, (dim / dw) as i64);
    }
    debug_assert_eq!(total, m.dim());
    Ok(ch)
}

/// Basis of the joint generalized q(i)-eigenspace of Y_k for n − m < k ≤ n inside the
/// block with the given indices, padded to full vectors.
fn joint_eigenspace(md: &MatrixSupermodule, idx: &[usize], i: usize, m: usize) -> Vec<TVec> {
    let t = md.tower();
    let lambda = t.q_of(i);
    let n = md.n();
    let mut stacked: Vec<TVec> = Vec::new();
    for k in (n - m + 1)..=n {
        let y = md.mat(Gen::X(k)).add(md.mat(Gen::Xinv(k))).select(idx, idx).minus_scalar(&lambda);
        let mut p = y.clone();
        // (y)^{2^s} with 2^s ≥ block size
        let mut reach = 1;
        while reach < idx.len() {
            p = p.mul(&p);
            reach *= 2;
        }
        stacked.extend(p.data);
    }
    let kernel = if m == 0 {
        (0..idx.len()).map(|a| (0..idx.len()).map(|b| if a == b { t.one() } else { t.zero() }).collect()).collect()
    } else {
        crate::linalg::kernel_of(stacked, idx.len(), &t.one())
    };
    kernel
        .into_iter()
        .map(|v| {
            let mut full = vec![t.zero(); md.dim()];
            for (pos, &j) in idx.iter().enumerate() {
                full[j] = v[pos].clone();
            }
            full
        })
        .collect()
}

/// Δ_{i^m} M as a module over the parabolic refined at n − m.
pub fn delta_im(md: &MatrixSupermodule, i: usize, m: usize) -> Result<MatrixSupermodule, SupermoduleError> {
    let n = md.n();
    if m > n || i >= md.ctx().l {
        return Err(SupermoduleError::Precondition(format!("Δ_{{{i}^{m}}} on a rank {n} module")));
    }
    if m == 0 {
        return Ok(md.clone());
    }
    let even = joint_eigenspace(md, &md.even_indices(), i, m);
    let odd = joint_eigenspace(md, &md.odd_indices(), i, m);
    let nu = refine_composition(md.mu(), n - m);
    md.restrict_to(&even, &odd, &nu, format!("Delta_{i}^{m}({})", md.label))
}

/// ε_i(M) = max{m : Δ_{i^m} M ≠ 0}.
pub fn epsilon_i(md: &MatrixSupermodule, i: usize) -> usize {
    let mut best = 0;
    for m in 1..=md.n() {
        let d = joint_eigenspace(md, &md.even_indices(), i, m).len() + joint_eigenspace(md, &md.odd_indices(), i, m).len();
        if d == 0 {
            break;
        }
        best = m;
    }
    best
}

/// Largest Jordan block of X_n + X_n^{-1} at q(i), or of X_n at b(i) for an end node,
/// read off from the ranks of successive powers.
pub fn max_jordan_block(md: &MatrixSupermodule, i: usize) -> usize {
    let n = md.n();
    let t = md.tower();
    let l = md.ctx().l;
    let e = md.even_indices();
    let (a, lambda) = if i == 0 || i + 1 == l {
        (md.mat(Gen::X(n)).select(&e, &e), t.b_pm(i, true))
    } else {
        (even_y(md, n), t.q_of(i))
    };
    let b = a.minus_scalar(&lambda);
    let mut p = b.clone();
    let mut prev = a.rows;
    let mut k = 0;
    loop {
        let r = p.rank();
        if r == prev {
            return k;
        }
        prev = r;
        k += 1;
        p = p.mul(&b);
    }
}
