//! Exact linear algebra over Q(ζ) and over tower fields.

mod tmat;

pub use tmat::{restrict_vec, TMat, TVec};

use crate::scalars::{tower_invert, FieldCtx, FieldElem, TowerElem};
use std::sync::Arc;

/// Exact scalars supporting Gaussian elimination.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
}

impl Scalar for FieldElem {
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        FieldElem::zero(self.ctx())
    }
    fn one_like(&self) -> Self {
        FieldElem::one(self.ctx())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

impl Scalar for TowerElem {
    fn is_zero(&self) -> bool {
        TowerElem::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        self.tower().zero()
    }
    fn one_like(&self) -> Self {
        self.tower().one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        tower_invert(self).ok()
    }
}

pub type FVec = Vec<FieldElem>;

pub fn zero_vec(ctx: &Arc<FieldCtx>, n: usize) -> FVec {
    vec![FieldElem::zero(ctx); n]
}

pub fn is_zero_vec<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(S::is_zero)
}

pub fn add_vec(a: &[FieldElem], b: &[FieldElem]) -> FVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[FieldElem], b: &[FieldElem]) -> FVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec<S: Scalar>(c: &S, a: &[S]) -> Vec<S> {
    a.iter().map(|x| if x.is_zero() { x.clone() } else { c.mul(x) }).collect()
}

/// `a += c·b`, skipping zero entries of `b`.
fn axpy<S: Scalar>(a: &mut [S], c: &S, b: &[S]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.add(&c.mul(y));
        }
    }
}

/// Dense row-major matrix over the field.
#[derive(Clone, Debug, PartialEq)]
pub struct FMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FVec>,
}

impl FMat {
    pub fn zero(ctx: &Arc<FieldCtx>, rows: usize, cols: usize) -> Self {
        FMat { rows, cols, data: vec![zero_vec(ctx, cols); rows] }
    }

    pub fn identity(ctx: &Arc<FieldCtx>, n: usize) -> Self {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            m.data[i][i] = FieldElem::one(ctx);
        }
        m
    }

    pub fn from_rows(data: Vec<FVec>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        FMat { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(ctx: &Arc<FieldCtx>, rows: usize, cols: &[FVec]) -> Self {
        let mut m = Self::zero(ctx, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m.data[i][j] = c[i].clone();
            }
        }
        m
    }

    pub fn apply(&self, v: &[FieldElem]) -> FVec {
        self.data
            .iter()
            .map(|row| {
                let mut acc: Option<FieldElem> = None;
                for (a, b) in row.iter().zip(v) {
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    acc = Some(match acc {
                        Some(s) => &s + &p,
                        None => p,
                    });
                }
                acc.unwrap_or_else(|| FieldElem::zero(v[0].ctx()))
            })
            .collect()
    }

    pub fn mul(&self, other: &FMat) -> FMat {
        let ctx = self.data[0][0].ctx().clone();
        let mut out = FMat::zero(&ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                axpy(&mut out.data[i], a, &other.data[k]);
            }
        }
        out
    }

    pub fn sub(&self, other: &FMat) -> FMat {
        FMat::from_rows(self.data.iter().zip(&other.data).map(|(a, b)| sub_vec(a, b)).collect())
    }

    pub fn add(&self, other: &FMat) -> FMat {
        FMat::from_rows(self.data.iter().zip(&other.data).map(|(a, b)| add_vec(a, b)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| is_zero_vec(r))
    }

    pub fn transpose(&self) -> FMat {
        FMat::from_rows((0..self.cols).map(|j| self.data.iter().map(|r| r[j].clone()).collect()).collect())
    }

    pub fn rank(&self) -> usize {
        let mut s = Subspace::new(self.cols);
        for r in &self.data {
            s.insert(r.clone());
        }
        s.dim()
    }

    /// Basis of {x : A x = 0}.
    pub fn kernel(&self) -> Vec<FVec> {
        let Some(one) = self.data.first().and_then(|r| r.first()).map(FieldElem::one_like) else {
            return Vec::new();
        };
        kernel_of(self.data.clone(), self.cols, &one)
    }

    /// Some x with A x = b, if the system is consistent.
    pub fn solve(&self, b: &[FieldElem]) -> Option<FVec> {
        let ctx = b[0].ctx().clone();
        let aug: Vec<FVec> = self
            .data
            .iter()
            .zip(b)
            .map(|(r, bi)| {
                let mut r = r.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        let (rref, pivots) = rref(aug);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = zero_vec(&ctx, self.cols);
        for (row, &p) in rref.iter().zip(&pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
///
/// Panics if a nonzero pivot is not invertible, which cannot happen over a field.
pub fn rref<S: Scalar>(mut rows: Vec<Vec<S>>) -> (Vec<Vec<S>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot is invertible");
        rows[r] = scale_vec(&inv, &rows[r]);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].neg();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of the null space of the matrix with the given rows and `ncols` columns.
pub fn kernel_of<S: Scalar>(rows: Vec<Vec<S>>, ncols: usize, one: &S) -> Vec<Vec<S>> {
    let (rref, pivots) = if rows.is_empty() { (Vec::new(), Vec::new()) } else { rref(rows) };
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![one.zero_like(); ncols];
            v[f] = one.clone();
            for (row, &p) in rref.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    v[p] = row[f].neg();
                }
            }
            v
        })
        .collect()
}

/// A subspace of S^n held as echelon rows with normalized pivots.
#[derive(Clone, Debug)]
pub struct Subspace<S: Scalar = FieldElem> {
    ambient: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn new(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by(ambient: usize, vectors: impl IntoIterator<Item = Vec<S>>) -> Self {
        let mut s = Self::new(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after elimination against the stored rows.
    pub fn reduce(&self, mut v: Vec<S>) -> Vec<S> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].neg();
                axpy(&mut v, &f, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[S]) -> bool {
        is_zero_vec(&self.reduce(v.to_vec()))
    }

    /// Add `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<S>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].inverse().expect("nonzero pivot is invertible");
        let v = scale_vec(&inv, &v);
        // keep earlier rows reduced at the new pivot
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].neg();
                axpy(row, &f, &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains_space(&self, other: &Subspace<S>) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Coordinates of a member `v` in the stored basis; `None` if `v` is outside.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(ctx: &Arc<FieldCtx>, rows: &[&[i64]]) -> FMat {
        FMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| FieldElem::from_int(ctx, x)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let ctx = FieldCtx::get(2);
        let m = ints(&ctx, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&m.apply(&k[0])));
    }

    #[test]
    fn solve_consistent_and_not() {
        let ctx = FieldCtx::get(3);
        let m = ints(&ctx, &[&[1, 1], &[1, -1]]);
        let b = vec![FieldElem::from_int(&ctx, 3), FieldElem::from_int(&ctx, 1)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        let s = ints(&ctx, &[&[1, 1], &[2, 2]]);
        assert!(s.solve(&b).is_none());
    }

    #[test]
    fn subspace_membership() {
        let ctx = FieldCtx::get(2);
        let q = crate::scalars::q(&ctx);
        let one = FieldElem::one(&ctx);
        let zero = FieldElem::zero(&ctx);
        let mut s = Subspace::new(3);
        assert!(s.insert(vec![one.clone(), q.clone(), zero.clone()]));
        assert!(s.insert(vec![zero.clone(), one.clone(), one.clone()]));
        assert!(!s.insert(vec![one.clone(), &q + &one, one.clone()]));
        assert_eq!(s.dim(), 2);
        assert!(!s.contains(&[zero.clone(), zero.clone(), one.clone()]));
    }
}
