//! Matrices over a tower ring.

use super::{kernel_of, rref, FMat, Subspace};
use crate::scalars::{Tower, TowerElem};
use std::sync::Arc;

pub type TVec = Vec<TowerElem>;

/// Dense row-major matrix with entries in a [`Tower`].
#[derive(Clone, Debug, PartialEq)]
pub struct TMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<TowerElem>>,
    tower: Arc<Tower>,
}

impl TMat {
    pub fn zero(tower: &Arc<Tower>, rows: usize, cols: usize) -> Self {
        TMat { rows, cols, data: vec![vec![tower.zero(); cols]; rows], tower: tower.clone() }
    }

    pub fn identity(tower: &Arc<Tower>, n: usize) -> Self {
        Self::scalar(tower, n, &tower.one())
    }

    pub fn scalar(tower: &Arc<Tower>, n: usize, c: &TowerElem) -> Self {
        let mut m = Self::zero(tower, n, n);
        for i in 0..n {
            m.data[i][i] = c.clone();
        }
        m
    }

    /// Build from rows; the data must contain at least one entry.
    pub fn from_rows(data: Vec<Vec<TowerElem>>) -> Self {
        let tower = data.first().and_then(|r| r.first()).expect("from_rows needs an entry").tower().clone();
        Self::from_rows_in(&tower, data)
    }

    pub fn from_rows_in(tower: &Arc<Tower>, data: Vec<Vec<TowerElem>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        TMat { rows, cols, data, tower: tower.clone() }
    }

    /// Build from small integers.
    pub fn from_ints(tower: &Arc<Tower>, rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| tower.from_int(x)).collect()).collect())
    }

    pub fn diag(tower: &Arc<Tower>, d: &[TowerElem]) -> Self {
        let mut m = Self::zero(tower, d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.data[i][i] = x.clone();
        }
        m
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn mul(&self, o: &TMat) -> TMat {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let t = self.tower().clone();
        let mut out = TMat::zero(&t, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] = &out.data[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &TMat) -> TMat {
        TMat::from_rows_in(&self.tower, 
            self.data.iter().zip(&o.data).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect(),
        )
    }

    pub fn sub(&self, o: &TMat) -> TMat {
        TMat::from_rows_in(&self.tower, 
            self.data.iter().zip(&o.data).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect()).collect(),
        )
    }

    pub fn scale(&self, c: &TowerElem) -> TMat {
        TMat::from_rows_in(&self.tower, self.data.iter().map(|r| r.iter().map(|x| c * x).collect()).collect())
    }

    pub fn neg(&self) -> TMat {
        TMat::from_rows_in(&self.tower, self.data.iter().map(|r| r.iter().map(|x| -x).collect()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(TowerElem::is_zero))
    }

    pub fn transpose(&self) -> TMat {
        let mut m = TMat::from_rows_in(&self.tower, (0..self.cols).map(|j| self.data.iter().map(|r| r[j].clone()).collect()).collect());
        m.cols = self.rows;
        m
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> TMat {
        let mut m = TMat::from_rows_in(&self.tower, rows.iter().map(|&i| cols.iter().map(|&j| self.data[i][j].clone()).collect()).collect());
        m.cols = cols.len();
        m
    }

    /// Block diagonal sum.
    pub fn block_diag(blocks: &[&TMat]) -> TMat {
        let t = blocks[0].tower().clone();
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = TMat::zero(&t, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.data[r0 + i][c0 + j] = b.data[i][j].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// 2×2 block matrix [[a, b], [c, d]].
    pub fn blocks2(a: &TMat, b: &TMat, c: &TMat, d: &TMat) -> TMat {
        let mut data = Vec::with_capacity(a.rows + c.rows);
        for i in 0..a.rows {
            data.push(a.data[i].iter().chain(&b.data[i]).cloned().collect());
        }
        for i in 0..c.rows {
            data.push(c.data[i].iter().chain(&d.data[i]).cloned().collect());
        }
        let mut m = TMat::from_rows_in(&a.tower, data);
        m.cols = a.cols + b.cols;
        m
    }

    /// Kronecker product.
    pub fn kron(&self, o: &TMat) -> TMat {
        let t = self.tower().clone();
        let mut out = TMat::zero(&t, self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.data[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o.data[k][l];
                        if !b.is_zero() {
                            out.data[i * o.rows + k][j * o.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// The field matrix of the same linear map after restriction of scalars.
    /// Tower coordinate `a` of vector entry `i` becomes field coordinate `i·r + a`.
    pub fn restrict(&self) -> FMat {
        let rank = self.tower().rank();
        let ctx = self.tower().field().clone();
        let mut out = FMat::zero(&ctx, self.rows * rank, self.cols * rank);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self.data[i][j];
                if x.is_zero() {
                    continue;
                }
                if let Some(f) = x.as_field() {
                    for a in 0..rank {
                        out.data[i * rank + a][j * rank + a] = f.clone();
                    }
                    continue;
                }
                let block = x.regular_matrix();
                for a in 0..rank {
                    for b in 0..rank {
                        out.data[i * rank + a][j * rank + b] = block[a][b].clone();
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[TowerElem]) -> TVec {
        let t = self.tower().clone();
        self.data
            .iter()
            .map(|row| {
                let mut acc = t.zero();
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self − c·I`.
    pub fn minus_scalar(&self, c: &TowerElem) -> TMat {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m.data[i][i] = &m.data[i][i] - c;
        }
        m
    }

    pub fn pow(&self, e: usize) -> TMat {
        let mut acc = TMat::identity(self.tower(), self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
    }

    pub fn col(&self, j: usize) -> TVec {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(tower: &Arc<Tower>, rows: usize, cols: &[TVec]) -> TMat {
        let mut m = TMat::zero(tower, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m.data[i][j] = c[i].clone();
            }
        }
        m
    }

    /// `P⁻¹·self·P` for the permutation matrix sending basis vector `k` to `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> TMat {
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[perm[i]][perm[j]] = self.data[i][j].clone();
            }
        }
        out
    }

    /// Inverse over the tower field, if the matrix is invertible.
    pub fn inverse(&self) -> Option<TMat> {
        let n = self.rows;
        if n != self.cols {
            return None;
        }
        let t = self.tower().clone();
        let aug: Vec<TVec> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..n).map(|j| if i == j { t.one() } else { t.zero() }));
                row
            })
            .collect();
        let (red, pivots) = rref(aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(TMat::from_rows_in(&self.tower, red.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    /// Rank over the tower field, computed directly by elimination.
    pub fn rank(&self) -> usize {
        Subspace::spanned_by(self.cols, self.data.iter().cloned()).dim()
    }

    /// Rank computed after restriction of scalars: the field rank divided by the tower rank.
    /// `None` when the division is inexact, which signals that the tower is not a field.
    pub fn rank_by_restriction(&self) -> Option<usize> {
        let r = self.tower().rank();
        let fr = self.restrict().rank();
        (fr % r == 0).then_some(fr / r)
    }

    /// Null space basis over the tower field.
    pub fn kernel(&self) -> Vec<TVec> {
        kernel_of(self.data.clone(), self.cols, &self.tower().one())
    }

    /// Carry every entry into a split version of the same tower.
    pub fn import(&self, tower: &Arc<Tower>) -> TMat {
        TMat::from_rows_in(tower, self.data.iter().map(|r| r.iter().map(|x| tower.import(x)).collect()).collect())
    }
}

/// Restrict a tower vector to field coordinates.
pub fn restrict_vec(v: &[TowerElem]) -> super::FVec {
    v.iter().flat_map(TowerElem::active_coords).collect()
}
