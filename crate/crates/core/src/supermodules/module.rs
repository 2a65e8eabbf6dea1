//! Supermodules over parabolic subalgebras H_μ given by generator matrices.
//!
//! The basis is ordered even vectors first. Every basis vector carries a label, a short
//! index path recording where it came from (`[k]` for builders, concatenated labels for
//! tensor products, `[coset, …]` for induced modules).

use crate::algebra::{perm, sigma, Gen, HElement, Monomial};
use crate::error::SupermoduleError;
use crate::linalg::{kernel_of, rref, Subspace, TMat, TVec};
use crate::scalars::{xi, FieldCtx, Tower, TowerElem};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// Indices j such that T_j lies in H_μ.
pub fn t_indices(mu: &[usize]) -> Vec<usize> {
    perm::block_bounds(mu).into_iter().flat_map(|(a, b)| (a + 1)..b).collect()
}

/// The generators of H_μ in a fixed order.
pub fn generators(mu: &[usize]) -> Vec<Gen> {
    let n: usize = mu.iter().sum();
    let mut g = Vec::new();
    for k in 1..=n {
        g.extend([Gen::X(k), Gen::Xinv(k), Gen::C(k)]);
    }
    g.extend(t_indices(mu).into_iter().map(Gen::T));
    g
}

/// Split the block of μ containing position `at` (0-based cut point).
pub fn refine_composition(mu: &[usize], at: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for (a, b) in perm::block_bounds(mu) {
        if a < at && at < b {
            out.push(at - a);
            out.push(b - at);
        } else {
            out.push(b - a);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperType {
    M,
    Q,
}

impl fmt::Display for SuperType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuperType::M => write!(f, "M"),
            SuperType::Q => write!(f, "Q"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatrixSupermodule {
    pub label: String,
    n: usize,
    mu: Vec<usize>,
    even_dim: usize,
    odd_dim: usize,
    tower: Arc<Tower>,
    mats: BTreeMap<Gen, TMat>,
    labels: Vec<Vec<usize>>,
}

impl MatrixSupermodule {
    /// Assemble a module; missing X_k^{-1} matrices are computed by inversion.
    pub fn new(
        label: impl Into<String>,
        tower: &Arc<Tower>,
        mu: &[usize],
        even_dim: usize,
        odd_dim: usize,
        mut mats: BTreeMap<Gen, TMat>,
    ) -> Result<Self, SupermoduleError> {
        let n: usize = mu.iter().sum();
        let dim = even_dim + odd_dim;
        for k in 1..=n {
            if !mats.contains_key(&Gen::Xinv(k)) {
                let x = mats.get(&Gen::X(k)).ok_or_else(|| SupermoduleError::Precondition(format!("missing X{k}")))?;
                let inv = x.inverse().ok_or_else(|| SupermoduleError::Precondition(format!("X{k} is singular")))?;
                mats.insert(Gen::Xinv(k), inv);
            }
        }
        for g in generators(mu) {
            let m = mats.get(&g).ok_or_else(|| SupermoduleError::Precondition(format!("missing {g}")))?;
            if m.rows != dim || m.cols != dim {
                return Err(SupermoduleError::Precondition(format!("{g} has shape {}x{}", m.rows, m.cols)));
            }
            if m.tower() != tower {
                return Err(SupermoduleError::TowerMismatch);
            }
        }
        let gens = generators(mu);
        mats.retain(|g, _| gens.contains(g));
        Ok(MatrixSupermodule {
            label: label.into(),
            n,
            mu: mu.to_vec(),
            even_dim,
            odd_dim,
            tower: tower.clone(),
            mats,
            labels: (0..dim).map(|k| vec![k]).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_dim
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.tower.field()
    }

    pub fn generators(&self) -> Vec<Gen> {
        generators(&self.mu)
    }

    pub fn has(&self, g: Gen) -> bool {
        self.mats.contains_key(&g)
    }

    /// Matrix of a generator. Panics if the generator is outside H_μ.
    pub fn mat(&self, g: Gen) -> &TMat {
        self.mats.get(&g).unwrap_or_else(|| panic!("{g} does not act on {}", self.label))
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn index_of(&self, label: &[usize]) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<Vec<usize>>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Parity of basis vector `k`.
    pub fn parity(&self, k: usize) -> u32 {
        u32::from(k >= self.even_dim)
    }

    /// The parity operator (+1 on even vectors, −1 on odd ones).
    pub fn parity_matrix(&self) -> TMat {
        let t = &self.tower;
        let d: Vec<TowerElem> = (0..self.dim()).map(|k| if self.parity(k) == 0 { t.one() } else { t.from_int(-1) }).collect();
        TMat::diag(t, &d)
    }

    pub fn unit_vector(&self, k: usize) -> TVec {
        let mut v = vec![self.tower.zero(); self.dim()];
        v[k] = self.tower.one();
        v
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.even_dim).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (self.even_dim..self.dim()).collect()
    }

    /// Matrix of an element of H_μ.
    pub fn act(&self, h: &HElement) -> Result<TMat, SupermoduleError> {
        Evaluator::new(self).act(h)
    }

    /// Every violated defining relation, plus parity-structure violations; empty means the
    /// matrices define an H_μ-supermodule.
    pub fn verify_relations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let n = self.n;
        let t = &self.tower;
        let id = TMat::identity(t, self.dim());
        let x = |k| self.mat(Gen::X(k));
        let xi_ = |k| self.mat(Gen::Xinv(k));
        let c = |k| self.mat(Gen::C(k));
        let tt = |k| self.mat(Gen::T(k));
        let xi_t = t.from_field(&xi(self.ctx()));
        let mut check = |ok: bool, what: String| {
            if !ok {
                bad.push(what);
            }
        };
        for g in self.generators() {
            let m = self.mat(g);
            let ok = (0..self.dim()).all(|r| {
                (0..self.dim()).all(|s| {
                    let crosses = self.parity(r) != self.parity(s);
                    m.data[r][s].is_zero() || crosses == g.is_odd()
                })
            });
            check(ok, format!("parity: {g} does not respect the grading"));
        }
        for i in 1..=n {
            check(x(i).mul(xi_(i)) == id && xi_(i).mul(x(i)) == id, format!("(1) X{i}*X{i}^-1 = 1"));
            for j in (i + 1)..=n {
                check(x(i).mul(x(j)) == x(j).mul(x(i)), format!("(1) X{i}X{j} = X{j}X{i}"));
            }
        }
        for i in 1..=n {
            check(c(i).mul(c(i)) == id, format!("(2) C{i}^2 = 1"));
            for j in (i + 1)..=n {
                check(c(i).mul(c(j)).add(&c(j).mul(c(i))).is_zero(), format!("(2) C{i}C{j} + C{j}C{i} = 0"));
            }
        }
        let ts = t_indices(&self.mu);
        for &i in &ts {
            check(tt(i).mul(tt(i)) == tt(i).scale(&xi_t).add(&id), format!("(3) T{i}^2 = xi*T{i} + 1"));
            for &j in &ts {
                if j > i + 1 {
                    check(tt(i).mul(tt(j)) == tt(j).mul(tt(i)), format!("(3) T{i}T{j} = T{j}T{i}"));
                }
                if j == i + 1 {
                    let a = tt(i).mul(tt(j)).mul(tt(i));
                    let b = tt(j).mul(tt(i)).mul(tt(j));
                    check(a == b, format!("(3) T{i}T{j}T{i} = T{j}T{i}T{j}"));
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    check(c(i).mul(x(i)) == xi_(i).mul(c(i)), format!("(4) C{i}X{i} = X{i}^-1C{i}"));
                    check(c(i).mul(xi_(i)) == x(i).mul(c(i)), format!("(4) C{i}X{i}^-1 = X{i}C{i}"));
                } else {
                    check(c(i).mul(x(j)) == x(j).mul(c(i)), format!("(4) C{i}X{j} = X{j}C{i}"));
                    check(c(i).mul(xi_(j)) == xi_(j).mul(c(i)), format!("(4) C{i}X{j}^-1 = X{j}^-1C{i}"));
                }
            }
        }
        for &i in &ts {
            check(tt(i).mul(c(i)) == c(i + 1).mul(tt(i)), format!("(5) T{i}C{i} = C{}T{i}", i + 1));
            let lhs = tt(i).add(&c(i).mul(c(i + 1)).scale(&xi_t)).mul(x(i)).mul(tt(i));
            check(lhs == *x(i + 1), format!("(5) (T{i}+xi*C{i}C{})X{i}T{i} = X{}", i + 1, i + 1));
            for j in 1..=n {
                if j == i || j == i + 1 {
                    continue;
                }
                check(tt(i).mul(c(j)) == c(j).mul(tt(i)), format!("(6) T{i}C{j} = C{j}T{i}"));
                check(tt(i).mul(x(j)) == x(j).mul(tt(i)), format!("(6) T{i}X{j} = X{j}T{i}"));
                check(tt(i).mul(xi_(j)) == xi_(j).mul(tt(i)), format!("(6) T{i}X{j}^-1 = X{j}^-1T{i}"));
            }
        }
        bad
    }

    /// The module obtained by conjugating every generator by a basis permutation;
    /// old basis vector `k` becomes new vector `perm[k]`.
    pub(crate) fn permuted(self, perm: &[usize], even_dim: usize) -> Self {
        let mut labels = vec![Vec::new(); self.dim()];
        for (k, l) in self.labels.iter().enumerate() {
            labels[perm[k]] = l.clone();
        }
        let mats = self.mats.iter().map(|(g, m)| (*g, m.permuted(perm))).collect();
        let dim = self.dim();
        MatrixSupermodule { mats, labels, even_dim, odd_dim: dim - even_dim, ..self }
    }

    /// The submodule spanned by the given homogeneous vectors, in that basis, as an
    /// H_ν-module for a parabolic ν refining μ (or equal to it).
    pub fn restrict_to(
        &self,
        even: &[TVec],
        odd: &[TVec],
        nu: &[usize],
        label: impl Into<String>,
    ) -> Result<Self, SupermoduleError> {
        for v in even {
            if self.odd_indices().iter().any(|&k| !v[k].is_zero()) {
                return Err(SupermoduleError::Precondition("even vector has odd components".into()));
            }
        }
        for v in odd {
            if self.even_indices().iter().any(|&k| !v[k].is_zero()) {
                return Err(SupermoduleError::Precondition("odd vector has even components".into()));
            }
        }
        let basis: Vec<TVec> = even.iter().chain(odd).cloned().collect();
        let coords = Coordinates::new(&self.tower, self.dim(), &basis)?;
        let mut mats = BTreeMap::new();
        for g in generators(nu) {
            let m = self.mat(g);
            let cols: Result<Vec<TVec>, _> = basis
                .iter()
                .map(|b| coords.of(&m.apply(b)).ok_or_else(|| SupermoduleError::NotInvariant(g.to_string())))
                .collect();
            mats.insert(g, TMat::from_cols(&self.tower, basis.len(), &cols?));
        }
        MatrixSupermodule::new(label, &self.tower, nu, even.len(), odd.len(), mats)
    }

    /// The quotient by the submodule spanned by the given vectors (any spanning set).
    pub fn quotient(&self, span: &[TVec], label: impl Into<String>) -> Result<Self, SupermoduleError> {
        let sub: Subspace<TowerElem> = Subspace::spanned_by(self.dim(), span.iter().cloned());
        for g in self.generators() {
            let m = self.mat(g);
            if sub.basis().iter().any(|v| !sub.contains(&m.apply(v))) {
                return Err(SupermoduleError::NotInvariant(g.to_string()));
            }
        }
        let rest: Vec<usize> = (0..self.dim()).filter(|k| !sub.pivots().contains(k)).collect();
        let even = rest.iter().filter(|&&k| k < self.even_dim).count();
        let mut mats = BTreeMap::new();
        for g in self.generators() {
            let m = self.mat(g);
            let cols: Vec<TVec> = rest
                .iter()
                .map(|&k| {
                    let r = sub.reduce(m.col(k));
                    rest.iter().map(|&j| r[j].clone()).collect()
                })
                .collect();
            mats.insert(g, TMat::from_cols(&self.tower, rest.len(), &cols));
        }
        let labels = rest.iter().map(|&k| self.labels[k].clone()).collect();
        Ok(MatrixSupermodule::new(label, &self.tower, &self.mu, even, rest.len() - even, mats)?.with_labels(labels))
    }

    /// The σ-twist: g acts as σ(g). The result is a module over H_{μ reversed}.
    pub fn sigma_twist(&self) -> Result<Self, SupermoduleError> {
        let nu: Vec<usize> = self.mu.iter().rev().copied().collect();
        let mut ev = Evaluator::new(self);
        let mut mats = BTreeMap::new();
        for g in generators(&nu) {
            let h = sigma(&HElement::gen(self.ctx(), self.n, g));
            mats.insert(g, ev.act(&h)?);
        }
        let m = MatrixSupermodule::new(format!("{}^sigma", self.label), &self.tower, &nu, self.even_dim, self.odd_dim, mats)?;
        Ok(m.with_labels(self.labels.clone()))
    }

    /// Twist by the automorphism X_k ↦ −X_k, which exchanges q(i) and −q(i).
    pub fn sign_twist(&self) -> Self {
        let mut out = self.clone();
        for (g, m) in out.mats.iter_mut() {
            if matches!(g, Gen::X(_) | Gen::Xinv(_)) {
                *m = m.neg();
            }
        }
        out.label = format!("{}^-", self.label);
        out
    }

    /// Basis of the homomorphisms `self → other` of the given parity, that is maps Θ with
    /// Θ·g = (−1)^{parity·|g|} g·Θ for every generator.
    pub fn hom_space(&self, other: &MatrixSupermodule, parity: u32) -> Result<Vec<TMat>, SupermoduleError> {
        if self.mu != other.mu {
            return Err(SupermoduleError::Precondition("modules over different parabolics".into()));
        }
        if self.tower != other.tower {
            return Err(SupermoduleError::TowerMismatch);
        }
        let (dm, dn) = (self.dim(), other.dim());
        let mut unknown = HashMap::new();
        let mut slots = Vec::new();
        for r in 0..dn {
            for c in 0..dm {
                if (other.parity(r) + self.parity(c)) % 2 == parity {
                    unknown.insert((r, c), slots.len());
                    slots.push((r, c));
                }
            }
        }
        let t = &self.tower;
        let mut eqs: Subspace<TowerElem> = Subspace::new(slots.len());
        'outer: for g in self.generators() {
            let (gm, gn) = (self.mat(g), other.mat(g));
            let s = if parity == 1 && g.is_odd() { t.from_int(-1) } else { t.one() };
            for r in 0..dn {
                for c in 0..dm {
                    // (Θ G_M − s G_N Θ)[r][c]
                    let mut row = vec![t.zero(); slots.len()];
                    let mut any = false;
                    for k in 0..dm {
                        if let Some(&u) = unknown.get(&(r, k)) {
                            if !gm.data[k][c].is_zero() {
                                row[u] = &row[u] + &gm.data[k][c];
                                any = true;
                            }
                        }
                    }
                    for k in 0..dn {
                        if let Some(&u) = unknown.get(&(k, c)) {
                            if !gn.data[r][k].is_zero() {
                                row[u] = &row[u] - &(&s * &gn.data[r][k]);
                                any = true;
                            }
                        }
                    }
                    if any {
                        eqs.insert(row);
                        if eqs.dim() == slots.len() {
                            break 'outer;
                        }
                    }
                }
            }
        }
        let sols = kernel_of(eqs.basis().to_vec(), slots.len(), &t.one());
        Ok(sols
            .into_iter()
            .map(|v| {
                let mut m = TMat::zero(t, dn, dm);
                for (u, &(r, c)) in slots.iter().enumerate() {
                    m.data[r][c] = v[u].clone();
                }
                m
            })
            .collect())
    }

    /// Type of an irreducible module: Q iff it has an invertible odd endomorphism.
    pub fn super_type(&self) -> Result<SuperType, SupermoduleError> {
        let sols = self.hom_space(self, 1)?;
        Ok(if has_invertible(&self.tower, &sols, self.dim()) { SuperType::Q } else { SuperType::M })
    }

    /// Whether an even isomorphism `self → other` exists.
    pub fn evenly_isomorphic(&self, other: &MatrixSupermodule) -> Result<bool, SupermoduleError> {
        if self.dim() != other.dim() || self.even_dim != other.even_dim {
            return Ok(false);
        }
        let sols = self.hom_space(other, 0)?;
        Ok(has_invertible(&self.tower, &sols, self.dim()))
    }

    /// An odd involution super-commuting with the action, if one exists over the tower.
    pub fn odd_involution(&self) -> Result<Option<TMat>, SupermoduleError> {
        let sols = self.hom_space(self, 1)?;
        let t = &self.tower;
        for theta in sols {
            let sq = theta.mul(&theta);
            let c = sq.data[0][0].clone();
            if c.is_zero() || sq != TMat::scalar(t, self.dim(), &c) {
                continue;
            }
            let Some(cf) = c.as_field() else { continue };
            if let Some(root) = crate::scalars::census::field_sqrt(cf) {
                let inv = root.inv().expect("nonzero root");
                return Ok(Some(theta.scale(&t.from_field(&inv))));
            }
        }
        Ok(None)
    }
}

/// Whether the span of `sols` contains an invertible matrix. A nonzero polynomial (the
/// determinant) cannot vanish at every point of a large enough grid, so a few
/// deterministic combinations decide it in practice.
fn has_invertible(t: &Arc<Tower>, sols: &[TMat], dim: usize) -> bool {
    if sols.is_empty() {
        return false;
    }
    if sols.iter().any(|m| m.rank() == dim) {
        return true;
    }
    (1..=4i64).any(|s| {
        let combo = sols.iter().enumerate().fold(TMat::zero(t, dim, dim), |acc, (k, m)| {
            acc.add(&m.scale(&t.from_int((k as i64 + 1).pow(s as u32) + s)))
        });
        combo.rank() == dim
    })
}

/// Coordinates with respect to a linearly independent family in T^dim.
pub(crate) struct Coordinates {
    basis: Vec<TVec>,
    rows: Vec<usize>,
    inv: TMat,
}

impl Coordinates {
    pub(crate) fn new(tower: &Arc<Tower>, dim: usize, basis: &[TVec]) -> Result<Self, SupermoduleError> {
        if basis.is_empty() {
            return Ok(Coordinates { basis: Vec::new(), rows: Vec::new(), inv: TMat::zero(tower, 0, 0) });
        }
        let (_, pivots) = rref(basis.to_vec());
        if pivots.len() < basis.len() {
            return Err(SupermoduleError::Precondition("basis vectors are linearly dependent".into()));
        }
        let square = TMat::from_rows(pivots.iter().map(|&r| basis.iter().map(|b| b[r].clone()).collect()).collect());
        let inv = square.inverse().expect("pivot rows form an invertible block");
        debug_assert!(pivots.iter().all(|&p| p < dim));
        Ok(Coordinates { basis: basis.to_vec(), rows: pivots, inv })
    }

    pub(crate) fn of(&self, v: &[TowerElem]) -> Option<TVec> {
        if self.basis.is_empty() {
            return crate::linalg::is_zero_vec(v).then(Vec::new);
        }
        let picked: TVec = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.apply(&picked);
        let t = v[0].tower();
        let mut back = vec![t.zero(); v.len()];
        for (ck, b) in c.iter().zip(&self.basis) {
            if ck.is_zero() {
                continue;
            }
            for (x, y) in back.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = &*x + &(ck * y);
                }
            }
        }
        (back.as_slice() == v).then_some(c)
    }
}

/// Evaluates elements of H_μ on a module, caching monomial matrices.
pub(crate) struct Evaluator<'a> {
    module: &'a MatrixSupermodule,
    cache: HashMap<Monomial, TMat>,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(module: &'a MatrixSupermodule) -> Self {
        Evaluator { module, cache: HashMap::new() }
    }

    pub(crate) fn monomial(&mut self, m: &Monomial) -> Result<TMat, SupermoduleError> {
        if let Some(x) = self.cache.get(m) {
            return Ok(x.clone());
        }
        let md = self.module;
        let mut acc = TMat::identity(&md.tower, md.dim());
        for g in m.factors() {
            let gm = md.mats.get(&g).ok_or_else(|| {
                SupermoduleError::Precondition(format!("{g} does not act on {}", md.label))
            })?;
            acc = acc.mul(gm);
        }
        self.cache.insert(m.clone(), acc.clone());
        Ok(acc)
    }

    pub(crate) fn act(&mut self, h: &HElement) -> Result<TMat, SupermoduleError> {
        let md = self.module;
        let mut out = TMat::zero(&md.tower, md.dim(), md.dim());
        for (m, c) in h.terms() {
            let mm = self.monomial(m)?;
            out = out.add(&mm.scale(&md.tower.from_field(c)));
        }
        Ok(out)
    }
}
