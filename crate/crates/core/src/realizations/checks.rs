//! Node-wise checks on generated B(∞) and B(λ) graphs.

use super::graph::{generate_binfty, generate_binfty_from, generate_blambda, generate_blambda_cut, same_graph, StarData};
use super::{eps_star_of, BLambda, PathCrystal, PathElem};
use crate::cartan::{cartan_matrix, f_lambda, Weight};
use crate::crystal::{verify_axioms, Bi, BiElem, Crystal, Tensor};
use crate::error::RealizationError;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrystalReport {
    pub l: usize,
    pub depth: usize,
    pub lambda: Option<Vec<i64>>,
    pub nodes: usize,
    pub checks: Vec<NamedCheck>,
}

impl CrystalReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, name: &str, failure: Option<String>) {
        self.checks.push(NamedCheck {
            name: name.into(),
            pass: failure.is_none(),
            detail: failure.unwrap_or_default(),
        });
    }
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, bad: impl Fn(&T) -> Option<String>) -> Option<String> {
    items.into_iter().find_map(|x| bad(&x))
}

/// Crystal axioms, the unique weight-0 node, rotation consistency, Ψ_i strictness and the
/// ε* commutation rules on B(∞) to the given depth.
pub fn check_binfty(l: usize, depth: usize) -> Result<CrystalReport, RealizationError> {
    let cd = cartan_matrix(l)?;
    let g = generate_binfty(l, depth)?;
    let pc = PathCrystal::new(&cd);
    let paths: Vec<PathElem> = g.nodes.iter().map(|n| n.path.clone()).collect();
    let mut r = CrystalReport { l, depth, lambda: None, nodes: g.nodes.len(), checks: Vec::new() };

    let ax = verify_axioms(&pc, &paths);
    r.push("axioms", first_failure(&ax.items, |a| a.witness.as_ref().map(|w| format!("item {}: {w}", a.item))));

    let zeros: Vec<usize> = g.nodes.iter().filter(|n| n.wt.is_zero()).map(|n| n.id).collect();
    r.push("unique weight 0", (zeros != [0]).then(|| format!("weight 0 at {zeros:?}")));
    r.push(
        "weights in the negative cone",
        first_failure(&g.nodes, |n| n.wt.alpha.iter().any(|&x| x > 0).then(|| format!("node {}", n.id))),
    );

    let star = match StarData::new(&cd, &g) {
        Ok(s) => {
            r.push("rotation consistency", None);
            s
        }
        Err(e) => {
            r.push("rotation consistency", Some(e.to_string()));
            return Ok(r);
        }
    };

    let mut mismatch = None;
    'outer: for n in &g.nodes {
        for i in 0..l {
            let via_descent = eps_star_of(&cd, &n.path, i)?;
            if via_descent != star.eps_star_at(n.id, i) {
                mismatch = Some(format!("node {} color {i}", n.id));
                break 'outer;
            }
        }
    }
    r.push("eps* independent of the f-word", mismatch);

    r.push(
        "eps* nonzero off the vacuum",
        first_failure(&g.nodes[1..], |n| {
            (0..l).all(|i| star.eps_star_at(n.id, i) == 0).then(|| format!("node {}", n.id))
        }),
    );

    // Ψ_i: p ↦ (rest) ⊗ b_i(−a_1), compared against the tensor rule on PathCrystal ⊗ B_i
    let mut strict = None;
    'strict: for i in 0..l {
        let t = Tensor::new(PathCrystal::new(&cd), Bi::new(&cd, i));
        let split = |p: &PathElem| -> (PathElem, BiElem) {
            let (rest, a1) = p.strip_first(l);
            (rest, BiElem { i, n: -(a1 as i64) })
        };
        for n in &g.nodes {
            let p = &star.rotated[i][n.id];
            let x = split(p);
            for j in 0..l {
                let ok = t.f(&x, j) == pc.f(p, j).map(|q| split(&q))
                    && t.e(&x, j) == pc.e(p, j).map(|q| split(&q))
                    && t.eps(&x, j) == pc.eps(p, j)
                    && t.phi(&x, j) == pc.phi(p, j)
                    && t.wt(&x) == pc.wt(p);
                if !ok {
                    strict = Some(format!("node {} split at color {i}, operator {j}", n.id));
                    break 'strict;
                }
            }
        }
    }
    r.push("Psi_i strictness", strict);

    r.push(
        "eps* commutation",
        first_failure(&g.edges, |e| {
            (0..l).find_map(|i| {
                let (a, b) = (star.eps_star_at(e.from, i), star.eps_star_at(e.to, i));
                let ok = if i == e.color { b == a || b == a + 1 } else { b == a };
                (!ok).then(|| format!("edge {} -> {} color {}, eps*_{i}: {a} -> {b}", e.from, e.to, e.color))
            })
        }),
    );

    let mut dual = None;
    for s in 1..l {
        let h = generate_binfty_from(l, depth, s)?;
        let words = |x: &super::CrystalGraph| x.nodes.iter().map(|n| (n.word.clone(), n.wt.clone())).collect::<Vec<_>>();
        if words(&g) != words(&h) || g.edges != h.edges {
            dual = Some(format!("realization starting at {s} differs"));
            break;
        }
    }
    r.push("rotated realizations isomorphic", dual);
    Ok(r)
}

/// The weight identity φ − ε = ⟨h_i, λ + wt⟩ with φ measured as a string length, the level
/// sum Σ c_i(φ_i − ε_i) = λ(c) = deg f^λ, and equality of the cut and the f̃^λ-closure.
pub fn check_blambda(l: usize, lambda: &Weight, depth: usize) -> Result<CrystalReport, RealizationError> {
    let cd = cartan_matrix(l)?;
    let b = BLambda::new(&cd, lambda.clone())?;
    let g = generate_blambda(l, lambda, depth)?;
    let paths: Vec<PathElem> = g.nodes.iter().map(|n| n.path.clone()).collect();
    let mut r = CrystalReport { l, depth, lambda: Some(lambda.lam.clone()), nodes: g.nodes.len(), checks: Vec::new() };

    let ax = verify_axioms(&b, &paths);
    r.push("axioms", first_failure(&ax.items, |a| a.witness.as_ref().map(|w| format!("item {}: {w}", a.item))));

    let tops: Vec<usize> = g.nodes.iter().filter(|n| n.wt == *lambda).map(|n| n.id).collect();
    r.push("unique weight lambda", (tops != [0]).then(|| format!("weight λ at {tops:?}")));
    r.push(
        "top phi = lambda(h_i)",
        first_failure(0..l, |&i| (g.nodes[0].phi[i] != cd.pairing(i, lambda)).then(|| format!("color {i}"))),
    );
    r.push(
        "eps, phi nonnegative",
        first_failure(&g.nodes, |n| n.eps.iter().chain(&n.phi).any(|&x| x < 0).then(|| format!("node {}", n.id))),
    );

    let level = cd.level(lambda);
    let degree = f_lambda(l, lambda).map_err(RealizationError::Cartan)?.len() as i64 - 1;
    let mut weight_fail = None;
    let mut level_fail = (level != degree).then(|| format!("lambda(c) = {level}, deg f = {degree}"));
    for n in &g.nodes {
        let mut sum = 0;
        for i in 0..l {
            match b.phi_checked(&n.path, i) {
                Ok(phi) => {
                    let diff = phi - n.eps[i];
                    if diff != cd.pairing(i, &n.wt) && weight_fail.is_none() {
                        weight_fail = Some(format!("node {} color {i}", n.id));
                    }
                    sum += cd.c[i] * diff;
                }
                Err(e) => {
                    weight_fail.get_or_insert(e.to_string());
                }
            }
        }
        if sum != level && level_fail.is_none() {
            level_fail = Some(format!("node {}: sum {sum}, lambda(c) = {level}", n.id));
        }
    }
    r.push("phi - eps = <h_i, lambda + wt>", weight_fail);
    r.push("level sum = deg f^lambda", level_fail);

    let cut = generate_blambda_cut(l, lambda, depth)?;
    r.push(
        "cut equals closure",
        (!same_graph(&g, &cut)).then(|| format!("closure {} nodes, cut {} nodes", g.nodes.len(), cut.nodes.len())),
    );
    Ok(r)
}
