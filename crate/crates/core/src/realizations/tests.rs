use super::*;
use crate::cartan::cartan_matrix;
use crate::crystal::{verify_axioms, Bi, Tensor};
use proptest::prelude::*;

fn level_counts(g: &CrystalGraph) -> Vec<usize> {
    let mut c = vec![0; g.depth + 1];
    for n in &g.nodes {
        c[n.word.len()] += 1;
    }
    c
}

/// Coefficients of ∏ (1 − t^m)^{−mult(m)} up to t^n.
fn partition_series(n: usize, parts: &[(usize, usize)]) -> Vec<usize> {
    let mut c = vec![0usize; n + 1];
    c[0] = 1;
    for &(m, mult) in parts {
        for _ in 0..mult {
            for k in m..=n {
                c[k] += c[k - m];
            }
        }
    }
    c
}

#[test]
fn vacuum_data() {
    for l in 2..=5 {
        let cd = cartan_matrix(l).unwrap();
        let v = PathElem::vacuum(0);
        assert!(path_wt(&cd, &v).is_zero());
        for i in 0..l {
            assert_eq!(path_eps(&cd, &v, i), 0);
            assert_eq!(path_phi(&cd, &v, i), 0);
            assert_eq!(path_e(&cd, &v, i), None);
            let f = path_f(&cd, &v, i);
            assert_eq!(path_e(&cd, &f, i), Some(v.clone()));
            assert_eq!(eps_star_of(&cd, &v, i).unwrap(), 0);
            assert_eq!(eps_star_of(&cd, &f, i).unwrap(), 1);
            for j in (0..l).filter(|&j| j != i) {
                assert_eq!(eps_star_of(&cd, &path_f(&cd, &v, j), i).unwrap(), 0);
            }
        }
    }
}

#[test]
fn small_depths() {
    for l in 2..=5 {
        assert_eq!(generate_binfty(l, 0).unwrap().nodes.len(), 1);
        assert_eq!(generate_binfty(l, 1).unwrap().nodes.len(), 1 + l);
    }
    // depth 2 at l = 2 in both rotations
    let g = generate_binfty(2, 2).unwrap();
    let h = generate_binfty_from(2, 2, 1).unwrap();
    assert_eq!(g.nodes.len(), 7);
    assert_eq!(g.nodes.len(), h.nodes.len());
    assert_eq!(g.edges, h.edges);
}

#[test]
fn affine_sl2_counts() {
    // roots of A(1)_1 by height: 2k+1 twice, 2k once
    let depth = 8;
    let mut parts = Vec::new();
    for m in 1..=depth {
        parts.push((m, if m % 2 == 1 { 2 } else { 1 }));
    }
    let g = generate_binfty(2, depth).unwrap();
    assert_eq!(level_counts(&g), partition_series(depth, &parts));
    // the basic representation in the principal grading: partitions into odd parts
    let odd: Vec<(usize, usize)> = (1..=depth).step_by(2).map(|m| (m, 1)).collect();
    for i in 0..2 {
        let b = generate_blambda(2, &Weight::fundamental(2, i), depth).unwrap();
        assert_eq!(level_counts(&b), partition_series(depth, &odd));
    }
}

#[test]
fn blambda_top_and_expulsion() {
    let cd = cartan_matrix(2).unwrap();
    let lam = Weight::fundamental(2, 0);
    let b = BLambda::new(&cd, lam.clone()).unwrap();
    let v = PathElem::vacuum(0);
    assert_eq!(b.phi_checked(&v, 0).unwrap(), 1);
    assert_eq!(b.phi_checked(&v, 1).unwrap(), 0);
    assert_eq!(b.f(&v, 1), None);
    let top = b.f(&v, 0).unwrap();
    assert_eq!(b.f(&top, 0), None);
    let g = generate_blambda(2, &lam, 0).unwrap();
    assert_eq!(g.nodes.len(), 1);
    assert_eq!(g.nodes[0].wt, lam);
    let g3 = generate_blambda(3, &Weight::fundamental(3, 0), 1).unwrap();
    assert_eq!(g3.nodes.len(), 2);
    assert!(BLambda::new(&cd, Weight::from_lambda(vec![-1, 0])).is_err());
}

#[test]
fn binfty_reports_pass() {
    for l in 2..=4 {
        let r = check_binfty(l, 6).unwrap();
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.checks.len(), 9);
    }
}

#[test]
fn blambda_reports_pass() {
    for l in 2..=3 {
        let lams = [
            Weight::fundamental(l, 0),
            Weight::fundamental(l, l - 1),
            Weight::fundamental(l, 0).add(&Weight::fundamental(l, l - 1)),
        ];
        for lam in lams {
            let r = check_blambda(l, &lam, 8).unwrap();
            assert!(r.passed(), "{r:#?}");
        }
    }
    // a middle node at l = 4 (level 2)
    assert!(check_blambda(4, &Weight::fundamental(4, 1), 5).unwrap().passed());
}

#[test]
fn star_data_catches_a_bad_edge() {
    let cd = cartan_matrix(3).unwrap();
    let mut g = generate_binfty(3, 3).unwrap();
    let e = g.edges.iter().position(|e| e.from == 1).unwrap();
    g.edges[e].to = 0;
    assert!(matches!(StarData::new(&cd, &g), Err(RealizationError::ConsistencyFailure { .. })));
}

#[test]
fn exports() {
    let g = generate_blambda(2, &Weight::fundamental(2, 0), 2).unwrap();
    let j = g.to_json();
    assert_eq!(j["nodes"][0]["wt"]["lam"], serde_json::json!([1, 0]));
    assert_eq!(j["edges"][0], serde_json::json!({"from": 0, "to": 1, "color": 0}));
    let text = serde_json::to_string(&j).unwrap();
    assert!(text.starts_with("{\"edges\":"), "keys sorted");
    let dot = g.to_dot();
    assert!(dot.starts_with("digraph crystal {"));
    assert!(dot.contains("0 -> 1 [label=0];"));
}

fn arb_path(l: usize) -> impl Strategy<Value = PathElem> {
    (0..l, proptest::collection::vec(0u32..4, 0..8)).prop_map(|(s, a)| PathElem { iota_start: s, a }.trimmed())
}

/// The same element written as a nested tensor product of B_i factors, innermost on the right.
fn as_factors(cd: &CartanData, p: &PathElem) -> Vec<crate::crystal::BiElem> {
    (1..=p.a.len() + cd.l).rev().map(|k| crate::crystal::BiElem { i: p.color(cd.l, k), n: -(p.coord(k) as i64) }).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fold_matches_generic_tensor(l in 2usize..=4, p in arb_path(4)) {
        let cd = cartan_matrix(l).unwrap();
        let p = PathElem { iota_start: p.iota_start % l, a: p.a };
        let fac = as_factors(&cd, &p);
        let pc = PathCrystal::new(&cd);
        for i in 0..l {
            // split off the first coordinate and compare with PathCrystal ⊗ B_{ι_1}
            let (rest, a1) = p.strip_first(l);
            let t = Tensor::new(pc.clone(), Bi::new(&cd, p.color(l, 1)));
            let x = (rest, crate::crystal::BiElem { i: p.color(l, 1), n: -(a1 as i64) });
            prop_assert_eq!(t.eps(&x, i), pc.eps(&p, i));
            prop_assert_eq!(t.phi(&x, i), pc.phi(&p, i));
            let split = |q: PathElem| { let (r, b) = q.strip_first(l); (r, crate::crystal::BiElem { i: q.color(l, 1), n: -(b as i64) }) };
            prop_assert_eq!(t.f(&x, i), pc.f(&p, i).map(split));
            // ε from the factor list directly
            let eps = fac.iter().rev().fold(crate::crystal::Ext::NegInf, |acc, b| {
                let bi = Bi::new(&cd, b.i);
                bi.eps(b, i).max(acc - cd.pairing(i, &bi.wt(b)))
            });
            prop_assert_eq!(Some(path_eps(&cd, &p, i)), eps.finite());
        }
    }

    #[test]
    fn e_inverts_f_on_the_product(l in 2usize..=5, p in arb_path(5)) {
        let cd = cartan_matrix(l).unwrap();
        let p = PathElem { iota_start: p.iota_start % l, a: p.a };
        for i in 0..l {
            prop_assert_eq!(path_e(&cd, &path_f(&cd, &p, i), i), Some(p.clone()));
        }
    }

    #[test]
    fn raising_vanishes_exactly_at_eps_zero(l in 2usize..=5, start in 0usize..5, word in proptest::collection::vec(0usize..5, 0..12)) {
        let cd = cartan_matrix(l).unwrap();
        let word: Vec<usize> = word.iter().map(|&i| i % l).collect();
        let p = replay(&cd, start % l, &word);
        for i in 0..l {
            prop_assert_eq!(path_e(&cd, &p, i).is_none(), path_eps(&cd, &p, i) == 0);
        }
        prop_assert!(verify_axioms(&PathCrystal::new(&cd), &[p.clone()]).passed());
        prop_assert_eq!(descent_word(&cd, &p).unwrap().len(), word.len());
    }
}
