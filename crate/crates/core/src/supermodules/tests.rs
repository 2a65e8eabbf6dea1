use super::*;
use crate::algebra::Gen;
use crate::grothendieck::{shuffle, WordSum};
use crate::linalg::TMat;
use crate::scalars::{FieldCtx, Tower};
use std::collections::BTreeMap;
use std::sync::Arc;

fn tower(l: usize, idx: &[usize]) -> Arc<Tower> {
    Tower::field_for_indices(&FieldCtx::get(l), idx).unwrap()
}

fn ws(terms: &[(i64, &[usize])]) -> WordSum {
    terms.iter().fold(WordSum::zero(), |acc, &(c, w)| acc.add(&WordSum::term(w, c)))
}

/// (l, i, j) with i an end node and j its middle neighbour.
fn end_middle_pairs(l: usize) -> Vec<(usize, usize)> {
    if l < 3 {
        return vec![];
    }
    vec![(0, 1), (l - 1, l - 2)]
}

fn no_violations(m: &MatrixSupermodule) {
    assert_eq!(m.verify_relations(), Vec::<String>::new(), "{}", m.label);
}

#[test]
fn l01_and_l001_satisfy_relations() {
    let t = tower(2, &[]);
    no_violations(&build_l01(&t).unwrap());
    no_violations(&build_l001(&t).unwrap());
    no_violations(&build_l001_star_l0(&t).unwrap());
}

#[test]
fn l001_displayed_blocks() {
    let t = tower(2, &[]);
    let m = build_l001(&t).unwrap();
    assert_eq!(m.mat(Gen::X(3)), &TMat::identity(&t, 8).neg());
    let q = |k: i64| t.from_field(&crate::scalars::FieldElem::zeta_pow(t.field(), k));
    let t2 = m.mat(Gen::T(2));
    assert_eq!(t2.data[0][0], &q(3) + &q(1));
    assert_eq!(t2.data[0][1], t.one());
    assert_eq!(t2.data[1][0], t.one());
    assert!(t2.data[1][1].is_zero());
}

#[test]
fn perturbed_l01_breaks_relation_five() {
    let t = tower(2, &[]);
    let m = build_l01(&t).unwrap();
    let mut mats: BTreeMap<Gen, TMat> = m.generators().into_iter().map(|g| (g, m.mat(g).clone())).collect();
    let q2 = t.from_field(&crate::scalars::FieldElem::zeta_pow(t.field(), 2));
    mats.get_mut(&Gen::T(1)).unwrap().data[0][0] = q2;
    let bad = MatrixSupermodule::new("bad", &t, &[2], 1, 1, mats).unwrap();
    let report = bad.verify_relations();
    assert!(report.iter().any(|r| r.starts_with("(5)")), "{report:?}");
}

#[test]
fn single_node_modules() {
    let t = tower(3, &[1]);
    let l0 = build_l(&t, 0).unwrap();
    assert!(l0.mat(Gen::X(1)).is_identity());
    assert_eq!(l0.mat(Gen::C(1)), &TMat::from_ints(&t, &[&[0, 1], &[1, 0]]));
    assert_eq!(l0.super_type().unwrap(), SuperType::Q);
    let t = tower(4, &[1]);
    let l1 = build_l(&t, 1).unwrap();
    no_violations(&l1);
    assert_eq!(l1.super_type().unwrap(), SuperType::M);
    assert_eq!(formal_character(&l1).unwrap(), WordSum::word(&[1]));
}

#[test]
fn regular_quotients_split() {
    for (l, i) in [(4, 1), (5, 2), (3, 1)] {
        let t = tower(l, &[i]);
        for m in 1..=2 {
            let r = build_r_m(&t, i, m).unwrap();
            no_violations(&r);
            let sum = direct_sum(&build_l_m(&t, i, m, true).unwrap(), &build_l_m(&t, i, m, false).unwrap()).unwrap();
            assert!(r.evenly_isomorphic(&sum).unwrap(), "R_{m}({i}) at l={l}");
        }
    }
    for (l, i) in [(3, 0), (4, 3), (2, 1)] {
        let t = tower(l, &[]);
        for m in 1..=3 {
            let r = build_r_m(&t, i, m).unwrap();
            no_violations(&r);
            assert!(r.evenly_isomorphic(&build_l_m(&t, i, m, true).unwrap()).unwrap());
        }
    }
}

#[test]
fn l_ij_on_every_legal_pair() {
    for l in 3usize..=5 {
        for i in 0..l {
            for j in 0..l {
                if i.abs_diff(j) != 1 {
                    continue;
                }
                let t = tower(l, &[i, j]);
                let m = build_l_ij(&t, i, j).unwrap();
                no_violations(&m);
                assert_eq!(formal_character(&m).unwrap(), WordSum::word(&[i, j]), "l={l} ({i},{j})");
                let ends = [i, j].iter().filter(|&&x| is_end(l, x)).count();
                let want = if ends % 2 == 1 { SuperType::Q } else { SuperType::M };
                assert_eq!(m.super_type().unwrap(), want, "l={l} ({i},{j})");
            }
        }
    }
    assert!(build_l_ij(&tower(2, &[]), 0, 1).is_err());
    assert!(build_l_ij(&tower(5, &[]), 1, 3).is_err());
}

#[test]
fn l_ij_matrices_at_l4() {
    let t = tower(4, &[1, 2]);
    let m = build_l_ij(&t, 1, 2).unwrap();
    let x1 = m.mat(Gen::X(1));
    let (bp, bm) = (t.b_pm(1, true), t.b_pm(1, false));
    let diag: Vec<_> = (0..4).map(|k| x1.data[k][k].clone()).collect();
    assert_eq!(diag.iter().filter(|d| **d == bp).count(), 2);
    assert_eq!(diag.iter().filter(|d| **d == bm).count(), 2);
    // T_1 is ξ/(q(2) − q(1)) times an integral combination of b_±
    let k = crate::scalars::xi(t.field());
    let scale = (&crate::scalars::q_of(t.field(), 2) - &crate::scalars::q_of(t.field(), 1)).inv().unwrap();
    let t1 = m.mat(Gen::T(1)).scale(&t.from_field(&(&k * &scale)).inv().unwrap());
    assert_eq!(t1.data[0][0], &t.b_pm(2, true) - &bm);
    assert_eq!(t1.data[1][1], &t.b_pm(2, false) - &bp);
}

#[test]
fn star_realization_and_l_iij() {
    for l in 3usize..=5 {
        for (i, j) in end_middle_pairs(l) {
            let t = tower(l, &[j]);
            let w = build_l_ij_star_i(&t, i, j).unwrap();
            no_violations(&w);
            let m = build_l_iij(&t, i, j).unwrap();
            assert_eq!(m.dim(), 8);
            no_violations(&m);
            assert!(iij_action_residuals(&m, i, j).is_empty());
            assert_eq!(formal_character(&m).unwrap(), WordSum::term(&[i, i, j], 2), "l={l} ({i},{j})");
            assert_eq!(epsilon_i(&m, j), 1);
            assert_eq!(epsilon_i(&m, i), 0);
            assert_eq!(max_jordan_block(&m, j), 1);
        }
    }
    assert!(build_l_iij(&tower(4, &[]), 1, 2).is_err());
}

#[test]
fn eighth_root_characters() {
    let t = tower(2, &[]);
    let l01 = build_l01(&t).unwrap();
    let l001 = build_l001(&t).unwrap();
    assert_eq!(formal_character(&l01).unwrap(), WordSum::word(&[0, 1]));
    assert_eq!(formal_character(&l001).unwrap(), WordSum::term(&[0, 0, 1], 2));
    assert_eq!(epsilon_i(&l001, 1), 1);
    assert_eq!(epsilon_i(&l001, 0), 0);
    assert_eq!(l01.super_type().unwrap(), SuperType::M);
    let ten = l01.sign_twist();
    no_violations(&ten);
    assert_eq!(formal_character(&ten).unwrap(), WordSum::word(&[1, 0]));
}

#[test]
fn epsilon_matches_jordan_blocks() {
    let t = tower(2, &[]);
    for m in [build_l01(&t).unwrap(), build_l001(&t).unwrap()] {
        for i in 0..2 {
            assert_eq!(epsilon_i(&m, i), max_jordan_block(&m, i), "{} i={i}", m.label);
        }
    }
    let t = tower(4, &[1, 2]);
    let m = build_l_ij(&t, 1, 2).unwrap();
    for i in 0..4 {
        assert_eq!(epsilon_i(&m, i), max_jordan_block(&m, i));
    }
    let t = tower(4, &[1]);
    for m in 1..=3 {
        let lm = build_l_m(&t, 1, m, true).unwrap();
        assert_eq!(epsilon_i(&lm, 1), 1);
        assert_eq!(max_jordan_block(&lm, 1), m);
    }
}

#[test]
fn delta_restricts() {
    let t = tower(2, &[]);
    let m = build_l001(&t).unwrap();
    let d0 = delta_im(&m, 0, 0).unwrap();
    assert_eq!(d0.dim(), m.dim());
    let d1 = delta_im(&m, 1, 1).unwrap();
    assert_eq!(d1.dim(), 8);
    assert_eq!(d1.mu(), &[2, 1]);
    no_violations(&d1);
    assert_eq!(delta_im(&m, 0, 1).unwrap().dim(), 0);
}

#[test]
fn sigma_twist_reverses_characters() {
    let t = tower(2, &[]);
    for m in [build_l01(&t).unwrap(), build_l001(&t).unwrap()] {
        let s = m.sigma_twist().unwrap();
        no_violations(&s);
        assert_eq!(formal_character(&s).unwrap(), formal_character(&m).unwrap().reversed());
    }
    let t = tower(4, &[1, 2]);
    let m = build_l_ij(&t, 2, 1).unwrap();
    assert_eq!(formal_character(&m.sigma_twist().unwrap()).unwrap(), WordSum::word(&[1, 2]));
    let t = tower(3, &[1]);
    let m = build_l_iij(&t, 0, 1).unwrap();
    assert_eq!(formal_character(&m.sigma_twist().unwrap()).unwrap(), WordSum::term(&[1, 0, 0], 2));
}

#[test]
fn circled_star_dimensions() {
    let t = tower(3, &[]);
    let l0 = build_l(&t, 0).unwrap();
    let th = end_involution(&t, 0).unwrap();
    let p = circled_star(&l0, Some(&th), &l0, Some(&th)).unwrap();
    assert_eq!(p.dim(), 2);
    no_violations(&p);
    assert_eq!(formal_character(&p).unwrap(), WordSum::word(&[0, 0]));
    let t = tower(2, &[]);
    let (l0, l1) = (build_l(&t, 0).unwrap(), build_l(&t, 1).unwrap());
    let (a, b) = (end_involution(&t, 0).unwrap(), end_involution(&t, 1).unwrap());
    let p = circled_star(&l0, Some(&a), &l1, Some(&b)).unwrap();
    assert_eq!(p.dim(), 2);
    assert_eq!(formal_character(&p).unwrap(), WordSum::word(&[0, 1]));
    let plain = circled_star(&l0, None, &l1, Some(&b)).unwrap();
    assert_eq!(plain.dim(), 4);
    assert!(circled_star(&l0, Some(&TMat::identity(&t, 2)), &l1, Some(&b)).is_err());
    assert!(end_involution(&tower(4, &[]), 1).is_err());
}

#[test]
fn star_with_rank_zero_module_is_identity() {
    let t = tower(4, &[1, 2]);
    let m = build_l_ij(&t, 1, 2).unwrap();
    let unit = MatrixSupermodule::new("1", &t, &[], 1, 0, BTreeMap::new()).unwrap();
    let p = circled_star(&m, None, &unit, None).unwrap();
    assert_eq!(p.dim(), m.dim());
    assert!(p.evenly_isomorphic(&m).unwrap());
}

#[test]
fn induction_matches_shuffle() {
    let t = tower(4, &[1, 2]);
    let ind = induced(&tensor(&build_l(&t, 1).unwrap(), &build_l(&t, 2).unwrap()).unwrap()).unwrap();
    no_violations(&ind);
    assert_eq!(formal_character(&ind).unwrap(), ws(&[(1, &[1, 2]), (1, &[2, 1])]));

    // every pair of single-node modules at l ≤ 4
    for l in 2..=4 {
        let t = tower(l, &(0..l).filter(|&k| !is_end(l, k)).collect::<Vec<_>>());
        for i in 0..l {
            for j in 0..l {
                let (a, b) = (build_l(&t, i).unwrap(), build_l(&t, j).unwrap());
                let both_q = is_end(l, i) && is_end(l, j);
                let p = if both_q {
                    circled_star(&a, Some(&end_involution(&t, i).unwrap()), &b, Some(&end_involution(&t, j).unwrap()))
                } else {
                    circled_star(&a, None, &b, None)
                }
                .unwrap();
                let ch = formal_character(&induced(&p).unwrap()).unwrap();
                assert_eq!(ch, shuffle(&WordSum::word(&[i]), &WordSum::word(&[j])), "l={l} ({i},{j})");
            }
        }
    }

    // rank three: L(ij) ⊛ L(i)
    let t = tower(3, &[1]);
    let w = build_l_ij_star_i(&t, 0, 1).unwrap();
    let ch = formal_character(&induced(&w).unwrap()).unwrap();
    assert_eq!(ch, shuffle(&WordSum::word(&[0, 1]), &WordSum::word(&[0])));

    let t = tower(2, &[]);
    let m = tensor(&build_l01(&t).unwrap(), &build_l(&t, 0).unwrap()).unwrap();
    let ch = formal_character(&induced(&m).unwrap()).unwrap();
    assert_eq!(ch, ws(&[(2, &[0, 0, 1]), (1, &[0, 1, 0])]));
}

#[test]
fn characters_account_for_dimension() {
    let t = tower(2, &[]);
    for m in [build_l01(&t).unwrap(), build_l001(&t).unwrap(), build_l001_star_l0(&t).unwrap()] {
        let ch = formal_character(&m).unwrap();
        let total: i64 = ch.terms().map(|(w, c)| c * word_dim(2, w) as i64).sum();
        assert_eq!(total as usize, m.dim());
    }
}

#[test]
fn suite_passes_low_rank() {
    for l in 2..=5 {
        let report = section_suite(l).unwrap();
        let bad: Vec<_> = report.iter().filter(|c| !c.passed()).map(|c| format!("{c:?}")).collect();
        assert!(bad.is_empty(), "l={l}: {bad:#?}");
    }
}

#[test]
fn suite_covers_each_pair() {
    let report = section_suite(4).unwrap();
    for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)] {
        assert!(report.iter().any(|c| c.i == Some(i) && c.j == Some(j) && c.check == "rank2 ch N"));
    }
    // middle pairs only
    assert!(report.iter().any(|c| c.check.starts_with("mid ") && c.i == Some(1) && c.j == Some(2)));
    assert!(!report.iter().any(|c| c.check.starts_with("mid ") && c.i == Some(0)));
    // end pairs only
    assert!(report.iter().any(|c| c.check == "rank3 end T3N not in N" && c.i == Some(3) && c.j == Some(2)));
    assert!(section_suite(1).is_err());
}

#[test]
fn suite_serializes() {
    let report = section_suite(2).unwrap();
    let v = serde_json::to_value(&report).unwrap();
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["l"], 2);
}

#[test]
fn builder_suite_passes() {
    for l in 2..=5 {
        let report = builder_suite(l).unwrap();
        assert!(report.iter().all(|c| c.passed()), "l={l}: {report:#?}");
    }
    let names: Vec<String> = builder_suite(2).unwrap().into_iter().map(|c| c.check).collect();
    assert!(names.contains(&"L001".to_string()));
    // l = 2 has no legal L(ij): both nodes are ends
    assert!(!names.iter().any(|n| n == "L(01)"));
}
