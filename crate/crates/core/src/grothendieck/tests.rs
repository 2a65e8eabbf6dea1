use super::*;
use proptest::prelude::*;

fn ws(terms: &[(i64, &[usize])]) -> WordSum {
    terms.iter().fold(WordSum::zero(), |acc, &(c, w)| acc.add(&WordSum::term(w, c)))
}

#[test]
fn shuffle_examples() {
    assert_eq!(shuffle(&WordSum::word(&[3]), &WordSum::word(&[5])), ws(&[(1, &[3, 5]), (1, &[5, 3])]));
    assert_eq!(shuffle(&WordSum::word(&[1, 2]), &WordSum::word(&[1])), ws(&[(2, &[1, 1, 2]), (1, &[1, 2, 1])]));
    let u = ws(&[(2, &[0, 1]), (-1, &[1])]);
    assert_eq!(shuffle(&u, &WordSum::one()), u);
}

#[test]
fn drop_operators() {
    assert_eq!(e_drop(&WordSum::word(&[0, 1]), 1), WordSum::word(&[0]));
    assert!(e_drop(&WordSum::word(&[0, 1]), 0).is_zero());
    assert_eq!(e_star_drop(&WordSum::word(&[0, 1]), 0), WordSum::word(&[1]));
    let ch1000 = ws(&[(6, &[1, 0, 0, 0]), (2, &[0, 1, 0, 0])]);
    assert_eq!(divided(&ch1000, 0, 2).unwrap(), ws(&[(3, &[1, 0]), (1, &[0, 1])]));
    assert!(matches!(
        divided(&WordSum::word(&[0, 0]), 0, 2),
        Err(crate::error::GrothendieckError::IntegralityViolation { .. })
    ));
}

#[test]
fn standard_characters_small_cases() {
    assert_eq!(ch_standard(4, 1, 2, 1, 0).unwrap(), WordSum::word(&[1, 2]));
    assert_eq!(ch_standard(4, 1, 2, 0, 0).unwrap(), WordSum::word(&[2]));
    assert!(ch_standard(4, 1, 2, 3, 0).is_err());
    assert!(ch_standard(4, 1, 3, 0, 0).is_err());
}

#[test]
fn standard_characters_match_listed_ones() {
    // middle pair (1,2) at l = 4
    let l112 = ws(&[(2, &[1, 1, 2]), (1, &[1, 2, 1])]);
    assert_eq!(ch_standard(4, 1, 2, 2, 0).unwrap(), l112);
    assert_eq!(ch_standard(4, 1, 2, 1, 1).unwrap(), l112);
    assert_eq!(ch_standard(4, 1, 2, 0, 2).unwrap(), ws(&[(2, &[2, 1, 1]), (1, &[1, 2, 1])]));
    // end node 0 next to 1 at l = 3
    assert_eq!(ch_standard(3, 0, 1, 2, 0).unwrap(), WordSum::term(&[0, 0, 1], 2));
    assert_eq!(ch_standard(3, 0, 1, 1, 1).unwrap(), WordSum::word(&[0, 1, 0]));
    let l0001 = ws(&[(6, &[0, 0, 0, 1]), (2, &[0, 0, 1, 0])]);
    assert_eq!(ch_standard(3, 0, 1, 3, 0).unwrap(), l0001);
    assert_eq!(ch_standard(3, 0, 1, 2, 1).unwrap(), l0001);
    assert_eq!(ch_standard(3, 0, 1, 0, 3).unwrap(), ws(&[(6, &[1, 0, 0, 0]), (2, &[0, 1, 0, 0])]));
    assert_eq!(ch_standard(3, 0, 1, 1, 2).unwrap(), ws(&[(2, &[0, 1, 0, 0]), (2, &[0, 0, 1, 0])]));
    // l = 2
    assert_eq!(ch_standard(2, 0, 1, 1, 0).unwrap(), WordSum::word(&[0, 1]));
    assert_eq!(ch_standard(2, 0, 1, 0, 2).unwrap(), WordSum::term(&[1, 0, 0], 2));
    assert_eq!(ch_standard(2, 0, 1, 2, 1).unwrap(), l0001);
}

#[test]
fn ses_holds_everywhere() {
    for l in 2usize..=5 {
        for i in 0..l {
            for j in 0..l {
                if i.abs_diff(j) != 1 {
                    continue;
                }
                let k = serre_degree(l, i, j).unwrap();
                for a in 0..k {
                    for b in 0..(k - a) {
                        assert!(ses_check(l, i, j, a, b).unwrap(), "l={l} ({i},{j}) a={a} b={b}");
                    }
                }
            }
        }
    }
    assert!(ses_check(4, 1, 2, 1, 0).is_err());
}

#[test]
fn serre_relations_hold_on_every_block() {
    for l in 2..=5 {
        let report = serre_verify(l).unwrap();
        assert!(report.passed(), "l={l}: {:?}", report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
        assert!(!report.checks.is_empty());
    }
}

#[test]
fn serre_fails_on_single_words() {
    // the relation is a statement about K(Rep H_n), not about individual words
    let rel = serre_relation(4, 1, 2);
    assert!(!apply_relation(&rel, &WordSum::term(&[1, 1, 2], 2)).is_zero());
    let rel = serre_relation(5, 0, 3);
    assert!(!apply_relation(&rel, &WordSum::word(&[0, 3])).is_zero());
}

#[test]
fn library_is_integral() {
    for l in 2..=5 {
        for entry in character_library(l).unwrap() {
            integrality_check(&entry).unwrap_or_else(|e| panic!("l={l} {:?}: {e}", entry.module));
        }
    }
}

#[test]
fn json_round_trip() {
    let u = ws(&[(6, &[0, 0, 0, 1]), (2, &[0, 0, 1, 0])]);
    let v = u.to_json();
    assert_eq!(v, serde_json::json!([{"word": [0, 0, 0, 1], "coeff": 6}, {"word": [0, 0, 1, 0], "coeff": 2}]));
    assert_eq!(WordSum::from_json(&v).unwrap(), u);
    assert_eq!(u.to_string(), "6[0,0,0,1] + 2[0,0,1,0]");
}

fn word_sum(max_len: usize) -> impl Strategy<Value = WordSum> {
    prop::collection::vec((prop::collection::vec(0usize..3, 0..=max_len), -3i64..=3), 0..3).prop_map(|ts| {
        let mut s = WordSum::zero();
        for (w, c) in ts {
            s.add_term(w, c);
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn shuffle_commutative_associative(a in word_sum(3), b in word_sum(3), c in word_sum(2)) {
        prop_assert_eq!(shuffle(&a, &b), shuffle(&b, &a));
        prop_assert_eq!(shuffle(&shuffle(&a, &b), &c), shuffle(&a, &shuffle(&b, &c)));
    }

    #[test]
    fn singleton_shuffle_multiplies_totals(w in prop::collection::vec(0usize..4, 0..6), i in 0usize..4) {
        let u = WordSum::word(&w);
        prop_assert_eq!(shuffle(&u, &WordSum::word(&[i])).total(), (w.len() + 1) as i64);
    }

    #[test]
    fn deconcatenation_coassociative(u in word_sum(5), j in 0usize..4, k in 0usize..4) {
        let (j, k) = (j.min(k), j.max(k));
        let left: Vec<_> = deconcatenate(&u, k)
            .into_iter()
            .flat_map(|((a, b), c)| {
                deconcatenate(&WordSum::word(&a), j).into_iter().map(move |((x, y), d)| ((x, y, b.clone()), c * d))
            })
            .collect();
        let right: Vec<_> = deconcatenate(&u, j)
            .into_iter()
            .flat_map(|((a, b), c)| {
                deconcatenate(&WordSum::word(&b), k - j).into_iter().map(move |((x, y), d)| ((a.clone(), x, y), c * d))
            })
            .collect();
        let mut left = left;
        let mut right = right;
        left.sort();
        right.sort();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn distant_letters_commute_on_their_block(l in 4usize..9, i in 0usize..9, j in 0usize..9) {
        prop_assume!(i < l && j < l && i.abs_diff(j) > 1);
        let block = shuffle(&WordSum::word(&[i]), &WordSum::word(&[j]));
        prop_assert!(apply_relation(&serre_relation(l, i, j), &block).is_zero());
    }
}
