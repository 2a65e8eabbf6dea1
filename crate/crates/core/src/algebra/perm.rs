//! Permutations in one-line notation (0-based values) and their reduced words.
//!
//! Simple reflections are 1-based: `s_i` swaps the values `i−1` and `i` when acting on
//! the left, matching T_i in the Hecke algebra.

/// One-line notation: `p[k]` is the image of position `k`.
pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn length(p: &[u8]) -> usize {
    let mut inv = 0;
    for a in 0..p.len() {
        for b in (a + 1)..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    inv
}

/// s_i ∘ p: swap the values i−1 and i.
pub fn left_mul_simple(i: usize, p: &[u8]) -> Perm {
    let (a, b) = ((i - 1) as u8, i as u8);
    p.iter().map(|&v| if v == a { b } else if v == b { a } else { v }).collect()
}

/// Does ℓ(s_i p) exceed ℓ(p)? True when the value i−1 occurs before the value i.
pub fn left_ascent(i: usize, p: &[u8]) -> bool {
    let pa = p.iter().position(|&v| v as usize == i - 1).expect("value present");
    let pb = p.iter().position(|&v| v as usize == i).expect("value present");
    pa < pb
}

/// Lexicographically smallest reduced word, built from the smallest left descent each step.
pub fn reduced_word(p: &[u8]) -> Vec<usize> {
    let mut word = Vec::new();
    let mut cur = p.to_vec();
    while let Some(i) = (1..cur.len()).find(|&i| !left_ascent(i, &cur)) {
        word.push(i);
        cur = left_mul_simple(i, &cur);
    }
    word
}

/// The permutation s_{w_1} ∘ ⋯ ∘ s_{w_k}.
pub fn from_word(n: usize, word: &[usize]) -> Perm {
    word.iter().rev().fold(identity(n), |p, &i| left_mul_simple(i, &p))
}

pub fn compose(a: &[u8], b: &[u8]) -> Perm {
    b.iter().map(|&v| a[v as usize]).collect()
}

pub fn inverse(p: &[u8]) -> Perm {
    let mut out = vec![0u8; p.len()];
    for (k, &v) in p.iter().enumerate() {
        out[v as usize] = k as u8;
    }
    out
}

/// Block start offsets of a composition.
pub fn block_bounds(mu: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut s = 0;
    for &m in mu {
        out.push((s, s + m));
        s += m;
    }
    out
}

/// Minimal length representative of the left coset p·S_μ (sort values within each block).
pub fn min_coset_rep(p: &[u8], mu: &[usize]) -> Perm {
    let mut d = p.to_vec();
    for (a, b) in block_bounds(mu) {
        d[a..b].sort_unstable();
    }
    d
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = vec![Vec::new()];
    for k in 0..n as u8 {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Minimal left coset representatives of S_μ in S_n, ordered by length then lexicographically.
pub fn min_coset_reps(mu: &[usize]) -> Vec<Perm> {
    let n: usize = mu.iter().sum();
    let mut reps: Vec<Perm> = all_perms(n).into_iter().filter(|p| &min_coset_rep(p, mu) == p).collect();
    reps.sort_by_key(|p| (length(p), reduced_word(p)));
    reps
}

/// Whether p lies in the Young subgroup S_μ.
pub fn in_young(p: &[u8], mu: &[usize]) -> bool {
    block_bounds(mu).iter().all(|&(a, b)| p[a..b].iter().all(|&v| (a..b).contains(&(v as usize))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        for p in all_perms(4) {
            let w = reduced_word(&p);
            assert_eq!(w.len(), length(&p));
            assert_eq!(from_word(4, &w), p);
        }
    }

    #[test]
    fn longest_word_is_lex_smallest() {
        assert_eq!(reduced_word(&[2, 1, 0]), vec![1, 2, 1]);
    }

    #[test]
    fn coset_reps_count() {
        assert_eq!(min_coset_reps(&[2, 1]).len(), 3);
        assert_eq!(min_coset_reps(&[3, 1]).len(), 4);
        assert_eq!(min_coset_reps(&[2, 2]).len(), 6);
        let words: Vec<Vec<usize>> = min_coset_reps(&[2, 1]).iter().map(|p| reduced_word(p)).collect();
        assert_eq!(words, vec![vec![], vec![2], vec![1, 2]]);
    }

    #[test]
    fn factorization_through_cosets() {
        for p in all_perms(4) {
            let d = min_coset_rep(&p, &[2, 2]);
            let u = compose(&inverse(&d), &p);
            assert!(in_young(&u, &[2, 2]));
            assert_eq!(length(&d) + length(&u), length(&p));
        }
    }
}
