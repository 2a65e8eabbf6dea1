//! Integer combinations of words over I_q.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

pub type Word = Vec<usize>;

/// A finite Z-linear combination of words; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordSum {
    terms: BTreeMap<Word, i64>,
}

/// One `{"word": [...], "coeff": c}` entry of the JSON form.
#[derive(Serialize, Deserialize)]
struct Entry {
    word: Word,
    coeff: i64,
}

impl WordSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        Self::word(&[])
    }

    pub fn word(w: &[usize]) -> Self {
        Self::term(w, 1)
    }

    pub fn term(w: &[usize], c: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(w.to_vec(), c);
        s
    }

    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (&'a [usize], i64)>) -> Self {
        let mut s = Self::zero();
        for (w, c) in terms {
            s.add_term(w.to_vec(), c);
        }
        s
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &[usize]) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add(&self, o: &WordSum) -> WordSum {
        let mut s = self.clone();
        for (w, c) in o.terms() {
            s.add_term(w.clone(), c);
        }
        s
    }

    pub fn sub(&self, o: &WordSum) -> WordSum {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> WordSum {
        let mut s = WordSum::zero();
        for (w, c) in self.terms() {
            s.add_term(w.clone(), c * k);
        }
        s
    }

    /// Word reversal, the shadow of the σ-twist.
    pub fn reversed(&self) -> WordSum {
        let mut s = WordSum::zero();
        for (w, c) in self.terms() {
            s.add_term(w.iter().rev().copied().collect(), c);
        }
        s
    }

    /// Apply a letter substitution to every word.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> WordSum {
        let mut s = WordSum::zero();
        for (w, c) in self.terms() {
            s.add_term(w.iter().map(|&x| f(x)).collect(), c);
        }
        s
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Entry> = self.terms().map(|(w, c)| Entry { word: w.clone(), coeff: c }).collect();
        serde_json::to_value(entries).expect("word sums serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<WordSum, serde_json::Error> {
        let entries: Vec<Entry> = serde_json::from_value(v.clone())?;
        let mut s = WordSum::zero();
        for e in entries {
            s.add_term(e.word, e.coeff);
        }
        Ok(s)
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms() {
            let letters: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "[{}]", letters.join(","))?;
        }
        Ok(())
    }
}
