//! Words in the Heisenberg generators `v^i(m)` modulo `c = 1`.
//!
//! This is the slow, generic route for commutators: products of quadratic
//! elements are expanded into letters and bubble-sorted using
//! `[v^i(m), v^j(n)] = delta_{i,j} delta_{m+n,0} m`. The result is a linear
//! combination of sorted words, i.e. a PBW expansion in `U(h)/<c-1>`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::scalar::{rat, Rational};

/// A single generator `v^i(m)`. Ordered by `(i, m)`, which is the ordering
/// that makes sorted two-letter words coincide with canonical quadratic
/// generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub i: u32,
    pub m: i64,
}

impl Letter {
    pub fn new(i: u32, m: i64) -> Self {
        Letter { i, m }
    }
}

/// `[a, b]` as a number (the central element already set to 1).
pub fn contraction(a: Letter, b: Letter) -> i64 {
    if a.i == b.i && a.m + b.m == 0 {
        a.m
    } else {
        0
    }
}

/// Linear combination of sorted words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WordSum {
    terms: BTreeMap<Vec<Letter>, Rational>,
}

impl WordSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_sorted(&mut self, word: Vec<Letter>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * word` after normal-ordering the word.
    pub fn add_word(&mut self, word: &[Letter], c: Rational) {
        let mut stack = vec![(word.to_vec(), c)];
        while let Some((mut w, c)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            // first adjacent inversion, if any
            match (1..w.len()).find(|&k| w[k - 1] > w[k]) {
                None => self.add_sorted(w, c),
                Some(k) => {
                    let (a, b) = (w[k - 1], w[k]);
                    let z = contraction(a, b);
                    if z != 0 {
                        let mut shorter = Vec::with_capacity(w.len() - 2);
                        shorter.extend_from_slice(&w[..k - 1]);
                        shorter.extend_from_slice(&w[k + 1..]);
                        stack.push((shorter, &c * rat(z)));
                    }
                    w.swap(k - 1, k);
                    stack.push((w, c));
                }
            }
        }
    }

    pub fn add(&mut self, other: &WordSum, c: &Rational) {
        for (w, x) in &other.terms {
            self.add_sorted(w.clone(), x * c);
        }
    }

    /// Product of two normal-ordered sums, normal-ordered again.
    pub fn mul(&self, other: &WordSum) -> WordSum {
        let mut out = WordSum::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_word(&w, x * y);
            }
        }
        out
    }

    pub fn commutator(&self, other: &WordSum) -> WordSum {
        let mut out = self.mul(other);
        out.add(&other.mul(self), &rat(-1));
        out
    }
}
