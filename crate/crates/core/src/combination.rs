//! Finite linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg};

use crate::index::{MzvIndex, TlIndex};
use crate::rational::Rational;

/// A map from keys to nonzero rational coefficients. Zero coefficients are
/// never stored, so structural equality is equality of combinations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

pub type MzvCombination = Combination<MzvIndex>;
pub type TlCombination = Combination<TlIndex>;

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: Rational) -> Self {
        let mut c = Self::new();
        c.add_term(key, coeff);
        c
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `factor * other` into `self`.
    pub fn add_scaled(&mut self, other: &Combination<K>, factor: &Rational) {
        for (key, coeff) in &other.terms {
            self.add_term(key.clone(), coeff * factor);
        }
    }

    pub fn coeff(&self, key: &K) -> Option<&Rational> {
        self.terms.get(key)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending key order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut out = Self::new();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut c = Self::new();
        for (k, q) in iter {
            c.add_term(k, q);
        }
        c
    }
}

impl<'a, K: Ord> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a Rational);
    type IntoIter = btree_map::Iter<'a, K, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for Combination<K> {
    type Output = Combination<K>;

    fn add(mut self, rhs: Combination<K>) -> Combination<K> {
        for (k, q) in rhs.terms {
            self.add_term(k, q);
        }
        self
    }
}

impl<K: Ord + Clone> Neg for Combination<K> {
    type Output = Combination<K>;

    fn neg(self) -> Combination<K> {
        Combination {
            terms: self.terms.into_iter().map(|(k, q)| (k, -q)).collect(),
        }
    }
}

impl MzvCombination {
    /// `Some((weight, depth))` when every key shares the same weight and depth.
    pub fn homogeneous(&self) -> Option<(u32, usize)> {
        let mut keys = self.terms.keys();
        let first = keys.next()?;
        let shape = (first.weight(), first.depth());
        keys.all(|k| (k.weight(), k.depth()) == shape)
            .then_some(shape)
    }
}

impl TlCombination {
    /// Common weight of all keys, if there is one.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut keys = self.terms.keys();
        let w = keys.next()?.weight();
        keys.all(|k| k.weight() == w).then_some(w)
    }

    /// Common level of all keys, if there is one.
    pub fn level(&self) -> Option<usize> {
        let mut keys = self.terms.keys();
        let l = keys.next()?.level();
        keys.all(|k| k.level() == l).then_some(l)
    }
}

impl<K: Ord + fmt::Display> fmt::Display for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, q)) in self.terms.iter().enumerate() {
            match (i, q.is_positive()) {
                (0, true) => write!(f, "{q} * {k}")?,
                (0, false) => write!(f, "-{} * {k}", q.abs())?,
                (_, true) => write!(f, " + {q} * {k}")?,
                (_, false) => write!(f, " - {} * {k}", q.abs())?,
            }
        }
        Ok(())
    }
}
