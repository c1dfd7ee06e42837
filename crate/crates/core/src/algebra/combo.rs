use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::word::Word;
use crate::scalar::ComplexScalar;

/// A finitely supported combination `sum_K F(K) K` over an ordered basis.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCombination<K: Ord> {
    terms: BTreeMap<K, ComplexScalar>,
}

impl<K: Ord> Default for LinearCombination<K> {
    fn default() -> Self {
        LinearCombination { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinearCombination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(ComplexScalar::one(), key)
    }

    pub fn term(coeff: ComplexScalar, key: K) -> Self {
        let mut out = Self::zero();
        out.add_term(coeff, key);
        out
    }

    /// Accumulate `coeff * key`, dropping the entry if it cancels.
    pub fn add_term(&mut self, coeff: ComplexScalar, key: K) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, key: &K) -> ComplexScalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, ComplexScalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`is_zero`](Self::is_zero): no terms survive.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &ComplexScalar) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.add_term(v * c, k.clone());
        }
        out
    }

    /// Apply `f` to every key, merging collisions.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinearCombination<L> {
        let mut out = LinearCombination::zero();
        for (k, v) in &self.terms {
            out.add_term(v.clone(), f(k));
        }
        out
    }
}

impl<W: Word> LinearCombination<W> {
    /// The algebra unit (empty word).
    pub fn unit() -> Self {
        Self::basis(W::unit())
    }

    pub fn word(w: W) -> Self {
        Self::basis(w)
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(ca * cb, a.concat(b));
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, ComplexScalar)> for LinearCombination<K> {
    fn from_iter<I: IntoIterator<Item = (K, ComplexScalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(c, k);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinearCombination<K> {
    type Item = (&'a K, &'a ComplexScalar);
    type IntoIter = btree_map::Iter<'a, K, ComplexScalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add<&LinearCombination<K>> for &LinearCombination<K> {
    type Output = LinearCombination<K>;
    fn add(self, rhs: &LinearCombination<K>) -> LinearCombination<K> {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(v.clone(), k.clone());
        }
        out
    }
}

impl<K: Ord + Clone> Sub<&LinearCombination<K>> for &LinearCombination<K> {
    type Output = LinearCombination<K>;
    fn sub(self, rhs: &LinearCombination<K>) -> LinearCombination<K> {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(-v, k.clone());
        }
        out
    }
}

impl<K: Ord + Clone> Neg for &LinearCombination<K> {
    type Output = LinearCombination<K>;
    fn neg(self) -> LinearCombination<K> {
        self.scale(&-ComplexScalar::one())
    }
}

impl<W: Word> Mul<&LinearCombination<W>> for &LinearCombination<W> {
    type Output = LinearCombination<W>;
    fn mul(self, rhs: &LinearCombination<W>) -> LinearCombination<W> {
        self.product(rhs)
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinearCombination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({v})*{k}")?;
        }
        Ok(())
    }
}
