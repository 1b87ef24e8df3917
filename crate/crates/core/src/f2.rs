//! Finite formal sums with coefficients in F2.
//!
//! Every linear object in this crate (group-ring elements, bar chains,
//! tensors, wedges) is a finite F2-combination of basis symbols. Over F2 a
//! combination is just its support, so adding a symbol twice removes it.

use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

/// A finite F2-linear combination of basis symbols, stored as its support.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct F2Sum<T: Ord> {
    support: BTreeSet<T>,
}

impl<T: Ord> Default for F2Sum<T> {
    fn default() -> Self {
        F2Sum { support: BTreeSet::new() }
    }
}

impl<T: Ord> F2Sum<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn singleton(t: T) -> Self {
        let mut s = Self::zero();
        s.toggle(t);
        s
    }

    /// Adds one copy of `t`; returns whether `t` is present afterwards.
    pub fn toggle(&mut self, t: T) -> bool {
        if self.support.remove(&t) {
            false
        } else {
            self.support.insert(t);
            true
        }
    }

    pub fn contains(&self, t: &T) -> bool {
        self.support.contains(t)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, T> {
        self.support.iter()
    }

    /// Sum of coefficients.
    pub fn parity(&self) -> bool {
        self.support.len() % 2 == 1
    }

    /// Pushes every symbol through `f` and recombines mod 2. Symbols mapped to
    /// `None` are dropped (they are zero in the target).
    pub fn filter_map<U: Ord>(&self, mut f: impl FnMut(&T) -> Option<U>) -> F2Sum<U> {
        self.iter().filter_map(&mut f).collect()
    }

    /// Linear extension of `f`, where each symbol is sent to a sum.
    pub fn flat_map<U: Ord>(&self, mut f: impl FnMut(&T) -> F2Sum<U>) -> F2Sum<U> {
        let mut out = F2Sum::zero();
        for t in self.iter() {
            out += f(t);
        }
        out
    }
}

impl<T: Ord + Clone> F2Sum<T> {
    pub fn to_vec(&self) -> Vec<T> {
        self.support.iter().cloned().collect()
    }
}

impl<T: Ord> FromIterator<T> for F2Sum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = Self::zero();
        for t in iter {
            s.toggle(t);
        }
        s
    }
}

impl<T: Ord> Extend<T> for F2Sum<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for t in iter {
            self.toggle(t);
        }
    }
}

impl<T: Ord> IntoIterator for F2Sum<T> {
    type Item = T;
    type IntoIter = btree_set::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.support.into_iter()
    }
}

impl<'a, T: Ord> IntoIterator for &'a F2Sum<T> {
    type Item = &'a T;
    type IntoIter = btree_set::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.support.iter()
    }
}

impl<T: Ord> AddAssign for F2Sum<T> {
    fn add_assign(&mut self, rhs: Self) {
        // iterate over the smaller side
        if rhs.support.len() > self.support.len() {
            let lhs = std::mem::replace(&mut self.support, rhs.support);
            self.extend(lhs);
        } else {
            self.extend(rhs.support);
        }
    }
}

impl<T: Ord + Clone> AddAssign<&F2Sum<T>> for F2Sum<T> {
    fn add_assign(&mut self, rhs: &F2Sum<T>) {
        self.extend(rhs.iter().cloned());
    }
}

impl<T: Ord> Add for F2Sum<T> {
    type Output = F2Sum<T>;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<T: Ord + fmt::Debug> fmt::Debug for F2Sum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.support.iter()).finish()
    }
}
