//! Finitely supported linear combinations over an ordered label set.

use std::collections::btree_map::{self, BTreeMap};

use num_complex::Complex;
use num_traits::Zero;

use crate::scalar::{coeff_deviation, coeff_within, negligible, Real};

/// A finite formal sum `Σ c_l · l`. Negligible coefficients are never stored,
/// so two combinations are equal exactly when their maps are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct LinComb<L: Ord, R: Real> {
    terms: BTreeMap<L, Complex<R>>,
}

impl<L: Ord, R: Real> Default for LinComb<L, R> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<L: Ord + Clone, R: Real> LinComb<L, R> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(label: L) -> Self {
        Self::monomial(Complex::new(R::one(), R::zero()), label)
    }

    pub fn monomial(coeff: Complex<R>, label: L) -> Self {
        let mut out = Self::new();
        out.add_term(label, coeff);
        out
    }

    /// Adds `coeff · label`, merging with an existing term.
    pub fn add_term(&mut self, label: L, coeff: Complex<R>) {
        match self.terms.entry(label) {
            btree_map::Entry::Vacant(e) => {
                if !negligible(&coeff) {
                    e.insert(coeff);
                }
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if negligible(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, label: &L) -> Complex<R> {
        self.terms.get(label).cloned().unwrap_or_else(Complex::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, L, Complex<R>> {
        self.terms.iter()
    }

    pub fn labels(&self) -> btree_map::Keys<'_, L, Complex<R>> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Complex<R>) -> Self {
        let mut out = Self::new();
        for (l, c) in self.iter() {
            out.add_term(l.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Conjugates every coefficient.
    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c.conj())).collect(),
        }
    }

    /// Relabels through `f`, merging labels that collide.
    pub fn map_labels<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> LinComb<M, R> {
        let mut out = LinComb::new();
        for (l, c) in self.iter() {
            out.add_term(f(l), c.clone());
        }
        out
    }

    /// Linear extension of a map sending each label to a combination.
    pub fn extend<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> LinComb<M, R>) -> LinComb<M, R> {
        let mut out = LinComb::new();
        for (l, c) in self.iter() {
            for (m, d) in f(l).iter() {
                out.add_term(m.clone(), c.clone() * d.clone());
            }
        }
        out
    }

    /// Bilinear product through a label multiplication.
    pub fn bilinear<M: Ord + Clone, N: Ord + Clone>(
        &self,
        other: &LinComb<M, R>,
        mut f: impl FnMut(&L, &M) -> Option<N>,
    ) -> LinComb<N, R> {
        let mut out = LinComb::new();
        for (l, c) in self.iter() {
            for (m, d) in other.iter() {
                if let Some(n) = f(l, m) {
                    out.add_term(n, c.clone() * d.clone());
                }
            }
        }
        out
    }

    pub fn coefficient_sum(&self) -> Complex<R> {
        self.terms.values().fold(Complex::zero(), |acc, c| acc + c.clone())
    }

    /// Equality up to `tol` on every coefficient (exact fields: exact equality).
    pub fn within(&self, other: &Self, tol: f64) -> bool {
        if R::EXACT {
            return self == other;
        }
        let zero = Complex::zero();
        self.iter().all(|(l, c)| coeff_within(c, other.terms.get(l).unwrap_or(&zero), tol))
            && other
                .iter()
                .all(|(l, c)| self.terms.contains_key(l) || coeff_within(c, &zero, tol))
    }

    /// Largest coefficient deviation between two combinations.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        let zero = Complex::zero();
        let a = self
            .iter()
            .map(|(l, c)| coeff_deviation(c, other.terms.get(l).unwrap_or(&zero)));
        let b = other
            .iter()
            .filter(|(l, _)| !self.terms.contains_key(l))
            .map(|(_, c)| coeff_deviation(c, &zero));
        a.chain(b).fold(0.0, f64::max)
    }
}

impl<L: Ord + Clone, R: Real> FromIterator<(L, Complex<R>)> for LinComb<L, R> {
    fn from_iter<I: IntoIterator<Item = (L, Complex<R>)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (l, c) in iter {
            out.add_term(l, c);
        }
        out
    }
}

impl<'a, L: Ord, R: Real> IntoIterator for &'a LinComb<L, R> {
    type Item = (&'a L, &'a Complex<R>);
    type IntoIter = btree_map::Iter<'a, L, Complex<R>>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
