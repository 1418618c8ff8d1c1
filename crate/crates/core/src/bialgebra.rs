//! The graded algebra `ℂF_* = ⊕_{n≥1} ℂF_n`, its comultiplication
//! `Δ_φ(x) = Σ_{ml=n} φ_{m,l}(x)` for `x ∈ ℂF_n`, the counit, the smallest
//! unitization, the coaction on `ℂF_∞`, and checkers for each axiom.
//!
//! Graded tensors are stored flat: a term is a tuple of words, and each word
//! carries its own rank. Products of terms whose rank tuples differ vanish,
//! matching the block structure of `⊕_{n,m} ℂF_n ⊙ ℂF_m`.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::{self, AlgebraElement, Tensor, TensorElement};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Real;
use crate::words::{self, Rank, ReducedWord};

/// An element of `ℂF_*`: finitely many nonzero rank components.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectSumElement<R: Real> {
    components: BTreeMap<u32, AlgebraElement<R>>,
}

impl<R: Real> Default for DirectSumElement<R> {
    fn default() -> Self {
        Self { components: BTreeMap::new() }
    }
}

impl<R: Real> DirectSumElement<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_component(a: AlgebraElement<R>) -> Result<Self> {
        let mut out = Self::zero();
        out.add_component(a)?;
        Ok(out)
    }

    pub fn from_word(w: ReducedWord) -> Result<Self> {
        Self::from_component(AlgebraElement::from_word(w))
    }

    /// Adds `a` into its rank component.
    pub fn add_component(&mut self, a: AlgebraElement<R>) -> Result<()> {
        let n = a.ambient().expect_finite()?;
        let sum = match self.components.remove(&n) {
            Some(prev) => prev.add(&a)?,
            None => a,
        };
        if !sum.is_zero() {
            self.components.insert(n, sum);
        }
        Ok(())
    }

    pub fn component(&self, n: u32) -> Option<&AlgebraElement<R>> {
        self.components.get(&n)
    }

    pub fn components(&self) -> &BTreeMap<u32, AlgebraElement<R>> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// All terms `(w, c)` across components, in rank order.
    pub fn terms(&self) -> impl Iterator<Item = (&ReducedWord, &Complex<R>)> {
        self.components.values().flat_map(|a| a.terms().iter())
    }

    fn zip(&self, other: &Self, f: impl Fn(&AlgebraElement<R>, &AlgebraElement<R>) -> AlgebraElement<R>) -> Self {
        let mut components = BTreeMap::new();
        for n in self.components.keys().chain(other.components.keys()) {
            if components.contains_key(n) {
                continue;
            }
            let zero = AlgebraElement::zero(Rank::Finite(*n));
            let a = self.components.get(n).unwrap_or(&zero);
            let b = other.components.get(n).unwrap_or(&zero);
            let c = f(a, b);
            if !c.is_zero() {
                components.insert(*n, c);
            }
        }
        Self { components }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.add(b).expect("same rank"))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.sub(b).expect("same rank"))
    }

    pub fn neg(&self) -> Self {
        self.map_components(|a| a.neg())
    }

    pub fn scale(&self, c: &Complex<R>) -> Self {
        self.map_components(|a| a.scale(c))
    }

    /// Rank-by-rank product; distinct ranks annihilate.
    pub fn mul(&self, other: &Self) -> Self {
        let mut components = BTreeMap::new();
        for (n, a) in &self.components {
            if let Some(b) = other.components.get(n) {
                let c = a.mul(b).expect("same rank");
                if !c.is_zero() {
                    components.insert(*n, c);
                }
            }
        }
        Self { components }
    }

    pub fn star(&self) -> Self {
        self.map_components(|a| a.star())
    }

    pub fn map_components(&self, f: impl Fn(&AlgebraElement<R>) -> AlgebraElement<R>) -> Self {
        Self {
            components: self
                .components
                .iter()
                .map(|(n, a)| (*n, f(a)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn within(&self, other: &Self, tol: f64) -> bool {
        let zero_of = |n: u32| AlgebraElement::zero(Rank::Finite(n));
        self.components.keys().chain(other.components.keys()).all(|n| {
            let a = self.components.get(n).cloned().unwrap_or_else(|| zero_of(*n));
            let b = other.components.get(n).cloned().unwrap_or_else(|| zero_of(*n));
            a.within(&b, tol)
        })
    }

    pub fn max_deviation(&self, other: &Self) -> f64 {
        self.flat().max_deviation(&other.flat())
    }

    fn flat(&self) -> LinComb<ReducedWord, R> {
        self.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
    }

    pub fn to_approx(&self) -> DirectSumElement<f64> {
        DirectSumElement {
            components: self.components.iter().map(|(n, a)| (*n, a.to_approx())).collect(),
        }
    }
}

/// A rank-graded `K`-fold tensor: an element of `⊕ ℂF_{n_1} ⊙ … ⊙ ℂF_{n_K}`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedTensor<const K: usize, R: Real> {
    terms: LinComb<[ReducedWord; K], R>,
}

pub type DirectSumTensor<R> = GradedTensor<2, R>;
pub type DirectSumTriple<R> = GradedTensor<3, R>;

impl<const K: usize, R: Real> Default for GradedTensor<K, R> {
    fn default() -> Self {
        Self { terms: LinComb::new() }
    }
}

fn ranks_of<const K: usize>(ws: &[ReducedWord; K]) -> [Rank; K] {
    std::array::from_fn(|s| ws[s].ambient())
}

impl<const K: usize, R: Real> GradedTensor<K, R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(words: [ReducedWord; K]) -> Self {
        Self { terms: LinComb::basis(words) }
    }

    pub fn add_term(&mut self, words: [ReducedWord; K], c: Complex<R>) {
        self.terms.add_term(words, c);
    }

    pub fn terms(&self) -> &LinComb<[ReducedWord; K], R> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Splits into per-rank-tuple components.
    pub fn components(&self) -> BTreeMap<[u32; K], Tensor<K, R>> {
        let mut out: BTreeMap<[u32; K], Tensor<K, R>> = BTreeMap::new();
        for (ws, c) in self.terms.iter() {
            let ranks = ranks_of(ws);
            let key = ranks.map(|r| r.as_finite().unwrap_or(0));
            out.entry(key)
                .or_insert_with(|| Tensor::zero(ranks))
                .add_term(ws.clone(), c.clone())
                .expect("ranks taken from the words");
        }
        out
    }

    pub fn from_tensor(t: &Tensor<K, R>) -> Self {
        Self { terms: t.terms().clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { terms: self.terms.add(&other.terms) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { terms: self.terms.sub(&other.terms) }
    }

    pub fn scale(&self, c: &Complex<R>) -> Self {
        Self { terms: self.terms.scale(c) }
    }

    /// Blockwise slotwise product.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            terms: self.terms.bilinear(&other.terms, |a, b| {
                (ranks_of(a) == ranks_of(b)).then(|| std::array::from_fn(|s| a[s].mul_unchecked(&b[s])))
            }),
        }
    }

    pub fn star(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(ws, c)| (std::array::from_fn(|s| ws[s].inverse()), c.conj()))
                .collect(),
        }
    }

    pub fn permute(&self, perm: [usize; K]) -> Self {
        Self { terms: self.terms.map_labels(|ws| perm.map(|p| ws[p].clone())) }
    }

    /// Linear extension of a tuple map with unit-coefficient images.
    pub fn expand<const J: usize>(&self, mut f: impl FnMut(&[ReducedWord; K]) -> Vec<[ReducedWord; J]>) -> GradedTensor<J, R> {
        let mut out = GradedTensor::zero();
        for (ws, c) in self.terms.iter() {
            for image in f(ws) {
                out.add_term(image, c.clone());
            }
        }
        out
    }

    pub fn within(&self, other: &Self, tol: f64) -> bool {
        self.terms.within(&other.terms, tol)
    }

    pub fn max_deviation(&self, other: &Self) -> f64 {
        self.terms.max_deviation(&other.terms)
    }
}

impl<R: Real> GradedTensor<2, R> {
    pub fn flip(&self) -> Self {
        self.permute([1, 0])
    }

    /// Applies a scalar functional to one slot, leaving a graded element.
    fn contract(&self, slot: usize, f: impl Fn(&ReducedWord) -> Complex<R>) -> DirectSumElement<R> {
        let keep = 1 - slot;
        let mut out = DirectSumElement::zero();
        for (ws, c) in self.terms.iter() {
            let v = f(&ws[slot]);
            if !v.is_zero() {
                out.add_component(AlgebraElement::monomial(c.clone() * v, ws[keep].clone()))
                    .expect("graded tensors hold finite ranks");
            }
        }
        out
    }
}

/// Ordered pairs `(m, l)` with `ml = n`, increasing in `m`.
pub fn divisor_pairs(n: u32) -> Vec<(u32, u32)> {
    let mut small = Vec::new();
    let mut d = 1u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            small.push(d);
        }
        d += 1;
    }
    let mut all: Vec<u32> = small.clone();
    for &d in small.iter().rev() {
        if d * d != n {
            all.push(n / d);
        }
    }
    all.into_iter().map(|m| (m, n / m)).collect()
}

/// `Δ_φ` on a single word: one elementary tensor per factorization of its rank.
pub fn delta_word(w: &ReducedWord) -> Result<Vec<[ReducedWord; 2]>> {
    let n = w.ambient().expect_finite()?;
    divisor_pairs(n)
        .into_iter()
        .map(|(m, l)| words::phi(m, l, w).map(|pq| [pq.first, pq.second]))
        .collect()
}

/// The comultiplication `Δ_φ`.
pub fn delta_phi<R: Real>(x: &DirectSumElement<R>) -> DirectSumTensor<R> {
    let mut out = GradedTensor::zero();
    for (w, c) in x.terms() {
        for pair in delta_word(w).expect("direct sums hold finite ranks") {
            out.add_term(pair, c.clone());
        }
    }
    out
}

/// `ε` on a word: 1 on `F_1`, 0 on higher ranks.
pub fn counit_word<R: Real>(w: &ReducedWord) -> Complex<R> {
    if w.ambient() == Rank::Finite(1) {
        Complex::one()
    } else {
        Complex::zero()
    }
}

/// The counit: coefficient sum of the rank-1 component.
pub fn counit<R: Real>(x: &DirectSumElement<R>) -> Complex<R> {
    x.component(1).map_or_else(Complex::zero, |a| a.terms().coefficient_sum())
}

/// Both sides of coassociativity on `x`.
#[derive(Clone, Debug)]
pub struct CoassocOutcome<R: Real> {
    pub lhs: DirectSumTriple<R>,
    pub rhs: DirectSumTriple<R>,
    pub equal: bool,
}

pub fn coassoc_sides<R: Real>(x: &DirectSumElement<R>) -> (DirectSumTriple<R>, DirectSumTriple<R>) {
    let d = delta_phi(x);
    let lhs = d.expand(|[a, b]| {
        delta_word(a).expect("finite").into_iter().map(|[a1, a2]| [a1, a2, b.clone()]).collect()
    });
    let rhs = d.expand(|[a, b]| {
        delta_word(b).expect("finite").into_iter().map(|[b1, b2]| [a.clone(), b1, b2]).collect()
    });
    (lhs, rhs)
}

/// Compares `(Δ_φ⊗id)Δ_φ(x)` with `(id⊗Δ_φ)Δ_φ(x)`.
pub fn coassoc_check<R: Real>(x: &DirectSumElement<R>) -> CoassocOutcome<R> {
    let (lhs, rhs) = coassoc_sides(x);
    let equal = lhs.within(&rhs, R::DEFAULT_TOL);
    CoassocOutcome { lhs, rhs, equal }
}

/// `(ε⊗id)Δ_φ(x)` and `(id⊗ε)Δ_φ(x)`.
pub fn counit_sides<R: Real>(x: &DirectSumElement<R>) -> (DirectSumElement<R>, DirectSumElement<R>) {
    let d = delta_phi(x);
    (d.contract(0, counit_word), d.contract(1, counit_word))
}

/// Checks `(ε⊗id)Δ_φ = id = (id⊗ε)Δ_φ` on `x`.
pub fn counit_check<R: Real>(x: &DirectSumElement<R>) -> bool {
    let (l, r) = counit_sides(x);
    l.within(x, R::DEFAULT_TOL) && r.within(x, R::DEFAULT_TOL)
}

/// Mixed coassociativity of the splitting maps on `z ∈ F_{nml}`:
/// `(id_n⊗φ_{m,l})∘φ_{n,ml} = (φ_{n,m}⊗id_l)∘φ_{nm,l}`, evaluated as triple tensors.
pub fn wcs_sides<R: Real>(
    n: u32,
    m: u32,
    l: u32,
    a: &AlgebraElement<R>,
) -> Result<(Tensor<3, R>, Tensor<3, R>)> {
    let ranks = [Rank::finite(n)?, Rank::finite(m)?, Rank::finite(l)?];
    let lhs = algebra::varphi_alg(n, m * l, a)?.expand(ranks, |[p, q]| {
        let q12 = words::phi(m, l, q)?;
        Ok(vec![[p.clone(), q12.first, q12.second]])
    })?;
    let rhs = algebra::varphi_alg(n * m, l, a)?.expand(ranks, |[u, v]| {
        let u12 = words::phi(n, m, u)?;
        Ok(vec![[u12.first, u12.second, v.clone()]])
    })?;
    Ok((lhs, rhs))
}

pub fn wcs_check(n: u32, m: u32, l: u32, z: &ReducedWord) -> Result<bool> {
    let a = AlgebraElement::<num_rational::BigRational>::from_word(z.clone());
    let (lhs, rhs) = wcs_sides(n, m, l, &a)?;
    Ok(lhs == rhs)
}

/// `(ε_1⊗id_n)∘φ_{1,n} = id = (id_n⊗ε_1)∘φ_{n,1}` on `z ∈ F_n`.
pub fn counit_axiom_check(n: u32, z: &ReducedWord) -> Result<bool> {
    type Q = num_rational::BigRational;
    let rn = Rank::finite(n)?;
    let a = AlgebraElement::<Q>::from_word(z.clone());
    if a.ambient() != rn {
        return Err(Error::AmbientMismatch { expected: rn, found: a.ambient() });
    }
    let contract = |t: TensorElement<Q>, slot: usize| -> Result<AlgebraElement<Q>> {
        let mut out = AlgebraElement::zero(rn);
        for (ws, c) in t.terms().iter() {
            out.add_term(ws[1 - slot].clone(), c.clone() * counit_word::<Q>(&ws[slot]))?;
        }
        Ok(out)
    };
    let left = contract(algebra::varphi_alg(1, n, &a)?, 0)?;
    let right = contract(algebra::varphi_alg(n, 1, &a)?, 1)?;
    Ok(left == a && right == a)
}

/// `a + λ·1̃` in the smallest unitization of `ℂF_*`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitizedElement<R: Real> {
    pub body: DirectSumElement<R>,
    pub unit: Complex<R>,
}

/// `T + μ·(1̃⊗1̃)`; closed under products since `Δ̂` never reaches the
/// mixed summands `A⊗1̃` and `1̃⊗A`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitizedTensor<R: Real> {
    pub body: DirectSumTensor<R>,
    pub unit: Complex<R>,
}

impl<R: Real> UnitizedElement<R> {
    pub fn new(body: DirectSumElement<R>, unit: Complex<R>) -> Self {
        Self { body, unit }
    }

    pub fn unit() -> Self {
        Self::new(DirectSumElement::zero(), Complex::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let body = self
            .body
            .mul(&other.body)
            .add(&self.body.scale(&other.unit))
            .add(&other.body.scale(&self.unit));
        Self::new(body, self.unit.clone() * other.unit.clone())
    }
}

impl<R: Real> UnitizedTensor<R> {
    pub fn mul(&self, other: &Self) -> Self {
        let body = self
            .body
            .mul(&other.body)
            .add(&self.body.scale(&other.unit))
            .add(&other.body.scale(&self.unit));
        Self { body, unit: self.unit.clone() * other.unit.clone() }
    }

    pub fn within(&self, other: &Self, tol: f64) -> bool {
        self.body.within(&other.body, tol) && crate::scalar::coeff_within(&self.unit, &other.unit, tol)
    }
}

/// `Δ̂(a + λ1̃) = Δ_φ(a) + λ(1̃⊗1̃)`.
pub fn unitized_delta<R: Real>(x: &UnitizedElement<R>) -> UnitizedTensor<R> {
    UnitizedTensor { body: delta_phi(&x.body), unit: x.unit.clone() }
}

/// `ε̃(a + λ1̃) = ε(a) + λ`.
pub fn unitized_counit<R: Real>(x: &UnitizedElement<R>) -> Complex<R> {
    counit(&x.body) + x.unit.clone()
}

/// Checks `(ε̃⊗id)Δ̂ = id = (id⊗ε̃)Δ̂` on `x`.
pub fn unitized_counit_check<R: Real>(x: &UnitizedElement<R>) -> bool {
    let d = unitized_delta(x);
    let left = d.body.contract(0, counit_word);
    let right = d.body.contract(1, counit_word);
    let tol = R::DEFAULT_TOL;
    let unit_ok = crate::scalar::coeff_within(&d.unit, &x.unit, tol);
    unit_ok && left.within(&x.body, tol) && right.within(&x.body, tol)
}

/// Checks the elementary tensor `x ⊗ y` is reproduced as both
/// `φ(z)(x′⊗1)` and `φ(z′)(1⊗y′)` by the constructed witnesses.
pub fn verify_cancellation(x: &ReducedWord, y: &ReducedWord) -> Result<bool> {
    type Q = num_rational::BigRational;
    let n = x.ambient().expect_finite()?;
    let m = y.ambient().expect_finite()?;
    let target = TensorElement::<Q>::basis([x.clone(), y.clone()]);

    let (xp, z) = words::cancellation_witness_left(x, y)?;
    let left = algebra::varphi_alg(n, m, &AlgebraElement::<Q>::from_word(z))?
        .mul_slot(algebra::Slot::Left, &AlgebraElement::from_word(xp))?;

    let (yp, z) = words::cancellation_witness_right(x, y)?;
    let right = algebra::varphi_alg(n, m, &AlgebraElement::<Q>::from_word(z))?
        .mul_slot(algebra::Slot::Right, &AlgebraElement::from_word(yp))?;

    Ok(left == target && right == target)
}

/// The coaction `Γ_φ` truncated to its first `count` components
/// `φ_{∞,1}(x), …, φ_{∞,count}(x)`.
pub fn coaction<R: Real>(x: &AlgebraElement<R>, count: u32) -> Result<Vec<TensorElement<R>>> {
    if count == 0 {
        return Err(Error::Invalid("coaction truncation must be at least 1".into()));
    }
    (1..=count).map(|n| algebra::varphi_inf_alg(n, x)).collect()
}

/// Both composites of the comodule identity on `x ∈ F_∞`, over `(F_∞, F_n, F_m)`:
/// `(φ_{∞,n}⊗id_m)∘φ_{∞,m}` and `(id_∞⊗φ_{n,m})∘φ_{∞,nm}`.
pub fn comodule_sides<R: Real>(n: u32, m: u32, a: &AlgebraElement<R>) -> Result<(Tensor<3, R>, Tensor<3, R>)> {
    let ranks = [Rank::Infinite, Rank::finite(n)?, Rank::finite(m)?];
    let lhs = algebra::varphi_inf_alg(m, a)?.expand(ranks, |[u, v]| {
        let u12 = words::phi_inf(n, u)?;
        Ok(vec![[u12.first, u12.second, v.clone()]])
    })?;
    let rhs = algebra::varphi_inf_alg(n * m, a)?.expand(ranks, |[p, q]| {
        let q12 = words::phi(n, m, q)?;
        Ok(vec![[p.clone(), q12.first, q12.second]])
    })?;
    Ok((lhs, rhs))
}

pub fn comodule_check(n: u32, m: u32, x: &ReducedWord) -> Result<bool> {
    let a = AlgebraElement::<num_rational::BigRational>::from_word(x.clone());
    let (lhs, rhs) = comodule_sides(n, m, &a)?;
    Ok(lhs == rhs)
}
