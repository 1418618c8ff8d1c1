//! Group algebras `ℂF_n` and their algebraic tensor products.
//!
//! [`AlgebraElement`] is a finitely supported combination of reduced words
//! in a single ambient group. [`Tensor`] is the `K`-fold analogue over word
//! tuples, with a fixed ambient per slot; pairs and triples are the common
//! cases and get aliases.

use num_complex::Complex;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Real;
use crate::words::{self, Rank, ReducedWord};

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<R: Real> {
    ambient: Rank,
    terms: LinComb<ReducedWord, R>,
}

fn check_same(expected: Rank, found: Rank) -> Result<()> {
    if expected != found {
        return Err(Error::AmbientMismatch { expected, found });
    }
    Ok(())
}

impl<R: Real> AlgebraElement<R> {
    pub fn zero(ambient: Rank) -> Self {
        Self { ambient, terms: LinComb::new() }
    }

    /// The unit `1·e`.
    pub fn one(ambient: Rank) -> Self {
        Self::from_word(ReducedWord::identity(ambient))
    }

    pub fn from_word(w: ReducedWord) -> Self {
        Self { ambient: w.ambient(), terms: LinComb::basis(w) }
    }

    pub fn monomial(coeff: Complex<R>, w: ReducedWord) -> Self {
        Self { ambient: w.ambient(), terms: LinComb::monomial(coeff, w) }
    }

    pub fn from_terms(ambient: Rank, terms: impl IntoIterator<Item = (ReducedWord, Complex<R>)>) -> Result<Self> {
        let mut out = Self::zero(ambient);
        for (w, c) in terms {
            out.add_term(w, c)?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, w: ReducedWord, c: Complex<R>) -> Result<()> {
        check_same(self.ambient, w.ambient())?;
        self.terms.add_term(w, c);
        Ok(())
    }

    pub fn ambient(&self) -> Rank {
        self.ambient
    }

    pub fn terms(&self) -> &LinComb<ReducedWord, R> {
        &self.terms
    }

    pub fn coefficient(&self, w: &ReducedWord) -> Complex<R> {
        self.terms.coefficient(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(self.ambient, other.ambient)?;
        Ok(Self { ambient: self.ambient, terms: self.terms.add(&other.terms) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(self.ambient, other.ambient)?;
        Ok(Self { ambient: self.ambient, terms: self.terms.sub(&other.terms) })
    }

    pub fn neg(&self) -> Self {
        Self { ambient: self.ambient, terms: self.terms.neg() }
    }

    pub fn scale(&self, c: &Complex<R>) -> Self {
        Self { ambient: self.ambient, terms: self.terms.scale(c) }
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(self.ambient, other.ambient)?;
        Ok(Self {
            ambient: self.ambient,
            terms: self.terms.bilinear(&other.terms, |a, b| Some(a.mul_unchecked(b))),
        })
    }

    /// `Σ c_w w ↦ Σ conj(c_w) w^{-1}`.
    pub fn star(&self) -> Self {
        Self {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(w, c)| (w.inverse(), c.conj())).collect(),
        }
    }

    pub fn within(&self, other: &Self, tol: f64) -> bool {
        self.ambient == other.ambient && self.terms.within(&other.terms, tol)
    }

    /// Linear extension of a word map into a (possibly different) ambient.
    pub fn map_words(&self, ambient: Rank, mut f: impl FnMut(&ReducedWord) -> Result<ReducedWord>) -> Result<Self> {
        let mut out = Self::zero(ambient);
        for (w, c) in self.terms.iter() {
            out.add_term(f(w)?, c.clone())?;
        }
        Ok(out)
    }

    /// Double-precision copy.
    pub fn to_approx(&self) -> AlgebraElement<f64> {
        AlgebraElement {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), crate::scalar::to_complex64(c))).collect(),
        }
    }
}

/// Finitely supported combination of word `K`-tuples, slot `s` living in
/// `ℂF_{ambients[s]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<const K: usize, R: Real> {
    ambients: [Rank; K],
    terms: LinComb<[ReducedWord; K], R>,
}

pub type TensorElement<R> = Tensor<2, R>;
pub type TripleTensorElement<R> = Tensor<3, R>;

/// Tensor slot selector for [`Tensor::mul_slot`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Left,
    Right,
}

impl<const K: usize, R: Real> Tensor<K, R> {
    pub fn zero(ambients: [Rank; K]) -> Self {
        Self { ambients, terms: LinComb::new() }
    }

    pub fn unit(ambients: [Rank; K]) -> Self {
        Self::basis(ambients.map(ReducedWord::identity))
    }

    /// A single elementary tensor `w_1 ⊗ … ⊗ w_K`, ambients taken from the words.
    pub fn basis(words: [ReducedWord; K]) -> Self {
        Self { ambients: std::array::from_fn(|s| words[s].ambient()), terms: LinComb::basis(words) }
    }

    pub fn add_term(&mut self, words: [ReducedWord; K], c: Complex<R>) -> Result<()> {
        for (s, w) in words.iter().enumerate() {
            check_same(self.ambients[s], w.ambient())?;
        }
        self.terms.add_term(words, c);
        Ok(())
    }

    pub fn ambients(&self) -> [Rank; K] {
        self.ambients
    }

    pub fn terms(&self) -> &LinComb<[ReducedWord; K], R> {
        &self.terms
    }

    pub fn coefficient(&self, words: &[ReducedWord; K]) -> Complex<R> {
        self.terms.coefficient(words)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        for s in 0..K {
            check_same(self.ambients[s], other.ambients[s])?;
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { ambients: self.ambients, terms: self.terms.add(&other.terms) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { ambients: self.ambients, terms: self.terms.sub(&other.terms) })
    }

    pub fn neg(&self) -> Self {
        Self { ambients: self.ambients, terms: self.terms.neg() }
    }

    pub fn scale(&self, c: &Complex<R>) -> Self {
        Self { ambients: self.ambients, terms: self.terms.scale(c) }
    }

    /// Slotwise product `(a_1⊗…)(b_1⊗…) = a_1b_1 ⊗ …`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            ambients: self.ambients,
            terms: self
                .terms
                .bilinear(&other.terms, |a, b| Some(std::array::from_fn(|s| a[s].mul_unchecked(&b[s])))),
        })
    }

    pub fn star(&self) -> Self {
        Self {
            ambients: self.ambients,
            terms: self
                .terms
                .iter()
                .map(|(ws, c)| (std::array::from_fn(|s| ws[s].inverse()), c.conj()))
                .collect(),
        }
    }

    /// Reorders slots: output slot `s` holds input slot `perm[s]`.
    pub fn permute(&self, perm: [usize; K]) -> Self {
        Self {
            ambients: perm.map(|p| self.ambients[p]),
            terms: self.terms.map_labels(|ws| perm.map(|p| ws[p].clone())),
        }
    }

    /// Multiplies `b` into slot `slot` from the right, identity elsewhere.
    pub fn mul_into(&self, slot: usize, b: &AlgebraElement<R>) -> Result<Self> {
        check_same(self.ambients[slot], b.ambient())?;
        Ok(Self {
            ambients: self.ambients,
            terms: self.terms.bilinear(b.terms(), |ws, w| {
                let mut out = ws.clone();
                out[slot] = ws[slot].mul_unchecked(w);
                Some(out)
            }),
        })
    }

    /// Linear extension of a tuple map producing unit-coefficient sums of
    /// `J`-tuples in the given ambients.
    pub fn expand<const J: usize>(
        &self,
        ambients: [Rank; J],
        mut f: impl FnMut(&[ReducedWord; K]) -> Result<Vec<[ReducedWord; J]>>,
    ) -> Result<Tensor<J, R>> {
        let mut out = Tensor::zero(ambients);
        for (ws, c) in self.terms.iter() {
            for image in f(ws)? {
                out.add_term(image, c.clone())?;
            }
        }
        Ok(out)
    }

    pub fn within(&self, other: &Self, tol: f64) -> bool {
        self.ambients == other.ambients && self.terms.within(&other.terms, tol)
    }
}

impl<R: Real> Tensor<2, R> {
    /// The flip `a ⊗ b ↦ b ⊗ a`.
    pub fn flip(&self) -> Self {
        self.permute([1, 0])
    }

    /// Multiplies `b` into the chosen slot: `t·(b⊗1)` or `t·(1⊗b)`.
    pub fn mul_slot(&self, slot: Slot, b: &AlgebraElement<R>) -> Result<Self> {
        match slot {
            Slot::Left => self.mul_into(0, b),
            Slot::Right => self.mul_into(1, b),
        }
    }
}

/// Outer product `a ⊗ b`.
pub fn tensor<R: Real>(a: &AlgebraElement<R>, b: &AlgebraElement<R>) -> TensorElement<R> {
    Tensor {
        ambients: [a.ambient(), b.ambient()],
        terms: a.terms().bilinear(b.terms(), |x, y| Some([x.clone(), y.clone()])),
    }
}

/// `apply_tensor_right`: multiplies `b` into the chosen slot of `t`.
pub fn apply_tensor_slot<R: Real>(t: &TensorElement<R>, b: &AlgebraElement<R>, slot: Slot) -> Result<TensorElement<R>> {
    t.mul_slot(slot, b)
}

/// Linear extension of `F_{nm} → F_n × F_m` to `ℂF_{nm} → ℂF_n ⊙ ℂF_m`.
pub fn varphi_alg<R: Real>(n: u32, m: u32, a: &AlgebraElement<R>) -> Result<TensorElement<R>> {
    check_same(Rank::product(n, m)?, a.ambient())?;
    let mut out = Tensor::zero([Rank::finite(n)?, Rank::finite(m)?]);
    for (w, c) in a.terms().iter() {
        let pq = words::phi(n, m, w)?;
        out.add_term([pq.first, pq.second], c.clone())?;
    }
    Ok(out)
}

/// Linear extension of `F_∞ → F_∞ × F_n`.
pub fn varphi_inf_alg<R: Real>(n: u32, a: &AlgebraElement<R>) -> Result<TensorElement<R>> {
    check_same(Rank::Infinite, a.ambient())?;
    let mut out = Tensor::zero([Rank::Infinite, Rank::finite(n)?]);
    for (w, c) in a.terms().iter() {
        let pq = words::phi_inf(n, w)?;
        out.add_term([pq.first, pq.second], c.clone())?;
    }
    Ok(out)
}

/// The cocommutative comultiplication `w ↦ w ⊗ w`.
pub fn standard_delta<R: Real>(a: &AlgebraElement<R>) -> TensorElement<R> {
    Tensor {
        ambients: [a.ambient(), a.ambient()],
        terms: a.terms().map_labels(|w| [w.clone(), w.clone()]),
    }
}

/// Both sides of the compatibility between the splitting map and the
/// standard comultiplications, as 4-fold tensors over `(F_n, F_n, F_m, F_m)`:
/// `(δ_n⊗δ_m)∘φ_{n,m}` and `(id⊗τ⊗id)∘(φ_{n,m}⊗φ_{n,m})∘δ_{nm}`.
pub fn standard_compatibility_sides<R: Real>(
    n: u32,
    m: u32,
    a: &AlgebraElement<R>,
) -> Result<(Tensor<4, R>, Tensor<4, R>)> {
    let (rn, rm) = (Rank::finite(n)?, Rank::finite(m)?);
    let lhs = varphi_alg(n, m, a)?.expand([rn, rn, rm, rm], |[p, q]| {
        Ok(vec![[p.clone(), p.clone(), q.clone(), q.clone()]])
    })?;
    let rhs = standard_delta(a)
        .expand([rn, rm, rn, rm], |[u, v]| {
            let (pu, pv) = (words::phi(n, m, u)?, words::phi(n, m, v)?);
            Ok(vec![[pu.first, pu.second, pv.first, pv.second]])
        })?
        .permute([0, 2, 1, 3]);
    Ok((lhs, rhs))
}

impl<R: Real> AlgebraElement<R> {
    /// Scalar multiple of the unit.
    pub fn scalar(ambient: Rank, c: Complex<R>) -> Self {
        Self::monomial(c, ReducedWord::identity(ambient))
    }

    pub fn is_one(&self) -> bool {
        self.len() == 1 && self.coefficient(&ReducedWord::identity(self.ambient)) == Complex::one()
    }
}
