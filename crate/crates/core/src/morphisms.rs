//! Rank-preserving monomial endomorphisms of `ℂF_*`: the phase flow `α_t`,
//! the generator reversal `β`, and a checker for the bialgebra-morphism law
//! `(f⊗f)∘Δ_φ = Δ_φ∘f`.

use std::f64::consts::TAU;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, One};

use crate::algebra::AlgebraElement;
use crate::bialgebra::{delta_phi, DirectSumElement, GradedTensor};
use crate::scalar::Real;
use crate::words::{Rank, ReducedWord};

/// An endomorphism sending every word to a scalar multiple of a word of
/// the same rank.
pub trait GradedEndo<R: Real> {
    fn apply_word(&self, w: &ReducedWord) -> (Complex<R>, ReducedWord);

    fn apply(&self, x: &DirectSumElement<R>) -> DirectSumElement<R> {
        x.map_components(|a| {
            let mut out = AlgebraElement::zero(a.ambient());
            for (w, c) in a.terms().iter() {
                let (phase, image) = self.apply_word(w);
                out.add_term(image, phase * c).expect("rank preserved");
            }
            out
        })
    }

    fn apply_tensor<const K: usize>(&self, t: &GradedTensor<K, R>) -> GradedTensor<K, R> {
        let mut out = GradedTensor::zero();
        for (ws, c) in t.terms().iter() {
            let mut coeff = c.clone();
            let images = std::array::from_fn(|k| {
                let (phase, image) = self.apply_word(&ws[k]);
                coeff = coeff.clone() * phase;
                image
            });
            out.add_term(images, coeff);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Identity;

impl<R: Real> GradedEndo<R> for Identity {
    fn apply_word(&self, w: &ReducedWord) -> (Complex<R>, ReducedWord) {
        (Complex::one(), w.clone())
    }
}

/// `β^{(n)}(g_i) = g_{n−i+1}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Beta;

impl<R: Real> GradedEndo<R> for Beta {
    fn apply_word(&self, w: &ReducedWord) -> (Complex<R>, ReducedWord) {
        let n = match w.ambient() {
            Rank::Finite(n) => n,
            Rank::Infinite => panic!("β is defined on finite ranks only"),
        };
        (Complex::one(), w.map_generators(w.ambient(), |i| n - i + 1).expect("reversal stays in range"))
    }
}

/// `α_t^{(n)}(g_i) = e^{i t log n} g_i`, so a word of exponent sum `s` picks
/// up the phase `e^{i t s log n}`.
#[derive(Clone, Copy, Debug)]
pub struct Alpha {
    pub t: f64,
}

impl Alpha {
    /// The phase angle reduced to `[0, 2π)`.
    pub fn angle(&self, n: u32, exponent_sum: i64) -> f64 {
        (self.t * (n as f64).ln() * exponent_sum as f64).rem_euclid(TAU)
    }
}

impl<R: Real + Float> GradedEndo<R> for Alpha {
    fn apply_word(&self, w: &ReducedWord) -> (Complex<R>, ReducedWord) {
        let n = match w.ambient() {
            Rank::Finite(n) => n,
            Rank::Infinite => panic!("α_t is defined on finite ranks only"),
        };
        let theta = R::from_f64(self.angle(n, w.exponent_sum())).expect("finite angle");
        (Complex::from_polar(R::one(), theta), w.clone())
    }
}

pub fn alpha(t: f64, x: &DirectSumElement<f64>) -> DirectSumElement<f64> {
    Alpha { t }.apply(x)
}

pub fn beta<R: Real>(x: &DirectSumElement<R>) -> DirectSumElement<R> {
    Beta.apply(x)
}

/// Largest coefficient deviation between `(f⊗f)(Δ_φ x)` and `Δ_φ(f x)`.
pub fn morphism_deviation<R: Real, F: GradedEndo<R>>(f: &F, x: &DirectSumElement<R>) -> f64 {
    let lhs = f.apply_tensor(&delta_phi(x));
    let rhs = delta_phi(&f.apply(x));
    lhs.max_deviation(&rhs)
}

pub fn bialgebra_morphism_check<R: Real, F: GradedEndo<R>>(f: &F, x: &DirectSumElement<R>, tol: f64) -> bool {
    let lhs = f.apply_tensor(&delta_phi(x));
    let rhs = delta_phi(&f.apply(x));
    lhs.within(&rhs, tol)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupLawReport {
    /// `max ‖α_t α_s x − α_{t+s} x‖_∞` over the corpus and parameter pairs.
    pub alpha_composition: f64,
    /// `β(β(x)) = x` exactly on every corpus element.
    pub beta_involution: bool,
    /// `max ‖β α_t x − α_t β x‖_∞`.
    pub beta_alpha_commute: f64,
    /// `max |ε(α_t x) − ε(x)|`.
    pub alpha_counit: f64,
    pub tol: f64,
}

impl GroupLawReport {
    pub fn passed(&self) -> bool {
        self.beta_involution
            && self.alpha_composition <= self.tol
            && self.beta_alpha_commute <= self.tol
            && self.alpha_counit <= self.tol
    }
}

/// Checks `α_t∘α_s = α_{t+s}`, `β² = id` and `β∘α_t = α_t∘β` over every
/// pair drawn from `params`.
pub fn group_law_checks(corpus: &[DirectSumElement<BigRational>], params: &[f64], tol: f64) -> GroupLawReport {
    let mut report = GroupLawReport {
        alpha_composition: 0.0,
        beta_involution: true,
        beta_alpha_commute: 0.0,
        alpha_counit: 0.0,
        tol,
    };
    for x in corpus {
        report.beta_involution &= beta(&beta(x)) == *x;
        let xa = x.to_approx();
        let eps = crate::bialgebra::counit(&xa);
        for &t in params {
            let at = alpha(t, &xa);
            report.beta_alpha_commute = report.beta_alpha_commute.max(beta(&at).max_deviation(&alpha(t, &beta(&xa))));
            report.alpha_counit = report.alpha_counit.max((crate::bialgebra::counit(&at) - eps).norm());
            for &s in params {
                let dev = alpha(t, &alpha(s, &xa)).max_deviation(&alpha(t + s, &xa));
                report.alpha_composition = report.alpha_composition.max(dev);
            }
        }
    }
    report
}
