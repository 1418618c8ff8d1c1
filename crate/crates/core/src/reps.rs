//! Representations at the level of basis vectors.
//!
//! The positive definite functions `f_i^{(n)}` (indicator of `H_i = ⟨g_i⟩`),
//! the permutation representations on `ℓ²(F_n/H_i)`, the left regular
//! representation, and the representation `(π⊗π′)∘φ_{n,m}` obtained by pulling
//! back a tensor product along the splitting map. Vectors are finitely
//! supported, so every action is an exact relabeling of basis vectors.
//!
//! The probes here report what they find instead of asserting the expected
//! identities: pulled-back states equal 1 on the whole kernel of `φ_{n,m}`,
//! so they cannot agree everywhere with `f_{m(i−1)+j}^{(nm)}`.

use std::collections::{BTreeSet, VecDeque};

use nalgebra::DMatrix;
use num_complex::Complex;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Real;
use crate::words::{self, PairWord, Rank, ReducedWord, Syllable};

/// A finitely supported vector over the basis labelled by `L`.
pub type SuppVector<L, R> = LinComb<L, R>;

/// The state `f_i^{(n)}`: 1 on `⟨g_i⟩`, 0 elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PdFunction {
    pub n: u32,
    pub i: u32,
}

impl PdFunction {
    pub fn new(n: u32, i: u32) -> Result<Self> {
        Rank::finite(n)?;
        if i == 0 || i > n {
            return Err(Error::ParameterOutOfRange { name: "i", value: i, bound: n });
        }
        Ok(Self { n, i })
    }

    pub fn eval(&self, w: &ReducedWord) -> Result<u8> {
        if w.ambient() != Rank::Finite(self.n) {
            return Err(Error::AmbientMismatch { expected: Rank::Finite(self.n), found: w.ambient() });
        }
        Ok(in_cyclic(w, self.i) as u8)
    }
}

fn in_cyclic(w: &ReducedWord, i: u32) -> bool {
    match w.syllables() {
        [] => true,
        [s] => s.gen == i,
        _ => false,
    }
}

pub fn f_eval(f: &PdFunction, w: &ReducedWord) -> Result<u8> {
    f.eval(w)
}

/// `(f_i^{(n)} ⊗ f_j^{(m)})(φ_{n,m}(z))`.
pub fn f_pullback_eval(n: u32, i: u32, m: u32, j: u32, z: &ReducedWord) -> Result<u8> {
    let (fi, fj) = (PdFunction::new(n, i)?, PdFunction::new(m, j)?);
    let pq = words::phi(n, m, z)?;
    Ok(fi.eval(&pq.first)? * fj.eval(&pq.second)?)
}

/// A word where the pulled-back state and `f_{m(i−1)+j}^{(nm)}` differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    #[serde(serialize_with = "crate::json::serialize_word")]
    pub z: ReducedWord,
    pub pullback: u8,
    pub direct: u8,
}

/// Compares `f_i^{(n)} ⊗_φ f_j^{(m)}` with `f_{m(i−1)+j}^{(nm)}` on every
/// word of the radius-`radius` ball of `F_{nm}`; returns all disagreements.
pub fn claim_probe_pd(n: u32, m: u32, i: u32, j: u32, radius: u32) -> Result<Vec<Disagreement>> {
    let nm = Rank::product(n, m)?.expect_finite()?;
    let direct_f = PdFunction::new(nm, words::join_index(i, j, m))?;
    PdFunction::new(n, i)?;
    PdFunction::new(m, j)?;
    let mut out = Vec::new();
    for z in words::enumerate_ball(nm, radius)? {
        let pullback = f_pullback_eval(n, i, m, j, &z)?;
        let direct = direct_f.eval(&z)?;
        if pullback != direct {
            out.push(Disagreement { z, pullback, direct });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GramOutcome {
    pub min_eigenvalue: f64,
    pub psd: bool,
}

/// Minimum eigenvalue of `[f(s^{-1}t)]_{s,t}` over `sample`, and whether it
/// is `≥ −tol`.
pub fn gram_psd(f: impl Fn(&ReducedWord) -> f64, sample: &[ReducedWord], tol: f64) -> Result<GramOutcome> {
    if sample.is_empty() {
        return Err(Error::Invalid("gram sample must be nonempty".into()));
    }
    let distinct: BTreeSet<&ReducedWord> = sample.iter().collect();
    if distinct.len() != sample.len() {
        return Err(Error::Invalid("gram sample words must be distinct".into()));
    }
    let k = sample.len();
    let mut g = DMatrix::<f64>::zeros(k, k);
    for (a, s) in sample.iter().enumerate() {
        let sinv = s.inverse();
        for (b, t) in sample.iter().enumerate() {
            g[(a, b)] = f(&sinv.multiply(t)?);
        }
    }
    let eig = g.symmetric_eigenvalues();
    let min_eigenvalue = eig.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(GramOutcome { min_eigenvalue, psd: min_eigenvalue >= -tol })
}

/// The left coset `x·H_i^{(n)}`, labelled by its canonical representative:
/// the reduced word with any trailing `g_i`-syllable removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    pub n: u32,
    pub i: u32,
    rep: ReducedWord,
}

impl Coset {
    pub fn rep(&self) -> &ReducedWord {
        &self.rep
    }

    pub fn base(n: u32, i: u32) -> Result<Self> {
        coset_normal_form(n, i, &ReducedWord::identity(Rank::finite(n)?))
    }
}

pub fn coset_normal_form(n: u32, i: u32, w: &ReducedWord) -> Result<Coset> {
    PdFunction::new(n, i)?;
    if w.ambient() != Rank::Finite(n) {
        return Err(Error::AmbientMismatch { expected: Rank::Finite(n), found: w.ambient() });
    }
    Ok(Coset { n, i, rep: strip_trailing(w, i) })
}

fn strip_trailing(w: &ReducedWord, i: u32) -> ReducedWord {
    match w.syllables().last() {
        Some(s) if s.gen == i => {
            ReducedWord::reduce(w.ambient(), w.syllables()[..w.syllables().len() - 1].iter().copied())
                .expect("prefix of a valid word")
        }
        _ => w.clone(),
    }
}

fn translate_coset(x: &ReducedWord, c: &Coset) -> Coset {
    Coset { n: c.n, i: c.i, rep: strip_trailing(&x.mul_unchecked(&c.rep), c.i) }
}

/// `L_i^{(n)}(x)`: `e_{[w]} ↦ e_{[xw]}`.
pub fn l_action<R: Real>(n: u32, i: u32, x: &ReducedWord, v: &SuppVector<Coset, R>) -> Result<SuppVector<Coset, R>> {
    PdFunction::new(n, i)?;
    if x.ambient() != Rank::Finite(n) {
        return Err(Error::AmbientMismatch { expected: Rank::Finite(n), found: x.ambient() });
    }
    for c in v.labels() {
        if c.n != n || c.i != i {
            return Err(Error::Invalid(format!("coset of F{}/H{} in a vector over F{n}/H{i}", c.n, c.i)));
        }
    }
    Ok(v.map_labels(|c| translate_coset(x, c)))
}

/// `⟨e_{[1]}, L_i^{(n)}(w) e_{[1]}⟩ = f_i^{(n)}(w)`.
pub fn gns_coeff_check(n: u32, i: u32, w: &ReducedWord) -> Result<bool> {
    let base = Coset::base(n, i)?;
    let e0 = SuppVector::<Coset, num_rational::BigRational>::basis(base.clone());
    let moved = l_action(n, i, w, &e0)?;
    let coeff = moved.coefficient(&base);
    let f = PdFunction::new(n, i)?.eval(w)?;
    Ok(coeff == crate::scalar::from_int(f as i64))
}

/// Dimension of the space of vectors supported on cosets with representative
/// length `≤ radius` that are fixed by `L_i^{(n)}(g_j)`. A fixed vector is
/// constant on `⟨g_j⟩`-orbits, so this counts the orbits lying entirely
/// inside the support.
pub fn fixed_vector_dim(n: u32, i: u32, j: u32, radius: u32) -> Result<usize> {
    PdFunction::new(n, i)?;
    let gj = ReducedWord::generator(Rank::finite(n)?, j)?;
    let support: BTreeSet<Coset> = supported_cosets(n, i, radius)?;
    let mut seen: BTreeSet<Coset> = BTreeSet::new();
    let mut count = 0;
    for start in &support {
        if seen.contains(start) {
            continue;
        }
        let mut orbit = vec![start.clone()];
        let mut cur = translate_coset(&gj, start);
        let closed = loop {
            if cur == *start {
                break true;
            }
            if !support.contains(&cur) {
                break false;
            }
            orbit.push(cur.clone());
            cur = translate_coset(&gj, &cur);
        };
        if closed {
            count += 1;
            seen.extend(orbit);
        } else {
            seen.insert(start.clone());
        }
    }
    Ok(count)
}

/// Cosets whose canonical representative has length `≤ radius`.
pub fn supported_cosets(n: u32, i: u32, radius: u32) -> Result<BTreeSet<Coset>> {
    PdFunction::new(n, i)?;
    Ok(words::enumerate_ball(n, radius)?
        .into_iter()
        .map(|w| Coset { n, i, rep: strip_trailing(&w, i) })
        .filter(|c| c.rep.letter_len() <= radius as u64)
        .collect())
}

/// Applies `(L_i ⊗ L_j)(φ_{n,m}(z))` to a vector over coset pairs.
pub fn coset_pair_action<R: Real>(
    n: u32,
    m: u32,
    z: &ReducedWord,
    v: &SuppVector<(Coset, Coset), R>,
) -> Result<SuppVector<(Coset, Coset), R>> {
    let pq = words::phi(n, m, z)?;
    Ok(v.map_labels(|(a, b)| (translate_coset(&pq.first, a), translate_coset(&pq.second, b))))
}

/// Checks `xΩ_i ⊗ yΩ_j = φ_{n,m}(z)(Ω_i ⊗ Ω_j)` for the constructed `z`,
/// realised on `ℓ²(F_n/H_i) ⊗ ℓ²(F_m/H_j)`.
pub fn cyclicity_check(n: u32, m: u32, i: u32, j: u32, x: &ReducedWord, y: &ReducedWord) -> Result<bool> {
    type Q = num_rational::BigRational;
    let z = words::cyclicity_witness(n, m, i, j, x, y)?;
    let omega = SuppVector::<(Coset, Coset), Q>::basis((Coset::base(n, i)?, Coset::base(m, j)?));
    let lhs = coset_pair_action(n, m, &z, &omega)?;
    let rhs = SuppVector::basis((coset_normal_form(n, i, x)?, coset_normal_form(m, j, y)?));
    Ok(lhs == rhs)
}

/// `λ^{(n)}(x)`: `ξ_g ↦ ξ_{xg}`.
pub fn lambda_action<R: Real>(n: u32, x: &ReducedWord, v: &SuppVector<ReducedWord, R>) -> Result<SuppVector<ReducedWord, R>> {
    let rn = Rank::finite(n)?;
    for w in std::iter::once(x).chain(v.labels()) {
        if w.ambient() != rn {
            return Err(Error::AmbientMismatch { expected: rn, found: w.ambient() });
        }
    }
    Ok(v.map_labels(|g| x.mul_unchecked(g)))
}

/// `(λ^{(n)} ⊗ λ^{(m)})(φ_{n,m}(z))`: `ξ_{(g,h)} ↦ ξ_{(p(z)g, q(z)h)}`.
pub fn tensor_rep_action<R: Real>(
    n: u32,
    m: u32,
    z: &ReducedWord,
    v: &SuppVector<PairWord, R>,
) -> Result<SuppVector<PairWord, R>> {
    let pq = words::phi(n, m, z)?;
    let mut out = SuppVector::new();
    for (g, c) in v.iter() {
        out.add_term(pq.multiply(g)?, c.clone());
    }
    Ok(out)
}

/// Pairs reachable from `start` by at most `radius` left multiplications by
/// `φ_{n,m}(c_k^{±1})`.
pub fn orbit_bfs(n: u32, m: u32, start: &PairWord, radius: u32) -> Result<BTreeSet<PairWord>> {
    let nm = Rank::product(n, m)?.expect_finite()?;
    let (rn, rm) = (Rank::finite(n)?, Rank::finite(m)?);
    if start.first.ambient() != rn || start.second.ambient() != rm {
        return Err(Error::Invalid(format!("start pair must lie in F{n} x F{m}")));
    }
    let moves: Vec<PairWord> = (1..=nm)
        .flat_map(|k| [1i64, -1].map(|e| (k, e)))
        .map(|(k, e)| words::phi(n, m, &ReducedWord::reduce(Rank::Finite(nm), [Syllable::new(k, e)]).expect("in range")))
        .collect::<Result<_>>()?;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start.clone(), 0u32)]);
    while let Some((p, d)) = queue.pop_front() {
        if d == radius {
            continue;
        }
        for mv in &moves {
            let q = mv.multiply(&p)?;
            if seen.insert(q.clone()) {
                queue.push_back((q, d + 1));
            }
        }
    }
    Ok(seen)
}

/// The basis map `ξ_g ↦ ξ_{p(g)x} ⊗ ξ_{q(g)}` from `ℓ²(F_{nm})` into `ℓ²(F_n)⊗ℓ²(F_m)`.
pub fn u_map(n: u32, m: u32, x: &ReducedWord, g: &ReducedWord) -> Result<PairWord> {
    let pq = words::phi(n, m, g)?;
    Ok(PairWord::new(pq.first.multiply(x)?, pq.second))
}

/// Linear extension of [`u_map`].
pub fn u_map_vector<R: Real>(
    n: u32,
    m: u32,
    x: &ReducedWord,
    v: &SuppVector<ReducedWord, R>,
) -> Result<SuppVector<PairWord, R>> {
    let mut out = SuppVector::new();
    for (g, c) in v.iter() {
        out.add_term(u_map(n, m, x, g)?, c.clone());
    }
    Ok(out)
}

/// `U(λ_h ξ_g) = (λ⊗_φλ)_h (U ξ_g)` on a basis vector.
pub fn intertwine_check(n: u32, m: u32, x: &ReducedWord, h: &ReducedWord, g: &ReducedWord) -> Result<bool> {
    type Q = num_rational::BigRational;
    let lhs = u_map(n, m, x, &h.multiply(g)?)?;
    let image = SuppVector::<PairWord, Q>::basis(u_map(n, m, x, g)?);
    let rhs = tensor_rep_action(n, m, h, &image)?;
    Ok(rhs.len() == 1 && rhs.coefficient(&lhs) == Complex::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::from_int;
    use num_rational::BigRational;

    type Q = BigRational;

    fn w(n: u32, s: &[(u32, i64)]) -> ReducedWord {
        ReducedWord::reduce(Rank::Finite(n), s.iter().map(|&(g, e)| Syllable::new(g, e))).unwrap()
    }

    fn one(n: u32) -> ReducedWord {
        ReducedWord::identity(Rank::Finite(n))
    }

    #[test]
    fn f_eval_examples() {
        let f = PdFunction::new(2, 1).unwrap();
        assert_eq!(f.eval(&w(2, &[(1, 5)])).unwrap(), 1);
        assert_eq!(f.eval(&one(2)).unwrap(), 1);
        assert_eq!(f.eval(&w(2, &[(2, 1), (1, 1)])).unwrap(), 0);
        assert!(f.eval(&one(3)).is_err());
        assert!(PdFunction::new(2, 3).is_err());
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(f_pullback_eval(2, 1, 3, 2, &w(6, &[(2, 1)])).unwrap(), 1);
        assert_eq!(f_pullback_eval(2, 1, 3, 2, &one(6)).unwrap(), 1);
        assert_eq!(f_pullback_eval(2, 1, 2, 1, &w(4, &[(3, 1)])).unwrap(), 0);
    }

    #[test]
    fn probe_examples() {
        assert!(claim_probe_pd(2, 3, 1, 2, 1).unwrap().is_empty());
        assert!(claim_probe_pd(3, 2, 2, 1, 0).unwrap().is_empty());
        let found = claim_probe_pd(2, 2, 1, 1, 4).unwrap();
        let x = w(4, &[(1, 1), (2, -1), (4, 1), (3, -1)]);
        assert!(found.contains(&Disagreement { z: x, pullback: 1, direct: 0 }));
    }

    #[test]
    fn gram_examples() {
        let f = PdFunction::new(2, 1).unwrap();
        let eval = |w: &ReducedWord| f.eval(w).unwrap() as f64;
        let sample = [one(2), w(2, &[(1, 1)]), w(2, &[(2, 1)])];
        let out = gram_psd(eval, &sample, 1e-9).unwrap();
        assert!(out.min_eigenvalue.abs() < 1e-12);
        assert!(out.psd);
        assert_eq!(gram_psd(eval, &[one(2)], 1e-9).unwrap().min_eigenvalue, 1.0);
        assert!(gram_psd(eval, &[], 1e-9).is_err());
        assert!(gram_psd(eval, &[one(2), one(2)], 1e-9).is_err());
        // a non-positive-definite function is caught
        let bad = |w: &ReducedWord| if w.is_identity() { 0.0 } else { 1.0 };
        assert!(!gram_psd(bad, &sample, 1e-9).unwrap().psd);
    }

    #[test]
    fn coset_examples() {
        assert_eq!(coset_normal_form(2, 1, &w(2, &[(2, 1), (1, 3)])).unwrap().rep(), &w(2, &[(2, 1)]));
        assert!(coset_normal_form(2, 1, &w(2, &[(1, -2)])).unwrap().rep().is_identity());
        let c = coset_normal_form(3, 2, &w(3, &[(2, 1), (3, 1), (2, -1)])).unwrap();
        assert_eq!(c.rep(), &w(3, &[(2, 1), (3, 1)]));
    }

    #[test]
    fn coset_equality_matches_membership() {
        let ball = words::enumerate_ball(2, 3).unwrap();
        for i in 1..=2 {
            for a in &ball {
                for b in ball.iter().take(20) {
                    let same = coset_normal_form(2, i, a).unwrap() == coset_normal_form(2, i, b).unwrap();
                    let member = in_cyclic(&a.inverse().multiply(b).unwrap(), i);
                    assert_eq!(same, member, "{a} {b} H{i}");
                }
            }
        }
    }

    #[test]
    fn l_action_examples() {
        let e0 = SuppVector::<Coset, Q>::basis(Coset::base(2, 1).unwrap());
        assert_eq!(l_action(2, 1, &w(2, &[(1, 1)]), &e0).unwrap(), e0);
        let moved = l_action(2, 1, &w(2, &[(2, 1)]), &e0).unwrap();
        assert_eq!(moved, SuppVector::basis(coset_normal_form(2, 1, &w(2, &[(2, 1)])).unwrap()));
        let v: SuppVector<Coset, Q> = [(Coset::base(2, 1).unwrap(), from_int(2))].into_iter().collect();
        assert_eq!(l_action(2, 1, &one(2), &v).unwrap(), v);
    }

    #[test]
    fn gns_examples() {
        assert!(gns_coeff_check(2, 1, &w(2, &[(1, 4)])).unwrap());
        assert!(gns_coeff_check(2, 1, &one(2)).unwrap());
        assert!(gns_coeff_check(2, 1, &w(2, &[(2, 1), (1, 1)])).unwrap());
    }

    #[test]
    fn fixed_vector_examples() {
        assert_eq!(fixed_vector_dim(2, 1, 1, 3).unwrap(), 1);
        assert_eq!(fixed_vector_dim(2, 1, 2, 3).unwrap(), 0);
        assert_eq!(fixed_vector_dim(3, 2, 2, 0).unwrap(), 1);
    }

    #[test]
    fn cyclicity_examples() {
        assert!(cyclicity_check(2, 2, 1, 2, &w(2, &[(2, 1)]), &w(2, &[(1, 1)])).unwrap());
        assert!(cyclicity_check(2, 2, 1, 1, &one(2), &one(2)).unwrap());
        assert!(cyclicity_check(2, 3, 2, 1, &w(2, &[(1, 1), (2, 1)]), &w(3, &[(3, -1)])).unwrap());
    }

    #[test]
    fn lambda_examples() {
        let xi1 = SuppVector::<ReducedWord, Q>::basis(one(2));
        let g1 = w(2, &[(1, 1)]);
        assert_eq!(lambda_action(2, &g1, &xi1).unwrap(), SuppVector::basis(g1.clone()));
        let v: SuppVector<ReducedWord, Q> = [(w(2, &[(2, 1)]), from_int(3)), (one(2), from_int(-1))].into_iter().collect();
        let back = lambda_action(2, &g1.inverse(), &lambda_action(2, &g1, &v).unwrap()).unwrap();
        assert_eq!(back, v);
        let r = lambda_action(2, &w(2, &[(1, 1), (2, 1)]), &SuppVector::<ReducedWord, Q>::basis(w(2, &[(2, -1)]))).unwrap();
        assert_eq!(r, SuppVector::basis(g1));
    }

    #[test]
    fn tensor_rep_examples() {
        let base = SuppVector::<PairWord, Q>::basis(PairWord::identity(Rank::Finite(2), Rank::Finite(2)));
        let r = tensor_rep_action(2, 2, &w(4, &[(1, 1)]), &base).unwrap();
        assert_eq!(r, SuppVector::basis(PairWord::new(w(2, &[(1, 1)]), w(2, &[(1, 1)]))));
        assert_eq!(tensor_rep_action(2, 2, &one(4), &base).unwrap(), base);
        let v = SuppVector::<PairWord, Q>::basis(PairWord::new(w(2, &[(2, 3)]), w(2, &[(1, -1)])));
        let k = words::kernel_witness(2, 2, 1, 2, 1, 2).unwrap();
        assert_eq!(tensor_rep_action(2, 2, &k, &v).unwrap(), v);
    }

    #[test]
    fn orbit_examples() {
        let start = PairWord::identity(Rank::Finite(2), Rank::Finite(2));
        let o = orbit_bfs(2, 2, &start, 1).unwrap();
        assert_eq!(o.len(), 9);
        assert_eq!(orbit_bfs(2, 2, &start, 0).unwrap(), BTreeSet::from([start.clone()]));
        let o = orbit_bfs(2, 2, &start, 4).unwrap();
        let comm = PairWord::new(w(2, &[(1, 1), (2, 1), (1, -1), (2, -1)]), one(2));
        assert!(o.contains(&comm));
    }

    #[test]
    fn u_map_examples() {
        assert_eq!(u_map(2, 2, &one(2), &w(4, &[(1, 1)])).unwrap(), PairWord::new(w(2, &[(1, 1)]), w(2, &[(1, 1)])));
        assert_eq!(u_map(2, 2, &w(2, &[(2, 1)]), &one(4)).unwrap(), PairWord::new(w(2, &[(2, 1)]), one(2)));
        let k = words::kernel_witness(2, 2, 1, 2, 1, 2).unwrap();
        assert_eq!(u_map(2, 2, &one(2), &k).unwrap(), u_map(2, 2, &one(2), &one(4)).unwrap());
    }

    #[test]
    fn intertwine_examples() {
        assert!(intertwine_check(2, 2, &one(2), &w(4, &[(1, 1)]), &one(4)).unwrap());
        assert!(intertwine_check(2, 2, &w(2, &[(2, -1)]), &one(4), &w(4, &[(3, 2)])).unwrap());
    }
}
