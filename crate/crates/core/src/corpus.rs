//! Seeded random test corpora.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraElement;
use crate::bialgebra::DirectSumElement;
use crate::words::{Rank, ReducedWord, Syllable};

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly chosen reduced word of letter length exactly `len` in `F_n`
/// (`n ≥ 1`), built one letter at a time without immediate cancellation.
pub fn random_word_of_length(rng: &mut impl Rng, n: u32, len: u32) -> ReducedWord {
    let mut letters: Vec<Syllable> = Vec::with_capacity(len as usize);
    for _ in 0..len {
        loop {
            let s = Syllable::new(rng.random_range(1..=n), if rng.random_bool(0.5) { 1 } else { -1 });
            if letters.last().is_none_or(|l| l.gen != s.gen || l.exp != -s.exp) {
                letters.push(s);
                break;
            }
        }
    }
    ReducedWord::reduce(Rank::Finite(n), letters).expect("generators in range")
}

/// A random word of letter length in `0..=max_len`.
pub fn random_word(rng: &mut impl Rng, n: u32, max_len: u32) -> ReducedWord {
    let len = rng.random_range(0..=max_len);
    random_word_of_length(rng, n, len)
}

/// A small nonzero Gaussian rational `(a + bi)/d` with `|a|,|b| ≤ 3`, `d ≤ 3`.
pub fn random_coefficient(rng: &mut impl Rng) -> Complex<BigRational> {
    loop {
        let d = BigInt::from(rng.random_range(1..=3));
        let re = BigRational::new(BigInt::from(rng.random_range(-3..=3)), d.clone());
        let im = if rng.random_bool(0.5) {
            BigRational::new(BigInt::from(rng.random_range(-3..=3)), d)
        } else {
            BigRational::from_integer(BigInt::from(0))
        };
        let c = Complex::new(re, im);
        if !(c.re.is_zero() && c.im.is_zero()) {
            return c;
        }
    }
}

pub fn random_element(rng: &mut impl Rng, n: u32, max_len: u32, max_terms: usize) -> AlgebraElement<BigRational> {
    let mut out = AlgebraElement::zero(Rank::Finite(n));
    for _ in 0..rng.random_range(1..=max_terms) {
        let w = random_word(rng, n, max_len);
        out.add_term(w, random_coefficient(rng)).expect("same rank");
    }
    out
}

/// A direct-sum element with one to three components of rank `≤ max_rank`.
pub fn random_direct_sum(rng: &mut impl Rng, max_rank: u32, max_len: u32, max_terms: usize) -> DirectSumElement<BigRational> {
    let mut out = DirectSumElement::zero();
    for _ in 0..rng.random_range(1..=3) {
        let n = rng.random_range(1..=max_rank);
        out.add_component(random_element(rng, n, max_len, max_terms)).expect("finite rank");
    }
    out
}

/// Every generator `g_k^{(n)}` with `n ≤ max_rank`.
pub fn all_generators(max_rank: u32) -> Vec<ReducedWord> {
    (1..=max_rank)
        .flat_map(|n| (1..=n).map(move |k| ReducedWord::generator(Rank::Finite(n), k).expect("in range")))
        .collect()
}
