//! Free groups: reduced words, group arithmetic, the splitting
//! homomorphisms `F_{nm} → F_n × F_m` and `F_∞ → F_∞ × F_n`, and the
//! explicit word constructions (kernel elements, lifts, cancellation and
//! cyclicity witnesses) built on top of them.
//!
//! Generator indices are 1-based. A word is stored as a list of syllables
//! `g_i^e` with `e ≠ 0` and no two adjacent syllables on the same generator.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rank of a free group: `F_n` for `n ≥ 1`, or the countable `F_∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rank {
    Finite(u32),
    Infinite,
}

impl Rank {
    pub fn finite(n: u32) -> Result<Rank> {
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        Ok(Rank::Finite(n))
    }

    /// Product rank `nm`, rejecting overflow.
    pub fn product(n: u32, m: u32) -> Result<Rank> {
        let nm = n.checked_mul(m).ok_or(Error::InvalidRank(n as u64 * m as u64))?;
        Rank::finite(nm)
    }

    pub fn as_finite(self) -> Option<u32> {
        match self {
            Rank::Finite(n) => Some(n),
            Rank::Infinite => None,
        }
    }

    pub fn expect_finite(self) -> Result<u32> {
        self.as_finite().ok_or(Error::InfiniteRank(self))
    }

    pub fn admits(self, gen: u32) -> bool {
        gen >= 1
            && match self {
                Rank::Finite(n) => gen <= n,
                Rank::Infinite => true,
            }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(n) => write!(f, "F{n}"),
            Rank::Infinite => write!(f, "Finf"),
        }
    }
}

/// A power `g_gen^exp` of a single generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Syllable {
    pub gen: u32,
    pub exp: i64,
}

impl Syllable {
    pub const fn new(gen: u32, exp: i64) -> Self {
        Self { gen, exp }
    }
}

/// Appends a syllable to a reduced syllable list, merging or cancelling at
/// the junction. Pushing syllables one at a time keeps the list reduced.
fn push_syllable(out: &mut Vec<Syllable>, s: Syllable) {
    if s.exp == 0 {
        return;
    }
    match out.last_mut() {
        Some(last) if last.gen == s.gen => {
            last.exp += s.exp;
            if last.exp == 0 {
                out.pop();
            }
        }
        _ => out.push(s),
    }
}

/// A freely reduced word in `F_n` or `F_∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    ambient: Rank,
    syllables: Vec<Syllable>,
}

impl ReducedWord {
    pub fn identity(ambient: Rank) -> Self {
        Self { ambient, syllables: Vec::new() }
    }

    pub fn generator(ambient: Rank, gen: u32) -> Result<Self> {
        Self::power(ambient, gen, 1)
    }

    pub fn power(ambient: Rank, gen: u32, exp: i64) -> Result<Self> {
        Self::reduce(ambient, [Syllable::new(gen, exp)])
    }

    /// Free reduction of an arbitrary syllable sequence.
    pub fn reduce(ambient: Rank, letters: impl IntoIterator<Item = Syllable>) -> Result<Self> {
        let mut syllables = Vec::new();
        for s in letters {
            if !ambient.admits(s.gen) {
                return Err(Error::IndexOutOfRange { gen: s.gen, ambient });
            }
            push_syllable(&mut syllables, s);
        }
        Ok(Self { ambient, syllables })
    }

    /// Builds from syllables already known to respect `ambient`.
    fn reduce_unchecked(ambient: Rank, letters: impl IntoIterator<Item = Syllable>) -> Self {
        let mut syllables = Vec::new();
        for s in letters {
            push_syllable(&mut syllables, s);
        }
        Self { ambient, syllables }
    }

    pub fn ambient(&self) -> Rank {
        self.ambient
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length in letters, `Σ |exp|`.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.syllables.iter().map(|s| s.exp).sum()
    }

    pub fn max_gen(&self) -> u32 {
        self.syllables.iter().map(|s| s.gen).max().unwrap_or(0)
    }

    /// The same syllables viewed in another ambient group.
    pub fn with_ambient(&self, ambient: Rank) -> Result<Self> {
        Self::reduce(ambient, self.syllables.iter().copied())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut syllables = self.syllables.clone();
        for &s in &other.syllables {
            push_syllable(&mut syllables, s);
        }
        Self { ambient: self.ambient, syllables }
    }

    pub fn inverse(&self) -> Self {
        Self {
            ambient: self.ambient,
            syllables: self.syllables.iter().rev().map(|s| Syllable::new(s.gen, -s.exp)).collect(),
        }
    }

    /// Expands into single letters `g_i^{±1}`.
    pub fn letters(&self) -> impl Iterator<Item = Syllable> + '_ {
        self.syllables.iter().flat_map(|s| {
            let sign = s.exp.signum();
            (0..s.exp.unsigned_abs()).map(move |_| Syllable::new(s.gen, sign))
        })
    }

    /// Rewrites every generator index through `f`, then reduces.
    pub fn map_generators(&self, ambient: Rank, mut f: impl FnMut(u32) -> u32) -> Result<Self> {
        Self::reduce(ambient, self.syllables.iter().map(|s| Syllable::new(f(s.gen), s.exp)))
    }
}

/// Canonical order: letter length, then syllables lexicographically by
/// `(gen, exp)`, then ambient.
impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letter_len()
            .cmp(&other.letter_len())
            .then_with(|| self.syllables.cmp(&other.syllables))
            .then_with(|| self.ambient.cmp(&other.ambient))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if s.exp == 1 {
                write!(f, "g{}", s.gen)?;
            } else {
                write!(f, "g{}^{}", s.gen, s.exp)?;
            }
        }
        Ok(())
    }
}

/// An element of `F_n × F_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairWord {
    pub first: ReducedWord,
    pub second: ReducedWord,
}

impl PairWord {
    pub fn new(first: ReducedWord, second: ReducedWord) -> Self {
        Self { first, second }
    }

    pub fn identity(a: Rank, b: Rank) -> Self {
        Self::new(ReducedWord::identity(a), ReducedWord::identity(b))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(self.first.multiply(&other.first)?, self.second.multiply(&other.second)?))
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.first.inverse(), self.second.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.first.is_identity() && self.second.is_identity()
    }
}

impl fmt::Display for PairWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Splits a 1-based index `k = m(i−1)+j` with `1 ≤ j ≤ m` into `(i, j)`.
pub fn split_index(k: u32, m: u32) -> (u32, u32) {
    debug_assert!(k >= 1 && m >= 1);
    ((k - 1) / m + 1, (k - 1) % m + 1)
}

/// Inverse of [`split_index`].
pub fn join_index(i: u32, j: u32, m: u32) -> u32 {
    m * (i - 1) + j
}

fn expect_ambient(w: &ReducedWord, ambient: Rank) -> Result<()> {
    if w.ambient != ambient {
        return Err(Error::AmbientMismatch { expected: ambient, found: w.ambient });
    }
    Ok(())
}

fn check_param(name: &'static str, value: u32, bound: u32) -> Result<()> {
    if value == 0 || value > bound {
        return Err(Error::ParameterOutOfRange { name, value, bound });
    }
    Ok(())
}

fn split_word(z: &ReducedWord, first: Rank, second: Rank, m: u32) -> PairWord {
    let mut p = Vec::new();
    let mut q = Vec::new();
    for s in z.syllables() {
        let (i, j) = split_index(s.gen, m);
        push_syllable(&mut p, Syllable::new(i, s.exp));
        push_syllable(&mut q, Syllable::new(j, s.exp));
    }
    PairWord::new(
        ReducedWord { ambient: first, syllables: p },
        ReducedWord { ambient: second, syllables: q },
    )
}

/// The homomorphism `F_{nm} → F_n × F_m`, `c_{m(i−1)+j} ↦ (a_i, b_j)`.
pub fn phi(n: u32, m: u32, z: &ReducedWord) -> Result<PairWord> {
    let (rn, rm) = (Rank::finite(n)?, Rank::finite(m)?);
    expect_ambient(z, Rank::product(n, m)?)?;
    Ok(split_word(z, rn, rm, m))
}

/// The homomorphism `F_∞ → F_∞ × F_n`, `g_{n(i−1)+j} ↦ (g_i, g_j^{(n)})`.
pub fn phi_inf(n: u32, z: &ReducedWord) -> Result<PairWord> {
    let rn = Rank::finite(n)?;
    expect_ambient(z, Rank::Infinite)?;
    Ok(split_word(z, Rank::Infinite, rn, n))
}

/// The kernel element `c_{m(i−1)+j} c_{m(i−1)+k}^{-1} c_{m(l−1)+k} c_{m(l−1)+j}^{-1}`
/// of `F_{nm} → F_n × F_m`.
pub fn kernel_witness(n: u32, m: u32, i: u32, l: u32, j: u32, k: u32) -> Result<ReducedWord> {
    check_param("i", i, n)?;
    check_param("l", l, n)?;
    check_param("j", j, m)?;
    check_param("k", k, m)?;
    let ambient = Rank::product(n, m)?;
    ReducedWord::reduce(
        ambient,
        [
            Syllable::new(join_index(i, j, m), 1),
            Syllable::new(join_index(i, k, m), -1),
            Syllable::new(join_index(l, k, m), 1),
            Syllable::new(join_index(l, j, m), -1),
        ],
    )
}

/// For `x ∈ F_n`, returns `(y, z)` with `φ_{n,m}(z) = (x, y)`: each letter
/// `a_i^ε` becomes `c_{m(i−1)+1}^ε`, so `y` is a power of `b_1`.
pub fn lift_first(x: &ReducedWord, m: u32) -> Result<(ReducedWord, ReducedWord)> {
    let n = x.ambient.expect_finite()?;
    let rm = Rank::finite(m)?;
    let ambient = Rank::product(n, m)?;
    let z = ReducedWord::reduce_unchecked(
        ambient,
        x.syllables.iter().map(|s| Syllable::new(join_index(s.gen, 1, m), s.exp)),
    );
    let y = ReducedWord::reduce_unchecked(rm, [Syllable::new(1, x.exponent_sum())]);
    Ok((y, z))
}

/// For `y ∈ F_m`, returns `(x, z)` with `φ_{n,m}(z) = (x, y)`: each letter
/// `b_j^ε` becomes `c_j^ε`, so `x` is a power of `a_1`.
pub fn lift_second(y: &ReducedWord, n: u32) -> Result<(ReducedWord, ReducedWord)> {
    let m = y.ambient.expect_finite()?;
    let rn = Rank::finite(n)?;
    let ambient = Rank::product(n, m)?;
    let z = ReducedWord::reduce_unchecked(
        ambient,
        y.syllables.iter().map(|s| Syllable::new(join_index(1, s.gen, m), s.exp)),
    );
    let x = ReducedWord::reduce_unchecked(rn, [Syllable::new(1, y.exponent_sum())]);
    Ok((x, z))
}

/// Returns `(x′, z)` with `φ_{n,m}(z)·(x′, 1) = (x, y)`.
pub fn cancellation_witness_left(x: &ReducedWord, y: &ReducedWord) -> Result<(ReducedWord, ReducedWord)> {
    let n = x.ambient.expect_finite()?;
    let (x2, z) = lift_second(y, n)?;
    Ok((x2.inverse().mul_unchecked(x), z))
}

/// Returns `(y′, z)` with `φ_{n,m}(z)·(1, y′) = (x, y)`.
pub fn cancellation_witness_right(x: &ReducedWord, y: &ReducedWord) -> Result<(ReducedWord, ReducedWord)> {
    let m = y.ambient.expect_finite()?;
    let (y2, z) = lift_first(x, m)?;
    Ok((y2.inverse().mul_unchecked(y), z))
}

/// Builds `z = z′z″ ∈ F_{nm}` with `φ_{n,m}(z) = (x, y·b_j^s)` for some `s`:
/// `(x′, z′)` is the left cancellation witness and `z″` spells `x′` in the
/// column `j`, i.e. `a_{i_k}^ε ↦ c_{m(i_k−1)+j}^ε`.
pub fn cyclicity_witness(
    n: u32,
    m: u32,
    i: u32,
    j: u32,
    x: &ReducedWord,
    y: &ReducedWord,
) -> Result<ReducedWord> {
    check_param("i", i, n)?;
    check_param("j", j, m)?;
    expect_ambient(x, Rank::finite(n)?)?;
    expect_ambient(y, Rank::finite(m)?)?;
    let (xp, z1) = cancellation_witness_left(x, y)?;
    let z2 = ReducedWord::reduce_unchecked(
        z1.ambient,
        xp.syllables.iter().map(|s| Syllable::new(join_index(s.gen, j, m), s.exp)),
    );
    Ok(z1.mul_unchecked(&z2))
}

/// Number of reduced words of length `≤ r` in `F_n`: `1 + Σ_{k=1}^{r} 2n(2n−1)^{k−1}`.
pub fn ball_size(n: u32, r: u32) -> u64 {
    let mut total = 1u64;
    let mut sphere = 2 * n as u64;
    for _ in 0..r {
        total += sphere;
        sphere *= 2 * n as u64 - 1;
    }
    total
}

fn ball(ambient: Rank, gens: u32, r: u32) -> Vec<ReducedWord> {
    let mut all = vec![ReducedWord::identity(ambient)];
    let mut frontier = all.clone();
    for _ in 0..r {
        let mut next = Vec::new();
        for w in &frontier {
            let last = w.syllables.last().copied();
            for g in 1..=gens {
                for e in [1i64, -1] {
                    if let Some(l) = last {
                        if l.gen == g && l.exp.signum() != e {
                            continue;
                        }
                    }
                    let mut syllables = w.syllables.clone();
                    push_syllable(&mut syllables, Syllable::new(g, e));
                    next.push(ReducedWord { ambient, syllables });
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort();
    all
}

/// All reduced words of `F_n` with letter length `≤ r`, in canonical order.
pub fn enumerate_ball(n: u32, r: u32) -> Result<Vec<ReducedWord>> {
    Ok(ball(Rank::finite(n)?, n, r))
}

/// Reduced words of `F_∞` of length `≤ r` using generators `g_1..g_{max_gen}`.
pub fn enumerate_ball_infinite(max_gen: u32, r: u32) -> Vec<ReducedWord> {
    ball(Rank::Infinite, max_gen, r)
}
