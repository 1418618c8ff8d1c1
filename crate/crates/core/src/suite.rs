//! Named invariant suites and claim probes.
//!
//! Every suite entry checks one identity over a fixed enumeration plus a
//! seeded random corpus and produces a [`ClaimReport`]. Probes scan a ball
//! and report what they find. Entries run in parallel on the current rayon
//! pool; reports are sorted by claim id so output does not depend on
//! scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{self, AlgebraElement};
use crate::bialgebra::{self, DirectSumElement, DirectSumTensor, UnitizedElement};
use crate::corpus;
use crate::error::{Error, Result};
use crate::json::{pair_to_json, word_to_json};
use crate::morphisms::{self, Alpha, Beta, GradedEndo};
use crate::reps::{self, Coset, PdFunction, SuppVector};
use crate::report::{ClaimReport, ProbeReport, ProbeSummary, Status, SuiteReport};
use crate::words::{self, PairWord, Rank, ReducedWord, Syllable};

type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Words,
    Bialgebra,
    Reps,
    Morphisms,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["words", "bialgebra", "reps", "morphisms", "all"];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "words" => Ok(Suite::Words),
            "bialgebra" => Ok(Suite::Bialgebra),
            "reps" => Ok(Suite::Reps),
            "morphisms" => Ok(Suite::Morphisms),
            "all" => Ok(Suite::All),
            _ => Err(Error::Invalid(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", ")))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Words => "words",
            Suite::Bialgebra => "bialgebra",
            Suite::Reps => "reps",
            Suite::Morphisms => "morphisms",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random direct-sum elements for the coalgebra laws.
    pub random_elements: usize,
    /// Random word pairs for homomorphism and cancellation checks.
    pub random_pairs: usize,
    /// Random `(x, h, g)` triples for the intertwiner relation.
    pub random_triples: usize,
    /// Tolerance for floating-point checks.
    pub tol: f64,
    /// Ball radius for probes.
    pub radius: u32,
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            random_elements: 200,
            random_pairs: 100,
            random_triples: 200,
            tol: 1e-9,
            radius: 4,
            timing: false,
        }
    }
}

/// Running count of checked instances and the first counterexample.
#[derive(Default)]
struct Tally {
    checked: u64,
    witness: Option<Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }
}

struct Outcome {
    params: Value,
    tally: Tally,
}

type ClaimFn = fn(&SuiteConfig) -> Result<Outcome>;

const CLAIMS: &[(Suite, &str, ClaimFn)] = &[
    (Suite::Words, "phi-homomorphism", phi_homomorphism),
    (Suite::Words, "phi-inf-homomorphism", phi_inf_homomorphism),
    (Suite::Words, "kernel-identities", kernel_identities),
    (Suite::Words, "cancellation-witnesses", cancellation_witnesses),
    (Suite::Words, "lift-constructions", lift_constructions),
    (Suite::Bialgebra, "delta-g2-rank6", delta_g2_rank6),
    (Suite::Bialgebra, "coassociativity", coassociativity),
    (Suite::Bialgebra, "counit-law", counit_law),
    (Suite::Bialgebra, "wcs-mixed-coassociativity", wcs_mixed),
    (Suite::Bialgebra, "wcs-counit-axiom", wcs_counit),
    (Suite::Bialgebra, "comodule-identity", comodule_identity),
    (Suite::Bialgebra, "standard-compatibility", standard_compatibility),
    (Suite::Bialgebra, "delta-star-homomorphism", delta_star_homomorphism),
    (Suite::Bialgebra, "unitization", unitization),
    (Suite::Reps, "gns-coefficients", gns_coefficients),
    (Suite::Reps, "fixed-vectors", fixed_vectors),
    (Suite::Reps, "cyclicity", cyclicity),
    (Suite::Reps, "intertwiner", intertwiner),
    (Suite::Reps, "gram-psd", gram_psd),
    (Suite::Reps, "group-actions", group_actions),
    (Suite::Morphisms, "beta-morphism", beta_morphism),
    (Suite::Morphisms, "beta-involution", beta_involution),
    (Suite::Morphisms, "alpha-morphism", alpha_morphism),
    (Suite::Morphisms, "alpha-group-laws", alpha_group_laws),
    (Suite::Morphisms, "alpha-star", alpha_star),
];

/// Claim ids belonging to `suite`.
pub fn claim_ids(suite: Suite) -> Vec<&'static str> {
    let mut ids: Vec<_> = CLAIMS.iter().filter(|(s, _, _)| suite.includes(*s)).map(|(_, id, _)| *id).collect();
    ids.sort_unstable();
    ids
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let claims: Vec<ClaimReport> = CLAIMS
        .par_iter()
        .filter(|(s, _, _)| suite.includes(*s))
        .map(|(_, id, f)| run_claim(id, *f, cfg))
        .collect();
    SuiteReport::new(suite.to_string(), cfg.seed, claims)
}

/// Runs a single suite entry by id.
pub fn run_claim_by_id(id: &str, cfg: &SuiteConfig) -> Result<ClaimReport> {
    CLAIMS
        .iter()
        .find(|(_, c, _)| *c == id)
        .map(|(_, c, f)| run_claim(c, *f, cfg))
        .ok_or_else(|| Error::Invalid(format!("unknown claim {id:?}")))
}

fn run_claim(id: &str, f: ClaimFn, cfg: &SuiteConfig) -> ClaimReport {
    let start = Instant::now();
    let (params, checked, witness) = match f(cfg) {
        Ok(o) => (o.params, o.tally.checked, o.tally.witness),
        Err(e) => (Value::Null, 0, Some(json!({ "error": e.to_string() }))),
    };
    ClaimReport {
        claim: id.to_string(),
        status: if witness.is_some() { Status::Failed } else { Status::Verified },
        params,
        checked,
        witness,
        timing_ms: cfg.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    }
}

fn salted(cfg: &SuiteConfig, salt: u64) -> corpus::CorpusRng {
    corpus::rng(cfg.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt))
}

fn gen(n: u32, k: u32) -> ReducedWord {
    ReducedWord::generator(Rank::Finite(n), k).expect("index in range")
}

fn q_word(w: &ReducedWord) -> AlgebraElement<Q> {
    AlgebraElement::from_word(w.clone())
}

fn random_direct_sums(cfg: &SuiteConfig, salt: u64) -> Vec<DirectSumElement<Q>> {
    let mut rng = salted(cfg, salt);
    (0..cfg.random_elements).map(|_| corpus::random_direct_sum(&mut rng, 12, 5, 3)).collect()
}

/// The coalgebra-law corpus: every generator of rank `≤ 24` plus the random elements.
fn coalgebra_corpus(cfg: &SuiteConfig, salt: u64) -> Vec<DirectSumElement<Q>> {
    corpus::all_generators(24)
        .into_iter()
        .map(|g| DirectSumElement::from_word(g).expect("finite rank"))
        .chain(random_direct_sums(cfg, salt))
        .collect()
}

fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Option<Value>> + Sync + Send) -> Result<Tally> {
    let results: Vec<Result<Option<Value>>> = items.par_iter().map(f).collect();
    let mut t = Tally::default();
    for r in results {
        let failure = r?;
        t.check(failure.is_none(), || failure.unwrap_or(Value::Null));
    }
    Ok(t)
}

fn fail_if(ok: bool, witness: impl FnOnce() -> Value) -> Option<Value> {
    (!ok).then(witness)
}

fn phi_homomorphism(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut rng = salted(cfg, 1);
    let mut t = Tally::default();
    for n in 1..=3 {
        for m in 1..=3 {
            for _ in 0..cfg.random_pairs {
                let x = corpus::random_word(&mut rng, n * m, 5);
                let y = corpus::random_word(&mut rng, n * m, 5);
                let lhs = words::phi(n, m, &x.multiply(&y)?)?;
                let rhs = words::phi(n, m, &x)?.multiply(&words::phi(n, m, &y)?)?;
                let inv = words::phi(n, m, &x.inverse())? == words::phi(n, m, &x)?.inverse();
                t.check(lhs == rhs && inv, || json!({ "n": n, "m": m, "x": word_to_json(&x), "y": word_to_json(&y) }));
            }
        }
    }
    Ok(Outcome { params: json!({ "ranks": "n,m<=3", "pairs_per_rank": cfg.random_pairs, "max_len": 5 }), tally: t })
}

fn phi_inf_homomorphism(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut rng = salted(cfg, 2);
    let mut t = Tally::default();
    for n in 1..=3 {
        for _ in 0..cfg.random_pairs {
            let x = corpus::random_word(&mut rng, 12, 5).with_ambient(Rank::Infinite)?;
            let y = corpus::random_word(&mut rng, 12, 5).with_ambient(Rank::Infinite)?;
            let lhs = words::phi_inf(n, &x.multiply(&y)?)?;
            let rhs = words::phi_inf(n, &x)?.multiply(&words::phi_inf(n, &y)?)?;
            t.check(lhs == rhs, || json!({ "n": n, "x": word_to_json(&x), "y": word_to_json(&y) }));
        }
    }
    Ok(Outcome { params: json!({ "n": "1..=3", "pairs_per_rank": cfg.random_pairs, "max_gen": 12 }), tally: t })
}

fn kernel_identities(_: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let z = ReducedWord::reduce(
        Rank::Finite(4),
        [Syllable::new(1, 1), Syllable::new(2, -1), Syllable::new(4, 1), Syllable::new(3, -1)],
    )?;
    t.check(words::phi(2, 2, &z)?.is_identity(), || json!({ "z": word_to_json(&z) }));
    for n in 2..=3 {
        for m in 2..=3 {
            for i in 1..=n {
                for l in 1..=n {
                    for j in 1..=m {
                        for k in 1..=m {
                            let x = words::kernel_witness(n, m, i, l, j, k)?;
                            let a = q_word(&x).sub(&AlgebraElement::one(x.ambient()))?;
                            let killed = algebra::varphi_alg(n, m, &a)?.is_zero();
                            let nontrivial = i == l || j == k || !x.is_identity();
                            t.check(killed && nontrivial, || json!({ "n": n, "m": m, "i": i, "l": l, "j": j, "k": k }));
                        }
                    }
                }
            }
        }
    }
    Ok(Outcome { params: json!({ "n": [2, 3], "m": [2, 3] }), tally: t })
}

fn cancellation_witnesses(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut pairs = Vec::new();
    for n in 1..=2 {
        for m in 1..=2 {
            let (bn, bm) = (words::enumerate_ball(n, 3)?, words::enumerate_ball(m, 3)?);
            for x in &bn {
                for y in &bm {
                    pairs.push((x.clone(), y.clone()));
                }
            }
        }
    }
    let mut rng = salted(cfg, 3);
    for _ in 0..cfg.random_pairs {
        use rand::Rng;
        let (n, m) = (rng.random_range(1..=4), rng.random_range(1..=4));
        pairs.push((corpus::random_word(&mut rng, n, 5), corpus::random_word(&mut rng, m, 5)));
    }
    let tally = par_tally(&pairs, |(x, y)| {
        Ok(fail_if(bialgebra::verify_cancellation(x, y)?, || json!({ "x": word_to_json(x), "y": word_to_json(y) })))
    })?;
    Ok(Outcome { params: json!({ "balls": "F1,F2 radius 3", "random_pairs": cfg.random_pairs, "max_rank": 4 }), tally })
}

fn lift_constructions(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut rng = salted(cfg, 4);
    let mut t = Tally::default();
    for n in 1..=4 {
        for m in 1..=4 {
            for _ in 0..20 {
                let x = corpus::random_word(&mut rng, n, 6);
                let y = corpus::random_word(&mut rng, m, 6);
                let (y1, z1) = words::lift_first(&x, m)?;
                let (x2, z2) = words::lift_second(&y, n)?;
                let ok = words::phi(n, m, &z1)? == PairWord::new(x.clone(), y1)
                    && words::phi(n, m, &z2)? == PairWord::new(x2, y.clone());
                t.check(ok, || json!({ "x": word_to_json(&x), "y": word_to_json(&y) }));
            }
        }
    }
    Ok(Outcome { params: json!({ "ranks": "n,m<=4", "per_rank": 20, "max_len": 6 }), tally: t })
}

/// The four-term sum `Δ_φ(g_2^{(6)})`.
pub const DELTA_G2_RANK6: &str = "F1⊗F6: g1 ⊗ g2; F2⊗F3: g1 ⊗ g2; F3⊗F2: g1 ⊗ g2; F6⊗F1: g2 ⊗ g1";

fn delta_g2_rank6(_: &SuiteConfig) -> Result<Outcome> {
    let x = DirectSumElement::<Q>::from_word(gen(6, 2))?;
    let d = bialgebra::delta_phi(&x);
    let mut expected = DirectSumTensor::<Q>::zero();
    for (a, b) in [((1, 1), (6, 2)), ((2, 1), (3, 2)), ((3, 1), (2, 2)), ((6, 2), (1, 1))] {
        expected.add_term([gen(a.0, a.1), gen(b.0, b.1)], Complex::one());
    }
    let mut t = Tally::default();
    let printed = d.to_string();
    t.check(d == expected && printed == DELTA_G2_RANK6, || json!({ "printed": printed }));
    t.check(d.flip() != d, || json!({ "cocommutative": true }));
    Ok(Outcome { params: json!({ "x": "F6: g2" }), tally: t })
}

fn coassociativity(cfg: &SuiteConfig) -> Result<Outcome> {
    let items = coalgebra_corpus(cfg, 5);
    let tally = par_tally(&items, |x| Ok(fail_if(bialgebra::coassoc_check(x).equal, || json!({ "x": x.to_string() }))))?;
    Ok(Outcome { params: json!({ "generators": "n<=24", "random": cfg.random_elements, "max_rank": 12, "max_len": 5 }), tally })
}

fn counit_law(cfg: &SuiteConfig) -> Result<Outcome> {
    let items = coalgebra_corpus(cfg, 5);
    let tally = par_tally(&items, |x| Ok(fail_if(bialgebra::counit_check(x), || json!({ "x": x.to_string() }))))?;
    Ok(Outcome { params: json!({ "generators": "n<=24", "random": cfg.random_elements, "max_rank": 12, "max_len": 5 }), tally })
}

fn wcs_mixed(_: &SuiteConfig) -> Result<Outcome> {
    let mut cases = Vec::new();
    for n in 1..=4 {
        for m in 1..=4 {
            for l in 1..=4 {
                for k in 1..=n * m * l {
                    cases.push((n, m, l, gen(n * m * l, k)));
                }
            }
        }
    }
    let tally = par_tally(&cases, |(n, m, l, z)| {
        Ok(fail_if(bialgebra::wcs_check(*n, *m, *l, z)?, || json!({ "n": n, "m": m, "l": l, "z": word_to_json(z) })))
    })?;
    Ok(Outcome { params: json!({ "nml": "{1..4}^3", "words": "all generators" }), tally })
}

fn wcs_counit(_: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    for n in 1..=12 {
        for k in 1..=n {
            t.check(bialgebra::counit_axiom_check(n, &gen(n, k))?, || json!({ "n": n, "k": k }));
        }
    }
    Ok(Outcome { params: json!({ "n": "<=12" }), tally: t })
}

fn comodule_identity(_: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    for k in 1..=24 {
        let x = ReducedWord::generator(Rank::Infinite, k)?;
        for n in 1..=3 {
            for m in 1..=3 {
                t.check(bialgebra::comodule_check(n, m, &x)?, || json!({ "k": k, "n": n, "m": m }));
            }
        }
    }
    Ok(Outcome { params: json!({ "k": "<=24", "n": "<=3", "m": "<=3" }), tally: t })
}

fn standard_compatibility(_: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    for n in 1..=4 {
        for m in 1..=4 {
            for k in 1..=n * m {
                let (lhs, rhs) = algebra::standard_compatibility_sides(n, m, &q_word(&gen(n * m, k)))?;
                t.check(lhs == rhs, || json!({ "n": n, "m": m, "k": k }));
            }
        }
    }
    Ok(Outcome { params: json!({ "n": "<=4", "m": "<=4" }), tally: t })
}

fn delta_star_homomorphism(cfg: &SuiteConfig) -> Result<Outcome> {
    let xs = random_direct_sums(cfg, 6);
    let ys = random_direct_sums(cfg, 7);
    let pairs: Vec<_> = xs.into_iter().zip(ys).take(cfg.random_pairs).collect();
    let tally = par_tally(&pairs, |(x, y)| {
        let d = bialgebra::delta_phi::<Q>;
        let ok = d(&x.mul(y)) == d(x).mul(&d(y)) && d(&x.star()) == d(x).star();
        Ok(fail_if(ok, || json!({ "x": x.to_string(), "y": y.to_string() })))
    })?;
    Ok(Outcome { params: json!({ "pairs": cfg.random_pairs, "max_rank": 12, "max_len": 5 }), tally })
}

fn unitization(cfg: &SuiteConfig) -> Result<Outcome> {
    let xs = random_direct_sums(cfg, 8);
    let mut rng = salted(cfg, 9);
    let items: Vec<(UnitizedElement<Q>, UnitizedElement<Q>)> = xs
        .chunks(2)
        .filter(|c| c.len() == 2)
        .map(|c| {
            (
                UnitizedElement::new(c[0].clone(), corpus::random_coefficient(&mut rng)),
                UnitizedElement::new(c[1].clone(), corpus::random_coefficient(&mut rng)),
            )
        })
        .collect();
    let tally = par_tally(&items, |(a, b)| {
        let mult = bialgebra::unitized_delta(&a.mul(b)) == bialgebra::unitized_delta(a).mul(&bialgebra::unitized_delta(b));
        let eps = bialgebra::unitized_counit(&a.mul(b)) == bialgebra::unitized_counit(a) * bialgebra::unitized_counit(b);
        let ok = mult && eps && bialgebra::unitized_counit_check(a);
        Ok(fail_if(ok, || json!({ "a": a.body.to_string(), "b": b.body.to_string() })))
    })?;
    Ok(Outcome { params: json!({ "pairs": items.len() }), tally })
}

fn gns_coefficients(_: &SuiteConfig) -> Result<Outcome> {
    let mut cases = Vec::new();
    for n in 2..=3 {
        for w in words::enumerate_ball(n, 4)? {
            for i in 1..=n {
                cases.push((n, i, w.clone()));
            }
        }
    }
    let tally = par_tally(&cases, |(n, i, w)| {
        Ok(fail_if(reps::gns_coeff_check(*n, *i, w)?, || json!({ "n": n, "i": i, "w": word_to_json(w) })))
    })?;
    Ok(Outcome { params: json!({ "n": [2, 3], "radius": 4 }), tally })
}

fn fixed_vectors(_: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    for n in 2..=3 {
        for i in 1..=n {
            for j in 1..=n {
                for r in 0..=3 {
                    let dim = reps::fixed_vector_dim(n, i, j, r)?;
                    let expected = usize::from(i == j);
                    t.check(dim == expected, || json!({ "n": n, "i": i, "j": j, "radius": r, "dim": dim }));
                }
            }
        }
    }
    Ok(Outcome { params: json!({ "n": [2, 3], "radius": "<=3" }), tally: t })
}

fn cyclicity(_: &SuiteConfig) -> Result<Outcome> {
    let ball = words::enumerate_ball(2, 3)?;
    let mut cases = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            for x in &ball {
                cases.push((i, j, x.clone()));
            }
        }
    }
    let tally = par_tally(&cases, |(i, j, x)| {
        for y in &ball {
            if !reps::cyclicity_check(2, 2, *i, *j, x, y)? {
                return Ok(Some(json!({ "i": i, "j": j, "x": word_to_json(x), "y": word_to_json(y) })));
            }
        }
        Ok(None)
    })?;
    let checked = tally.checked * ball.len() as u64;
    Ok(Outcome { params: json!({ "n": 2, "m": 2, "radius": 3 }), tally: Tally { checked, ..tally } })
}

fn intertwiner(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut rng = salted(cfg, 10);
    let mut t = Tally::default();
    for _ in 0..cfg.random_triples {
        let x = corpus::random_word(&mut rng, 2, 4);
        let h = corpus::random_word(&mut rng, 4, 4);
        let g = corpus::random_word(&mut rng, 4, 4);
        t.check(reps::intertwine_check(2, 2, &x, &h, &g)?, || {
            json!({ "x": word_to_json(&x), "h": word_to_json(&h), "g": word_to_json(&g) })
        });
    }
    let one2 = ReducedWord::identity(Rank::Finite(2));
    let k = words::kernel_witness(2, 2, 1, 2, 1, 2)?;
    let collides = reps::u_map(2, 2, &one2, &k)? == reps::u_map(2, 2, &one2, &ReducedWord::identity(Rank::Finite(4)))?;
    t.check(collides && !k.is_identity(), || json!({ "kernel_word": word_to_json(&k) }));
    Ok(Outcome { params: json!({ "n": 2, "m": 2, "triples": cfg.random_triples, "max_len": 4 }), tally: t })
}

fn gram_psd(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut min_eig = f64::INFINITY;
    for n in 2..=3 {
        let ball = words::enumerate_ball(n, 2)?;
        for i in 1..=n {
            let f = PdFunction::new(n, i)?;
            let out = reps::gram_psd(|w| f.eval(w).map_or(f64::NAN, f64::from), &ball, cfg.tol)?;
            min_eig = min_eig.min(out.min_eigenvalue);
            t.check(out.psd, || json!({ "f": format!("f{i}^({n})"), "min_eigenvalue": out.min_eigenvalue }));
        }
    }
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        let ball = words::enumerate_ball(n * m, 2)?;
        for i in 1..=n {
            for j in 1..=m {
                let eval = |z: &ReducedWord| reps::f_pullback_eval(n, i, m, j, z).map_or(f64::NAN, f64::from);
                let out = reps::gram_psd(eval, &ball, cfg.tol)?;
                min_eig = min_eig.min(out.min_eigenvalue);
                t.check(out.psd, || json!({ "pullback": [n, i, m, j], "min_eigenvalue": out.min_eigenvalue }));
            }
        }
    }
    Ok(Outcome { params: json!({ "radius": 2, "tol": cfg.tol, "min_eigenvalue": min_eig }), tally: t })
}

fn group_actions(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut rng = salted(cfg, 11);
    let mut t = Tally::default();
    for _ in 0..cfg.random_pairs {
        let x = corpus::random_word(&mut rng, 3, 4);
        let y = corpus::random_word(&mut rng, 3, 4);
        let v: SuppVector<ReducedWord, Q> = (0..3).map(|_| (corpus::random_word(&mut rng, 3, 3), corpus::random_coefficient(&mut rng))).collect();
        let xy = x.multiply(&y)?;
        let lam = reps::lambda_action(3, &x, &reps::lambda_action(3, &y, &v)?)? == reps::lambda_action(3, &xy, &v)?;
        let cosets: SuppVector<Coset, Q> = v.iter().map(|(w, c)| (reps::coset_normal_form(3, 2, w).expect("rank 3"), c.clone())).collect();
        let l = reps::l_action(3, 2, &x, &reps::l_action(3, 2, &y, &cosets)?)? == reps::l_action(3, 2, &xy, &cosets)?;
        let unit = reps::l_action(3, 2, &ReducedWord::identity(Rank::Finite(3)), &cosets)? == cosets;
        t.check(lam && l && unit, || json!({ "x": word_to_json(&x), "y": word_to_json(&y) }));
    }
    Ok(Outcome { params: json!({ "n": 3, "i": 2, "pairs": cfg.random_pairs }), tally: t })
}

fn beta_morphism(_: &SuiteConfig) -> Result<Outcome> {
    let gens = corpus::all_generators(24);
    let tally = par_tally(&gens, |g| {
        let x = DirectSumElement::<Q>::from_word(g.clone())?;
        Ok(fail_if(morphisms::bialgebra_morphism_check(&Beta, &x, 0.0), || json!({ "g": g.to_string(), "rank": g.ambient().to_string() })))
    })?;
    Ok(Outcome { params: json!({ "generators": "n<=24" }), tally })
}

fn beta_involution(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    for x in random_direct_sums(cfg, 12).iter().take(100) {
        t.check(morphisms::beta(&morphisms::beta(x)) == *x, || json!({ "x": x.to_string() }));
    }
    Ok(Outcome { params: json!({ "random": 100 }), tally: t })
}

const ALPHA_PARAMS: [f64; 3] = [0.3, 1.0, 2.5];

fn alpha_morphism(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut items: Vec<DirectSumElement<f64>> =
        corpus::all_generators(12).into_iter().map(|g| DirectSumElement::from_word(g).expect("finite")).collect();
    items.extend(random_direct_sums(cfg, 13).iter().take(50).map(DirectSumElement::to_approx));
    let tol = cfg.tol;
    let tally = par_tally(&items, |x| {
        for t in ALPHA_PARAMS {
            let dev = morphisms::morphism_deviation(&Alpha { t }, x);
            if dev > tol {
                return Ok(Some(json!({ "t": t, "x": x.to_string(), "deviation": dev })));
            }
        }
        Ok(None)
    })?;
    Ok(Outcome { params: json!({ "t": ALPHA_PARAMS, "generators": "n<=12", "random": 50, "tol": tol }), tally })
}

fn alpha_group_laws(cfg: &SuiteConfig) -> Result<Outcome> {
    let corpus_q: Vec<DirectSumElement<Q>> = corpus::all_generators(12)
        .into_iter()
        .map(|g| DirectSumElement::from_word(g).expect("finite"))
        .chain(random_direct_sums(cfg, 14).into_iter().take(50))
        .collect();
    let r = morphisms::group_law_checks(&corpus_q, &ALPHA_PARAMS, cfg.tol);
    let mut t = Tally { checked: (corpus_q.len() * ALPHA_PARAMS.len() * ALPHA_PARAMS.len()) as u64, witness: None };
    if !r.passed() {
        t.witness = Some(json!({
            "alpha_composition": r.alpha_composition,
            "beta_involution": r.beta_involution,
            "beta_alpha_commute": r.beta_alpha_commute,
            "alpha_counit": r.alpha_counit,
        }));
    }
    let params = json!({
        "t": ALPHA_PARAMS,
        "tol": cfg.tol,
        "max_composition_deviation": r.alpha_composition,
        "max_commutator_deviation": r.beta_alpha_commute,
    });
    Ok(Outcome { params, tally: t })
}

fn alpha_star(cfg: &SuiteConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    for x in random_direct_sums(cfg, 15).iter().take(100) {
        let x = x.to_approx();
        for s in ALPHA_PARAMS {
            let a = Alpha { t: s };
            let dev = a.apply(&x.star()).max_deviation(&a.apply(&x).star());
            t.check(dev <= cfg.tol, || json!({ "t": s, "x": x.to_string(), "deviation": dev }));
        }
    }
    Ok(Outcome { params: json!({ "t": ALPHA_PARAMS, "random": 100 }), tally: t })
}

fn timed<T>(cfg: &SuiteConfig, f: impl FnOnce() -> T) -> (T, Option<f64>) {
    let start = Instant::now();
    let out = f();
    (out, cfg.timing.then(|| start.elapsed().as_secs_f64() * 1e3))
}

fn probe_status(findings: &[Value]) -> Status {
    if findings.is_empty() {
        Status::Verified
    } else {
        Status::Reported
    }
}

/// `f_i^{(n)} ⊗_φ f_j^{(m)}` against `f_{m(i−1)+j}^{(nm)}` on the ball.
pub fn probe_pd(n: u32, m: u32, i: u32, j: u32, cfg: &SuiteConfig) -> Result<ProbeReport> {
    let (found, timing_ms) = timed(cfg, || reps::claim_probe_pd(n, m, i, j, cfg.radius));
    let disagreements: Vec<Value> = found?.iter().map(|d| serde_json::to_value(d).expect("serializable")).collect();
    Ok(ProbeReport {
        claim: "pd-tensor-formula".into(),
        status: probe_status(&disagreements),
        params: json!({ "n": n, "m": m, "i": i, "j": j }),
        radius: cfg.radius,
        checked: words::ball_size(n * m, cfg.radius),
        disagreements,
        timing_ms,
    })
}

/// Pairs `(x, 1)` with `x ≠ 1` in the `φ_{n,m}`-orbit of `(1, 1)`: distinct
/// first coordinates that the orbit does not separate.
pub fn probe_orbit(n: u32, m: u32, cfg: &SuiteConfig) -> Result<ProbeReport> {
    let start = PairWord::identity(Rank::finite(n)?, Rank::finite(m)?);
    let (orbit, timing_ms) = timed(cfg, || reps::orbit_bfs(n, m, &start, cfg.radius));
    let orbit = orbit?;
    let disagreements: Vec<Value> = orbit
        .iter()
        .filter(|p| p.second.is_identity() && !p.first.is_identity())
        .map(|p| json!({ "pair": pair_to_json(p), "text": p.to_string() }))
        .collect();
    Ok(ProbeReport {
        claim: "orbit-separation".into(),
        status: probe_status(&disagreements),
        params: json!({ "n": n, "m": m, "start": pair_to_json(&start), "orbit_size": orbit.len() }),
        radius: cfg.radius,
        checked: orbit.len() as u64,
        disagreements,
        timing_ms,
    })
}

/// Classes of distinct `g` in the ball with the same basis image under
/// `ξ_g ↦ ξ_{p(g)} ⊗ ξ_{q(g)}`.
pub fn probe_u_injectivity(n: u32, m: u32, cfg: &SuiteConfig) -> Result<ProbeReport> {
    let x = ReducedWord::identity(Rank::finite(n)?);
    let (classes, timing_ms) = timed(cfg, || -> Result<BTreeMap<PairWord, Vec<ReducedWord>>> {
        let mut classes: BTreeMap<PairWord, Vec<ReducedWord>> = BTreeMap::new();
        for g in words::enumerate_ball(n * m, cfg.radius)? {
            classes.entry(reps::u_map(n, m, &x, &g)?).or_default().push(g);
        }
        Ok(classes)
    });
    let classes = classes?;
    let checked = classes.values().map(|v| v.len() as u64).sum();
    let disagreements: Vec<Value> = classes
        .iter()
        .filter(|(_, gs)| gs.len() > 1)
        .map(|(img, gs)| json!({ "image": pair_to_json(img), "words": gs.iter().map(word_to_json).collect::<Vec<_>>() }))
        .collect();
    Ok(ProbeReport {
        claim: "u-map-injectivity".into(),
        status: probe_status(&disagreements),
        params: json!({ "n": n, "m": m, "x": word_to_json(&x) }),
        radius: cfg.radius,
        checked,
        disagreements,
        timing_ms,
    })
}

/// Every probe at the configured radius.
pub fn probe_claims(cfg: &SuiteConfig) -> Result<ProbeSummary> {
    let mut jobs: Vec<Box<dyn Fn() -> Result<ProbeReport> + Send + Sync + '_>> = Vec::new();
    for (n, m) in [(2, 2), (2, 3), (3, 2)] {
        for i in 1..=n {
            for j in 1..=m {
                jobs.push(Box::new(move || probe_pd(n, m, i, j, cfg)));
            }
        }
    }
    jobs.push(Box::new(|| probe_orbit(2, 2, cfg)));
    jobs.push(Box::new(|| probe_u_injectivity(2, 2, cfg)));
    let probes = jobs.par_iter().map(|f| f()).collect::<Result<Vec<_>>>()?;
    Ok(ProbeSummary::new(probes))
}
