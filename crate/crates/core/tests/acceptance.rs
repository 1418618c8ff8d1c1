//! Acceptance run: one PASS/FAIL line per criterion, each within its time
//! budget. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use freebialg::algebra::{self, AlgebraElement};
use freebialg::bialgebra::{self, DirectSumElement, DirectSumTensor};
use freebialg::corpus;
use freebialg::morphisms::{self, Alpha, Beta};
use freebialg::reps::{self, PdFunction};
use freebialg::text::parse_word;
use freebialg::words::{self, PairWord, Rank, ReducedWord};

type Q = BigRational;

const SEED: u64 = 0;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn gen(n: u32, k: u32) -> ReducedWord {
    ReducedWord::generator(Rank::Finite(n), k).unwrap()
}

fn w(n: u32, text: &str) -> ReducedWord {
    parse_word(text, Rank::Finite(n)).unwrap()
}

fn ds(x: ReducedWord) -> DirectSumElement<Q> {
    DirectSumElement::from_word(x).unwrap()
}

/// Generators of every rank `≤ 24` plus 200 seeded random elements
/// (ranks ≤ 12, word length ≤ 5).
fn coalgebra_corpus() -> Vec<DirectSumElement<Q>> {
    let mut rng = corpus::rng(SEED);
    corpus::all_generators(24)
        .into_iter()
        .map(ds)
        .chain((0..200).map(|_| corpus::random_direct_sum(&mut rng, 12, 5, 3)))
        .collect()
}

/// Letter-level image of a word under `φ_{n,m}`, reduced with a stack.
fn naive_phi(n: u32, m: u32, z: &ReducedWord) -> (Vec<(u32, i64)>, Vec<(u32, i64)>) {
    assert_eq!(z.ambient(), Rank::Finite(n * m));
    let push = |v: &mut Vec<(u32, i64)>, l: (u32, i64)| {
        if v.last() == Some(&(l.0, -l.1)) {
            v.pop();
        } else {
            v.push(l);
        }
    };
    let (mut p, mut q) = (Vec::new(), Vec::new());
    for s in z.syllables() {
        for _ in 0..s.exp.abs() {
            let e = s.exp.signum();
            push(&mut p, ((s.gen - 1) / m + 1, e));
            push(&mut q, ((s.gen - 1) % m + 1, e));
        }
    }
    (p, q)
}

fn c1_delta_remark() -> Verdict {
    let d = bialgebra::delta_phi(&ds(gen(6, 2)));
    let mut expected = DirectSumTensor::<Q>::zero();
    expected.add_term([gen(1, 1), gen(6, 2)], Complex::one());
    expected.add_term([gen(2, 1), gen(3, 2)], Complex::one());
    expected.add_term([gen(3, 1), gen(2, 2)], Complex::one());
    expected.add_term([gen(6, 2), gen(1, 1)], Complex::one());
    let printed = d.to_string();
    let literal = "F1⊗F6: g1 ⊗ g2; F2⊗F3: g1 ⊗ g2; F3⊗F2: g1 ⊗ g2; F6⊗F1: g2 ⊗ g1";
    verdict(d == expected && printed == literal, format!("Δ(g2 in F6) = {printed}"))
}

fn c2_coassociativity() -> Verdict {
    let corpus = coalgebra_corpus();
    let bad = corpus.iter().filter(|x| !bialgebra::coassoc_check(*x).equal).count();
    verdict(bad == 0, format!("{} elements, {bad} failures", corpus.len()))
}

fn c3_counit() -> Verdict {
    let corpus = coalgebra_corpus();
    let bad = corpus.iter().filter(|x| !bialgebra::counit_check(*x)).count();
    verdict(bad == 0, format!("{} elements, {bad} failures", corpus.len()))
}

fn c4_wcs() -> Verdict {
    let mut checked = 0;
    let mut bad = 0;
    for n in 1..=4 {
        for m in 1..=4 {
            for l in 1..=4 {
                for k in 1..=n * m * l {
                    checked += 1;
                    bad += usize::from(!bialgebra::wcs_check(n, m, l, &gen(n * m * l, k)).unwrap());
                }
            }
        }
    }
    for n in 1..=12 {
        for k in 1..=n {
            checked += 1;
            bad += usize::from(!bialgebra::counit_axiom_check(n, &gen(n, k)).unwrap());
        }
    }
    verdict(bad == 0, format!("{checked} checks, {bad} failures"))
}

fn c5_kernel() -> Verdict {
    let z = w(4, "g1*g2^-1*g4*g3^-1");
    let trivial = words::phi(2, 2, &z).unwrap().is_identity() && naive_phi(2, 2, &z) == (vec![], vec![]);
    let mut checked = 0;
    let mut bad = 0;
    for n in 2..=3 {
        for m in 2..=3 {
            for i in 1..=n {
                for l in 1..=n {
                    for j in 1..=m {
                        for k in 1..=m {
                            let x = words::kernel_witness(n, m, i, l, j, k).unwrap();
                            let a = AlgebraElement::<Q>::from_word(x.clone()).sub(&AlgebraElement::one(x.ambient())).unwrap();
                            let killed = algebra::varphi_alg(n, m, &a).unwrap().is_zero() && naive_phi(n, m, &x) == (vec![], vec![]);
                            let nontrivial = i == l || j == k || !x.is_identity();
                            checked += 1;
                            bad += usize::from(!(killed && nontrivial));
                        }
                    }
                }
            }
        }
    }
    verdict(trivial && bad == 0, format!("φ(c1c2^-1c4c3^-1) = (1,1): {trivial}; {checked} kernel words, {bad} failures"))
}

fn c6_cancellation() -> Verdict {
    let mut checked = 0;
    let mut bad = 0;
    for n in 1..=2 {
        for m in 1..=2 {
            let (bn, bm) = (words::enumerate_ball(n, 3).unwrap(), words::enumerate_ball(m, 3).unwrap());
            for x in &bn {
                for y in &bm {
                    checked += 1;
                    bad += usize::from(!bialgebra::verify_cancellation(x, y).unwrap());
                }
            }
        }
    }
    let mut rng = corpus::rng(SEED + 6);
    for _ in 0..100 {
        let (n, m) = (rng.random_range(1..=4), rng.random_range(1..=4));
        let x = corpus::random_word(&mut rng, n, 5);
        let y = corpus::random_word(&mut rng, m, 5);
        checked += 1;
        bad += usize::from(!bialgebra::verify_cancellation(&x, &y).unwrap());
    }
    verdict(bad == 0, format!("{checked} pairs, {bad} failures"))
}

fn c7_comodule() -> Verdict {
    let mut checked = 0;
    let mut bad = 0;
    for k in 1..=24 {
        let x = ReducedWord::generator(Rank::Infinite, k).unwrap();
        for n in 1..=3 {
            for m in 1..=3 {
                checked += 1;
                bad += usize::from(!bialgebra::comodule_check(n, m, &x).unwrap());
            }
        }
    }
    verdict(bad == 0, format!("{checked} checks, {bad} failures"))
}

fn c8_permutation_reps() -> Verdict {
    let mut gns = 0;
    let mut bad = 0;
    for n in 2..=3 {
        for z in words::enumerate_ball(n, 4).unwrap() {
            for i in 1..=n {
                gns += 1;
                bad += usize::from(!reps::gns_coeff_check(n, i, &z).unwrap());
            }
        }
    }
    let mut fixed_ok = true;
    for n in 2..=3 {
        for i in 1..=n {
            for j in 1..=n {
                fixed_ok &= reps::fixed_vector_dim(n, i, j, 3).unwrap() == usize::from(i == j);
            }
        }
    }
    let ball = words::enumerate_ball(2, 3).unwrap();
    let mut cyc = 0;
    for i in 1..=2 {
        for j in 1..=2 {
            for x in &ball {
                for y in &ball {
                    cyc += 1;
                    bad += usize::from(!reps::cyclicity_check(2, 2, i, j, x, y).unwrap());
                }
            }
        }
    }
    verdict(bad == 0 && fixed_ok, format!("{gns} GNS coefficients, fixed dims ok: {fixed_ok}, {cyc} cyclicity pairs, {bad} failures"))
}

fn c9_intertwiner() -> Verdict {
    let mut rng = corpus::rng(SEED + 9);
    let mut bad = 0;
    for _ in 0..200 {
        let x = corpus::random_word(&mut rng, 2, 4);
        let h = corpus::random_word(&mut rng, 4, 4);
        let g = corpus::random_word(&mut rng, 4, 4);
        bad += usize::from(!reps::intertwine_check(2, 2, &x, &h, &g).unwrap());
    }
    let one = ReducedWord::identity(Rank::Finite(2));
    let k = w(4, "g1*g2^-1*g4*g3^-1");
    let collision = reps::u_map(2, 2, &one, &k).unwrap() == reps::u_map(2, 2, &one, &ReducedWord::identity(Rank::Finite(4))).unwrap();
    verdict(bad == 0 && collision, format!("200 triples, {bad} failures; U(kernel word) = U(1): {collision}"))
}

fn c10_gram() -> Verdict {
    let mut min_eig = f64::INFINITY;
    let mut ok = true;
    for n in 2..=3 {
        let ball = words::enumerate_ball(n, 2).unwrap();
        for i in 1..=n {
            let f = PdFunction::new(n, i).unwrap();
            let out = reps::gram_psd(|z| f64::from(f.eval(z).unwrap()), &ball, 1e-9).unwrap();
            min_eig = min_eig.min(out.min_eigenvalue);
            ok &= out.psd;
        }
    }
    let ball = words::enumerate_ball(4, 2).unwrap();
    for i in 1..=2 {
        for j in 1..=2 {
            let out = reps::gram_psd(|z| f64::from(reps::f_pullback_eval(2, i, 2, j, z).unwrap()), &ball, 1e-9).unwrap();
            min_eig = min_eig.min(out.min_eigenvalue);
            ok &= out.psd;
        }
    }
    verdict(ok && min_eig >= -1e-9, format!("minimum eigenvalue {min_eig:.3e}"))
}

fn c11_automorphisms() -> Verdict {
    let gens: Vec<DirectSumElement<Q>> = corpus::all_generators(24).into_iter().map(ds).collect();
    let beta_ok = gens.iter().all(|x| morphisms::bialgebra_morphism_check(&Beta, x, 0.0));
    let mut rng = corpus::rng(SEED + 11);
    let random: Vec<DirectSumElement<Q>> = (0..100).map(|_| corpus::random_direct_sum(&mut rng, 12, 5, 3)).collect();
    let involution = random.iter().chain(&gens).all(|x| morphisms::beta(&morphisms::beta(x)) == *x);
    let params = [0.3, 1.0, 2.5];
    let small: Vec<DirectSumElement<Q>> = corpus::all_generators(12).into_iter().map(ds).chain(random.into_iter().take(30)).collect();
    let mut alpha_dev: f64 = 0.0;
    for x in &small {
        let xa = x.to_approx();
        for t in params {
            alpha_dev = alpha_dev.max(morphisms::morphism_deviation(&Alpha { t }, &xa));
        }
    }
    let laws = morphisms::group_law_checks(&small, &params, 1e-9);
    let ok = beta_ok && involution && alpha_dev <= 1e-9 && laws.passed();
    verdict(
        ok,
        format!(
            "β morphism {beta_ok}, β² = id {involution}, α morphism dev {alpha_dev:.1e}, α_tα_s dev {:.1e}, βα−αβ dev {:.1e}",
            laws.alpha_composition, laws.beta_alpha_commute
        ),
    )
}

fn c12_standard() -> Verdict {
    let mut checked = 0;
    let mut bad = 0;
    for n in 1..=4 {
        for m in 1..=4 {
            for k in 1..=n * m {
                let (lhs, rhs) = algebra::standard_compatibility_sides(n, m, &AlgebraElement::<Q>::from_word(gen(n * m, k))).unwrap();
                checked += 1;
                bad += usize::from(lhs != rhs);
            }
        }
    }
    verdict(bad == 0, format!("{checked} generators, {bad} failures"))
}

fn c13_findings() -> Verdict {
    // (a) brute force: φ(z) = (1, 1), so the pullback is 1; z is not a power of c1
    let z = w(4, "g1*g2^-1*g4*g3^-1");
    let (p, q) = naive_phi(2, 2, &z);
    let brute_pullback = p.iter().all(|l| l.0 == 1) && q.iter().all(|l| l.0 == 1);
    let brute_direct = z.syllables().iter().all(|s| s.gen == 1);
    let found = reps::claim_probe_pd(2, 2, 1, 1, 4).unwrap();
    let a = brute_pullback
        && !brute_direct
        && found.iter().any(|d| d.z == z && d.pullback == 1 && d.direct == 0);

    // (b) brute force: apply φ(c1), φ(c4), φ(c2)^-1, φ(c3)^-1 on the left of (1, 1)
    let mut pair = PairWord::identity(Rank::Finite(2), Rank::Finite(2));
    for step in ["g3^-1", "g2^-1", "g4", "g1"] {
        let mv = words::phi(2, 2, &w(4, step)).unwrap();
        pair = mv.multiply(&pair).unwrap();
    }
    let comm = PairWord::new(w(2, "g1*g2*g1^-1*g2^-1"), ReducedWord::identity(Rank::Finite(2)));
    let orbit = reps::orbit_bfs(2, 2, &PairWord::identity(Rank::Finite(2), Rank::Finite(2)), 4).unwrap();
    let b = pair == comm && orbit.contains(&comm);
    verdict(a && b, format!("(a) probe finding confirmed: {a}; (b) orbit finding confirmed: {b} ({} findings in probe (a))", found.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Verdict); 13] = [
        ("1  Δ_φ(g2 in F6) four-term sum", Duration::from_millis(1), c1_delta_remark),
        ("2  coassociativity", Duration::from_secs(10), c2_coassociativity),
        ("3  counit law", Duration::from_secs(5), c3_counit),
        ("4  weakly coassociative system axioms", Duration::from_secs(5), c4_wcs),
        ("5  kernel identities", Duration::from_secs(1), c5_kernel),
        ("6  cancellation witnesses", Duration::from_secs(10), c6_cancellation),
        ("7  comodule identity", Duration::from_secs(1), c7_comodule),
        ("8  permutation representations", Duration::from_secs(30), c8_permutation_reps),
        ("9  intertwiner relation", Duration::from_secs(5), c9_intertwiner),
        ("10 Gram matrices PSD", Duration::from_secs(10), c10_gram),
        ("11 automorphisms", Duration::from_secs(5), c11_automorphisms),
        ("12 standard comultiplication", Duration::from_secs(1), c12_standard),
        ("13 discrepancy findings", Duration::from_secs(10), c13_findings),
    ];
    let mut failures = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let v = run();
        let elapsed = start.elapsed();
        let in_budget = elapsed <= budget;
        let ok = v.ok && in_budget;
        failures += usize::from(!ok);
        println!(
            "{} criterion {name}: {} [{:.3?} / budget {:?}{}]",
            if ok { "PASS" } else { "FAIL" },
            v.detail,
            elapsed,
            budget,
            if in_budget { "" } else { ", over budget" }
        );
    }
    println!("{} of 13 criteria passed", 13 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
