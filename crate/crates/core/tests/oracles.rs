//! Cross-checks against deliberately naive reimplementations: letter-stack
//! reduction, letter-by-letter splitting maps, brute-force divisor sums,
//! exact Gaussian elimination and plain BFS.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use freebialg::bialgebra::{counit, delta_phi, DirectSumElement};
use freebialg::corpus;
use freebialg::reps;
use freebialg::words::{self, PairWord, Rank, ReducedWord, Syllable};

type Q = BigRational;
type Letters = Vec<(u32, i8)>;

fn letters(w: &ReducedWord) -> Letters {
    let mut out = Vec::new();
    for s in w.syllables() {
        for _ in 0..s.exp.abs() {
            out.push((s.gen, s.exp.signum() as i8));
        }
    }
    out
}

fn stack_reduce(input: &[(u32, i8)]) -> Letters {
    let mut out: Letters = Vec::new();
    for &(g, e) in input {
        if out.last() == Some(&(g, -e)) {
            out.pop();
        } else {
            out.push((g, e));
        }
    }
    out
}

/// `φ_{n,m}` one letter at a time: `c_k ↦ (a_{⌈k/m⌉}, b_{k − m(⌈k/m⌉−1)})`.
fn naive_phi(n: u32, m: u32, z: &ReducedWord) -> (Letters, Letters) {
    assert_eq!(z.ambient(), Rank::Finite(n * m));
    let (mut p, mut q) = (Vec::new(), Vec::new());
    for (k, e) in letters(z) {
        let i = (k + m - 1) / m;
        let j = k - m * (i - 1);
        p.push((i, e));
        q.push((j, e));
    }
    (stack_reduce(&p), stack_reduce(&q))
}

fn naive_cyclic(l: &Letters, i: u32) -> bool {
    l.iter().all(|&(g, _)| g == i)
}

#[test]
fn multiplication_matches_stack_reduction() {
    let mut rng = corpus::rng(101);
    for _ in 0..500 {
        let n = 3;
        let x = corpus::random_word(&mut rng, n, 7);
        let y = corpus::random_word(&mut rng, n, 7);
        let mut cat = letters(&x);
        cat.extend(letters(&y));
        assert_eq!(letters(&x.multiply(&y).unwrap()), stack_reduce(&cat));
        let inv: Letters = letters(&x).iter().rev().map(|&(g, e)| (g, -e)).collect();
        assert_eq!(letters(&x.inverse()), inv);
    }
}

#[test]
fn phi_matches_letterwise_map() {
    let mut rng = corpus::rng(102);
    for (n, m) in [(1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (4, 3)] {
        for _ in 0..200 {
            let z = corpus::random_word(&mut rng, n * m, 8);
            let got = words::phi(n, m, &z).unwrap();
            let (p, q) = naive_phi(n, m, &z);
            assert_eq!((letters(&got.first), letters(&got.second)), (p, q), "{z}");
        }
    }
}

#[test]
fn ball_enumeration_matches_closed_form() {
    for n in 1..=4 {
        for r in 0..=4 {
            let ball = words::enumerate_ball(n, r).unwrap();
            let distinct: BTreeSet<_> = ball.iter().collect();
            assert_eq!(distinct.len(), ball.len());
            let count: u64 = 1 + (1..=r).map(|k| 2 * n as u64 * (2 * n as u64 - 1).pow(k - 1)).sum::<u64>();
            assert_eq!(ball.len() as u64, count);
            assert!(ball.iter().all(|w| w.letter_len() <= r as u64));
        }
    }
}

/// `Δ_φ` by looping over every `m ≤ n` with `m | n` and applying the naive map.
#[test]
fn delta_and_counit_match_brute_force() {
    let mut rng = corpus::rng(103);
    for _ in 0..100 {
        let x = corpus::random_direct_sum(&mut rng, 12, 4, 3);
        let mut expected: BTreeMap<(u32, u32, Letters, Letters), Complex<Q>> = BTreeMap::new();
        let mut eps = Complex::<Q>::zero();
        for (n, a) in x.components() {
            for (w, c) in a.terms().iter() {
                if *n == 1 {
                    eps = eps + c.clone();
                }
                for m in (1..=*n).filter(|m| n % m == 0) {
                    let l = n / m;
                    let (p, q) = naive_phi(m, l, w);
                    *expected.entry((m, l, p, q)).or_insert_with(Complex::zero) += c.clone();
                }
            }
        }
        expected.retain(|_, c| !c.is_zero());
        let got: BTreeMap<(u32, u32, Letters, Letters), Complex<Q>> = delta_phi(&x)
            .terms()
            .iter()
            .map(|([u, v], c)| {
                let (Rank::Finite(m), Rank::Finite(l)) = (u.ambient(), v.ambient()) else { panic!("finite ranks") };
                ((m, l, letters(u), letters(v)), c.clone())
            })
            .collect();
        assert_eq!(got, expected);
        assert_eq!(counit(&x), eps);
    }
}

/// Rank of a rational matrix by fraction-exact Gaussian elimination.
fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / pivot.clone();
                for k in c..cols {
                    let d = rows[r][k].clone() * f.clone();
                    rows[i][k] = rows[i][k].clone() - d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Fixed vectors of `L_i(g_j)` supported on cosets with short representatives,
/// computed as a nullspace: unknowns `v_c` for `c ∈ S`, one equation
/// `v_{g_j^{-1}d} − v_d = 0` per coset `d ∈ S ∪ g_j S`.
fn fixed_dim_by_nullspace(n: u32, i: u32, j: u32, radius: u32) -> usize {
    let support: Vec<reps::Coset> = reps::supported_cosets(n, i, radius).unwrap().into_iter().collect();
    let index: BTreeMap<&reps::Coset, usize> = support.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let gj = ReducedWord::generator(Rank::Finite(n), j).unwrap();
    let shift = |g: &ReducedWord, c: &reps::Coset| reps::coset_normal_form(n, i, &g.multiply(c.rep()).unwrap()).unwrap();
    let mut targets: BTreeSet<reps::Coset> = support.iter().cloned().collect();
    targets.extend(support.iter().map(|c| shift(&gj, c)));
    let rows: Vec<Vec<Q>> = targets
        .iter()
        .map(|d| {
            let mut row = vec![Q::zero(); support.len()];
            if let Some(&k) = index.get(&shift(&gj.inverse(), d)) {
                row[k] += Q::one();
            }
            if let Some(&k) = index.get(d) {
                row[k] -= Q::one();
            }
            row
        })
        .collect();
    support.len() - rank(rows)
}

#[test]
fn fixed_vector_dim_matches_nullspace() {
    for n in 1..=3 {
        for i in 1..=n {
            for j in 1..=n {
                for r in 0..=3 {
                    assert_eq!(
                        reps::fixed_vector_dim(n, i, j, r).unwrap(),
                        fixed_dim_by_nullspace(n, i, j, r),
                        "n={n} i={i} j={j} r={r}"
                    );
                }
            }
        }
    }
}

#[test]
fn coset_normal_form_matches_membership() {
    let ball = words::enumerate_ball(3, 3).unwrap();
    for i in 1..=3 {
        for a in ball.iter().step_by(7) {
            for b in &ball {
                let same = reps::coset_normal_form(3, i, a).unwrap() == reps::coset_normal_form(3, i, b).unwrap();
                let mut l: Letters = letters(a).iter().rev().map(|&(g, e)| (g, -e)).collect();
                l.extend(letters(b));
                assert_eq!(same, naive_cyclic(&stack_reduce(&l), i));
            }
        }
    }
}

/// For `f_i`, the Gram matrix is the indicator of "same left coset", a
/// direct sum of all-ones blocks, so its spectrum is the block sizes plus 0.
#[test]
fn gram_minimum_matches_block_structure() {
    let mut rng = corpus::rng(104);
    for _ in 0..40 {
        let n = 2;
        let i = 1;
        let sample: Vec<ReducedWord> = (0..8)
            .map(|_| corpus::random_word(&mut rng, n, 3))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let same = |s: &ReducedWord, t: &ReducedWord| {
            let mut l: Letters = letters(s).iter().rev().map(|&(g, e)| (g, -e)).collect();
            l.extend(letters(t));
            naive_cyclic(&stack_reduce(&l), i)
        };
        let has_block = sample.iter().enumerate().any(|(a, s)| sample[a + 1..].iter().any(|t| same(s, t)));
        let f = reps::PdFunction::new(n, i).unwrap();
        let out = reps::gram_psd(|w| f64::from(f.eval(w).unwrap()), &sample, 1e-9).unwrap();
        let expected = if has_block { 0.0 } else { 1.0 };
        assert!((out.min_eigenvalue - expected).abs() < 1e-9, "{:?}", out);
    }
}

#[test]
fn orbit_matches_plain_bfs() {
    let start = (Letters::new(), Letters::new());
    let moves: Vec<(Letters, Letters)> = (1..=4u32)
        .flat_map(|k| [1i64, -1].map(|e| ReducedWord::reduce(Rank::Finite(4), [Syllable::new(k, e)]).unwrap()))
        .map(|c| naive_phi(2, 2, &c))
        .collect();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut frontier = VecDeque::from([(start, 0)]);
    while let Some(((p, q), d)) = frontier.pop_front() {
        if d == 3 {
            continue;
        }
        for (mp, mq) in &moves {
            let np = stack_reduce(&[mp.clone(), p.clone()].concat());
            let nq = stack_reduce(&[mq.clone(), q.clone()].concat());
            if seen.insert((np.clone(), nq.clone())) {
                frontier.push_back(((np, nq), d + 1));
            }
        }
    }
    let got: BTreeSet<(Letters, Letters)> = reps::orbit_bfs(2, 2, &PairWord::identity(Rank::Finite(2), Rank::Finite(2)), 3)
        .unwrap()
        .iter()
        .map(|p| (letters(&p.first), letters(&p.second)))
        .collect();
    assert_eq!(got, seen);
}

#[test]
fn pd_probe_matches_direct_evaluation() {
    for (n, m) in [(2, 2), (2, 3)] {
        let ball = words::enumerate_ball(n * m, 3).unwrap();
        for i in 1..=n {
            for j in 1..=m {
                let k = m * (i - 1) + j;
                let expected: BTreeSet<Letters> = ball
                    .iter()
                    .filter(|z| {
                        let (p, q) = naive_phi(n, m, z);
                        let pullback = naive_cyclic(&p, i) && naive_cyclic(&q, j);
                        pullback != naive_cyclic(&letters(z), k)
                    })
                    .map(letters)
                    .collect();
                let got: BTreeSet<Letters> =
                    reps::claim_probe_pd(n, m, i, j, 3).unwrap().iter().map(|d| letters(&d.z)).collect();
                assert_eq!(got, expected, "n={n} m={m} i={i} j={j}");
            }
        }
    }
}

#[test]
fn u_map_matches_definition() {
    let mut rng = corpus::rng(105);
    for _ in 0..200 {
        let x = corpus::random_word(&mut rng, 2, 4);
        let g = corpus::random_word(&mut rng, 4, 5);
        let (p, q) = naive_phi(2, 2, &g);
        let img = reps::u_map(2, 2, &x, &g).unwrap();
        assert_eq!(letters(&img.first), stack_reduce(&[p, letters(&x)].concat()));
        assert_eq!(letters(&img.second), q);
    }
}

#[test]
fn exact_coefficients_stay_exact() {
    let third = Q::new(BigInt::from(1), BigInt::from(3));
    let g = ReducedWord::generator(Rank::Finite(4), 3).unwrap();
    let mut a = freebialg::AlgebraElement::<Q>::zero(Rank::Finite(4));
    for _ in 0..3 {
        a.add_term(g.clone(), Complex::new(third.clone(), Q::zero())).unwrap();
    }
    let x = DirectSumElement::from_component(a).unwrap();
    let d = delta_phi(&x);
    assert!(d.terms().iter().all(|(_, c)| c.is_one()));
}
