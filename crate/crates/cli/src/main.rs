use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use freebialg::json::{direct_sum_to_json, graded_tensor_to_json, pair_to_json, scalar_to_json, word_to_json};
use freebialg::suite::{self, Suite, SuiteConfig};
use freebialg::text::{format_scalar, parse_pair};
use freebialg::{reps, words, ExactDirectSum, PairWord, Rank};

#[derive(Parser, Debug)]
#[command(name = "freebialg", version, about = "Exact computations with the comultiplication Δ_φ on free group algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Tolerance for floating-point checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Include wall-clock timings in reports (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print Δ_φ(x) for a direct-sum element such as "F6: g2".
    Delta { element: String },
    /// Print the counit ε(x).
    Counit { element: String },
    /// Print φ_{n,m}(w) for a word w in F_{nm}.
    Phi { n: u32, m: u32, word: String },
    /// Compare f_i^(n) ⊗_φ f_j^(m) with f_{m(i-1)+j}^(nm) on a ball of F_{nm}.
    TensorPd {
        n: u32,
        m: u32,
        i: u32,
        j: u32,
        #[arg(long, default_value_t = 4)]
        radius: u32,
    },
    /// Enumerate the φ_{n,m}-orbit of (1, 1) in F_n × F_m.
    Orbit {
        n: u32,
        m: u32,
        #[arg(long, default_value_t = 4)]
        radius: u32,
        /// Report whether the pair "w1,w2" is reached.
        #[arg(long)]
        find: Option<String>,
        /// Include every orbit element in the output.
        #[arg(long)]
        list: bool,
    },
    /// Run an invariant suite: words, bialgebra, reps, morphisms or all.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Option<Suite>,
        #[arg(long = "suite", value_parser = parse_suite, conflicts_with = "suite")]
        suite_flag: Option<Suite>,
        /// Random direct-sum elements for the coalgebra laws.
        #[arg(long, default_value_t = 200)]
        elements: usize,
        /// Random word pairs for homomorphism and cancellation checks.
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        /// Random triples for the intertwiner relation.
        #[arg(long, default_value_t = 200)]
        triples: usize,
    },
    /// Run every claim probe and report the findings.
    Probe {
        #[arg(value_enum)]
        target: ProbeTarget,
        #[arg(long, default_value_t = 4)]
        radius: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProbeTarget {
    Claims,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: freebialg::Error| e.to_string())
}

/// Errors from user input exit with 2; failed invariants exit with 1.
enum Failure {
    Usage(String),
    Invariant,
}

impl From<freebialg::Error> for Failure {
    fn from(e: freebialg::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Text => print!("{}", text()),
    }
}

fn config(cli: &Cli) -> SuiteConfig {
    SuiteConfig { seed: cli.seed, tol: cli.tol, timing: cli.timing, ..SuiteConfig::default() }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Delta { element } => {
            let x: ExactDirectSum = freebialg::parse_direct_sum(element)?;
            let d = freebialg::delta_phi(&x);
            let value = json!({ "input": direct_sum_to_json(&x), "delta": graded_tensor_to_json(&d), "text": d.to_string() });
            emit(cli.format, &value, || format!("{d}\n"));
        }
        Command::Counit { element } => {
            let x: ExactDirectSum = freebialg::parse_direct_sum(element)?;
            let c = freebialg::counit(&x);
            let value = json!({ "input": direct_sum_to_json(&x), "counit": scalar_to_json(&c), "text": format_scalar(&c) });
            emit(cli.format, &value, || format!("{}\n", format_scalar(&c)));
        }
        Command::Phi { n, m, word } => {
            let ambient = Rank::product(*n, *m)?;
            let z = freebialg::parse_word(word, ambient)?;
            let p = words::phi(*n, *m, &z)?;
            let value = json!({ "n": n, "m": m, "word": word_to_json(&z), "image": pair_to_json(&p), "text": p.to_string() });
            emit(cli.format, &value, || format!("{p}\n"));
        }
        Command::TensorPd { n, m, i, j, radius } => {
            let cfg = SuiteConfig { radius: *radius, ..config(cli) };
            let report = suite::probe_pd(*n, *m, *i, *j, &cfg)?;
            let summary = freebialg::report::ProbeSummary::new(vec![report.clone()]);
            emit(cli.format, &serde_json::to_value(&report).expect("serializable"), || summary.to_text());
        }
        Command::Orbit { n, m, radius, find, list } => {
            let (rn, rm) = (Rank::finite(*n)?, Rank::finite(*m)?);
            let target = find.as_deref().map(|f| parse_pair(f, rn, rm)).transpose()?;
            let orbit = reps::orbit_bfs(*n, *m, &PairWord::identity(rn, rm), *radius)?;
            let mut value = json!({ "n": n, "m": m, "radius": radius, "size": orbit.len() });
            if let Some(t) = &target {
                value["find"] = pair_to_json(t);
                value["found"] = json!(orbit.contains(t));
            }
            if *list {
                value["pairs"] = Value::Array(orbit.iter().map(pair_to_json).collect());
            }
            emit(cli.format, &value, || {
                let mut out = format!("orbit of (1, 1) under φ_{{{n},{m}}}, radius {radius}: {} pairs\n", orbit.len());
                if let Some(t) = &target {
                    out += &format!("{t}: {}\n", if orbit.contains(t) { "found" } else { "not found" });
                }
                if *list {
                    for p in &orbit {
                        out += &format!("{p}\n");
                    }
                }
                out
            });
        }
        Command::Verify { suite, suite_flag, elements, pairs, triples } => {
            let which = suite.or(*suite_flag).unwrap_or(Suite::All);
            let cfg = SuiteConfig { random_elements: *elements, random_pairs: *pairs, random_triples: *triples, ..config(cli) };
            let report = suite::run_suite(which, &cfg);
            emit(cli.format, &serde_json::to_value(&report).expect("serializable"), || report.to_text());
            if !report.passed {
                return Err(Failure::Invariant);
            }
        }
        Command::Probe { target: ProbeTarget::Claims, radius } => {
            let cfg = SuiteConfig { radius: *radius, ..config(cli) };
            let summary = suite::probe_claims(&cfg)?;
            emit(cli.format, &serde_json::to_value(&summary).expect("serializable"), || summary.to_text());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("FREEBIALG_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invariant) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
