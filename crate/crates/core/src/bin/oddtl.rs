use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use oddtl::brauer::{brauer_count, OddBrauer};
use oddtl::checks::{envelope_all, k0_suite, verify_all, Check, SuiteConfig};
use oddtl::diagram::MatchingDiagram;
use oddtl::expr::{elaborate_brauer, elaborate_stl, parse};
use oddtl::jones_wenzl::JonesWenzl;
use oddtl::osp::decompose_tensor_power;
use oddtl::scalars::{RatFunc, Rational, Specialization};
use oddtl::superlinalg::Parity;
use oddtl::tl::{enumerate_basis, CoeffJson, MorphismJson, Stl, TermJson};

#[derive(Parser)]
#[command(name = "oddtl", version, about = "Odd Temperley-Lieb and odd Brauer supercategories")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Category::Stl, global = true)]
    category: Category,
    /// ε = +1 with even generators instead of the odd theory
    #[arg(long, global = true)]
    classical: bool,
    /// `symbolic`, or a rational value such as `2` or `-3/2` (eval and jw only)
    #[arg(long, default_value = "symbolic", global = true, allow_hyphen_values = true)]
    q: String,
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    #[arg(long, default_value_t = 0x5eed, global = true)]
    seed: u64,
    /// bound for the Jones-Wenzl suites (verify, envelope-check) and k0 ranges
    #[arg(long, global = true)]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normalize a diagram expression, e.g. "cap * cup"
    Eval { expr: String },
    /// Print the Jones-Wenzl projector f_n
    Jw { n: usize },
    /// Dimension of Hom(m, n)
    Dims { m: usize, n: usize },
    /// Decompose V^n into irreducibles
    Decompose { n: usize },
    /// Grothendieck ring checks
    K0,
    /// Run every property suite
    Verify,
    /// Interchange, ξ and round-trip checks in the Π-envelope
    EnvelopeCheck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Category {
    Stl,
    Brauer,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("{}", json!({ "error": msg.lines().next().unwrap_or("usage error").trim_start_matches("error: ") }));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(Failure(msg)) => {
            eprintln!("{}", json!({ "error": msg }));
            ExitCode::FAILURE
        }
    }
}

fn stl(cli: &Cli) -> Stl {
    if cli.classical {
        Stl::classical()
    } else {
        Stl::odd()
    }
}

fn specialization(cli: &Cli) -> Result<Option<Specialization>, Failure> {
    if cli.q == "symbolic" {
        return Ok(None);
    }
    let q: Rational = cli.q.parse().map_err(|_| Failure(format!("--q: expected `symbolic` or a rational, got `{}`", cli.q)))?;
    Ok(Some(Specialization::new(q)?))
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.cmd {
        Cmd::Eval { expr } => {
            let e = parse(expr)?;
            let (source, target, parity, terms) = match cli.category {
                Category::Stl => {
                    let jw = JonesWenzl::new(stl(cli));
                    let f = elaborate_stl(&e, &jw)?;
                    (f.source(), f.target(), f.parity(), collect(f.terms()))
                }
                Category::Brauer => {
                    let f = elaborate_brauer(&e, &OddBrauer::new())?;
                    (f.source(), f.target(), f.parity(), collect(f.terms()))
                }
            };
            emit_morphism(cli, source, target, parity, terms)?;
            Ok(true)
        }
        Cmd::Jw { n } => {
            if cli.category == Category::Brauer {
                return Err(Failure("Jones-Wenzl projectors live in the Temperley-Lieb category".into()));
            }
            let jw = JonesWenzl::new(stl(cli));
            let f = jw.jw(*n)?;
            emit_morphism(cli, f.source(), f.target(), f.parity(), collect(f.terms()))?;
            Ok(true)
        }
        Cmd::Dims { m, n } => {
            let d = match cli.category {
                Category::Stl => enumerate_basis(*m, *n).len() as u128,
                Category::Brauer => brauer_count(*m, *n),
            };
            match cli.output {
                Output::Text => println!("{d}"),
                Output::Json => println!("{}", json!({ "m": m, "n": n, "dimension": d.to_string() })),
            }
            Ok(true)
        }
        Cmd::Decompose { n } => {
            let d = decompose_tensor_power(*n)?;
            match cli.output {
                Output::Text => {
                    let parts: Vec<String> = d
                        .summands
                        .iter()
                        .map(|s| {
                            let mult = if s.mult == 1 { String::new() } else { format!("{}·", s.mult) };
                            let pi = if s.pi == 1 { "Π" } else { "" };
                            format!("{mult}{pi}V({})", s.k)
                        })
                        .collect();
                    println!("{}", parts.join(" ⊕ "));
                }
                Output::Json => println!("{}", serde_json::to_string(&d)?),
            }
            Ok(true)
        }
        Cmd::K0 => {
            let n = cli.max_n.unwrap_or(8);
            report(cli, vec![k0_suite(n as i64, 20.max(2 * n), n, n + 2)])
        }
        Cmd::Verify => report(cli, verify_all(&stl(cli), config(cli))),
        Cmd::EnvelopeCheck => report(cli, envelope_all(&stl(cli), config(cli))),
    }
}

fn config(cli: &Cli) -> SuiteConfig {
    let mut cfg = SuiteConfig { seed: cli.seed, ..SuiteConfig::default() };
    if let Some(n) = cli.max_n {
        cfg.max_n = n;
    }
    cfg
}

fn collect<'a>(terms: impl Iterator<Item = (&'a MatchingDiagram, &'a RatFunc)>) -> Vec<(MatchingDiagram, RatFunc)> {
    terms.map(|(d, c)| (d.clone(), c.clone())).collect()
}

fn emit_morphism(
    cli: &Cli,
    source: usize,
    target: usize,
    parity: Parity,
    terms: Vec<(MatchingDiagram, RatFunc)>,
) -> Result<(), Failure> {
    let at = specialization(cli)?;
    // (diagram, numerator, denominator) as printed
    let mut rows = Vec::with_capacity(terms.len());
    for (d, c) in terms {
        match &at {
            None => rows.push((d, c.num().to_string(), c.den().to_string(), c.to_string())),
            Some(s) => {
                let v = s.apply(&c)?;
                if v != Rational::from_integer(0.into()) {
                    rows.push((d, v.to_string(), "1".into(), v.to_string()));
                }
            }
        }
    }
    match cli.output {
        Output::Text => {
            if rows.is_empty() {
                println!("0");
            } else {
                let parts: Vec<String> = rows.iter().map(|(d, _, _, c)| format!("({c}) · {d}")).collect();
                println!("{}", parts.join(" + "));
            }
        }
        Output::Json => {
            let j = MorphismJson {
                source,
                target,
                parity: parity.bit(),
                terms: rows
                    .into_iter()
                    .map(|(d, num, den, _)| TermJson {
                        pairs: d.pairs().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
                        coeff: CoeffJson { num, den },
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string(&j)?);
        }
    }
    Ok(())
}

fn report(cli: &Cli, checks: Vec<Check>) -> Result<bool, Failure> {
    let ok = checks.iter().all(|c| c.passed);
    match cli.output {
        Output::Text => {
            for c in &checks {
                let verdict = if c.passed { "PASS" } else { "FAIL" };
                println!("{verdict} {:<32} {:>8} ms  {}", c.name, c.millis, c.detail);
            }
        }
        Output::Json => {
            // timings vary between runs; keep stdout byte-stable
            let rows: Vec<_> =
                checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect();
            println!("{}", json!({ "passed": ok, "checks": rows }));
        }
    }
    if !ok {
        let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        eprintln!("{}", json!({ "error": "checks failed", "failed": failed }));
    }
    Ok(ok)
}
