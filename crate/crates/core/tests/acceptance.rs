//! The ten acceptance criteria, run one after another so the timings are
//! not skewed by parallel test threads. Every comparison is exact; a
//! criterion passes only if all of its identities hold and it finishes
//! inside its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use oddtl::brauer::OddBrauer;
use oddtl::checks::*;
use oddtl::jones_wenzl::JonesWenzl;
use oddtl::tl::Stl;

struct Criterion {
    id: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Vec<Check>,
}

fn dims() -> Vec<Check> {
    vec![hom_dimensions(16)]
}

fn relations() -> Vec<Check> {
    vec![relation_suite(&Stl::odd(), &OddBrauer::new())]
}

fn interchange() -> Vec<Check> {
    let stl = Stl::odd();
    vec![super_interchange_stl(&stl, 500, 0x5eed, 4), super_interchange_envelope(&stl, 500, 0x5eed, 4)]
}

fn jones_wenzl() -> Vec<Check> {
    vec![jones_wenzl_suite(&JonesWenzl::new(Stl::odd()), 8)]
}

fn representation() -> Vec<Check> {
    vec![representation_suite(&Stl::odd(), 4, 10, 6)]
}

fn osp() -> Vec<Check> {
    vec![osp_suite(&Stl::odd(), 6, 5)]
}

fn k0() -> Vec<Check> {
    vec![k0_suite(8, 20, 8, 10)]
}

fn idempotents() -> Vec<Check> {
    vec![idempotent_equivalences(&JonesWenzl::new(Stl::odd()), 2, 6)]
}

fn round_trip() -> Vec<Check> {
    let stl = Stl::odd();
    vec![envelope_round_trip(&stl, 3), envelope_xi(&stl, 3)]
}

fn classical() -> Vec<Check> {
    let delta = Stl::classical().delta().to_string();
    let printed = Check {
        name: "classical loop value".into(),
        passed: delta == "-q - q^-1",
        detail: format!("δ = {delta}"),
        millis: 0,
    };
    vec![classical_differential(5), printed]
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, title: "hom-space dimensions", budget: Duration::from_secs(5), run: dims },
    Criterion { id: 2, title: "relation suite", budget: Duration::from_secs(1), run: relations },
    Criterion { id: 3, title: "super interchange", budget: Duration::from_secs(30), run: interchange },
    Criterion { id: 4, title: "Jones-Wenzl projectors", budget: Duration::from_secs(60), run: jones_wenzl },
    Criterion { id: 5, title: "representation oracle", budget: Duration::from_secs(120), run: representation },
    Criterion { id: 6, title: "quantum group action", budget: Duration::from_secs(30), run: osp },
    Criterion { id: 7, title: "Grothendieck ring", budget: Duration::from_secs(10), run: k0 },
    Criterion { id: 8, title: "idempotent equivalences", budget: Duration::from_secs(30), run: idempotents },
    Criterion { id: 9, title: "envelope round trip", budget: Duration::from_secs(30), run: round_trip },
    Criterion { id: 10, title: "classical differential", budget: Duration::from_secs(30), run: classical },
];

fn main() -> ExitCode {
    // `cargo test -- <filter>` passes arguments through; honour a numeric filter
    let filter: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for c in CRITERIA.iter().filter(|c| filter.is_none_or(|f| f == c.id)) {
        let t = Instant::now();
        let checks = (c.run)();
        let elapsed = t.elapsed();
        let exact = checks.iter().all(|k| k.passed);
        let in_budget = elapsed < c.budget;
        let ok = exact && in_budget;
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {:>2} {:<26} {:>9.3} s (budget {} s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for k in &checks {
            println!("       {} {}: {}", if k.passed { "ok  " } else { "FAIL" }, k.name, k.detail);
        }
        if !in_budget {
            println!("       FAIL over budget");
        }
    }
    println!("{} criteria failed", failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
