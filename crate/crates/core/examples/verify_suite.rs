//! The seeded randomized verification suite, as run by `ccalc verify`.
//!
//! Run with `cargo run --release --example verify_suite -- [cases] [seed]`.

use ccalc::verify::{run_all, total_cases, SuiteRings};

fn main() {
    let mut args = std::env::args().skip(1);
    let cases = args.next().and_then(|a| a.parse().ok()).unwrap_or(50);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let verdicts = run_all(&SuiteRings::with_extra(None), cases, seed);
    for v in &verdicts {
        println!("{}", v.line());
    }
    println!("{} cases in total", total_cases(&verdicts));
    if verdicts.iter().any(|v| !v.passed) {
        std::process::exit(1);
    }
}
