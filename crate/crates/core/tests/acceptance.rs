//! Runs the ten acceptance criteria and prints one line per criterion.
//!
//! Criterion 6 is expected to fail: over GF(4) the Okubo algebra with the
//! order-three automorphism admits graded pairs that the stated criterion calls
//! isomorphic, yet an exhaustive search finds no graded isomorphism. Every other
//! criterion must pass.

use compsuper::report::{run_criterion, title};
use compsuper::search::SearchBudget;

const KNOWN_RED: u8 = 6;

fn main() {
    let mut unexpected = Vec::new();
    for n in 1..=10u8 {
        let r = run_criterion(n, SearchBudget::default());
        let status = match (r.pass, n == KNOWN_RED) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("criterion {n} ({}): {status} [{} checks]", title(n), r.checks);
        for f in r.failures.iter().take(5) {
            println!("    {f}");
        }
        if r.failures.len() > 5 {
            println!("    ... {} more", r.failures.len() - 5);
        }
        if n == KNOWN_RED {
            let only_omega = r.failures.iter().all(|f| {
                f.starts_with("okubo-omega over GF(4)")
                    && f.contains("expected isomorphic")
                    && f.ends_with("proven-none")
            });
            if !only_omega || r.failures.is_empty() {
                unexpected.push(format!("criterion {n}: failures changed: {:?}", r.failures));
            }
        } else if !r.pass {
            unexpected.push(format!("criterion {n}: {:?}", r.failures));
        }
    }
    if !unexpected.is_empty() {
        eprintln!("{unexpected:#?}");
        std::process::exit(1);
    }
}
