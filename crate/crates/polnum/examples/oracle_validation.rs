//! The shipped brute-force oracles, run against the closed forms: the
//! torsion-counting u oracle and the unpruned bound maximizer.
//!
//! Run: `cargo run --example oracle_validation`

use num::bigint::BigInt;

use polnum::bounds::maximize;
use polnum::checks::{run_suite, Suite};
use polnum::numeric::format_rat;
use polnum::oracles::{brute_max, brute_u};
use polnum::semihom::u_invariant;
use polnum::PolarizationType;

fn main() {
    let t = PolarizationType::parse("1,2,4").unwrap();
    for (a, b) in [(1i64, 2i64), (3, 4), (-1, 8), (5, 1)] {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let counted = brute_u(&t, &a, &b).unwrap();
        let formula = u_invariant(&t, &a, &b).unwrap();
        println!("u({a}, {b}) on ({t}): counted {counted}, closed form {formula}");
        assert_eq!(counted, formula);
    }

    let pruned = maximize(&t, 12, None).unwrap().unwrap();
    let unpruned = brute_max(&t, 12, None).unwrap().unwrap();
    println!(
        "\nmaximize on ({t}), den <= 12: {} at {} ({} candidates, pruned at {})",
        format_rat(&pruned.bound),
        format_rat(&pruned.best_nu),
        pruned.candidates_tested,
        pruned
            .pruned_at
            .as_ref()
            .map(format_rat)
            .unwrap_or_else(|| "none".into())
    );
    println!(
        "brute-force scan:             {} at {} ({} candidates)",
        format_rat(&unpruned.bound),
        format_rat(&unpruned.best_nu),
        unpruned.candidates_tested
    );
    assert_eq!((pruned.best_nu, pruned.bound), (unpruned.best_nu, unpruned.bound));

    // the full randomized suites, as run by `polnum check`
    println!();
    for suite in Suite::ALL {
        let report = run_suite(suite, 42, 50);
        println!(
            "suite {}: {} cases, {} checks, {}",
            report.name,
            report.cases,
            report.checks,
            if report.passed() { "pass" } else { "FAIL" }
        );
    }
}
