//! Lower bounds on the base-point-freeness threshold: exact evaluation
//! at a chosen slope and exact maximization over bounded-denominator
//! slopes, with milestone flags.
//!
//! Run: `cargo run --example bound_search`

use polnum::bounds::{bound_at, maximize};
use polnum::numeric::{format_rat, rat};
use polnum::PolarizationType;

fn main() {
    // the (1, n, ..., n, nm) family: the bound (1+m)/(mn) at nu = 1/m
    for (dims, nu) in [
        ("1,3,3,6", rat(1, 2)),
        ("1,3,3,3,6", rat(1, 2)),
        ("1,4,4,12", rat(1, 3)),
    ] {
        let t = PolarizationType::parse(dims).unwrap();
        let b = bound_at(&t, &nu).unwrap();
        println!("({t}) at nu = {}: bound {}", format_rat(&nu), format_rat(&b));
    }

    println!();
    for dims in ["1,2,2", "1,3,3", "1,3,3,3,6", "1,1"] {
        let t = PolarizationType::parse(dims).unwrap();
        let r = maximize(&t, 24, None).unwrap().unwrap();
        println!(
            "({t}) max over den <= 24: bound {} at nu = {} ({} candidates, ge_half: {}, ge_one: {})",
            format_rat(&r.bound),
            format_rat(&r.best_nu),
            r.candidates_tested,
            r.milestones.ge_half,
            r.milestones.ge_one
        );
    }

    // a known beta^0 of the dual side widens the admissible domain
    let t = PolarizationType::parse("1,2").unwrap();
    let wide = maximize(&t, 24, Some(&rat(1, 4))).unwrap().unwrap();
    let strict = maximize(&t, 24, None).unwrap().unwrap();
    println!(
        "\n({t}) strict domain: {} at {}; with dual beta0 = 1/4: {} at {}",
        format_rat(&strict.bound),
        format_rat(&strict.best_nu),
        format_rat(&wide.bound),
        format_rat(&wide.best_nu)
    );
}
