//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`).

use std::time::{Duration, Instant};

use num::bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polnum::bounds::{bound_at, maximize};
use polnum::checks::{
    random_type, suite_bounds, suite_duality, suite_ev_round_trip, suite_fm, suite_u_oracle,
};
use polnum::numeric::{rat, rat_int};
use polnum::thresholds::dual_beta;
use polnum::{PolarizationType, SemihomClass};

fn pt(dims: &[u64]) -> PolarizationType {
    PolarizationType::new(dims.to_vec()).unwrap()
}

fn gate(n: u32, what: &str, started: Instant, budget: Duration, ok: bool, detail: String) {
    let elapsed = started.elapsed();
    let in_time = elapsed <= budget;
    let verdict = if ok && in_time { "PASS" } else { "FAIL" };
    println!("criterion {n} ({what}): {verdict} [{elapsed:.2?}]");
    assert!(ok, "criterion {n} ({what}) failed: {detail}");
    assert!(
        in_time,
        "criterion {n} ({what}) exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn c1_dual_type_identity() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut detail = String::new();
    let mut ok = true;
    for _ in 0..1000 {
        let t = random_type(&mut rng, 8, 60);
        let d = t.dual();
        if d.dual() != t || t.chi() * d.chi() != t.d1dg().pow(t.g()) {
            ok = false;
            detail = format!("type {t}");
            break;
        }
    }
    gate(1, "dual involution and chi product", started, Duration::from_secs(1), ok, detail);
}

#[test]
fn c2_u_formula_against_oracle() {
    let started = Instant::now();
    let report = suite_u_oracle(102, 500);
    gate(
        2,
        "u-invariant vs torsion-counting oracle",
        started,
        Duration::from_secs(30),
        report.passed() && report.cases >= 500,
        format!("{:?}", report.failures),
    );
}

#[test]
fn c3_family_rank_and_bound() {
    let started = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for (n, m) in [(3u64, 2u64), (4, 3), (5, 2)] {
        for g in [3usize, 4, 5] {
            let mut dims = vec![1];
            dims.extend(std::iter::repeat(n).take(g - 2));
            dims.push(n * m);
            let t = pt(&dims);
            let nu = rat(1, m as i64);
            let r = SemihomClass::new(&t.dual(), &nu).unwrap().rank().clone();
            let bound = bound_at(&t, &nu).unwrap();
            let expect = rat(1 + m as i64, (m * n) as i64);
            if r != BigInt::from(m) || bound != expect {
                ok = false;
                detail = format!("type {t}: rank {r}, bound {bound}");
            }
        }
    }
    gate(3, "dual rank m and bound (1+m)/(mn)", started, Duration::from_secs(1), ok, detail);
}

#[test]
fn c4_two_over_dg_and_milestones() {
    let started = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    for dims in [&[1u64, 4][..], &[1, 2, 6], &[2, 4, 8], &[1, 3, 3, 6]] {
        let t = pt(dims);
        let got = bound_at(&t, &rat(1, t.d1() as i64)).unwrap();
        if got != rat(2, t.dg() as i64) {
            ok = false;
            detail = format!("2/d_g fails on {t}: {got}");
        }
    }

    let cases: [(&[u64], Box<dyn Fn(&polnum::bounds::BoundResult) -> bool>); 4] = [
        (&[1, 2, 2], Box::new(|r| r.bound == rat_int(1) && r.milestones.ge_one)),
        (&[1, 2, 2, 2], Box::new(|r| r.bound == rat_int(1) && r.milestones.ge_one)),
        (&[1, 3, 3], Box::new(|r| r.bound >= rat(2, 3) && r.milestones.ge_half)),
        (&[1, 3, 3, 3, 6], Box::new(|r| r.bound >= rat(1, 2) && r.milestones.ge_half)),
    ];
    for (dims, accept) in &cases {
        let t = pt(dims);
        let r = maximize(&t, 24, None).unwrap().unwrap();
        if !accept(&r) {
            ok = false;
            detail = format!("milestones fail on {t}: bound {}", r.bound);
        }
    }
    gate(4, "2/d_g bound and maximize milestones", started, Duration::from_secs(20), ok, detail);
}

#[test]
fn c5_threshold_algebra() {
    let started = Instant::now();
    let report = suite_duality(105, 1000);
    gate(
        5,
        "threshold conversions and dualities",
        started,
        Duration::from_secs(1),
        report.passed() && report.cases == 1000,
        format!("{:?}", report.failures),
    );
}

#[test]
fn c6_fm_transform_consistency() {
    let started = Instant::now();
    let report = suite_fm(106, 100);
    gate(
        6,
        "Fourier-Mukai model identity",
        started,
        Duration::from_secs(10),
        report.passed() && report.cases == 100 && report.checks >= 10_000,
        format!("{:?}", report.failures),
    );
}

#[test]
fn c7_ev_relation_round_trip() {
    let started = Instant::now();
    let report = suite_ev_round_trip(107, 1000);
    gate(
        7,
        "evaluation-complex inverse/forward round trip",
        started,
        Duration::from_secs(1),
        report.passed() && report.cases == 1000,
        format!("{:?}", report.failures),
    );
}

#[test]
fn c8_maximize_against_oracle() {
    let started = Instant::now();
    let report = suite_bounds(108, 50);
    gate(
        8,
        "pruned maximizer vs unpruned oracle",
        started,
        Duration::from_secs(60),
        report.passed() && report.cases == 50,
        format!("{:?}", report.failures),
    );
}

#[test]
fn c9_square_type_self_consistency() {
    let started = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for k in [1i64, 2, 3] {
        let t = pt(&[1, (k * k) as u64]);
        let (value, index) = dual_beta(&rat(1, k), 0, &t).unwrap();
        if value != rat(1, k) || index != 1 {
            ok = false;
            detail = format!("k = {k}: got {value}");
        }
    }
    gate(9, "(1,k^2) fixed point of the dual exchange", started, Duration::from_secs(1), ok, detail);
}
