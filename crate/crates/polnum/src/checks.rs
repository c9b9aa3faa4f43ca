//! Seeded randomized property suites, shared between the `check` CLI
//! verb and the acceptance tests.

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds;
use crate::crf::{
    ev_complex_relation, fm_transform, model_structure_sheaf, tensor_semihom, Domain, EvDirection,
    FmBranch, RankFunction, Side,
};
use crate::error::Result;
use crate::numeric::{enumerate_rationals, rat_pow, ExtendedRat, Rat};
use crate::oracles;
use crate::polarization::{FractionalPolarization, PolarizationType};
use crate::semihom::{u_invariant, SemihomClass};
use crate::thresholds::{beta1_from_dual_s0, beta_from_s, cross_nu, dual_beta, s_from_beta};

/// Outcome of one property suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            cases: 0,
            checks: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Fm,
    UOracle,
    Bounds,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Duality, Suite::Fm, Suite::UOracle, Suite::Bounds];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Fm => "fm",
            Suite::UOracle => "u-oracle",
            Suite::Bounds => "bounds",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "duality" => Some(Suite::Duality),
            "fm" => Some(Suite::Fm),
            "u-oracle" => Some(Suite::UOracle),
            "bounds" => Some(Suite::Bounds),
            _ => None,
        }
    }
}

/// Random valid type with `g <= max_g` and `d_g <= max_dg`.
pub fn random_type(rng: &mut ChaCha8Rng, max_g: u32, max_dg: u64) -> PolarizationType {
    let g = rng.gen_range(1..=max_g);
    let mut dims = Vec::with_capacity(g as usize);
    let mut d: u64 = if rng.gen_bool(0.7) {
        1
    } else {
        rng.gen_range(1..=max_dg.min(4))
    };
    for _ in 0..g {
        let room = max_dg / d;
        let mult = if room <= 1 || rng.gen_bool(0.4) {
            1
        } else {
            rng.gen_range(1..=room.min(6))
        };
        d *= mult;
        dims.push(d);
    }
    PolarizationType::new(dims).expect("chain holds by construction")
}

/// Random nonzero reduced rational with numerator magnitude and
/// denominator within the given caps.
pub fn random_slope(rng: &mut ChaCha8Rng, max_num: i64, max_den: u64, allow_negative: bool) -> Rat {
    let mut a = rng.gen_range(1..=max_num);
    if allow_negative && rng.gen_bool(0.5) {
        a = -a;
    }
    let b = rng.gen_range(1..=max_den) as i64;
    Rat::new(BigInt::from(a), BigInt::from(b))
}

/// Random rational strictly inside `(0, 1)`.
fn random_unit_interval(rng: &mut ChaCha8Rng) -> Rat {
    let b = rng.gen_range(2..=1000i64);
    let a = rng.gen_range(1..b);
    Rat::new(BigInt::from(a), BigInt::from(b))
}

/// Dual-type involution, the chi product identity, and endpoint
/// preservation; plus the threshold conversion algebra.
pub fn suite_duality(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("duality");
    for _ in 0..cases {
        report.cases += 1;
        let t = random_type(&mut rng, 8, 60);
        let d = t.dual();
        report.check(d.dual() == t, || {
            format!("dual of dual of {t} is {}", d.dual())
        });
        report.check(t.chi() * d.chi() == t.d1dg().pow(t.g()), || {
            format!("chi product identity fails for {t}")
        });
        report.check(d.d1() == t.d1() && d.dg() == t.dg(), || {
            format!("dual of {t} does not preserve d1, dg")
        });

        // threshold algebra on random exact inputs
        let beta = random_slope(&mut rng, 40, 40, false);
        let nu = random_slope(&mut rng, 12, 12, false);
        let s = s_from_beta(&ExtendedRat::Finite(beta.clone()), &nu).unwrap();
        let back = beta_from_s(&s, &nu).unwrap();
        if beta < nu {
            report.check(back.exact && back.value == beta, || {
                format!("s/beta round trip fails for beta = {beta}, nu = {nu}")
            });
        } else {
            report.check(!back.exact && back.value == nu, || {
                format!("s = +inf should report only beta >= nu for beta = {beta}, nu = {nu}")
            });
        }

        let (db, di) = dual_beta(&beta, 0, &t).unwrap();
        let (dd, ddi) = dual_beta(&db, di, &d).unwrap();
        report.check(dd == beta && ddi == 0, || {
            format!("double dual of beta = {beta} on {t} gives {dd}")
        });

        // cross-scale consistency where both sides are finite
        let mu = random_slope(&mut rng, 12, 12, false);
        if let Some(s) = s.finite() {
            if let ExtendedRat::Finite(s_mu) = cross_nu(s, &nu, &mu).unwrap() {
                let b1 = beta_from_s(&ExtendedRat::Finite(s.clone()), &nu).unwrap();
                let b2 = beta_from_s(&ExtendedRat::Finite(s_mu), &mu).unwrap();
                report.check(b1.value == b2.value, || {
                    format!("cross-scale conversion moves beta for s = {s}, nu = {nu}, mu = {mu}")
                });
            }
        }

        // composite identity behind the dual s0 formula
        let s0 = random_slope(&mut rng, 30, 30, false);
        let direct = beta1_from_dual_s0(&ExtendedRat::Finite(s0.clone()), &nu, &t).unwrap();
        let inner = beta_from_s(&ExtendedRat::Finite(s0), &nu).unwrap();
        let (composed, _) = dual_beta(&inner.value, 0, &t).unwrap();
        report.check(direct.exact && direct.value == composed, || {
            format!("dual-s0 composite identity fails on {t}")
        });
    }
    report
}

/// The Fourier-Mukai transform identity between the semihomogeneous
/// closed-form models on both sides, and the rank/chi exchange.
pub fn suite_fm(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("fm");
    let points_per_case = 100;
    for _ in 0..cases {
        report.cases += 1;
        let t = random_type(&mut rng, 5, 12);
        let g = t.g();
        let slope = random_slope(&mut rng, 6, 8, false);
        let class = match SemihomClass::new(&t, &slope) {
            Ok(c) => c,
            Err(e) => {
                report.check(false, || format!("class build failed on {t}: {e}"));
                continue;
            }
        };

        // rank/chi exchange and the numeric double-transform involution
        let image = class.fm_image().unwrap();
        report.check(
            image.rank() == class.euler() && &image.euler().abs() == class.rank(),
            || format!("rank/chi exchange fails on {t} at slope {slope}"),
        );
        let back_slope = -(Rat::one() / (Rat::from_integer(image.base().d1dg()) * image.slope()));
        let double = SemihomClass::new(&image.base().dual(), &back_slope).unwrap();
        report.check(
            double.slope() == class.slope() && double.rank() == class.rank(),
            || format!("double transform does not return slope {slope} on {t}"),
        );

        // chi/rank ratio equals slope^g chi
        let ratio = Rat::new(class.euler().clone(), class.rank().clone());
        report.check(
            ratio == rat_pow(&slope, g) * Rat::from_integer(t.chi()),
            || format!("euler/rank ratio fails on {t} at slope {slope}"),
        );

        // closed-form transform identity. lhs(x) = rank * h0(slope + x)
        // is h^0 of the bundle; the POS branch rebuilds it from the
        // dual-side model of the (sign-flipped) image class.
        let fam = model_structure_sheaf(&t, Side::Primal);
        let h0 = &fam[0];
        let lhs = tensor_semihom(h0, &class).unwrap();
        let fam_hat = model_structure_sheaf(&t.dual(), Side::Dual);
        let h0_hat = &fam_hat[0];
        let hat_slope = -image.slope(); // positive
        let hat_class = SemihomClass::new(&t.dual(), &hat_slope).unwrap();
        let fhat = tensor_semihom(h0_hat, &hat_class).unwrap();
        let rhs = fm_transform(&fhat, &t, FmBranch::Pos).unwrap();
        for _ in 0..points_per_case {
            let x = random_slope(&mut rng, 20, 20, false); // positive
            let l = lhs.eval(&x).unwrap();
            let r = rhs.eval(&x).unwrap();
            report.check(l == r, || {
                format!("POS transform identity fails on {t}, slope {slope}, at {x}: {l} vs {r}")
            });
        }

        // NEG branch: same function at negative arguments in
        // (-slope, 0), via the image class itself
        let neg_class = SemihomClass::new(&t.dual(), image.slope()).unwrap();
        let neg_fhat = tensor_semihom(h0_hat, &neg_class).unwrap();
        let neg_rhs = fm_transform(&neg_fhat, &t, FmBranch::Neg).unwrap();
        for _ in 0..10 {
            let x = -(random_unit_interval(&mut rng) * &slope);
            let l = lhs.eval(&x).unwrap();
            let r = neg_rhs.eval(&x).unwrap();
            report.check(l == r, || {
                format!("NEG transform identity fails on {t}, slope {slope}, at {x}: {l} vs {r}")
            });
        }
    }
    report
}

/// Evaluation-complex change of variable: inverse then forward is the
/// identity at random points of `(0, 1)`.
pub fn suite_ev_round_trip(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("ev-round-trip");
    let t = random_type(&mut rng, 5, 12);
    let nu = random_slope(&mut rng, 4, 4, false);
    let f = RankFunction::from_fn(
        1,
        Side::Primal,
        FractionalPolarization::new(t.clone(), nu.clone()).unwrap(),
        Domain::open(Rat::zero(), Rat::one()),
        |x: &Rat| Ok(x * x + x / Rat::from_integer(BigInt::from(3))),
    );
    let g = ev_complex_relation(&f, &nu, &t, EvDirection::Inverse).unwrap();
    let back = ev_complex_relation(&g, &nu, &t, EvDirection::Forward).unwrap();
    for _ in 0..cases {
        report.cases += 1;
        let x = random_unit_interval(&mut rng);
        let orig = f.eval(&x).unwrap();
        let round = back.eval(&x).unwrap();
        report.check(orig == round, || {
            format!("round trip differs at {x}: {orig} vs {round}")
        });
    }
    report
}

/// u-invariant against the group-order oracle, with sign independence
/// and the divisibility facts.
pub fn suite_u_oracle(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("u-oracle");
    let mut accepted = 0;
    while accepted < cases {
        let t = random_type(&mut rng, 5, 12);
        let slope = random_slope(&mut rng, 6, 8, true);
        let a = slope.numer().clone();
        let b = slope.denom().clone();
        let group = match oracles::FiniteGroupSpec::kernel_group(&t, &a) {
            Ok(g) => g,
            Err(_) => continue,
        };
        if group.order() > BigInt::from(oracles::GROUP_GUARD) {
            continue;
        }
        accepted += 1;
        report.cases += 1;
        let brute = oracles::brute_u(&t, &a, &b).unwrap();
        let fast = u_invariant(&t, &a, &b).unwrap();
        report.check(brute == fast, || {
            format!("u mismatch on {t}, a = {a}, b = {b}: oracle {brute}, formula {fast}")
        });
        let neg = u_invariant(&t, &-&a, &b).unwrap();
        report.check(neg == fast, || format!("u depends on the sign of a on {t}"));
        let g = t.g();
        report.check((b.pow(g) % &fast).is_zero(), || {
            format!("u does not divide b^g on {t}, a = {a}, b = {b}")
        });
        report.check(((a.pow(g) * t.chi()) % &fast).is_zero(), || {
            format!("u does not divide a^g chi on {t}, a = {a}, b = {b}")
        });
    }
    report
}

/// Pruned maximizer against the unpruned reference, plus budget
/// monotonicity.
pub fn suite_bounds(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("bounds");
    for _ in 0..cases {
        report.cases += 1;
        let t = random_type(&mut rng, 4, 10);
        let n = rng.gen_range(1..=30u64);
        let pruned = bounds::maximize(&t, n, None).unwrap();
        let brute = oracles::brute_max(&t, n, None).unwrap();
        match (&pruned, &brute) {
            (Some(p), Some(b)) => {
                report.check(p.best_nu == b.best_nu && p.bound == b.bound, || {
                    format!(
                        "maximize/brute disagree on {t}, budget {n}: ({}, {}) vs ({}, {})",
                        p.best_nu, p.bound, b.best_nu, b.bound
                    )
                });
            }
            (None, None) => report.check(true, String::new),
            _ => report.check(false, || {
                format!("maximize/brute disagree on candidate existence for {t}, budget {n}")
            }),
        }
        if n > 1 {
            let smaller = bounds::maximize(&t, n - 1, None).unwrap();
            if let (Some(s), Some(p)) = (smaller, &pruned) {
                report.check(s.bound <= p.bound, || {
                    format!("bound not monotone in budget on {t} at {n}")
                });
            }
        }
    }
    report
}

/// Runs one suite, capping the per-case-expensive ones.
pub fn run_suite(suite: Suite, seed: u64, cases: u64) -> SuiteReport {
    match suite {
        Suite::Duality => suite_duality(seed, cases),
        Suite::Fm => suite_fm(seed, cases.min(100)),
        Suite::UOracle => suite_u_oracle(seed, cases),
        Suite::Bounds => suite_bounds(seed, cases.min(50)),
    }
}

/// Naive quadratic reference for the rational enumeration.
pub fn naive_rationals(lo: &Rat, hi: &Rat, max_den: u64) -> Vec<Rat> {
    let mut out = Vec::new();
    for b in 1..=max_den {
        let den = BigInt::from(b);
        let first: BigInt = (lo * &den).floor().to_integer() + 1;
        let last = (hi * &den).floor().to_integer();
        let mut a = first;
        while a <= last {
            let r = Rat::new(a.clone(), den.clone());
            if r.denom() == &den && &r > lo && &r <= hi {
                out.push(r);
            }
            a += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Checks the merged enumeration stream against [`naive_rationals`].
pub fn check_enumeration(lo: &Rat, hi: &Rat, max_den: u64) -> Result<()> {
    let stream: Vec<Rat> = enumerate_rationals(lo, hi, max_den).collect();
    let naive = naive_rationals(lo, hi, max_den);
    if stream == naive {
        Ok(())
    } else {
        Err(crate::error::Error::Internal(format!(
            "enumeration mismatch in ({lo}, {hi}] with denominators up to {max_den}"
        )))
    }
}
