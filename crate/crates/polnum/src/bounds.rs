//! The lower bound on the base-point-freeness threshold: exact
//! evaluation of the bound expression and exact maximization over
//! admissible rationals with bounded denominator.
//!
//! The admissibility domain is `nu^g chi(dual) > 1` (compared exactly in
//! integers, never through a g-th root). When the caller supplies
//! `beta^0` of the dual variety the wider domain `nu > beta^0` is
//! honored instead.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::{Integer, One, Signed};

use crate::error::{Error, Result};
use crate::numeric::{compare_power, format_rat, Rat};
use crate::polarization::PolarizationType;
use crate::semihom::SemihomClass;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Milestones {
    /// bound >= 1/2: some multiplication maps of global sections are not
    /// surjective.
    pub ge_half: bool,
    /// bound >= 1: the polarization has base points.
    pub ge_one: bool,
}

/// Outcome of a bounded-denominator maximization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundResult {
    pub best_nu: Rat,
    pub bound: Rat,
    pub candidates_tested: u64,
    pub pruned_at: Option<Rat>,
    pub milestones: Milestones,
}

fn milestones_for(bound: &Rat) -> Milestones {
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    Milestones {
        ge_half: bound >= &half,
        ge_one: bound >= &Rat::one(),
    }
}

/// Whether `nu` lies in the maximization domain for type `t`.
pub fn is_admissible(t: &PolarizationType, nu: &Rat, beta0_dual: Option<&Rat>) -> bool {
    if !nu.is_positive() {
        return false;
    }
    match beta0_dual {
        Some(b0) => nu > b0,
        None => compare_power(nu, t.g(), &t.dual().chi()) == Ordering::Greater,
    }
}

/// The bound expression `(1/(d_1 d_g nu)) (1 + 1/r)` where `r` is the
/// rank of the semihomogeneous class of slope `nu` on the dual type.
fn bound_expr(t: &PolarizationType, nu: &Rat) -> Result<Rat> {
    let r = SemihomClass::new(&t.dual(), nu)?.rank().clone();
    let one = Rat::one();
    Ok(&one / (Rat::from_integer(t.d1dg()) * nu) * (&one + &one / Rat::from_integer(r)))
}

/// Evaluates the bound at `nu` over the strict admissibility domain.
pub fn bound_at(t: &PolarizationType, nu: &Rat) -> Result<Rat> {
    bound_at_with(t, nu, None)
}

/// Evaluates the bound at `nu`, honoring a caller-supplied dual `beta^0`
/// as the domain edge when present.
pub fn bound_at_with(t: &PolarizationType, nu: &Rat, beta0_dual: Option<&Rat>) -> Result<Rat> {
    if !is_admissible(t, nu, beta0_dual) {
        return Err(Error::Domain(format!(
            "nu = {} is below the admissibility threshold",
            format_rat(nu)
        )));
    }
    bound_expr(t, nu)
}

struct Best {
    nu: Rat,
    bound: Rat,
}

fn better(candidate: &Best, current: &Option<Best>) -> bool {
    match current {
        None => true,
        Some(best) => match candidate.bound.cmp(&best.bound) {
            Ordering::Greater => true,
            Ordering::Less => false,
            // ties go to smaller nu, then smaller denominator
            Ordering::Equal => match candidate.nu.cmp(&best.nu) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => candidate.nu.denom() < best.nu.denom(),
            },
        },
    }
}

/// Exact maximum of the bound over all admissible reduced `nu` with
/// denominator at most `max_denominator`.
///
/// Scans per denominator in ascending `nu`, cutting a denominator off
/// once `2/(d_1 d_g nu)` (the value at rank 1, an upper envelope of the
/// bound) drops strictly below the best value found so far. Returns
/// `None` when no admissible candidate exists within the budget.
pub fn maximize(
    t: &PolarizationType,
    max_denominator: u64,
    beta0_dual: Option<&Rat>,
) -> Result<Option<BoundResult>> {
    if max_denominator == 0 {
        return Err(Error::Invalid("max denominator must be at least 1".into()));
    }
    let d1dg = Rat::from_integer(t.d1dg());
    let two = Rat::from_integer(BigInt::from(2));
    let mut best: Option<Best> = None;
    let mut tested: u64 = 0;
    let mut pruned_at: Option<Rat> = None;

    for b in 1..=max_denominator {
        let den = BigInt::from(b);
        let mut a = BigInt::one();
        loop {
            if !a.gcd(&den).is_one() {
                a += 1;
                continue;
            }
            let nu = Rat::new_raw(a.clone(), den.clone());
            if let Some(bst) = &best {
                let envelope = &two / (&d1dg * &nu);
                if envelope < bst.bound {
                    if pruned_at.is_none() || pruned_at.as_ref().unwrap() > &nu {
                        pruned_at = Some(nu);
                    }
                    break;
                }
            }
            if is_admissible(t, &nu, beta0_dual) {
                tested += 1;
                let bound = bound_expr(t, &nu)?;
                let candidate = Best { nu, bound };
                if better(&candidate, &best) {
                    best = Some(candidate);
                }
            }
            a += 1;
        }
    }

    Ok(best.map(|b| {
        let milestones = milestones_for(&b.bound);
        BoundResult {
            best_nu: b.nu,
            bound: b.bound,
            candidates_tested: tested,
            pruned_at,
            milestones,
        }
    }))
}

/// Smallest admissible integer `nu`, used by the oracle to cap its scan
/// window. Exposed for the oracles module.
pub(crate) fn first_admissible_integer(
    t: &PolarizationType,
    beta0_dual: Option<&Rat>,
) -> BigInt {
    let mut a = BigInt::one();
    loop {
        let nu = Rat::from_integer(a.clone());
        if is_admissible(t, &nu, beta0_dual) {
            return a;
        }
        a += 1;
    }
}

pub(crate) fn scan_best(
    t: &PolarizationType,
    candidates: impl Iterator<Item = Rat>,
    beta0_dual: Option<&Rat>,
) -> Result<(Option<(Rat, Rat)>, u64)> {
    let mut best: Option<Best> = None;
    let mut tested = 0;
    for nu in candidates {
        if !is_admissible(t, &nu, beta0_dual) {
            continue;
        }
        tested += 1;
        let bound = bound_expr(t, &nu)?;
        let candidate = Best { nu, bound };
        if better(&candidate, &best) {
            best = Some(candidate);
        }
    }
    Ok((best.map(|b| (b.nu, b.bound)), tested))
}

pub(crate) fn result_from(nu: Rat, bound: Rat, tested: u64) -> BoundResult {
    let milestones = milestones_for(&bound);
    BoundResult {
        best_nu: nu,
        bound,
        candidates_tested: tested,
        pruned_at: None,
        milestones,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn pt(dims: &[u64]) -> PolarizationType {
        PolarizationType::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn line_bundle_case_gives_two_over_dg() {
        // r = 1 at nu = 1/d1, so the bound is 2/d_g
        for dims in [&[1u64, 4][..], &[2, 6], &[1, 2, 4]] {
            let t = pt(dims);
            let nu = rat(1, t.d1() as i64);
            assert_eq!(bound_at(&t, &nu).unwrap(), rat(2, t.dg() as i64));
        }
    }

    #[test]
    fn special_family_bound() {
        // (1, n, ..., n, nm) with m < n at nu = 1/m gives (1+m)/(mn)
        let t = pt(&[1, 3, 3, 6]);
        assert_eq!(bound_at(&t, &rat(1, 2)).unwrap(), rat(3, 6));
        let t = pt(&[1, 3, 3, 3, 6]);
        assert_eq!(bound_at(&t, &rat(1, 2)).unwrap(), rat(1, 2));
    }

    #[test]
    fn admissibility_is_strict() {
        // principal: nu^g * 1 > 1 fails at nu = 1
        let t = pt(&[1, 1]);
        assert!(bound_at(&t, &rat_int(1)).is_err());
        assert!(bound_at(&t, &rat_int(2)).is_ok());
        // (1,2): chi-hat = 2, (1/2)^2 * 2 = 1/2 <= 1
        let t = pt(&[1, 2]);
        assert!(bound_at(&t, &rat(1, 2)).is_err());
        assert!(bound_at(&t, &rat_int(1)).is_ok());
    }

    #[test]
    fn wider_domain_with_user_beta0() {
        let t = pt(&[1, 2]);
        let b0 = rat(1, 4);
        // inadmissible in the strict domain, admissible past beta0
        assert!(bound_at(&t, &rat(1, 2)).is_err());
        assert!(bound_at_with(&t, &rat(1, 2), Some(&b0)).is_ok());
        assert!(bound_at_with(&t, &rat(1, 4), Some(&b0)).is_err());
    }

    #[test]
    fn maximize_base_point_types() {
        // d_g = 2: bound 1, base points
        let r = maximize(&pt(&[1, 2, 2]), 24, None).unwrap().unwrap();
        assert_eq!(r.bound, rat_int(1));
        assert!(r.milestones.ge_one);
        assert!(r.milestones.ge_half);

        // d_g = 3: bound at least 2/3
        let r = maximize(&pt(&[1, 3, 3]), 24, None).unwrap().unwrap();
        assert!(r.bound >= rat(2, 3));
        assert!(r.milestones.ge_half);

        // (1,3,3,3,6): at least 1/2
        let r = maximize(&pt(&[1, 3, 3, 3, 6]), 24, None).unwrap().unwrap();
        assert!(r.bound >= rat(1, 2));
        assert!(r.milestones.ge_half);
    }

    #[test]
    fn maximize_reports_witness_consistently() {
        let t = pt(&[1, 3, 3, 6]);
        let r = maximize(&t, 24, None).unwrap().unwrap();
        assert_eq!(bound_at(&t, &r.best_nu).unwrap(), r.bound);
        assert!(r.candidates_tested > 0);
    }

    #[test]
    fn monotone_in_budget() {
        let t = pt(&[1, 1]);
        let mut prev = None;
        for n in [1u64, 2, 5, 10, 20] {
            let r = maximize(&t, n, None).unwrap().unwrap();
            if let Some(p) = prev {
                assert!(r.bound >= p);
            }
            prev = Some(r.bound);
        }
    }
}
