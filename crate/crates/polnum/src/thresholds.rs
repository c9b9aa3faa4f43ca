//! Threshold records and the conversions among them: the s <-> beta
//! formula, the dual exchange, their composition, and the cross-scale
//! identity.
//!
//! Thresholds are exact rationals supplied by the caller (or by the
//! bounds module); the library never claims to compute beta for a
//! specific abelian variety. The `+inf` convention: `s = +inf` carries
//! only the inequality `beta >= nu`, which is why [`beta_from_s`]
//! returns an exactness flag instead of a bare number.

use num::{One, Signed};

use crate::error::{Error, Result};
use crate::numeric::{ExtendedRat, Rat};
use crate::polarization::PolarizationType;

/// Where a threshold value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    UserInput,
    Derived,
    BoundOnly,
}

/// The pair `(beta^0, beta^1)` for a polarization.
#[derive(Clone, Debug)]
pub struct ThresholdPair {
    pub beta0: ExtendedRat,
    pub beta1: ExtendedRat,
    pub pol: PolarizationType,
    pub provenance: Provenance,
}

impl ThresholdPair {
    /// Validates `0 < beta0 <= beta1`, and `beta1 <= 1` for user-supplied
    /// values on an integral polarization.
    pub fn new(
        beta0: ExtendedRat,
        beta1: ExtendedRat,
        pol: PolarizationType,
        provenance: Provenance,
    ) -> Result<Self> {
        if !beta0.is_positive() || !beta1.is_positive() {
            return Err(Error::Invalid("thresholds must be positive".into()));
        }
        if beta0 > beta1 {
            return Err(Error::Invalid("beta0 must not exceed beta1".into()));
        }
        if provenance == Provenance::UserInput {
            if let ExtendedRat::Finite(b1) = &beta1 {
                if b1 > &Rat::one() {
                    return Err(Error::Invalid(
                        "beta1 of an integral polarization is at most 1".into(),
                    ));
                }
            } else {
                return Err(Error::Invalid(
                    "beta1 of an integral polarization is at most 1".into(),
                ));
            }
        }
        Ok(ThresholdPair {
            beta0,
            beta1,
            pol,
            provenance,
        })
    }
}

/// The pair `(s^0, s^1)` at scale `nu`.
#[derive(Clone, Debug)]
pub struct SurjInjThresholds {
    pub s0: ExtendedRat,
    pub s1: ExtendedRat,
    pub nu: Rat,
    pub pol: PolarizationType,
}

impl SurjInjThresholds {
    pub fn new(s0: ExtendedRat, s1: ExtendedRat, nu: Rat, pol: PolarizationType) -> Result<Self> {
        if !s0.is_positive() || !s1.is_positive() {
            return Err(Error::Invalid("s-thresholds must be positive or +inf".into()));
        }
        if !nu.is_positive() {
            return Err(Error::Invalid("nu must be positive".into()));
        }
        Ok(SurjInjThresholds { s0, s1, nu, pol })
    }
}

/// `s = beta / (nu - beta)` when `beta < nu`, and `+inf` when `beta >= nu`.
pub fn s_from_beta(beta: &ExtendedRat, nu: &Rat) -> Result<ExtendedRat> {
    if !nu.is_positive() {
        return Err(Error::Invalid("nu must be positive".into()));
    }
    if !beta.is_positive() {
        return Err(Error::Invalid("beta must be positive".into()));
    }
    match beta {
        ExtendedRat::Finite(b) if b < nu => Ok(ExtendedRat::Finite(b / (nu - b))),
        _ => Ok(ExtendedRat::Infinity),
    }
}

/// A beta value recovered from an s-threshold. `exact = false` means the
/// value is only the bound `beta >= value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaEstimate {
    pub value: Rat,
    pub exact: bool,
}

/// Inverse of [`s_from_beta`]: finite `s` gives `beta = nu s / (1 + s)`
/// exactly; `s = +inf` gives only `beta >= nu`.
pub fn beta_from_s(s: &ExtendedRat, nu: &Rat) -> Result<BetaEstimate> {
    if !nu.is_positive() {
        return Err(Error::Invalid("nu must be positive".into()));
    }
    if !s.is_positive() {
        return Err(Error::Invalid("s must be positive".into()));
    }
    match s {
        ExtendedRat::Finite(s) => Ok(BetaEstimate {
            value: nu * s / (Rat::one() + s),
            exact: true,
        }),
        ExtendedRat::Infinity => Ok(BetaEstimate {
            value: nu.clone(),
            exact: false,
        }),
    }
}

/// `beta^{1-i}` of the dual polarization from `beta^i`:
/// `1 / (d_1 d_g beta)`. Returns the value and the new index.
pub fn dual_beta(beta: &Rat, index: u8, t: &PolarizationType) -> Result<(Rat, u8)> {
    if index > 1 {
        return Err(Error::Invalid("threshold index must be 0 or 1".into()));
    }
    if !beta.is_positive() {
        return Err(Error::Invalid("beta must be a finite positive rational".into()));
    }
    let value = Rat::one() / (Rat::from_integer(t.d1dg()) * beta);
    Ok((value, 1 - index))
}

/// `beta^1` of the primal side from `s^0` of the dual side at scale `nu`:
/// `(s0 + 1) / (s0 d_1 d_g nu)`. For `s0 = +inf` only the limit
/// `1/(d_1 d_g nu)` survives, as a lower bound.
pub fn beta1_from_dual_s0(s0: &ExtendedRat, nu: &Rat, t: &PolarizationType) -> Result<BetaEstimate> {
    if !nu.is_positive() {
        return Err(Error::Invalid("nu must be positive".into()));
    }
    if !s0.is_positive() {
        return Err(Error::Invalid("s0 must be positive".into()));
    }
    let d1dg_nu = Rat::from_integer(t.d1dg()) * nu;
    match s0 {
        ExtendedRat::Finite(s0) => Ok(BetaEstimate {
            value: (s0 + Rat::one()) / (s0 * d1dg_nu),
            exact: true,
        }),
        ExtendedRat::Infinity => Ok(BetaEstimate {
            value: Rat::one() / d1dg_nu,
            exact: false,
        }),
    }
}

/// Rewrites an s-threshold from scale `nu` to scale `mu` by solving
/// `nu s/(1+s) = mu s'/(1+s')`. Returns `+inf` when the underlying beta
/// is at least `mu`.
pub fn cross_nu(s_nu: &Rat, nu: &Rat, mu: &Rat) -> Result<ExtendedRat> {
    if !s_nu.is_positive() || !nu.is_positive() || !mu.is_positive() {
        return Err(Error::Invalid("cross-scale conversion needs positive inputs".into()));
    }
    let numer = nu * s_nu;
    let denom = mu * (Rat::one() + s_nu) - &numer;
    if denom.is_positive() {
        Ok(ExtendedRat::Finite(numer / denom))
    } else {
        Ok(ExtendedRat::Infinity)
    }
}

/// Section-generation status of the bundle of slope `lambda`, read off
/// from the thresholds by pure comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionStatus {
    /// `lambda > beta^1`
    GloballyGenerated,
    /// `lambda = beta^1`
    GenericallyGloballyGenerated,
    /// `beta^0 < lambda < beta^1`
    Indeterminate,
    /// `lambda = beta^0`
    SectionsVanishSomewhere,
    /// `lambda < beta^0`
    SectionsNowhereVanishing,
}

pub fn section_status(beta0: &Rat, beta1: &Rat, lambda: &Rat) -> Result<SectionStatus> {
    if beta0 > beta1 {
        return Err(Error::Invalid("beta0 must not exceed beta1".into()));
    }
    Ok(if lambda > beta1 {
        SectionStatus::GloballyGenerated
    } else if lambda == beta1 {
        SectionStatus::GenericallyGloballyGenerated
    } else if lambda > beta0 {
        SectionStatus::Indeterminate
    } else if lambda == beta0 {
        SectionStatus::SectionsVanishSomewhere
    } else {
        SectionStatus::SectionsNowhereVanishing
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn pt(dims: &[u64]) -> PolarizationType {
        PolarizationType::new(dims.to_vec()).unwrap()
    }

    fn fin(n: i64, d: i64) -> ExtendedRat {
        ExtendedRat::Finite(rat(n, d))
    }

    #[test]
    fn s_from_beta_examples() {
        assert_eq!(s_from_beta(&fin(1, 1), &rat_int(2)).unwrap(), fin(1, 1));
        assert_eq!(
            s_from_beta(&fin(1, 1), &rat_int(1)).unwrap(),
            ExtendedRat::Infinity
        );
        assert_eq!(s_from_beta(&fin(1, 2), &rat_int(1)).unwrap(), fin(1, 1));
        assert_eq!(
            s_from_beta(&ExtendedRat::Infinity, &rat_int(3)).unwrap(),
            ExtendedRat::Infinity
        );
        assert!(s_from_beta(&fin(1, 2), &rat_int(-1)).is_err());
    }

    #[test]
    fn beta_from_s_examples() {
        assert_eq!(
            beta_from_s(&fin(1, 1), &rat_int(2)).unwrap(),
            BetaEstimate { value: rat_int(1), exact: true }
        );
        assert_eq!(
            beta_from_s(&ExtendedRat::Infinity, &rat_int(1)).unwrap(),
            BetaEstimate { value: rat_int(1), exact: false }
        );
        assert_eq!(
            beta_from_s(&fin(1, 1), &rat_int(1)).unwrap(),
            BetaEstimate { value: rat(1, 2), exact: true }
        );
        assert!(beta_from_s(&fin(-1, 1), &rat_int(1)).is_err());
    }

    #[test]
    fn dual_beta_examples() {
        // principal: fixed point at 1
        assert_eq!(
            dual_beta(&rat_int(1), 0, &pt(&[1, 1])).unwrap(),
            (rat_int(1), 1)
        );
        // (1, k^2) at 1/k is self-consistent
        assert_eq!(
            dual_beta(&rat(1, 2), 0, &pt(&[1, 4])).unwrap(),
            (rat(1, 2), 1)
        );
        assert_eq!(
            dual_beta(&rat(1, 2), 1, &pt(&[1, 4])).unwrap(),
            (rat(1, 2), 0)
        );
    }

    #[test]
    fn dual_s0_composite_examples() {
        let t = pt(&[1, 4]);
        let got = beta1_from_dual_s0(&fin(1, 1), &rat_int(1), &t).unwrap();
        assert_eq!(got, BetaEstimate { value: rat(1, 2), exact: true });

        // composition: dual_beta(beta_from_s(s0, nu), 0, T)
        let inner = beta_from_s(&fin(1, 1), &rat_int(1)).unwrap();
        assert!(inner.exact);
        let (composed, idx) = dual_beta(&inner.value, 0, &t).unwrap();
        assert_eq!((composed, idx), (got.value, 1));

        // principal type: the formula gives 2, above the integral cap;
        // a user-supplied pair at that value is rejected
        let principal = pt(&[1, 1]);
        let b = beta1_from_dual_s0(&fin(1, 1), &rat_int(1), &principal).unwrap();
        assert_eq!(b.value, rat_int(2));
        assert!(ThresholdPair::new(
            ExtendedRat::Finite(b.value.clone()),
            ExtendedRat::Finite(b.value),
            principal,
            Provenance::UserInput,
        )
        .is_err());

        // +inf keeps only the limit, flagged inexact
        let b = beta1_from_dual_s0(&ExtendedRat::Infinity, &rat_int(1), &t).unwrap();
        assert_eq!(b, BetaEstimate { value: rat(1, 4), exact: false });
    }

    #[test]
    fn cross_nu_examples() {
        assert_eq!(cross_nu(&rat_int(1), &rat_int(2), &rat_int(2)).unwrap(), fin(1, 1));
        assert_eq!(cross_nu(&rat_int(1), &rat_int(1), &rat_int(2)).unwrap(), fin(1, 3));
        assert_eq!(
            cross_nu(&rat_int(1), &rat_int(2), &rat_int(1)).unwrap(),
            ExtendedRat::Infinity
        );
    }

    #[test]
    fn section_status_cases() {
        let b0 = rat(1, 3);
        let b1 = rat(1, 2);
        use SectionStatus::*;
        assert_eq!(section_status(&b0, &b1, &rat(2, 3)).unwrap(), GloballyGenerated);
        assert_eq!(
            section_status(&b0, &b1, &rat(1, 2)).unwrap(),
            GenericallyGloballyGenerated
        );
        assert_eq!(section_status(&b0, &b1, &rat(2, 5)).unwrap(), Indeterminate);
        assert_eq!(
            section_status(&b0, &b1, &rat(1, 3)).unwrap(),
            SectionsVanishSomewhere
        );
        assert_eq!(
            section_status(&b0, &b1, &rat(1, 4)).unwrap(),
            SectionsNowhereVanishing
        );
    }
}
