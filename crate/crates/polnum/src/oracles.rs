//! Deliberately naive brute-force oracles, shipped with the library so
//! the validation of the derived formulas stays reproducible for users,
//! not just in CI.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::bounds::{self, BoundResult};
use crate::error::{Error, Result};
use crate::numeric::{enumerate_rationals, Rat};
use crate::polarization::PolarizationType;

/// Enumeration guard: refuse groups with more elements than this.
pub const GROUP_GUARD: u64 = 10_000_000;

/// A finite abelian group `\oplus_i (Z/n_i)^2`, given by its cyclic
/// orders with each order listed twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupSpec {
    cyclic_orders: Vec<u64>,
}

impl FiniteGroupSpec {
    /// The group `K(a l) = \oplus_i (Z/|a| d_i)^2`.
    pub fn kernel_group(t: &PolarizationType, a: &BigInt) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::Invalid("kernel group needs a nonzero multiplier".into()));
        }
        let a_abs = a.abs();
        let mut cyclic_orders = Vec::with_capacity(2 * t.dims().len());
        for &d in t.dims() {
            let n = &a_abs * BigInt::from(d);
            let n: u64 = n
                .try_into()
                .map_err(|_| Error::Invalid("cyclic order exceeds the enumeration guard".into()))?;
            cyclic_orders.push(n);
            cyclic_orders.push(n);
        }
        Ok(FiniteGroupSpec { cyclic_orders })
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn order(&self) -> BigInt {
        self.cyclic_orders
            .iter()
            .fold(BigInt::one(), |acc, &n| acc * BigInt::from(n))
    }

    /// Number of elements killed by `b`, counted by scanning each cyclic
    /// factor element by element. No gcd shortcut anywhere.
    pub fn count_torsion(&self, b: u64) -> BigInt {
        let mut count = BigInt::one();
        for &n in &self.cyclic_orders {
            let mut killed: u64 = 0;
            for x in 0..n {
                if (b % n) * (x % n) % n == 0 {
                    killed += 1;
                }
            }
            count *= BigInt::from(killed);
        }
        count
    }
}

/// Brute-force u-invariant: counts the b-torsion of `K(a l)` and takes
/// the exact integer square root. A non-perfect-square count falsifies
/// the derived closed form and is reported as an internal error.
pub fn brute_u(t: &PolarizationType, a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if !b.is_positive() {
        return Err(Error::Invalid("u-invariant needs a positive denominator".into()));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::SlopeNotReduced {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let group = FiniteGroupSpec::kernel_group(t, a)?;
    if group.order() > BigInt::from(GROUP_GUARD) {
        return Err(Error::Invalid(format!(
            "group of order {} exceeds the enumeration guard {GROUP_GUARD}",
            group.order()
        )));
    }
    let b_u64: u64 = b
        .try_into()
        .map_err(|_| Error::Invalid("torsion multiplier too large for the oracle".into()))?;
    let count = group.count_torsion(b_u64);
    let root = count.sqrt();
    if &root * &root != count {
        return Err(Error::Internal(format!(
            "torsion count {count} is not a perfect square"
        )));
    }
    Ok(root)
}

/// Unpruned reference maximizer. Enumerates every admissible candidate
/// in `(0, 2 a0]` where `a0` is the smallest admissible integer; beyond
/// that window the bound envelope `2/(d_1 d_g nu)` is already strictly
/// below the value at `a0`, so no candidate out there can win.
pub fn brute_max(
    t: &PolarizationType,
    max_denominator: u64,
    beta0_dual: Option<&Rat>,
) -> Result<Option<BoundResult>> {
    if max_denominator == 0 {
        return Err(Error::Invalid("max denominator must be at least 1".into()));
    }
    let a0 = bounds::first_admissible_integer(t, beta0_dual);
    let cap = Rat::from_integer(a0 * BigInt::from(2));
    let lo = Rat::zero();
    let candidates = enumerate_rationals(&lo, &cap, max_denominator);
    let (best, tested) = bounds::scan_best(t, candidates, beta0_dual)?;
    Ok(best.map(|(nu, bound)| bounds::result_from(nu, bound, tested)))
}
