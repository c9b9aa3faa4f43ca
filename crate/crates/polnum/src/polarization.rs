//! Polarization types `(d_1, ..., d_g)`, their Euler characteristics,
//! dual types, and formal fractional rescaling.
//!
//! A polarization is represented purely by its elementary-divisor
//! sequence; the abelian variety itself is never materialized.

use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed};

use crate::error::{Error, Result};
use crate::numeric::{format_rat, rat_pow, Rat};

/// The type `(d_1, ..., d_g)` of a polarization, with `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolarizationType {
    dims: Vec<u64>,
}

impl PolarizationType {
    /// Validates the divisibility chain. On a violation the error names
    /// the first offending (1-based) index.
    pub fn new(dims: Vec<u64>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Invalid("polarization type must be nonempty".into()));
        }
        if let Some(&d) = dims.iter().find(|&&d| d == 0) {
            let _ = d;
            return Err(Error::Invalid("polarization entries must be positive".into()));
        }
        for i in 1..dims.len() {
            if dims[i] % dims[i - 1] != 0 {
                return Err(Error::ChainViolation {
                    index: i + 1,
                    prev: dims[i - 1],
                    next: dims[i],
                });
            }
        }
        Ok(PolarizationType { dims })
    }

    /// Parses the CLI syntax: comma-separated positive integers, e.g. "1,2,4".
    pub fn parse(s: &str) -> Result<Self> {
        let dims = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Invalid(format!("bad type entry {p:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        PolarizationType::new(dims)
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// Dimension g of the underlying abelian variety.
    pub fn g(&self) -> u32 {
        self.dims.len() as u32
    }

    pub fn d1(&self) -> u64 {
        self.dims[0]
    }

    pub fn dg(&self) -> u64 {
        *self.dims.last().unwrap()
    }

    pub fn d1dg(&self) -> BigInt {
        BigInt::from(self.d1()) * BigInt::from(self.dg())
    }

    /// Euler characteristic `chi = d_1 * ... * d_g`.
    pub fn chi(&self) -> BigInt {
        self.dims
            .iter()
            .fold(BigInt::one(), |acc, &d| acc * BigInt::from(d))
    }

    /// Type of the dual polarization:
    /// `(d_1, d_1 d_g / d_{g-1}, ..., d_1 d_g / d_2, d_g)`.
    ///
    /// For g = 1 the middle is empty and the type is self-dual.
    pub fn dual(&self) -> PolarizationType {
        let g = self.dims.len();
        if g == 1 {
            return self.clone();
        }
        let d1 = self.dims[0] as u128;
        let dg = self.dims[g - 1] as u128;
        let prod = d1 * dg;
        let mut dims = Vec::with_capacity(g);
        dims.push(self.dims[0]);
        for i in (1..g - 1).rev() {
            debug_assert_eq!(prod % self.dims[i] as u128, 0);
            dims.push((prod / self.dims[i] as u128) as u64);
        }
        dims.push(self.dims[g - 1]);
        PolarizationType { dims }
    }
}

impl fmt::Display for PolarizationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A polarization type rescaled by a positive rational: the formal type
/// is `(nu d_1, ..., nu d_g)` and the formal chi is `nu^g * chi(base)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalPolarization {
    base: PolarizationType,
    scale: Rat,
}

impl FractionalPolarization {
    pub fn new(base: PolarizationType, scale: Rat) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::Invalid(format!(
                "polarization scale must be positive, got {}",
                format_rat(&scale)
            )));
        }
        Ok(FractionalPolarization { base, scale })
    }

    pub fn integral(base: PolarizationType) -> Self {
        FractionalPolarization {
            base,
            scale: Rat::one(),
        }
    }

    pub fn base(&self) -> &PolarizationType {
        &self.base
    }

    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    pub fn is_integral_scale(&self) -> bool {
        self.scale.is_one()
    }

    pub fn formal_dims(&self) -> Vec<Rat> {
        self.base
            .dims()
            .iter()
            .map(|&d| &self.scale * Rat::from_integer(BigInt::from(d)))
            .collect()
    }

    pub fn formal_d1(&self) -> Rat {
        &self.scale * Rat::from_integer(BigInt::from(self.base.d1()))
    }

    pub fn formal_dg(&self) -> Rat {
        &self.scale * Rat::from_integer(BigInt::from(self.base.dg()))
    }

    /// `chi(nu l) = nu^g * chi(l)`.
    pub fn chi(&self) -> Rat {
        rat_pow(&self.scale, self.base.g()) * Rat::from_integer(self.base.chi())
    }

    /// Formal dual: same scale over the dual base type.
    pub fn dual(&self) -> FractionalPolarization {
        FractionalPolarization {
            base: self.base.dual(),
            scale: self.scale.clone(),
        }
    }

    pub fn rescale(&self, nu: &Rat) -> Result<FractionalPolarization> {
        FractionalPolarization::new(self.base.clone(), &self.scale * nu)
    }
}

/// Free-function form of [`FractionalPolarization::new`].
pub fn scale(base: &PolarizationType, nu: &Rat) -> Result<FractionalPolarization> {
    FractionalPolarization::new(base.clone(), nu.clone())
}
