//! The algebra of cohomological rank functions: exact evaluators with
//! metadata, plus combinators for twisting, rescaling, isogeny pullback,
//! Fourier-Mukai transform, ideal-sheaf duality, and the
//! evaluation-complex change of variable.
//!
//! A [`RankFunction`] is a black-box exact map `Q -> Q>=0`, not a
//! symbolic object. Every combinator closes over its inputs and
//! evaluates with rational arithmetic only. Domain checks are strict
//! errors: the formulas have genuine sign and window restrictions and
//! silent extension would mask bugs.

use std::sync::Arc;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{format_rat, rat_pow, Rat};
use crate::polarization::{FractionalPolarization, PolarizationType};
use crate::semihom::SemihomClass;

/// Which variety a function lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Primal,
    Dual,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Primal => Side::Dual,
            Side::Dual => Side::Primal,
        }
    }
}

/// A rational interval, possibly a half-line, with open or closed ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    lo: Option<(Rat, bool)>, // (bound, open)
    hi: Option<(Rat, bool)>,
}

impl Domain {
    pub fn all() -> Self {
        Domain { lo: None, hi: None }
    }

    /// Open half-line `x > bound`.
    pub fn greater_than(bound: Rat) -> Self {
        Domain {
            lo: Some((bound, true)),
            hi: None,
        }
    }

    /// Open half-line `x < bound`.
    pub fn less_than(bound: Rat) -> Self {
        Domain {
            lo: None,
            hi: Some((bound, true)),
        }
    }

    /// Open interval `(lo, hi)`.
    pub fn open(lo: Rat, hi: Rat) -> Self {
        Domain {
            lo: Some((lo, true)),
            hi: Some((hi, true)),
        }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        if let Some((lo, open)) = &self.lo {
            if x < lo || (*open && x == lo) {
                return false;
            }
        }
        if let Some((hi, open)) = &self.hi {
            if x > hi || (*open && x == hi) {
                return false;
            }
        }
        true
    }

    /// Domain of `x -> f(x + shift)` given the domain of `f`.
    pub fn shifted(&self, shift: &Rat) -> Domain {
        let map = |b: &Option<(Rat, bool)>| b.as_ref().map(|(v, o)| (v - shift, *o));
        Domain {
            lo: map(&self.lo),
            hi: map(&self.hi),
        }
    }

    /// Domain of `x -> f(factor * x)` given the domain of `f`, `factor > 0`.
    pub fn scaled_down(&self, factor: &Rat) -> Domain {
        let map = |b: &Option<(Rat, bool)>| b.as_ref().map(|(v, o)| (v / factor, *o));
        Domain {
            lo: map(&self.lo),
            hi: map(&self.hi),
        }
    }
}

type Eval = Arc<dyn Fn(&Rat) -> Result<Rat> + Send + Sync>;

/// An exact cohomological rank function `h^i` with its metadata.
#[derive(Clone)]
pub struct RankFunction {
    eval: Eval,
    degree: u32,
    side: Side,
    pol: FractionalPolarization,
    domain: Domain,
}

impl RankFunction {
    pub fn from_fn<F>(
        degree: u32,
        side: Side,
        pol: FractionalPolarization,
        domain: Domain,
        eval: F,
    ) -> Self
    where
        F: Fn(&Rat) -> Result<Rat> + Send + Sync + 'static,
    {
        RankFunction {
            eval: Arc::new(eval),
            degree,
            side,
            pol,
            domain,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn pol(&self) -> &FractionalPolarization {
        &self.pol
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// Evaluates at a rational point. Outside the domain this is an
    /// error, not zero, and a negative value from the underlying
    /// evaluator is an internal error.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        if !self.domain.contains(x) {
            return Err(Error::Domain(format!(
                "{} is outside the function domain",
                format_rat(x)
            )));
        }
        let v = (self.eval)(x)?;
        if v.is_negative() {
            return Err(Error::Internal(format!(
                "rank function returned a negative value {} at {}",
                format_rat(&v),
                format_rat(x)
            )));
        }
        Ok(v)
    }
}

impl std::fmt::Debug for RankFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RankFunction")
            .field("degree", &self.degree)
            .field("side", &self.side)
            .field("pol", &self.pol)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// The family `{h^i}_{i=0..g}` of the structure sheaf:
/// `h^0 = chi * lambda^g` on `lambda > 0`, `h^g = chi * (-lambda)^g` on
/// `lambda < 0`, everything else identically zero.
pub fn model_structure_sheaf(t: &PolarizationType, side: Side) -> Vec<RankFunction> {
    let g = t.g();
    let chi = Rat::from_integer(t.chi());
    let pol = FractionalPolarization::integral(t.clone());
    let mut family = Vec::with_capacity(g as usize + 1);
    for i in 0..=g {
        let chi = chi.clone();
        let eval: Eval = if i == 0 {
            Arc::new(move |x: &Rat| {
                if x.is_positive() {
                    Ok(&chi * rat_pow(x, g))
                } else {
                    Ok(Rat::zero())
                }
            })
        } else if i == g {
            Arc::new(move |x: &Rat| {
                if x.is_negative() {
                    Ok(&chi * rat_pow(&-x, g))
                } else {
                    Ok(Rat::zero())
                }
            })
        } else {
            Arc::new(|_: &Rat| Ok(Rat::zero()))
        };
        family.push(RankFunction {
            eval,
            degree: i,
            side,
            pol: pol.clone(),
            domain: Domain::all(),
        });
    }
    family
}

/// Tensoring by a semihomogeneous class:
/// `g(t) = rank(C) * f(slope(C)/scale + t)`.
pub fn tensor_semihom(f: &RankFunction, class: &SemihomClass) -> Result<RankFunction> {
    if class.base() != f.pol().base() {
        return Err(Error::Invalid(format!(
            "base polarization mismatch: function on {}, class on {}",
            f.pol().base(),
            class.base()
        )));
    }
    let shift = class.slope() / f.pol().scale();
    let rank = Rat::from_integer(class.rank().clone());
    let inner = f.clone();
    let domain = f.domain().shifted(&shift);
    Ok(RankFunction {
        eval: Arc::new(move |t: &Rat| Ok(&rank * inner.eval(&(&shift + t))?)),
        degree: f.degree,
        side: f.side,
        pol: f.pol.clone(),
        domain,
    })
}

/// Formal polarization rescaling: `g(lambda) = f(nu * lambda)`.
pub fn scale_polarization(f: &RankFunction, nu: &Rat) -> Result<RankFunction> {
    if !nu.is_positive() {
        return Err(Error::Invalid("scale factor must be positive".into()));
    }
    let nu = nu.clone();
    let inner = f.clone();
    let domain = f.domain().scaled_down(&nu);
    let pol = f.pol().rescale(&nu)?;
    Ok(RankFunction {
        eval: Arc::new(move |x: &Rat| inner.eval(&(&nu * x))),
        degree: f.degree,
        side: f.side,
        pol,
        domain,
    })
}

/// Multiplicativity with respect to isogenies: `g = degree * f`.
pub fn isogeny_pullback(f: &RankFunction, degree: &BigInt) -> Result<RankFunction> {
    if !degree.is_positive() {
        return Err(Error::Invalid("isogeny degree must be positive".into()));
    }
    let factor = Rat::from_integer(degree.clone());
    let inner = f.clone();
    Ok(RankFunction {
        eval: Arc::new(move |x: &Rat| Ok(&factor * inner.eval(x)?)),
        degree: f.degree,
        side: f.side,
        pol: f.pol.clone(),
        domain: f.domain.clone(),
    })
}

/// Branch of the Fourier-Mukai function transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FmBranch {
    /// `h(lambda) = chi(l) (-lambda)^g fhat(-1/(d1 dg lambda))` on `lambda < 0`;
    /// consumes `h^i` of the transform and keeps degree i.
    Neg,
    /// `h(lambda) = chi(l) lambda^g fhat(1/(d1 dg lambda))` on `lambda > 0`;
    /// consumes `h^{g-i}` of the dual transform, so degree i maps to g - i.
    Pos,
}

/// Transports a rank function from the dual side back to the primal side.
pub fn fm_transform(
    fhat: &RankFunction,
    t: &PolarizationType,
    branch: FmBranch,
) -> Result<RankFunction> {
    if fhat.side() != Side::Dual {
        return Err(Error::Invalid(
            "Fourier-Mukai transform consumes a dual-side function".into(),
        ));
    }
    if fhat.pol().base() != &t.dual() {
        return Err(Error::Invalid(format!(
            "dual-side function lives on {}, expected the dual of {}",
            fhat.pol().base(),
            t
        )));
    }
    let g = t.g();
    let chi = Rat::from_integer(t.chi());
    let d1dg = Rat::from_integer(t.d1dg());
    let degree = match branch {
        FmBranch::Neg => fhat.degree(),
        FmBranch::Pos => g.checked_sub(fhat.degree()).ok_or_else(|| {
            Error::Invalid(format!("degree {} exceeds g = {}", fhat.degree(), g))
        })?,
    };
    let inner = fhat.clone();
    let pol = FractionalPolarization::integral(t.clone());
    let eval: Eval = match branch {
        FmBranch::Neg => Arc::new(move |x: &Rat| {
            if x.is_zero() {
                return Err(Error::Domain("Fourier-Mukai transform undefined at 0".into()));
            }
            let arg = -(Rat::one() / (&d1dg * x));
            Ok(&chi * rat_pow(&-x, g) * inner.eval(&arg)?)
        }),
        FmBranch::Pos => Arc::new(move |x: &Rat| {
            if x.is_zero() {
                return Err(Error::Domain("Fourier-Mukai transform undefined at 0".into()));
            }
            let arg = Rat::one() / (&d1dg * x);
            Ok(&chi * rat_pow(x, g) * inner.eval(&arg)?)
        }),
    };
    Ok(RankFunction {
        eval,
        degree,
        side: Side::Primal,
        pol,
        domain: match branch {
            FmBranch::Neg => Domain::less_than(Rat::zero()),
            FmBranch::Pos => Domain::greater_than(Rat::zero()),
        },
    })
}

/// Duality of the ideal sheaf of a point:
/// `h^i(lambda) = fhat(1/(d1 dg lambda))` on `lambda > 0`, where `fhat`
/// is `h^{1-i}` of the dual-side ideal sheaf.
pub fn ideal_duality(fhat: &RankFunction, t: &PolarizationType, i: u32) -> Result<RankFunction> {
    if i > 1 {
        return Err(Error::Invalid("ideal-sheaf duality takes i in {0, 1}".into()));
    }
    if fhat.degree() != 1 - i {
        return Err(Error::Invalid(format!(
            "expected a function of degree {}, got degree {}",
            1 - i,
            fhat.degree()
        )));
    }
    let d1dg = Rat::from_integer(t.d1dg());
    let inner = fhat.clone();
    Ok(RankFunction {
        eval: Arc::new(move |x: &Rat| {
            if !x.is_positive() {
                return Err(Error::Domain(
                    "ideal-sheaf duality is defined for positive arguments only".into(),
                ));
            }
            inner.eval(&(Rat::one() / (&d1dg * x)))
        }),
        degree: i,
        side: fhat.side().flipped(),
        pol: FractionalPolarization::integral(t.clone()),
        domain: Domain::greater_than(Rat::zero()),
    })
}

/// Direction of the evaluation-complex change of variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvDirection {
    /// Consumes `G = h^i` of the evaluation complex on `(0, inf)` and
    /// produces `h^i` of the ideal sheaf on `(0, 1)`:
    /// `h(lambda) = (1-lambda)^g / (chi(nu l) r(nu)) * G(lambda/(1-lambda))`.
    Forward,
    /// Exact inverse: consumes `f` on `(0, 1)` and produces
    /// `G(y) = chi(nu l) r(nu) (1+y)^g f(y/(1+y))` on `(0, inf)`.
    Inverse,
}

/// The change of variable relating the ideal sheaf of a point to the
/// evaluation complex of the semihomogeneous bundle of slope `nu * l`.
pub fn ev_complex_relation(
    f: &RankFunction,
    nu: &Rat,
    t: &PolarizationType,
    direction: EvDirection,
) -> Result<RankFunction> {
    if !nu.is_positive() {
        return Err(Error::Invalid("nu must be positive".into()));
    }
    let g = t.g();
    let class = SemihomClass::new(t, nu)?;
    // chi(nu l) * r(nu)
    let factor = rat_pow(nu, g) * Rat::from_integer(t.chi() * class.rank());
    let inner = f.clone();
    let pol = FractionalPolarization::new(t.clone(), nu.clone())?;
    let one = Rat::one();
    let (eval, domain): (Eval, Domain) = match direction {
        EvDirection::Forward => (
            Arc::new(move |x: &Rat| {
                if !x.is_positive() || x >= &one {
                    return Err(Error::Domain(
                        "forward evaluation-complex relation is defined on (0, 1)".into(),
                    ));
                }
                let rest = &one - x;
                Ok(rat_pow(&rest, g) / &factor * inner.eval(&(x / rest))?)
            }),
            Domain::open(Rat::zero(), Rat::one()),
        ),
        EvDirection::Inverse => (
            Arc::new(move |y: &Rat| {
                if !y.is_positive() {
                    return Err(Error::Domain(
                        "inverse evaluation-complex relation is defined on (0, inf)".into(),
                    ));
                }
                let grown = &one + y;
                Ok(&factor * rat_pow(&grown, g) * inner.eval(&(y / grown))?)
            }),
            Domain::greater_than(Rat::zero()),
        ),
    };
    Ok(RankFunction {
        eval,
        degree: f.degree(),
        side: f.side(),
        pol,
        domain,
    })
}
