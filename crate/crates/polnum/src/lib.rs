//! Exact numerical invariants of polarized abelian varieties.
//!
//! Everything is computed in arbitrary-precision rational arithmetic —
//! there is no floating point in this crate. The main entry points:
//!
//! - [`polarization::PolarizationType`]: types `(d_1, ..., d_g)`, Euler
//!   characteristics, dual types, fractional rescaling.
//! - [`semihom::SemihomClass`]: rank, Euler characteristic, and
//!   Fourier-Mukai image of the simple semihomogeneous bundle of a
//!   given rational slope.
//! - [`crf`]: cohomological rank functions as exact black-box
//!   evaluators, with transform combinators.
//! - [`thresholds`]: the s <-> beta threshold algebra and its dualities.
//! - [`bounds`]: the lower bound on the base-point-freeness threshold
//!   and its exact maximization over bounded-denominator rationals.
//! - [`oracles`]: deliberately naive brute-force reference
//!   implementations used to validate the closed forms.
//! - [`checks`]: seeded randomized property suites over all of the
//!   above.

pub mod bounds;
pub mod checks;
pub mod cli;
pub mod crf;
pub mod error;
pub mod numeric;
pub mod oracles;
pub mod polarization;
pub mod semihom;
pub mod thresholds;

pub use error::{Error, Result};
pub use numeric::{ExtendedRat, Rat};
pub use polarization::{FractionalPolarization, PolarizationType};
pub use semihom::SemihomClass;
