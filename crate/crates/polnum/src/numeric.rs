//! Exact rational arithmetic, extended values, exact power comparisons,
//! and bounded-denominator rational enumeration.
//!
//! Everything here is exact: no floating point anywhere. g-th roots are
//! never extracted; inequalities against them go through [`compare_power`].

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational. Always stored reduced with a
/// positive denominator.
pub type Rat = num::BigRational;

/// Shorthand for small rationals in tests and examples.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `x^g` computed on numerator and denominator separately.
pub fn rat_pow(x: &Rat, g: u32) -> Rat {
    Rat::new_raw(x.numer().pow(g), x.denom().pow(g))
}

/// Canonical form of `a/b`: positive denominator, gcd 1.
pub fn reduce(a: BigInt, b: BigInt) -> Result<Rat> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rat::new(a, b))
}

/// Parses "p/q" or a bare integer "p".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let a: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("not a rational: {s:?}")))?;
    let b: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("not a rational: {s:?}")))?;
    reduce(a, b)
}

/// Renders a rational as "p/q", or "p" when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact rational extended with +∞. Every finite value compares below
/// `Infinity`; arithmetic with +∞ is only defined where a formula
/// explicitly says so, never here.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtendedRat {
    Finite(Rat),
    Infinity,
}

impl ExtendedRat {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtendedRat::Finite(r) => Some(r),
            ExtendedRat::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRat::Infinity)
    }

    pub fn is_positive(&self) -> bool {
        match self {
            ExtendedRat::Finite(r) => r.is_positive(),
            ExtendedRat::Infinity => true,
        }
    }
}

impl From<Rat> for ExtendedRat {
    fn from(r: Rat) -> Self {
        ExtendedRat::Finite(r)
    }
}

impl fmt::Display for ExtendedRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRat::Finite(r) => write!(f, "{}", format_rat(r)),
            ExtendedRat::Infinity => write!(f, "+inf"),
        }
    }
}

/// Parses "p/q", "p" or "+inf"/"inf".
pub fn parse_extended(s: &str) -> Result<ExtendedRat> {
    match s.trim() {
        "+inf" | "inf" | "+infinity" | "infinity" => Ok(ExtendedRat::Infinity),
        other => Ok(ExtendedRat::Finite(parse_rat(other)?)),
    }
}

/// Exact ordering of `q^g * c` against 1, for `q = a/b > 0`: compares
/// `a^g * c` with `b^g` in integers.
pub fn compare_power(q: &Rat, g: u32, c: &BigInt) -> Ordering {
    let lhs = q.numer().pow(g) * c;
    let rhs = q.denom().pow(g);
    lhs.cmp(&rhs)
}

struct DenStream {
    den: BigInt,
    next_num: BigInt,
    last_num: BigInt,
}

impl DenStream {
    /// Smallest reduced fraction of this stream at or after `next_num`,
    /// consuming it.
    fn pull(&mut self) -> Option<Rat> {
        while self.next_num <= self.last_num {
            let num = self.next_num.clone();
            self.next_num += 1;
            if num.gcd(&self.den).is_one() {
                return Some(Rat::new_raw(num, self.den.clone()));
            }
        }
        None
    }
}

#[derive(PartialEq, Eq)]
struct HeapEntry {
    value: Rat,
    stream: usize,
}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .cmp(&other.value)
            .then_with(|| self.stream.cmp(&other.stream))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ascending stream of every reduced `a/b` with `lo < a/b <= hi` and
/// `b <= max_denominator`, each exactly once.
///
/// One cursor per denominator, merged through a min-heap, so a consumer
/// can stop early without the full set ever being materialized.
pub struct RationalRange {
    streams: Vec<DenStream>,
    heap: BinaryHeap<Reverse<HeapEntry>>,
}

impl RationalRange {
    fn new(lo: &Rat, hi: &Rat, max_denominator: u64) -> Self {
        let mut streams = Vec::new();
        let mut heap = BinaryHeap::new();
        if lo < hi {
            for b in 1..=max_denominator {
                let den = BigInt::from(b);
                // a ranges over (lo*b, hi*b]
                let first = (lo * &den).floor().to_integer() + 1;
                let last = (hi * &den).floor().to_integer();
                let mut stream = DenStream {
                    den,
                    next_num: first,
                    last_num: last,
                };
                if let Some(value) = stream.pull() {
                    let idx = streams.len();
                    streams.push(stream);
                    heap.push(Reverse(HeapEntry { value, stream: idx }));
                }
            }
        }
        RationalRange { streams, heap }
    }
}

impl Iterator for RationalRange {
    type Item = Rat;

    fn next(&mut self) -> Option<Rat> {
        let Reverse(entry) = self.heap.pop()?;
        if let Some(value) = self.streams[entry.stream].pull() {
            self.heap.push(Reverse(HeapEntry {
                value,
                stream: entry.stream,
            }));
        }
        Some(entry.value)
    }
}

/// See [`RationalRange`]. An empty window yields an empty sequence.
pub fn enumerate_rationals(lo: &Rat, hi: &Rat, max_denominator: u64) -> RationalRange {
    RationalRange::new(lo, hi, max_denominator)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_canonical() {
        assert_eq!(reduce(2.into(), 4.into()).unwrap(), rat(1, 2));
        assert_eq!(reduce((-3).into(), (-6).into()).unwrap(), rat(1, 2));
        assert_eq!(reduce(0.into(), 7.into()).unwrap(), rat(0, 1));
        assert!(matches!(
            reduce(1.into(), 0.into()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn compare_power_examples() {
        assert_eq!(compare_power(&rat(1, 2), 3, &8.into()), Ordering::Equal);
        assert_eq!(compare_power(&rat(1, 3), 2, &8.into()), Ordering::Less);
        assert_eq!(compare_power(&rat(1, 2), 2, &8.into()), Ordering::Greater);
    }

    #[test]
    fn farey_windows() {
        let collect = |lo: Rat, hi: Rat, n: u64| -> Vec<Rat> {
            enumerate_rationals(&lo, &hi, n).collect()
        };
        assert_eq!(collect(rat(0, 1), rat(1, 1), 2), vec![rat(1, 2), rat(1, 1)]);
        assert_eq!(
            collect(rat(0, 1), rat(1, 1), 3),
            vec![rat(1, 3), rat(1, 2), rat(2, 3), rat(1, 1)]
        );
        assert_eq!(
            collect(rat(1, 3), rat(1, 2), 5),
            vec![rat(2, 5), rat(1, 2)]
        );
        // empty window
        assert!(collect(rat(1, 2), rat(1, 2), 10).is_empty());
    }

    #[test]
    fn extended_ordering() {
        assert!(ExtendedRat::Finite(rat(1_000_000, 1)) < ExtendedRat::Infinity);
        assert_eq!(parse_extended("+inf").unwrap(), ExtendedRat::Infinity);
        assert_eq!(
            parse_extended("-7/3").unwrap(),
            ExtendedRat::Finite(rat(-7, 3))
        );
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["1/2", "-3/7", "5", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(format_rat(&parse_rat("2/4").unwrap()), "1/2");
    }
}
