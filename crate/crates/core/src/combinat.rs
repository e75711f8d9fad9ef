//! Exact integer combinatorics: binomials, colex ranking of 3-subsets and
//! the complement density as an exact rational.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::TripleVertex;

/// Largest ground set accepted by the exact-count routines. At this size
/// `n^5 / 8` is about `1.25e14`, well inside `u64`.
pub const MAX_GROUND_SET: usize = 1000;

/// Exact `C(n, k)`, or an overflow error. Returns 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul(u128::from(n - i)).ok_or(Error::Overflow { n, k })? / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow { n, k });
        }
    }
    Ok(acc as u64)
}

#[inline]
pub(crate) fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

#[inline]
pub(crate) fn choose3(n: u64) -> u64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Colexicographic rank of a triple. `{1,2,3}` has rank 0, `{1,2,4}` rank 1.
pub fn rank_triple(t: &TripleVertex, n: usize) -> Result<u64> {
    let [a, b, c] = t.elements();
    if c as usize > n {
        return Err(Error::BadTriple(vec![a.into(), b.into(), c.into()], n));
    }
    Ok(rank_unchecked(a, b, c))
}

#[inline]
pub(crate) fn rank_unchecked(a: u16, b: u16, c: u16) -> u64 {
    let (a, b, c) = (u64::from(a), u64::from(b), u64::from(c));
    (a - 1) + choose2(b - 1) + choose3(c - 1)
}

/// Inverse of [`rank_triple`].
pub fn unrank_triple(index: u64, n: usize) -> Result<TripleVertex> {
    let count = choose3(n as u64);
    if index >= count {
        return Err(Error::IndexOutOfRange { index, count });
    }
    Ok(unrank_unchecked(index))
}

pub(crate) fn unrank_unchecked(index: u64) -> TripleVertex {
    // largest c with C(c-1, 3) <= index
    let mut c = ((6.0 * index as f64).cbrt() as u64).max(3);
    while choose3(c) <= index {
        c += 1;
    }
    while choose3(c - 1) > index {
        c -= 1;
    }
    let rest = index - choose3(c - 1);
    let mut b = ((2.0 * rest as f64).sqrt() as u64).max(2);
    while choose2(b) <= rest {
        b += 1;
    }
    while choose2(b - 1) > rest {
        b -= 1;
    }
    let a = rest - choose2(b - 1) + 1;
    TripleVertex::from_sorted([a as u16, b as u16, c as u16])
}

/// Exact rational number in lowest terms with a positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub fn new(numerator: i128, denominator: i128) -> Self {
        assert!(denominator != 0, "zero denominator");
        Rational(Ratio::new(numerator, denominator))
    }

    pub fn integer(v: i128) -> Self {
        Rational(Ratio::from_integer(v))
    }

    pub fn zero() -> Self {
        Rational(Ratio::zero())
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn numerator(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i128 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_negative(&self) -> bool {
        self.numerator() < 0
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> i128 {
        self.0.ceil().to_integer()
    }

    /// Nearest rational with the given denominator bound, used to lift
    /// sampled decimal densities into exact arithmetic.
    pub fn from_decimal(value: f64, scale: i128) -> Self {
        Rational::new((value * scale as f64).round() as i128, scale)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator() == 1 {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
    };
}
forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);
forward_op!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v.into())
    }
}

impl From<u64> for Rational {
    fn from(v: u64) -> Self {
        Rational::integer(v.into())
    }
}

/// Complement density `1 - l / C(n,3)`.
pub fn c_fraction(n: usize, l: u64) -> Result<Rational> {
    let count = binomial(n as u64, 3)?;
    if l > count {
        return Err(Error::SubsetTooLarge { l, count });
    }
    if count == 0 {
        return Ok(Rational::zero());
    }
    Ok(Rational::one() - Rational::new(l.into(), count.into()))
}
