//! Exact integers and reduced rationals.
//!
//! [`Rational`] is the scalar behind every closed-form coefficient in the
//! crate. It is always stored reduced with a positive denominator, so two
//! equal values are structurally equal and serialize to the same string.
//!
//! [`binom_ext`] and [`factorial`] follow the extended conventions used by the
//! heat-invariant formulas: `0! = 1`, `C(u, 0) = 1` and `C(u, v) = 0` for
//! `v < 0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Extended binomial coefficient, total on all integer pairs.
///
/// * `v < 0` gives 0 and `v == 0` gives 1 (for every `u`, negative included).
/// * `v > 0` and `u >= v` gives the ordinary `u! / (v! (u - v)!)`.
/// * `v > 0` and `u < v` gives 0. This covers `u < 0`, a region the heat
///   invariants only reach at `n = 1` before duality canonicalization.
pub fn binom_ext(u: i64, v: i64) -> BigInt {
    if v < 0 {
        return BigInt::zero();
    }
    if v == 0 {
        return BigInt::one();
    }
    if u < v {
        return BigInt::zero();
    }
    let v = v.min(u - v) as u64;
    let u = u as u64;
    let mut acc = BigInt::one();
    // acc = C(u - v + i, i) after step i; every intermediate is an integer.
    for i in 1..=v {
        acc *= u - v + i;
        acc /= i;
    }
    acc
}

/// `t!` with `0! = 1`.
pub fn factorial(t: u64) -> BigInt {
    (1..=t).fold(BigInt::one(), |acc, i| acc * i)
}

/// `gcd(a, b)` for `b > 0`, starting with a Euclidean step. The binary gcd in
/// `num-integer` walks the larger operand bit by bit, which dominates when a
/// huge numerator meets a small denominator; `a mod b` shrinks it at once.
fn gcd_small_first(a: &BigInt, b: &BigInt) -> BigInt {
    let (big, small) = if a.magnitude() >= b.magnitude() { (a, b) } else { (b, a) };
    if small.is_zero() {
        return big.abs();
    }
    let r = big.mod_floor(small);
    if r.is_zero() {
        return small.abs();
    }
    small.gcd(&r)
}

/// Builds the reduced fraction `num / den` for `den != 0`.
fn reduced(num: BigInt, den: BigInt) -> Rational {
    debug_assert!(!den.is_zero());
    let g = gcd_small_first(&num, &den);
    let (mut num, mut den) = if g.is_one() { (num, den) } else { (num / &g, den / &g) };
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    Rational(BigRational::new_raw(num, den))
}

/// Arbitrary-precision rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `numerator / denominator`, reduced. A zero denominator is an error.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduced(numerator.into(), den))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(numerator: i64, denominator: i64) -> Self {
        Self::new(numerator, denominator).expect("zero denominator in Rational::frac")
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always strictly positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact quotient; dividing by zero is reported, never a panic.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduced(
            self.numer() * rhs.denom(),
            self.denom() * rhs.numer(),
        ))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Comparison against zero, as an [`Ordering`].
    pub fn sign(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"a"` or `"a/b"` with optional sign on `a`. Non-reduced input
    /// is reduced; `b = 0` is an error.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        if num.is_empty() || den.is_empty() || den.starts_with(['+', '-']) {
            return Err(bad());
        }
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        Rational::new(num, den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(v: $t) -> Self {
                Rational::from_integer(BigInt::from(v))
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, usize);

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_integer(v)
    }
}

fn add_kernel(a: &Rational, b: &Rational) -> Rational {
    if a.denom() == b.denom() {
        return reduced(a.numer() + b.numer(), a.denom().clone());
    }
    reduced(
        a.numer() * b.denom() + b.numer() * a.denom(),
        a.denom() * b.denom(),
    )
}

fn sub_kernel(a: &Rational, b: &Rational) -> Rational {
    if a.denom() == b.denom() {
        return reduced(a.numer() - b.numer(), a.denom().clone());
    }
    reduced(
        a.numer() * b.denom() - b.numer() * a.denom(),
        a.denom() * b.denom(),
    )
}

fn mul_kernel(a: &Rational, b: &Rational) -> Rational {
    reduced(a.numer() * b.numer(), a.denom() * b.denom())
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $kernel:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                $kernel(self, rhs)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                $kernel(&self, &rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                $kernel(&self, rhs)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                $kernel(self, &rhs)
            }
        }
        impl $atr<&Rational> for Rational {
            fn $am(&mut self, rhs: &Rational) {
                *self = $kernel(self, rhs);
            }
        }
        impl $atr<Rational> for Rational {
            fn $am(&mut self, rhs: Rational) {
                *self = $kernel(self, &rhs);
            }
        }
    };
}
binop!(Add, add, AddAssign, add_assign, add_kernel);
binop!(Sub, sub, SubAssign, sub_assign, sub_kernel);
binop!(Mul, mul, MulAssign, mul_assign, mul_kernel);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}
