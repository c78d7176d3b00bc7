//! Exact arbitrary-precision rational arithmetic, factorials, and the
//! half-integer Gamma identities used by the moment-coefficient formulas.
//!
//! All coefficient computations in this crate go through [`ExactRational`];
//! conversion to `f64` happens at the last possible moment, and values whose
//! numerator/denominator span hundreds of digits are handled through
//! [`ExactRational::ln_f64`] rather than naive conversion.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Pi to 50 decimal places, stored as a literal so that conversions do not
/// depend on platform transcendental-function accuracy.
pub const PI_DECIMAL_50: &str = "3.14159265358979323846264338327950288419716939937510";

/// Pi as `f64`, parsed once from [`PI_DECIMAL_50`].
pub fn pi_f64() -> f64 {
    static PI: OnceLock<f64> = OnceLock::new();
    *PI.get_or_init(|| PI_DECIMAL_50.parse().expect("pi literal parses"))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("cannot parse `{0}` as a rational")]
    Parse(String),
}

/// An exact signed rational, always stored in lowest terms with a positive
/// denominator. Zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `num/den`, reducing eagerly. Fails on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, RationalError> {
        let den = den.into();
        if den.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(Self(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, RationalError> {
        if self.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RationalError> {
        if rhs.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    /// Integer power, with negative exponents inverting (error on zero base).
    pub fn pow(&self, exp: i32) -> Result<Self, RationalError> {
        if exp < 0 && self.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Self(self.0.pow(exp)))
    }

    /// Nearest-`f64` conversion, robust against numerators/denominators far
    /// beyond the `f64` exponent range.
    pub fn to_f64(&self) -> f64 {
        let n = self.0.numer();
        let d = self.0.denom();
        let nb = n.bits() as i64;
        let db = d.bits() as i64;
        if nb <= 1000 && db <= 1000 {
            return n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN);
        }
        // Keep ~128 leading bits of each side and track the shifts.
        let sn = (nb - 128).max(0) as u64;
        let sd = (db - 128).max(0) as u64;
        let nn = (n >> sn).to_f64().unwrap_or(f64::NAN);
        let dd = (d >> sd).to_f64().unwrap_or(f64::NAN);
        (nn / dd) * 2f64.powi((sn as i64 - sd as i64) as i32)
    }

    /// Natural log of a positive rational, exact to ~1 ulp even when the
    /// value itself is far outside the `f64` range. `None` for values <= 0.
    pub fn ln_f64(&self) -> Option<f64> {
        if !self.is_positive() {
            return None;
        }
        Some(ln_bigint(self.0.numer()) - ln_bigint(self.0.denom()))
    }
}

fn ln_bigint(x: &BigInt) -> f64 {
    let b = x.bits();
    if b <= 960 {
        x.to_f64().unwrap_or(f64::NAN).abs().ln()
    } else {
        let s = b - 64;
        let top = (x >> s).to_f64().unwrap_or(f64::NAN).abs();
        top.ln() + s as f64 * std::f64::consts::LN_2
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(&self.0 $op &rhs.0)
            }
        }
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0 $op rhs.0)
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);
impl_binop!(Mul, mul, *);

impl Div for &ExactRational {
    type Output = ExactRational;
    /// Panics on division by zero; use [`ExactRational::checked_div`] to
    /// report it as an error instead.
    fn div(self, rhs: &ExactRational) -> ExactRational {
        assert!(!rhs.is_zero(), "division by zero");
        ExactRational(&self.0 / &rhs.0)
    }
}

impl Div for ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: ExactRational) -> ExactRational {
        (&self).div(&rhs)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for ExactRational {
    /// Canonical form used in every serialized output: `num/den`, or just
    /// `num` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactRational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int =
            |t: &str| BigInt::from_str(t.trim()).map_err(|_| RationalError::Parse(s.to_string()));
        match s.split_once('/') {
            None => Ok(Self::from_integer(parse_int(s)?)),
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(RationalError::ZeroDenominator);
                }
                Ok(Self(BigRational::new(parse_int(n)?, den)))
            }
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An exact multiple of an integer power of pi: `coefficient * pi^pi_power`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiScaled {
    pub coefficient: ExactRational,
    pub pi_power: i32,
}

impl PiScaled {
    pub fn new(coefficient: ExactRational, pi_power: i32) -> Self {
        Self { coefficient, pi_power }
    }

    pub fn to_f64(&self) -> f64 {
        self.coefficient.to_f64() * pi_f64().powi(self.pi_power)
    }

    /// Natural log of the (positive) value.
    pub fn ln_f64(&self) -> Option<f64> {
        Some(self.coefficient.ln_f64()? + f64::from(self.pi_power) * pi_f64().ln())
    }
}

impl fmt::Display for PiScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.coefficient),
            1 => write!(f, "{} * pi", self.coefficient),
            p => write!(f, "{} * pi^{}", self.coefficient, p),
        }
    }
}

/// Exact `n!`.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The exact constant `2*Gamma(2k+1) / (pi^{2k} * Gamma^2((2k+1)/2))`.
///
/// With `Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)` the value reduces to
/// `(2 * 16^k * (k!)^2 / (2k)!) * pi^{-(2k+1)}`, which is returned exactly.
pub fn gamma_half_ratio(k: u32) -> PiScaled {
    assert!(k >= 1, "gamma_half_ratio requires k >= 1");
    let kf = factorial(k);
    let num = BigInt::from(2) * BigInt::from(16).pow(k) * &kf * &kf;
    let coeff = ExactRational::new(num, factorial(2 * k)).expect("nonzero factorial");
    PiScaled::new(coeff, -(2 * k as i32 + 1))
}
