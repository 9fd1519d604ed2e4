//! Exact arbitrary-precision rational arithmetic.
//!
//! `Rational` is the universal scalar for every coefficient in the crate.
//! It is a thin wrapper over `num_rational::BigRational` that fixes the
//! serialization format ("num/den" in lowest terms, "num" alone when the
//! denominator is 1) and never goes through floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Reduced fraction num/den; panics on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
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

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroToNegativePower);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Exact x^e for integer e; a zero base with negative e is a domain error.
    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::ZeroToNegativePower);
        }
        Ok(Rational(self.0.pow(e)))
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn cmp_zero(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

}

/// Exact n! as a big integer, memoized (the coefficient formulas hit the
/// same factorials over and over for consecutive k).
pub fn factorial(n: u32) -> BigInt {
    static TABLE: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());
    let mut table = TABLE.lock().unwrap();
    if table.is_empty() {
        table.push(BigInt::one()); // 0!
    }
    while table.len() <= n as usize {
        let next = table.last().unwrap() * table.len();
        table.push(next);
    }
    table[n as usize].clone()
}

/// Exact x^e; alias for [`Rational::pow`] matching the operation name.
pub fn rat_pow(x: &Rational, e: i32) -> Result<Rational> {
    x.pow(e)
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

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

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim())
                .map_err(|e| Error::InvalidArgument(format!("bad integer {t:?}: {e}")))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den.sign() != Sign::Plus {
                    return Err(Error::InvalidArgument(format!(
                        "denominator must be positive in {s:?}"
                    )));
                }
                Ok(Rational::new(parse_int(n)?, den))
            }
            None => Ok(Rational::from_int(parse_int(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Decimal rendering of a rational to `sig` significant figures,
/// round-to-nearest, plain notation with a '.' separator.
pub fn format_decimal(q: &Rational, sig: usize) -> String {
    assert!(sig > 0);
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let a = q.abs();
    // decimal exponent e with 10^e <= a < 10^{e+1}
    let ten = BigInt::from(10);
    let mut e: i64 = 0;
    let mut lo = a.clone();
    while lo >= Rational::from_int(10) {
        lo = lo / Rational::from_int(10);
        e += 1;
    }
    while lo < Rational::one() {
        lo = lo * Rational::from_int(10);
        e -= 1;
    }
    // mantissa digits: round(a * 10^{sig-1-e})
    let shift = sig as i64 - 1 - e;
    let mut scaled = a;
    if shift >= 0 {
        for _ in 0..shift {
            scaled = scaled * Rational::from_int(10);
        }
    } else {
        for _ in 0..(-shift) {
            scaled = scaled / Rational::from_int(10);
        }
    }
    // round half away from zero
    let (num, den) = (scaled.numer().clone(), scaled.denom().clone());
    let two = BigInt::from(2);
    let mut digits = (&two * num + &den) / (two * den);
    // rounding may have produced sig+1 digits (e.g. 9.99 -> 10.0)
    let mut e = e;
    let bound = ten.pow(sig as u32);
    if digits >= bound {
        digits /= &ten;
        e += 1;
    }
    let ds = digits.to_string();
    debug_assert_eq!(ds.len(), sig);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e >= sig as i64 - 1 {
        // integer with possible trailing zeros
        out.push_str(&ds);
        for _ in 0..(e - (sig as i64 - 1)) {
            out.push('0');
        }
    } else if e >= 0 {
        let split = (e + 1) as usize;
        out.push_str(&ds[..split]);
        out.push('.');
        out.push_str(&ds[split..]);
    } else {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.push_str(&ds);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_on_construction() {
        let q = Rational::new(6, -4);
        assert_eq!(q.to_string(), "-3/2");
        assert!(q.denom().is_positive());
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(7), BigInt::from(5040));
        assert_eq!(factorial(10), BigInt::from(3628800));
    }

    #[test]
    fn pow_values() {
        let q = Rational::new(3, 2);
        assert_eq!(q.pow(2).unwrap(), Rational::new(9, 4));
        assert_eq!(q.pow(0).unwrap(), Rational::one());
        assert_eq!(Rational::from_int(2).pow(-3).unwrap(), Rational::new(1, 8));
        assert!(Rational::zero().pow(-1).is_err());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["23/1890", "-1/15", "7", "0", "-3"] {
            let q: Rational = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert!("1/-3".parse::<Rational>().is_err());
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(format_decimal(&Rational::new(1, 3), 4), "0.3333");
        assert_eq!(format_decimal(&Rational::new(2, 3), 3), "0.667");
        assert_eq!(format_decimal(&Rational::new(-12345, 10), 3), "-1230");
        assert_eq!(format_decimal(&Rational::new(999, 1000), 2), "1.0");
        assert_eq!(format_decimal(&Rational::new(488251, 1_000_000_000), 6), "0.000488251");
    }
}
