//! Outward-rounded interval arithmetic over fixed-point dyadic numbers.
//!
//! An `Enclosure` is a pair of big integers lo <= hi interpreted at a fixed
//! binary point: the represented set is [lo, hi] * 2^-prec. Every operation
//! rounds lo downward and hi upward, so the result always contains the exact
//! image of the inputs. Rationals enter through directed division, never
//! through floats.

use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::consts::PI_DIGITS;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

impl Enclosure {
    pub fn precision_bits(&self) -> u32 {
        self.prec
    }

    fn scale(prec: u32) -> BigInt {
        BigInt::from(1) << prec
    }

    pub fn from_parts(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        debug_assert!(lo <= hi);
        Enclosure { lo, hi, prec }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        let v = BigInt::from(n) << prec;
        Enclosure { lo: v.clone(), hi: v, prec }
    }

    /// Tight enclosure of an exact rational: floor and ceiling at 1 ulp.
    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        let scaled_num = q.numer() * Self::scale(prec);
        let lo = floor_div(&scaled_num, q.denom());
        let hi = ceil_div(&scaled_num, q.denom());
        Enclosure { lo, hi, prec }
    }

    pub fn from_rational_interval(a: &Rational, b: &Rational, prec: u32) -> Self {
        debug_assert!(a <= b);
        let lo = floor_div(&(a.numer() * Self::scale(prec)), a.denom());
        let hi = ceil_div(&(b.numer() * Self::scale(prec)), b.denom());
        Enclosure { lo, hi, prec }
    }

    /// Enclosure of pi from the stored 100-digit decimal, outward by 1 digit ulp.
    pub fn pi(prec: u32) -> Self {
        let digits: String = PI_DIGITS.chars().filter(|c| *c != '.').collect();
        let num = BigInt::from_str(&digits).unwrap();
        let den = BigInt::from(10).pow(digits.len() as u32 - 1);
        let lo_q = Rational::new(num.clone(), den.clone());
        let hi_q = Rational::new(num + 1, den);
        Enclosure {
            lo: Self::from_rational(&lo_q, prec).lo,
            hi: Self::from_rational(&hi_q, prec).hi,
            prec,
        }
    }

    pub fn half_pi(prec: u32) -> Self {
        Self::pi(prec).div_pow2(1)
    }

    pub fn lo_rational(&self) -> Rational {
        Rational::new(self.lo.clone(), Self::scale(self.prec))
    }

    pub fn hi_rational(&self) -> Rational {
        Rational::new(self.hi.clone(), Self::scale(self.prec))
    }

    pub fn width(&self) -> Rational {
        Rational::new(&self.hi - &self.lo, Self::scale(self.prec))
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.lo_rational() <= *q && *q <= self.hi_rational()
    }

    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lo_rational() <= other.lo_rational() && other.hi_rational() <= self.hi_rational()
    }

    /// Sign of the whole interval: Greater if provably positive, Less if
    /// provably negative, Equal when the interval straddles or touches zero.
    pub fn sign(&self) -> Ordering {
        if self.lo.is_positive() {
            Ordering::Greater
        } else if self.hi.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    /// Re-round to a different working precision (outward when narrowing).
    pub fn with_prec(&self, prec: u32) -> Self {
        if prec == self.prec {
            return self.clone();
        }
        if prec > self.prec {
            let shift = prec - self.prec;
            Enclosure { lo: &self.lo << shift, hi: &self.hi << shift, prec }
        } else {
            let s = Self::scale(self.prec - prec);
            Enclosure {
                lo: floor_div(&self.lo, &s),
                hi: ceil_div(&self.hi, &s),
                prec,
            }
        }
    }

    fn check_prec(&self, other: &Enclosure) {
        assert_eq!(self.prec, other.prec, "mixed-precision enclosure arithmetic");
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        self.check_prec(other);
        Enclosure {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Enclosure) -> Enclosure {
        self.check_prec(other);
        Enclosure {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Enclosure {
        Enclosure { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        self.check_prec(other);
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        let s = Self::scale(self.prec);
        Enclosure {
            lo: floor_div(min, &s),
            hi: ceil_div(max, &s),
            prec: self.prec,
        }
    }

    /// Division; the divisor interval must not contain zero.
    pub fn div(&self, other: &Enclosure) -> Enclosure {
        self.check_prec(other);
        assert!(
            other.lo.is_positive() || other.hi.is_negative(),
            "division by an interval containing zero"
        );
        let s = Self::scale(self.prec);
        let num_lo = &self.lo * &s;
        let num_hi = &self.hi * &s;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for num in [&num_lo, &num_hi] {
            for den in [&other.lo, &other.hi] {
                let f = floor_div(num, den);
                let c = ceil_div(num, den);
                lo = Some(match lo {
                    Some(v) => v.min(f),
                    None => f,
                });
                hi = Some(match hi {
                    Some(v) => v.max(c),
                    None => c,
                });
            }
        }
        Enclosure { lo: lo.unwrap(), hi: hi.unwrap(), prec: self.prec }
    }

    pub fn recip(&self) -> Enclosure {
        Enclosure::from_int(1, self.prec).div(self)
    }

    pub fn div_pow2(&self, k: u32) -> Enclosure {
        let s = Self::scale(k);
        Enclosure {
            lo: floor_div(&self.lo, &s),
            hi: ceil_div(&self.hi, &s),
            prec: self.prec,
        }
    }

    pub fn mul_rational(&self, q: &Rational) -> Enclosure {
        self.mul(&Enclosure::from_rational(q, self.prec))
    }

    /// x^n; tightened for nonnegative intervals, generic otherwise.
    pub fn powi(&self, n: u32) -> Enclosure {
        if n == 0 {
            return Enclosure::from_int(1, self.prec);
        }
        if !self.lo.is_negative() {
            let s = Self::scale(self.prec * (n - 1));
            return Enclosure {
                lo: floor_div(&self.lo.pow(n), &s),
                hi: ceil_div(&self.hi.pow(n), &s),
                prec: self.prec,
            };
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Upper bound of |x| as a nonnegative point enclosure.
    pub fn abs_hi(&self) -> Enclosure {
        let m = self.lo.abs().max(self.hi.abs());
        Enclosure { lo: m.clone(), hi: m, prec: self.prec }
    }

    /// Symmetric interval [-hi, +hi] from this enclosure's upper endpoint.
    pub fn symmetric_from_hi(&self) -> Enclosure {
        debug_assert!(!self.hi.is_negative());
        Enclosure { lo: -&self.hi, hi: self.hi.clone(), prec: self.prec }
    }

    /// Approximate midpoint as f64, for reporting only.
    pub fn midpoint_f64(&self) -> f64 {
        let mid = (self.lo_rational() + self.hi_rational()) / Rational::from_int(2);
        rational_to_f64(&mid)
    }

    /// Decimal string with `sig` significant figures, or None when the
    /// interval is too wide for every requested digit to be certain.
    pub fn to_decimal(&self, sig: usize) -> Option<String> {
        let lo = crate::rational::format_decimal(&self.lo_rational(), sig);
        let hi = crate::rational::format_decimal(&self.hi_rational(), sig);
        (lo == hi).then_some(lo)
    }
}

/// Lossy rational-to-f64 conversion for diagnostics and CSV output.
pub fn rational_to_f64(q: &Rational) -> f64 {
    // scale to keep integer parts in range
    let num = q.numer();
    let den = q.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = (nb.max(db) - 52).max(0) as u64;
    let n = num >> shift as usize;
    let d = den >> shift as usize;
    let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    if df == 0.0 {
        // denominator underflowed the shift; fall back to bit-length estimate
        return if num.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
    }
    nf / df
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn rational_round_trip_within_one_ulp() {
        let x = Enclosure::from_rational(&q("1/3"), 64);
        assert!(x.contains(&q("1/3")));
        assert!(x.width() <= Rational::new(2, BigInt::from(1) << 63));
    }

    #[test]
    fn arithmetic_contains_exact_result() {
        let a = Enclosure::from_rational(&q("22/7"), 96);
        let b = Enclosure::from_rational(&q("-3/11"), 96);
        assert!(a.add(&b).contains(&q("221/77")));
        assert!(a.mul(&b).contains(&(q("22/7") * q("-3/11"))));
        assert!(a.div(&b).contains(&(q("22/7") / q("-3/11"))));
        assert!(a.powi(3).contains(&q("22/7").pow(3).unwrap()));
    }

    #[test]
    fn pi_enclosure_brackets_known_bounds() {
        let pi = Enclosure::pi(128);
        assert!(pi.lo_rational() > q("314159265358979323846/100000000000000000000"));
        assert!(pi.hi_rational() < q("314159265358979323847/100000000000000000000"));
        let hp = Enclosure::half_pi(128);
        assert!(hp.lo_rational() > crate::consts::half_pi_lo() - q("1/1000000000000000000000"));
        assert!(hp.hi_rational() < crate::consts::half_pi_hi());
    }

    #[test]
    fn refinement_keeps_containment() {
        let a = Enclosure::from_rational(&q("355/113"), 64);
        let wide = a.with_prec(32);
        assert!(wide.contains_enclosure(&a));
    }

    #[test]
    fn decimal_rendering_requires_agreement() {
        let x = Enclosure::from_rational(&q("1/4"), 128);
        assert_eq!(x.to_decimal(6).unwrap(), "0.250000");
        let wide = Enclosure::from_rational_interval(&q("1/4"), &q("1/2"), 16);
        assert!(wide.to_decimal(6).is_none());
    }
}
