//! Rigorous enclosures of the trigonometric building blocks and the six
//! target expressions.
//!
//! sin, cos and sinc = sin x / x are evaluated by interval Horner over the
//! Taylor expansion with the tail bounded through the first omitted term
//! (the terms alternate and decrease on the working domain, with a factor-2
//! guard for the region where decrease only sets in after a few terms).
//! Precision exhaustion shows up as a widened enclosure, never silently.

use serde::{Deserialize, Serialize};

use crate::enclosure::Enclosure;
use crate::rational::{factorial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FnId {
    Sin,
    Cos,
    Sinc,
    SinCubedOverXCubed,
    /// cos x - sinc^3 (Theorem 1 target).
    TargetT1,
    /// sinc - (cos x + 2)/3 (Theorem 2 target).
    TargetT2,
    /// 2 sinc cos + sinc - 3 cos (Theorem 3 target, cleared of 1/cos).
    TargetT3,
    /// cos sinc^2 + sinc - 2 cos (Theorem 4 target, cleared of 1/cos).
    TargetT4,
    /// (x/sin x)^2 + x/tan x.
    TargetT5,
    /// 3 x/sin x + cos x.
    TargetT6,
}

/// Number of series terms needed so the omitted tail is below 2^-(prec+8),
/// together with the tail magnitude bound. `den_offset` is 1 for sinc
/// (denominators (2k+1)!) and 0 for cos (denominators (2k)!).
fn plan_terms(m_hi: &Rational, prec: u32, den_offset: u32) -> (u32, Rational) {
    // round |x|^2 up to 2^-16 granularity: planning only needs an upper
    // bound, and coarse numbers keep the exact arithmetic below from
    // accumulating huge numerators over the iterations
    let m2 = {
        let exact = m_hi * m_hi;
        let scale = num_bigint::BigInt::from(1) << 16;
        let num = num_integer::Integer::div_ceil(&(exact.numer() * &scale), exact.denom());
        Rational::new(num, scale)
    };
    let threshold = Rational::new(1, num_bigint::BigInt::from(1) << (prec + 8));
    let half = Rational::new(1, 2);
    let mut term = Rational::one(); // M^{2k} / (2k + den_offset)!
    let mut k = 0u32;
    loop {
        let a = 2 * k + den_offset + 1;
        let b = 2 * k + den_offset + 2;
        let ratio = &m2 * &Rational::new(1, i64::from(a) * i64::from(b));
        let next = &term * &ratio;
        if next < threshold && ratio <= half {
            // terms from k+1 on are bounded by a geometric series with ratio <= 1/2
            return (k, next * Rational::from_int(2));
        }
        term = next;
        k += 1;
        assert!(k < 10_000, "series term planning diverged; |x| too large");
    }
}

/// Interval Horner sum of sum_{k=0}^{n} (-1)^k x^{2k} / (2k + off)!,
/// plus the symmetric tail bound.
fn even_alternating_sum(x: &Enclosure, off: u32, prec: u32) -> Enclosure {
    let m_hi = {
        let lo = x.lo_rational().abs();
        let hi = x.hi_rational().abs();
        lo.max(hi)
    };
    let (n, tail) = plan_terms(&m_hi, prec, off);
    let x2 = x.mul(x);
    let mut acc = Enclosure::from_int(0, prec);
    for k in (0..=n).rev() {
        let mag = Rational::new(1, factorial(2 * k + off));
        let c = if k % 2 == 0 { mag } else { -mag };
        acc = acc.mul(&x2).add(&Enclosure::from_rational(&c, prec));
    }
    let tail_e = Enclosure::from_rational(&tail, prec).symmetric_from_hi();
    acc.add(&tail_e)
}

pub fn sinc_enclosure(x: &Enclosure) -> Enclosure {
    even_alternating_sum(x, 1, x.precision_bits())
}

pub fn cos_enclosure(x: &Enclosure) -> Enclosure {
    even_alternating_sum(x, 0, x.precision_bits())
}

pub fn sin_enclosure(x: &Enclosure) -> Enclosure {
    sinc_enclosure(x).mul(x)
}

/// Enclosure of the named function over `x`; `x` is expected inside
/// [0, 1.5708] plus the slack of directed endpoints.
pub fn enclose(f: FnId, x: &Enclosure) -> Enclosure {
    let prec = x.precision_bits();
    match f {
        FnId::Sin => sin_enclosure(x),
        FnId::Cos => cos_enclosure(x),
        FnId::Sinc => sinc_enclosure(x),
        FnId::SinCubedOverXCubed => sinc_enclosure(x).powi(3),
        FnId::TargetT1 => cos_enclosure(x).sub(&sinc_enclosure(x).powi(3)),
        FnId::TargetT2 => {
            let third = Rational::new(1, 3);
            sinc_enclosure(x)
                .sub(&cos_enclosure(x).mul_rational(&third))
                .sub(&Enclosure::from_rational(&Rational::new(2, 3), prec))
        }
        FnId::TargetT3 => {
            let s = sinc_enclosure(x);
            let c = cos_enclosure(x);
            s.mul(&c)
                .mul_rational(&Rational::from_int(2))
                .add(&s)
                .sub(&c.mul_rational(&Rational::from_int(3)))
        }
        FnId::TargetT4 => {
            let s = sinc_enclosure(x);
            let c = cos_enclosure(x);
            c.mul(&s.powi(2))
                .add(&s)
                .sub(&c.mul_rational(&Rational::from_int(2)))
        }
        FnId::TargetT5 => {
            let s = sinc_enclosure(x);
            let c = cos_enclosure(x);
            s.powi(2).recip().add(&c.div(&s))
        }
        FnId::TargetT6 => {
            let s = sinc_enclosure(x);
            let c = cos_enclosure(x);
            s.recip().mul_rational(&Rational::from_int(3)).add(&c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn point(s: &str, prec: u32) -> Enclosure {
        Enclosure::from_rational(&q(s), prec)
    }

    #[test]
    fn sin_at_zero_is_zero() {
        let z = Enclosure::from_int(0, 64);
        let s = sin_enclosure(&z);
        assert!(s.contains(&Rational::zero()));
        assert!(s.width() < q("1/1000000000000000"));
    }

    #[test]
    fn cos_at_zero_is_one() {
        let z = Enclosure::from_int(0, 64);
        let c = cos_enclosure(&z);
        assert!(c.contains(&Rational::one()));
        assert!(c.width() < q("1/1000000000000000"));
    }

    #[test]
    fn sin_known_value_at_three_halves() {
        // sin 1.5 = 0.9974949866040544...
        let s = sin_enclosure(&point("3/2", 128));
        assert!(s.contains(&q("99749498660405443094172337114148732270665142592212/100000000000000000000000000000000000000000000000000")));
        assert!(s.width() < q("1/1000000000000000000000000000000"));
    }

    #[test]
    fn pythagorean_identity_inside_width() {
        for xs in ["1/10", "1", "3/2", "157/100"] {
            let x = point(xs, 128);
            let s = sin_enclosure(&x);
            let c = cos_enclosure(&x);
            let one = s.powi(2).add(&c.powi(2));
            assert!(one.contains(&Rational::one()), "identity fails at {xs}");
        }
    }

    #[test]
    fn refinement_soundness() {
        // higher precision stays inside the lower-precision enclosure
        for f in [FnId::Sin, FnId::Cos, FnId::TargetT1, FnId::TargetT5] {
            let coarse = enclose(f, &point("11/10", 64));
            let fine = enclose(f, &point("11/10", 256));
            assert!(coarse.contains_enclosure(&fine), "{f:?} refinement escaped");
        }
    }

    #[test]
    fn target_t5_limit_near_zero() {
        // (x/sin x)^2 + x/tan x -> 2 as x -> 0+
        let v = enclose(FnId::TargetT5, &point("1/1000", 128));
        assert!(v.lo_rational() > q("199/100"));
        assert!(v.hi_rational() < q("201/100"));
    }

    #[test]
    fn wide_interval_still_contains_point_values() {
        let x = Enclosure::from_rational_interval(&q("1/2"), &q("1"), 96);
        let s = sin_enclosure(&x);
        for p in ["1/2", "3/4", "1"] {
            let sp = sin_enclosure(&point(p, 96));
            assert!(s.lo_rational() <= sp.hi_rational() && sp.lo_rational() <= s.hi_rational());
        }
    }
}
