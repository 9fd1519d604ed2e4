//! Independent series oracle.
//!
//! Builds the Taylor polynomials of the target expressions directly from the
//! sin and cos expansions by exact truncated multiplication and division,
//! without touching the closed-form coefficient rules in [`crate::series`].
//! This is the cross-check that pins down the sign conventions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::EvenPolynomial;
use crate::rational::{factorial, Rational};

/// Degree-truncated Taylor polynomial: coeffs[i] is the coefficient of x^i,
/// everything above `deg` is dropped by every operation.
#[derive(Clone, Debug)]
struct TruncSeries {
    coeffs: Vec<Rational>, // length deg + 1
}

impl TruncSeries {
    fn zero(deg: usize) -> Self {
        TruncSeries { coeffs: vec![Rational::zero(); deg + 1] }
    }

    fn constant(c: Rational, deg: usize) -> Self {
        let mut s = Self::zero(deg);
        s.coeffs[0] = c;
        s
    }

    fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn add(&self, other: &TruncSeries) -> TruncSeries {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        out
    }

    fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        out
    }

    fn scale(&self, f: &Rational) -> TruncSeries {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a *= f;
        }
        out
    }

    fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let deg = self.deg();
        let mut out = TruncSeries::zero(deg);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > deg {
                    break;
                }
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    /// Multiplicative inverse mod x^{deg+1}; requires a nonzero constant term.
    fn recip(&self) -> TruncSeries {
        let deg = self.deg();
        let c0 = self.coeffs[0].recip().expect("series has zero constant term");
        let mut out = TruncSeries::zero(deg);
        out.coeffs[0] = c0.clone();
        for n in 1..=deg {
            // coefficient n of (self * out) must vanish
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out.coeffs[n - k].is_zero() {
                    acc += &(&self.coeffs[k] * &out.coeffs[n - k]);
                }
            }
            out.coeffs[n] = -(acc * &c0);
        }
        out
    }

    fn to_even_polynomial(&self) -> EvenPolynomial {
        let mut p = EvenPolynomial::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                debug_assert!(i % 2 == 0, "odd-degree term survived: x^{i}");
                p.set(i as u32, c.clone());
            }
        }
        p
    }
}

/// sin x truncated to degree `deg`.
#[cfg(test)]
fn sin_series(deg: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(deg);
    let mut k = 0usize;
    while 2 * k + 1 <= deg {
        let mag = Rational::new(1, factorial(2 * k as u32 + 1));
        s.coeffs[2 * k + 1] = if k % 2 == 0 { mag } else { -mag };
        k += 1;
    }
    s
}

/// sin x / x truncated to degree `deg`.
fn sinc_series(deg: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(deg);
    let mut k = 0usize;
    while 2 * k <= deg {
        let mag = Rational::new(1, factorial(2 * k as u32 + 1));
        s.coeffs[2 * k] = if k % 2 == 0 { mag } else { -mag };
        k += 1;
    }
    s
}

fn cos_series(deg: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(deg);
    let mut k = 0usize;
    while 2 * k <= deg {
        let mag = Rational::new(1, factorial(2 * k as u32));
        s.coeffs[2 * k] = if k % 2 == 0 { mag } else { -mag };
        k += 1;
    }
    s
}

/// The fixed expressions the oracle supports, written with sinc = sin x / x
/// so every one is even and regular at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleExpr {
    /// cos x - sinc^3, the Theorem 1 target.
    CosMinusSincCubed,
    /// sinc - (cos x + 2)/3, the Theorem 2 target.
    SincMinusCusa,
    /// cos x * (2 sinc + tan x / x - 3) = 2 sinc cos + sinc - 3 cos.
    TwoSincPlusTancTimesCos,
    /// cos x * (sinc^2 + tan x / x - 2) = cos sinc^2 + sinc - 2 cos.
    WilkerCombination,
    /// (x/sin x)^2 + x/tan x - 2 = sinc^{-2} + cos sinc^{-1} - 2.
    SecondWilkerCombination,
    /// 3 x/sin x + cos x - 4 = 3 sinc^{-1} + cos - 4.
    HuygensCombination,
}

/// Taylor polynomial of the expression to the given even degree, built from
/// the base expansions only. Degree is capped at 60.
pub fn oracle_series(expr: OracleExpr, degree: u32) -> Result<EvenPolynomial> {
    if degree > 60 {
        return Err(Error::DegreeTooLarge(degree));
    }
    if degree % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "oracle degree must be even, got {degree}"
        )));
    }
    // Truncated reciprocal coefficient n depends only on inputs of degree <= n,
    // so working at the requested degree is exact for every reported term.
    let deg = degree as usize;
    let sinc = sinc_series(deg);
    let cos = cos_series(deg);
    let out = match expr {
        OracleExpr::CosMinusSincCubed => {
            let sinc3 = sinc.mul(&sinc).mul(&sinc);
            cos.sub(&sinc3)
        }
        OracleExpr::SincMinusCusa => {
            let third = Rational::new(1, 3);
            sinc.sub(&cos.scale(&third))
                .sub(&TruncSeries::constant(Rational::new(2, 3), deg))
        }
        OracleExpr::TwoSincPlusTancTimesCos => sinc
            .mul(&cos)
            .scale(&Rational::from_int(2))
            .add(&sinc)
            .sub(&cos.scale(&Rational::from_int(3))),
        OracleExpr::WilkerCombination => cos
            .mul(&sinc)
            .mul(&sinc)
            .add(&sinc)
            .sub(&cos.scale(&Rational::from_int(2))),
        OracleExpr::SecondWilkerCombination => {
            let inv = sinc.recip();
            inv.mul(&inv)
                .add(&cos.mul(&inv))
                .sub(&TruncSeries::constant(Rational::from_int(2), deg))
        }
        OracleExpr::HuygensCombination => cos
            .add(&sinc.recip().scale(&Rational::from_int(3)))
            .sub(&TruncSeries::constant(Rational::from_int(4), deg)),
    };
    Ok(out.to_even_polynomial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{base_coeff, SeriesId};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn cos_minus_sinc_cubed_low_order() {
        let p = oracle_series(OracleExpr::CosMinusSincCubed, 8).unwrap();
        assert_eq!(p.coeff(0), Rational::zero());
        assert_eq!(p.coeff(2), Rational::zero());
        assert_eq!(p.coeff(4), q("-1/15"));
        assert_eq!(p.coeff(6), q("23/1890"));
        assert_eq!(p.coeff(8), q("-41/37800"));
        assert!(oracle_series(OracleExpr::CosMinusSincCubed, 2).unwrap().is_zero());
    }

    #[test]
    fn sinc_minus_cusa_low_order() {
        let p = oracle_series(OracleExpr::SincMinusCusa, 4).unwrap();
        assert_eq!(p.coeff(4), q("-1/180"));
        assert_eq!(p.coeff(0), Rational::zero());
        assert_eq!(p.coeff(2), Rational::zero());
    }

    #[test]
    fn cubed_series_match_closed_forms() {
        // sin^3 and cos^3 closed forms against direct cubing
        let deg = 13;
        let sin = sin_series(deg);
        let sin3 = sin.mul(&sin).mul(&sin);
        for k in 1..=6u32 {
            assert_eq!(sin3.coeffs[2 * k as usize + 1], base_coeff(SeriesId::Sin3, k).unwrap());
        }
        let cos = cos_series(deg);
        let cos3 = cos.mul(&cos).mul(&cos);
        for k in 0..=6u32 {
            assert_eq!(cos3.coeffs[2 * k as usize], base_coeff(SeriesId::Cos3, k).unwrap());
        }
    }

    #[test]
    fn recip_is_inverse() {
        let s = sinc_series(20);
        let prod = s.mul(&s.recip());
        assert_eq!(prod.coeffs[0], Rational::one());
        for c in &prod.coeffs[1..] {
            assert!(c.is_zero());
        }
    }

    #[test]
    fn degree_cap_and_parity_enforced() {
        assert!(oracle_series(OracleExpr::CosMinusSincCubed, 62).is_err());
        assert!(oracle_series(OracleExpr::CosMinusSincCubed, 7).is_err());
    }
}
