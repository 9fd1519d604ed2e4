//! Bounds for the two constant-plus-positive-even-series targets:
//! (x/sin x)^2 + x/tan x = 2 + sum a_k x^{2k} and 3x/sin x + cos x =
//! 4 + sum b_k x^{2k}, all series coefficients positive from k = 2 on.
//!
//! Truncating such a series undershoots on (0, pi/2). The upper bound keeps
//! the terms through 2(m-1) and replaces the tail with C (2x/pi)^{2m}-style
//! correction chosen so the bound interpolates f at pi/2: since x^{2k} / x^{2m}
//! decreases in x for k < m, the corrected bound dominates the tail on the
//! whole interval once it does at the endpoint.

use serde::Serialize;

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::poly::EvenPolynomial;
use crate::rational::Rational;
use crate::series::{CoeffSeq, SeriesId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WdTheorem {
    T5,
    T6,
}

/// Symbolic tag for f(pi/2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EndpointValue {
    PiSqOver4,
    ThreePiOver2,
}

#[derive(Clone, Debug)]
pub struct WdBound {
    pub theorem: WdTheorem,
    pub order: u32,
    /// Constant plus all series terms through x^{2m}; exact rationals.
    pub lower: EvenPolynomial,
    /// Constant plus series terms through x^{2m-2}; exact rationals.
    pub upper_poly_part: EvenPolynomial,
    /// Always 2m.
    pub correction_exponent: u32,
    /// (2/pi)^{2m} (f(pi/2) - upper_poly_part(pi/2)); width from rounding only.
    pub correction_coefficient: Enclosure,
    pub endpoint_value_desc: EndpointValue,
}

fn seq_id(thm: WdTheorem) -> SeriesId {
    match thm {
        WdTheorem::T5 => SeriesId::Wilker5,
        WdTheorem::T6 => SeriesId::Huygens6,
    }
}

fn constant(thm: WdTheorem) -> Rational {
    match thm {
        WdTheorem::T5 => Rational::from_int(2),
        WdTheorem::T6 => Rational::from_int(4),
    }
}

fn order_floor(thm: WdTheorem) -> u32 {
    match thm {
        WdTheorem::T5 => 2,
        WdTheorem::T6 => 3,
    }
}

/// f(pi/2) as an enclosure: (pi/2)^2 for T5, 3(pi/2) for T6.
fn endpoint_enclosure(thm: WdTheorem, prec: u32) -> Enclosure {
    let hp = Enclosure::half_pi(prec);
    match thm {
        WdTheorem::T5 => hp.powi(2),
        WdTheorem::T6 => hp.mul_rational(&Rational::from_int(3)),
    }
}

/// R_n(pi/2) = f(pi/2) - constant - sum_{k=2}^{n} coeff(k) (pi/2)^{2k}.
fn remainder_enclosure(thm: WdTheorem, n: u32, prec: u32) -> Enclosure {
    let seq = CoeffSeq::new(seq_id(thm)).expect("catalog sequence");
    let hp = Enclosure::half_pi(prec);
    let hp2 = hp.powi(2);
    let mut acc = endpoint_enclosure(thm, prec)
        .sub(&Enclosure::from_rational(&constant(thm), prec));
    let mut pw = hp2.powi(2); // (pi/2)^{2k}, starting at k = 2
    for k in 2..=n {
        acc = acc.sub(&pw.mul_rational(&seq.magnitude(k).expect("k >= start")));
        pw = pw.mul(&hp2);
    }
    acc
}

pub fn wd_bounds(thm: WdTheorem, m: u32) -> Result<WdBound> {
    wd_bounds_at(thm, m, 192)
}

pub fn wd_bounds_at(thm: WdTheorem, m: u32, prec: u32) -> Result<WdBound> {
    let floor = order_floor(thm);
    if m < floor {
        return Err(Error::OrderTooSmall {
            context: "wd_bounds",
            given: m,
            min: floor,
        });
    }
    let seq = CoeffSeq::new(seq_id(thm))?;
    let c = constant(thm);
    let mut lower = EvenPolynomial::new();
    lower.set(0, c.clone());
    let mut upper_poly_part = EvenPolynomial::new();
    upper_poly_part.set(0, c);
    for k in 2..=m {
        let a = seq.magnitude(k)?;
        lower.set(2 * k, a.clone());
        if k < m {
            upper_poly_part.set(2 * k, a);
        }
    }
    // C = R_{m-1}(pi/2) / (pi/2)^{2m}; both factors sign-definite
    let rem = remainder_enclosure(thm, m - 1, prec);
    let correction = rem.div(&Enclosure::half_pi(prec).powi(2 * m));
    Ok(WdBound {
        theorem: thm,
        order: m,
        lower,
        upper_poly_part,
        correction_exponent: 2 * m,
        correction_coefficient: correction,
        endpoint_value_desc: match thm {
            WdTheorem::T5 => EndpointValue::PiSqOver4,
            WdTheorem::T6 => EndpointValue::ThreePiOver2,
        },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RemainderRow {
    pub n: u32,
    pub r_max: String,
}

/// Endpoint remainders R_n(pi/2) for n_from..=n_to, rendered with `digits`
/// certain significant figures; working precision is raised until the
/// enclosure pins every requested digit.
pub fn remainder_table(
    thm: WdTheorem,
    n_from: u32,
    n_to: u32,
    digits: u32,
) -> Result<Vec<RemainderRow>> {
    if !(2..=20).contains(&n_from) || !(2..=20).contains(&n_to) || n_from > n_to {
        return Err(Error::InvalidArgument(format!(
            "remainder table range must satisfy 2 <= {n_from} <= {n_to} <= 20"
        )));
    }
    if digits == 0 || digits > 50 {
        return Err(Error::InvalidArgument(format!(
            "digits must be in 1..=50, got {digits}"
        )));
    }
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        let mut prec = 128;
        let rendered = loop {
            let r = remainder_enclosure(thm, n, prec);
            if let Some(s) = r.to_decimal(digits as usize) {
                break s;
            }
            prec *= 2;
            assert!(prec <= 1 << 16, "remainder enclosure failed to converge");
        };
        rows.push(RemainderRow { n, r_max: rendered });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn t5_m2_shapes() {
        let b = wd_bounds(WdTheorem::T5, 2).unwrap();
        assert_eq!(b.lower.coeff(0), q("2"));
        assert_eq!(b.lower.coeff(4), q("2/45"));
        assert_eq!(b.lower.degree(), Some(4));
        // upper polynomial part is the bare constant; correction carries x^4
        assert_eq!(b.upper_poly_part.degree(), Some(0));
        assert_eq!(b.correction_exponent, 4);
        // C = (2/pi)^4 (pi^2/4 - 2) = 0.0767556...
        let c = b.correction_coefficient;
        assert!(c.lo_rational() > q("767/10000"));
        assert!(c.hi_rational() < q("768/10000"));
    }

    #[test]
    fn t6_m3_lower_matches_catalog() {
        let b = wd_bounds(WdTheorem::T6, 3).unwrap();
        assert_eq!(b.lower.coeff(0), q("4"));
        assert_eq!(b.lower.coeff(4), q("1/10"));
        assert_eq!(b.lower.coeff(6), q("1/210"));
        assert_eq!(b.lower.degree(), Some(6));
        assert_eq!(b.upper_poly_part.coeff(4), q("1/10"));
        assert_eq!(b.upper_poly_part.degree(), Some(4));
    }

    #[test]
    fn t5_m4_tail_coefficient() {
        let b = wd_bounds(WdTheorem::T5, 4).unwrap();
        assert_eq!(b.lower.coeff(8), q("2/1575"));
    }

    #[test]
    fn order_floors_enforced() {
        assert!(wd_bounds(WdTheorem::T5, 1).is_err());
        assert!(wd_bounds(WdTheorem::T6, 2).is_err());
        assert!(wd_bounds(WdTheorem::T6, 3).is_ok());
    }

    #[test]
    fn endpoint_interpolation() {
        // upper evaluated at pi/2 must reproduce f(pi/2) within rounding
        for (thm, m) in [(WdTheorem::T5, 3), (WdTheorem::T6, 4), (WdTheorem::T5, 6)] {
            let b = wd_bounds(thm, m).unwrap();
            let prec = 192;
            let hp = Enclosure::half_pi(prec);
            let mut v = Enclosure::from_int(0, prec);
            for (e, c) in [(0u32, b.upper_poly_part.coeff(0))]
                .into_iter()
                .chain((2..m).map(|k| (2 * k, b.upper_poly_part.coeff(2 * k))))
            {
                v = v.add(&hp.powi(e).mul_rational(&c));
            }
            v = v.add(&hp.powi(b.correction_exponent).mul(&b.correction_coefficient));
            let f = endpoint_enclosure(thm, prec);
            assert!(
                v.lo_rational() <= f.hi_rational() && f.lo_rational() <= v.hi_rational(),
                "{thm:?} m={m} endpoint mismatch"
            );
        }
    }

    #[test]
    fn printed_remainder_tables() {
        let t5 = remainder_table(WdTheorem::T5, 3, 6, 6).unwrap();
        let got: Vec<&str> = t5.iter().map(|r| r.r_max.as_str()).collect();
        assert_eq!(got, ["0.0696524", "0.0225863", "0.00694574", "0.00206173"]);
        let t6 = remainder_table(WdTheorem::T6, 3, 6, 6).unwrap();
        let got: Vec<&str> = t6.iter().map(|r| r.r_max.as_str()).collect();
        assert_eq!(got, ["0.0320502", "0.00778176", "0.00195321", "0.000488251"]);
    }

    #[test]
    fn remainders_positive_and_decreasing() {
        let rows = remainder_table(WdTheorem::T5, 2, 10, 8).unwrap();
        let vals: Vec<f64> = rows.iter().map(|r| r.r_max.parse().unwrap()).collect();
        for w in vals.windows(2) {
            assert!(w[0] > w[1] && w[1] > 0.0);
        }
    }
}
