//! The coefficient catalog: base trigonometric expansions and the derived
//! sequences behind each of the six theorems.
//!
//! Sign conventions are normative from the worked examples rather than the
//! theorem headers: the A and B sequences lead with a negative x^4 term,
//! the C and D sequences with a positive one. The cos^3 expansion includes
//! its k = 0 constant term.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bernoulli::bernoulli_abs_even;
use crate::error::{Error, Result};
use crate::poly::EvenPolynomial;
use crate::rational::{factorial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesId {
    Sin,
    Cos,
    Sin3,
    Cos3,
    Cosec,
    Cosec2,
    Cotan,
    SeqA,
    SeqB,
    SeqC,
    SeqD,
    Wilker5,
    Huygens6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignMode {
    /// signed(k) = (-1)^{k+1} * magnitude(k); first nonzero term negative.
    AlternatingStartNeg,
    /// signed(k) = (-1)^k * magnitude(k); first term positive.
    AlternatingStartPos,
    /// signed(k) = +magnitude(k).
    AllPositive,
}

/// Exact description of the validity radius c.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RadiusTag {
    HalfPi,
    Infinite,
}

/// A named coefficient sequence k -> Rational magnitude with its sign
/// convention, start index and validity radius.
#[derive(Clone, Copy, Debug)]
pub struct CoeffSeq {
    pub id: SeriesId,
    pub start_k: u32,
    pub radius: RadiusTag,
    pub sign_mode: SignMode,
}

impl CoeffSeq {
    /// The derived sequences of Theorems 1-6. Base series are indexed through
    /// [`base_coeff`] instead because their powers are not uniformly even.
    pub fn new(id: SeriesId) -> Result<Self> {
        let (start_k, radius, sign_mode) = match id {
            SeriesId::SeqA | SeriesId::SeqB => (2, RadiusTag::HalfPi, SignMode::AlternatingStartNeg),
            SeriesId::SeqC | SeriesId::SeqD => (2, RadiusTag::HalfPi, SignMode::AlternatingStartPos),
            SeriesId::Wilker5 => (2, RadiusTag::HalfPi, SignMode::AllPositive),
            SeriesId::Huygens6 => (1, RadiusTag::HalfPi, SignMode::AllPositive),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "{id:?} is a base series, not a derived coefficient sequence"
                )))
            }
        };
        Ok(CoeffSeq { id, start_k, radius, sign_mode })
    }

    /// Nonnegative magnitude of the k-th coefficient.
    pub fn magnitude(&self, k: u32) -> Result<Rational> {
        seq_coeff(self.id, k)
    }

    /// Signed coefficient per the sequence's sign mode.
    pub fn signed(&self, k: u32) -> Result<Rational> {
        let mag = self.magnitude(k)?;
        Ok(apply_sign(self.sign_mode, k, mag))
    }

    /// Partial sum as a polynomial: signed terms for start_k <= k <= upto_k.
    /// Empty when the range is empty.
    pub fn truncate(&self, upto_k: u32) -> Result<EvenPolynomial> {
        let mut out = EvenPolynomial::new();
        for k in self.start_k..=upto_k {
            out.set(2 * k, self.signed(k)?);
        }
        Ok(out)
    }
}

pub(crate) fn apply_sign(mode: SignMode, k: u32, mag: Rational) -> Rational {
    match mode {
        SignMode::AlternatingStartNeg => {
            if k % 2 == 0 {
                -mag
            } else {
                mag
            }
        }
        SignMode::AlternatingStartPos => {
            if k % 2 == 0 {
                mag
            } else {
                -mag
            }
        }
        SignMode::AllPositive => mag,
    }
}

fn pow_int(base: u32, e: u32) -> BigInt {
    BigInt::from(base).pow(e)
}

/// Signed coefficient of the base expansions.
///
/// Indexing per tag: Sin and Sin3 return the coefficient of x^{2k+1}; Cos and
/// Cos3 the coefficient of x^{2k}; Cosec, Cosec2 and Cotan return the Laurent
/// coefficient of x^{2k-1}, x^{2k-2}, x^{2k-1} respectively in the part beyond
/// the 1/x (resp. 1/x^2) principal term, defined for k >= 1.
pub fn base_coeff(id: SeriesId, k: u32) -> Result<Rational> {
    match id {
        SeriesId::Sin => {
            let mag = Rational::new(1, factorial(2 * k + 1));
            Ok(if k % 2 == 0 { mag } else { -mag })
        }
        SeriesId::Cos => {
            let mag = Rational::new(1, factorial(2 * k));
            Ok(if k % 2 == 0 { mag } else { -mag })
        }
        SeriesId::Sin3 => {
            // (1/4) sum_{k>=1} (-1)^{k+1} (3^{2k+1}-3)/(2k+1)! x^{2k+1}
            if k < 1 {
                return Err(Error::IndexBelowStart { id, k: k as i64, start: 1 });
            }
            let mag = Rational::new(pow_int(3, 2 * k + 1) - 3, 4 * factorial(2 * k + 1));
            Ok(if k % 2 == 1 { mag } else { -mag })
        }
        SeriesId::Cos3 => {
            // (1/4) sum_{k>=0} (-1)^k (3^{2k}+3)/(2k)! x^{2k}, k = 0 term included
            let mag = Rational::new(pow_int(3, 2 * k) + 3, 4 * factorial(2 * k));
            Ok(if k % 2 == 0 { mag } else { -mag })
        }
        SeriesId::Cosec => {
            if k < 1 {
                return Err(Error::IndexBelowStart { id, k: k as i64, start: 1 });
            }
            Ok(bernoulli_abs_even(k)
                * Rational::new(pow_int(2, 2 * k) - 2, factorial(2 * k)))
        }
        SeriesId::Cosec2 => {
            if k < 1 {
                return Err(Error::IndexBelowStart { id, k: k as i64, start: 1 });
            }
            Ok(bernoulli_abs_even(k)
                * Rational::new(BigInt::from(2 * k - 1) * pow_int(4, k), factorial(2 * k)))
        }
        SeriesId::Cotan => {
            if k < 1 {
                return Err(Error::IndexBelowStart { id, k: k as i64, start: 1 });
            }
            Ok(-(bernoulli_abs_even(k) * Rational::new(pow_int(4, k), factorial(2 * k))))
        }
        _ => Err(Error::InvalidArgument(format!(
            "{id:?} is a derived sequence; use seq_coeff"
        ))),
    }
}

/// Magnitude of the derived coefficient sequences.
///
/// Huygens6 returns the full signed-content value
/// (3|B_{2k}|(2^{2k}-2) + (-1)^k)/(2k)!, which is >= 0 for all k >= 1
/// (it vanishes at k = 1).
pub fn seq_coeff(id: SeriesId, k: u32) -> Result<Rational> {
    let start = match id {
        SeriesId::SeqA | SeriesId::SeqB | SeriesId::SeqC | SeriesId::SeqD | SeriesId::Wilker5 => 2,
        SeriesId::Huygens6 => 1,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "{id:?} is a base series; use base_coeff"
            )))
        }
    };
    if k < start {
        return Err(Error::IndexBelowStart { id, k: k as i64, start });
    }
    let kb = BigInt::from(k);
    Ok(match id {
        SeriesId::SeqA => Rational::new(
            pow_int(3, 2 * k + 3) - 32 * kb.pow(3) - 96 * kb.pow(2) - 88 * &kb - 27,
            4 * factorial(2 * k + 3),
        ),
        SeriesId::SeqB => Rational::new(2 * (&kb - 1), 3 * factorial(2 * k + 1)),
        SeriesId::SeqC => Rational::new(2 * (pow_int(4, k) - 3 * &kb - 1), factorial(2 * k + 1)),
        SeriesId::SeqD => Rational::new(
            pow_int(3, 2 * k + 2) - 32 * kb.pow(2) - 40 * &kb - 9,
            4 * factorial(2 * k + 2),
        ),
        SeriesId::Wilker5 => {
            bernoulli_abs_even(k)
                * Rational::new(BigInt::from(2 * k - 2) * pow_int(4, k), factorial(2 * k))
        }
        SeriesId::Huygens6 => {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let num = Rational::from_int(3)
                * bernoulli_abs_even(k)
                * Rational::from_int(pow_int(2, 2 * k) - 2)
                + Rational::from_int(sign);
            num / Rational::from_int(factorial(2 * k))
        }
        _ => unreachable!(),
    })
}
