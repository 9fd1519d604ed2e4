//! Polynomial containers: sparse even polynomials with exact rational
//! coefficients, dense polynomials for the verifier, and rational functions.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// Sparse map from even exponent to exact rational coefficient.
/// Zero coefficients are never stored; exponents are even and nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EvenPolynomial {
    terms: BTreeMap<u32, Rational>,
}

impl EvenPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets the coefficient of x^exp; panics on odd exponents.
    pub fn set(&mut self, exp: u32, coeff: Rational) {
        assert!(exp % 2 == 0, "EvenPolynomial exponent must be even, got {exp}");
        if coeff.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, coeff);
        }
    }

    pub fn add_term(&mut self, exp: u32, coeff: &Rational) {
        let cur = self.coeff(exp) + coeff;
        self.set(exp, cur);
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add(&self, other: &EvenPolynomial) -> EvenPolynomial {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &EvenPolynomial) -> EvenPolynomial {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, &-c);
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> EvenPolynomial {
        let mut out = EvenPolynomial::new();
        for (e, c) in self.iter() {
            out.set(e, c * factor);
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let x2 = x * x;
        // Horner over the even exponents, sparse-aware
        let mut acc = Rational::zero();
        let mut prev_exp: Option<u32> = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(p) = prev_exp {
                let gap = (p - e) / 2;
                for _ in 0..gap {
                    acc = acc * &x2;
                }
            }
            acc = acc + c;
            prev_exp = Some(*e);
        }
        if let Some(e) = prev_exp {
            for _ in 0..(e / 2) {
                acc = acc * &x2;
            }
        }
        acc
    }

    /// LaTeX rendering, terms in increasing exponent: \frac{num}{den}x^{2k}.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let coeff_str = if a.denom() == &num_bigint::BigInt::from(1) {
                if a == Rational::one() && e > 0 {
                    String::new()
                } else {
                    format!("{}", a.numer())
                }
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            out.push_str(&coeff_str);
            match e {
                0 => {
                    if coeff_str.is_empty() {
                        out.push('1');
                    }
                }
                2 => out.push_str("x^{2}"),
                _ => out.push_str(&format!("x^{{{e}}}")),
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: u32,
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct EvenPolynomialRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for EvenPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = EvenPolynomialRepr {
            terms: self
                .iter()
                .map(|(e, c)| TermRepr { exp: e, coeff: c.clone() })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EvenPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = EvenPolynomialRepr::deserialize(deserializer)?;
        let mut out = EvenPolynomial::new();
        for t in repr.terms {
            if t.exp % 2 != 0 {
                return Err(D::Error::custom(format!("odd exponent {}", t.exp)));
            }
            out.set(t.exp, t.coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for EvenPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => write!(f, "{a}*x^{e}")?,
            }
        }
        Ok(())
    }
}

/// Dense polynomial over all exponents; the verifier's workhorse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    /// coeffs[i] is the coefficient of x^i; no trailing zeros.
    coeffs: Vec<Rational>,
}

impl DensePoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    /// Polynomial with integer coefficients of x^0, x^2, x^4, ... in order.
    pub fn from_even_int_coeffs(even: &[i64]) -> Self {
        let mut coeffs = vec![Rational::zero(); even.len() * 2];
        for (i, c) in even.iter().enumerate() {
            coeffs[2 * i] = Rational::from_int(*c);
        }
        DensePoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        if self.is_zero() || other.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        DensePoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            coeffs.push(a - b);
        }
        DensePoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> DensePoly {
        DensePoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> DensePoly {
        if self.coeffs.len() <= 1 {
            return DensePoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from_int(i as i64))
            .collect();
        DensePoly::from_coeffs(coeffs)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by x^l exactly; panics if a lower-order coefficient is nonzero.
    pub fn shift_down(&self, l: usize) -> DensePoly {
        assert!(self.coeffs.iter().take(l).all(|c| c.is_zero()));
        DensePoly::from_coeffs(self.coeffs.iter().skip(l).cloned().collect())
    }

    /// Exact rational bounds on the range over [a, b], requiring 0 <= a <= b.
    /// Uses the monotonicity of x^i on the nonnegative axis term by term.
    pub fn bound_on(&self, a: &Rational, b: &Rational) -> (Rational, Rational) {
        assert!(!a.is_negative() && a <= b);
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        let mut pa = Rational::one();
        let mut pb = Rational::one();
        for c in &self.coeffs {
            if c.is_positive() {
                lo = lo + &(c * &pa);
                hi = hi + &(c * &pb);
            } else if c.is_negative() {
                lo = lo + &(c * &pb);
                hi = hi + &(c * &pa);
            }
            pa = pa * a;
            pb = pb * b;
        }
        (lo, hi)
    }
}

impl From<&EvenPolynomial> for DensePoly {
    fn from(p: &EvenPolynomial) -> Self {
        let deg = p.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in p.iter() {
            coeffs[e as usize] = c.clone();
        }
        DensePoly::from_coeffs(coeffs)
    }
}

/// Quotient of dense polynomials; the denominator is not identically zero.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub numerator: DensePoly,
    pub denominator: DensePoly,
}

impl RationalFunction {
    pub fn new(numerator: DensePoly, denominator: DensePoly) -> Self {
        assert!(!denominator.is_zero(), "denominator identically zero");
        RationalFunction { numerator, denominator }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, i64, i64)]) -> EvenPolynomial {
        let mut out = EvenPolynomial::new();
        for (e, n, d) in terms {
            out.set(*e, Rational::new(*n, *d));
        }
        out
    }

    #[test]
    fn no_zero_terms_stored() {
        let mut q = p(&[(4, 1, 15)]);
        q.add_term(4, &Rational::new(-1, 15));
        assert!(q.is_zero());
    }

    #[test]
    fn sparse_eval_matches_dense() {
        let q = p(&[(0, 2, 1), (4, -1, 15), (10, 23, 1890)]);
        let d = DensePoly::from(&q);
        for x in [Rational::new(1, 2), Rational::new(-3, 7), Rational::from_int(2)] {
            assert_eq!(q.eval(&x), d.eval(&x));
        }
    }

    #[test]
    fn latex_rendering() {
        let q = p(&[(4, -1, 15), (6, 23, 1890)]);
        assert_eq!(q.latex(), "-\\frac{1}{15}x^{4} + \\frac{23}{1890}x^{6}");
    }

    #[test]
    fn json_round_trip_sorted_by_exponent() {
        let q = p(&[(6, 23, 1890), (4, -1, 15)]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"exp":4,"coeff":"-1/15"},{"exp":6,"coeff":"23/1890"}]}"#
        );
        let back: EvenPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn dense_bounds_contain_samples() {
        let d = DensePoly::from_coeffs(vec![
            Rational::from_int(1),
            Rational::from_int(-3),
            Rational::from_int(2),
        ]);
        let (a, b) = (Rational::new(1, 4), Rational::new(3, 2));
        let (lo, hi) = d.bound_on(&a, &b);
        let mut x = a.clone();
        let step = Rational::new(1, 16);
        while x <= b {
            let v = d.eval(&x);
            assert!(lo <= v && v <= hi);
            x = x + &step;
        }
    }

    #[test]
    fn low_order_strip() {
        let d = DensePoly::from_coeffs(vec![
            Rational::zero(),
            Rational::zero(),
            Rational::from_int(5),
            Rational::from_int(-1),
        ]);
        assert_eq!(d.low_order(), Some(2));
        let s = d.shift_down(2);
        assert_eq!(s.coeffs().len(), 2);
        assert_eq!(s.eval(&Rational::zero()), Rational::from_int(5));
    }
}
