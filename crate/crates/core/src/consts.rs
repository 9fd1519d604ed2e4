//! Directed rational stand-ins for the irrational constants of the domain.
//!
//! pi is never stored as a float on certifying paths. Domination checks use
//! a rational upper bound of pi^2/4 (domination with a larger c^2 is strictly
//! stronger); interval endpoints use directed rational bounds of pi/2.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::rational::Rational;

/// 100 decimal digits of pi, used to seed enclosures with outward rounding.
pub const PI_DIGITS: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798";

fn pow10(e: u32) -> BigInt {
    BigInt::from(10).pow(e)
}

/// Rational lower bound of pi/2 (truncated at 20 decimal places).
pub fn half_pi_lo() -> Rational {
    Rational::new(BigInt::from_str("157079632679489661923").unwrap(), pow10(20))
}

/// Rational upper bound of pi/2.
pub fn half_pi_hi() -> Rational {
    Rational::new(BigInt::from_str("157079632679489661924").unwrap(), pow10(20))
}

/// Rational lower bound of pi^2/4.
pub fn pi_sq_over_4_lo() -> Rational {
    Rational::new(BigInt::from_str("246740110027233965470").unwrap(), pow10(20))
}

/// Rational upper bound of pi^2/4; the default c^2 for domination checks.
pub fn pi_sq_over_4_hi() -> Rational {
    Rational::new(BigInt::from_str("246740110027233965471").unwrap(), pow10(20))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_are_ordered_and_consistent() {
        assert!(half_pi_lo() < half_pi_hi());
        assert!(pi_sq_over_4_lo() < pi_sq_over_4_hi());
        // (pi/2 lower)^2 < pi^2/4 lower bound band upper; cross-check the two pairs
        let lo2 = half_pi_lo().pow(2).unwrap();
        let hi2 = half_pi_hi().pow(2).unwrap();
        assert!(lo2 < pi_sq_over_4_hi());
        assert!(hi2 > pi_sq_over_4_lo());
    }
}
