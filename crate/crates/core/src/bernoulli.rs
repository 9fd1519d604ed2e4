//! Bernoulli numbers by the defining recurrence, exact and memoized.
//!
//! Second convention, B_1 = -1/2. Only |B_{2k}| is consumed downstream,
//! so the convention is observationally irrelevant, but it is fixed here
//! for testability. Growth is single-writer behind a mutex; readers always
//! see a consistent prefix.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;

static TABLE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// B_n, exactly. sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1 rearranged as
/// B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1, j) B_j.
pub fn bernoulli(n: u32) -> Rational {
    let mut table = TABLE.lock().unwrap();
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= n as usize {
        let m = table.len(); // computing B_m
        let mut sum = Rational::zero();
        // C(m+1, j) built incrementally
        let mut binom = BigInt::one();
        for (j, b) in table.iter().enumerate() {
            if j > 0 {
                binom = &binom * BigInt::from(m + 2 - j) / BigInt::from(j);
            }
            if !b.is_zero() {
                sum += &(Rational::from_int(binom.clone()) * b);
            }
        }
        let next = -sum / Rational::from_int(m as i64 + 1);
        table.push(next);
    }
    table[n as usize].clone()
}

/// |B_{2k}|, the magnitude consumed by the cosec/cotan coefficient rules.
pub fn bernoulli_abs_even(k: u32) -> Rational {
    bernoulli(2 * k).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_integer::binomial;

    /// Independent oracle: the defining recurrence evaluated directly with
    /// library binomials, no shared table.
    fn bernoulli_oracle(upto: usize) -> Vec<Rational> {
        let mut b = vec![Rational::one()];
        for n in 1..=upto {
            let mut sum = Rational::zero();
            for (j, bj) in b.iter().enumerate() {
                let c = binomial(BigInt::from(n + 1), BigInt::from(j));
                sum += &(Rational::from_int(c) * bj);
            }
            b.push(-sum / Rational::from_int(n as i64 + 1));
        }
        b
    }

    #[test]
    fn small_values_match_oracle() {
        let oracle = bernoulli_oracle(20);
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), Rational::new(-1, 2));
        assert_eq!(bernoulli(4), Rational::new(-1, 30));
        assert_eq!(bernoulli(6), Rational::new(1, 42));
        for n in 0..=20 {
            assert_eq!(bernoulli(n as u32), oracle[n], "B_{n}");
        }
    }

    #[test]
    fn odd_values_vanish() {
        for k in 1..=25 {
            assert!(bernoulli(2 * k + 1).is_zero(), "B_{} should be 0", 2 * k + 1);
        }
    }

    #[test]
    fn recurrence_identity_holds_up_to_200() {
        // sum_{j=0}^{n} C(n+1,j) B_j = 0 for 1 <= n <= 200
        bernoulli(200);
        for n in 1..=200u32 {
            let mut sum = Rational::zero();
            let mut binom = BigInt::one();
            for j in 0..=n {
                if j > 0 {
                    binom = &binom * BigInt::from(n + 2 - j) / BigInt::from(j);
                }
                sum += &(Rational::from_int(binom.clone()) * bernoulli(j));
            }
            assert!(sum.is_zero(), "recurrence fails at n={n}");
        }
    }

    #[test]
    fn even_magnitudes_positive_and_dominating() {
        // |B_{2k}|(2^{2k} - 2) >= 0 and 3|B_{2k}|(2^{2k} - 2) > 1 for 2 <= k <= 100
        for k in 2..=100u32 {
            let m = bernoulli_abs_even(k) * Rational::from_int(BigInt::from(2).pow(2 * k) - 2);
            assert!(m.is_positive());
            let three_m = Rational::from_int(3) * m;
            assert!(three_m > Rational::one(), "3|B_{{2k}}|(4^k-2) <= 1 at k={k}");
        }
        // boundary: equal to 1 at k = 1
        let k1 = Rational::from_int(3) * bernoulli_abs_even(1) * Rational::from_int(2);
        assert_eq!(k1, Rational::one());
    }
}
