//! Generalized binomial coefficients.
//!
//! `C(x, n)` with a rational upper argument is defined by the degree-n
//! falling-factorial product divided by n!, which stays exact over the
//! rationals; no Gamma function is involved.

use num::bigint::BigInt;

use crate::rational::Rational;

/// C(x, n) = prod_{i=1..n} (x - i + 1) / i, empty product = 1.
///
/// For integer x >= n this is the ordinary binomial coefficient.
pub fn binomial_general(x: &Rational, n: u32) -> Rational {
    let mut result = Rational::one();
    for i in 1..=n {
        let factor = (x - &Rational::from(i - 1)) / Rational::from(i);
        result = result * factor;
    }
    result
}

/// Ordinary C(n, k) as an exact integer, zero when k > n.
pub fn binomial_integer(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num::integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// n! as an exact integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}
