//! The alternating finite-difference functional of order n.

use crate::binom::binomial_integer;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// sum_{k=0..n} (-1)^k C(n,k) p(k).
///
/// Annihilates every polynomial of degree < n; at degree exactly n it equals
/// (-1)^n n! times the leading coefficient.
pub fn alternating_difference(p: &Polynomial, n: u32) -> Rational {
    let mut sum = Rational::zero();
    for k in 0..=n {
        let mut term = Rational::from_bigint(binomial_integer(n, k)) * p.eval(&Rational::from(k));
        if k % 2 == 1 {
            term = -term;
        }
        sum = sum + term;
    }
    sum
}
