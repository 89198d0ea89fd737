//! Exact arbitrary-precision rational scalars.
//!
//! `Rational` is the universal scalar of the crate: every identity is stated
//! and verified over it. Values are always in canonical reduced form with a
//! positive denominator, so equality is structural and results are
//! reproducible bit for bit.
//!
//! Text format: `"p/q"` or `"p"` with an optional leading minus and no
//! whitespace. This is the format used by the CLI and all JSON reports.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;

/// An exact rational number in canonical reduced form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        Rational(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// The exact rational represented by a finite binary64 value.
    pub fn from_f64_exact(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(Rational)
    }

    /// Rounds to the nearest binary64, ties to even. This is the single
    /// rounding step through which exact values enter float computations.
    pub fn to_f64_nearest(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let negative = self.is_negative();
        let a = self.0.numer().magnitude();
        let b = self.0.denom().magnitude();
        let magnitude = round_ratio_to_f64(a, b);
        if negative {
            -magnitude
        } else {
            magnitude
        }
    }
}

/// Round-to-nearest-even of the positive ratio a/b.
fn round_ratio_to_f64(a: &BigUint, b: &BigUint) -> f64 {
    // a/b lies in [2^(e-1), 2^(e+1)) for e = bits(a) - bits(b).
    let e = a.bits() as i64 - b.bits() as i64;

    // Take 55 or 56 leading bits of the quotient so the 53-bit mantissa can
    // be rounded with a guard bit and a sticky remainder.
    let shift = 55 - e;
    let (num, den) = if shift >= 0 {
        (a << shift as u64, b.clone())
    } else {
        (a.clone(), b << (-shift) as u64)
    };
    let (q, r) = num.div_rem(&den);
    let qbits = q.bits() as i64;
    debug_assert!(qbits == 55 || qbits == 56);

    let drop = (qbits - 53) as u64;
    let (mantissa, pow) = round_mantissa(&q, drop, !r.is_zero(), e - 55 + drop as i64);

    // Biased exponent of mantissa * 2^pow with mantissa in [2^52, 2^53).
    let biased = pow + 1075;
    if biased > 2046 {
        return f64::INFINITY;
    }
    if biased <= 0 {
        return subnormal_ratio_to_f64(a, b);
    }
    f64::from_bits(((biased as u64) << 52) | (mantissa & ((1u64 << 52) - 1)))
}

/// Rounds the low `drop` bits of `q` away, nearest-even with a sticky bit.
/// Returns a 53-bit mantissa and the adjusted power of two.
fn round_mantissa(q: &BigUint, drop: u64, sticky: bool, pow: i64) -> (u64, i64) {
    let kept = u64::try_from(q >> drop).expect("53-bit mantissa");
    let low = u64::try_from(q & ((BigUint::one() << drop) - 1u32)).expect("dropped bits");
    let half = 1u64 << (drop - 1);
    let round_up = low > half || (low == half && (sticky || kept & 1 == 1));
    let mut mantissa = kept + round_up as u64;
    let mut pow = pow;
    if mantissa == 1u64 << 53 {
        mantissa >>= 1;
        pow += 1;
    }
    (mantissa, pow)
}

/// Values below the normal range round at the fixed scale 2^-1074.
fn subnormal_ratio_to_f64(a: &BigUint, b: &BigUint) -> f64 {
    let (q, r) = (a << 1074u64).div_rem(b);
    let floor = u64::try_from(&q).expect("subnormal magnitude");
    let twice_frac = (&r << 1u64).cmp(b);
    let round_up = match twice_frac {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Equal => floor & 1 == 1,
        std::cmp::Ordering::Less => false,
    };
    // floor + 1 may land on the smallest normal; the bit pattern is still right.
    f64::from_bits(floor + round_up as u64)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({})", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::ParseRational {
            input: s.to_string(),
        };
        if s.is_empty() || s.contains(char::is_whitespace) || s.contains('+') {
            return Err(err());
        }
        let mut parts = s.split('/');
        let numer_text = parts.next().ok_or_else(err)?;
        let numerator: BigInt = numer_text.parse().map_err(|_| err())?;
        let denominator: BigInt = match parts.next() {
            None => BigInt::one(),
            Some(denom_text) => {
                if parts.next().is_some() || denom_text.starts_with('-') {
                    return Err(err());
                }
                let d: BigInt = denom_text.parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                d
            }
        };
        Ok(Rational(BigRational::new(numerator, denominator)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from(n as i64)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from(n as i64)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        &self / rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["0", "7", "-3", "1/2", "-22/7", "5/3"] {
            assert_eq!(rat(text).to_string(), text);
        }
        // non-canonical inputs normalize
        assert_eq!(rat("4/6").to_string(), "2/3");
        assert_eq!(rat("-4/2").to_string(), "-2");
    }

    #[test]
    fn parse_rejects_malformed() {
        for text in ["", "1//3", "1/0", "1 /2", "+3", "1/-2", "a", "1/2/3"] {
            assert!(text.parse::<Rational>().is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn arithmetic_is_canonical() {
        let a = rat("1/6");
        let b = rat("1/3");
        assert_eq!(&a + &b, rat("1/2"));
        assert_eq!(&a - &b, rat("-1/6"));
        assert_eq!(&a * &b, rat("1/18"));
        assert_eq!(&a / &b, rat("1/2"));
        assert_eq!(-&b, rat("-1/3"));
        assert_eq!(rat("2/4"), rat("1/2"));
    }

    #[test]
    fn to_f64_exact_on_dyadic() {
        for value in [0.0, 1.0, -1.5, 0.375, 2.0_f64.powi(-40), 1e300, -3.25e-200] {
            let r = Rational::from_f64_exact(value).unwrap();
            assert_eq!(r.to_f64_nearest(), value);
        }
    }

    #[test]
    fn to_f64_rounds_to_nearest() {
        assert_eq!(rat("1/3").to_f64_nearest(), 1.0 / 3.0);
        assert_eq!(rat("2/3").to_f64_nearest(), 2.0 / 3.0);
        assert_eq!(rat("1/10").to_f64_nearest(), 0.1);
        assert_eq!(rat("-1/7").to_f64_nearest(), -1.0 / 7.0);
        // ties round to even: 2^53 + 1 is exactly between neighbors
        let tie = Rational::from_bigint(BigInt::from((1u64 << 53) + 1));
        assert_eq!(tie.to_f64_nearest(), 9007199254740992.0);
    }

    #[test]
    fn to_f64_range_edges() {
        let big = Rational::from_bigint(BigInt::from(2).pow(1100u32));
        assert_eq!(big.to_f64_nearest(), f64::INFINITY);
        assert_eq!((-big).to_f64_nearest(), f64::NEG_INFINITY);
        let tiny = Rational::from_bigint(BigInt::from(2).pow(1100u32))
            .recip()
            .unwrap();
        assert_eq!(tiny.to_f64_nearest(), 0.0);
        let min_sub = Rational::from_bigint(BigInt::from(2).pow(1074u32))
            .recip()
            .unwrap();
        assert_eq!(min_sub.to_f64_nearest(), f64::from_bits(1));
    }
}
