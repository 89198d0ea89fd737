//! Lagrange interpolation in the omega / omega' form, the knot
//! specialization x_k = -k, and partial fractions over distinct linear
//! factors.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// An ordered list of pairwise-distinct interpolation knots x_0..x_j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnotSet {
    knots: Vec<Rational>,
}

impl KnotSet {
    pub fn new(knots: Vec<Rational>) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::EmptyKnots);
        }
        for (second, b) in knots.iter().enumerate().skip(1) {
            for (first, a) in knots.iter().enumerate().take(second) {
                if a == b {
                    return Err(Error::DuplicateKnot {
                        first,
                        second,
                        value: a.clone(),
                    });
                }
            }
        }
        Ok(KnotSet { knots })
    }

    /// Parses the comma-separated text format, e.g. `"1,2,5/2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let knots = text
            .split(',')
            .map(|part| part.parse())
            .collect::<Result<Vec<Rational>>>()?;
        KnotSet::new(knots)
    }

    pub fn knots(&self) -> &[Rational] {
        &self.knots
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: non-empty
    }

    /// The knots 0, -1, ..., -n used by the x_k = -k specialization.
    pub fn negated_range(n: u32) -> Self {
        KnotSet {
            knots: (0..=n).map(|k| -Rational::from(k)).collect(),
        }
    }
}

impl fmt::Display for KnotSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.knots {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

/// The monic node polynomial omega(x) = prod_nu (x - x_nu).
pub fn omega(knots: &KnotSet) -> Polynomial {
    let mut result = Polynomial::constant(Rational::one());
    for x in knots.knots() {
        let factor = Polynomial::new(vec![-x, Rational::one()]);
        result = &result * &factor;
    }
    result
}

/// omega'(x_i) = prod_{nu != i} (x_i - x_nu). Empty product = 1.
pub fn omega_prime_at(knots: &KnotSet, i: usize) -> Rational {
    let xi = &knots.knots()[i];
    knots
        .knots()
        .iter()
        .enumerate()
        .filter(|(nu, _)| *nu != i)
        .fold(Rational::one(), |acc, (_, x)| acc * (xi - x))
}

/// Evaluates the unique interpolating polynomial of degree <= j at t:
/// L(t) = omega(t) * sum_k values[k] / ((t - x_k) * omega'(x_k)).
///
/// At t equal to a knot the formula has a removable singularity; the stored
/// value is returned directly.
pub fn lagrange_eval(knots: &KnotSet, values: &[Rational], t: &Rational) -> Result<Rational> {
    if values.len() != knots.len() {
        return Err(Error::ValueCountMismatch {
            expected: knots.len(),
            got: values.len(),
        });
    }
    if let Some(i) = knots.knots().iter().position(|x| x == t) {
        return Ok(values[i].clone());
    }
    let omega_at_t = knots
        .knots()
        .iter()
        .fold(Rational::one(), |acc, x| acc * (t - x));
    let mut sum = Rational::zero();
    for (k, x_k) in knots.knots().iter().enumerate() {
        let denom = (t - x_k) * omega_prime_at(knots, k);
        sum = sum + &values[k] / &denom;
    }
    Ok(omega_at_t * sum)
}

/// Coefficient form of the interpolating polynomial via Newton divided
/// differences.
pub fn lagrange_coeffs(knots: &KnotSet, values: &[Rational]) -> Result<Polynomial> {
    if values.len() != knots.len() {
        return Err(Error::ValueCountMismatch {
            expected: knots.len(),
            got: values.len(),
        });
    }
    // divided-difference table, updated in place
    let mut table: Vec<Rational> = values.to_vec();
    let xs = knots.knots();
    for order in 1..xs.len() {
        for i in (order..xs.len()).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - order]);
        }
    }
    // accumulate sum_k table[k] * prod_{nu < k} (X - x_nu)
    let mut result = Polynomial::zero();
    let mut basis = Polynomial::constant(Rational::one());
    for (k, coeff) in table.iter().enumerate() {
        result = &result + &basis.scale(coeff);
        if k + 1 < xs.len() {
            basis = &basis * &Polynomial::new(vec![-&xs[k], Rational::one()]);
        }
    }
    Ok(result)
}

/// Residues of 1 / prod_nu (k + x_nu) over simple poles:
/// c_i = 1 / prod_{nu != i} (x_nu - x_i).
///
/// Note the sign convention prod (x_nu - x_i), which differs from
/// `omega_prime_at`'s prod (x_i - x_nu) by (-1)^j.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ResidueDecomposition {
    pub knots: Vec<Rational>,
    pub residues: Vec<Rational>,
}

pub fn partial_fractions(knots: &KnotSet) -> ResidueDecomposition {
    let residues = (0..knots.len())
        .map(|i| {
            let xi = &knots.knots()[i];
            let product = knots
                .knots()
                .iter()
                .enumerate()
                .filter(|(nu, _)| *nu != i)
                .fold(Rational::one(), |acc, (_, x)| acc * (x - xi));
            product
                .recip()
                .expect("distinct knots give nonzero product")
        })
        .collect();
    ResidueDecomposition {
        knots: knots.knots().to_vec(),
        residues,
    }
}

impl ResidueDecomposition {
    /// sum_i c_i / (k + x_i), defined away from the poles.
    pub fn eval(&self, k: &Rational) -> Result<Rational> {
        let mut sum = Rational::zero();
        for (i, (x, c)) in self.knots.iter().zip(&self.residues).enumerate() {
            let denom = k + x;
            if denom.is_zero() {
                return Err(Error::EvalPole {
                    knot_index: i,
                    point: k.clone(),
                });
            }
            sum = sum + c / &denom;
        }
        Ok(sum)
    }
}

/// Interpolation route to the identity: interpolate t -> f(t + y) at the knots
/// 0, -1, ..., -n and evaluate the interpolant at x.
///
/// Agrees exactly with the closed-form side x*C(x+n,n)*S of the identity for
/// every f of degree <= n.
pub fn melzak_via_lagrange(f: &Polynomial, x: &Rational, y: &Rational, n: u32) -> Result<Rational> {
    for k in 0..=n {
        if (x + &Rational::from(k)).is_zero() {
            return Err(Error::Pole {
                knot_index: 0,
                knot: x.clone(),
                k,
            });
        }
    }
    let knots = KnotSet::negated_range(n);
    let values: Vec<Rational> = (0..=n).map(|k| f.eval(&(y - &Rational::from(k)))).collect();
    lagrange_eval(&knots, &values, x)
}
