//! Floating-point cancellation lab.
//!
//! Measures what happens when the alternating sum side of the identity is
//! evaluated in binary64 instead of exactly. Every exact rational is rounded
//! to binary64 exactly once, at the point it enters float computation, so
//! the reports isolate cancellation from input-representation error and are
//! bit-reproducible.

use serde::Serialize;

use crate::binom::{binomial_general, binomial_integer};
use crate::error::{Error, Result};
use crate::melzak::{melzak_closed_form, InstanceEcho, MelzakInstance};
use crate::rational::Rational;

/// One stability measurement for a single instance.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct FloatReport {
    pub instance: InstanceEcho,
    /// Reserved; fixed to "binary64" in v1.
    pub precision: &'static str,
    pub direct_value: f64,
    pub compensated_value: f64,
    pub closed_form_value: f64,
    pub exact_value: Rational,
    pub rel_err_direct: f64,
    pub rel_err_compensated: f64,
    pub rel_err_closed: f64,
    pub condition_number: f64,
}

/// The exact sum terms (-1)^k C(n,k) f(y-k) / (x+k), plus the exact
/// prefactor x * C(x+n, n).
fn exact_terms(inst: &MelzakInstance) -> (Vec<Rational>, Rational) {
    let terms = (0..=inst.n)
        .map(|k| {
            let k_rat = Rational::from(k);
            let mut term = Rational::from_bigint(binomial_integer(inst.n, k))
                * inst.f.eval(&(&inst.y - &k_rat))
                / (&inst.x + &k_rat);
            if k % 2 == 1 {
                term = -term;
            }
            term
        })
        .collect();
    let prefactor = &inst.x * &binomial_general(&(&inst.x + &Rational::from(inst.n)), inst.n);
    (terms, prefactor)
}

/// Rounds each exact quantity once, then forms each term in binary64:
/// sign * C(n,k) * f(y-k) / (x+k).
fn float_terms(inst: &MelzakInstance) -> Result<Vec<f64>> {
    (0..=inst.n)
        .map(|k| {
            let k_rat = Rational::from(k);
            let binom = Rational::from_bigint(binomial_integer(inst.n, k)).to_f64_nearest();
            let sample = inst.f.eval(&(&inst.y - &k_rat)).to_f64_nearest();
            let denom = (&inst.x + &k_rat).to_f64_nearest();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let term = sign * binom * sample / denom;
            if term.is_infinite() {
                return Err(Error::OverflowToInfinity { k });
            }
            Ok(term)
        })
        .collect()
}

fn float_prefactor(inst: &MelzakInstance) -> Result<f64> {
    let x = inst.x.to_f64_nearest();
    let binom = binomial_general(&(&inst.x + &Rational::from(inst.n)), inst.n).to_f64_nearest();
    let value = x * binom;
    if value.is_infinite() {
        return Err(Error::OverflowToInfinity { k: inst.n });
    }
    Ok(value)
}

/// Naive left-to-right accumulation, k = 0..n ascending, times the
/// prefactor x * C(x+n, n).
pub fn float_sum_direct(inst: &MelzakInstance) -> Result<f64> {
    let terms = float_terms(inst)?;
    let mut sum = 0.0;
    for (k, term) in terms.iter().enumerate() {
        sum += term;
        if sum.is_infinite() {
            return Err(Error::OverflowToInfinity { k: k as u32 });
        }
    }
    Ok(float_prefactor(inst)? * sum)
}

/// Kahan-compensated accumulation over the same float terms. Reduces
/// accumulation error, not cancellation: the terms themselves alternate and
/// can dwarf the result.
pub fn float_sum_compensated(inst: &MelzakInstance) -> Result<f64> {
    let terms = float_terms(inst)?;
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for (k, term) in terms.iter().enumerate() {
        let adjusted = term - compensation;
        let next = sum + adjusted;
        compensation = (next - sum) - adjusted;
        sum = next;
        if sum.is_infinite() {
            return Err(Error::OverflowToInfinity { k: k as u32 });
        }
    }
    Ok(float_prefactor(inst)? * sum)
}

/// The cancellation-free side: Horner evaluation of f at x + y, with each
/// coefficient and the point rounded once.
pub fn float_closed_form(inst: &MelzakInstance) -> f64 {
    let t = (&inst.x + &inst.y).to_f64_nearest();
    let mut acc = 0.0;
    for c in inst.f.coeffs().iter().rev() {
        acc = acc * t + c.to_f64_nearest();
    }
    acc
}

/// |float - exact| / |exact|, computed exactly, rounded once at the end.
fn relative_error(float_value: f64, exact: &Rational) -> f64 {
    let float_exact = Rational::from_f64_exact(float_value).expect("finite float");
    ((float_exact - exact.clone()).abs() / exact.abs()).to_f64_nearest()
}

/// Runs all three evaluation strategies against the exact reference.
///
/// Requires degree(f) <= n so that poly_eval(f, x+y) is pinned by the
/// identity; the exact closed form is recomputed and asserted equal before
/// any rounding. The exact value must be nonzero for relative errors to be
/// defined.
pub fn stability_report(inst: &MelzakInstance) -> Result<FloatReport> {
    if let Some(degree) = inst.f.degree() {
        if degree as u32 > inst.n {
            return Err(Error::DegreeTooHigh {
                degree,
                bound: inst.n,
            });
        }
    }
    let exact_value = inst.f.eval(&(&inst.x + &inst.y));
    let exact_closed = melzak_closed_form(inst)?;
    assert_eq!(
        exact_value, exact_closed,
        "exact sides of the identity disagree"
    );
    if exact_value.is_zero() {
        return Err(Error::ZeroExactValue);
    }

    let (terms, _) = exact_terms(inst);
    let abs_sum = terms.iter().fold(Rational::zero(), |acc, t| acc + t.abs());
    let term_sum = terms.iter().fold(Rational::zero(), |acc, t| acc + t);
    // term_sum is nonzero: prefactor * term_sum = exact_value != 0
    let condition_number = (abs_sum / term_sum.abs()).to_f64_nearest();

    let direct_value = float_sum_direct(inst)?;
    let compensated_value = float_sum_compensated(inst)?;
    let closed_form_value = float_closed_form(inst);

    Ok(FloatReport {
        instance: inst.into(),
        precision: "binary64",
        rel_err_direct: relative_error(direct_value, &exact_value),
        rel_err_compensated: relative_error(compensated_value, &exact_value),
        rel_err_closed: relative_error(closed_form_value, &exact_value),
        direct_value,
        compensated_value,
        closed_form_value,
        exact_value,
        condition_number,
    })
}

impl FloatReport {
    pub const CSV_HEADER: &'static str = "f,x,y,n,precision,direct_value,compensated_value,\
closed_form_value,exact_value,rel_err_direct,rel_err_compensated,rel_err_closed,condition_number";

    /// One CSV row matching [`Self::CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        format!(
            "\"{}\",{},{},{},{},{},{},{},{},{},{},{},{}",
            self.instance.f,
            self.instance.x.as_deref().unwrap_or(""),
            self.instance.y,
            self.instance.n,
            self.precision,
            self.direct_value,
            self.compensated_value,
            self.closed_form_value,
            self.exact_value,
            self.rel_err_direct,
            self.rel_err_compensated,
            self.rel_err_closed,
            self.condition_number
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn inst(f: &str, x: &str, y: &str, n: u32) -> MelzakInstance {
        MelzakInstance::new(
            f.parse::<Polynomial>().unwrap(),
            x.parse().unwrap(),
            y.parse().unwrap(),
            n,
        )
        .unwrap()
    }

    #[test]
    fn single_term_is_exact() {
        let i = inst("1", "1", "0", 0);
        assert_eq!(float_sum_direct(&i).unwrap(), 1.0);
        assert_eq!(float_sum_compensated(&i).unwrap(), 1.0);
        assert_eq!(float_closed_form(&i), 1.0);
        let report = stability_report(&i).unwrap();
        assert_eq!(report.rel_err_direct, 0.0);
        assert_eq!(report.rel_err_compensated, 0.0);
        assert_eq!(report.rel_err_closed, 0.0);
    }

    #[test]
    fn small_n_has_negligible_error() {
        let i = inst("0,0,1", "1", "0", 2);
        let ulp = f64::EPSILON;
        assert!((float_sum_direct(&i).unwrap() - 1.0).abs() <= 4.0 * ulp);
        assert!((float_sum_compensated(&i).unwrap() - 1.0).abs() <= 2.0 * ulp);
        assert_eq!(float_closed_form(&i), 1.0);
    }

    #[test]
    fn condition_number_example() {
        // terms 0, -1, 4/3: (0 + 1 + 4/3) / |1/3| = 7/3 / (1/3) = 7
        let report = stability_report(&inst("0,0,1", "1", "0", 2)).unwrap();
        assert_eq!(report.condition_number, 7.0);
    }

    #[test]
    fn closed_form_float_rounding() {
        let i = inst("0,1", "1/3", "1/7", 1);
        let expected: Rational = "10/21".parse().unwrap();
        assert_eq!(i.f.eval(&(&i.x + &i.y)), expected);
        assert_eq!(float_closed_form(&i), expected.to_f64_nearest());
    }

    #[test]
    fn cancellation_dominates_at_large_n() {
        let i = inst("1", "1/3", "0", 40);
        let report = stability_report(&i).unwrap();
        assert!(report.condition_number > 1e9);
        assert!(report.rel_err_direct > 1e3 * f64::EPSILON);
        // compensation cannot repair cancellation
        assert!(report.rel_err_compensated > 1e3 * f64::EPSILON);
        // the closed form is a constant here: exact in binary64
        assert_eq!(report.rel_err_closed, 0.0);
    }

    #[test]
    fn degree_and_zero_guards() {
        assert!(matches!(
            stability_report(&inst("0,0,1", "1", "0", 1)),
            Err(Error::DegreeTooHigh {
                degree: 2,
                bound: 1
            })
        ));
        // f(x+y) = 0 at x = 1, y = -1
        assert!(matches!(
            stability_report(&inst("0,1", "1", "-1", 1)),
            Err(Error::ZeroExactValue)
        ));
    }

    #[test]
    fn reports_are_deterministic() {
        let i = inst("2,-1/3,1/9", "5/7", "-2/3", 9);
        let a = stability_report(&i).unwrap();
        let b = stability_report(&i).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.direct_value.to_bits(), b.direct_value.to_bits());
    }
}
