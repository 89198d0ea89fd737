//! Both sides of Melzak's identity and its multi-pole generalization,
//! plus exact verification reporting.
//!
//! The single-pole identity states, for every polynomial f of degree <= n,
//!
//!   f(x + y) = x * C(x+n, n) * sum_{k=0..n} (-1)^k C(n,k) f(y-k) / (x+k),
//!
//! provided x avoids the poles -0, -1, ..., -n. The generalization replaces
//! x + k by a product of distinct linear factors (x_i + k) and holds up to
//! degree n + j.

use serde::Serialize;

use crate::binom::{binomial_general, binomial_integer};
use crate::error::{Error, Result};
use crate::interp::KnotSet;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// A single-pole instance (f, x, y, n) with x outside {0, -1, ..., -n}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MelzakInstance {
    pub f: Polynomial,
    pub x: Rational,
    pub y: Rational,
    pub n: u32,
}

impl MelzakInstance {
    /// Checks the pole constraints: x + k != 0 for k = 0..n. This also rules
    /// out x = 0 and a vanishing C(x+n, n), so the closed form is defined.
    pub fn new(f: Polynomial, x: Rational, y: Rational, n: u32) -> Result<Self> {
        check_pole_free(&x, 0, n)?;
        debug_assert!(!binomial_general(&(&x + &Rational::from(n)), n).is_zero());
        Ok(MelzakInstance { f, x, y, n })
    }
}

/// A multi-pole instance with pairwise-distinct knots, each outside
/// {0, -1, ..., -n}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralizedInstance {
    pub f: Polynomial,
    pub knots: KnotSet,
    pub y: Rational,
    pub n: u32,
}

impl GeneralizedInstance {
    pub fn new(f: Polynomial, knots: KnotSet, y: Rational, n: u32) -> Result<Self> {
        for (i, x) in knots.knots().iter().enumerate() {
            check_pole_free(x, i, n)?;
        }
        Ok(GeneralizedInstance { f, knots, y, n })
    }

    /// Number of extra degrees of freedom: j, with knots x_0..x_j.
    pub fn j(&self) -> u32 {
        (self.knots.len() - 1) as u32
    }
}

fn check_pole_free(x: &Rational, knot_index: usize, n: u32) -> Result<()> {
    for k in 0..=n {
        if (x + &Rational::from(k)).is_zero() {
            return Err(Error::Pole {
                knot_index,
                knot: x.clone(),
                k,
            });
        }
    }
    Ok(())
}

/// One verification outcome. `holds` is exact-zero residual, never a
/// tolerance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IdentityReport {
    pub kind: ReportKind,
    pub instance: InstanceEcho,
    pub lhs: Rational,
    pub rhs: Rational,
    pub residual: Rational,
    pub holds: bool,
    pub degree_bound: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Melzak,
    Generalized,
}

impl std::fmt::Display for ReportKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReportKind::Melzak => write!(f, "melzak"),
            ReportKind::Generalized => write!(f, "generalized"),
        }
    }
}

/// Input echo in the text formats used by the CLI.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InstanceEcho {
    pub f: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub knots: Option<String>,
    pub y: String,
    pub n: u32,
}

impl From<&MelzakInstance> for InstanceEcho {
    fn from(inst: &MelzakInstance) -> Self {
        InstanceEcho {
            f: inst.f.to_string(),
            x: Some(inst.x.to_string()),
            knots: None,
            y: inst.y.to_string(),
            n: inst.n,
        }
    }
}

impl From<&GeneralizedInstance> for InstanceEcho {
    fn from(inst: &GeneralizedInstance) -> Self {
        InstanceEcho {
            f: inst.f.to_string(),
            x: None,
            knots: Some(inst.knots.to_string()),
            y: inst.y.to_string(),
            n: inst.n,
        }
    }
}

/// The alternating sum S = sum_{k=0..n} (-1)^k C(n,k) f(y-k) / (x+k).
pub fn melzak_sum(inst: &MelzakInstance) -> Result<Rational> {
    check_pole_free(&inst.x, 0, inst.n)?;
    let mut sum = Rational::zero();
    for k in 0..=inst.n {
        let k_rat = Rational::from(k);
        let mut term = Rational::from_bigint(binomial_integer(inst.n, k))
            * inst.f.eval(&(&inst.y - &k_rat))
            / (&inst.x + &k_rat);
        if k % 2 == 1 {
            term = -term;
        }
        sum = sum + term;
    }
    Ok(sum)
}

/// x * C(x+n, n) * S — equals f(x+y) exactly whenever degree(f) <= n.
pub fn melzak_closed_form(inst: &MelzakInstance) -> Result<Rational> {
    let prefactor = &inst.x * &binomial_general(&(&inst.x + &Rational::from(inst.n)), inst.n);
    Ok(prefactor * melzak_sum(inst)?)
}

/// sum_{k=0..n} (-1)^k C(n,k) / (x+k), the scalar engine of the elementary
/// proof. Equals 1 / (x * C(x+n, n)).
pub fn reciprocal_beta_sum(x: &Rational, n: u32) -> Result<Rational> {
    let one = Polynomial::constant(Rational::one());
    let inst = MelzakInstance::new(one, x.clone(), Rational::zero(), n)?;
    melzak_sum(&inst)
}

/// Compares f(x+y) against the closed form. `holds` is guaranteed when
/// degree(f) <= n.
pub fn verify_melzak(inst: &MelzakInstance) -> Result<IdentityReport> {
    let lhs = inst.f.eval(&(&inst.x + &inst.y));
    let rhs = melzak_closed_form(inst)?;
    let residual = &lhs - &rhs;
    Ok(IdentityReport {
        kind: ReportKind::Melzak,
        instance: inst.into(),
        holds: residual.is_zero(),
        lhs,
        rhs,
        residual,
        degree_bound: inst.n,
    })
}

/// sum_{k=0..n} (-1)^k C(n,k) f(y-k) / prod_i (x_i + k).
pub fn generalized_lhs(inst: &GeneralizedInstance) -> Result<Rational> {
    let mut sum = Rational::zero();
    for k in 0..=inst.n {
        let k_rat = Rational::from(k);
        let mut denom = Rational::one();
        for (i, x) in inst.knots.knots().iter().enumerate() {
            let factor = x + &k_rat;
            if factor.is_zero() {
                return Err(Error::Pole {
                    knot_index: i,
                    knot: x.clone(),
                    k,
                });
            }
            denom = denom * factor;
        }
        let mut term = Rational::from_bigint(binomial_integer(inst.n, k))
            * inst.f.eval(&(&inst.y - &k_rat))
            / denom;
        if k % 2 == 1 {
            term = -term;
        }
        sum = sum + term;
    }
    Ok(sum)
}

/// sum_i f(y + x_i) / (x_i * C(x_i+n, n) * prod_{nu != i} (x_nu - x_i)).
pub fn generalized_rhs(inst: &GeneralizedInstance) -> Result<Rational> {
    let mut sum = Rational::zero();
    for (i, x_i) in inst.knots.knots().iter().enumerate() {
        let beta = x_i * &binomial_general(&(x_i + &Rational::from(inst.n)), inst.n);
        if beta.is_zero() {
            return Err(Error::Pole {
                knot_index: i,
                knot: x_i.clone(),
                k: 0,
            });
        }
        let cross = inst
            .knots
            .knots()
            .iter()
            .enumerate()
            .filter(|(nu, _)| *nu != i)
            .fold(Rational::one(), |acc, (_, x_nu)| acc * (x_nu - x_i));
        sum = sum + inst.f.eval(&(&inst.y + x_i)) / (beta * cross);
    }
    Ok(sum)
}

/// Compares both sides of the generalization. `holds` is guaranteed when
/// degree(f) <= n + j.
pub fn verify_generalized(inst: &GeneralizedInstance) -> Result<IdentityReport> {
    let lhs = generalized_lhs(inst)?;
    let rhs = generalized_rhs(inst)?;
    let residual = &lhs - &rhs;
    Ok(IdentityReport {
        kind: ReportKind::Generalized,
        instance: inst.into(),
        holds: residual.is_zero(),
        lhs,
        rhs,
        residual,
        degree_bound: inst.n + inst.j(),
    })
}
