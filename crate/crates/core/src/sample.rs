//! Seeded random instance generation for verification campaigns.
//!
//! Coefficients, evaluation points, and knots are drawn with numerators in
//! [-bound, bound] and denominators in [1, bound] (default bound 9), which
//! keeps big-integer growth small while exercising non-integer paths.
//! Instances violating a pole or distinctness constraint are regenerated
//! whole, up to a fixed attempt budget.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::interp::KnotSet;
use crate::melzak::{GeneralizedInstance, MelzakInstance};
use crate::poly::Polynomial;
use crate::rational::Rational;

const MAX_ATTEMPTS: u32 = 1000;

/// A deterministic instance source. ChaCha8 is a fixed published stream
/// cipher, so identical seeds reproduce identical campaigns on every
/// platform.
pub struct InstanceSampler {
    rng: ChaCha8Rng,
    coefficient_bound: i64,
}

impl InstanceSampler {
    pub fn new(seed: u64, coefficient_bound: i64) -> Self {
        assert!(coefficient_bound >= 1);
        InstanceSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            coefficient_bound,
        }
    }

    pub fn rational(&mut self) -> Rational {
        let bound = self.coefficient_bound;
        let numerator = self.rng.gen_range(-bound..=bound);
        let denominator = self.rng.gen_range(1..=bound);
        Rational::new(numerator, denominator)
    }

    fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// A random polynomial with degree <= max_degree (leading coefficient
    /// forced nonzero at the drawn degree).
    pub fn polynomial(&mut self, max_degree: u32) -> Polynomial {
        let degree = self.rng.gen_range(0..=max_degree);
        let mut coeffs: Vec<Rational> = (0..degree).map(|_| self.rational()).collect();
        coeffs.push(self.nonzero_rational());
        Polynomial::new(coeffs)
    }

    /// A random single-pole instance with degree(f) <= n <= max_n.
    pub fn melzak_instance(&mut self, max_n: u32) -> Result<MelzakInstance> {
        for _ in 0..MAX_ATTEMPTS {
            let n = self.rng.gen_range(0..=max_n);
            let f = self.polynomial(n);
            let x = self.rational();
            let y = self.rational();
            if let Ok(inst) = MelzakInstance::new(f, x, y, n) {
                return Ok(inst);
            }
        }
        Err(Error::SamplingExhausted {
            attempts: MAX_ATTEMPTS,
        })
    }

    /// A random multi-pole instance with degree(f) <= n + j, n <= max_n,
    /// j <= max_j.
    pub fn generalized_instance(&mut self, max_n: u32, max_j: u32) -> Result<GeneralizedInstance> {
        for _ in 0..MAX_ATTEMPTS {
            let n = self.rng.gen_range(0..=max_n);
            let j = self.rng.gen_range(0..=max_j);
            let f = self.polynomial(n + j);
            let knots: Vec<Rational> = (0..=j).map(|_| self.rational()).collect();
            let y = self.rational();
            let Ok(knots) = KnotSet::new(knots) else {
                continue;
            };
            if let Ok(inst) = GeneralizedInstance::new(f, knots, y, n) {
                return Ok(inst);
            }
        }
        Err(Error::SamplingExhausted {
            attempts: MAX_ATTEMPTS,
        })
    }
}
