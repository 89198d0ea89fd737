//! Exact verification of Melzak's identity, its multi-pole generalization,
//! and the supporting machinery: rational arithmetic, dense polynomials,
//! generalized binomials, finite differences, Lagrange interpolation, and
//! partial fractions. A floating-point lab quantifies the catastrophic
//! cancellation that the identity's closed form avoids.
//!
//! All identity verification is exact: `holds` means the residual is the
//! rational zero, never "small".

pub mod binom;
pub mod campaign;
pub mod diff;
pub mod error;
pub mod floatlab;
pub mod interp;
pub mod melzak;
pub mod poly;
pub mod rational;
pub mod sample;

pub use binom::binomial_general;
pub use campaign::{run_campaign, CampaignConfig, CampaignMode, CampaignSummary};
pub use diff::alternating_difference;
pub use error::{Error, Result};
pub use floatlab::{
    float_closed_form, float_sum_compensated, float_sum_direct, stability_report, FloatReport,
};
pub use interp::{
    lagrange_coeffs, lagrange_eval, melzak_via_lagrange, omega, omega_prime_at, partial_fractions,
    KnotSet, ResidueDecomposition,
};
pub use melzak::{
    generalized_lhs, generalized_rhs, melzak_closed_form, melzak_sum, reciprocal_beta_sum,
    verify_generalized, verify_melzak, GeneralizedInstance, IdentityReport, InstanceEcho,
    MelzakInstance, ReportKind,
};
pub use poly::Polynomial;
pub use rational::Rational;
pub use sample::InstanceSampler;
