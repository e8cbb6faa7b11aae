//! Rigorous bounds on virial coefficients and on the radius of convergence
//! of the virial expansion, derived from cluster-expansion bounds of the form
//! `|n b_n| <= a n^{n-1}/n! b^n`.
//!
//! The crate is organised bottom-up:
//!
//! - [`lambertw`]: principal real branch of the Lambert W-function.
//! - [`series`]: truncated power series over exact rationals or `f64`,
//!   with composition, reversion and Lagrange inversion.
//! - [`optimize`] and [`quadrature`]: golden-section maximisation and
//!   adaptive Simpson integration used by the modules below.
//! - [`bounds`]: the closed-form bounds and the numeric maximisers that
//!   confirm them.
//! - [`potentials`]: radial pair potentials and the temperedness integrals
//!   `C(beta)` and `R(beta)`.
//! - [`mayer`] and [`verify`]: brute-force Mayer integrals, exactly solvable
//!   models and the end-to-end domination checks.
//! - [`sweep`], [`emit`] and [`cli`]: comparison sweeps, CSV/JSON/SVG output
//!   and the `virial` command line.

pub mod bounds;
pub mod cli;
pub mod emit;
mod error;
pub mod lambertw;
pub mod mayer;
pub mod optimize;
pub mod potentials;
pub mod quadrature;
pub mod series;
pub mod sweep;
pub mod verify;

pub use bounds::{
    classic_lp_bound, comparison_factors, general_bound, improved_lp_bound, maximize_rho_lower,
    mp_asymptotic_base, mp_f, mp_free_energy_coeff_bound, pu_bound, rho_lower_profile, BoundParams,
    BoundResult, BoundStatus, ComparisonFactors, CorollaryInput,
};
pub use error::{Error, Result};
pub use lambertw::lambert_w0;
pub use potentials::{compute_c, compute_r, BallConvention, RadialPotential, TemperResult};
pub use series::{Coefficient, PowerSeries};
