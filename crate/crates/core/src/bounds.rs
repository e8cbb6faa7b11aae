//! Virial-coefficient and convergence-radius bounds.
//!
//! Starting from cluster bounds `|n b_n| <= a n^{n-1}/n! b^n`, the density
//! satisfies `|rho| >= r(s) = s (e^{-s} (1 + ab)/b - a)` on the circle
//! `b|z| = s e^{-s}`. The maximum over `s in (0, ln(1 + 1/(ab)))` sits at
//! `s = 1 - W(mu)` with `mu = e ab/(1 + ab)`, where it equals
//! `a (W(mu) - 1)^2 / W(mu)`. That value is the radius lower bound, and its
//! reciprocal is the geometric base of the coefficient bound
//! `|c_n| <= (beta^{-1}/n) base^{n-1}`.
//!
//! The corollary presets only choose `(a, b)`; the Morais–Procacci and
//! classical Lebowitz–Penrose evaluators are kept alongside for comparison.

use std::f64::consts::E;

use serde::Serialize;

use crate::lambertw::lambert_w0;
use crate::optimize::{golden_section_max, maximize_unimodal, refine_max, Maximum};
use crate::{Error, Result};

/// Constant in the asymptotic Morais–Procacci coefficient base.
pub const MP_ASYMPTOTIC_CONSTANT: f64 = 0.24026;

/// Parameters `(a, b)` of the assumed cluster bound at inverse temperature
/// `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundParams {
    pub a: f64,
    pub b: f64,
    pub beta: f64,
}

impl BoundParams {
    pub fn new(a: f64, b: f64, beta: f64) -> Result<Self> {
        if !(a.is_finite() && a >= 0.0 && b.is_finite() && b >= 0.0) {
            return Err(Error::argument(format!(
                "a and b must be finite and >= 0 (a={a}, b={b})"
            )));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::argument(format!(
                "beta must be finite and > 0, got {beta}"
            )));
        }
        if !(a * b).is_finite() {
            return Err(Error::argument("a*b overflows"));
        }
        Ok(Self { a, b, beta })
    }

    pub fn ab(&self) -> f64 {
        self.a * self.b
    }

    fn require_positive(&self) -> Result<()> {
        if self.a == 0.0 || self.b == 0.0 {
            return Err(Error::Degenerate(format!(
                "a = {} and b = {} must both be positive (mu = 0 makes the bound singular)",
                self.a, self.b
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Finite,
    /// The radius bound is 0 (the `ab -> infinity` limit) and the
    /// coefficient base is infinite.
    Vanishing,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundResult {
    /// Argument of W, in `(0, e]`.
    pub mu: f64,
    /// `W(mu)`, in `(0, 1]`.
    pub w: f64,
    /// Base raised to `n - 1` in the coefficient bound.
    pub coeff_base: f64,
    pub radius_lower: f64,
    pub rho_lower: f64,
    pub beta: f64,
    pub status: BoundStatus,
}

impl BoundResult {
    /// Bound on `|beta c_n|`: `base^{n-1} / n`.
    pub fn scaled_coefficient_bound(&self, n: u32) -> f64 {
        assert!(n >= 1, "virial coefficients start at n = 1");
        if n == 1 {
            return 1.0;
        }
        self.coeff_base.powi(n as i32 - 1) / f64::from(n)
    }

    /// Bound on `|c_n|`: `(beta^{-1}/n) base^{n-1}`.
    pub fn coefficient_bound(&self, n: u32) -> f64 {
        self.scaled_coefficient_bound(n) / self.beta
    }

    fn from_radius(mu: f64, w: f64, radius: f64, beta: f64) -> Self {
        let status = if radius > 0.0 {
            BoundStatus::Finite
        } else {
            BoundStatus::Vanishing
        };
        BoundResult {
            mu,
            w,
            coeff_base: if radius > 0.0 {
                1.0 / radius
            } else {
                f64::INFINITY
            },
            radius_lower: radius,
            rho_lower: radius,
            beta,
            status,
        }
    }
}

/// `mu`, `W(mu)` and `(W(mu) - 1)^2 / W(mu)` as functions of `ab`.
#[derive(Debug, Clone, Copy)]
struct WFactor {
    mu: f64,
    w: f64,
    value: f64,
}

fn w_factor(ab: f64) -> WFactor {
    if ab.is_infinite() {
        return WFactor {
            mu: E,
            w: 1.0,
            value: 0.0,
        };
    }
    let mu = E / (1.0 + 1.0 / ab);
    let w = lambert_w0(mu).expect("mu lies in (0, e]");
    if w <= 0.5 {
        return WFactor {
            mu,
            w,
            value: (w - 1.0).powi(2) / w,
        };
    }
    // Near mu = e the difference W - 1 cancels; solve for s = 1 - W directly
    // from ln(1 - s) - s + ln(1 + 1/(ab)) = 0.
    let target = (1.0 / ab).ln_1p();
    let mut s = 1.0 - w;
    for _ in 0..6 {
        let h = (-s).ln_1p() - s + target;
        let dh = -1.0 / (1.0 - s) - 1.0;
        let next = s - h / dh;
        if next == s {
            break;
        }
        s = next;
    }
    let w = 1.0 - s;
    WFactor {
        mu,
        w,
        value: s * s / w,
    }
}

fn bound_from_ab(a: f64, ab: f64, beta: f64) -> BoundResult {
    let factor = w_factor(ab);
    BoundResult::from_radius(factor.mu, factor.w, a * factor.value, beta)
}

/// General bound: `mu = e ab/(1+ab)`, radius `a (W(mu)-1)^2/W(mu)`.
pub fn general_bound(params: &BoundParams) -> Result<BoundResult> {
    params.require_positive()?;
    Ok(bound_from_ab(params.a, params.ab(), params.beta))
}

/// Upper end `ln(1 + 1/(ab))` of the interval where the profile is positive.
pub fn profile_upper_limit(params: &BoundParams) -> Result<f64> {
    params.require_positive()?;
    Ok((1.0 / params.ab()).ln_1p())
}

/// The density lower bound `r(s) = s (e^{-s} (1+ab)/b - a)` on the circle
/// `b|z| = s e^{-s}`, for `s` in `[0, ln(1 + 1/(ab))]`.
pub fn rho_lower_profile(params: &BoundParams, s: f64) -> Result<f64> {
    let upper = profile_upper_limit(params)?;
    if !(s >= 0.0 && s <= upper) {
        return Err(Error::Range(format!("s = {s} outside [0, {upper}]")));
    }
    Ok(profile_unchecked(params.a, upper, s))
}

// (1+ab)/(ab) e^{-s} - 1 = expm1(ln(1 + 1/(ab)) - s)
fn profile_unchecked(a: f64, upper: f64, s: f64) -> f64 {
    s * a * (upper - s).exp_m1()
}

/// Numeric maximisation of [`rho_lower_profile`]; returns `(s*, r(s*))`.
pub fn maximize_rho_lower(params: &BoundParams) -> Result<(f64, f64)> {
    let upper = profile_upper_limit(params)?;
    let eps = 1e-12f64.min(upper * 1e-6);
    let m = maximize_unimodal(|s| profile_unchecked(params.a, upper, s), eps, upper - eps);
    Ok((m.x, m.value))
}

/// Inputs of the corollary presets: `beta`, the stability constant `B`, and
/// the temperedness integrals `C(beta)`, `R(beta)` when known.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorollaryInput {
    pub beta: f64,
    pub stability_b: f64,
    pub c_beta: Option<f64>,
    pub r_beta: Option<f64>,
}

impl CorollaryInput {
    pub fn new(beta: f64, stability_b: f64) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::argument(format!(
                "beta must be finite and > 0, got {beta}"
            )));
        }
        if !(stability_b.is_finite() && stability_b >= 0.0) {
            return Err(Error::argument(format!(
                "B must be finite and >= 0, got {stability_b}"
            )));
        }
        Ok(Self {
            beta,
            stability_b,
            c_beta: None,
            r_beta: None,
        })
    }

    pub fn with_c(mut self, c_beta: f64) -> Self {
        self.c_beta = Some(c_beta);
        self
    }

    pub fn with_r(mut self, r_beta: f64) -> Self {
        self.r_beta = Some(r_beta);
        self
    }

    pub fn beta_b(&self) -> f64 {
        self.beta * self.stability_b
    }

    pub fn c(&self) -> Result<f64> {
        positive(self.c_beta, "C(beta)")
    }

    pub fn r(&self) -> Result<f64> {
        positive(self.r_beta, "R(beta)")
    }
}

fn positive(v: Option<f64>, name: &str) -> Result<f64> {
    match v {
        Some(x) if x.is_finite() && x > 0.0 => Ok(x),
        Some(x) => Err(Error::argument(format!(
            "{name} must be finite and > 0, got {x}"
        ))),
        None => Err(Error::argument(format!("{name} is required"))),
    }
}

/// `(a, b)` of the improved Lebowitz–Penrose preset:
/// `a = C^{-1} e^{-4 beta B}`, `b = e^{2 beta B} C`.
pub fn improved_lp_params(input: &CorollaryInput) -> Result<BoundParams> {
    let c = input.c()?;
    let x = input.beta_b();
    BoundParams::new((-4.0 * x).exp() / c, (2.0 * x).exp() * c, input.beta)
}

/// `(a, b)` of the tree-graph preset: `a = R^{-1}`, `b = R e^{beta B}`.
pub fn pu_params(input: &CorollaryInput) -> Result<BoundParams> {
    let r = input.r()?;
    BoundParams::new(1.0 / r, r * input.beta_b().exp(), input.beta)
}

/// Improved Lebowitz–Penrose bound, `ab = e^{-2 beta B}`.
pub fn improved_lp_bound(input: &CorollaryInput) -> Result<BoundResult> {
    let c = input.c()?;
    let x = input.beta_b();
    Ok(bound_from_ab(
        (-4.0 * x).exp() / c,
        (-2.0 * x).exp(),
        input.beta,
    ))
}

/// Bound from the tree-graph cluster estimates, `ab = e^{beta B}`.
pub fn pu_bound(input: &CorollaryInput) -> Result<BoundResult> {
    let r = input.r()?;
    Ok(bound_from_ab(1.0 / r, input.beta_b().exp(), input.beta))
}

/// Classical Lebowitz–Penrose bound
/// `C^{-1} 2/(1 + e^{2 beta B}) (W(e/2) - 1)^2 / W(e/2)`.
pub fn classic_lp_bound(input: &CorollaryInput) -> Result<BoundResult> {
    let c = input.c()?;
    let half = w_factor(1.0);
    let radius = lp_temperature_factor(input.beta_b()) * half.value / c;
    Ok(BoundResult::from_radius(
        half.mu, half.w, radius, input.beta,
    ))
}

fn lp_temperature_factor(beta_b: f64) -> f64 {
    2.0 / (1.0 + (2.0 * beta_b).exp())
}

/// Result of the Morais–Procacci maximisation over `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MpF {
    pub u: f64,
    pub alpha_star: f64,
    #[serde(rename = "F")]
    pub f: f64,
}

fn mp_objective(u: f64, alpha: f64) -> f64 {
    let v = -u * (-alpha).exp_m1();
    v.ln_1p() / (u * alpha.exp() * (1.0 + v))
}

/// `F(u) = max_{alpha > 0} ln(1 + u(1 - e^{-alpha})) / (u e^alpha (1 + u(1 - e^{-alpha})))`
/// for `u = e^{2 beta B} >= 1`.
pub fn mp_f(u: f64) -> Result<MpF> {
    if !(u.is_finite() && u >= 1.0) {
        return Err(Error::argument(format!(
            "mp_F needs finite u >= 1, got {u}"
        )));
    }
    // search in t = ln(alpha); the bracket grows while the maximum sits on an edge
    let objective = |t: f64| mp_objective(u, t.exp());
    let (mut lo, mut hi) = (1e-6f64.ln(), 50f64.ln());
    let mut best = golden_section_max(objective, lo, hi, 1e-9 * (hi - lo));
    for _ in 0..64 {
        let edge = 1e-6 * (hi - lo);
        if best.x >= hi - edge && hi < 700f64.ln() {
            hi += std::f64::consts::LN_2;
        } else if best.x <= lo + edge && lo > -700.0 {
            lo -= 4.0 * std::f64::consts::LN_2;
        } else {
            break;
        }
        best = golden_section_max(objective, lo, hi, 1e-9 * (hi - lo));
    }
    let Maximum { x, value } = refine_max(objective, best, 2e-6 * (hi - lo), lo, hi);
    Ok(MpF {
        u,
        alpha_star: x.exp(),
        f: value,
    })
}

/// Bound on the coefficient of `rho^{k+1}` in the free energy:
/// `(1/(k+1) + (e^{a*} - 1) e^{a* k}) e^{2 beta B (k-1)} (k+1)^k/k! C^k`.
pub fn mp_free_energy_coeff_bound(k: u32, input: &CorollaryInput, alpha_star: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::argument("k must be >= 1"));
    }
    if !(alpha_star.is_finite() && alpha_star > 0.0) {
        return Err(Error::argument(format!(
            "alpha* must be > 0, got {alpha_star}"
        )));
    }
    let c = input.c()?;
    let kf = f64::from(k);
    let prefactor = 1.0 / (kf + 1.0) + alpha_star.exp_m1() * (alpha_star * kf).exp();
    let growth = (2.0 * input.beta_b() * (kf - 1.0)).exp();
    // (k+1)^k / k! as a running product of (k+1)/j
    let tree = (1..=k).fold(1.0, |acc, j| acc * (kf + 1.0) / f64::from(j));
    Ok(prefactor * growth * tree * c.powi(k as i32))
}

/// Geometric base `e^{2 beta B} C / 0.24026` of the asymptotic
/// Morais–Procacci virial bound (the prefactor is not modelled).
pub fn mp_asymptotic_base(input: &CorollaryInput) -> Result<f64> {
    let c = input.c()?;
    Ok((2.0 * input.beta_b()).exp() * c / MP_ASYMPTOTIC_CONSTANT)
}

/// Temperature factors of the radius bounds with `C = R = 1`, as functions
/// of `beta B` alone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonFactors {
    pub beta_b: f64,
    /// Improved Lebowitz–Penrose.
    pub r1: f64,
    /// Classical Lebowitz–Penrose.
    pub r2: f64,
    pub f1: f64,
    /// Tree-graph bound.
    pub f2: f64,
}

impl ComparisonFactors {
    pub fn r1_over_r2(&self) -> f64 {
        self.r1 / self.r2
    }

    pub fn f1_over_f2(&self) -> f64 {
        self.f1 / self.f2
    }
}

pub fn comparison_factors(beta_b: f64) -> Result<ComparisonFactors> {
    if !(beta_b.is_finite() && beta_b >= 0.0) {
        return Err(Error::argument(format!(
            "betaB must be finite and >= 0, got {beta_b}"
        )));
    }
    let r1 = (-4.0 * beta_b).exp() * w_factor((-2.0 * beta_b).exp()).value;
    let r2 = lp_temperature_factor(beta_b) * w_factor(1.0).value;
    let f2 = w_factor(beta_b.exp()).value;
    Ok(ComparisonFactors {
        beta_b,
        r1,
        r2,
        f1: r1,
        f2,
    })
}
