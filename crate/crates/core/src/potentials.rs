//! Radial pair potentials with an optional hard core, and the temperedness
//! integrals
//!
//! ```text
//! C(beta) = int |e^{-beta phi(|x|)} - 1| d^d x
//! R(beta) = |B| r^d + beta int_{|y| > r} |phi(|y|)| d^d y
//! ```
//!
//! The core contributes exactly `V_d r^d` to `C` (the integrand is 1 there)
//! and is never sampled. Tails are integrated by adaptive Simpson, split at
//! their breakpoints, with unbounded tails mapped onto `(0, 1]`.

use std::f64::consts::PI;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::quadrature::{adaptive_simpson, piecewise, semi_infinite, Integral, Tolerance};
use crate::{Error, Result};

/// Which coefficient multiplies `r^d` in `R(beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BallConvention {
    /// Unit-ball volume `V_d = pi^{d/2} / Gamma(d/2 + 1)`, so that `R = C`
    /// for a pure hard core.
    #[default]
    Volume,
    /// Unit-sphere surface area `S_{d-1} = 2 pi^{d/2} / Gamma(d/2)`.
    Surface,
}

impl FromStr for BallConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "volume" => Ok(Self::Volume),
            "surface" => Ok(Self::Surface),
            other => Err(Error::argument(format!(
                "unknown ball convention `{other}` (expected volume|surface)"
            ))),
        }
    }
}

/// `Gamma(d/2)` for a positive integer `d`.
fn gamma_half(d: u32) -> f64 {
    let (mut g, mut x) = if d.is_multiple_of(2) {
        (1.0, 1.0)
    } else {
        (PI.sqrt(), 0.5)
    };
    let target = f64::from(d) / 2.0;
    while x < target {
        g *= x;
        x += 1.0;
    }
    g
}

/// Surface area of the unit sphere in `R^d`.
pub fn unit_sphere_area(d: u32) -> f64 {
    2.0 * PI.powf(f64::from(d) / 2.0) / gamma_half(d)
}

/// Volume of the unit ball in `R^d`.
pub fn unit_ball_volume(d: u32) -> f64 {
    unit_sphere_area(d) / f64::from(d)
}

/// Interaction outside the hard core.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Tail {
    /// Pure hard core.
    #[default]
    None,
    /// `phi = -epsilon` for `r < s < lambda r`, 0 beyond.
    SquareWell { epsilon: f64, lambda: f64 },
    /// `phi = c / s^p`.
    InversePower { c: f64, p: f64 },
    /// Samples `(r_i, phi_i)` joined by a monotone cubic; zero beyond `cutoff`.
    Tabulated {
        r: Vec<f64>,
        phi: Vec<f64>,
        cutoff: f64,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PotentialSpec {
    dim: u32,
    core_radius: f64,
    #[serde(default)]
    tail: Tail,
    #[serde(rename = "B", default)]
    stability_b: f64,
}

/// Central pair potential in `d` dimensions; immutable once built.
#[derive(Debug, Clone)]
pub struct RadialPotential {
    dim: u32,
    core_radius: f64,
    tail: Tail,
    stability_b: f64,
    spline: Option<MonotoneCubic>,
}

impl RadialPotential {
    pub fn new(dim: u32, core_radius: f64, tail: Tail, stability_b: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::argument("dimension must be >= 1"));
        }
        if !(core_radius.is_finite() && core_radius >= 0.0) {
            return Err(Error::argument(format!(
                "core radius must be >= 0, got {core_radius}"
            )));
        }
        if !(stability_b.is_finite() && stability_b >= 0.0) {
            return Err(Error::argument(format!(
                "B must be >= 0, got {stability_b}"
            )));
        }
        let mut spline = None;
        match &tail {
            Tail::None => {}
            Tail::SquareWell { epsilon, lambda } => {
                if !(epsilon.is_finite() && *epsilon > 0.0) {
                    return Err(Error::argument("square well depth must be > 0"));
                }
                if !(lambda.is_finite() && *lambda > 1.0) {
                    return Err(Error::argument(
                        "square well range factor lambda must be > 1",
                    ));
                }
                if core_radius == 0.0 {
                    return Err(Error::argument("square well needs a positive core radius"));
                }
            }
            Tail::InversePower { c, p } => {
                if !c.is_finite() || !p.is_finite() {
                    return Err(Error::argument("inverse power parameters must be finite"));
                }
                if *p <= f64::from(dim) {
                    return Err(Error::Divergent(format!(
                        "inverse power tail with p = {p} <= dim = {dim} is not integrable"
                    )));
                }
            }
            Tail::Tabulated { r, phi, cutoff } => {
                if !(cutoff.is_finite() && *cutoff > core_radius) {
                    return Err(Error::argument(
                        "tabulated cutoff must exceed the core radius",
                    ));
                }
                let table = MonotoneCubic::new(r, phi)?;
                if r[0] > core_radius {
                    return Err(Error::argument(format!(
                        "tabulated tail starts at {} but must cover the core radius {core_radius}",
                        r[0]
                    )));
                }
                if r[r.len() - 1] < *cutoff {
                    return Err(Error::argument(format!(
                        "final tabulated sample {} must lie beyond the cutoff {cutoff}",
                        r[r.len() - 1]
                    )));
                }
                spline = Some(table);
            }
        }
        Ok(Self {
            dim,
            core_radius,
            tail,
            stability_b,
            spline,
        })
    }

    pub fn hard_sphere(dim: u32, radius: f64) -> Result<Self> {
        Self::new(dim, radius, Tail::None, 0.0)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: PotentialSpec = serde_json::from_str(text)?;
        Self::new(spec.dim, spec.core_radius, spec.tail, spec.stability_b)
    }

    pub fn to_json(&self) -> String {
        let spec = PotentialSpec {
            dim: self.dim,
            core_radius: self.core_radius,
            tail: self.tail.clone(),
            stability_b: self.stability_b,
        };
        serde_json::to_string(&spec).expect("potential spec serialises")
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn core_radius(&self) -> f64 {
        self.core_radius
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn stability_b(&self) -> f64 {
        self.stability_b
    }

    /// `phi(s)` for `s` outside the core; `+inf` inside it.
    pub fn phi(&self, s: f64) -> f64 {
        if s < self.core_radius {
            return f64::INFINITY;
        }
        match &self.tail {
            Tail::None => 0.0,
            Tail::SquareWell { epsilon, lambda } => {
                if s < lambda * self.core_radius {
                    -epsilon
                } else {
                    0.0
                }
            }
            Tail::InversePower { c, p } => c / s.powf(*p),
            Tail::Tabulated { cutoff, .. } => {
                if s > *cutoff {
                    0.0
                } else {
                    self.spline.as_ref().expect("validated").eval(s)
                }
            }
        }
    }

    fn core_volume(&self) -> f64 {
        unit_ball_volume(self.dim) * self.core_radius.powi(self.dim as i32)
    }

    /// Integrate `g(phi(s)) s^{d-1}` over `s > r`, split at the tail's
    /// breakpoints.
    fn tail_integral(&self, g: impl Fn(f64) -> f64, tol: Tolerance) -> Result<Integral> {
        let d1 = self.dim as i32 - 1;
        let r = self.core_radius;
        let radial = |s: f64| g(self.phi(s)) * s.powi(d1);
        let integral = match &self.tail {
            Tail::None => Integral::default(),
            Tail::SquareWell { epsilon, lambda } => {
                let inside = g(-epsilon);
                adaptive_simpson(|s| inside * s.powi(d1), r, lambda * r, tol)
            }
            Tail::InversePower { .. } => {
                if r > 0.0 {
                    semi_infinite(radial, r, tol)
                } else {
                    adaptive_simpson(radial, 0.0, 1.0, tol) + semi_infinite(radial, 1.0, tol)
                }
            }
            Tail::Tabulated {
                r: knots, cutoff, ..
            } => {
                let mut points = vec![r];
                points.extend(knots.iter().copied().filter(|&k| k > r && k < *cutoff));
                points.push(*cutoff);
                piecewise(radial, &points, tol)
            }
        };
        Ok(Integral {
            value: unit_sphere_area(self.dim) * integral.value,
            error: unit_sphere_area(self.dim) * integral.error,
            depth_limited: integral.depth_limited,
        })
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta.is_finite() && beta > 0.0 {
        Ok(())
    } else {
        Err(Error::argument(format!(
            "beta must be finite and > 0, got {beta}"
        )))
    }
}

/// `C(beta)` with its quadrature error estimate.
pub fn compute_c(pot: &RadialPotential, beta: f64) -> Result<Integral> {
    compute_c_with(pot, beta, Tolerance::default())
}

pub fn compute_c_with(pot: &RadialPotential, beta: f64, tol: Tolerance) -> Result<Integral> {
    check_beta(beta)?;
    if let Tail::InversePower { c, .. } = pot.tail {
        if pot.core_radius == 0.0 && c < 0.0 {
            return Err(Error::Divergent(
                "attractive inverse power without a hard core: C(beta) diverges at the origin"
                    .into(),
            ));
        }
    }
    let tail = pot.tail_integral(|phi| (-beta * phi).exp_m1().abs(), tol)?;
    let value = pot.core_volume() + tail.value;
    if !value.is_finite() {
        return Err(Error::Divergent("C(beta) is not finite".into()));
    }
    Ok(Integral { value, ..tail })
}

/// `R(beta)` with its quadrature error estimate.
pub fn compute_r(pot: &RadialPotential, beta: f64, convention: BallConvention) -> Result<Integral> {
    compute_r_with(pot, beta, convention, Tolerance::default())
}

pub fn compute_r_with(
    pot: &RadialPotential,
    beta: f64,
    convention: BallConvention,
    tol: Tolerance,
) -> Result<Integral> {
    check_beta(beta)?;
    if matches!(pot.tail, Tail::InversePower { .. }) && pot.core_radius == 0.0 {
        return Err(Error::Divergent(
            "inverse power tail without a hard core: R(beta) diverges at the origin".into(),
        ));
    }
    let coefficient = match convention {
        BallConvention::Volume => unit_ball_volume(pot.dim),
        BallConvention::Surface => unit_sphere_area(pot.dim),
    };
    let core = coefficient * pot.core_radius.powi(pot.dim as i32);
    let tail = pot.tail_integral(f64::abs, tol)?;
    Ok(Integral {
        value: core + beta * tail.value,
        error: beta * tail.error,
        depth_limited: tail.depth_limited,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TemperResult {
    #[serde(rename = "C")]
    pub c_beta: f64,
    #[serde(rename = "C_err")]
    pub c_err: f64,
    #[serde(rename = "R")]
    pub r_beta: f64,
    #[serde(rename = "R_err")]
    pub r_err: f64,
}

pub fn tempered(
    pot: &RadialPotential,
    beta: f64,
    convention: BallConvention,
) -> Result<TemperResult> {
    let c = compute_c(pot, beta)?;
    let r = compute_r(pot, beta, convention)?;
    Ok(TemperResult {
        c_beta: c.value,
        c_err: c.error,
        r_beta: r.value,
        r_err: r.error,
    })
}

/// Monotone piecewise-cubic Hermite interpolant (Fritsch–Carlson slopes).
#[derive(Debug, Clone)]
struct MonotoneCubic {
    x: Vec<f64>,
    y: Vec<f64>,
    slope: Vec<f64>,
}

impl MonotoneCubic {
    fn new(x: &[f64], y: &[f64]) -> Result<Self> {
        if x.len() != y.len() || x.len() < 2 {
            return Err(Error::argument(
                "tabulated tail needs >= 2 samples of r and phi",
            ));
        }
        if x.iter().chain(y).any(|v| !v.is_finite()) {
            return Err(Error::argument("tabulated samples must be finite"));
        }
        if x.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::argument(
                "tabulated radii must be strictly increasing",
            ));
        }
        let n = x.len();
        let secant: Vec<f64> = (0..n - 1)
            .map(|i| (y[i + 1] - y[i]) / (x[i + 1] - x[i]))
            .collect();
        let mut slope = vec![0.0; n];
        slope[0] = secant[0];
        slope[n - 1] = secant[n - 2];
        for i in 1..n - 1 {
            slope[i] = if secant[i - 1] * secant[i] <= 0.0 {
                0.0
            } else {
                0.5 * (secant[i - 1] + secant[i])
            };
        }
        for i in 0..n - 1 {
            if secant[i] == 0.0 {
                slope[i] = 0.0;
                slope[i + 1] = 0.0;
                continue;
            }
            let alpha = slope[i] / secant[i];
            let beta = slope[i + 1] / secant[i];
            let norm = alpha * alpha + beta * beta;
            if norm > 9.0 {
                let tau = 3.0 / norm.sqrt();
                slope[i] = tau * alpha * secant[i];
                slope[i + 1] = tau * beta * secant[i];
            }
        }
        Ok(Self {
            x: x.to_vec(),
            y: y.to_vec(),
            slope,
        })
    }

    fn eval(&self, s: f64) -> f64 {
        let n = self.x.len();
        let i = match self.x.partition_point(|&xi| xi <= s) {
            0 => 0,
            k if k >= n => n - 2,
            k => k - 1,
        };
        let h = self.x[i + 1] - self.x[i];
        let t = (s - self.x[i]) / h;
        let (t2, t3) = (t * t, t * t * t);
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.y[i]
            + h10 * h * self.slope[i]
            + h01 * self.y[i + 1]
            + h11 * h * self.slope[i + 1]
    }
}
