//! End-to-end checks: cluster series of solvable models are turned into
//! virial series by reverting the density series and composing, then every
//! bound family is checked against the resulting coefficients.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bounds::{classic_lp_bound, improved_lp_bound, pu_bound, CorollaryInput};
use crate::mayer::{hard_sphere_b2, hard_sphere_b3, McConfig, McEstimate};
use crate::potentials::{compute_c, compute_r, BallConvention, RadialPotential};
use crate::series::{compose, format_float, revert, Coefficient, PowerSeries};
use crate::{Error, Result};

/// Temperedness data a model needs for the corollary bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Temperedness {
    pub beta: f64,
    pub c_beta: f64,
    pub r_beta: f64,
    pub stability_b: f64,
}

#[derive(Debug, Clone)]
pub struct ModelSeries<T> {
    pub name: String,
    /// `b_0 = 0, b_1, .., b_N` of `beta P = sum b_n z^n`.
    pub b: PowerSeries<T>,
    /// Known `beta c_n`, when the model is exactly solvable.
    pub exact_c: Option<PowerSeries<T>>,
    pub temper: Option<Temperedness>,
    pub monte_carlo: Option<McEstimate>,
}

/// Ideal gas: `beta P = z = rho`.
pub fn ideal_gas(order: usize) -> Result<ModelSeries<BigRational>> {
    let x = PowerSeries::identity(order)?;
    Ok(ModelSeries {
        name: "ideal".into(),
        b: x.clone(),
        exact_c: Some(x),
        temper: Some(Temperedness {
            beta: 1.0,
            c_beta: 0.0,
            r_beta: 0.0,
            stability_b: 0.0,
        }),
        monte_carlo: None,
    })
}

/// Hard rods of length `sigma` in one dimension:
/// `b_n = n^{n-1} (-sigma)^{n-1} / n!` and `beta P = rho / (1 - sigma rho)`,
/// so `beta c_n = sigma^{n-1}`. `C = R = 2 sigma`, `B = 0`.
pub fn tonks(sigma: &BigRational, order: usize) -> Result<ModelSeries<BigRational>> {
    if !sigma.is_positive() {
        return Err(Error::argument("sigma must be > 0"));
    }
    if order == 0 {
        return Err(Error::argument("order must be >= 1"));
    }
    let mut b = vec![BigRational::zero(); order + 1];
    let mut c = vec![BigRational::zero(); order + 1];
    let mut factorial = BigInt::one();
    let neg_sigma = -sigma.clone();
    for n in 1..=order {
        factorial *= BigInt::from(n);
        let nn = BigRational::from_integer(BigInt::from(n).pow(n as u32 - 1));
        b[n] = nn * pow_q(&neg_sigma, n - 1) / BigRational::from_integer(factorial.clone());
        c[n] = pow_q(sigma, n - 1);
    }
    let length = Coefficient::to_f64(sigma);
    Ok(ModelSeries {
        name: "tonks".into(),
        b: PowerSeries::new(b)?,
        exact_c: Some(PowerSeries::new(c)?),
        temper: Some(Temperedness {
            beta: 1.0,
            c_beta: 2.0 * length,
            r_beta: 2.0 * length,
            stability_b: 0.0,
        }),
        monte_carlo: None,
    })
}

fn pow_q(q: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * q.clone())
}

/// Hard spheres in three dimensions through `n = 3`: `b_2` by quadrature,
/// `b_3` by seeded quasi-Monte Carlo. Temperedness from the potentials
/// module.
pub fn hard_sphere(sigma: f64, mc: McConfig) -> Result<ModelSeries<f64>> {
    if !(sigma.is_finite() && sigma > 0.0) {
        return Err(Error::argument("sigma must be > 0"));
    }
    let b3 = hard_sphere_b3(sigma, mc)?;
    let pot = RadialPotential::hard_sphere(3, sigma)?;
    let beta = 1.0;
    Ok(ModelSeries {
        name: "hard-sphere".into(),
        b: PowerSeries::new(vec![0.0, 1.0, hard_sphere_b2(3, sigma), b3.value])?,
        exact_c: None,
        temper: Some(Temperedness {
            beta,
            c_beta: compute_c(&pot, beta)?.value,
            r_beta: compute_r(&pot, beta, BallConvention::Volume)?.value,
            stability_b: 0.0,
        }),
        monte_carlo: Some(b3),
    })
}

fn check_cluster_series<T: Coefficient>(b: &PowerSeries<T>, order: usize) -> Result<()> {
    if order == 0 || b.order() < order {
        return Err(Error::argument(format!(
            "need 1 <= order <= {} (cluster series order)",
            b.order()
        )));
    }
    if !b.coeff(0).is_zero() {
        return Err(Error::argument("cluster series must have b_0 = 0"));
    }
    if b.coeff(1).is_zero() {
        return Err(Error::argument(
            "b_1 = 0: the density series cannot be inverted",
        ));
    }
    Ok(())
}

fn density_series<T: Coefficient>(b: &PowerSeries<T>, order: usize) -> PowerSeries<T> {
    let coeffs = b.coeffs()[..=order]
        .iter()
        .enumerate()
        .map(|(n, c)| c.clone() * T::from_i64(n as i64))
        .collect();
    PowerSeries::new(coeffs).expect("nonempty")
}

/// `beta P` as a series in `rho`: revert `rho(z) = sum n b_n z^n`, then
/// substitute `z(rho)` into `sum b_n z^n`.
pub fn virial_from_cluster<T: Coefficient>(
    b: &PowerSeries<T>,
    order: usize,
) -> Result<PowerSeries<T>> {
    check_cluster_series(b, order)?;
    let z_of_rho = revert(&density_series(b, order), order)?;
    compose(&b.truncate(order)?, &z_of_rho)
}

/// Same series by Lagrange–Bürmann. With `rho = z psi(z)` and
/// `d(beta P)/dz = psi`, `[rho^n] beta P = (1/n) [z^{n-1}] psi^{1-n}`.
pub fn virial_via_lagrange<T: Coefficient>(
    b: &PowerSeries<T>,
    order: usize,
) -> Result<PowerSeries<T>> {
    check_cluster_series(b, order)?;
    let psi = density_series(b, order).shift_down()?;
    let inv = psi.reciprocal()?;
    let mut out = vec![T::zero(); order + 1];
    let mut power = PowerSeries::constant(T::one(), psi.order());
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        *slot = power.coeff(n - 1).clone() / T::from_i64(n as i64);
        power = power.mul(&inv);
    }
    PowerSeries::new(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundFamily {
    ImprovedLp,
    Pu,
    ClassicLp,
}

impl BoundFamily {
    pub const ALL: [BoundFamily; 3] = [
        BoundFamily::ImprovedLp,
        BoundFamily::Pu,
        BoundFamily::ClassicLp,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BoundFamily::ImprovedLp => "LP-improved",
            BoundFamily::Pu => "PU",
            BoundFamily::ClassicLp => "classic-LP",
        }
    }

    /// Geometric base of the `|beta c_n|` bound. Zero temperedness data is
    /// the ideal-gas limit, where the base tends to 0.
    pub fn coeff_base(self, t: &Temperedness) -> Result<f64> {
        let input = CorollaryInput::new(t.beta, t.stability_b)?;
        let (integral, result) = match self {
            BoundFamily::ImprovedLp => (t.c_beta, improved_lp_bound(&input.with_c(t.c_beta))),
            BoundFamily::Pu => (t.r_beta, pu_bound(&input.with_r(t.r_beta))),
            BoundFamily::ClassicLp => (t.c_beta, classic_lp_bound(&input.with_c(t.c_beta))),
        };
        if integral == 0.0 {
            return Ok(0.0);
        }
        Ok(result?.coeff_base)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DominationRow {
    pub n: usize,
    /// `beta c_n` as text (exact where available).
    pub coefficient: String,
    pub value: f64,
    pub bounds: Vec<(BoundFamily, f64)>,
    /// Smallest `bound / |beta c_n|` over the families.
    pub margin: f64,
    pub dominated: bool,
    pub strict: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DominationReport {
    pub model: String,
    pub order: usize,
    pub rows: Vec<DominationRow>,
    /// Whether the reverted cluster series reproduces the known coefficients.
    pub consistent: bool,
}

impl DominationReport {
    pub fn all_dominated(&self) -> bool {
        self.rows.iter().all(|r| r.dominated)
    }

    /// Domination is strict for every `n >= 2`; at `n = 1` both sides are 1.
    pub fn strict_beyond_first(&self) -> bool {
        self.rows.iter().filter(|r| r.n >= 2).all(|r| r.strict)
    }

    pub fn passed(&self) -> bool {
        self.consistent && self.all_dominated()
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "model: {}  order: {}", self.model, self.order);
        let _ = write!(out, "{:>3}  {:>24}", "n", "beta*c_n");
        for f in BoundFamily::ALL {
            let _ = write!(out, "  {:>24}", f.label());
        }
        let _ = writeln!(out, "  {:>24}", "margin");
        for row in &self.rows {
            let _ = write!(out, "{:>3}  {:>24}", row.n, row.coefficient);
            for (_, b) in &row.bounds {
                let _ = write!(out, "  {:>24}", format_float(*b));
            }
            let _ = writeln!(out, "  {:>24}", format_float(row.margin));
        }
        let _ = writeln!(
            out,
            "consistent: {}  dominated: {}",
            self.consistent,
            self.all_dominated()
        );
        out
    }
}

/// Check `|beta c_n| <= base^{n-1}/n` for every family and `n <= order`.
///
/// Known coefficients are checked when the model has them (and the
/// reverted cluster series must reproduce them); otherwise the computed
/// ones are. Comparisons run in the coefficient field, so they are exact in
/// rational mode.
pub fn check_bound_domination<T: Coefficient>(
    model: &ModelSeries<T>,
    order: usize,
) -> Result<DominationReport> {
    let temper = model
        .temper
        .ok_or_else(|| Error::Config(format!("model `{}` has no temperedness data", model.name)))?;
    let computed = virial_from_cluster(&model.b, order)?;
    let (coeffs, consistent) = match &model.exact_c {
        Some(exact) => {
            let exact = exact.truncate(order)?;
            let consistent = exact
                .coeffs()
                .iter()
                .zip(computed.coeffs())
                .all(|(e, c)| coefficients_agree(e, c));
            (exact, consistent)
        }
        None => (computed, true),
    };

    let bases: Vec<(BoundFamily, f64)> = BoundFamily::ALL
        .iter()
        .map(|&f| f.coeff_base(&temper).map(|b| (f, b)))
        .collect::<Result<_>>()?;

    let rows = (1..=order)
        .map(|n| {
            let c = coeffs.coeff(n);
            let abs = c.abs();
            let value = c.to_f64();
            let mut dominated = true;
            let mut strict = true;
            let mut margin = f64::INFINITY;
            let mut bounds = Vec::with_capacity(bases.len());
            for &(family, base) in &bases {
                let bound = if n == 1 {
                    1.0
                } else {
                    base.powi(n as i32 - 1) / n as f64
                };
                let exact_bound = T::from_f64(bound);
                // an infinite bound dominates everything
                if let Some(eb) = exact_bound {
                    dominated &= abs <= eb;
                    strict &= abs < eb;
                }
                if value != 0.0 {
                    margin = margin.min(bound / value.abs());
                }
                bounds.push((family, bound));
            }
            DominationRow {
                n,
                coefficient: if T::EXACT {
                    c.to_text()
                } else {
                    format_float(value)
                },
                value,
                bounds,
                margin,
                dominated,
                strict,
            }
        })
        .collect();

    Ok(DominationReport {
        model: model.name.clone(),
        order,
        rows,
        consistent,
    })
}

fn coefficients_agree<T: Coefficient>(a: &T, b: &T) -> bool {
    if T::EXACT {
        a == b
    } else {
        let (x, y) = (a.to_f64(), b.to_f64());
        (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClusterRow {
    pub n: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClusterCheckReport {
    pub a: f64,
    pub b: f64,
    pub rows: Vec<ClusterRow>,
}

impl ClusterCheckReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// Check the hypothesis `|n b_n| <= a n^{n-1}/n! b^n` for `n <= order`, in
/// the model's coefficient field.
pub fn cluster_bound_check<T: Coefficient>(
    model: &ModelSeries<T>,
    a: f64,
    b: f64,
    order: usize,
) -> Result<ClusterCheckReport> {
    if order > model.b.order() {
        return Err(Error::argument(format!(
            "order {order} exceeds the cluster series order {}",
            model.b.order()
        )));
    }
    let (Some(qa), Some(qb)) = (T::from_f64(a), T::from_f64(b)) else {
        return Err(Error::argument("a and b must be finite"));
    };
    let mut rows = Vec::with_capacity(order);
    let mut b_pow = T::one();
    let mut factorial = T::one();
    for n in 1..=order {
        b_pow = b_pow * qb.clone();
        factorial = factorial * T::from_i64(n as i64);
        let nn = (0..n - 1).fold(T::one(), |acc, _| acc * T::from_i64(n as i64));
        let rhs = qa.clone() * nn / factorial.clone() * b_pow.clone();
        let lhs = (model.b.coeff(n).clone() * T::from_i64(n as i64)).abs();
        rows.push(ClusterRow {
            n,
            lhs: lhs.to_f64(),
            rhs: rhs.to_f64(),
            holds: lhs <= rhs,
        });
    }
    Ok(ClusterCheckReport { a, b, rows })
}
