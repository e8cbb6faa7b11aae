//! Truncated formal power series in one variable.
//!
//! A [`PowerSeries`] stores `c_0..=c_N` together with its truncation order
//! `N`; every operation states the order of its result explicitly. Two
//! coefficient fields are supported through [`Coefficient`]: exact
//! [`BigRational`] for identity checks and `f64` for numeric models.

mod coefficient;
pub mod text;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use coefficient::{format_float, ratio, Coefficient};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> PowerSeries<T> {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::argument(
                "a power series needs at least one coefficient",
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The series `x` truncated at `order` (`order >= 1`).
    pub fn identity(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::argument("identity series needs order >= 1"));
        }
        let mut s = Self::zero(order);
        s.coeffs[1] = T::one();
        Ok(s)
    }

    pub fn constant(value: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Drop the terms above `order`; raising the order is an error since the
    /// missing coefficients are unknown.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::argument(format!(
                "cannot truncate a series of order {} to higher order {order}",
                self.order()
            )));
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Pad with zero coefficients up to `order`, treating `self` as an exact
    /// polynomial.
    pub fn pad_to(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < order + 1 {
            coeffs.resize(order + 1, T::zero());
        }
        Self { coeffs }
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> PowerSeries<U> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn to_f64(&self) -> PowerSeries<f64> {
        self.map(Coefficient::to_f64)
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|c| c.clone() * k.clone())
    }

    /// Sum truncated at the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|i| self.coeffs[i].clone() + other.coeffs[i].clone())
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        self.mul_to(other, n)
    }

    fn mul_to(&self, other: &Self, n: usize) -> Self {
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs: out }
    }

    /// `self^k` at the order of `self`.
    pub fn pow(&self, k: u32) -> Self {
        let n = self.order();
        let mut result = Self::constant(T::one(), n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::argument("reciprocal needs a nonzero constant term"));
        }
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(T::one() / c0.clone());
        for m in 1..=n {
            let mut acc = T::zero();
            for j in 1..=m {
                acc = acc + self.coeffs[j].clone() * out[m - j].clone();
            }
            out.push(-acc / c0.clone());
        }
        Ok(Self { coeffs: out })
    }

    /// Formal derivative; the result has order `order - 1`.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::argument(
                "derivative of an order-0 series is undefined",
            ));
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() * T::from_i64(i as i64 + 1))
            .collect();
        Ok(Self { coeffs })
    }

    /// Evaluate the truncated polynomial at `x` (Horner).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    /// `self(x) / x`, i.e. the coefficients shifted down by one. Requires a
    /// zero constant term; the result has order `order - 1`.
    pub fn shift_down(&self) -> Result<Self> {
        if self.order() == 0 || !self.coeffs[0].is_zero() {
            return Err(Error::argument(
                "shift_down needs order >= 1 and zero constant term",
            ));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }
}

/// Composition `outer(inner(x))`, truncated at the smaller of the two orders.
///
/// Horner scheme: `((o_N inner + o_{N-1}) inner + ...) + o_0`.
pub fn compose<T: Coefficient>(
    outer: &PowerSeries<T>,
    inner: &PowerSeries<T>,
) -> Result<PowerSeries<T>> {
    if !inner.coeff(0).is_zero() {
        return Err(Error::argument(
            "compose: inner series must have zero constant term",
        ));
    }
    let n = outer.order().min(inner.order());
    let inner = inner.truncate(n)?;
    let mut acc = PowerSeries::constant(outer.coeff(n).clone(), n);
    for k in (0..n).rev() {
        acc = acc.mul(&inner);
        acc.coeffs[0] = acc.coeffs[0].clone() + outer.coeff(k).clone();
    }
    Ok(acc)
}

/// Compositional inverse `g` with `series(g(x)) = x + O(x^{order+1})`.
///
/// Solves for one coefficient at a time: with `P[k][m] = [x^m] g^k`,
/// `[x^m] series(g) = c_1 g_m + sum_{k>=2} c_k P[k][m]` must vanish for
/// `m >= 2`, and `P[k][m]` only involves `g_1..g_{m-1}`.
pub fn revert<T: Coefficient>(series: &PowerSeries<T>, order: usize) -> Result<PowerSeries<T>> {
    if order == 0 {
        return Err(Error::argument("revert: order must be >= 1"));
    }
    if series.order() < order {
        return Err(Error::argument(format!(
            "revert: series of order {} cannot be reverted to order {order}",
            series.order()
        )));
    }
    if !series.coeff(0).is_zero() {
        return Err(Error::argument("revert: constant term must be zero"));
    }
    let c1 = series.coeff(1).clone();
    if c1.is_zero() {
        return Err(Error::argument(
            "revert: linear coefficient must be nonzero",
        ));
    }

    let mut g = vec![T::zero(); order + 1];
    // powers[k][m] = [x^m] g^k, for k >= 1
    let mut powers: Vec<Vec<T>> = vec![vec![T::zero(); order + 1]; order + 1];
    g[1] = T::one() / c1.clone();
    powers[1][1] = g[1].clone();
    for m in 2..=order {
        let mut acc = T::zero();
        for k in 2..=m {
            let mut p = T::zero();
            for j in 1..=(m - k + 1) {
                let rest = &powers[k - 1][m - j];
                if !rest.is_zero() {
                    p = p + g[j].clone() * rest.clone();
                }
            }
            acc = acc + series.coeff(k).clone() * p.clone();
            powers[k][m] = p;
        }
        g[m] = -acc / c1.clone();
        powers[1][m] = g[m].clone();
    }
    Ok(PowerSeries { coeffs: g })
}

/// Lagrange inversion: the series `s(y)` defined by `s = y phi(s)`, with
/// `[y^n] s = (1/n) [s^{n-1}] phi(s)^n`.
pub fn lagrange_invert<T: Coefficient>(
    phi: &PowerSeries<T>,
    order: usize,
) -> Result<PowerSeries<T>> {
    let identity = PowerSeries::identity(order.max(1))?;
    lagrange_burmann(&identity, phi, order)
}

/// Lagrange–Bürmann: for `s = y phi(s)`, the coefficients of `H(s(y))` are
/// `[y^n] H = (1/n) [s^{n-1}] H'(s) phi(s)^n` for `n >= 1`.
pub fn lagrange_burmann<T: Coefficient>(
    h: &PowerSeries<T>,
    phi: &PowerSeries<T>,
    order: usize,
) -> Result<PowerSeries<T>> {
    if order == 0 {
        return Err(Error::argument("lagrange inversion: order must be >= 1"));
    }
    if phi.coeff(0).is_zero() {
        return Err(Error::argument(
            "lagrange inversion: phi(0) must be nonzero",
        ));
    }
    if phi.order() + 1 < order || h.order() < order {
        return Err(Error::argument(format!(
            "lagrange inversion to order {order} needs phi of order >= {} and H of order >= {order}",
            order - 1
        )));
    }
    let work = order - 1;
    let phi = phi.truncate(work)?;
    let h_prime = h.derivative()?.truncate(work)?;
    let mut out = vec![T::zero(); order + 1];
    out[0] = h.coeff(0).clone();
    let mut phi_pow = PowerSeries::constant(T::one(), work);
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        phi_pow = phi_pow.mul(&phi);
        let target = h_prime.mul(&phi_pow);
        *slot = target.coeff(n - 1).clone() / T::from_i64(n as i64);
    }
    Ok(PowerSeries { coeffs: out })
}

/// Tree function `f(x) = sum_{n>=1} n^{n-1}/n! x^n`, exact.
pub fn tree_function_series(order: usize) -> Result<PowerSeries<BigRational>> {
    if order == 0 {
        return Err(Error::argument("tree_function_series: order must be >= 1"));
    }
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut factorial = BigInt::one();
    for (n, slot) in coeffs.iter_mut().enumerate().skip(1) {
        factorial *= BigInt::from(n);
        let num = BigInt::from(n).pow(n as u32 - 1);
        *slot = BigRational::new(num, factorial.clone());
    }
    Ok(PowerSeries { coeffs })
}

/// `s e^{-s}`, the compositional inverse of the tree function.
pub fn tree_inverse_series(order: usize) -> Result<PowerSeries<BigRational>> {
    if order == 0 {
        return Err(Error::argument("tree_inverse_series: order must be >= 1"));
    }
    let exp = exp_series(order - 1);
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let c = exp.coeff(k - 1).clone();
        *slot = if (k - 1) % 2 == 0 { c } else { -c };
    }
    Ok(PowerSeries { coeffs })
}

/// `e^s` truncated at `order`, exact.
pub fn exp_series(order: usize) -> PowerSeries<BigRational> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut factorial = BigInt::one();
    for n in 0..=order {
        if n > 0 {
            factorial *= BigInt::from(n);
        }
        coeffs.push(BigRational::new(BigInt::one(), factorial.clone()));
    }
    PowerSeries { coeffs }
}
