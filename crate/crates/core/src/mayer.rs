//! Brute-force cluster integrals for hard-core models.
//!
//! With `f_ij = e^{-beta phi(|x_i - x_j|)} - 1` and particle 1 pinned at the
//! origin,
//!
//! ```text
//! b_n = 1/n! int sum_{G connected on n vertices} prod_{ij in G} f_ij dx_2 .. dx_n
//! ```
//!
//! For hard cores `f = -1` on overlap and `0` otherwise. These routines
//! evaluate the integral directly and serve as ground truth for the series
//! models in [`crate::verify`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::potentials::unit_sphere_area;
use crate::quadrature::{adaptive_simpson, Integral, Tolerance};
use crate::{Error, Result};

fn overlap(d: f64, sigma: f64) -> f64 {
    if d.abs() < sigma {
        -1.0
    } else {
        0.0
    }
}

/// Integrate over `[p, q]` sampling strictly inside, so step discontinuities
/// at the endpoints take the interior value.
fn segment(f: impl Fn(f64) -> f64, p: f64, q: f64, tol: Tolerance) -> Integral {
    let nudge = 1e-13 * (q - p);
    adaptive_simpson(|x| f(x.clamp(p + nudge, q - nudge)), p, q, tol)
}

fn sorted_breaks(mut points: Vec<f64>, lo: f64, hi: f64) -> Vec<f64> {
    points.retain(|&x| x > lo && x < hi);
    points.push(lo);
    points.push(hi);
    points.sort_by(f64::total_cmp);
    points.dedup();
    points
}

/// `b_2` for hard rods of length `sigma` by 1D quadrature of the f-function.
pub fn hard_rod_b2_quadrature(sigma: f64) -> f64 {
    let tol = Tolerance::default();
    let pts = sorted_breaks(vec![-sigma, sigma], -2.0 * sigma, 2.0 * sigma);
    let total: f64 = pts
        .windows(2)
        .map(|w| segment(|x| overlap(x, sigma), w[0], w[1], tol).value)
        .sum();
    0.5 * total
}

/// `b_3` for hard rods by nested 2D quadrature, split at every overlap
/// boundary so each panel integrates a polynomial.
pub fn hard_rod_b3_quadrature(sigma: f64) -> f64 {
    let tol = Tolerance::default();
    let span = 2.0 * sigma;
    let inner = |x2: f64| -> f64 {
        let f12 = overlap(x2, sigma);
        let pts = sorted_breaks(vec![-sigma, sigma, x2 - sigma, x2 + sigma], -span, span);
        pts.windows(2)
            .map(|w| {
                let g = |x3: f64| {
                    let (f13, f23) = (overlap(x3, sigma), overlap(x3 - x2, sigma));
                    f12 * f13 + f12 * f23 + f13 * f23 + f12 * f13 * f23
                };
                segment(g, w[0], w[1], tol).value
            })
            .sum()
    };
    let outer: Vec<f64> = (-2..=2).map(|k| f64::from(k) * sigma).collect();
    let total: f64 = outer
        .windows(2)
        .map(|w| segment(inner, w[0], w[1], tol).value)
        .sum();
    total / 6.0
}

/// Sum over connected graphs on `n` vertices of the product of `f` over the
/// edges, by enumerating every edge subset.
fn ursell(n: usize, f: &[Vec<f64>]) -> f64 {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut total = 0.0;
    for mask in 0u32..(1 << edges.len()) {
        let mut product = 1.0;
        let mut parent: Vec<usize> = (0..n).collect();
        for (e, &(i, j)) in edges.iter().enumerate() {
            if mask & (1 << e) != 0 {
                product *= f[i][j];
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
        if product == 0.0 {
            continue;
        }
        let root = find(&mut parent, 0);
        if (1..n).all(|v| find(&mut parent, v) == root) {
            total += product;
        }
    }
    total
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// `b_n` for hard rods (`n <= 4`) by exact cell enumeration.
///
/// In units of `sigma`, the integrand depends on the positions only through
/// their integer parts and the ordering of their fractional parts, so it is
/// constant on cells of volume `1/(n-1)!`. Particle 1 sits at 0, which has
/// the smallest fractional part.
pub fn hard_rod_cluster_coefficient(n: usize, sigma: f64) -> Result<f64> {
    if n == 0 || n > 4 {
        return Err(Error::argument(
            "hard-rod cell enumeration supports 1 <= n <= 4",
        ));
    }
    if n == 1 {
        return Ok(1.0);
    }
    let free = n - 1;
    let span = free as i64;
    let mut ranks: Vec<usize> = (1..=free).collect();
    let mut perms = Vec::new();
    permutations(&mut ranks, 0, &mut perms);

    let mut total = 0.0;
    let mut ints = vec![-span; free];
    loop {
        for perm in &perms {
            let mut x = vec![0.0; n];
            for i in 0..free {
                x[i + 1] = ints[i] as f64 + perm[i] as f64 / n as f64;
            }
            let f: Vec<Vec<f64>> = (0..n)
                .map(|i| (0..n).map(|j| overlap(x[i] - x[j], 1.0)).collect())
                .collect();
            total += ursell(n, &f);
        }
        // odometer over integer parts in [-span, span - 1]
        let mut k = 0;
        while k < free {
            ints[k] += 1;
            if ints[k] < span {
                break;
            }
            ints[k] = -span;
            k += 1;
        }
        if k == free {
            break;
        }
    }
    let cell = 1.0 / factorial(free);
    Ok(total * cell / factorial(n) * sigma.powi(free as i32))
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `b_2` for hard spheres of diameter `sigma` in `d` dimensions by radial
/// quadrature of the f-function.
pub fn hard_sphere_b2(dim: u32, sigma: f64) -> f64 {
    let tol = Tolerance::default();
    let d1 = dim as i32 - 1;
    let radial = |s: f64| overlap(s, sigma) * s.powi(d1);
    let integral =
        segment(radial, 0.0, sigma, tol).value + segment(radial, sigma, 2.0 * sigma, tol).value;
    0.5 * unit_sphere_area(dim) * integral
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McConfig {
    pub seed: u64,
    pub shards: usize,
    pub points_per_shard: usize,
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            shards: 16,
            points_per_shard: 1 << 14,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub value: f64,
    pub std_err: f64,
    pub config: McConfig,
}

/// Additive recurrence (Kronecker) directions for dimension 6.
fn kronecker_alphas() -> [f64; 6] {
    // g is the positive root of x^7 = x + 1
    let mut g = 1.2f64;
    for _ in 0..50 {
        g -= (g.powi(7) - g - 1.0) / (7.0 * g.powi(6) - 1.0);
    }
    let mut alphas = [0.0; 6];
    for (j, a) in alphas.iter_mut().enumerate() {
        *a = (1.0 / g.powi(j as i32 + 1)).fract();
    }
    alphas
}

/// `b_3` for hard spheres in three dimensions.
///
/// `b_3 = (1/2) (int f)^2 + (1/6) int int f_12 f_13 f_23`. The first term
/// comes from [`hard_sphere_b2`]; the triangle integral is estimated by
/// randomized quasi-Monte Carlo over `x_2, x_3 in [-sigma, sigma]^3`, one
/// random shift of a Kronecker sequence per shard. Shards run in parallel and
/// are combined in shard order, so the result depends only on the config.
pub fn hard_sphere_b3(sigma: f64, config: McConfig) -> Result<McEstimate> {
    if config.shards < 2 || config.points_per_shard == 0 {
        return Err(Error::argument(
            "Monte Carlo needs >= 2 shards and >= 1 point per shard",
        ));
    }
    let alphas = kronecker_alphas();
    let shard_means: Vec<f64> = (0..config.shards)
        .into_par_iter()
        .map(|shard| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(shard as u64);
            let shift: [f64; 6] = std::array::from_fn(|_| rng.gen::<f64>());
            let mut hits = 0usize;
            for i in 0..config.points_per_shard {
                let u: [f64; 6] =
                    std::array::from_fn(|j| (shift[j] + (i as f64 + 1.0) * alphas[j]).fract());
                let x2 = [u[0], u[1], u[2]].map(|v| sigma * (2.0 * v - 1.0));
                let x3 = [u[3], u[4], u[5]].map(|v| sigma * (2.0 * v - 1.0));
                let norm2 = |v: [f64; 3]| v.iter().map(|c| c * c).sum::<f64>();
                let s2 = sigma * sigma;
                if norm2(x2) < s2
                    && norm2(x3) < s2
                    && norm2([x2[0] - x3[0], x2[1] - x3[1], x2[2] - x3[2]]) < s2
                {
                    hits += 1;
                }
            }
            hits as f64 / config.points_per_shard as f64
        })
        .collect();

    let m = shard_means.len() as f64;
    let mean = shard_means.iter().sum::<f64>() / m;
    let var = shard_means.iter().map(|p| (p - mean).powi(2)).sum::<f64>() / (m - 1.0);
    let cube = (2.0 * sigma).powi(6);
    let triangle = -cube * mean;
    let triangle_se = cube * (var / m).sqrt();

    let f_integral = 2.0 * hard_sphere_b2(3, sigma);
    Ok(McEstimate {
        value: 0.5 * f_integral * f_integral + triangle / 6.0,
        std_err: triangle_se / 6.0,
        config,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn hard_rod_coefficients_match_closed_form() {
        // b_n = n^{n-1} (-sigma)^{n-1} / n!
        let sigma: f64 = 1.3;
        let exact = [
            1.0,
            -sigma,
            1.5 * sigma * sigma,
            -(64.0 / 24.0) * sigma.powi(3),
        ];
        for n in 1..=4 {
            let cells = hard_rod_cluster_coefficient(n, sigma).unwrap();
            assert!((cells - exact[n - 1]).abs() < 1e-12, "n={n}: {cells}");
        }
        assert!((hard_rod_b2_quadrature(sigma) - exact[1]).abs() < 1e-10);
        assert!((hard_rod_b3_quadrature(sigma) - exact[2]).abs() < 1e-8);
        assert!(hard_rod_cluster_coefficient(5, 1.0).is_err());
    }

    #[test]
    fn hard_sphere_second_coefficient() {
        assert!((hard_sphere_b2(3, 1.0) + 2.0 * PI / 3.0).abs() < 1e-12);
        assert!((hard_sphere_b2(1, 0.5) + 0.5).abs() < 1e-12);
    }

    #[test]
    fn hard_sphere_third_coefficient() {
        // b_3 = 27/16 B_2^2 with B_2 = 2 pi sigma^3 / 3
        let b2v = 2.0 * PI / 3.0;
        let exact = 27.0 / 16.0 * b2v * b2v;
        let est = hard_sphere_b3(1.0, McConfig::default()).unwrap();
        assert!(est.std_err > 0.0);
        assert!(
            (est.value - exact).abs() < 5.0 * est.std_err + 1e-3,
            "{est:?} vs {exact}"
        );
        let again = hard_sphere_b3(1.0, McConfig::default()).unwrap();
        assert_eq!(est, again);
    }
}
