//! Adaptive Simpson quadrature with an accumulated error estimate, plus the
//! `s = L/t` map for integrals over `[L, inf)`.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs: 1e-10,
            rel: 1e-10,
        }
    }
}

impl Tolerance {
    pub fn halved(self) -> Self {
        Self {
            abs: 0.5 * self.abs,
            rel: 0.5 * self.rel,
        }
    }
}

pub const MAX_DEPTH: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Integral {
    pub value: f64,
    /// Sum of the local `|S_2 - S_1| / 15` estimates over accepted panels.
    pub error: f64,
    /// Set when some panel hit the depth limit before meeting tolerance.
    pub depth_limited: bool,
}

impl std::ops::Add for Integral {
    type Output = Integral;

    fn add(self, rhs: Integral) -> Integral {
        Integral {
            value: self.value + rhs.value,
            error: self.error + rhs.error,
            depth_limited: self.depth_limited || rhs.depth_limited,
        }
    }
}

impl std::iter::Sum for Integral {
    fn sum<I: Iterator<Item = Integral>>(iter: I) -> Integral {
        iter.fold(Integral::default(), |a, b| a + b)
    }
}

/// Integrate `f` over `[a, b]`.
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: Tolerance) -> Integral {
    if a == b {
        return Integral::default();
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let eps = tol.abs.max(tol.rel * whole.abs());
    let mut out = Integral::default();
    step(
        &f,
        Panel {
            a,
            m,
            b,
            fa,
            fm,
            fb,
            whole,
        },
        eps,
        MAX_DEPTH,
        &mut out,
    );
    out
}

struct Panel {
    a: f64,
    m: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn step(f: &impl Fn(f64) -> f64, p: Panel, eps: f64, depth: u32, out: &mut Integral) {
    let Panel {
        a,
        m,
        b,
        fa,
        fm,
        fb,
        whole,
    } = p;
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let diff = left + right - whole;
    if diff.abs() <= 15.0 * eps || depth == 0 {
        out.value += left + right + diff / 15.0;
        out.error += diff.abs() / 15.0;
        if depth == 0 && diff.abs() > 15.0 * eps {
            out.depth_limited = true;
        }
        return;
    }
    step(
        f,
        Panel {
            a,
            m: lm,
            b: m,
            fa,
            fm: flm,
            fb: fm,
            whole: left,
        },
        0.5 * eps,
        depth - 1,
        out,
    );
    step(
        f,
        Panel {
            a: m,
            m: rm,
            b,
            fa: fm,
            fm: frm,
            fb,
            whole: right,
        },
        0.5 * eps,
        depth - 1,
        out,
    );
}

/// Integrate `f` over consecutive intervals between sorted `points`.
pub fn piecewise(f: impl Fn(f64) -> f64, points: &[f64], tol: Tolerance) -> Integral {
    points
        .windows(2)
        .map(|w| adaptive_simpson(&f, w[0], w[1], tol))
        .sum()
}

/// Integrate `f` over `[lower, inf)` through `s = lower / t`, `t in (0, 1]`.
///
/// The transformed integrand is taken to be 0 at `t = 0`, which holds when
/// `f(s) s^2 -> 0` as `s -> inf`.
pub fn semi_infinite(f: impl Fn(f64) -> f64, lower: f64, tol: Tolerance) -> Integral {
    assert!(lower > 0.0, "semi_infinite needs a positive lower limit");
    let g = |t: f64| {
        if t <= 0.0 {
            0.0
        } else {
            let s = lower / t;
            f(s) * lower / (t * t)
        }
    };
    adaptive_simpson(g, 0.0, 1.0, tol)
}
