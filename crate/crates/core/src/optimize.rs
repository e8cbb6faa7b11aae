//! Derivative-free maximisation of unimodal functions on an interval.
//!
//! Golden-section search shrinks the bracket until function values stop
//! being distinguishable (about `sqrt(eps)` relative), then a couple of
//! Newton steps with central finite differences (a local quadratic fit)
//! recover the maximiser to near machine precision.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
}

/// Golden-section search for the maximum of `f` on `[lo, hi]`, stopping once
/// the bracket is narrower than `xtol`.
pub fn golden_section_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, xtol: f64) -> Maximum {
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..500 {
        if (b - a) <= xtol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        Maximum { x: c, value: fc }
    } else {
        Maximum { x: d, value: fd }
    }
}

/// Polish a maximiser with Newton steps on central differences of step `h`,
/// keeping the iterate inside `[lo, hi]`.
///
/// Near the peak `f` is flat to within rounding, so a local step (at most
/// `10 h`) is accepted unless it loses more than a few ulps.
pub fn refine_max(f: impl Fn(f64) -> f64, start: Maximum, h: f64, lo: f64, hi: f64) -> Maximum {
    let mut best = start;
    for _ in 0..2 {
        let x = best.x;
        if x - h <= lo || x + h >= hi {
            break;
        }
        let (fm, fp) = (f(x - h), f(x + h));
        let curvature = fp - 2.0 * best.value + fm;
        if curvature.is_nan() || curvature >= 0.0 {
            break;
        }
        let step = 0.5 * h * (fp - fm) / curvature;
        if step.is_nan() || step.abs() > 10.0 * h {
            break;
        }
        let cand = (x - step).clamp(lo, hi);
        let fcand = f(cand);
        if fcand >= best.value - 8.0 * f64::EPSILON * best.value.abs() {
            best = Maximum {
                x: cand,
                value: fcand,
            };
        } else {
            break;
        }
    }
    best
}

/// Golden section followed by quadratic refinement on `[lo, hi]`.
pub fn maximize_unimodal(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Maximum {
    let width = hi - lo;
    let coarse = golden_section_max(&f, lo, hi, 1e-9 * width);
    refine_max(&f, coarse, 2e-6 * width, lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabola() {
        let m = maximize_unimodal(|x| -(x - 0.3).powi(2) + 2.0, -1.0, 4.0);
        assert!((m.x - 0.3).abs() < 1e-10, "{}", m.x);
        assert_eq!(m.value, 2.0);
    }

    #[test]
    fn skewed_objective() {
        // x e^{-x} peaks at x = 1
        let m = maximize_unimodal(|x| x * (-x).exp(), 0.0, 10.0);
        assert!((m.x - 1.0).abs() < 1e-9, "{}", m.x);
    }

    #[test]
    fn edge_maximum_stays_in_bracket() {
        let m = maximize_unimodal(|x| x, 0.0, 1.0);
        assert!(m.x <= 1.0 && m.x > 1.0 - 1e-8);
    }
}
