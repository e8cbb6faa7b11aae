//! Principal branch `W_0` of the Lambert W-function on the nonnegative reals.
//!
//! `W(z)` is the unique `w >= 0` with `w e^w = z`. It is evaluated by Halley
//! iteration, which converges cubically on this branch from the starting
//! guesses below.

use crate::{Error, Result};

const MAX_ITER: usize = 50;
const REL_STEP: f64 = 1e-15;

/// Evaluate `W_0(z)` for finite `z >= 0`.
///
/// The result satisfies `|w e^w - z| <= 1e-12 max(1, z)` and is monotone
/// nondecreasing in `z`.
pub fn lambert_w0(z: f64) -> Result<f64> {
    if !z.is_finite() || z < 0.0 {
        return Err(Error::domain(format!(
            "lambert_w0 requires a finite nonnegative argument, got {z}"
        )));
    }
    if z == 0.0 {
        return Ok(0.0);
    }

    let mut w = initial_guess(z);
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - z;
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= REL_STEP * w.abs() {
            break;
        }
    }
    Ok(w)
}

fn initial_guess(z: f64) -> f64 {
    if z <= std::f64::consts::E {
        z.ln_1p()
    } else {
        let l1 = z.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    }
}
