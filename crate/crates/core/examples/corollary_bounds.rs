//! The temperedness-based presets: improved and classical Lebowitz-Penrose
//! from `C(beta)`, and the `R(beta)` variant, across temperatures.

use virial_bounds::{classic_lp_bound, improved_lp_bound, pu_bound, CorollaryInput, Result};

fn main() -> Result<()> {
    // a square-well-like system: C grows faster with beta than R
    let (c, r) = (21.28, 14.14);
    println!("C = {c}, R = {r}");
    println!(
        "{:>6} {:>14} {:>14} {:>14}",
        "betaB", "improved LP", "classic LP", "R-based"
    );
    for beta_b in [0.0, 0.5, 1.0, 2.0, 5.0] {
        let input = CorollaryInput::new(1.0, beta_b)?.with_c(c).with_r(r);
        println!(
            "{beta_b:>6} {:>14.6e} {:>14.6e} {:>14.6e}",
            improved_lp_bound(&input)?.radius_lower,
            classic_lp_bound(&input)?.radius_lower,
            pu_bound(&input)?.radius_lower,
        );
    }
    Ok(())
}
