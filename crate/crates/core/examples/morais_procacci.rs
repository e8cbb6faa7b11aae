//! The Morais-Procacci maximisation and the free-energy coefficient bounds
//! built on it.

use virial_bounds::bounds::{mp_asymptotic_base, mp_f, mp_free_energy_coeff_bound};
use virial_bounds::{improved_lp_bound, CorollaryInput, Result};

fn main() -> Result<()> {
    println!(
        "{:>8} {:>12} {:>22} {:>22}",
        "betaB", "alpha*", "F(e^{2 betaB})", "improved LP radius"
    );
    for beta_b in [0.0f64, 0.5, 1.0, 2.0, 4.0] {
        let u = (2.0 * beta_b).exp();
        let mp = mp_f(u)?;
        let lp = improved_lp_bound(&CorollaryInput::new(1.0, beta_b)?.with_c(1.0))?;
        println!(
            "{beta_b:>8} {:>12.8} {:>22.15e} {:>22.15e}",
            mp.alpha_star, mp.f, lp.radius_lower
        );
    }

    let input = CorollaryInput::new(1.0, 1.0)?.with_c(1.0);
    let alpha = mp_f((2.0 * input.beta_b()).exp())?.alpha_star;
    println!("\nfree-energy coefficient bounds at betaB = 1, C = 1:");
    for k in 1..=5 {
        println!(
            "  k = {k}: {:.6e}",
            mp_free_energy_coeff_bound(k, &input, alpha)?
        );
    }
    println!("asymptotic growth base: {:.6}", mp_asymptotic_base(&input)?);
    Ok(())
}
