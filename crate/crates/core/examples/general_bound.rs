//! Radius and coefficient bounds from cluster-expansion parameters `(a, b)`,
//! with the numeric maximiser confirming the closed form.

use virial_bounds::{general_bound, maximize_rho_lower, BoundParams, Result};

fn main() -> Result<()> {
    println!(
        "{:>8} {:>8} {:>12} {:>22} {:>22}",
        "a", "b", "W(mu)", "closed radius", "numeric radius"
    );
    for (a, b) in [(1.0, 1.0), (0.1, 5.0), (2.0, 0.01), (1e-3, 1e3)] {
        let params = BoundParams::new(a, b, 1.0)?;
        let bound = general_bound(&params)?;
        let (_, numeric) = maximize_rho_lower(&params)?;
        println!(
            "{a:>8} {b:>8} {:>12.9} {:>22.15e} {numeric:>22.15e}",
            bound.w, bound.radius_lower
        );
    }

    let bound = general_bound(&BoundParams::new(1.0, 1.0, 1.0)?)?;
    println!("\n|c_n| bounds for a = b = beta = 1:");
    for n in 1..=6 {
        println!("  n = {n}: {:.6e}", bound.coefficient_bound(n));
    }
    Ok(())
}
