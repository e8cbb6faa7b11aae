//! End-to-end check on hard rods: exact virial coefficients from the cluster
//! series, Mayer-integral cross-checks, and bound domination.

use num_rational::BigRational;
use virial_bounds::mayer::{
    hard_rod_b2_quadrature, hard_rod_b3_quadrature, hard_rod_cluster_coefficient,
};
use virial_bounds::verify::{check_bound_domination, tonks};
use virial_bounds::Result;

fn main() -> Result<()> {
    let sigma = BigRational::new(1.into(), 2.into());
    let model = tonks(&sigma, 10)?;
    let report = check_bound_domination(&model, 10)?;
    print!("{}", report.to_table());

    println!("\nMayer integrals at sigma = 1/2 vs the closed form:");
    println!("  b2 {:+.12} (exact -0.5)", hard_rod_b2_quadrature(0.5));
    println!(
        "  b3 {:+.12} (exact {})",
        hard_rod_b3_quadrature(0.5),
        1.5 * 0.25
    );
    println!(
        "  b4 {:+.12} (exact {})",
        hard_rod_cluster_coefficient(4, 0.5)?,
        -8.0 / 3.0 * 0.125
    );
    Ok(())
}
