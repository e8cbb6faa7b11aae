//! Hard spheres: `b_2` by quadrature, `b_3` by seeded quasi-Monte Carlo,
//! and the resulting third virial coefficient.

use std::f64::consts::PI;

use virial_bounds::mayer::{hard_sphere_b2, hard_sphere_b3, McConfig};
use virial_bounds::verify::{check_bound_domination, hard_sphere};
use virial_bounds::Result;

fn main() -> Result<()> {
    let b2 = hard_sphere_b2(3, 1.0);
    let second_virial = 2.0 * PI / 3.0;
    println!("b2 = {b2:.12} (exact {:.12})", -second_virial);

    let config = McConfig::default();
    let b3 = hard_sphere_b3(1.0, config)?;
    println!(
        "b3 = {:.6} +/- {:.1e} (exact {:.6}), seed {}",
        b3.value,
        b3.std_err,
        27.0 / 16.0 * second_virial * second_virial,
        config.seed
    );

    let model = hard_sphere(1.0, config)?;
    print!("{}", check_bound_domination(&model, 3)?.to_table());
    println!(
        "exact beta c_3 = {:.6}",
        5.0 / 8.0 * second_virial * second_virial
    );
    Ok(())
}
