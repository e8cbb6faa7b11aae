//! `C(beta)` and `R(beta)` for a few radial potentials, including one read
//! from JSON.

use virial_bounds::potentials::{tempered, Tail};
use virial_bounds::{BallConvention, RadialPotential, Result};

fn main() -> Result<()> {
    let potentials = [
        ("hard sphere", RadialPotential::hard_sphere(3, 1.0)?),
        (
            "square well",
            RadialPotential::from_json(
                r#"{"dim":3,"core_radius":1.0,"tail":{"type":"square_well","epsilon":1.0,"lambda":1.5},"B":1.0}"#,
            )?,
        ),
        (
            "soft repulsion",
            RadialPotential::new(3, 1.0, Tail::InversePower { c: 1.0, p: 12.0 }, 0.0)?,
        ),
        (
            "tabulated",
            RadialPotential::new(
                3,
                1.0,
                Tail::Tabulated {
                    r: vec![1.0, 1.2, 1.5, 2.0],
                    phi: vec![-1.0, -0.6, -0.2, 0.0],
                    cutoff: 2.0,
                },
                1.0,
            )?,
        ),
    ];
    for beta in [0.5, 1.0, 2.0] {
        println!("beta = {beta}");
        for (name, pot) in &potentials {
            let t = tempered(pot, beta, BallConvention::Volume)?;
            println!(
                "  {name:<15} C = {:>12.8} (+/- {:.1e})  R = {:>12.8}",
                t.c_beta, t.c_err, t.r_beta
            );
        }
    }
    let hs = tempered(&potentials[0].1, 1.0, BallConvention::Surface)?;
    println!(
        "hard sphere with the surface convention: R = {:.8}",
        hs.r_beta
    );
    Ok(())
}
