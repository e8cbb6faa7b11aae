//! Principal branch of the Lambert W-function.

use virial_bounds::{lambert_w0, Result};

fn main() -> Result<()> {
    println!("{:>12}  {:>22}  {:>10}", "z", "W0(z)", "residual");
    for z in [
        0.0,
        1e-8,
        0.5,
        1.0,
        std::f64::consts::E / 2.0,
        std::f64::consts::E,
        10.0,
        1e3,
    ] {
        let w = lambert_w0(z)?;
        println!("{z:>12.6e}  {w:>22.17}  {:>10.1e}", w * w.exp() - z);
    }
    // negative arguments belong to another branch and are rejected
    assert!(lambert_w0(-0.1).is_err());
    Ok(())
}
