//! Exact power-series reversion: the tree function as the inverse of
//! `s e^{-s}`, checked against the Lagrange inversion formula.

use num_rational::BigRational;
use num_traits::One;
use virial_bounds::series::text::format_series;
use virial_bounds::series::{
    compose, exp_series, lagrange_invert, revert, tree_inverse_series, PowerSeries,
};
use virial_bounds::Result;

fn main() -> Result<()> {
    let order = 8;
    let y = tree_inverse_series(order)?;
    let tree = revert(&y, order)?;
    println!("revert(s e^-s) to order {order}:");
    print!("{}", format_series(&tree));

    // y = s / phi(s) with phi = e^s
    let via_lagrange = lagrange_invert(&exp_series(order), order)?;
    assert_eq!(via_lagrange, tree);
    assert_eq!(compose(&tree, &y)?, PowerSeries::identity(order)?);

    // Catalan numbers from phi = 1/(1 - s)
    let one_minus_s =
        PowerSeries::new(vec![BigRational::one(), -BigRational::one()])?.pad_to(order);
    let catalan = lagrange_invert(&one_minus_s.reciprocal()?, order)?;
    let counts: Vec<String> = catalan
        .coeffs()
        .iter()
        .skip(1)
        .map(|c| c.to_string())
        .collect();
    println!("Catalan numbers: {}", counts.join(", "));
    Ok(())
}
