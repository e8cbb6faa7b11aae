mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::w_bisect;
use virial_bounds::bounds::{comparison_factors, improved_lp_bound, pu_bound, CorollaryInput};
use virial_bounds::potentials::{compute_c, compute_c_with, compute_r, Tail};
use virial_bounds::quadrature::Tolerance;
use virial_bounds::series::{compose, lagrange_invert, revert, PowerSeries};
use virial_bounds::verify::{virial_from_cluster, virial_via_lagrange};
use virial_bounds::{lambert_w0, BallConvention, RadialPotential};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Series `c_1 x + c_2 x^2 + ..` with `c_1 != 0` and small rational coefficients.
fn admissible(order: usize) -> impl Strategy<Value = PowerSeries<BigRational>> {
    (
        (1i64..6, 1i64..5, any::<bool>()),
        prop::collection::vec((-6i64..7, 1i64..5), order - 1),
    )
        .prop_map(|((n1, d1, neg), rest)| {
            let mut c = vec![BigRational::zero(), q(if neg { -n1 } else { n1 }, d1)];
            c.extend(rest.into_iter().map(|(n, d)| q(n, d)));
            PowerSeries::new(c).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn w_round_trip(e in -8.0f64..3.0) {
        let z = 10f64.powf(e);
        let w = lambert_w0(z).unwrap();
        prop_assert!((w * w.exp() - z).abs() <= 1e-12 * z.max(1.0));
        prop_assert!((w - w_bisect(z)).abs() <= 1e-13 * w.max(1e-300) + 1e-300);
    }

    #[test]
    fn w_monotone(e in -8.0f64..3.0, gap in 1e-9f64..1.0) {
        let z1 = 10f64.powf(e);
        let z2 = z1 * (1.0 + gap);
        prop_assert!(lambert_w0(z1).unwrap() <= lambert_w0(z2).unwrap());
    }

    #[test]
    fn w_inverts_w_exp_w(w in 0.0f64..10.0) {
        prop_assert!((lambert_w0(w * w.exp()).unwrap() - w).abs() <= 1e-10);
    }

    #[test]
    fn reversion_round_trip(s in admissible(8)) {
        let inv = revert(&s, 8).unwrap();
        prop_assert_eq!(compose(&s, &inv).unwrap(), PowerSeries::identity(8).unwrap());
        prop_assert_eq!(compose(&inv, &s).unwrap(), PowerSeries::identity(8).unwrap());
    }

    #[test]
    fn lagrange_matches_revert(tail in prop::collection::vec((-5i64..6, 1i64..4), 8)) {
        // phi with phi(0) = 1; y = s / phi(s)
        let mut c = vec![BigRational::one()];
        c.extend(tail.into_iter().map(|(n, d)| q(n, d)));
        let phi = PowerSeries::new(c).unwrap();
        let y = PowerSeries::identity(8).unwrap().mul(&phi.reciprocal().unwrap());
        prop_assert_eq!(lagrange_invert(&phi, 8).unwrap(), revert(&y, 8).unwrap());
    }

    #[test]
    fn cluster_routes_agree(b in admissible(12)) {
        // normalise b_1 = 1 as for a physical activity series
        let b1 = b.coeff(1).clone();
        let b = b.scale(&(BigRational::one() / b1));
        prop_assert_eq!(virial_from_cluster(&b, 12).unwrap(), virial_via_lagrange(&b, 12).unwrap());
    }

    #[test]
    fn comparison_ordering(bb in 0.0f64..20.0, d in 1e-3f64..2.0) {
        let f = comparison_factors(bb).unwrap();
        let g = comparison_factors(bb + d).unwrap();
        prop_assert!(f.r1 >= f.r2);
        prop_assert!(g.r1 <= f.r1 && g.r2 <= f.r2 && g.f2 <= f.f2);
    }

    #[test]
    fn crossover_when_c_exceeds_1_7_r(beta in 0.1f64..3.0, b in 0.0f64..3.0, r in 0.1f64..10.0) {
        let input = CorollaryInput::new(beta, b).unwrap().with_c(1.7 * r).with_r(r);
        prop_assert!(pu_bound(&input).unwrap().radius_lower > improved_lp_bound(&input).unwrap().radius_lower);
    }

    #[test]
    fn c_below_r_for_repulsive_tails(c in 0.1f64..5.0, p in 3.5f64..12.0, beta in 0.05f64..3.0) {
        let pot = RadialPotential::new(3, 1.0, Tail::InversePower { c, p }, 0.0).unwrap();
        let cv = compute_c(&pot, beta).unwrap().value;
        let rv = compute_r(&pot, beta, BallConvention::Volume).unwrap().value;
        prop_assert!(cv <= rv * (1.0 + 1e-12), "C = {cv}, R = {rv}");
    }

    #[test]
    fn r_affine_in_beta(eps in 0.1f64..3.0, lambda in 1.1f64..2.5, b1 in 0.1f64..1.0, db in 0.1f64..2.0) {
        let pot = RadialPotential::new(3, 1.0, Tail::SquareWell { epsilon: eps, lambda }, eps).unwrap();
        let r = |beta: f64| compute_r(&pot, beta, BallConvention::Volume).unwrap().value;
        let (b2, b3) = (b1 + db, b1 + 2.7 * db);
        let slope12 = (r(b2) - r(b1)) / (b2 - b1);
        let slope13 = (r(b3) - r(b1)) / (b3 - b1);
        prop_assert!((slope12 - slope13).abs() <= 1e-9 * slope13.abs().max(1.0));
    }

    #[test]
    fn halving_tolerance_within_estimate(c in 0.1f64..5.0, p in 3.5f64..12.0, beta in 0.05f64..3.0) {
        let pot = RadialPotential::new(3, 1.0, Tail::InversePower { c, p }, 0.0).unwrap();
        let coarse = compute_c_with(&pot, beta, Tolerance::default()).unwrap();
        let fine = compute_c_with(&pot, beta, Tolerance::default().halved()).unwrap();
        prop_assert!((coarse.value - fine.value).abs() <= coarse.error.max(f64::EPSILON * coarse.value.abs()),
            "coarse {:?} fine {:?}", coarse, fine);
    }
}
