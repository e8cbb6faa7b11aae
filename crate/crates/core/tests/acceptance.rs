//! Acceptance gate: one PASS/FAIL line per criterion; exits nonzero on any
//! failure.

mod common;

use std::f64::consts::{E, PI};
use std::fs;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use common::{rel_err, virial};
use virial_bounds::bounds::{
    comparison_factors, general_bound, improved_lp_bound, maximize_rho_lower, mp_f, pu_bound,
    BoundParams, CorollaryInput,
};
use virial_bounds::mayer::{
    hard_rod_b2_quadrature, hard_rod_b3_quadrature, hard_rod_cluster_coefficient,
};
use virial_bounds::potentials::{compute_c, compute_r, Tail};
use virial_bounds::series::{
    compose, revert, tree_function_series, tree_inverse_series, PowerSeries,
};
use virial_bounds::verify::{check_bound_domination, tonks, virial_from_cluster};
use virial_bounds::{lambert_w0, BallConvention, RadialPotential};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("runtime {t:?} exceeds {limit:?}"))?;
    Ok(t)
}

fn log_space(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let (a, b) = (lo.log10(), hi.log10());
    (0..n).map(move |i| 10f64.powf(a + (b - a) * i as f64 / (n - 1) as f64))
}

fn lambert_suite() -> Check {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for z in log_space(1e-8, 1e3, 10_000) {
        let w = lambert_w0(z).map_err(|e| e.to_string())?;
        let resid = (w * w.exp() - z).abs() / z.max(1.0);
        worst = worst.max(resid);
    }
    ensure(worst <= 1e-12, || {
        format!("worst scaled residual {worst:e}")
    })?;
    let w0 = lambert_w0(0.0).unwrap();
    let we = lambert_w0(E).unwrap();
    ensure(w0 == 0.0, || format!("W(0) = {w0}"))?;
    ensure((we - 1.0).abs() <= 1e-14, || format!("W(e) = {we}"))?;
    let t = within(Duration::from_secs(1), start)?;
    Ok(format!(
        "worst residual {worst:.2e}, W(e)-1 = {:.1e}, {t:.2?}",
        we - 1.0
    ))
}

fn closed_form_optimum() -> Check {
    let start = Instant::now();
    let grid: Vec<f64> = log_space(1e-3, 1e3, 20).collect();
    let mut worst = 0.0f64;
    for &a in &grid {
        for &b in &grid {
            let p = BoundParams::new(a, b, 1.0).map_err(|e| e.to_string())?;
            let closed = general_bound(&p).map_err(|e| e.to_string())?.radius_lower;
            let (_, numeric) = maximize_rho_lower(&p).map_err(|e| e.to_string())?;
            let err = rel_err(numeric, closed);
            ensure(err <= 1e-8, || {
                format!("a={a:e} b={b:e}: numeric {numeric:e} closed {closed:e}")
            })?;
            worst = worst.max(err);
        }
    }
    let t = within(Duration::from_secs(5), start)?;
    Ok(format!(
        "400 points, worst relative gap {worst:.2e}, {t:.2?}"
    ))
}

fn morais_procacci() -> Check {
    let mut worst = 0.0f64;
    for u in log_space(1.0, 1e4, 200) {
        let f = mp_f(u).map_err(|e| e.to_string())?.f;
        let w = lambert_w0(E / (1.0 + u)).unwrap();
        let closed = (w - 1.0).powi(2) / w / (u * u);
        let err = rel_err(f, closed);
        ensure(err <= 1e-8, || format!("u={u}: F {f:e} closed {closed:e}"))?;
        worst = worst.max(err);
    }
    Ok(format!("200 points, worst relative gap {worst:.2e}"))
}

fn low_temperature_quotient() -> Check {
    let zero = comparison_factors(0.0)
        .map_err(|e| e.to_string())?
        .r1_over_r2();
    let ten = comparison_factors(10.0)
        .map_err(|e| e.to_string())?
        .r1_over_r2();
    ensure(zero == 1.0, || format!("r1/r2 at 0 is {zero}"))?;
    ensure((1.25..=1.30).contains(&ten), || {
        format!("r1/r2 at 10 is {ten}")
    })?;
    Ok(format!("r1/r2(0) = {zero}, r1/r2(10) = {ten:.6}"))
}

fn quotient_cap() -> Check {
    let n = 1000;
    let mut max = (0.0, f64::NEG_INFINITY);
    for i in 0..n {
        let bb = 20.0 * i as f64 / (n - 1) as f64;
        let q = comparison_factors(bb)
            .map_err(|e| e.to_string())?
            .f1_over_f2();
        if q > max.1 {
            max = (bb, q);
        }
    }
    ensure(max.1 <= 1.6, || {
        format!("f1/f2 = {} at betaB = {}", max.1, max.0)
    })?;
    let plateau = comparison_factors(20.0).unwrap().f1_over_f2();
    ensure((plateau - 4.0 / E).abs() <= 1e-3, || {
        format!("plateau {plateau} vs 4/e")
    })?;
    for (beta, b, r) in [
        (1.0, 0.0, 1.0),
        (0.5, 2.0, 3.0),
        (2.0, 5.0, 0.2),
        (1.0, 10.0, 7.0),
    ] {
        let input = CorollaryInput::new(beta, b)
            .unwrap()
            .with_c(1.7 * r)
            .with_r(r);
        let pu = pu_bound(&input).unwrap().radius_lower;
        let lp = improved_lp_bound(&input).unwrap().radius_lower;
        ensure(pu > lp, || {
            format!("C/R = 1.7, beta={beta}, B={b}: pu {pu:e} <= lp {lp:e}")
        })?;
    }
    Ok(format!(
        "max f1/f2 = {:.6} at betaB = {:.2}, plateau {plateau:.7} (4/e = {:.7}), crossover holds",
        max.1,
        max.0,
        4.0 / E
    ))
}

fn appendix_identities() -> Check {
    let order = 20;
    let tree = revert(&tree_inverse_series(order).unwrap(), order).map_err(|e| e.to_string())?;
    let mut fact = BigInt::one();
    for n in 1..=order {
        fact *= BigInt::from(n);
        let expected = BigRational::new(num_traits::pow(BigInt::from(n), n - 1), fact.clone());
        ensure(tree.coeff(n) == &expected, || {
            format!("coefficient {n} is {}", tree.coeff(n))
        })?;
    }
    ensure(tree == tree_function_series(order).unwrap(), || {
        "tree series mismatch".into()
    })?;
    let id = compose(
        &tree_function_series(order).unwrap(),
        &tree_inverse_series(order).unwrap(),
    )
    .map_err(|e| e.to_string())?;
    ensure(id == PowerSeries::identity(order).unwrap(), || {
        "f(s e^-s) is not the identity".into()
    })?;
    Ok(format!("exact to order {order}"))
}

fn tonks_end_to_end() -> Check {
    let start = Instant::now();
    let one = BigRational::one();
    let model = tonks(&one, 10).map_err(|e| e.to_string())?;
    let c = virial_from_cluster(&model.b, 10).map_err(|e| e.to_string())?;
    ensure(c.coeff(0).is_zero(), || "nonzero constant term".into())?;
    for n in 1..=10 {
        ensure(c.coeff(n) == &one, || {
            format!("beta c_{n} = {}", c.coeff(n))
        })?;
    }
    let exact = [-1.0, 1.5, -8.0 / 3.0];
    let oracles = [
        hard_rod_b2_quadrature(1.0),
        hard_rod_b3_quadrature(1.0),
        hard_rod_cluster_coefficient(4, 1.0).map_err(|e| e.to_string())?,
    ];
    for (k, (o, e)) in oracles.iter().zip(exact).enumerate() {
        ensure((o - e).abs() <= 1e-6, || {
            format!("Mayer b_{} = {o}, exact {e}", k + 2)
        })?;
        let model_b = num_traits::ToPrimitive::to_f64(model.b.coeff(k + 2)).unwrap();
        ensure(model_b == e, || format!("model b_{} = {model_b}", k + 2))?;
    }
    let report = check_bound_domination(&model, 10).map_err(|e| e.to_string())?;
    ensure(report.consistent, || "cluster series inconsistent".into())?;
    ensure(
        report.all_dominated() && report.strict_beyond_first(),
        || report.to_table(),
    )?;
    let min_margin = report
        .rows
        .iter()
        .skip(1)
        .map(|r| r.margin)
        .fold(f64::INFINITY, f64::min);
    let t = within(Duration::from_secs(10), start)?;
    Ok(format!(
        "beta c_n = 1 for n <= 10, Mayer b2..b4 agree, min margin {min_margin:.3}, {t:.2?}"
    ))
}

fn temperedness() -> Check {
    let ball = 4.0 * PI / 3.0;
    let hs = RadialPotential::hard_sphere(3, 1.0).unwrap();
    for beta in [0.1, 1.0, 7.0] {
        let c = compute_c(&hs, beta).map_err(|e| e.to_string())?.value;
        let r = compute_r(&hs, beta, BallConvention::Volume)
            .map_err(|e| e.to_string())?
            .value;
        ensure((c - ball).abs() <= 1e-8 && (r - ball).abs() <= 1e-8, || {
            format!("hard sphere C={c} R={r}")
        })?;
    }
    for (eps, lambda, beta) in [(1.0, 1.5, 1.0), (0.5, 2.0, 0.3), (2.0, 1.2, 2.5)] {
        let sw = RadialPotential::new(
            3,
            1.0,
            Tail::SquareWell {
                epsilon: eps,
                lambda,
            },
            eps,
        )
        .unwrap();
        let shell = ball * (lambda * lambda * lambda - 1.0);
        let c_exact = ball + (f64::exp(beta * eps) - 1.0) * shell;
        let r_exact = ball + beta * eps * shell;
        let c = compute_c(&sw, beta).map_err(|e| e.to_string())?.value;
        let r = compute_r(&sw, beta, BallConvention::Volume)
            .map_err(|e| e.to_string())?
            .value;
        ensure((c - c_exact).abs() <= 1e-8, || {
            format!("square well C={c} vs {c_exact}")
        })?;
        ensure((r - r_exact).abs() <= 1e-8, || {
            format!("square well R={r} vs {r_exact}")
        })?;
    }
    Ok("hard sphere C = R = 4pi/3; square well matches closed forms".into())
}

fn cli_determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let pot = dir.path().join("pot.json");
    fs::write(
        &pot,
        r#"{"dim":3,"core_radius":1.0,"tail":{"type":"square_well","epsilon":1.0,"lambda":1.5},"B":1.0}"#,
    )
    .unwrap();
    let series = dir.path().join("s.txt");
    fs::write(&series, "0 0\n1 1\n2 -1\n3 1/2\n4 -1/6\n5 1/24\n").unwrap();
    let pot = pot.to_str().unwrap();
    let series = series.to_str().unwrap();
    let svg = |tag: &str| {
        dir.path()
            .join(format!("{tag}.svg"))
            .to_str()
            .unwrap()
            .to_string()
    };
    let (svg_a, svg_b) = (svg("a"), svg("b"));

    let invocations: Vec<Vec<&str>> = vec![
        vec!["lambertw", "3.5"],
        vec!["bound", "general", "--a", "0.3", "--b", "2", "--beta", "1"],
        vec!["bound", "lp", "--beta", "1", "--B", "2", "--C", "1"],
        vec!["bound", "lp-classic", "--betaB", "2", "--C", "1"],
        vec!["bound", "pu", "--beta", "1", "--B", "2", "--R", "1"],
        vec!["bound", "mp-F", "--u", "7.5"],
        vec!["tempered", "--potential", pot, "--beta", "1"],
        vec![
            "compare",
            "--betaB-min",
            "0",
            "--betaB-max",
            "20",
            "--steps",
            "201",
        ],
        vec![
            "sweep",
            "--min",
            "0",
            "--max",
            "20",
            "--steps",
            "101",
            "--outputs",
            "f1,f2,quotients",
            "--format",
            "json",
        ],
        vec!["series", "revert", "--in", series, "--order", "5"],
        vec!["series", "compose", "--outer", series, "--inner", series],
        vec![
            "verify", "--model", "tonks", "--sigma", "1", "--order", "10",
        ],
        vec![
            "verify",
            "--model",
            "hard-sphere",
            "--sigma",
            "1",
            "--order",
            "3",
        ],
    ];
    for args in &invocations {
        let first = virial(args);
        let second = virial(args);
        ensure(first.code == 0, || {
            format!("{args:?} exited {}: {}", first.code, first.stderr)
        })?;
        ensure(first.stdout == second.stdout, || {
            format!("{args:?} output differs between runs")
        })?;
    }
    let sweep = |path: &str| {
        virial(&[
            "sweep",
            "--min",
            "0",
            "--max",
            "5",
            "--steps",
            "101",
            "--outputs",
            "r1,r2",
            "--format",
            "svg",
            "--out",
            path,
        ])
    };
    sweep(&svg_a);
    sweep(&svg_b);
    let (a, b) = (fs::read(&svg_a).unwrap(), fs::read(&svg_b).unwrap());
    ensure(!a.is_empty() && a == b, || "SVG files differ".into())?;
    Ok(format!(
        "{} invocations plus SVG file output byte-identical",
        invocations.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 Lambert W suite", lambert_suite),
        ("2 closed-form optimum", closed_form_optimum),
        ("3 Morais-Procacci equivalence", morais_procacci),
        ("4 low-temperature r1/r2", low_temperature_quotient),
        ("5 f1/f2 cap and crossover", quotient_cap),
        (
            "6 reversion and composition identities",
            appendix_identities,
        ),
        ("7 Tonks gas end-to-end", tonks_end_to_end),
        ("8 temperedness integrals", temperedness),
        ("9 CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
