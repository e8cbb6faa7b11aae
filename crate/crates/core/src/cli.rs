//! The `virial` command line.
//!
//! Exit codes: 0 on success, 1 on argument or domain errors, 2 when a
//! verification check fails.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bounds::{self, BoundParams, BoundResult, CorollaryInput};
use crate::emit::{emit, Format};
use crate::mayer::McConfig;
use crate::potentials::{tempered, BallConvention, RadialPotential};
use crate::series::text::{format_series, parse_series, ParsedSeries};
use crate::series::{compose, format_float, revert, PowerSeries};
use crate::sweep::{comparison_table, run_sweep, SweepOutput, SweepSpec};
use crate::verify::{self, check_bound_domination, cluster_bound_check, BoundFamily, ModelSeries};
use crate::{lambert_w0, Coefficient, Error, Result};

pub const SEED_VAR: &str = "VIRIAL_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "virial",
    version,
    about = "Virial-coefficient and convergence-radius bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Principal branch W0(z) for z >= 0.
    Lambertw {
        #[arg(allow_negative_numbers = true)]
        z: f64,
    },
    /// Coefficient and radius bounds.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Temperedness integrals C(beta) and R(beta) of a potential.
    Tempered {
        /// JSON potential spec.
        #[arg(long)]
        potential: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        /// Ball measure in the core term of R: volume or surface.
        #[arg(long = "B-convention", default_value = "volume")]
        b_convention: String,
    },
    /// CSV of r1, r2, f1, f2 and their quotients over a betaB grid.
    Compare {
        #[arg(long = "betaB-min", allow_negative_numbers = true)]
        min: f64,
        #[arg(long = "betaB-max", allow_negative_numbers = true)]
        max: f64,
        #[arg(long)]
        steps: usize,
    },
    /// Sweep selected factors over betaB.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        min: f64,
        #[arg(long, allow_negative_numbers = true)]
        max: f64,
        #[arg(long)]
        steps: usize,
        /// Comma-separated subset of r1,r2,f1,f2,r1_over_r2,f1_over_f2,quotients.
        #[arg(long)]
        outputs: String,
        /// csv, json or svg.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an SVG chart.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Power-series reversion and composition on text files.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Check the bounds against an exactly invertible model.
    Verify {
        /// tonks, ideal or hard-sphere.
        #[arg(long)]
        model: String,
        /// Rod length or sphere diameter: integer, p/q or decimal.
        #[arg(long, default_value = "1")]
        sigma: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

#[derive(Debug, Subcommand)]
enum BoundCommand {
    /// Bound from cluster parameters a, b.
    General {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        beta: f64,
    },
    /// Improved Lebowitz-Penrose bound from C(beta).
    Lp {
        #[command(flatten)]
        temp: Temperature,
        #[arg(long = "C", allow_negative_numbers = true)]
        c: f64,
    },
    /// Classical Lebowitz-Penrose bound from C(beta).
    LpClassic {
        #[command(flatten)]
        temp: Temperature,
        #[arg(long = "C", allow_negative_numbers = true)]
        c: f64,
    },
    /// Bound from R(beta).
    Pu {
        #[command(flatten)]
        temp: Temperature,
        #[arg(long = "R", allow_negative_numbers = true)]
        r: f64,
    },
    /// The Morais-Procacci maximisation F(u), u = e^{2 beta B}.
    #[command(name = "mp-F")]
    MpF {
        #[arg(long, allow_negative_numbers = true)]
        u: f64,
    },
}

/// Inverse temperature and stability constant, separately or as a product.
#[derive(Debug, Args)]
struct Temperature {
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    #[arg(long = "B", allow_negative_numbers = true)]
    stability_b: Option<f64>,
    /// Product beta*B; beta defaults to 1.
    #[arg(
        long = "betaB",
        allow_negative_numbers = true,
        conflicts_with = "stability_b"
    )]
    beta_b: Option<f64>,
}

impl Temperature {
    fn resolve(&self) -> Result<CorollaryInput> {
        match (self.beta, self.stability_b, self.beta_b) {
            (beta, None, Some(bb)) => {
                let beta = beta.unwrap_or(1.0);
                CorollaryInput::new(beta, bb / beta)
            }
            (Some(beta), Some(b), None) => CorollaryInput::new(beta, b),
            _ => Err(Error::argument("give --beta with --B, or --betaB")),
        }
    }
}

#[derive(Debug, Subcommand)]
enum SeriesCommand {
    /// Compositional inverse of a series with zero constant term.
    Revert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        order: usize,
    },
    /// outer(inner(x)), truncated to the smaller order.
    Compose {
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        inner: PathBuf,
    },
}

/// Run the CLI on `args` (including the program name) and return the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) => 2,
        _ => 1,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Lambertw { z } => {
            let w = lambert_w0(z)?;
            writeln!(out, "{}", format_float(w))?;
        }
        Command::Bound(cmd) => bound(cmd, out)?,
        Command::Tempered {
            potential,
            beta,
            b_convention,
        } => {
            let convention: BallConvention = b_convention.parse()?;
            let pot = RadialPotential::from_json(&read(&potential)?)?;
            print_json(out, &tempered(&pot, beta, convention)?)?;
        }
        Command::Compare { min, max, steps } => {
            let table = comparison_table(min, max, steps)?;
            out.write_all(emit(Format::Csv, &table)?.as_bytes())?;
        }
        Command::Sweep {
            min,
            max,
            steps,
            outputs,
            format,
            out: path,
            svg,
        } => {
            let format: Format = format.parse()?;
            let spec = SweepSpec::new(min, max, steps, SweepOutput::parse_list(&outputs)?)?;
            let table = run_sweep(&spec)?;
            let text = emit(format, &table)?;
            match path {
                Some(p) => fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            if let Some(p) = svg {
                fs::write(p, emit(Format::Svg, &table)?)?;
            }
        }
        Command::Series(cmd) => series(cmd, out)?,
        Command::Verify {
            model,
            sigma,
            order,
        } => verify_model(&model, &sigma, order, out)?,
    }
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::argument(format!("cannot read {}: {e}", path.display())))
}

fn print_json<S: Serialize>(out: &mut dyn Write, value: &S) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn bound_json(result: &BoundResult, extra: Value) -> Result<Value> {
    let mut map: Map<String, Value> = match serde_json::to_value(result)? {
        Value::Object(m) => m,
        _ => unreachable!("BoundResult serializes to an object"),
    };
    if let Value::Object(extra) = extra {
        map.extend(extra);
    }
    Ok(Value::Object(map))
}

fn corollary_json(input: &CorollaryInput) -> Value {
    json!({ "B": input.stability_b, "betaB": input.beta_b() })
}

fn bound(cmd: BoundCommand, out: &mut dyn Write) -> Result<()> {
    let value = match cmd {
        BoundCommand::General { a, b, beta } => {
            let params = BoundParams::new(a, b, beta)?;
            bound_json(&bounds::general_bound(&params)?, json!({ "a": a, "b": b }))?
        }
        BoundCommand::Lp { temp, c } => {
            let input = temp.resolve()?.with_c(c);
            let mut extra = corollary_json(&input);
            extra["C"] = json!(c);
            bound_json(&bounds::improved_lp_bound(&input)?, extra)?
        }
        BoundCommand::LpClassic { temp, c } => {
            let input = temp.resolve()?.with_c(c);
            let mut extra = corollary_json(&input);
            extra["C"] = json!(c);
            bound_json(&bounds::classic_lp_bound(&input)?, extra)?
        }
        BoundCommand::Pu { temp, r } => {
            let input = temp.resolve()?.with_r(r);
            let mut extra = corollary_json(&input);
            extra["R"] = json!(r);
            bound_json(&bounds::pu_bound(&input)?, extra)?
        }
        BoundCommand::MpF { u } => {
            let mp = bounds::mp_f(u)?;
            let w = lambert_w0(std::f64::consts::E / (1.0 + u))?;
            let closed = (w - 1.0).powi(2) / w / (u * u);
            json!({ "u": mp.u, "alpha_star": mp.alpha_star, "F": mp.f, "closed_form": closed })
        }
    };
    print_json(out, &value)
}

fn series(cmd: SeriesCommand, out: &mut dyn Write) -> Result<()> {
    let text = match cmd {
        SeriesCommand::Revert { input, order } => match parse_series(&read(&input)?)? {
            ParsedSeries::Exact(s) => format_series(&revert(&s, order)?),
            ParsedSeries::Float(s) => format_series(&revert(&s, order)?),
        },
        SeriesCommand::Compose { outer, inner } => {
            match (parse_series(&read(&outer)?)?, parse_series(&read(&inner)?)?) {
                (ParsedSeries::Exact(f), ParsedSeries::Exact(g)) => {
                    format_series(&compose(&f, &g)?)
                }
                (f, g) => format_series(&compose(&as_float(f), &as_float(g))?),
            }
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn as_float(s: ParsedSeries) -> PowerSeries<f64> {
    match s {
        ParsedSeries::Exact(s) => s.to_f64(),
        ParsedSeries::Float(s) => s,
    }
}

/// Exact rational from `p/q`, an integer or a plain decimal.
fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::argument(format!("cannot parse `{text}` as a number"));
    let t = text.trim();
    if t.contains('/') {
        return t.parse::<BigRational>().map_err(|_| bad());
    }
    let value: f64 = t.parse().map_err(|_| bad())?;
    if t.contains(['e', 'E']) || !value.is_finite() {
        return BigRational::from_float(value).ok_or_else(bad);
    }
    let (int, frac) = t.split_once('.').unwrap_or((t, ""));
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    Ok(BigRational::new(digits, den))
}

fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::argument(format!("{SEED_VAR} must be an unsigned integer, got `{v}`"))
        }),
        Err(_) => Ok(McConfig::default().seed),
    }
}

fn verify_model(model: &str, sigma: &str, order: usize, out: &mut dyn Write) -> Result<()> {
    match model {
        "tonks" => {
            let sigma = parse_rational(sigma)?;
            report(&verify::tonks(&sigma, order)?, order, out)
        }
        "ideal" => report(&verify::ideal_gas(order)?, order, out),
        "hard-sphere" => {
            if order > 3 {
                return Err(Error::argument("hard-sphere cluster data stops at order 3"));
            }
            let sigma = parse_rational(sigma)?;
            if !sigma.is_positive() {
                return Err(Error::argument("sigma must be > 0"));
            }
            let config = McConfig {
                seed: seed_from_env()?,
                ..McConfig::default()
            };
            let m = verify::hard_sphere(sigma.to_f64(), config)?;
            if let Some(mc) = &m.monte_carlo {
                writeln!(
                    out,
                    "seed: {}  shards: {}  points_per_shard: {}  b3_std_err: {}",
                    mc.config.seed,
                    mc.config.shards,
                    mc.config.points_per_shard,
                    format_float(mc.std_err)
                )?;
            }
            report(&m, order, out)
        }
        other => Err(Error::argument(format!(
            "unknown model `{other}` (tonks|ideal|hard-sphere)"
        ))),
    }
}

fn report<T: Coefficient>(model: &ModelSeries<T>, order: usize, out: &mut dyn Write) -> Result<()> {
    let rep = check_bound_domination(model, order)?;
    out.write_all(rep.to_table().as_bytes())?;
    if let Some(t) = model.temper.filter(|t| !t.c_beta.is_zero()) {
        let input = CorollaryInput::new(t.beta, t.stability_b)?
            .with_c(t.c_beta)
            .with_r(t.r_beta);
        for (family, params) in [
            (BoundFamily::ImprovedLp, bounds::improved_lp_params(&input)?),
            (BoundFamily::Pu, bounds::pu_params(&input)?),
        ] {
            let check = cluster_bound_check(model, params.a, params.b, order.min(model.b.order()))?;
            writeln!(
                out,
                "hypothesis {} (a={}, b={}): {}",
                family.label(),
                format_float(params.a),
                format_float(params.b),
                if check.holds() { "holds" } else { "fails" }
            )?;
        }
    }
    if !rep.passed() {
        let failing: Vec<String> = rep
            .rows
            .iter()
            .filter(|r| !r.dominated)
            .map(|r| r.n.to_string())
            .collect();
        return Err(Error::Verification(if rep.consistent {
            format!("bound violated at n = {}", failing.join(", "))
        } else {
            "cluster series does not reproduce the known virial coefficients".into()
        }));
    }
    Ok(())
}
