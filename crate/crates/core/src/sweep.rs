//! Grids over `beta B` of the radius-bound temperature factors.

use std::str::FromStr;

use rayon::prelude::*;

use crate::bounds::{comparison_factors, ComparisonFactors};
use crate::emit::Table;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepOutput {
    R1,
    R2,
    R1OverR2,
    F1,
    F2,
    F1OverF2,
}

impl SweepOutput {
    pub fn name(self) -> &'static str {
        match self {
            SweepOutput::R1 => "r1",
            SweepOutput::R2 => "r2",
            SweepOutput::R1OverR2 => "r1_over_r2",
            SweepOutput::F1 => "f1",
            SweepOutput::F2 => "f2",
            SweepOutput::F1OverF2 => "f1_over_f2",
        }
    }

    fn value(self, f: &ComparisonFactors) -> f64 {
        match self {
            SweepOutput::R1 => f.r1,
            SweepOutput::R2 => f.r2,
            SweepOutput::R1OverR2 => f.r1_over_r2(),
            SweepOutput::F1 => f.f1,
            SweepOutput::F2 => f.f2,
            SweepOutput::F1OverF2 => f.f1_over_f2(),
        }
    }

    /// Parse a comma-separated list; `quotients` expands to both ratios.
    pub fn parse_list(text: &str) -> Result<Vec<SweepOutput>> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "quotients" {
                out.extend([SweepOutput::R1OverR2, SweepOutput::F1OverF2]);
            } else {
                out.push(item.parse()?);
            }
        }
        Ok(out)
    }
}

impl FromStr for SweepOutput {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            SweepOutput::R1,
            SweepOutput::R2,
            SweepOutput::R1OverR2,
            SweepOutput::F1,
            SweepOutput::F2,
            SweepOutput::F1OverF2,
        ]
        .into_iter()
        .find(|o| o.name() == s)
        .ok_or_else(|| Error::argument(format!("unknown sweep output `{s}`")))
    }
}

/// Uniform grid over `beta B` with both endpoints included.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
    pub outputs: Vec<SweepOutput>,
}

impl SweepSpec {
    pub fn new(min: f64, max: f64, steps: usize, outputs: Vec<SweepOutput>) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::argument(format!(
                "need finite min < max, got [{min}, {max}]"
            )));
        }
        if min < 0.0 {
            return Err(Error::argument("betaB must be >= 0"));
        }
        if steps < 2 {
            return Err(Error::argument("steps must be >= 2"));
        }
        if outputs.is_empty() {
            return Err(Error::argument("no sweep outputs selected"));
        }
        Ok(Self {
            min,
            max,
            steps,
            outputs,
        })
    }

    pub fn grid(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i == self.steps - 1 {
                    self.max
                } else {
                    self.min + (self.max - self.min) * (i as f64 / last)
                }
            })
            .collect()
    }
}

/// Evaluate the selected factors on the grid; points are computed in
/// parallel and assembled in grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<Table> {
    let factors: Vec<ComparisonFactors> = spec
        .grid()
        .into_par_iter()
        .map(comparison_factors)
        .collect::<Result<_>>()?;
    let mut columns = vec!["betaB".to_string()];
    columns.extend(spec.outputs.iter().map(|o| o.name().to_string()));
    let rows = factors
        .iter()
        .map(|f| {
            let mut row = vec![f.beta_b];
            row.extend(spec.outputs.iter().map(|o| o.value(f)));
            row
        })
        .collect();
    Table::new(columns, rows)
}

/// The full comparison table with columns
/// `betaB,r1,r2,r1_over_r2,f1,f2,f1_over_f2`.
pub fn comparison_table(min: f64, max: f64, steps: usize) -> Result<Table> {
    use SweepOutput::*;
    run_sweep(&SweepSpec::new(
        min,
        max,
        steps,
        vec![R1, R2, R1OverR2, F1, F2, F1OverF2],
    )?)
}
