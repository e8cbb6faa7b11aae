//! Sweeps of the temperature factors over `beta B`, written as CSV and SVG
//! into a directory (default: the system temp dir).

use std::path::PathBuf;

use virial_bounds::emit::{emit, Format};
use virial_bounds::sweep::{run_sweep, SweepOutput, SweepSpec};
use virial_bounds::Result;

fn main() -> Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let figures = [
        ("radius_factors", 0.0, 5.0, "r1,r2"),
        ("radius_quotient", 0.0, 10.0, "r1_over_r2"),
        ("coefficient_quotient", 0.0, 20.0, "f1_over_f2"),
    ];
    for (name, min, max, outputs) in figures {
        let spec = SweepSpec::new(min, max, 201, SweepOutput::parse_list(outputs)?)?;
        let table = run_sweep(&spec)?;
        for (format, ext) in [(Format::Csv, "csv"), (Format::Svg, "svg")] {
            let path = dir.join(format!("{name}.{ext}"));
            std::fs::write(&path, emit(format, &table)?)?;
            println!("wrote {}", path.display());
        }
        let last = table.rows.last().expect("non-empty sweep");
        println!("  at betaB = {}: {:?}", last[0], &last[1..]);
    }
    Ok(())
}
