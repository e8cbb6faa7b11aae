//! Plain-text series files: one coefficient per line, `n <value>`, where the
//! value is `p/q`, an integer, or a decimal. Integers and fractions give an
//! exact series; any decimal entry switches the whole series to `f64`.
//! Blank lines and `#` comments are ignored.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Coefficient, PowerSeries};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum ParsedSeries {
    Exact(PowerSeries<BigRational>),
    Float(PowerSeries<f64>),
}

enum Value {
    Exact(BigRational),
    Float(f64),
}

pub fn parse_series(text: &str) -> Result<ParsedSeries> {
    let mut entries: Vec<(usize, usize, Value)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let perr = |msg: String| Error::Parse {
            line: lineno + 1,
            msg,
        };
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(perr(format!("expected `n <value>`, got `{line}`")));
        };
        let idx: usize = idx
            .parse()
            .map_err(|_| perr(format!("bad coefficient index `{idx}`")))?;
        entries.push((lineno + 1, idx, parse_value(val).map_err(perr)?));
    }
    if entries.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no coefficients".into(),
        });
    }

    let order = entries.iter().map(|e| e.1).max().unwrap_or(0);
    let mut seen = vec![false; order + 1];
    for (line, idx, _) in &entries {
        if std::mem::replace(&mut seen[*idx], true) {
            return Err(Error::Parse {
                line: *line,
                msg: format!("duplicate index {idx}"),
            });
        }
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("missing coefficient {missing}"),
        });
    }

    entries.sort_by_key(|e| e.1);
    if entries.iter().all(|e| matches!(e.2, Value::Exact(_))) {
        let coeffs = entries
            .into_iter()
            .map(|e| match e.2 {
                Value::Exact(q) => q,
                Value::Float(_) => unreachable!(),
            })
            .collect();
        Ok(ParsedSeries::Exact(PowerSeries::new(coeffs)?))
    } else {
        let coeffs = entries
            .into_iter()
            .map(|e| match e.2 {
                Value::Exact(q) => q.to_f64(),
                Value::Float(f) => f,
            })
            .collect();
        Ok(ParsedSeries::Float(PowerSeries::new(coeffs)?))
    }
}

fn parse_value(s: &str) -> std::result::Result<Value, String> {
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.parse().map_err(|_| format!("bad numerator in `{s}`"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| format!("bad denominator in `{s}`"))?;
        if den == BigInt::from(0) {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(Value::Exact(BigRational::new(num, den)));
    }
    if let Ok(i) = s.parse::<BigInt>() {
        return Ok(Value::Exact(BigRational::from_integer(i)));
    }
    let f: f64 = s.parse().map_err(|_| format!("bad coefficient `{s}`"))?;
    if !f.is_finite() {
        return Err(format!("non-finite coefficient `{s}`"));
    }
    Ok(Value::Float(f))
}

pub fn format_series<T: Coefficient>(series: &PowerSeries<T>) -> String {
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| format!("{n} {}\n", c.to_text()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    #[test]
    fn exact_and_float_modes() {
        let exact = parse_series("0 0\n1 1/1\n# comment\n2 3/6\n").unwrap();
        let ParsedSeries::Exact(s) = exact else {
            panic!("expected exact")
        };
        assert_eq!(s.coeffs(), &[ratio(0, 1), ratio(1, 1), ratio(1, 2)]);
        assert_eq!(format_series(&s), "0 0/1\n1 1/1\n2 1/2\n");

        let float = parse_series("1 2.5\n0 0\n").unwrap();
        assert_eq!(
            float,
            ParsedSeries::Float(PowerSeries::new(vec![0.0, 2.5]).unwrap())
        );
    }

    #[test]
    fn malformed_files() {
        assert!(parse_series("").is_err());
        assert!(parse_series("0 1\n0 2\n").is_err());
        assert!(parse_series("0 1\n2 2\n").is_err());
        assert!(parse_series("0 1/0\n").is_err());
        assert!(parse_series("x 1\n").is_err());
        assert!(parse_series("0 1 2\n").is_err());
        assert!(parse_series("0 nan\n").is_err());
    }
}
