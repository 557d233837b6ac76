//! CSV emission: six significant digits, header always present.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context};

/// Formats like C's `%g`: six significant digits, trailing zeros removed,
/// scientific notation below `1e-4` and from `1e6` on.
pub fn fmt_g(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..6).contains(&exp) {
        trim_zeros(&format!("{:.*}", (5 - exp) as usize, x))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Clamps rounding noise out of a CDF column and fails if the column is not
/// nondecreasing within `[0, 1]`.
pub fn check_cdf_column(values: &mut [f64]) -> anyhow::Result<()> {
    const SLACK: f64 = 1e-9;
    let mut prev = 0.0f64;
    for v in values.iter_mut() {
        if !(*v >= -SLACK && *v <= 1.0 + SLACK && *v >= prev - SLACK) {
            bail!("CDF self-check failed: value {v} after {prev}");
        }
        *v = v.clamp(prev, 1.0);
        prev = *v;
    }
    Ok(())
}

/// Replaces negative rounding noise in a density column by zero.
pub fn clamp_pdf_column(values: &mut [f64]) {
    for v in values.iter_mut().filter(|v| **v < 0.0 && **v > -1e-9) {
        *v = 0.0;
    }
}

pub fn open(out: Option<&Path>) -> anyhow::Result<csv::Writer<Box<dyn Write>>> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    Ok(csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink))
}

/// Writes a header and the rows, each value formatted with [`fmt_g`].
pub fn write_columns(out: Option<&Path>, header: &[&str], columns: &[&[f64]]) -> anyhow::Result<()> {
    let mut w = open(out)?;
    w.write_record(header)?;
    let rows = columns.first().map_or(0, |c| c.len());
    for i in 0..rows {
        w.write_record(columns.iter().map(|c| fmt_g(c[i])))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn percent_g() {
        assert_eq!(fmt_g(0.0), "0");
        assert_eq!(fmt_g(1.0), "1");
        assert_eq!(fmt_g(0.5), "0.5");
        assert_eq!(fmt_g(0.123456789), "0.123457");
        assert_eq!(fmt_g(123456.7), "123457");
        assert_eq!(fmt_g(1234567.0), "1.23457e+06");
        assert_eq!(fmt_g(0.0001), "0.0001");
        assert_eq!(fmt_g(0.00001234), "1.234e-05");
        assert_eq!(fmt_g(-2.5), "-2.5");
        assert_eq!(fmt_g(0.99999999), "1");
        assert_eq!(fmt_g(9.999996e-5), "0.0001");
    }

    #[test]
    fn cdf_column_check() {
        let mut ok = [-1e-12, 0.3, 0.3 - 1e-13, 1.0 + 1e-12];
        check_cdf_column(&mut ok).unwrap();
        assert_eq!(ok, [0.0, 0.3, 0.3, 1.0]);
        assert!(check_cdf_column(&mut [0.5, 0.4]).is_err());
        assert!(check_cdf_column(&mut [0.5, 1.1]).is_err());
    }
}
