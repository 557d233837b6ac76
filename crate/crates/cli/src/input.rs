//! Parsing of triangle specs, vertex lists and whole-region CDF tables.

use std::fmt;
use std::path::Path;

use tridist_core::geometry::{PlacedTriangle, Point, Triangle};

/// A problem with user input; reported with exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn numbers(list: &str, n: usize, what: &str) -> Result<Vec<f64>, String> {
    let values = list
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| format!("invalid number `{}` in {what}", x.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != n {
        return Err(format!(
            "{what} needs {n} comma-separated numbers, got {}",
            values.len()
        ));
    }
    Ok(values)
}

/// `angles:α,β,γ@a=len` (degrees) or `sides:a,b,c`.
pub fn parse_triangle(spec: &str) -> Result<Triangle, String> {
    let built = if let Some(rest) = spec.strip_prefix("angles:") {
        let (angles, len) = rest
            .split_once("@a=")
            .ok_or_else(|| "expected `angles:<α>,<β>,<γ>@a=<len>`".to_string())?;
        let v = numbers(angles, 3, "angles")?;
        let a = len
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("invalid side length `{len}`"))?;
        if !(a > 0.0 && a.is_finite()) {
            return Err("degenerate triangle: side length must be positive".into());
        }
        Triangle::from_angles_deg(v[0], v[1], v[2], a)
    } else if let Some(rest) = spec.strip_prefix("sides:") {
        let v = numbers(rest, 3, "sides")?;
        Triangle::from_sides(v[0], v[1], v[2])
    } else {
        return Err("expected `angles:<α>,<β>,<γ>@a=<len>` or `sides:<a>,<b>,<c>`".into());
    };
    built.map_err(|e| e.to_string())
}

/// `x,y;x,y;x,y`.
pub fn parse_placed(spec: &str) -> Result<PlacedTriangle, String> {
    let points = spec
        .split(';')
        .map(|p| numbers(p, 2, "a vertex").map(|v| Point::new(v[0], v[1])))
        .collect::<Result<Vec<_>, _>>()?;
    let [p, q, r] = points[..] else {
        return Err(format!(
            "expected three `x,y` vertices separated by `;`, got {}",
            points.len()
        ));
    };
    let placed = PlacedTriangle::new(p, q, r);
    placed.triangle().map_err(|e| e.to_string())?;
    Ok(placed)
}

/// A CDF tabulated at strictly increasing abscissae, linearly interpolated.
/// Below the first abscissa the value is 0, above the last it is 1.
#[derive(Debug, Clone)]
pub struct CdfTable {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl CdfTable {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self, InputError> {
        if xs.len() < 2 || xs.len() != ys.len() {
            return Err(InputError("a CDF table needs at least two rows".into()));
        }
        if let Some(w) = xs
            .windows(2)
            .find(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
        {
            return Err(InputError(format!(
                "CDF table abscissa not strictly increasing at {}",
                w[1]
            )));
        }
        if let Some(y) = ys.iter().find(|y| !(0.0..=1.0).contains(*y)) {
            return Err(InputError(format!("CDF table value {y} outside [0, 1]")));
        }
        Ok(CdfTable { xs, ys })
    }

    /// Reads `d,G` rows; a non-numeric first row is taken as a header.
    pub fn from_csv(path: &Path) -> anyhow::Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_path(path)
            .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
        let (mut xs, mut ys) = (Vec::new(), Vec::new());
        for (i, record) in reader.records().enumerate() {
            let record = record.map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            let parsed: Option<Vec<f64>> = record.iter().map(|f| f.parse().ok()).collect();
            match parsed.as_deref() {
                Some([x, y]) => {
                    xs.push(*x);
                    ys.push(*y);
                }
                None if i == 0 => continue,
                _ => return Err(InputError(format!("{}: row {} is not `d,G`", path.display(), i + 1)).into()),
            }
        }
        Ok(CdfTable::new(xs, ys)?)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x < self.xs[0] {
            return 0.0;
        }
        if x >= self.xs[n - 1] {
            return 1.0;
        }
        let j = self.xs.partition_point(|&b| b <= x);
        let (x0, x1, y0, y1) = (self.xs[j - 1], self.xs[j], self.ys[j - 1], self.ys[j]);
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }
}
