//! Reference distributions with elementary closed forms: the unit equilateral
//! triangle, the unit rhombus made of two such triangles, and two cross-triangle
//! distances inside them built from `(120°, 30°, 30°)` triangles.
//!
//! Each function is a list of branches; [`NamedDistribution::branch_cdf`] and
//! [`NamedDistribution::branch_pdf`] expose single branches so continuity can be
//! checked at the exact branch points.

use core::f64::consts::PI;

use crate::piecewise::{FnKind, PiecewiseFn};
use crate::{Error, Result};

const R3: f64 = 1.732_050_807_568_877_2;

/// A branch selector: `(branch index, d) -> value`.
pub type Branches = fn(usize, f64) -> f64;

// Branch formulas are also evaluated exactly at their branch points, where
// rounding can push an argument just outside the domain.
fn asin(x: f64) -> f64 {
    libm::asin(x.clamp(-1.0, 1.0))
}

fn acos(x: f64) -> f64 {
    libm::acos(x.clamp(-1.0, 1.0))
}

fn sqrt(x: f64) -> f64 {
    libm::sqrt(x.max(0.0))
}

fn sq(x: f64) -> f64 {
    x * x
}

fn pow4(x: f64) -> f64 {
    sq(sq(x))
}

fn g_et_cdf(i: usize, d: f64) -> f64 {
    match i {
        0 => 2.0 * ((1.0 + 2.0 * R3 * PI / 9.0) * pow4(d) - 16.0 / 3.0 * d * d * d + 2.0 * R3 * PI / 3.0 * d * d),
        _ => {
            2.0 * (4.0 * R3 * d * d / 3.0 * (d * d + 3.0) * asin(R3 / (2.0 * d))
                + (26.0 * d * d / 3.0 + 1.0) * sqrt(d * d - 0.75)
                + (1.0 - 4.0 * R3 * PI / 9.0) * pow4(d)
                - 16.0 / 3.0 * d * d * d
                - 4.0 * R3 * PI / 3.0 * d * d)
        }
    }
}

fn g_et_pdf(i: usize, d: f64) -> f64 {
    match i {
        0 => 4.0 * d * ((2.0 + 4.0 * R3 * PI / 9.0) * d * d - 8.0 * d + 2.0 * R3 * PI / 3.0),
        _ => {
            4.0 * d
                * (2.0 * R3 / 3.0 * (4.0 * d * d + 6.0) * asin(R3 / (2.0 * d))
                    + (2.0 - 8.0 * R3 * PI / 9.0) * d * d
                    + 6.0 * sqrt(4.0 * d * d - 3.0)
                    - 8.0 * d
                    - 4.0 * R3 * PI / 3.0)
        }
    }
}

fn g_r_cdf(i: usize, d: f64) -> f64 {
    match i {
        0 => (2.0 / 3.0 + R3 * PI / 27.0) * pow4(d) - 32.0 / 9.0 * d * d * d + 2.0 * R3 * PI / 3.0 * d * d,
        1 => {
            4.0 * R3 / 3.0 * (2.0 * d * d + pow4(d) / 3.0) * asin(R3 / (2.0 * d))
                + (2.0 / 3.0 - 5.0 * R3 * PI / 27.0) * pow4(d)
                - 32.0 / 9.0 * d * d * d
                - 2.0 * R3 * PI / 3.0 * d * d
                + 1.0 / 6.0 * (14.0 * d * d + 3.0) * sqrt(4.0 * d * d - 3.0)
        }
        _ => {
            2.0 * R3 / 3.0 * (2.0 * d * d - pow4(d) / 3.0) * asin(R3 / (2.0 * d))
                + (R3 * PI / 27.0 - 1.0 / 3.0) * pow4(d)
                - (2.0 * R3 * PI / 9.0 + 1.0) * d * d
                + 1.0 / 36.0 * (22.0 * d * d + 15.0) * sqrt(4.0 * d * d - 3.0)
                + 0.25
        }
    }
}

fn g_r_pdf(i: usize, d: f64) -> f64 {
    let v = match i {
        0 => (4.0 / 3.0 + 2.0 * R3 * PI / 27.0) * d * d - 16.0 / 3.0 * d + 2.0 * R3 * PI / 3.0,
        1 => {
            8.0 * R3 / 3.0 * (1.0 + d * d / 3.0) * asin(R3 / (2.0 * d)) + (4.0 / 3.0 - 10.0 * R3 * PI / 27.0) * d * d
                - 16.0 / 3.0 * d
                + 10.0 / 3.0 * sqrt(4.0 * d * d - 3.0)
                - 2.0 * R3 * PI / 3.0
        }
        _ => {
            4.0 * R3 / 3.0 * (1.0 - d * d / 3.0) * asin(R3 / (2.0 * d)) - (2.0 / 3.0 - 2.0 * R3 * PI / 27.0) * d * d
                + sqrt(4.0 * d * d - 3.0)
                - 2.0 * R3 * PI / 9.0
                - 1.0
        }
    };
    2.0 * d * v
}

fn g_r2t_cdf(i: usize, d: f64) -> f64 {
    let d2 = d * d;
    match i {
        0 => 32.0 * d2 * d - (26.0 * R3 * PI / 3.0 + 6.0) * pow4(d),
        1 => {
            let s = sqrt(36.0 * d2 - 3.0);
            (24.0 * R3 * acos(R3 / (6.0 * d)) - 26.0 * R3 * PI / 3.0 - 6.0) * pow4(d)
                + 32.0 * d2 * d
                + (4.0 * R3 * PI - 26.0 / 3.0 * s - 8.0 * R3 * asin(R3 / (6.0 * d))) * d2
                - s / 9.0
        }
        2 => {
            1.0 / 9.0 * (126.0 * d2 + 9.0) * sqrt(12.0 * d2 - 3.0)
                - 1.0 / 9.0 * (1.0 + 78.0 * d2) * sqrt(36.0 * d2 - 3.0)
                - 38.0 * d2 / 3.0
                    * (12.0 * R3 / 19.0 * asin(R3 / (6.0 * d))
                        - 36.0 * R3 * d2 / 19.0 * acos(R3 / (6.0 * d))
                        - 12.0 * R3 / 19.0 * (2.0 + d2) * asin(1.0 / (2.0 * d))
                        + R3 * PI * (d2 + 6.0 / 19.0)
                        + 9.0 * d2 / 19.0
                        - 48.0 * d / 19.0)
        }
        _ => {
            (8.0 * R3 * acos(1.0 / (2.0 * d)) - 4.0 * R3 * asin(1.0 / (2.0 * d)) - 2.0 * R3 * PI - 12.0) * pow4(d)
                + 32.0 * d2 * d
                + R3 / 2.0 * (1.0 - 10.0 * d2) * sqrt(4.0 * d2 - 1.0)
                - 6.0 * d2
                + 0.5
        }
    }
}

fn g_r2t_pdf(i: usize, d: f64) -> f64 {
    let d2 = d * d;
    let v = match i {
        0 => 36.0 * d - (9.0 + 13.0 * R3 * PI) * d2,
        1 => {
            (36.0 * R3 * acos(R3 / (6.0 * d)) - 13.0 * R3 * PI - 9.0) * d2
                - 9.0 * sqrt(36.0 * d2 - 3.0)
                - 6.0 * R3 * asin(R3 / (6.0 * d))
                + 3.0 * R3 * PI
                + 36.0 * d
        }
        2 => {
            12.0 * R3 * (1.0 + d2) * asin(1.0 / (2.0 * d))
                + (36.0 * R3 * acos(R3 / (6.0 * d)) - 9.0 - 19.0 * R3 * PI) * d2
                + 15.0 * sqrt(12.0 * d2 - 3.0)
                - 3.0 * R3 * PI
                - 6.0 * R3 * asin(R3 / (6.0 * d))
                - 9.0 * sqrt(36.0 * d2 - 3.0)
                + 36.0 * d
        }
        _ => {
            (12.0 * R3 * acos(1.0 / (2.0 * d)) - 6.0 * R3 * asin(1.0 / (2.0 * d)) - 3.0 * R3 * PI - 18.0) * d2
                - 9.0 * R3 / 2.0 * sqrt(4.0 * d2 - 1.0)
                + 36.0 * d
                - 4.5
        }
    };
    8.0 / 3.0 * d * v
}

fn g_c2t_cdf(i: usize, d: f64) -> f64 {
    let d2 = d * d;
    match i {
        0 => 32.0 * R3 / 3.0 * d2 * d - (6.0 + 4.0 * R3 * PI) * pow4(d),
        1 => {
            1.0 / 18.0 * (-78.0 * d2 - 1.0) * sqrt(36.0 * d2 - 3.0)
                - 4.0
                    * d2
                    * (R3 * asin(R3 / (6.0 * d)) - 3.0 * R3 * d2 * acos(R3 / (6.0 * d))
                        + (PI * d2 - 8.0 / 3.0 * d - PI / 2.0) * R3
                        + 1.5 * d2)
        }
        2 => {
            R3 / 6.0
                * (16.0 * PI * d2
                    - 4.0 * PI * pow4(d)
                    - sqrt(4.0 * d2 - 1.0) * (1.0 + 26.0 * d2)
                    - 24.0 * d2 * (asin(1.0 / (2.0 * d)) - d2 * acos(1.0 / (2.0 * d))))
        }
        _ => {
            1.0 / 6.0 * (78.0 * d2 + 9.0) * sqrt(4.0 * d2 - 3.0)
                - 8.0 * R3 / 3.0
                    * ((1.0 / 16.0 + 13.0 / 8.0 * d2) * sqrt(4.0 * d2 - 1.0)
                        + d2 * (1.5 * asin(1.0 / (2.0 * d))
                            - (1.5 * d2 + 4.5) * asin(R3 / (2.0 * d))
                            - 1.5 * d2 * acos(1.0 / (2.0 * d))
                            + PI * d2
                            + 1.25 * PI))
        }
    }
}

fn g_c2t_pdf(i: usize, d: f64) -> f64 {
    let d2 = d * d;
    match i {
        0 => 8.0 / 3.0 * (12.0 * R3 - 9.0 * d - 6.0 * R3 * PI * d) * d2,
        1 => {
            4.0 / 3.0
                * d
                * ((36.0 * R3 * acos(R3 / (6.0 * d)) - 12.0 * R3 * PI - 18.0) * d2 + 24.0 * R3 * d
                    - 9.0 * sqrt(36.0 * d2 - 3.0)
                    + 3.0 * R3 * PI
                    - 6.0 * R3 * asin(R3 / (6.0 * d)))
        }
        2 => {
            4.0 / 9.0
                * d
                * ((36.0 * R3 * acos(1.0 / (2.0 * d)) - 6.0 * R3 * PI) * d2
                    - 27.0 * sqrt(12.0 * d2 - 3.0)
                    - 18.0 * R3 * asin(1.0 / (2.0 * d))
                    + 12.0 * R3 * PI)
        }
        _ => {
            32.0 * R3 / 3.0
                * d
                * (9.0 * R3 / 8.0 * sqrt(4.0 * d2 - 3.0) - 9.0 / 8.0 * sqrt(4.0 * d2 - 1.0)
                    + (1.5 * d2 + 9.0 / 4.0) * asin(R3 / (2.0 * d))
                    + 1.5 * d2 * acos(1.0 / (2.0 * d))
                    - PI * d2
                    - 0.75 * asin(1.0 / (2.0 * d))
                    - 5.0 / 8.0 * PI)
        }
    }
}

/// A closed-form distance distribution on `[0, D·scale]`.
#[derive(Debug, Clone)]
pub struct NamedDistribution {
    id: &'static str,
    cdf: PiecewiseFn<Branches>,
    pdf: PiecewiseFn<Branches>,
    scale: f64,
}

impl NamedDistribution {
    fn build(id: &'static str, breaks: &[f64], cdf: Branches, pdf: Branches) -> Self {
        let cdf = PiecewiseFn::new(breaks, cdf, FnKind::Cdf, 0.0).expect("closed-form CDF validates");
        let pdf = PiecewiseFn::new(breaks, pdf, FnKind::Pdf, 0.0).expect("closed-form PDF validates");
        NamedDistribution {
            id,
            cdf,
            pdf,
            scale: 1.0,
        }
    }

    /// The identifier used on the command line.
    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// `[0, D·scale]`.
    pub fn support(&self) -> (f64, f64) {
        (0.0, self.cdf.support().1 * self.scale)
    }

    /// Branch points in the scaled variable, support ends excluded.
    pub fn branch_points(&self) -> impl Iterator<Item = f64> + '_ {
        let bps = self.cdf.breakpoints();
        bps[1..bps.len() - 1].iter().map(move |b| b * self.scale)
    }

    pub fn cdf(&self, d: f64) -> f64 {
        self.cdf.eval(d / self.scale)
    }

    pub fn pdf(&self, d: f64) -> f64 {
        self.pdf.eval(d / self.scale) / self.scale
    }

    /// Branch `i` of the unscaled CDF, evaluated without selecting by `d`.
    pub fn branch_cdf(&self, i: usize, d: f64) -> f64 {
        (self.cdf.source())(i, d)
    }

    pub fn branch_pdf(&self, i: usize, d: f64) -> f64 {
        (self.pdf.source())(i, d)
    }

    /// The same distribution for the figure enlarged by `s`: `G(d/s)` and `g(d/s)/s`.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::InvalidScale(s));
        }
        let mut out = self.clone();
        out.scale *= s;
        Ok(out)
    }
}

/// Equilateral triangle of side 1.
pub fn equilateral_unit() -> NamedDistribution {
    NamedDistribution::build("equilateral-unit", &[0.0, R3 / 2.0, 1.0], g_et_cdf, g_et_pdf)
}

/// Rhombus of side 1 with angles 60° and 120°.
pub fn rhombus_unit() -> NamedDistribution {
    NamedDistribution::build("rhombus-unit", &[0.0, R3 / 2.0, 1.0, R3], g_r_cdf, g_r_pdf)
}

/// Cross distance between the two `(120°, 30°, 30°)` triangles of long side 1
/// that share their long side, forming a rhombus.
pub fn iso_pi6_rhombus_pair() -> NamedDistribution {
    NamedDistribution::build(
        "iso-pi6-rhombus-pair",
        &[0.0, R3 / 6.0, 0.5, R3 / 3.0, 1.0],
        g_r2t_cdf,
        g_r2t_pdf,
    )
}

/// Cross distance between two of the three `(120°, 30°, 30°)` triangles that
/// tile a unit equilateral triangle around its centroid.
pub fn iso_pi6_concave_pair() -> NamedDistribution {
    NamedDistribution::build(
        "iso-pi6-concave-pair",
        &[0.0, R3 / 6.0, R3 / 3.0, R3 / 2.0, 1.0],
        g_c2t_cdf,
        g_c2t_pdf,
    )
}

/// Identifiers accepted by [`by_id`].
pub const IDS: [&str; 4] = [
    "equilateral-unit",
    "rhombus-unit",
    "iso-pi6-rhombus-pair",
    "iso-pi6-concave-pair",
];

pub fn by_id(id: &str) -> Option<NamedDistribution> {
    match id {
        "equilateral-unit" => Some(equilateral_unit()),
        "rhombus-unit" => Some(rhombus_unit()),
        "iso-pi6-rhombus-pair" => Some(iso_pi6_rhombus_pair()),
        "iso-pi6-concave-pair" => Some(iso_pi6_concave_pair()),
        _ => None,
    }
}
