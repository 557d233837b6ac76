use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Sides violate the strict triangle inequality or the area/angle floor.
    DegenerateTriangle,
    /// Angles are non-positive or do not sum to π.
    InvalidAngles,
    /// An argument lies outside the support `[0, a]`.
    Domain {
        value: f64,
        max: f64,
    },
    /// A piecewise function failed one of its structural invariants.
    Construction(&'static str),
    /// Empirical CDFs need at least one sample.
    EmptySample,
    InvalidScale(f64),
    /// A composed cross-distance function is not a CDF (inconsistent whole-region input).
    NotACdf {
        at: f64,
        value: f64,
    },
    /// The triangle is not the shape the closed form was derived for.
    ShapeMismatch,
    /// The requested triangle-pair configuration has no solved decomposition.
    UnsupportedConfiguration(&'static str),
    /// Two triangles do not share a side of equal length.
    NoSharedSide,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateTriangle => f.write_str("degenerate triangle"),
            Error::InvalidAngles => {
                f.write_str("invalid angles: each must be positive and they must sum to 180 degrees")
            }
            Error::Domain { value, max } => write!(f, "argument {value} outside [0, {max}]"),
            Error::Construction(what) => write!(f, "piecewise construction failed: {what}"),
            Error::EmptySample => f.write_str("empty sample"),
            Error::InvalidScale(s) => write!(f, "scale factor must be positive, got {s}"),
            Error::NotACdf { at, value } => {
                write!(f, "composed function is not a CDF (value {value} at {at})")
            }
            Error::ShapeMismatch => f.write_str("triangle does not match the required shape"),
            Error::UnsupportedConfiguration(why) => write!(f, "unsupported configuration: {why}"),
            Error::NoSharedSide => f.write_str("triangles do not share a side"),
        }
    }
}

impl core::error::Error for Error {}
