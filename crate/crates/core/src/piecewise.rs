//! Piecewise scalar functions on a finite support, used for `F`, `g` and `G`.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Continuity tolerance at interior breakpoints.
pub const CONTINUITY_TOL: f64 = 1e-9;
/// Tolerance on the CDF boundary values.
pub const BOUNDARY_TOL: f64 = 1e-9;
/// Points on the construction probe grid.
pub const PROBE_POINTS: usize = 1000;
/// Allowed negative excursion of a PDF on the probe grid.
pub const PDF_FLOOR: f64 = -1e-12;
/// Allowed decrease between consecutive CDF probes (rounding noise only).
pub const MONOTONE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FnKind {
    Cdf,
    Pdf,
}

/// Source of per-segment values. `index` refers to the segment list the
/// function was built from, before zero-width segments were dropped.
pub trait Segments {
    fn eval_segment(&self, index: usize, x: f64) -> f64;
}

impl<F: Fn(usize, f64) -> f64> Segments for F {
    fn eval_segment(&self, index: usize, x: f64) -> f64 {
        self(index, x)
    }
}

/// Ordered breakpoints `x₀ < … < x_n` with one evaluator per segment.
///
/// Outside the support the function is `0` (PDF) or `0`/`1` (CDF). At an
/// interior breakpoint the left segment is used.
#[derive(Debug, Clone)]
pub struct PiecewiseFn<S> {
    breakpoints: Vec<f64>,
    ids: Vec<usize>,
    source: S,
    kind: FnKind,
}

impl<S: Segments> PiecewiseFn<S> {
    /// Builds and validates a piecewise function. `raw_breakpoints` has one more
    /// entry than there are source segments; segments of width `≤ min_width` are
    /// dropped.
    pub fn new(raw_breakpoints: &[f64], source: S, kind: FnKind, min_width: f64) -> Result<Self> {
        if raw_breakpoints.len() < 2 {
            return Err(Error::Construction("need at least one segment"));
        }
        let mut breakpoints = Vec::with_capacity(raw_breakpoints.len());
        let mut ids = Vec::with_capacity(raw_breakpoints.len() - 1);
        breakpoints.push(raw_breakpoints[0]);
        for (i, w) in raw_breakpoints.windows(2).enumerate() {
            let last = *breakpoints.last().unwrap();
            if !(w[1] - last).is_finite() {
                return Err(Error::Construction("non-finite breakpoint"));
            }
            if w[1] - last > min_width {
                breakpoints.push(w[1]);
                ids.push(i);
            } else if w[1] - last < -min_width {
                return Err(Error::Construction("breakpoints not increasing"));
            }
        }
        if ids.is_empty() {
            return Err(Error::Construction("all segments have zero width"));
        }
        // keep the exact right end of the support
        *breakpoints.last_mut().unwrap() = *raw_breakpoints.last().unwrap();
        let f = PiecewiseFn {
            breakpoints,
            ids,
            source,
            kind,
        };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        for (j, pair) in self.ids.windows(2).enumerate() {
            let x = self.breakpoints[j + 1];
            let left = self.source.eval_segment(pair[0], x);
            let right = self.source.eval_segment(pair[1], x);
            if !((left - right).abs() <= CONTINUITY_TOL * left.abs().max(1.0)) {
                return Err(Error::Construction("discontinuity at a breakpoint"));
            }
        }
        let (lo, hi) = self.support();
        match self.kind {
            FnKind::Cdf => {
                let first = self.source.eval_segment(self.ids[0], lo);
                let last = self.source.eval_segment(*self.ids.last().unwrap(), hi);
                if !(first.abs() <= BOUNDARY_TOL) {
                    return Err(Error::Construction("CDF does not start at 0"));
                }
                if !((last - 1.0).abs() <= BOUNDARY_TOL) {
                    return Err(Error::Construction("CDF does not end at 1"));
                }
                let mut prev = f64::NEG_INFINITY;
                for x in probe_grid(lo, hi, PROBE_POINTS) {
                    let v = self.eval(x);
                    if !(v >= prev - MONOTONE_SLACK) {
                        return Err(Error::Construction("CDF decreases on the probe grid"));
                    }
                    prev = v;
                }
            }
            FnKind::Pdf => {
                for x in probe_grid(lo, hi, PROBE_POINTS) {
                    if !(self.eval(x) >= PDF_FLOOR) {
                        return Err(Error::Construction("negative PDF on the probe grid"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x.is_nan() {
            return f64::NAN;
        }
        let (lo, hi) = self.support();
        if x < lo {
            return 0.0;
        }
        if x > hi {
            return match self.kind {
                FnKind::Cdf => 1.0,
                FnKind::Pdf => 0.0,
            };
        }
        let j = self.segment_of(x);
        self.source.eval_segment(self.ids[j], x)
    }

    /// Index (into [`PiecewiseFn::breakpoints`] windows) of the segment that
    /// evaluates `x`; breakpoints belong to the segment on their left.
    pub fn segment_of(&self, x: f64) -> usize {
        let inner = &self.breakpoints[1..];
        inner.partition_point(|&b| b < x).min(inner.len() - 1)
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Source-segment index of every retained segment.
    pub fn segment_ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn kind(&self) -> FnKind {
        self.kind
    }

    pub fn support(&self) -> (f64, f64) {
        (self.breakpoints[0], *self.breakpoints.last().unwrap())
    }

    pub fn source(&self) -> &S {
        &self.source
    }
}

/// `n` equally spaced points covering `[lo, hi]`, endpoints included.
pub fn probe_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> + Clone {
    let step = if n > 1 { (hi - lo) / (n - 1) as f64 } else { 0.0 };
    (0..n).map(move |i| if i + 1 == n { hi } else { lo + i as f64 * step })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramp(_: usize, x: f64) -> f64 {
        x
    }

    #[test]
    fn uniform_cdf_and_boundaries() {
        let f = PiecewiseFn::new(&[0.0, 0.5, 1.0], ramp, FnKind::Cdf, 0.0).unwrap();
        assert_eq!(f.eval(-1.0), 0.0);
        assert_eq!(f.eval(0.25), 0.25);
        assert_eq!(f.eval(2.0), 1.0);
        assert!(f.eval(f64::NAN).is_nan());
    }

    #[test]
    fn left_segment_at_breakpoint() {
        let src = |i: usize, _x: f64| i as f64;
        let f = PiecewiseFn::new(&[0.0, 1.0, 2.0], src, FnKind::Pdf, 0.0);
        // discontinuous on purpose
        assert!(f.is_err());
        let src = |i: usize, x: f64| if i == 0 { x } else { 2.0 * x - 1.0 };
        let f = PiecewiseFn::new(&[0.0, 1.0, 2.0], src, FnKind::Pdf, 0.0).unwrap();
        assert_eq!(f.segment_of(1.0), 0);
        assert_eq!(f.segment_of(1.0 + 1e-15), 1);
        assert_eq!(f.segment_of(0.0), 0);
    }

    #[test]
    fn zero_width_segments_are_dropped() {
        let src = |i: usize, x: f64| {
            assert_ne!(i, 1, "dropped segment evaluated");
            x
        };
        let f = PiecewiseFn::new(&[0.0, 0.5, 0.5, 1.0], src, FnKind::Cdf, 1e-12).unwrap();
        assert_eq!(f.breakpoints(), &[0.0, 0.5, 1.0]);
        assert_eq!(f.segment_ids(), &[0, 2]);
        assert_eq!(f.eval(0.75), 0.75);
    }

    #[test]
    fn rejects_non_cdf() {
        let half = |_: usize, x: f64| 0.5 * x;
        assert_eq!(
            PiecewiseFn::new(&[0.0, 1.0], half, FnKind::Cdf, 0.0).err().unwrap(),
            Error::Construction("CDF does not end at 1")
        );
        let bump = |_: usize, x: f64| libm::sin(core::f64::consts::PI * x) * 0.1 + x;
        assert!(PiecewiseFn::new(&[0.0, 1.0], bump, FnKind::Cdf, 0.0).is_ok());
        let wave = |_: usize, x: f64| libm::sin(4.0 * core::f64::consts::PI * x) * 0.2 + x;
        assert_eq!(
            PiecewiseFn::new(&[0.0, 1.0], wave, FnKind::Cdf, 0.0).err().unwrap(),
            Error::Construction("CDF decreases on the probe grid")
        );
        let neg = |_: usize, x: f64| x - 0.5;
        assert!(PiecewiseFn::new(&[0.0, 1.0], neg, FnKind::Pdf, 0.0).is_err());
        assert!(PiecewiseFn::new(&[1.0, 0.0], ramp, FnKind::Pdf, 0.0).is_err());
    }

    #[test]
    fn probe_grid_hits_endpoints() {
        let g: Vec<f64> = probe_grid(0.0, 0.3, 4).collect();
        assert_eq!(g.len(), 4);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[3], 0.3);
    }
}
