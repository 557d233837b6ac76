//! Quadrature-only evaluation of `I*`, `I♢` and `G`, independent of the
//! antiderivative tables. Slow; meant for cross-checking.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::chord_dist::{chord_cdf, ChordCdf};
use crate::geometry::Triangle;
use crate::piecewise::PiecewiseFn;
use crate::quadrature::{integrate, integrate_piecewise};
use crate::Result;

#[derive(Debug, Clone)]
pub struct QuadraturePipeline {
    triangle: Triangle,
    chord: PiecewiseFn<ChordCdf>,
    /// `I*` at each chord breakpoint.
    istar_at_breaks: Vec<f64>,
}

impl QuadraturePipeline {
    pub fn new(t: &Triangle) -> Result<Self> {
        let chord = chord_cdf(t)?;
        let u = t.perimeter();
        let mut istar_at_breaks = Vec::with_capacity(chord.breakpoints().len());
        let mut acc = 0.0;
        istar_at_breaks.push(0.0);
        for w in chord.breakpoints().windows(2) {
            acc += u * integrate(|x| chord.eval(x), w[0], w[1]);
            istar_at_breaks.push(acc);
        }
        Ok(QuadraturePipeline {
            triangle: *t,
            chord,
            istar_at_breaks,
        })
    }

    /// `I*(d) = u ∫₀ᵈ F`.
    pub fn i_star(&self, d: f64) -> f64 {
        let bps = self.chord.breakpoints();
        let j = bps.partition_point(|&b| b <= d).saturating_sub(1).min(bps.len() - 2);
        let u = self.triangle.perimeter();
        self.istar_at_breaks[j] + u * integrate(|x| self.chord.eval(x), bps[j], d)
    }

    /// `I♢(d) = ∫₀ᵈ τ I*(τ) dτ`.
    pub fn i_diamond(&self, d: f64) -> f64 {
        let mut breaks: Vec<f64> = self.chord.breakpoints().iter().copied().filter(|&b| b < d).collect();
        breaks.push(d);
        integrate_piecewise(|x| x * self.i_star(x), &breaks)
    }

    pub fn cdf(&self, d: f64) -> f64 {
        let (area, u) = (self.triangle.area(), self.triangle.perimeter());
        (d * d * (PI - 2.0 * u * d / (3.0 * area)) + 2.0 / area * self.i_diamond(d)) / area
    }

    pub fn pdf(&self, d: f64) -> f64 {
        let (area, u) = (self.triangle.area(), self.triangle.perimeter());
        2.0 * d / area * (PI + (self.i_star(d) - u * d) / area)
    }
}
