//! Distance between two independent uniform points in a triangle.
//!
//! With `A` the area and `u` the perimeter,
//!
//! ```text
//! g(d) = (2d/A) [π + (I*(d) − u·d)/A]
//! G(d) = (1/A) [d² (π − 2u·d/(3A)) + (2/A) I♢(d)]
//! ```
//!
//! where `I*(d) = ∫₀ᵈ u·F(l) dl` and `I♢(d) = ∫₀ᵈ τ·I*(τ) dτ` are assembled
//! segment by segment from the antiderivative tables in [`tables`].

pub mod oracle;
pub mod tables;

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::chord_dist::{breakpoints_of, HFn, HSegment, CLAMP_SLACK};
use crate::geometry::Triangle;
use crate::piecewise::{FnKind, PiecewiseFn, Segments};
use crate::{Error, Result};

pub use tables::{AntiderivativeTable, GateReport, Route};

#[derive(Debug, Clone, Copy)]
struct Prefix {
    segment: HSegment,
    /// `I*` at the segment start.
    istar_lo: f64,
    /// `I♢` at the segment start.
    idiamond_lo: f64,
}

/// Point-distance PDF and CDF of one triangle.
#[derive(Debug, Clone)]
pub struct PointDistance {
    table: AntiderivativeTable,
    prefixes: Vec<Prefix>,
}

impl PointDistance {
    pub fn new(t: &Triangle) -> Self {
        Self::from_table(AntiderivativeTable::new(t))
    }

    pub fn from_table(table: AntiderivativeTable) -> Self {
        let mut prefixes = Vec::new();
        let (mut istar, mut idiamond) = (0.0, 0.0);
        for segment in table.segments() {
            let p = Prefix {
                segment,
                istar_lo: istar,
                idiamond_lo: idiamond,
            };
            idiamond += k_term(&table, &p, segment.hi);
            istar += table.j_star(segment.k, segment.lo, segment.hi);
            prefixes.push(p);
        }
        PointDistance { table, prefixes }
    }

    pub fn triangle(&self) -> &Triangle {
        self.table.triangle()
    }

    pub fn table(&self) -> &AntiderivativeTable {
        &self.table
    }

    /// `(case, k)` labels of the accumulation terms, one per active segment.
    pub fn terms(&self) -> impl Iterator<Item = (u8, HFn)> + '_ {
        let case = self.triangle().classify().index();
        self.prefixes.iter().map(move |p| (case, p.segment.k))
    }

    fn check(&self, d: f64) -> Result<f64> {
        let a = self.triangle().a();
        if !(d >= 0.0 && d <= a * (1.0 + CLAMP_SLACK)) {
            return Err(Error::Domain { value: d, max: a });
        }
        Ok(d.min(a))
    }

    fn segment_index(&self, d: f64) -> usize {
        self.prefixes
            .partition_point(|p| p.segment.hi < d)
            .min(self.prefixes.len() - 1)
    }

    fn istar_on(&self, i: usize, d: f64) -> f64 {
        let p = &self.prefixes[i];
        p.istar_lo + self.table.j_star(p.segment.k, p.segment.lo, d)
    }

    fn idiamond_on(&self, i: usize, d: f64) -> f64 {
        let p = &self.prefixes[i];
        p.idiamond_lo + k_term(&self.table, p, d)
    }

    /// `I*(d)` for `0 ≤ d ≤ a`.
    pub fn i_star(&self, d: f64) -> Result<f64> {
        let d = self.check(d)?;
        Ok(self.istar_on(self.segment_index(d), d))
    }

    /// `I♢(d)` for `0 ≤ d ≤ a`.
    pub fn i_diamond(&self, d: f64) -> Result<f64> {
        let d = self.check(d)?;
        Ok(self.idiamond_on(self.segment_index(d), d))
    }

    fn pdf_on(&self, i: usize, d: f64) -> f64 {
        let t = self.triangle();
        let (area, u) = (t.area(), t.perimeter());
        2.0 * d / area * (PI + (self.istar_on(i, d) - u * d) / area)
    }

    fn cdf_on(&self, i: usize, d: f64) -> f64 {
        let t = self.triangle();
        let (area, u) = (t.area(), t.perimeter());
        (d * d * (PI - 2.0 * u * d / (3.0 * area)) + 2.0 / area * self.idiamond_on(i, d)) / area
    }

    /// `g(d)`; zero outside `[0, a]`.
    pub fn pdf(&self, d: f64) -> f64 {
        match self.check(d) {
            Ok(d) => self.pdf_on(self.segment_index(d), d),
            Err(_) if d.is_nan() => f64::NAN,
            Err(_) => 0.0,
        }
    }

    /// `G(d)`; zero below the support and one above it.
    pub fn cdf(&self, d: f64) -> f64 {
        match self.check(d) {
            Ok(d) => self.cdf_on(self.segment_index(d), d),
            Err(_) if d.is_nan() => f64::NAN,
            Err(_) if d < 0.0 => 0.0,
            Err(_) => 1.0,
        }
    }

    fn breakpoints(&self) -> Vec<f64> {
        let segs: Vec<HSegment> = self.prefixes.iter().map(|p| p.segment).collect();
        breakpoints_of(&segs)
    }
}

/// `K(d) = ½(d² − l²)[I*(l) − H*_k(l)] + J♢_k(l, d)` on the segment starting at `l`.
fn k_term(table: &AntiderivativeTable, p: &Prefix, d: f64) -> f64 {
    let HSegment { k, lo, .. } = p.segment;
    0.5 * (d * d - lo * lo) * (p.istar_lo - table.h_star(k, lo)) + table.j_diamond(k, lo, d)
}

/// Segment evaluator behind [`pdist_pdf`] and [`pdist_cdf`].
#[derive(Debug, Clone)]
pub struct PdistSegments {
    dist: PointDistance,
    kind: FnKind,
}

impl PdistSegments {
    pub fn distribution(&self) -> &PointDistance {
        &self.dist
    }
}

impl Segments for PdistSegments {
    fn eval_segment(&self, index: usize, x: f64) -> f64 {
        match self.kind {
            FnKind::Pdf => self.dist.pdf_on(index, x),
            FnKind::Cdf => self.dist.cdf_on(index, x),
        }
    }
}

fn piecewise(dist: PointDistance, kind: FnKind) -> Result<PiecewiseFn<PdistSegments>> {
    let bps = dist.breakpoints();
    PiecewiseFn::new(&bps, PdistSegments { dist, kind }, kind, 0.0)
}

/// `g` as a validated piecewise function on `[0, a]`.
pub fn pdist_pdf(t: &Triangle) -> Result<PiecewiseFn<PdistSegments>> {
    piecewise(PointDistance::new(t), FnKind::Pdf)
}

/// `G` as a validated piecewise function on `[0, a]`.
pub fn pdist_cdf(t: &Triangle) -> Result<PiecewiseFn<PdistSegments>> {
    piecewise(PointDistance::new(t), FnKind::Cdf)
}

pub fn i_star(t: &Triangle, d: f64) -> Result<f64> {
    PointDistance::new(t).i_star(d)
}

pub fn i_diamond(t: &Triangle, d: f64) -> Result<f64> {
    PointDistance::new(t).i_diamond(d)
}
