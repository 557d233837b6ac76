//! Closed-form antiderivatives `H*_k = ∫H_k` and `H♢_k = ∫d·H*_k`.
//!
//! Each table is gated at construction: central finite differences of the
//! closed forms must reproduce `H_k` (resp. `d·H*_k`) at interior probes of the
//! segment where `k` is active. A function that fails is replaced by adaptive
//! quadrature anchored at its segment start and reported in [`GateReport`].

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use libm::{acos, asin, sqrt, tan};

use crate::chord_dist::{active_segments, h_value, HFn, HSegment};
use crate::geometry::Triangle;
use crate::quadrature;

/// Relative tolerance of the finite-difference gate.
pub const GATE_TOL: f64 = 1e-5;
/// Interior probes per segment.
pub const GATE_PROBES: usize = 50;
/// Central-difference step relative to `a`.
pub const GATE_STEP: f64 = 1e-6;

fn cot(x: f64) -> f64 {
    1.0 / tan(x)
}

/// `√(d² − h²)`, zero below `h`.
fn root(d: f64, h: f64) -> f64 {
    sqrt((d * d - h * h).max(0.0))
}

/// `arccos(h/d)`, zero below `h`.
fn acos_hd(h: f64, d: f64) -> f64 {
    if d <= h {
        0.0
    } else {
        acos(h / d)
    }
}

/// `arcsin(h/d)`, `π/2` below `h`.
fn asin_hd(h: f64, d: f64) -> f64 {
    if d <= h {
        FRAC_PI_2
    } else {
        asin(h / d)
    }
}

/// `(π−α)cot α + (π−β)cot β + (π−γ)cot γ + 3`
fn angle_sum_term(t: &Triangle) -> f64 {
    let (al, be, ga) = (t.alpha(), t.beta(), t.gamma());
    (PI - al) * cot(al) + (PI - be) * cot(be) + (PI - ga) * cot(ga) + 3.0
}

pub(crate) fn h_star_closed(k: HFn, t: &Triangle, d: f64) -> f64 {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let (ha, hb, hc) = (t.h_a(), t.h_b(), t.h_c());
    let (al, be, ga) = (t.alpha(), t.beta(), t.gamma());
    let s = angle_sum_term(t);
    let d2 = d * d;
    match k {
        HFn::H1 => d2 / 4.0 * s,
        HFn::H2 => {
            1.5 * a * root(d, ha) - a * d2 / (2.0 * ha) * acos_hd(ha, d) + a * ha * asin_hd(ha, d) + d2 / 4.0 * s
        }
        HFn::H3 => {
            0.75 * (a * root(d, ha) + b * root(d, hb)) - d2 / 4.0 * (a / ha * acos_hd(ha, d) + b / hb * acos_hd(hb, d))
                + 0.5 * (a * ha * asin_hd(ha, d) + b * hb * asin_hd(hb, d))
                + d / 2.0 * (PI * d / 4.0 * (a / ha + b / hb) + d + 2.0 * c - ga * d * cot(ga))
        }
        HFn::H4 => {
            0.75 * (b * root(d, hb) + c * root(d, hc)) - d2 / 4.0 * (b / hb * acos_hd(hb, d) + c / hc * acos_hd(hc, d))
                + 0.5 * (b * hb * asin_hd(hb, d) + c * hc * asin_hd(hc, d))
                + d * (d / 4.0 * (al * cot(al) - be * cot(be) - ga * cot(ga))
                    + PI * a * d / (8.0 * ha)
                    + d / 4.0
                    + b
                    + c)
        }
        HFn::H5 => {
            1.5 * (a * root(d, ha) + b * root(d, hb)) - d2 / 2.0 * (a / ha * acos_hd(ha, d) + b / hb * acos_hd(hb, d))
                + a * ha * asin_hd(ha, d)
                + b * hb * asin_hd(hb, d)
                + d2 / 4.0 * s
        }
        HFn::H6 => {
            1.5 * (a * root(d, ha) + b * root(d, hb) + c * root(d, hc))
                - d2 / 2.0 * (a / ha * acos_hd(ha, d) + b / hb * acos_hd(hb, d) + c / hc * acos_hd(hc, d))
                + a * ha * asin_hd(ha, d)
                + b * hb * asin_hd(hb, d)
                + c * hc * asin_hd(hc, d)
                + d2 / 4.0 * s
        }
        HFn::H7 => {
            0.75 * (a * root(d, ha) + b * root(d, hb) + 2.0 * c * root(d, hc))
                - d2 / 4.0 * (a / ha * acos_hd(ha, d) + b / hb * acos_hd(hb, d) + 2.0 * c / hc * acos_hd(hc, d))
                + 0.5 * (a * ha * asin_hd(ha, d) + b * hb * asin_hd(hb, d) + 2.0 * c * hc * asin_hd(hc, d))
                + d / 2.0 * (PI * d / 4.0 * (a / ha + b / hb) + d + 2.0 * c - ga * d * cot(ga))
        }
    }
}

pub(crate) fn h_diamond_closed(k: HFn, t: &Triangle, d: f64) -> f64 {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let (ha, hb, hc) = (t.h_a(), t.h_b(), t.h_c());
    let (al, be, ga) = (t.alpha(), t.beta(), t.gamma());
    let (ca, cb, cg) = (cot(al), cot(be), cot(ga));
    let s = angle_sum_term(t);
    let d2 = d * d;
    let (ra, rb, rc) = (root(d, ha), root(d, hb), root(d, hc));
    let (acs_a, acs_b, acs_c) = (acos_hd(ha, d), acos_hd(hb, d), acos_hd(hc, d));
    let (asn_a, asn_b, asn_c) = (asin_hd(ha, d), asin_hd(hb, d), asin_hd(hc, d));
    match k {
        HFn::H1 => d2 * d2 / 16.0 * s,
        HFn::H2 => {
            let neg_s = (al - PI) * ca + (be - PI) * cb + (ga - PI) * cg - 3.0;
            1.0 / (48.0 * ha)
                * ((26.0 * a * ha * d2 + 4.0 * a * ha * ha * ha) * ra
                    - 3.0 * d2 * (2.0 * a * d2 * acs_a + ha * (d2 * neg_s - 8.0 * a * ha * asn_a)))
        }
        HFn::H3 => {
            1.0 / (96.0 * ha * hb)
                * (26.0 * a * ha * hb * (d2 + 2.0 * ha * ha / 13.0) * ra
                    + 26.0 * b * ha * hb * (d2 + 2.0 * hb * hb / 13.0) * rb
                    - 12.0
                        * d2
                        * (d2 / 2.0 * (a * hb * acs_a + b * ha * acs_b)
                            - 2.0 * ha * hb * (a * ha * asn_a + b * hb * asn_b)
                            + d * (ga * ha * hb * d * cg
                                - ha * ((8.0 * c / 3.0 + d) * hb + PI * b * d / 4.0)
                                - PI * a * hb * d / 4.0)))
        }
        HFn::H4 => {
            1.0 / (96.0 * ha * hb * hc)
                * (4.0 * ha * hb * hc * (b * (13.0 * d2 / 2.0 + hb * hb) * rb + c * (13.0 * d2 / 2.0 + hc * hc) * rc)
                    + 6.0
                        * d2
                        * (-d2 * ha * hc * b * acs_b
                            + hb * (-d2 * c * ha * acs_c
                                + hc * (4.0 * ha * (b * hb * asn_b + c * hc * asn_c)
                                    + d * (d * ha * (al * ca - be * cb - ga * cg)
                                        + ha * (d + 16.0 / 3.0 * (b + c))
                                        + PI * a * d / 2.0)))))
        }
        HFn::H5 => {
            1.0 / (48.0 * ha * hb)
                * (26.0 * ha * hb * (a * (d2 + 2.0 * ha * ha / 13.0) * ra + b * (d2 + 2.0 * hb * hb / 13.0) * rb)
                    - 3.0
                        * d2
                        * (2.0 * a * hb * d2 * acs_a
                            + ha * (2.0 * b * d2 * acs_b
                                - hb * (8.0 * a * ha * asn_a + 8.0 * b * hb * asn_b + d2 * s))))
        }
        HFn::H6 => {
            1.0 / (48.0 * ha * hb * hc)
                * (4.0
                    * ha
                    * hb
                    * hc
                    * (13.0 * a / 2.0 * (d2 + 2.0 * ha * ha / 13.0) * ra
                        + b * (13.0 * d2 / 2.0 + hb * hb) * rb
                        + c * (13.0 * d2 / 2.0 + hc * hc) * rc)
                    - 3.0
                        * d2
                        * (2.0 * a * hb * hc * d2 * acs_a
                            + ha * (2.0 * b * hc * d2 * acs_b
                                + hb * (2.0 * c * d2 * acs_c
                                    - hc * (8.0 * (a * ha * asn_a + b * hb * asn_b + c * hc * asn_c) + d2 * s)))))
        }
        HFn::H7 => {
            1.0 / (96.0 * ha * hb * hc)
                * (26.0
                    * ha
                    * hb
                    * hc
                    * (a * (d2 + 2.0 * ha * ha / 13.0) * ra
                        + b * (d2 + 2.0 * hb * hb / 13.0) * rb
                        + 2.0 * c * (d2 + 2.0 * hc * hc / 13.0) * rc)
                    - 12.0
                        * d2
                        * (d2 / 2.0 * (a * hb * hc * acs_a + b * ha * hc * acs_b + 2.0 * c * ha * hb * acs_c)
                            - hc * (2.0 * ha * hb * (a * ha * asn_a + b * hb * asn_b + 2.0 * c * hc * asn_c)
                                - d * (ga * ha * hb * d * cg
                                    - ha * (hb * (8.0 * c / 3.0 + d) + PI * d * b / 4.0)
                                    - PI * a * hb * d / 4.0))))
        }
    }
}

/// How an antiderivative is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    /// Adaptive quadrature from the start of the segment where `k` is active.
    Quadrature,
}

/// Outcome of the finite-difference gate for one active `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateReport {
    pub k: HFn,
    /// Worst relative residual of `d/dd H*_k − H_k` over the probes.
    pub star_residual: f64,
    /// Worst relative residual of `d/dd H♢_k − d·H*_k` over the probes.
    pub diamond_residual: f64,
    pub star_route: Route,
    pub diamond_route: Route,
}

impl GateReport {
    pub fn uses_fallback(&self) -> bool {
        self.star_route == Route::Quadrature || self.diamond_route == Route::Quadrature
    }
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    segment: HSegment,
    report: GateReport,
}

/// `H*_k` and `H♢_k` for every `k` active on a triangle.
#[derive(Debug, Clone)]
pub struct AntiderivativeTable {
    triangle: Triangle,
    entries: Vec<Entry>,
}

impl AntiderivativeTable {
    pub fn new(t: &Triangle) -> Self {
        Self::build(t, |_| false)
    }

    /// Builds the table but sends every `k` for which `force` returns true
    /// through the quadrature route regardless of the gate.
    pub fn with_forced_quadrature<P: Fn(HFn) -> bool>(t: &Triangle, force: P) -> Self {
        Self::build(t, force)
    }

    fn build<P: Fn(HFn) -> bool>(t: &Triangle, force: P) -> Self {
        let entries = active_segments(t)
            .into_iter()
            .map(|segment| {
                let star_residual = gate_residual(
                    t,
                    segment,
                    |x| h_star_closed(segment.k, t, x),
                    |x| h_value(segment.k, t, x),
                );
                let diamond_residual = gate_residual(
                    t,
                    segment,
                    |x| h_diamond_closed(segment.k, t, x),
                    |x| x * h_star_closed(segment.k, t, x),
                );
                let forced = force(segment.k);
                let star_route = if forced || !(star_residual <= GATE_TOL) {
                    Route::Quadrature
                } else {
                    Route::ClosedForm
                };
                // a quadrature H* invalidates the closed-form H♢ built on it
                let diamond_route = if star_route == Route::Quadrature || !(diamond_residual <= GATE_TOL) {
                    Route::Quadrature
                } else {
                    Route::ClosedForm
                };
                Entry {
                    segment,
                    report: GateReport {
                        k: segment.k,
                        star_residual,
                        diamond_residual,
                        star_route,
                        diamond_route,
                    },
                }
            })
            .collect();
        AntiderivativeTable { triangle: *t, entries }
    }

    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    /// Active segments in order, zero-width segments excluded.
    pub fn segments(&self) -> impl Iterator<Item = HSegment> + '_ {
        self.entries.iter().map(|e| e.segment)
    }

    pub fn reports(&self) -> impl Iterator<Item = GateReport> + '_ {
        self.entries.iter().map(|e| e.report)
    }

    pub fn fallbacks(&self) -> impl Iterator<Item = GateReport> + '_ {
        self.reports().filter(GateReport::uses_fallback)
    }

    fn entry(&self, k: HFn) -> &Entry {
        self.entries
            .iter()
            .find(|e| e.segment.k == k)
            .expect("antiderivative requested for an inactive H function")
    }

    /// `H*_k(d)`.
    ///
    /// # Panics
    /// If `k` is not active for this triangle.
    pub fn h_star(&self, k: HFn, d: f64) -> f64 {
        let e = self.entry(k);
        match e.report.star_route {
            Route::ClosedForm => h_star_closed(k, &self.triangle, d),
            Route::Quadrature => {
                let t = self.triangle;
                quadrature::integrate(|x| h_value(k, &t, x), e.segment.lo, d)
            }
        }
    }

    /// `H♢_k(d)`.
    ///
    /// # Panics
    /// If `k` is not active for this triangle.
    pub fn h_diamond(&self, k: HFn, d: f64) -> f64 {
        let e = self.entry(k);
        match e.report.diamond_route {
            Route::ClosedForm => h_diamond_closed(k, &self.triangle, d),
            Route::Quadrature => quadrature::integrate(|x| x * self.h_star(k, x), e.segment.lo, d),
        }
    }

    /// `J*_k(l, d) = H*_k(d) − H*_k(l)`.
    pub fn j_star(&self, k: HFn, l: f64, d: f64) -> f64 {
        self.h_star(k, d) - self.h_star(k, l)
    }

    /// `J♢_k(l, d) = H♢_k(d) − H♢_k(l)`.
    pub fn j_diamond(&self, k: HFn, l: f64, d: f64) -> f64 {
        self.h_diamond(k, d) - self.h_diamond(k, l)
    }
}

/// Worst relative residual of the central difference of `anti` against
/// `deriv` at the interior probes of `seg`. Probes closer than two steps to
/// either end are skipped.
fn gate_residual<A: Fn(f64) -> f64, D: Fn(f64) -> f64>(t: &Triangle, seg: HSegment, anti: A, deriv: D) -> f64 {
    let step = GATE_STEP * t.a();
    let width = seg.hi - seg.lo;
    let probes: Vec<(f64, f64, f64)> = (1..=GATE_PROBES)
        .map(|i| seg.lo + width * i as f64 / (GATE_PROBES + 1) as f64)
        .filter(|&x| x - 2.0 * step >= seg.lo && x + 2.0 * step <= seg.hi)
        .map(|x| ((anti(x + step) - anti(x - step)) / (2.0 * step), deriv(x), x))
        .collect();
    let scale = probes.iter().map(|p| p.1.abs()).fold(0.0, f64::max);
    let floor = 1e-6 * scale;
    probes
        .iter()
        .map(|&(fd, want, _)| {
            let r = (fd - want).abs() / want.abs().max(floor);
            if r.is_nan() {
                f64::INFINITY
            } else {
                r
            }
        })
        .fold(0.0, f64::max)
}
