//! Chord-length distribution of a triangle under isotropic uniform random lines.
//!
//! The analytic CDF is `F(l) = H_k(l) / u` on the segment where `H_k` is
//! active; which `H_k` apply and in which order depends on the
//! [`CaseLabel`]. [`chord_sweep`] enumerates chords deterministically over
//! orientation and offset and serves as an independent oracle for `F`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use libm::{acos, sin, sqrt, tan};

use crate::geometry::{CaseLabel, Triangle};
use crate::piecewise::{FnKind, PiecewiseFn, Segments};
use crate::{Error, Result};

pub use crate::montecarlo::{empirical_cdf_from_samples, EmpiricalCdf};

/// Slack allowed on arccos arguments before they are clamped.
pub const CLAMP_SLACK: f64 = 1e-12;
/// Relative width under which a segment counts as zero-width.
pub const ZERO_WIDTH: f64 = 1e-12;
/// Default orientation step of the sweep.
pub const DEFAULT_DTHETA: f64 = PI / 180.0;
/// Default offset step of the sweep (for a triangle with `a = 1`).
pub const DEFAULT_DD: f64 = 1e-3;
/// Tolerance for recognising the special orientations `0, γ, π − β, π`.
pub const ORIENTATION_TOL: f64 = 1e-12;

/// The seven `H` functions from which the chord-length CDF is assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HFn {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
}

impl HFn {
    pub const ALL: [HFn; 7] = [HFn::H1, HFn::H2, HFn::H3, HFn::H4, HFn::H5, HFn::H6, HFn::H7];

    /// `1..=7`.
    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn from_index(k: usize) -> Option<HFn> {
        HFn::ALL.get(k.checked_sub(1)?).copied()
    }
}

/// `arccos(h / l)`, with `φ = 0` whenever `l ≤ h` (up to [`CLAMP_SLACK`] this
/// is the value at the segment start; further below it is the clamped value).
pub(crate) fn phi(h: f64, l: f64) -> f64 {
    if l <= 0.0 {
        return 0.0;
    }
    let r = h / l;
    if r >= 1.0 {
        0.0
    } else if r <= -1.0 {
        PI
    } else {
        acos(r)
    }
}

fn cot(x: f64) -> f64 {
    1.0 / tan(x)
}

/// `H_k(l)`; checks that `0 ≤ l ≤ a`.
pub fn eval_h(k: HFn, t: &Triangle, l: f64) -> Result<f64> {
    if !(l >= 0.0 && l <= t.a() * (1.0 + CLAMP_SLACK)) {
        return Err(Error::Domain { value: l, max: t.a() });
    }
    Ok(h_value(k, t, l))
}

pub(crate) fn h_value(k: HFn, t: &Triangle, l: f64) -> f64 {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let (al, be, ga) = (t.alpha(), t.beta(), t.gamma());
    let (ca, cb, cg) = (cot(al), cot(be), cot(ga));
    let p1 = phi(t.h_a(), l);
    let p2 = phi(t.h_b(), l);
    let p3 = phi(t.h_c(), l);
    match k {
        HFn::H1 => 1.5 * l + 0.5 * l * ((PI - al) * ca + (PI - be) * cb + (PI - ga) * cg),
        HFn::H2 => {
            1.5 * l + a * sin(p1) + 0.5 * l * ((PI - al) * ca + (PI - be - 2.0 * p1) * cb + (PI - ga - 2.0 * p1) * cg)
        }
        HFn::H3 => {
            l + c
                + 0.5 * a * sin(p1)
                + 0.5 * b * sin(p2)
                + 0.5 * l * ((FRAC_PI_2 - p2) * ca + (FRAC_PI_2 - p1) * cb + (PI - 2.0 * ga - p1 - p2) * cg)
        }
        HFn::H4 => {
            0.5 * l
                + b
                + c
                + 0.5 * b * sin(p2)
                + 0.5 * c * sin(p3)
                + 0.5 * l * ((al - p2 - p3) * ca + (FRAC_PI_2 - be - p3) * cb + (FRAC_PI_2 - ga - p2) * cg)
        }
        HFn::H5 => {
            1.5 * l
                + a * sin(p1)
                + b * sin(p2)
                + 0.5
                    * l
                    * ((PI - al - 2.0 * p2) * ca + (PI - be - 2.0 * p1) * cb + (PI - ga - 2.0 * p1 - 2.0 * p2) * cg)
        }
        HFn::H6 => {
            1.5 * l
                + a * sin(p1)
                + b * sin(p2)
                + c * sin(p3)
                + 0.5
                    * l
                    * ((PI - al - 2.0 * p2 - 2.0 * p3) * ca
                        + (PI - be - 2.0 * p1 - 2.0 * p3) * cb
                        + (PI - ga - 2.0 * p1 - 2.0 * p2) * cg)
        }
        HFn::H7 => {
            l + c
                + 0.5 * a * sin(p1)
                + 0.5 * b * sin(p2)
                + c * sin(p3)
                + 0.5
                    * l
                    * ((FRAC_PI_2 - p2 - 2.0 * p3) * ca
                        + (FRAC_PI_2 - p1 - 2.0 * p3) * cb
                        + (PI - 2.0 * ga - p1 - p2) * cg)
        }
    }
}

/// One segment `[lo, hi]` on which `H_k` is active.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HSegment {
    pub k: HFn,
    pub lo: f64,
    pub hi: f64,
}

/// The case-dependent segment sequence on `[0, a]`, zero-width segments included.
pub fn h_segments(t: &Triangle) -> Vec<HSegment> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let (ha, hb, hc) = (t.h_a(), t.h_b(), t.h_c());
    let plan: &[(HFn, f64)] = match t.classify() {
        CaseLabel::Case1 => &[(HFn::H1, ha), (HFn::H2, c), (HFn::H3, b), (HFn::H4, a)],
        CaseLabel::Case2 => &[
            (HFn::H1, ha),
            (HFn::H2, hb),
            (HFn::H5, hc),
            (HFn::H6, c),
            (HFn::H7, b),
            (HFn::H4, a),
        ],
        CaseLabel::Case3 => &[
            (HFn::H1, ha),
            (HFn::H2, hb),
            (HFn::H5, c),
            (HFn::H3, hc),
            (HFn::H7, b),
            (HFn::H4, a),
        ],
    };
    let mut lo = 0.0;
    plan.iter()
        .map(|&(k, hi)| {
            let seg = HSegment { k, lo, hi };
            lo = hi;
            seg
        })
        .collect()
}

/// Segment list with zero-width segments removed.
pub(crate) fn active_segments(t: &Triangle) -> Vec<HSegment> {
    h_segments(t)
        .into_iter()
        .filter(|s| s.hi - s.lo > ZERO_WIDTH * t.a())
        .collect()
}

/// Breakpoints `[0, …, a]` of a segment list.
pub(crate) fn breakpoints_of(segments: &[HSegment]) -> Vec<f64> {
    let mut bps = Vec::with_capacity(segments.len() + 1);
    bps.push(segments[0].lo);
    bps.extend(segments.iter().map(|s| s.hi));
    bps
}

/// Segment evaluator of the chord-length CDF.
#[derive(Debug, Clone)]
pub struct ChordCdf {
    triangle: Triangle,
    segments: Vec<HSegment>,
}

impl ChordCdf {
    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    pub fn segments(&self) -> &[HSegment] {
        &self.segments
    }
}

impl Segments for ChordCdf {
    fn eval_segment(&self, index: usize, x: f64) -> f64 {
        h_value(self.segments[index].k, &self.triangle, x) / self.triangle.perimeter()
    }
}

/// The analytic chord-length CDF `F(l)`.
pub fn chord_cdf(t: &Triangle) -> Result<PiecewiseFn<ChordCdf>> {
    let segments = h_segments(t);
    let bps = breakpoints_of(&segments);
    PiecewiseFn::new(
        &bps,
        ChordCdf { triangle: *t, segments },
        FnKind::Cdf,
        ZERO_WIDTH * t.a(),
    )
}

/// A chord produced by the sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordSample {
    /// Orientation relative to side `CB`, in `[0, π]`.
    pub theta: f64,
    pub length: f64,
}

/// Orientations visited by the sweep: `0, δθ, 2δθ, … ≤ π`, plus `γ` and
/// `π − β` (and `π`) when the grid does not already contain them.
pub fn sweep_orientations(t: &Triangle, dtheta: f64) -> Vec<f64> {
    let mut thetas: Vec<f64> = (0..)
        .map(|i| i as f64 * dtheta)
        .take_while(|&th| th <= PI + ORIENTATION_TOL)
        .map(|th| th.min(PI))
        .collect();
    for special in [t.gamma(), PI - t.beta(), PI] {
        if !thetas.iter().any(|&th| (th - special).abs() <= ORIENTATION_TOL) {
            thetas.push(special);
        }
    }
    thetas.sort_by(f64::total_cmp);
    thetas
}

/// Chord layout for one orientation: total width `d`, split `d = d₁ + d₂` at
/// the middle vertex (`d₂ = 0` when the chords are parallel to a side), and
/// the longest chord `base`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordFan {
    pub width: f64,
    pub d1: f64,
    pub d2: f64,
    pub base: f64,
}

impl ChordFan {
    /// Chord length at offset `d'` from the first supporting line.
    pub fn length_at(&self, offset: f64) -> f64 {
        if self.d2 == 0.0 {
            offset * self.base / self.width
        } else if offset <= self.d1 {
            offset * self.base / self.d1
        } else {
            (self.width - offset) * self.base / self.d2
        }
    }
}

/// The six orientation cases of the sweep in the frame `C = (0, 0)`,
/// `B = (a, 0)`, `A = (b·cos γ, h_a)`.
pub fn chord_fan(t: &Triangle, theta: f64) -> ChordFan {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let (be, ga) = (t.beta(), t.gamma());
    let near = |x: f64| (theta - x).abs() <= ORIENTATION_TOL;
    let parallel = |width: f64, base: f64| ChordFan {
        width,
        d1: width,
        d2: 0.0,
        base,
    };
    if near(0.0) || near(PI) {
        parallel(t.h_a(), a)
    } else if near(ga) {
        parallel(t.h_b(), b)
    } else if near(PI - be) {
        parallel(t.h_c(), c)
    } else if theta < ga {
        // line through C meets AB at I
        let d1 = b * sin(ga - theta);
        let d2 = a * sin(theta);
        let y = a / (cot(be) + cot(theta));
        let x = y * cot(theta);
        ChordFan {
            width: d1 + d2,
            d1,
            d2,
            base: sqrt(x * x + y * y),
        }
    } else if theta < PI - be {
        // line through A meets CB at I
        let d1 = b * sin(theta - ga);
        let d2 = c * sin(theta + be);
        let x = b / ((cot(ga) + cot(theta - ga)) * sin(ga));
        let ax = b * libm::cos(ga);
        let ay = t.h_a();
        ChordFan {
            width: d1 + d2,
            d1,
            d2,
            base: sqrt((x - ax) * (x - ax) + ay * ay),
        }
    } else {
        // line through B meets CA at I
        let d1 = a * sin(theta);
        let d2 = -c * sin(theta + be);
        let y = a / (cot(ga) - cot(theta));
        let x = y * cot(ga);
        ChordFan {
            width: d1 + d2,
            d1,
            d2,
            base: sqrt((x - a) * (x - a) + y * y),
        }
    }
}

/// Appends the chords of one orientation, offsets `0, δd, 2δd, … ≤ d`.
pub fn chords_at(t: &Triangle, theta: f64, dd: f64, out: &mut Vec<ChordSample>) {
    let fan = chord_fan(t, theta);
    out.extend(
        (0..)
            .map(|j| j as f64 * dd)
            .take_while(|&off| off <= fan.width)
            .map(|off| ChordSample {
                theta,
                length: fan.length_at(off),
            }),
    );
}

/// Deterministic chord enumeration over orientations and parallel offsets.
/// The result is ordered by `(theta, offset)`.
///
/// # Panics
/// If `dtheta` or `dd` is not strictly positive.
pub fn chord_sweep(t: &Triangle, dtheta: f64, dd: f64) -> Vec<ChordSample> {
    assert!(dtheta > 0.0 && dd > 0.0, "sweep steps must be positive");
    let mut out = Vec::new();
    for theta in sweep_orientations(t, dtheta) {
        chords_at(t, theta, dd, &mut out);
    }
    out
}

/// Empirical CDF of the sweep's chord lengths.
pub fn sweep_cdf(t: &Triangle, dtheta: f64, dd: f64) -> EmpiricalCdf {
    let lengths: Vec<f64> = chord_sweep(t, dtheta, dd).iter().map(|s| s.length).collect();
    EmpiricalCdf::new(lengths).expect("sweep always yields chords")
}
