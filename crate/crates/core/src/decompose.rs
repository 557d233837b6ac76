//! Cross-triangle distance distributions for two triangles sharing a side.
//!
//! If a region of area `S` is split into triangles of areas `S₁`, `S₂`, the
//! distance CDF of the whole region mixes the within- and cross-triangle CDFs:
//!
//! ```text
//! S² G = S₁² G₁ + 2 S₁ S₂ G₁₂ + S₂² G₂
//! ```
//!
//! Given `G` for the union, [`cross_cdf_convex`] solves for `G₁₂`. For three
//! congruent `(120°, 30°, 30°)` triangles tiling an equilateral triangle the
//! same identity gives `G₁₂ = ½(3 G_ET − G_T)`, see
//! [`cross_cdf_concave_equilateral`].

use core::f64::consts::{FRAC_PI_6, PI};

use libm::sqrt;

use crate::closed_forms::{equilateral_unit, rhombus_unit, NamedDistribution};
use crate::geometry::{PlacedTriangle, Point, Triangle};
use crate::piecewise::probe_grid;
use crate::point_dist::PointDistance;
use crate::{Error, Result};

/// Relative tolerance for matching the shared side.
pub const SHARED_SIDE_TOL: f64 = 1e-9;
/// Slack of the CDF sanity probes on a composed cross CDF.
pub const SANITY_SLACK: f64 = 1e-6;
/// Probe points of the sanity check.
pub const SANITY_PROBES: usize = 500;
/// Angle tolerance for recognising the `(120°, 30°, 30°)` triangle.
pub const SHAPE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairShape {
    Convex,
    Concave,
}

/// Two placed triangles sharing a full side, plus the distance CDF of their union.
#[derive(Debug, Clone)]
pub struct TrianglePairConfig<W> {
    t1: PlacedTriangle,
    t2: PlacedTriangle,
    shape: PairShape,
    whole_cdf: W,
    diameter: f64,
}

impl<W: Fn(f64) -> f64> TrianglePairConfig<W> {
    pub fn new(t1: PlacedTriangle, t2: PlacedTriangle, whole_cdf: W) -> Result<Self> {
        t1.triangle()?;
        t2.triangle()?;
        let (shared, apex1, apex2) = shared_side(&t1, &t2)?;
        let [p, q] = shared;
        let side1 = (q - p).cross(apex1 - p);
        let side2 = (q - p).cross(apex2 - p);
        if side1 * side2 >= 0.0 {
            return Err(Error::UnsupportedConfiguration("triangles overlap"));
        }
        let quad = [p, apex1, q, apex2];
        let scale = quad
            .iter()
            .flat_map(|u| quad.iter().map(move |v| u.dist(*v)))
            .fold(0.0, f64::max);
        let turns = (0..4).map(|i| {
            let (u, v, w) = (quad[i], quad[(i + 1) % 4], quad[(i + 2) % 4]);
            (v - u).cross(w - v)
        });
        let eps = 1e-12 * scale * scale;
        let (mut pos, mut neg) = (false, false);
        for z in turns {
            pos |= z > eps;
            neg |= z < -eps;
        }
        let shape = if pos && neg {
            PairShape::Concave
        } else {
            PairShape::Convex
        };
        Ok(TrianglePairConfig {
            t1,
            t2,
            shape,
            whole_cdf,
            diameter: scale,
        })
    }

    pub fn t1(&self) -> &PlacedTriangle {
        &self.t1
    }

    pub fn t2(&self) -> &PlacedTriangle {
        &self.t2
    }

    pub fn shape(&self) -> PairShape {
        self.shape
    }

    /// Largest distance between points of the union.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// `(S, S₁, S₂)`.
    pub fn areas(&self) -> (f64, f64, f64) {
        let (s1, s2) = (self.t1.area(), self.t2.area());
        (s1 + s2, s1, s2)
    }

    pub fn whole_cdf(&self, d: f64) -> f64 {
        (self.whole_cdf)(d)
    }

    /// The same pair with the triangles swapped.
    pub fn swapped(self) -> Self {
        TrianglePairConfig {
            t1: self.t2,
            t2: self.t1,
            ..self
        }
    }
}

/// Returns the shared side and the two apexes opposite it.
fn shared_side(t1: &PlacedTriangle, t2: &PlacedTriangle) -> Result<([Point; 2], Point, Point)> {
    let scale = t1
        .vertices
        .iter()
        .chain(&t2.vertices)
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let close = |u: Point, v: Point| u.dist(v) <= SHARED_SIDE_TOL * scale;
    let mut matched = [None; 3];
    for (i, &u) in t1.vertices.iter().enumerate() {
        matched[i] = t2.vertices.iter().position(|&v| close(u, v));
    }
    if matched.iter().filter(|m| m.is_some()).count() != 2 {
        return Err(Error::NoSharedSide);
    }
    let lone1 = matched.iter().position(|m| m.is_none()).unwrap();
    let lone2 = (0..3).find(|j| !matched.contains(&Some(*j))).unwrap();
    let ends: [usize; 2] = match lone1 {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let shared = [t1.vertices[ends[0]], t1.vertices[ends[1]]];
    let len1 = shared[0].dist(shared[1]);
    let other = [
        t2.vertices[matched[ends[0]].unwrap()],
        t2.vertices[matched[ends[1]].unwrap()],
    ];
    let len2 = other[0].dist(other[1]);
    if (len1 - len2).abs() > SHARED_SIDE_TOL * len1.max(len2) {
        return Err(Error::NoSharedSide);
    }
    Ok((shared, t1.vertices[lone1], t2.vertices[lone2]))
}

/// `G₁₂(d) = (S² G(d) − S₁² G₁(d) − S₂² G₂(d)) / (2 S₁ S₂)` for a convex union.
#[derive(Debug, Clone)]
pub struct CrossCdf<W> {
    cfg: TrianglePairConfig<W>,
    g1: PointDistance,
    g2: PointDistance,
}

impl<W: Fn(f64) -> f64> CrossCdf<W> {
    pub fn eval(&self, d: f64) -> f64 {
        if d.is_nan() {
            return d;
        }
        if d <= 0.0 {
            return 0.0;
        }
        if d > self.cfg.diameter {
            return 1.0;
        }
        let (s, s1, s2) = self.cfg.areas();
        (s * s * self.cfg.whole_cdf(d) - (s1 * s1 * self.g1.cdf(d) + s2 * s2 * self.g2.cdf(d))) / (2.0 * s1 * s2)
    }

    /// Density from the density `whole_pdf` of the union.
    pub fn pdf_with<P: Fn(f64) -> f64>(&self, whole_pdf: P, d: f64) -> f64 {
        if !(d > 0.0 && d <= self.cfg.diameter) {
            return if d.is_nan() { d } else { 0.0 };
        }
        let (s, s1, s2) = self.cfg.areas();
        (s * s * whole_pdf(d) - (s1 * s1 * self.g1.pdf(d) + s2 * s2 * self.g2.pdf(d))) / (2.0 * s1 * s2)
    }

    pub fn config(&self) -> &TrianglePairConfig<W> {
        &self.cfg
    }

    pub fn support(&self) -> (f64, f64) {
        (0.0, self.cfg.diameter)
    }
}

/// Solves the decomposition identity for the cross CDF of a convex pair.
///
/// # Errors
/// [`Error::UnsupportedConfiguration`] for a concave union, and
/// [`Error::NotACdf`] if the result leaves `[0, 1]`, decreases, or misses 1 at
/// the diameter by more than [`SANITY_SLACK`] (an inconsistent `whole_cdf`).
pub fn cross_cdf_convex<W: Fn(f64) -> f64>(cfg: TrianglePairConfig<W>) -> Result<CrossCdf<W>> {
    if cfg.shape == PairShape::Concave {
        return Err(Error::UnsupportedConfiguration(
            "concave pairs are solved only for three congruent triangles tiling an equilateral triangle",
        ));
    }
    let g1 = PointDistance::new(&cfg.t1.triangle()?);
    let g2 = PointDistance::new(&cfg.t2.triangle()?);
    let cross = CrossCdf { cfg, g1, g2 };
    sanity_check(|d| cross.eval(d), cross.cfg.diameter)?;
    Ok(cross)
}

fn sanity_check<F: Fn(f64) -> f64>(f: F, diameter: f64) -> Result<()> {
    let mut prev = f64::NEG_INFINITY;
    for x in probe_grid(0.0, diameter, SANITY_PROBES) {
        let v = f(x);
        let in_range = (-SANITY_SLACK..=1.0 + SANITY_SLACK).contains(&v);
        if !in_range || v < prev - SANITY_SLACK {
            return Err(Error::NotACdf { at: x, value: v });
        }
        prev = v;
    }
    let top = f(diameter);
    if !((top - 1.0).abs() <= SANITY_SLACK) {
        return Err(Error::NotACdf {
            at: diameter,
            value: top,
        });
    }
    Ok(())
}

/// Cross distance between two of three congruent `(120°, 30°, 30°)` triangles
/// tiling an equilateral triangle of side `s`.
#[derive(Debug, Clone)]
pub struct ConcaveCross {
    equilateral: NamedDistribution,
    part: PointDistance,
}

impl ConcaveCross {
    /// `½(3 G_ET(d) − G_T(d))`.
    pub fn cdf(&self, d: f64) -> f64 {
        if d.is_nan() {
            return d;
        }
        if d <= 0.0 {
            return 0.0;
        }
        if d > self.equilateral.support().1 {
            return 1.0;
        }
        0.5 * (3.0 * self.equilateral.cdf(d) - self.part.cdf(d))
    }

    pub fn pdf(&self, d: f64) -> f64 {
        if !(d > 0.0 && d <= self.equilateral.support().1) {
            return if d.is_nan() { d } else { 0.0 };
        }
        0.5 * (3.0 * self.equilateral.pdf(d) - self.part.pdf(d))
    }

    pub fn support(&self) -> (f64, f64) {
        self.equilateral.support()
    }
}

/// # Errors
/// [`Error::ShapeMismatch`] unless `t_unit` has angles `(120°, 30°, 30°)`.
pub fn cross_cdf_concave_equilateral(t_unit: &Triangle) -> Result<ConcaveCross> {
    let want = [2.0 * PI / 3.0, FRAC_PI_6, FRAC_PI_6];
    if t_unit
        .angles()
        .iter()
        .zip(want)
        .any(|(got, w)| (got - w).abs() > SHAPE_TOL)
    {
        return Err(Error::ShapeMismatch);
    }
    Ok(ConcaveCross {
        equilateral: equilateral_unit().scaled(t_unit.a())?,
        part: PointDistance::new(t_unit),
    })
}

/// The two `(120°, 30°, 30°)` triangles of long side 1 forming a rhombus of
/// side `√3/3`, sharing the long diagonal.
pub fn rhombus_pi6_placement() -> (PlacedTriangle, PlacedTriangle) {
    let h = sqrt(3.0) / 6.0;
    let (c, b) = (Point::new(0.0, 0.0), Point::new(1.0, 0.0));
    (
        PlacedTriangle::new(c, b, Point::new(0.5, h)),
        PlacedTriangle::new(c, b, Point::new(0.5, -h)),
    )
}

/// Two of the three `(120°, 30°, 30°)` triangles obtained by joining the
/// corners of the unit equilateral triangle to its centroid.
pub fn concave_pi6_placement() -> (PlacedTriangle, PlacedTriangle) {
    let r3 = sqrt(3.0);
    let (p0, p1, p2) = (Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, r3 / 2.0));
    let o = Point::new(0.5, r3 / 6.0);
    (PlacedTriangle::new(p0, p1, o), PlacedTriangle::new(p1, p2, o))
}

/// The rhombus pair with the whole-region CDF `G_R(√3 d)`.
pub fn rhombus_pi6() -> Result<TrianglePairConfig<impl Fn(f64) -> f64 + Clone>> {
    let (t1, t2) = rhombus_pi6_placement();
    let rhombus = rhombus_unit().scaled(1.0 / sqrt(3.0))?;
    TrianglePairConfig::new(t1, t2, move |d| rhombus.cdf(d))
}

/// Density of the rhombus of side `√3/3`, for [`CrossCdf::pdf_with`].
pub fn rhombus_pi6_whole_pdf() -> impl Fn(f64) -> f64 + Clone {
    let rhombus = rhombus_unit().scaled(1.0 / sqrt(3.0)).expect("positive scale");
    move |d| rhombus.pdf(d)
}

/// The `(120°, 30°, 30°)` triangle of long side 1.
pub fn iso_pi6_unit() -> Triangle {
    Triangle::from_angles_deg(120.0, 30.0, 30.0, 1.0).expect("valid angles")
}
