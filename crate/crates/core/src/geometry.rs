//! Canonical triangles and the case regimes of the chord-length distribution.
//!
//! Every [`Triangle`] is stored with `a ≥ b ≥ c`, so `alpha` is the largest and
//! `gamma` the smallest angle. Downstream piecewise formulas rely on that order.

use core::f64::consts::{FRAC_PI_2, PI};
use core::ops::{Add, Mul, Sub};

use libm::{atan2, cos, sin, sqrt};

use crate::{Error, Result};

/// Tolerance on the input angle sum.
pub const ANGLE_SUM_TOL: f64 = 1e-9;
/// Smallest accepted interior angle (radians).
pub const MIN_ANGLE: f64 = 1e-9;
/// Smallest accepted `area / a²`.
pub const MIN_AREA_RATIO: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        let d = self - other;
        sqrt(d.x * d.x + d.y * d.y)
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<Point> for f64 {
    type Output = Point;
    fn mul(self, rhs: Point) -> Point {
        Point::new(self * rhs.x, self * rhs.y)
    }
}

/// Which piecewise regime of the chord-length CDF applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// `alpha > π/2`.
    Case1,
    /// `alpha ≤ π/2` and `h_c < c`.
    Case2,
    /// `alpha ≤ π/2` and `h_c ≥ c`.
    Case3,
}

impl CaseLabel {
    pub fn index(self) -> u8 {
        match self {
            CaseLabel::Case1 => 1,
            CaseLabel::Case2 => 2,
            CaseLabel::Case3 => 3,
        }
    }
}

/// A triangle in canonical form: sides `a ≥ b ≥ c`, angles `alpha ≥ beta ≥ gamma`
/// opposite them, altitudes onto each side, perimeter and area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    a: f64,
    b: f64,
    c: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    h_a: f64,
    h_b: f64,
    h_c: f64,
    perimeter: f64,
    area: f64,
}

impl Triangle {
    /// Builds a triangle from three side lengths given in any order.
    pub fn from_sides(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) || x <= 0.0 || y <= 0.0 || z <= 0.0 {
            return Err(Error::DegenerateTriangle);
        }
        let [a, b, c] = sorted_desc([x, y, z]);
        if a >= b + c {
            return Err(Error::DegenerateTriangle);
        }
        // Kahan's arrangement of Heron's formula; exact up to rounding for sorted sides.
        let prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
        let area = 0.25 * sqrt(prod.max(0.0));
        // tan(angle) = 4·area / (sum of adjacent squares − opposite square)
        let beta = atan2(4.0 * area, a * a + c * c - b * b);
        let gamma = atan2(4.0 * area, a * a + b * b - c * c);
        let alpha = PI - beta - gamma;
        Self::finish(a, b, c, alpha, beta, gamma, area)
    }

    /// Builds a triangle from its interior angles (radians, any order) scaled so
    /// that the longest side equals `a`.
    pub fn from_angles(alpha: f64, beta: f64, gamma: f64, a: f64) -> Result<Self> {
        let angles = [alpha, beta, gamma];
        if angles.iter().any(|x| !x.is_finite() || *x <= 0.0) {
            return Err(Error::InvalidAngles);
        }
        if (alpha + beta + gamma - PI).abs() > ANGLE_SUM_TOL {
            return Err(Error::InvalidAngles);
        }
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::DegenerateTriangle);
        }
        let [al, be, _] = sorted_desc(angles);
        let [al, be, ga] = sorted_desc([al, be, PI - al - be]);
        if ga <= 0.0 {
            return Err(Error::InvalidAngles);
        }
        let b = a * sin(be) / sin(al);
        let c = a * sin(ga) / sin(al);
        let area = 0.5 * a * b * sin(ga);
        Self::finish(a, b, c, al, be, ga, area)
    }

    /// Same as [`Triangle::from_angles`] with angles in degrees.
    pub fn from_angles_deg(alpha: f64, beta: f64, gamma: f64, a: f64) -> Result<Self> {
        Self::from_angles(deg_to_rad(alpha), deg_to_rad(beta), deg_to_rad(gamma), a)
    }

    /// Canonical triangle of three placed vertices.
    pub fn from_vertices(p: Point, q: Point, r: Point) -> Result<Self> {
        Self::from_sides(p.dist(q), q.dist(r), r.dist(p))
    }

    fn finish(a: f64, b: f64, c: f64, alpha: f64, beta: f64, gamma: f64, area: f64) -> Result<Self> {
        if gamma < MIN_ANGLE || !(area >= MIN_AREA_RATIO * a * a) {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Triangle {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
            h_a: 2.0 * area / a,
            h_b: 2.0 * area / b,
            h_c: 2.0 * area / c,
            perimeter: a + b + c,
            area,
        })
    }

    /// Uniformly scaled copy; angles are kept bit-for-bit.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::InvalidScale(s));
        }
        Self::finish(
            s * self.a,
            s * self.b,
            s * self.c,
            self.alpha,
            self.beta,
            self.gamma,
            s * s * self.area,
        )
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn h_a(&self) -> f64 {
        self.h_a
    }
    pub fn h_b(&self) -> f64 {
        self.h_b
    }
    pub fn h_c(&self) -> f64 {
        self.h_c
    }
    /// `u = a + b + c`.
    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }
    pub fn area(&self) -> f64 {
        self.area
    }
    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }
    pub fn angles(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }
    pub fn altitudes(&self) -> [f64; 3] {
        [self.h_a, self.h_b, self.h_c]
    }

    /// Diameter of the triangle (its longest side).
    pub fn diameter(&self) -> f64 {
        self.a
    }

    pub fn classify(&self) -> CaseLabel {
        if self.alpha > FRAC_PI_2 {
            CaseLabel::Case1
        } else if self.h_c < self.c {
            CaseLabel::Case2
        } else {
            CaseLabel::Case3
        }
    }

    /// Vertices in the sweep frame: `C` at the origin, `B = (a, 0)`,
    /// `A = (b·cos γ, h_a)`.
    pub fn placement(&self) -> PlacedTriangle {
        PlacedTriangle::new(
            Point::new(0.0, 0.0),
            Point::new(self.a, 0.0),
            Point::new(self.b * cos(self.gamma), self.h_a),
        )
    }
}

/// Free-function form of [`Triangle::classify`].
pub fn classify(t: &Triangle) -> CaseLabel {
    t.classify()
}

/// A triangle with explicit vertex coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlacedTriangle {
    pub vertices: [Point; 3],
}

impl PlacedTriangle {
    pub const fn new(p: Point, q: Point, r: Point) -> Self {
        PlacedTriangle { vertices: [p, q, r] }
    }

    pub fn triangle(&self) -> Result<Triangle> {
        let [p, q, r] = self.vertices;
        Triangle::from_vertices(p, q, r)
    }

    pub fn area(&self) -> f64 {
        let [p, q, r] = self.vertices;
        0.5 * (q - p).cross(r - p).abs()
    }

    pub fn centroid(&self) -> Point {
        let [p, q, r] = self.vertices;
        Point::new((p.x + q.x + r.x) / 3.0, (p.y + q.y + r.y) / 3.0)
    }

    /// Whether `p` lies inside or on the boundary, with slack `eps` on the
    /// signed edge tests.
    pub fn contains(&self, pt: Point, eps: f64) -> bool {
        let [p, q, r] = self.vertices;
        let orient = (q - p).cross(r - p).signum();
        [(p, q), (q, r), (r, p)]
            .iter()
            .all(|&(s, e)| orient * (e - s).cross(pt - s) >= -eps)
    }
}

fn deg_to_rad(deg: f64) -> f64 {
    // `deg / 180` first so that 90° maps exactly onto FRAC_PI_2.
    deg / 180.0 * PI
}

fn sorted_desc(mut v: [f64; 3]) -> [f64; 3] {
    v.sort_by(|x, y| y.total_cmp(x));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol
    }

    #[test]
    fn unit_equilateral() {
        let t = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
        for angle in t.angles() {
            assert!(close(angle, PI / 3.0, 1e-12));
        }
        assert!(close(t.area(), sqrt(3.0) / 4.0, 1e-15));
        for h in t.altitudes() {
            assert!(close(h, sqrt(3.0) / 2.0, 1e-15));
        }
        assert_eq!(t.perimeter(), 3.0);
    }

    #[test]
    fn sides_2_3_4_are_canonicalized() {
        let t = Triangle::from_sides(2.0, 3.0, 4.0).unwrap();
        assert_eq!(t.sides(), [4.0, 3.0, 2.0]);
        // cos α = (9 + 4 − 16) / (2·3·2)
        assert!(close(t.alpha(), libm::acos(-0.25), 1e-12));
        assert!(close(t.beta(), libm::acos((16.0 + 4.0 - 9.0) / 16.0), 1e-12));
        assert!(close(t.gamma(), libm::acos((16.0 + 9.0 - 4.0) / 24.0), 1e-12));
    }

    #[test]
    fn rejects_triangle_inequality_violation() {
        assert_eq!(Triangle::from_sides(1.0, 1.0, 3.0), Err(Error::DegenerateTriangle));
        assert_eq!(Triangle::from_sides(1.0, 1.0, 2.0), Err(Error::DegenerateTriangle));
        assert_eq!(Triangle::from_sides(1.0, -1.0, 1.0), Err(Error::DegenerateTriangle));
        assert_eq!(Triangle::from_sides(f64::NAN, 1.0, 1.0), Err(Error::DegenerateTriangle));
    }

    #[test]
    fn rejects_sliver_below_area_floor() {
        assert_eq!(Triangle::from_sides(1.0, 1.0, 1e-13), Err(Error::DegenerateTriangle));
    }

    #[test]
    fn from_angles_obtuse_reference_triangle() {
        let t = Triangle::from_angles_deg(130.0, 30.0, 20.0, 1.0).unwrap();
        let s130 = sin(130.0 / 180.0 * PI);
        assert_eq!(t.a(), 1.0);
        assert!(close(t.b(), sin(PI / 6.0) / s130, 1e-15));
        assert!(close(t.c(), sin(PI / 9.0) / s130, 1e-15));
    }

    #[test]
    fn from_angles_30_60_90() {
        let t = Triangle::from_angles_deg(90.0, 60.0, 30.0, 2.0).unwrap();
        assert!(close(t.b(), sqrt(3.0), 1e-15));
        assert!(close(t.c(), 1.0, 1e-15));
        assert_eq!(t.alpha(), FRAC_PI_2);
    }

    #[test]
    fn from_angles_any_order() {
        let t1 = Triangle::from_angles_deg(20.0, 130.0, 30.0, 1.0).unwrap();
        let t2 = Triangle::from_angles_deg(130.0, 30.0, 20.0, 1.0).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn invalid_angles() {
        assert_eq!(
            Triangle::from_angles_deg(90.0, 60.0, 31.0, 1.0),
            Err(Error::InvalidAngles)
        );
        assert_eq!(
            Triangle::from_angles_deg(180.0, 0.0, 0.0, 1.0),
            Err(Error::InvalidAngles)
        );
        assert_eq!(
            Triangle::from_angles_deg(200.0, -10.0, -10.0, 1.0),
            Err(Error::InvalidAngles)
        );
        assert_eq!(
            Triangle::from_angles_deg(60.0, 60.0, 60.0, 0.0),
            Err(Error::DegenerateTriangle)
        );
    }

    #[test]
    fn reference_cases() {
        let cases = [
            ((130.0, 30.0, 20.0), CaseLabel::Case1),
            ((65.0, 60.0, 55.0), CaseLabel::Case2),
            ((80.0, 70.0, 30.0), CaseLabel::Case3),
        ];
        for ((x, y, z), want) in cases {
            let t = Triangle::from_angles_deg(x, y, z, 1.0).unwrap();
            assert_eq!(classify(&t), want);
        }
    }

    #[test]
    fn right_angle_is_not_case1() {
        let t = Triangle::from_angles(FRAC_PI_2, PI / 3.0, PI / 6.0, 1.0).unwrap();
        assert_ne!(t.classify(), CaseLabel::Case1);
    }

    #[test]
    fn h_c_equal_c_is_case3() {
        // h_c = c ⇔ sin α · sin β = sin γ; with α = β this is tan α = 2.
        let alpha = libm::atan(2.0);
        let t = Triangle::from_angles(alpha, alpha, PI - 2.0 * alpha, 1.0).unwrap();
        assert!(close(t.h_c(), t.c(), 1e-12));
        let expected = if t.h_c() >= t.c() {
            CaseLabel::Case3
        } else {
            CaseLabel::Case2
        };
        assert_eq!(t.classify(), expected);
    }

    #[test]
    fn placement_matches_sides() {
        let t = Triangle::from_angles_deg(80.0, 70.0, 30.0, 1.0).unwrap();
        let [c, b, a] = t.placement().vertices;
        assert!(close(c.dist(b), t.a(), 1e-14));
        assert!(close(c.dist(a), t.b(), 1e-14));
        assert!(close(a.dist(b), t.c(), 1e-14));
        assert!(close(t.placement().area(), t.area(), 1e-14));
    }

    #[test]
    fn contains_vertices_and_centroid() {
        let p = Triangle::from_sides(3.0, 4.0, 5.0).unwrap().placement();
        assert!(p.contains(p.centroid(), 0.0));
        for v in p.vertices {
            assert!(p.contains(v, 1e-12));
        }
        assert!(!p.contains(Point::new(-1.0, -1.0), 1e-12));
    }
}
