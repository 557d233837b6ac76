mod common;

use proptest::prelude::*;
use tridist_core::chord_dist::chord_cdf;
use tridist_core::closed_forms;
use tridist_core::decompose::{cross_cdf_convex, iso_pi6_unit, rhombus_pi6, PairShape, TrianglePairConfig};
use tridist_core::geometry::{PlacedTriangle, Point, Triangle};
use tridist_core::montecarlo::{ks_statistic, sample_cross_distances, RunSpec, KS_THRESHOLD};
use tridist_core::piecewise::probe_grid;
use tridist_core::point_dist::PointDistance;
use tridist_core::Error;

fn triangle_angles() -> impl Strategy<Value = (f64, f64, f64)> {
    (10.0f64..160.0, 10.0f64..160.0).prop_filter_map("third angle too small", |(x, y)| {
        let z = 180.0 - x - y;
        (z >= 10.0).then_some((x, y, z))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_does_not_change_the_triangle((x, y, z) in triangle_angles(), scale in 0.1f64..10.0) {
        let t = Triangle::from_angles_deg(x, y, z, scale).unwrap();
        let [a, b, c] = t.sides();
        for perm in [[a, b, c], [c, a, b], [b, c, a], [c, b, a]] {
            let u = Triangle::from_sides(perm[0], perm[1], perm[2]).unwrap();
            prop_assert_eq!(u.sides(), t.sides());
            prop_assert_eq!(u.classify(), t.classify());
        }
    }

    #[test]
    fn angles_survive_a_round_trip((x, y, z) in triangle_angles()) {
        let t = Triangle::from_angles_deg(x, y, z, 1.0).unwrap();
        let [a, b, c] = t.sides();
        let u = Triangle::from_sides(a, b, c).unwrap();
        for (p, q) in t.angles().iter().zip(u.angles()) {
            prop_assert!((p - q).abs() < 1e-9);
        }
    }

    #[test]
    fn chord_cdf_is_a_cdf((x, y, z) in triangle_angles()) {
        let t = Triangle::from_angles_deg(x, y, z, 1.0).unwrap();
        let f = chord_cdf(&t).unwrap();
        let mut prev = 0.0;
        for l in probe_grid(0.0, t.a(), 300) {
            let v = f.eval(l);
            prop_assert!(v >= prev - 1e-12 && v <= 1.0 + 1e-9);
            prev = v;
        }
    }

    #[test]
    fn point_distance_cdf_is_monotone((x, y, z) in triangle_angles(), scale in 0.5f64..4.0) {
        let t = Triangle::from_angles_deg(x, y, z, scale).unwrap();
        let g = PointDistance::new(&t);
        prop_assert_eq!(g.table().fallbacks().count(), 0);
        let mut prev = 0.0;
        for d in probe_grid(0.0, t.a(), 300) {
            let v = g.cdf(d);
            prop_assert!(v >= prev && v <= 1.0 + 1e-12, "G({}) = {} after {}", d, v, prev);
            prop_assert!(g.pdf(d) >= -1e-12);
            prev = v;
        }
        prop_assert!((g.cdf(t.a()) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn cdf_is_invariant_under_placement((x, y, z) in triangle_angles(), shift in -5.0f64..5.0) {
        let t = Triangle::from_angles_deg(x, y, z, 1.0).unwrap();
        let [c, b, a] = t.placement().vertices;
        let moved = PlacedTriangle::new(
            Point::new(a.y + shift, -a.x),
            Point::new(c.y + shift, -c.x),
            Point::new(b.y + shift, -b.x),
        );
        let u = moved.triangle().unwrap();
        let (g, h) = (PointDistance::new(&t), PointDistance::new(&u));
        for d in probe_grid(0.0, 1.0, 25) {
            prop_assert!((g.cdf(d) - h.cdf(d)).abs() < 1e-9);
        }
    }
}

#[test]
fn rhombus_identity_cancels() {
    let rhombus = closed_forms::rhombus_unit();
    let pair = closed_forms::iso_pi6_rhombus_pair();
    let g_t = PointDistance::new(&iso_pi6_unit());
    let r3 = 3f64.sqrt();
    for d in probe_grid(0.0, 1.0, 500) {
        let residual = 2.0 * rhombus.cdf(r3 * d) - g_t.cdf(d) - pair.cdf(d);
        assert!(residual.abs() < 1e-9, "{d}: {residual}");
    }
}

#[test]
fn concave_identity_matches_equilateral_mixture() {
    let et = closed_forms::equilateral_unit();
    let pair = closed_forms::iso_pi6_concave_pair();
    let g_t = PointDistance::new(&iso_pi6_unit());
    for d in probe_grid(0.0, 1.0, 500) {
        let residual = 0.5 * (3.0 * et.cdf(d) - g_t.cdf(d)) - pair.cdf(d);
        assert!(residual.abs() < 1e-9, "{d}: {residual}");
    }
}

#[test]
fn forward_identity_holds_for_the_rhombus() {
    let cfg = rhombus_pi6().unwrap();
    let (s, s1, s2) = cfg.areas();
    let whole = cfg.clone();
    let cross = cross_cdf_convex(cfg).unwrap();
    let g_t = PointDistance::new(&iso_pi6_unit());
    for d in probe_grid(0.0, 1.0, 500) {
        let lhs = s * s * whole.whole_cdf(d);
        let rhs = s1 * s1 * g_t.cdf(d) + 2.0 * s1 * s2 * cross.eval(d) + s2 * s2 * g_t.cdf(d);
        assert!((lhs - rhs).abs() < 1e-9);
    }
}

#[test]
fn swapping_the_pair_is_symmetric() {
    let cfg = rhombus_pi6().unwrap();
    let forward = cross_cdf_convex(cfg.clone()).unwrap();
    let backward = cross_cdf_convex(cfg.swapped()).unwrap();
    for d in probe_grid(0.0, 1.0, 200) {
        assert!((forward.eval(d) - backward.eval(d)).abs() <= 1e-12);
    }
}

#[test]
fn cevian_split_matches_simulation() {
    // a triangle cut along a cevian: the union is again a triangle, so its
    // CDF is known and the two halves are not congruent
    let (p, q, r) = (Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(0.6, 1.3));
    let m = Point::new(0.8, 0.0);
    let whole = PointDistance::new(&Triangle::from_vertices(p, q, r).unwrap());
    let (t1, t2) = (PlacedTriangle::new(p, m, r), PlacedTriangle::new(m, q, r));
    let cfg = TrianglePairConfig::new(t1, t2, move |d| whole.cdf(d)).unwrap();
    assert_eq!(cfg.shape(), PairShape::Convex);
    let cross = cross_cdf_convex(cfg).unwrap();
    let emp = sample_cross_distances(&t1, &t2, &RunSpec::new(7, 10_000).unwrap()).unwrap();
    let ks = ks_statistic(&emp, |d| cross.eval(d));
    assert!(ks <= KS_THRESHOLD, "{ks}");
}

#[test]
fn inconsistent_whole_cdf_is_not_a_cdf() {
    let p = Point::new(0.0, 0.0);
    let q = Point::new(2.0, 0.0);
    let t1 = PlacedTriangle::new(p, q, Point::new(0.5, 1.0));
    let t2 = PlacedTriangle::new(p, q, Point::new(1.2, -0.4));
    let cfg = TrianglePairConfig::new(t1, t2, |d: f64| (d / 2.0).min(1.0)).unwrap();
    assert!(matches!(cross_cdf_convex(cfg), Err(Error::NotACdf { .. })));
}
