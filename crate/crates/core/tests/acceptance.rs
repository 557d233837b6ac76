//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{random_triangles, reference_triangles};
use tridist_core::chord_dist::{chord_cdf, sweep_cdf, DEFAULT_DD, DEFAULT_DTHETA};
use tridist_core::closed_forms::{self, NamedDistribution};
use tridist_core::decompose::{
    concave_pi6_placement, cross_cdf_concave_equilateral, cross_cdf_convex, iso_pi6_unit, rhombus_pi6,
    rhombus_pi6_placement,
};
use tridist_core::geometry::Triangle;
use tridist_core::montecarlo::{ks_statistic, sample_cross_distances, sample_pair_distances, RunSpec, KS_THRESHOLD};
use tridist_core::piecewise::probe_grid;
use tridist_core::point_dist::oracle::QuadraturePipeline;
use tridist_core::point_dist::{pdist_cdf, PointDistance};
use tridist_core::quadrature::integrate_piecewise;

const SEED: u64 = 42;
const PAIRS: usize = 10_000;
const RANDOM_SEED: u64 = 2024;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn sup_diff(grid: impl Iterator<Item = f64>, f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64) -> f64 {
    grid.map(|x| (f(x) - g(x)).abs()).fold(0.0, f64::max)
}

fn chord_vs_sweep() -> Outcome {
    let mut worst = 0.0f64;
    for t in reference_triangles() {
        let exact = chord_cdf(&t).unwrap();
        let swept = sweep_cdf(&t, DEFAULT_DTHETA, DEFAULT_DD * t.a());
        worst = worst.max(sup_diff(
            probe_grid(0.0, t.a(), 200),
            |x| exact.eval(x),
            |x| swept.eval(x),
        ));
    }
    outcome(worst <= 0.01, format!("max sup-norm {worst:.3e} (tol 1e-2)"))
}

fn ks_within(t: &Triangle) -> f64 {
    let emp = sample_pair_distances(t, &RunSpec::new(SEED, PAIRS).unwrap()).unwrap();
    let g = PointDistance::new(t);
    ks_statistic(&emp, |d| g.cdf(d))
}

fn pdist_vs_monte_carlo() -> Outcome {
    let ks: Vec<f64> = reference_triangles().iter().map(ks_within).collect();
    let worst = ks.iter().cloned().fold(0.0, f64::max);
    outcome(
        worst <= KS_THRESHOLD,
        format!("KS {ks:.4?} at n={PAIRS}, seed {SEED} (tol {KS_THRESHOLD})"),
    )
}

fn equilateral_matches_closed_form() -> Outcome {
    let t = Triangle::from_angles_deg(60.0, 60.0, 60.0, 1.0).unwrap();
    let g = pdist_cdf(&t).unwrap();
    let et = closed_forms::equilateral_unit();
    let worst = sup_diff(probe_grid(0.0, 1.0, 1000), |x| g.eval(x), |x| et.cdf(x));
    outcome(worst <= 1e-9, format!("max |G - G_ET| {worst:.3e} (tol 1e-9)"))
}

fn antiderivative_gate() -> Outcome {
    let triangles = random_triangles(30, RANDOM_SEED);
    let mut worst = 0.0f64;
    let mut fallbacks = Vec::new();
    let mut fallback_ok = true;
    for (i, t) in triangles.iter().enumerate() {
        let g = PointDistance::new(t);
        for r in g.table().reports() {
            worst = worst.max(r.star_residual).max(r.diamond_residual);
        }
        let failed: Vec<_> = g.table().fallbacks().map(|r| r.k).collect();
        if !failed.is_empty() {
            // a fallback must still reproduce the oracle and the simulation
            let oracle = QuadraturePipeline::new(t).unwrap();
            let dev = sup_diff(probe_grid(0.0, t.a(), 20), |x| g.cdf(x), |x| oracle.cdf(x));
            fallback_ok &= dev <= 1e-7 && ks_within(t) <= KS_THRESHOLD;
            fallbacks.push((i, failed));
        }
    }
    let cases = [1u8, 2, 3].map(|c| triangles.iter().filter(|t| t.classify().index() == c).count());
    outcome(
        fallbacks.is_empty() || fallback_ok,
        format!(
            "{} triangles (cases {:?}), worst residual {worst:.2e} (tol 1e-5), fallbacks {fallbacks:?}",
            triangles.len(),
            cases
        ),
    )
}

fn normalization_and_shape() -> Outcome {
    let mut all = reference_triangles().to_vec();
    all.extend(random_triangles(30, RANDOM_SEED));
    let (mut norm, mut top, mut monotone, mut range) = (0.0f64, 0.0f64, true, true);
    for t in &all {
        let g = PointDistance::new(t);
        let cdf = pdist_cdf(t).unwrap();
        norm = norm.max((integrate_piecewise(|x| g.pdf(x), cdf.breakpoints()) - 1.0).abs());
        top = top.max((g.cdf(t.a()) - 1.0).abs());
        let mut prev = 0.0;
        for x in probe_grid(0.0, t.a(), 2000) {
            let v = g.cdf(x);
            monotone &= v >= prev;
            range &= (0.0..=1.0 + 1e-12).contains(&v);
            prev = v;
        }
    }
    outcome(
        norm <= 1e-8 && top <= 1e-9 && monotone && range,
        format!(
            "{} triangles: max |∫g - 1| {norm:.2e}, max |G(a) - 1| {top:.2e}, monotone {monotone}, in [0,1] {range}",
            all.len()
        ),
    )
}

fn cross_ks(
    pair: (
        tridist_core::geometry::PlacedTriangle,
        tridist_core::geometry::PlacedTriangle,
    ),
    cdf: impl Fn(f64) -> f64,
) -> f64 {
    let emp = sample_cross_distances(&pair.0, &pair.1, &RunSpec::new(SEED, PAIRS).unwrap()).unwrap();
    ks_statistic(&emp, cdf)
}

fn rhombus_decomposition() -> Outcome {
    let cross = cross_cdf_convex(rhombus_pi6().unwrap()).unwrap();
    let reference = closed_forms::iso_pi6_rhombus_pair();
    let dev = sup_diff(probe_grid(0.0, 1.0, 500), |x| cross.eval(x), |x| reference.cdf(x));
    let ks = cross_ks(rhombus_pi6_placement(), |x| cross.eval(x));
    outcome(
        dev <= 1e-9 && ks <= KS_THRESHOLD,
        format!("max |G12 - G^r_2T| {dev:.3e} (tol 1e-9), KS {ks:.4} (tol {KS_THRESHOLD})"),
    )
}

fn concave_decomposition() -> Outcome {
    let cross = cross_cdf_concave_equilateral(&iso_pi6_unit()).unwrap();
    let reference = closed_forms::iso_pi6_concave_pair();
    let dev = sup_diff(probe_grid(0.0, 1.0, 500), |x| cross.cdf(x), |x| reference.cdf(x));
    let ks = cross_ks(concave_pi6_placement(), |x| cross.cdf(x));
    outcome(
        dev <= 1e-9 && ks <= KS_THRESHOLD,
        format!("max |G12 - G^c_2T| {dev:.3e} (tol 1e-9), KS {ks:.4} (tol {KS_THRESHOLD})"),
    )
}

fn scaling_law() -> Outcome {
    let named: Vec<NamedDistribution> = closed_forms::IDS
        .iter()
        .map(|id| closed_forms::by_id(id).unwrap())
        .collect();
    let mut worst = 0.0f64;
    for s in [0.5, 2.0, 3.0] {
        for dist in &named {
            let scaled = dist.scaled(s).unwrap();
            let d_max = dist.support().1;
            worst = worst.max(sup_diff(
                probe_grid(0.0, d_max, 100),
                |d| scaled.cdf(s * d),
                |d| dist.cdf(d),
            ));
        }
        for t in reference_triangles() {
            let (g, gs) = (PointDistance::new(&t), PointDistance::new(&t.scaled(s).unwrap()));
            worst = worst.max(sup_diff(probe_grid(0.0, t.a(), 100), |d| gs.cdf(s * d), |d| g.cdf(d)));
        }
    }
    outcome(worst <= 1e-12, format!("max |G_s(s d) - G(d)| {worst:.2e} (tol 1e-12)"))
}

fn quadrature_oracle() -> Outcome {
    let mut worst = 0.0f64;
    for t in reference_triangles() {
        let g = PointDistance::new(&t);
        let oracle = QuadraturePipeline::new(&t).unwrap();
        worst = worst.max(sup_diff(probe_grid(0.0, t.a(), 41), |x| g.cdf(x), |x| oracle.cdf(x)));
    }
    outcome(worst <= 1e-7, format!("max |G - G_quad| {worst:.3e} (tol 1e-7)"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("chord-length CDF vs sweep", chord_vs_sweep),
        ("point-distance CDF vs Monte Carlo", pdist_vs_monte_carlo),
        ("equilateral closed form", equilateral_matches_closed_form),
        ("antiderivative gate on random triangles", antiderivative_gate),
        ("normalization and shape", normalization_and_shape),
        ("rhombus decomposition", rhombus_decomposition),
        ("concave decomposition", concave_decomposition),
        ("scaling law", scaling_law),
        ("quadrature oracle equivalence", quadrature_oracle),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = check();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        println!(
            "[{verdict}] {}. {name}: {} [{:.2?}]",
            i + 1,
            out.detail,
            start.elapsed()
        );
        failed += usize::from(!out.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
