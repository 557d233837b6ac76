use std::path::Path;

use anyhow::Context;
use rayon::prelude::*;
use tridist_core::chord_dist::{chord_cdf, chords_at, sweep_orientations, ChordSample};
use tridist_core::closed_forms;
use tridist_core::decompose::{
    concave_pi6_placement, cross_cdf_concave_equilateral, cross_cdf_convex, iso_pi6_unit, rhombus_pi6,
    rhombus_pi6_placement, rhombus_pi6_whole_pdf, TrianglePairConfig,
};
use tridist_core::geometry::{PlacedTriangle, Triangle};
use tridist_core::montecarlo::{distances_chunk, ks_statistic, EmpiricalCdf, RunSpec};
use tridist_core::piecewise::probe_grid;
use tridist_core::point_dist::PointDistance;

use crate::args::{Command, GridArgs, KindArgs, PairConfig, PdistSource, SampleSource};
use crate::input::{CdfTable, InputError};
use crate::output::{check_cdf_column, clamp_pdf_column, fmt_g, write_columns};

/// Outcome of a command that ran to completion.
pub enum Status {
    Ok,
    VerificationFailed,
}

pub fn run(command: Command) -> anyhow::Result<Status> {
    match command {
        Command::Cld { triangle, grid } => {
            let f = chord_cdf(&triangle)?;
            tabulate(&grid, triangle.a(), true, "l", "F", |l| f.eval(l))?;
        }
        Command::Pdist {
            source,
            scale,
            grid,
            kind,
        } => pdist(source, scale, &grid, &kind)?,
        Command::Cross {
            pair,
            t2,
            whole_cdf,
            grid,
            kind,
        } => match (pair.config, pair.t1, t2, whole_cdf) {
            (Some(config), ..) => cross_named(config, &grid, &kind)?,
            (None, Some(t1), Some(t2), Some(path)) => cross_table(t1, t2, &path, &grid, &kind)?,
            _ => unreachable!("argument groups enforce one complete input"),
        },
        Command::Sweep {
            triangle,
            dtheta,
            dd,
            out,
        } => sweep(&triangle, dtheta, dd, out.as_deref())?,
        Command::Simulate { source, run, out } => {
            let (first, second) = placement(&source);
            let spec = RunSpec::new(run.seed, run.pairs as usize)?;
            write_columns(out.as_deref(), &["distance"], &[&sample(&first, &second, &spec)])?;
        }
        Command::Verify { source, run, threshold } => {
            let (first, second) = placement(&source);
            let spec = RunSpec::new(run.seed, run.pairs as usize)?;
            let emp = EmpiricalCdf::new(sample(&first, &second, &spec))?;
            let ks = match (source.triangle, source.config) {
                (Some(t), _) => {
                    let g = PointDistance::new(&t);
                    ks_statistic(&emp, |d| g.cdf(d))
                }
                (None, Some(PairConfig::RhombusPi6)) => {
                    let cross = cross_cdf_convex(rhombus_pi6()?)?;
                    ks_statistic(&emp, |d| cross.eval(d))
                }
                (None, Some(PairConfig::ConcavePi6)) => {
                    let cross = cross_cdf_concave_equilateral(&iso_pi6_unit())?;
                    ks_statistic(&emp, |d| cross.cdf(d))
                }
                (None, None) => unreachable!("argument group requires an input"),
            };
            let pass = ks <= threshold;
            println!("ks={} pass={pass} threshold={threshold}", fmt_g(ks));
            if !pass {
                return Ok(Status::VerificationFailed);
            }
        }
    }
    Ok(Status::Ok)
}

fn wants_pdf(kind: &KindArgs) -> bool {
    kind.pdf && !kind.cdf
}

/// Evaluates `f` on `grid.grid` points over `[0, d_max]` and writes two columns.
fn tabulate<F: Fn(f64) -> f64 + Sync>(
    grid: &GridArgs,
    d_max: f64,
    is_cdf: bool,
    x_name: &str,
    y_name: &str,
    f: F,
) -> anyhow::Result<()> {
    let xs: Vec<f64> = probe_grid(0.0, d_max, grid.grid as usize).collect();
    let mut ys: Vec<f64> = xs.par_iter().map(|&x| f(x)).collect();
    if is_cdf {
        check_cdf_column(&mut ys)?;
    } else {
        clamp_pdf_column(&mut ys);
    }
    write_columns(grid.out.as_deref(), &[x_name, y_name], &[&xs, &ys])
}

fn pdist(source: PdistSource, scale: Option<f64>, grid: &GridArgs, kind: &KindArgs) -> anyhow::Result<()> {
    let pdf = wants_pdf(kind);
    match (source.triangle, source.dist) {
        (Some(t), _) => {
            let g = PointDistance::new(&t);
            tabulate(
                grid,
                t.a(),
                !pdf,
                "d",
                "value",
                |d| if pdf { g.pdf(d) } else { g.cdf(d) },
            )
        }
        (None, Some(id)) => {
            let mut dist = closed_forms::by_id(&id).expect("clap restricts the identifiers");
            if let Some(s) = scale {
                dist = dist.scaled(s)?;
            }
            let d_max = dist.support().1;
            tabulate(grid, d_max, !pdf, "d", "value", |d| {
                if pdf {
                    dist.pdf(d)
                } else {
                    dist.cdf(d)
                }
            })
        }
        (None, None) => unreachable!("argument group requires an input"),
    }
}

fn cross_named(config: PairConfig, grid: &GridArgs, kind: &KindArgs) -> anyhow::Result<()> {
    let pdf = wants_pdf(kind);
    match config {
        PairConfig::RhombusPi6 => {
            let cross = cross_cdf_convex(rhombus_pi6()?)?;
            let whole_pdf = rhombus_pi6_whole_pdf();
            let d_max = cross.support().1;
            tabulate(grid, d_max, !pdf, "d", "value", |d| {
                if pdf {
                    cross.pdf_with(&whole_pdf, d)
                } else {
                    cross.eval(d)
                }
            })
        }
        PairConfig::ConcavePi6 => {
            let cross = cross_cdf_concave_equilateral(&iso_pi6_unit())?;
            let d_max = cross.support().1;
            tabulate(grid, d_max, !pdf, "d", "value", |d| {
                if pdf {
                    cross.pdf(d)
                } else {
                    cross.cdf(d)
                }
            })
        }
    }
}

fn cross_table(
    t1: PlacedTriangle,
    t2: PlacedTriangle,
    path: &Path,
    grid: &GridArgs,
    kind: &KindArgs,
) -> anyhow::Result<()> {
    if wants_pdf(kind) {
        return Err(InputError("--pdf needs --config; a tabulated whole-region CDF has no density".into()).into());
    }
    let table = CdfTable::from_csv(path)?;
    let cross = cross_cdf_convex(TrianglePairConfig::new(t1, t2, move |d| table.eval(d))?)
        .with_context(|| format!("whole-region CDF from {}", path.display()))?;
    let d_max = cross.support().1;
    tabulate(grid, d_max, true, "d", "value", |d| cross.eval(d))
}

fn sweep(t: &Triangle, dtheta_deg: f64, dd: f64, out: Option<&Path>) -> anyhow::Result<()> {
    if !(dtheta_deg > 0.0 && dtheta_deg.is_finite() && dd > 0.0 && dd.is_finite()) {
        return Err(InputError("--dtheta and --dd must be positive".into()).into());
    }
    let thetas = sweep_orientations(t, dtheta_deg.to_radians());
    let per_theta: Vec<Vec<ChordSample>> = thetas
        .par_iter()
        .map(|&theta| {
            let mut v = Vec::new();
            chords_at(t, theta, dd, &mut v);
            v
        })
        .collect();
    let (theta, length): (Vec<f64>, Vec<f64>) = per_theta
        .into_iter()
        .flatten()
        .map(|c| (c.theta.to_degrees(), c.length))
        .unzip();
    write_columns(out, &["theta", "length"], &[&theta, &length])
}

fn placement(source: &SampleSource) -> (PlacedTriangle, PlacedTriangle) {
    match (source.triangle, source.config) {
        (Some(t), _) => {
            let p = t.placement();
            (p, p)
        }
        (None, Some(PairConfig::RhombusPi6)) => rhombus_pi6_placement(),
        (None, Some(PairConfig::ConcavePi6)) => concave_pi6_placement(),
        (None, None) => unreachable!("argument group requires an input"),
    }
}

/// Distances in generation order; chunks are drawn in parallel.
fn sample(first: &PlacedTriangle, second: &PlacedTriangle, spec: &RunSpec) -> Vec<f64> {
    let chunks: Vec<Vec<f64>> = (0..spec.chunks())
        .into_par_iter()
        .map(|c| distances_chunk(first, second, spec, c))
        .collect();
    chunks.concat()
}
