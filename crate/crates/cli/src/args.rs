use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tridist_core::geometry::{PlacedTriangle, Triangle};

use crate::input::{parse_placed, parse_triangle};

#[derive(Debug, Parser)]
#[command(
    name = "tridist",
    version,
    about = "Chord-length and point-distance distributions of triangles"
)]
pub struct Cli {
    /// Worker threads for sampling and sweeps (default: all cores).
    #[arg(long, global = true, env = "TRIDIST_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chord-length CDF on a grid: `l,F`.
    Cld {
        #[arg(long, value_parser = parse_triangle)]
        triangle: Triangle,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Point-distance PDF or CDF on a grid: `d,value`.
    Pdist {
        #[command(flatten)]
        source: PdistSource,
        /// Enlarge the named distribution by this factor.
        #[arg(long, requires = "dist")]
        scale: Option<f64>,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Cross distance between two triangles sharing a side: `d,value`.
    Cross {
        #[command(flatten)]
        pair: CrossSource,
        /// Second triangle, sharing a side with the first.
        #[arg(long, value_parser = parse_placed, requires = "t1")]
        t2: Option<PlacedTriangle>,
        /// CSV table `d,G` of the union's distance CDF (with --t1/--t2).
        #[arg(long, requires = "t1")]
        whole_cdf: Option<PathBuf>,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Deterministic chord enumeration: `theta,length` with theta in degrees.
    Sweep {
        #[arg(long, value_parser = parse_triangle)]
        triangle: Triangle,
        /// Orientation step in degrees.
        #[arg(long, default_value_t = 1.0)]
        dtheta: f64,
        /// Offset step between parallel chords.
        #[arg(long, default_value_t = 1e-3)]
        dd: f64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Distances of seeded random point pairs: `distance`.
    Simulate {
        #[command(flatten)]
        source: SampleSource,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Kolmogorov–Smirnov check of the analytic CDF against a simulation.
    Verify {
        #[command(flatten)]
        source: SampleSource,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = tridist_core::montecarlo::KS_THRESHOLD)]
        threshold: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairConfig {
    /// Two (120°,30°,30°) triangles forming a rhombus.
    RhombusPi6,
    /// Two of the three (120°,30°,30°) triangles tiling an equilateral triangle.
    ConcavePi6,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PdistSource {
    #[arg(long, value_parser = parse_triangle)]
    pub triangle: Option<Triangle>,
    /// Named closed-form distribution.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(tridist_core::closed_forms::IDS))]
    pub dist: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CrossSource {
    #[arg(long, value_enum)]
    pub config: Option<PairConfig>,
    /// First triangle as `x,y;x,y;x,y`.
    #[arg(long, value_parser = parse_placed, requires_all = ["t2", "whole_cdf"])]
    pub t1: Option<PlacedTriangle>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SampleSource {
    #[arg(long, value_parser = parse_triangle)]
    pub triangle: Option<Triangle>,
    #[arg(long, value_enum)]
    pub config: Option<PairConfig>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Number of grid points from 0 to the largest distance, both included.
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..))]
    pub grid: u32,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct KindArgs {
    #[arg(long)]
    pub pdf: bool,
    /// The default.
    #[arg(long)]
    pub cdf: bool,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub pairs: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}
