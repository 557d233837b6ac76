//! Seeded uniform sampling of point pairs and empirical-vs-analytic comparison.
//!
//! Samples are generated in fixed-size chunks; chunk `i` draws from ChaCha8
//! stream `i` of the run's seed. Any partition of the chunks across threads
//! therefore reproduces the serial sample list exactly.

use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{PlacedTriangle, Point, Triangle};
use crate::{Error, Result};

/// Pairs drawn per RNG stream.
pub const CHUNK_PAIRS: usize = 4096;
/// KS acceptance threshold at `n = 10⁴` (critical value `1.36/√n ≈ 0.0136`, widened).
pub const KS_THRESHOLD: f64 = 0.02;

/// Right-continuous empirical CDF over a sorted sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
}

impl EmpiricalCdf {
    pub fn new(mut samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySample);
        }
        samples.sort_by(f64::total_cmp);
        Ok(EmpiricalCdf { sorted: samples })
    }

    /// `(#samples ≤ x) / n`.
    pub fn eval(&self, x: f64) -> f64 {
        self.sorted.partition_point(|&s| s <= x) as f64 / self.len() as f64
    }

    /// Left limit `(#samples < x) / n`.
    pub fn eval_left(&self, x: f64) -> f64 {
        self.sorted.partition_point(|&s| s < x) as f64 / self.len() as f64
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.sorted
    }

    pub fn min(&self) -> f64 {
        self.sorted[0]
    }

    pub fn max(&self) -> f64 {
        self.sorted[self.sorted.len() - 1]
    }
}

pub fn empirical_cdf_from_samples(samples: &[f64]) -> Result<EmpiricalCdf> {
    EmpiricalCdf::new(samples.to_vec())
}

/// One-sample Kolmogorov–Smirnov distance: the supremum over sample points of
/// `max(|F̂(x) − F(x)|, |F̂(x⁻) − F(x)|)`.
pub fn ks_statistic<F: Fn(f64) -> f64>(emp: &EmpiricalCdf, cdf: F) -> f64 {
    let s = emp.samples();
    let n = s.len() as f64;
    let mut sup = 0.0f64;
    let mut i = 0;
    while i < s.len() {
        let x = s[i];
        let mut j = i;
        while j < s.len() && s[j] == x {
            j += 1;
        }
        let f = cdf(x);
        sup = sup.max((j as f64 / n - f).abs()).max((i as f64 / n - f).abs());
        i = j;
    }
    sup
}

/// Two-sample Kolmogorov–Smirnov distance `sup |F̂₁ − F̂₂|`.
pub fn ks_two_sample(a: &EmpiricalCdf, b: &EmpiricalCdf) -> f64 {
    a.samples()
        .iter()
        .chain(b.samples())
        .map(|&x| (a.eval(x) - b.eval(x)).abs())
        .fold(0.0, f64::max)
}

/// Seed and size of a sampling run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunSpec {
    pub seed: u64,
    pub pairs: usize,
}

impl RunSpec {
    pub fn new(seed: u64, pairs: usize) -> Result<Self> {
        if pairs == 0 {
            return Err(Error::EmptySample);
        }
        Ok(RunSpec { seed, pairs })
    }

    pub fn chunks(&self) -> u64 {
        self.pairs.div_ceil(CHUNK_PAIRS) as u64
    }

    /// Number of pairs in chunk `i`.
    pub fn chunk_len(&self, i: u64) -> usize {
        let start = i as usize * CHUNK_PAIRS;
        (self.pairs - start).min(CHUNK_PAIRS)
    }
}

/// Maps `(u, v) ∈ [0,1]²` onto the triangle `[C, B, A]`, folding the upper
/// half of the parallelogram back when `u + v > 1`.
pub fn sample_point(t: &PlacedTriangle, u: f64, v: f64) -> Point {
    let (u, v) = if u + v > 1.0 { (1.0 - u, 1.0 - v) } else { (u, v) };
    let [c, b, a] = t.vertices;
    c + u * (b - c) + v * (a - c)
}

pub fn sample_point_rng<R: Rng + ?Sized>(t: &PlacedTriangle, rng: &mut R) -> Point {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    sample_point(t, u, v)
}

/// Stream `chunk` of `seed`.
pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

/// Distances of chunk `chunk`: `p` uniform in `first`, `q` uniform in `second`.
pub fn distances_chunk(first: &PlacedTriangle, second: &PlacedTriangle, spec: &RunSpec, chunk: u64) -> Vec<f64> {
    let mut rng = chunk_rng(spec.seed, chunk);
    (0..spec.chunk_len(chunk))
        .map(|_| {
            let p = sample_point_rng(first, &mut rng);
            let q = sample_point_rng(second, &mut rng);
            p.dist(q)
        })
        .collect()
}

/// All distances of a run in generation order.
pub fn cross_distances(first: &PlacedTriangle, second: &PlacedTriangle, spec: &RunSpec) -> Vec<f64> {
    let mut out = Vec::with_capacity(spec.pairs);
    for chunk in 0..spec.chunks() {
        out.extend(distances_chunk(first, second, spec, chunk));
    }
    out
}

/// Distances between two independent uniform points in `t`.
pub fn sample_pair_distances(t: &Triangle, spec: &RunSpec) -> Result<EmpiricalCdf> {
    let placed = t.placement();
    EmpiricalCdf::new(cross_distances(&placed, &placed, spec))
}

/// Distances between a uniform point in `first` and one in `second`.
pub fn sample_cross_distances(first: &PlacedTriangle, second: &PlacedTriangle, spec: &RunSpec) -> Result<EmpiricalCdf> {
    EmpiricalCdf::new(cross_distances(first, second, spec))
}
