//! Exact chord-length and random point-distance distributions for arbitrary
//! triangles and for pairs of triangles sharing a side.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! - [`geometry`]: canonical triangles (`a ≥ b ≥ c`) and the three case regimes.
//! - [`chord_dist`]: the analytic chord-length CDF and the deterministic chord sweep.
//! - [`point_dist`]: PDF/CDF of the distance between two uniform points in a triangle.
//! - [`closed_forms`]: equilateral, rhombus and two-triangle reference distributions.
//! - [`decompose`]: cross-triangle distance CDFs by decomposition and recursion.
//! - [`montecarlo`]: seeded sampling, empirical CDFs and Kolmogorov–Smirnov distances.
//!
//! ```
//! use tridist_core::geometry::Triangle;
//! use tridist_core::point_dist::PointDistance;
//!
//! let t = Triangle::from_angles_deg(130.0, 30.0, 20.0, 1.0).unwrap();
//! let dist = PointDistance::new(&t);
//! assert!((dist.cdf(1.0) - 1.0).abs() < 1e-9);
//! ```

#![cfg_attr(not(test), no_std)]
// `!(x <= tol)` is used deliberately so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod chord_dist;
pub mod closed_forms;
pub mod decompose;
mod error;
pub mod geometry;
pub mod montecarlo;
pub mod piecewise;
pub mod point_dist;
pub mod quadrature;

pub use error::{Error, Result};
