#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tridist_core::geometry::{CaseLabel, Triangle};

pub fn reference_triangles() -> [Triangle; 3] {
    [
        Triangle::from_angles_deg(130.0, 30.0, 20.0, 1.0).unwrap(),
        Triangle::from_angles_deg(65.0, 60.0, 55.0, 1.0).unwrap(),
        Triangle::from_angles_deg(80.0, 70.0, 30.0, 1.0).unwrap(),
    ]
}

/// `n` triangles with `a = 1` and every angle at least 10°, split evenly over
/// the three cases.
pub fn random_triangles(n: usize, seed: u64) -> Vec<Triangle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let per_case = n.div_ceil(3);
    let mut buckets: [Vec<Triangle>; 3] = Default::default();
    while buckets.iter().map(Vec::len).sum::<usize>() < 3 * per_case {
        let obtuse = buckets[0].len() < per_case;
        let (alpha, beta) = if obtuse {
            let alpha = rng.random_range(95.0..150.0);
            (alpha, rng.random_range(10.0..170.0 - alpha))
        } else {
            (rng.random_range(60.0..90.0), rng.random_range(10.0..90.0))
        };
        let gamma = 180.0 - alpha - beta;
        if gamma < 10.0 || (!obtuse && gamma >= 90.0) {
            continue;
        }
        let t = Triangle::from_angles_deg(alpha, beta, gamma, 1.0).unwrap();
        let slot = match t.classify() {
            CaseLabel::Case1 => 0,
            CaseLabel::Case2 => 1,
            CaseLabel::Case3 => 2,
        };
        if buckets[slot].len() < per_case {
            buckets[slot].push(t);
        }
    }
    buckets.into_iter().flatten().take(n).collect()
}
