//! Seeded random instance generation.
//!
//! Everything here is a pure function of its arguments: the same seed and
//! shape parameters produce the same instance, byte for byte once
//! serialized, so generated corpora are reproducible across machines.

use crate::error::{Error, Result};
use crate::geom::{DemandPoint, Instance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Spatial layout of generated demand points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    /// Independent uniform draws over the `[-100, 100]²` box.
    Uniform,
    /// Tight uniform blobs around centers spread on a wide circle, so the
    /// requested number of groups is visibly separated.
    Clustered { clusters: usize },
}

/// Generate `n` weighted points with the given layout and weight range.
pub fn generate_instance(
    n: usize,
    distribution: Distribution,
    weight_range: (f64, f64),
    v: f64,
    seed: u64,
) -> Result<Instance> {
    if n == 0 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    let (w_lo, w_hi) = weight_range;
    if !(w_lo > 0.0) || !(w_hi >= w_lo) || !w_hi.is_finite() {
        return Err(Error::Parse(format!(
            "weight range must satisfy 0 < lo <= hi (got {w_lo}..{w_hi})"
        )));
    }
    if let Distribution::Clustered { clusters } = distribution {
        if clusters == 0 || clusters > n {
            return Err(Error::Parse(format!(
                "cluster count must be between 1 and n (got {clusters} for n = {n})"
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weight = |rng: &mut ChaCha8Rng| {
        if w_lo == w_hi {
            w_lo
        } else {
            rng.gen_range(w_lo..=w_hi)
        }
    };

    let points: Vec<DemandPoint> = match distribution {
        Distribution::Uniform => (0..n)
            .map(|_| {
                DemandPoint::new(
                    rng.gen_range(-100.0..=100.0),
                    rng.gen_range(-100.0..=100.0),
                    weight(&mut rng),
                )
            })
            .collect(),
        Distribution::Clustered { clusters } => {
            // Centers evenly on a circle of radius 60 (randomly rotated),
            // blob radius 6: adjacent centers stay at least 2·60·sin(π/k)
            // apart, which clears the blob diameter for any sane k.
            let phase = rng.gen_range(0.0..TAU);
            let centers: Vec<(f64, f64)> = (0..clusters)
                .map(|i| {
                    let a = phase + TAU * i as f64 / clusters as f64;
                    (60.0 * a.cos(), 60.0 * a.sin())
                })
                .collect();
            (0..n)
                .map(|i| {
                    let (cx, cy) = centers[i % clusters];
                    DemandPoint::new(
                        cx + rng.gen_range(-6.0..=6.0),
                        cy + rng.gen_range(-6.0..=6.0),
                        weight(&mut rng),
                    )
                })
                .collect()
        }
    };
    Instance::new(points, v)
}
