//! Distributional tests of the joint scaling limit: the vertical
//! component rescaled by n^{1/2} tends to a Brownian motion, the loop
//! count rescaled by n^{1/2} to |N(0,1)| (the local time at zero), and
//! the horizontal component rescaled by n^{1/4} to a Brownian motion run
//! at that local time.

use thiserror::Error;

use crate::parallel::chunked_reduce;
use crate::rng::Xoshiro256pp;
use crate::simulate::{run_walk, WalkConfig};

/// One path snapshot divided by the scaling powers n^{1/4}, n^{1/2},
/// n^{1/2} for the horizontal position, vertical position and loop count.
#[derive(Debug, Clone, Copy)]
pub struct RescaledSnapshot {
    pub t: f64,
    pub x_scaled: f64,
    pub y_scaled: f64,
    pub loops_scaled: f64,
}

/// Rescaled snapshots at each grid time, one inner vector per walk.
/// The grid is sorted internally; snapshots come back in grid order.
pub fn sample_snapshots(
    n: u64,
    n_walks: u64,
    grid: &[f64],
    seed: u64,
) -> Vec<Vec<RescaledSnapshot>> {
    assert!(n >= 1, "rescaling needs at least one step");
    assert!(!grid.is_empty(), "snapshot grid must be nonempty");
    let mut sorted = grid.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("grid times must be comparable"));
    let mut config = WalkConfig::new(n, n_walks, seed);
    config.record_grid = Some(sorted.clone());
    let steps = config.snapshot_steps();
    let root4 = (n as f64).powf(0.25);
    let root2 = (n as f64).sqrt();
    chunked_reduce(
        n_walks,
        Vec::new,
        |acc: &mut Vec<Vec<RescaledSnapshot>>, walk_index| {
            let summary = run_walk(n, &steps, Xoshiro256pp::for_walk(seed, walk_index));
            acc.push(
                summary
                    .snapshots
                    .iter()
                    .zip(&sorted)
                    .map(|(snap, &t)| RescaledSnapshot {
                        t,
                        x_scaled: snap.x as f64 / root4,
                        y_scaled: snap.y as f64 / root2,
                        loops_scaled: snap.loops as f64 / root2,
                    })
                    .collect(),
            );
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

/// Draw from |N(0, 1)|: the limit law of the rescaled loop count, i.e.
/// of Brownian local time at zero up to time one.
pub fn reference_abs_normal(rng: &mut Xoshiro256pp) -> f64 {
    rng.next_gaussian().abs()
}

/// Draw from N(0, 1): the limit law of the rescaled vertical component.
pub fn reference_normal(rng: &mut Xoshiro256pp) -> f64 {
    rng.next_gaussian()
}

/// Draw from W_L with L ~ |N(0,1)| independent of the Brownian motion W:
/// conditionally on L the value is centered Gaussian with variance L, so
/// sqrt(L) * Z with independent standard normals does it exactly. This is
/// the limit law of the rescaled horizontal component at t = 1.
pub fn reference_brownian_at_local_time(rng: &mut Xoshiro256pp) -> f64 {
    let local_time = rng.next_gaussian().abs();
    local_time.sqrt() * rng.next_gaussian()
}

/// Slow cross-check of [`reference_brownian_at_local_time`]: simulate a
/// length-`m` random walk, measure its local time at zero by counting
/// visits, and evaluate an independent walk at that (rescaled) time.
/// Converges to the same law as m grows; used to validate the direct
/// sampler, not for production sampling.
pub fn reference_brownian_at_local_time_pathwise(m: usize, rng: &mut Xoshiro256pp) -> f64 {
    assert!(m >= 16);
    let root = (m as f64).sqrt();
    let mut y = 0i64;
    let mut visits = 1u64; // counting time zero
    for _ in 0..m {
        y += if rng.next_f64() < 0.5 { 1 } else { -1 };
        if y == 0 {
            visits += 1;
        }
    }
    let local_time = visits as f64 / root;
    let clock = ((local_time * root * root) as u64).min((m as u64) * m as u64);
    let mut w = 0i64;
    for _ in 0..clock {
        w += if rng.next_f64() < 0.5 { 1 } else { -1 };
    }
    w as f64 / root
}

/// Kolmogorov-Smirnov sup-distance between two empirical distributions
/// or between an empirical distribution and a reference law.
#[derive(Debug, Clone)]
pub struct KsResult {
    pub statistic: f64,
    pub n_samples: usize,
    pub reference: String,
}

#[derive(Debug, Error, PartialEq)]
pub enum KsError {
    #[error("KS test needs at least {MIN_KS_SAMPLES} samples, got {0}")]
    TooFewSamples(usize),
}

pub const MIN_KS_SAMPLES: usize = 100;

/// Reference laws with closed-form distribution functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceCdf {
    StandardNormal,
    AbsNormal,
}

impl ReferenceCdf {
    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            ReferenceCdf::StandardNormal => normal_cdf(x),
            ReferenceCdf::AbsNormal => {
                if x <= 0.0 {
                    0.0
                } else {
                    2.0 * normal_cdf(x) - 1.0
                }
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ReferenceCdf::StandardNormal => "normal",
            ReferenceCdf::AbsNormal => "abs_normal",
        }
    }
}

/// Phi(x) through the Abramowitz-Stegun 7.1.26 rational approximation of
/// erf (absolute error below 1.5e-7, orders of magnitude under the KS
/// thresholds used here).
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * (1.0 + erf(x / std::f64::consts::SQRT_2))
}

fn erf(x: f64) -> f64 {
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    let t = 1.0 / (1.0 + 0.327_591_1 * x);
    let poly = t
        * (0.254_829_592
            + t * (-0.284_496_736
                + t * (1.421_413_741 + t * (-1.453_152_027 + t * 1.061_405_429))));
    sign * (1.0 - poly * (-x * x).exp())
}

/// Two-sample KS statistic: sup |F_a - F_b| over the merged samples.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<KsResult, KsError> {
    if a.len() < MIN_KS_SAMPLES || b.len() < MIN_KS_SAMPLES {
        return Err(KsError::TooFewSamples(a.len().min(b.len())));
    }
    let mut xs = a.to_vec();
    let mut ys = b.to_vec();
    xs.sort_by(|p, q| p.partial_cmp(q).expect("samples must be comparable"));
    ys.sort_by(|p, q| p.partial_cmp(q).expect("samples must be comparable"));
    let (mut i, mut j) = (0usize, 0usize);
    let mut statistic = 0.0f64;
    while i < xs.len() && j < ys.len() {
        // advance past ties in both samples before comparing the CDFs
        if xs[i] < ys[j] {
            let v = xs[i];
            while i < xs.len() && xs[i] == v {
                i += 1;
            }
        } else if ys[j] < xs[i] {
            let v = ys[j];
            while j < ys.len() && ys[j] == v {
                j += 1;
            }
        } else {
            let v = xs[i];
            while i < xs.len() && xs[i] == v {
                i += 1;
            }
            while j < ys.len() && ys[j] == v {
                j += 1;
            }
        }
        let fa = i as f64 / xs.len() as f64;
        let fb = j as f64 / ys.len() as f64;
        statistic = statistic.max((fa - fb).abs());
    }
    Ok(KsResult {
        statistic,
        n_samples: a.len().min(b.len()),
        reference: "two-sample".to_string(),
    })
}

/// One-sample KS statistic against a closed-form reference law.
pub fn ks_against(samples: &[f64], reference: ReferenceCdf) -> Result<KsResult, KsError> {
    if samples.len() < MIN_KS_SAMPLES {
        return Err(KsError::TooFewSamples(samples.len()));
    }
    let mut xs = samples.to_vec();
    xs.sort_by(|p, q| p.partial_cmp(q).expect("samples must be comparable"));
    let n = xs.len() as f64;
    let mut statistic = 0.0f64;
    for (i, &x) in xs.iter().enumerate() {
        let f = reference.cdf(x);
        let below = i as f64 / n;
        let above = (i + 1) as f64 / n;
        statistic = statistic.max((f - below).abs()).max((f - above).abs());
    }
    Ok(KsResult {
        statistic,
        n_samples: xs.len(),
        reference: reference.name().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::Moments;

    #[test]
    fn identical_samples_have_zero_distance() {
        let xs: Vec<f64> = (0..500).map(|i| i as f64 / 500.0).collect();
        let r = ks_two_sample(&xs, &xs).unwrap();
        assert_eq!(r.statistic, 0.0);
    }

    #[test]
    fn rejects_small_samples() {
        let xs = vec![0.0; 50];
        assert_eq!(
            ks_two_sample(&xs, &xs).unwrap_err(),
            KsError::TooFewSamples(50)
        );
        assert!(ks_against(&xs, ReferenceCdf::StandardNormal).is_err());
    }

    #[test]
    fn normal_draws_pass_ks_against_normal() {
        let mut rng = Xoshiro256pp::from_seed(5);
        let xs: Vec<f64> = (0..10_000).map(|_| reference_normal(&mut rng)).collect();
        let r = ks_against(&xs, ReferenceCdf::StandardNormal).unwrap();
        // null scaling is 1.36/sqrt(N) ~ 0.014 at the 95th percentile
        assert!(r.statistic < 0.02, "KS = {}", r.statistic);
    }

    #[test]
    fn normal_cdf_reference_points() {
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-9);
        assert!((normal_cdf(1.96) - 0.975_002).abs() < 1e-3);
        assert!((normal_cdf(-1.0) + normal_cdf(1.0) - 1.0).abs() < 1e-7);
    }

    #[test]
    fn abs_normal_mean() {
        let mut rng = Xoshiro256pp::from_seed(7);
        let mut m = Moments::default();
        for _ in 0..1_000_000 {
            m.observe(reference_abs_normal(&mut rng));
        }
        let est = m.estimate();
        let want = (2.0 / std::f64::consts::PI).sqrt();
        assert!(
            (est.mean - want).abs() < 3.0 * est.stderr,
            "E|N| = {} vs {want}",
            est.mean
        );
    }

    #[test]
    fn brownian_at_local_time_moments() {
        let mut rng = Xoshiro256pp::from_seed(9);
        let mut mean = Moments::default();
        let mut var = Moments::default();
        for _ in 0..1_000_000 {
            let w = reference_brownian_at_local_time(&mut rng);
            mean.observe(w);
            var.observe(w * w);
        }
        let m = mean.estimate();
        assert!(m.mean.abs() < 3.0 * m.stderr, "mean = {}", m.mean);
        // Var(W_L) = E[L] = E|N| = sqrt(2/pi)
        let v = var.estimate();
        let want = (2.0 / std::f64::consts::PI).sqrt();
        assert!(
            (v.mean - want).abs() < 3.0 * v.stderr,
            "Var = {} vs {want}",
            v.mean
        );
    }

    #[test]
    fn pathwise_reference_agrees_with_direct_sampler() {
        let mut rng = Xoshiro256pp::from_seed(11);
        let direct: Vec<f64> = (0..4_000)
            .map(|_| reference_brownian_at_local_time(&mut rng))
            .collect();
        let pathwise: Vec<f64> = (0..4_000)
            .map(|_| reference_brownian_at_local_time_pathwise(4_096, &mut rng))
            .collect();
        let r = ks_two_sample(&direct, &pathwise).unwrap();
        assert!(r.statistic < 0.05, "KS = {}", r.statistic);
    }

    #[test]
    fn snapshots_are_scaled_consistently() {
        let n = 4_096;
        let walks = sample_snapshots(n, 64, &[0.5, 1.0], 13);
        assert_eq!(walks.len(), 64);
        let root4 = (n as f64).powf(0.25);
        let root2 = (n as f64).sqrt();
        for snaps in &walks {
            assert_eq!(snaps.len(), 2);
            assert_eq!(snaps[0].t, 0.5);
            assert_eq!(snaps[1].t, 1.0);
            for s in snaps {
                // scaled values correspond to integer lattice data
                let x = s.x_scaled * root4;
                let y = s.y_scaled * root2;
                assert!((x - x.round()).abs() < 1e-9);
                assert!((y - y.round()).abs() < 1e-9);
                assert!(s.loops_scaled >= 0.0);
            }
        }
    }
}
