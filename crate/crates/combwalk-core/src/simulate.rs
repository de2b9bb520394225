//! Monte Carlo sampling of comb walks.
//!
//! The comb is never materialized: the walk state is a coordinate pair
//! and the kernel branches on whether the walker sits on the axis. Every
//! statistic of interest is maintained online, one pass, O(1) memory per
//! walk. Walks are seeded individually from (seed, walk index), so runs
//! are reproducible bit-for-bit at any thread count.

use crate::oracle::exit::Norm;
use crate::parallel::chunked_reduce;
use crate::rng::{BitSource, Xoshiro256pp};

/// Parameters of one Monte Carlo run.
#[derive(Debug, Clone)]
pub struct WalkConfig {
    pub n_steps: u64,
    pub n_walks: u64,
    pub seed: u64,
    /// Optional snapshot times as fractions of the walk length, each in
    /// (0, 1]; snapshots are taken at step floor(n * t).
    pub record_grid: Option<Vec<f64>>,
}

impl WalkConfig {
    pub fn new(n_steps: u64, n_walks: u64, seed: u64) -> Self {
        assert!(n_steps >= 1 && n_walks >= 1);
        Self {
            n_steps,
            n_walks,
            seed,
            record_grid: None,
        }
    }

    /// Steps at which snapshots are recorded, one per grid entry.
    pub fn snapshot_steps(&self) -> Vec<u64> {
        match &self.record_grid {
            None => Vec::new(),
            Some(grid) => {
                let mut steps: Vec<u64> = grid
                    .iter()
                    .map(|&t| {
                        assert!(t > 0.0 && t <= 1.0, "grid times must lie in (0, 1]");
                        (self.n_steps as f64 * t).floor() as u64
                    })
                    .collect();
                steps.sort_unstable();
                steps
            }
        }
    }
}

/// State recorded at one snapshot step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Snapshot {
    pub step: u64,
    pub x: i64,
    pub y: i64,
    pub loops: u64,
}

/// Everything one sampled path contributes: final position, per-axis
/// maximal deviations and spans, the running 1-norm maximum (needed for
/// the pathwise norm inequalities) and the loop count, i.e. the number
/// of horizontal steps taken on the axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSummary {
    pub final_x: i64,
    pub final_y: i64,
    pub dev_x: i64,
    pub dev_y: i64,
    pub span_x: i64,
    pub span_y: i64,
    pub max_norm_1: i64,
    pub loops: u64,
    pub snapshots: Vec<Snapshot>,
}

impl PathSummary {
    pub fn max_norm_inf(&self) -> i64 {
        self.dev_x.max(self.dev_y)
    }
}

/// Sample one walk. `snapshot_steps` must be ascending; each entry yields
/// one snapshot (duplicates allowed, one snapshot each).
pub fn run_walk(n_steps: u64, snapshot_steps: &[u64], rng: Xoshiro256pp) -> PathSummary {
    debug_assert!(snapshot_steps.windows(2).all(|w| w[0] <= w[1]));
    let mut bits = BitSource::new(rng);
    let (mut x, mut y) = (0i64, 0i64);
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0i64, 0i64, 0i64, 0i64);
    let mut max_norm_1 = 0i64;
    let mut loops = 0u64;
    let mut snapshots = Vec::with_capacity(snapshot_steps.len());
    let mut next_snap = 0usize;
    while next_snap < snapshot_steps.len() && snapshot_steps[next_snap] == 0 {
        snapshots.push(Snapshot {
            step: 0,
            x: 0,
            y: 0,
            loops: 0,
        });
        next_snap += 1;
    }
    for step in 1..=n_steps {
        if y == 0 {
            match bits.take(2) {
                0 => {
                    x += 1;
                    loops += 1;
                    if x > max_x {
                        max_x = x;
                    }
                }
                1 => {
                    x -= 1;
                    loops += 1;
                    if x < min_x {
                        min_x = x;
                    }
                }
                2 => {
                    y = 1;
                    if max_y == 0 {
                        max_y = 1;
                    }
                }
                _ => {
                    y = -1;
                    if min_y == 0 {
                        min_y = -1;
                    }
                }
            }
        } else if bits.take(1) == 1 {
            y += 1;
            if y > max_y {
                max_y = y;
            }
        } else {
            y -= 1;
            if y < min_y {
                min_y = y;
            }
        }
        let norm_1 = x.abs() + y.abs();
        if norm_1 > max_norm_1 {
            max_norm_1 = norm_1;
        }
        while next_snap < snapshot_steps.len() && snapshot_steps[next_snap] == step {
            snapshots.push(Snapshot { step, x, y, loops });
            next_snap += 1;
        }
    }
    PathSummary {
        final_x: x,
        final_y: y,
        dev_x: max_x.max(-min_x),
        dev_y: max_y.max(-min_y),
        span_x: max_x - min_x,
        span_y: max_y - min_y,
        max_norm_1,
        loops,
        snapshots,
    }
}

/// Per-walk statistic to estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    AbsX,
    AbsY,
    DevX,
    DevY,
    SpanX,
    SpanY,
    Norm1,
    NormInf,
    Loops,
}

impl Quantity {
    pub const ALL: [Quantity; 9] = [
        Quantity::AbsX,
        Quantity::AbsY,
        Quantity::DevX,
        Quantity::DevY,
        Quantity::SpanX,
        Quantity::SpanY,
        Quantity::Norm1,
        Quantity::NormInf,
        Quantity::Loops,
    ];

    pub fn extract(&self, s: &PathSummary) -> f64 {
        (match self {
            Quantity::AbsX => s.final_x.abs(),
            Quantity::AbsY => s.final_y.abs(),
            Quantity::DevX => s.dev_x,
            Quantity::DevY => s.dev_y,
            Quantity::SpanX => s.span_x,
            Quantity::SpanY => s.span_y,
            Quantity::Norm1 => s.final_x.abs() + s.final_y.abs(),
            Quantity::NormInf => s.final_x.abs().max(s.final_y.abs()),
            Quantity::Loops => s.loops as i64,
        }) as f64
    }

    pub fn name(&self) -> &'static str {
        match self {
            Quantity::AbsX => "abs_x",
            Quantity::AbsY => "abs_y",
            Quantity::DevX => "dev_x",
            Quantity::DevY => "dev_y",
            Quantity::SpanX => "span_x",
            Quantity::SpanY => "span_y",
            Quantity::Norm1 => "norm1",
            Quantity::NormInf => "norm_inf",
            Quantity::Loops => "loops",
        }
    }

    pub fn parse(name: &str) -> Option<Quantity> {
        Quantity::ALL.iter().copied().find(|q| q.name() == name)
    }
}

/// Running first and second moments; merging two of them pools the
/// underlying sums, so the operation is associative and commutative.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Moments {
    pub count: u64,
    pub sum: f64,
    pub sum_sq: f64,
}

impl Moments {
    pub fn observe(&mut self, value: f64) {
        self.count += 1;
        self.sum += value;
        self.sum_sq += value * value;
    }

    pub fn merge(self, other: Self) -> Self {
        Self {
            count: self.count + other.count,
            sum: self.sum + other.sum,
            sum_sq: self.sum_sq + other.sum_sq,
        }
    }

    pub fn estimate(&self) -> Estimate {
        assert!(self.count >= 1, "estimate needs at least one sample");
        let n = self.count as f64;
        let mean = self.sum / n;
        let stderr = if self.count >= 2 {
            let var = ((self.sum_sq - self.sum * self.sum / n) / (n - 1.0)).max(0.0);
            (var / n).sqrt()
        } else {
            0.0
        };
        Estimate {
            mean,
            stderr,
            count: self.count,
        }
    }
}

/// A Monte Carlo estimate: sample mean, its standard error, sample count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub count: u64,
}

impl Estimate {
    /// Pool two estimates exactly, by reconstructing the underlying sums.
    pub fn merge(self, other: Self) -> Self {
        self.to_moments().merge(other.to_moments()).estimate()
    }

    fn to_moments(self) -> Moments {
        let n = self.count as f64;
        let sum = self.mean * n;
        let var = self.stderr * self.stderr * n;
        let sum_sq = var * (n - 1.0) + sum * sum / n;
        Moments {
            count: self.count,
            sum,
            sum_sq,
        }
    }
}

/// Estimate every quantity in one pass over `n_walks` sampled paths.
pub fn estimate_all(config: &WalkConfig) -> [(Quantity, Estimate); 9] {
    let acc = chunked_reduce(
        config.n_walks,
        || [Moments::default(); 9],
        |acc, walk_index| {
            let summary = run_walk(
                config.n_steps,
                &[],
                Xoshiro256pp::for_walk(config.seed, walk_index),
            );
            for (slot, q) in acc.iter_mut().zip(Quantity::ALL) {
                slot.observe(q.extract(&summary));
            }
        },
        |a, b| {
            let mut out = [Moments::default(); 9];
            for (o, (x, y)) in out.iter_mut().zip(a.into_iter().zip(b)) {
                *o = x.merge(y);
            }
            out
        },
    );
    let mut iter = Quantity::ALL.into_iter().zip(acc);
    std::array::from_fn(|_| {
        let (q, m) = iter.next().expect("nine quantities");
        (q, m.estimate())
    })
}

/// Estimate a single quantity over `n_walks` sampled paths.
pub fn estimate_quantity(config: &WalkConfig, quantity: Quantity) -> Estimate {
    let acc = chunked_reduce(
        config.n_walks,
        Moments::default,
        |acc, walk_index| {
            let summary = run_walk(
                config.n_steps,
                &[],
                Xoshiro256pp::for_walk(config.seed, walk_index),
            );
            acc.observe(quantity.extract(&summary));
        },
        Moments::merge,
    );
    acc.estimate()
}

/// Sample all paths with their snapshots, in walk order.
pub fn sample_paths(config: &WalkConfig) -> Vec<PathSummary> {
    let steps = config.snapshot_steps();
    chunked_reduce(
        config.n_walks,
        Vec::new,
        |acc: &mut Vec<PathSummary>, walk_index| {
            acc.push(run_walk(
                config.n_steps,
                &steps,
                Xoshiro256pp::for_walk(config.seed, walk_index),
            ));
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

/// Steps before the walk first leaves the radius-`radius` ball. Samples
/// are capped at 10^9 steps with an explicit flag; the expectation scales
/// like radius^2, so the cap is unreachable at sane radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitSample {
    pub steps: u64,
    pub capped: bool,
}

pub const EXIT_STEP_CAP: u64 = 1_000_000_000;

pub fn exit_time_sample(radius: i64, norm: Norm, rng: Xoshiro256pp) -> ExitSample {
    assert!(radius >= 1);
    let mut bits = BitSource::new(rng);
    let (mut x, mut y) = (0i64, 0i64);
    let mut steps = 0u64;
    loop {
        if y == 0 {
            match bits.take(2) {
                0 => x += 1,
                1 => x -= 1,
                2 => y = 1,
                _ => y = -1,
            }
        } else if bits.take(1) == 1 {
            y += 1;
        } else {
            y -= 1;
        }
        steps += 1;
        let out = match norm {
            Norm::Inf => x.abs().max(y.abs()) > radius,
            Norm::One => x.abs() + y.abs() > radius,
        };
        if out {
            return ExitSample {
                steps,
                capped: false,
            };
        }
        if steps >= EXIT_STEP_CAP {
            return ExitSample {
                steps,
                capped: true,
            };
        }
    }
}

/// Mean exit time over `n_samples` independent walks, plus the number of
/// capped samples (which would bias the estimate low if ever nonzero).
pub fn exit_time_estimate(radius: i64, norm: Norm, n_samples: u64, seed: u64) -> (Estimate, u64) {
    let (moments, capped) = chunked_reduce(
        n_samples,
        || (Moments::default(), 0u64),
        |acc, index| {
            let sample = exit_time_sample(radius, norm, Xoshiro256pp::for_walk(seed, index));
            acc.0.observe(sample.steps as f64);
            acc.1 += sample.capped as u64;
        },
        |a, b| (a.0.merge(b.0), a.1 + b.1),
    );
    (moments.estimate(), capped)
}
