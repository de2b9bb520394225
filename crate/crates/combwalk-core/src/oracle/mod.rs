//! Independent exact ground truth for everything the generating functions
//! claim: dynamic programming over the comb transition kernel, barrier
//! restricted variants, 1-D path counting, and absorbing-chain solves.
//!
//! The state space is never approximated. After n steps the walk lies in
//! the 1-norm diamond of radius n, so iterating the kernel over the live
//! support is lossless and every comparison against a generating-function
//! coefficient can demand bit-exact equality. Rational coefficient sizes
//! grow with the step count; a few dozen steps is the intended range, and
//! large-n trend work belongs to the float machinery in [`trend`].

pub mod exit;
pub mod trend;

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::series::{rat, Rational};
use crate::Axis;

/// A vertex of the comb: all of Z^2, with vertical edges everywhere and
/// horizontal edges only on the x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CombVertex {
    pub x: i64,
    pub y: i64,
}

impl CombVertex {
    pub const ORIGIN: CombVertex = CombVertex { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn norm_1(&self) -> i64 {
        self.x.abs() + self.y.abs()
    }

    pub fn norm_inf(&self) -> i64 {
        self.x.abs().max(self.y.abs())
    }
}

/// One-step transitions out of `v`: four quarter-probability moves on the
/// axis, two half-probability vertical moves elsewhere.
pub fn transitions(v: CombVertex) -> Vec<(CombVertex, Rational)> {
    if v.y == 0 {
        let q = rat(1, 4);
        vec![
            (CombVertex::new(v.x + 1, v.y), q.clone()),
            (CombVertex::new(v.x - 1, v.y), q.clone()),
            (CombVertex::new(v.x, v.y + 1), q.clone()),
            (CombVertex::new(v.x, v.y - 1), q),
        ]
    } else {
        let h = rat(1, 2);
        vec![
            (CombVertex::new(v.x, v.y + 1), h.clone()),
            (CombVertex::new(v.x, v.y - 1), h),
        ]
    }
}

/// Exact probability mass over comb vertices at a fixed time.
#[derive(Debug, Clone)]
pub struct StateDistribution {
    mass: HashMap<CombVertex, Rational>,
    step: usize,
}

impl StateDistribution {
    /// Point mass at the origin, time zero.
    pub fn origin() -> Self {
        Self::point_mass(CombVertex::ORIGIN)
    }

    /// Point mass at an arbitrary vertex, time zero.
    pub fn point_mass(v: CombVertex) -> Self {
        let mut mass = HashMap::new();
        mass.insert(v, Rational::one());
        Self { mass, step: 0 }
    }

    pub fn step_index(&self) -> usize {
        self.step
    }

    pub fn mass_at(&self, v: CombVertex) -> Rational {
        self.mass.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_mass(&self) -> Rational {
        self.mass.values().fold(Rational::zero(), |acc, m| acc + m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CombVertex, &Rational)> {
        self.mass.iter()
    }

    /// One application of the comb kernel. Mass is conserved exactly.
    pub fn step(&self) -> Self {
        self.step_filtered(|_| true)
    }

    /// One kernel application that discards any mass stepping outside the
    /// barrier region. The total mass of the result is the probability of
    /// surviving one more step.
    pub fn step_within(&self, barrier: &BarrierSpec) -> Self {
        self.step_filtered(|v| barrier.contains(v))
    }

    fn step_filtered(&self, keep: impl Fn(CombVertex) -> bool) -> Self {
        let mut mass: HashMap<CombVertex, Rational> = HashMap::with_capacity(self.mass.len() * 2);
        for (&v, m) in &self.mass {
            for (target, p) in transitions(v) {
                if keep(target) {
                    let entry = mass.entry(target).or_insert_with(Rational::zero);
                    *entry += m * &p;
                }
            }
        }
        Self {
            mass,
            step: self.step + 1,
        }
    }
}

/// Axis-aligned allowed region; `None` means unbounded on that side. The
/// survival event is "every visited vertex satisfies all bounds".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BarrierSpec {
    pub x_min: Option<i64>,
    pub x_max: Option<i64>,
    pub y_min: Option<i64>,
    pub y_max: Option<i64>,
}

impl BarrierSpec {
    pub const UNBOUNDED: BarrierSpec = BarrierSpec {
        x_min: None,
        x_max: None,
        y_min: None,
        y_max: None,
    };

    /// |coordinate| <= h along one axis, the other axis free: the event
    /// that the maximal deviation stays at or below h.
    pub fn deviation(axis: Axis, h: i64) -> Self {
        assert!(h >= 0);
        match axis {
            Axis::X => Self {
                x_min: Some(-h),
                x_max: Some(h),
                ..Self::UNBOUNDED
            },
            Axis::Y => Self {
                y_min: Some(-h),
                y_max: Some(h),
                ..Self::UNBOUNDED
            },
        }
    }

    /// coordinate <= h on one side only: the event that the running
    /// one-sided maximum stays at or below h.
    pub fn one_sided(axis: Axis, h: i64) -> Self {
        assert!(h >= 0);
        match axis {
            Axis::X => Self {
                x_max: Some(h),
                ..Self::UNBOUNDED
            },
            Axis::Y => Self {
                y_max: Some(h),
                ..Self::UNBOUNDED
            },
        }
    }

    /// The infinity-norm ball of radius r: the box [-r, r] x [-r, r].
    pub fn box_inf(r: i64) -> Self {
        assert!(r >= 0);
        Self {
            x_min: Some(-r),
            x_max: Some(r),
            y_min: Some(-r),
            y_max: Some(r),
        }
    }

    pub fn contains(&self, v: CombVertex) -> bool {
        self.x_min.is_none_or(|b| v.x >= b)
            && self.x_max.is_none_or(|b| v.x <= b)
            && self.y_min.is_none_or(|b| v.y >= b)
            && self.y_max.is_none_or(|b| v.y <= b)
    }
}

/// P(walk stays inside `barrier` through step k) for k = 0..=n.
pub fn survival_profile(n: usize, barrier: &BarrierSpec) -> Vec<Rational> {
    assert!(
        barrier.contains(CombVertex::ORIGIN),
        "origin must lie inside the barrier region"
    );
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    let mut dist = StateDistribution::origin();
    for _ in 0..n {
        dist = dist.step_within(barrier);
        out.push(dist.total_mass());
    }
    out
}

/// P(walk stays inside `barrier` for all of steps 0..=n).
pub fn survival_probability(n: usize, barrier: &BarrierSpec) -> Rational {
    survival_profile(n, barrier)
        .pop()
        .expect("nonempty profile")
}

/// Distribution of S_n restricted to paths that never left the barrier
/// region (defective: total mass is the survival probability).
pub fn constrained_distribution(n: usize, barrier: &BarrierSpec) -> StateDistribution {
    assert!(barrier.contains(CombVertex::ORIGIN));
    let mut dist = StateDistribution::origin();
    for _ in 0..n {
        dist = dist.step_within(barrier);
    }
    dist
}

/// Exact expected distances from the origin after a fixed number of steps.
#[derive(Debug, Clone)]
pub struct DistanceExpectations {
    pub abs_x: Rational,
    pub abs_y: Rational,
    pub norm_1: Rational,
    pub norm_inf: Rational,
}

/// E|S_k^x|, E|S_k^y|, E||S_k||_1, E||S_k||_inf for every k = 0..=n.
pub fn expectation_profile(n: usize) -> Vec<DistanceExpectations> {
    let mut out = Vec::with_capacity(n + 1);
    let mut dist = StateDistribution::origin();
    out.push(expectations_of(&dist));
    for _ in 0..n {
        dist = dist.step();
        out.push(expectations_of(&dist));
    }
    out
}

pub fn expectations(n: usize) -> DistanceExpectations {
    expectation_profile(n).pop().expect("nonempty profile")
}

fn expectations_of(dist: &StateDistribution) -> DistanceExpectations {
    let mut abs_x = Rational::zero();
    let mut abs_y = Rational::zero();
    let mut norm_1 = Rational::zero();
    let mut norm_inf = Rational::zero();
    for (v, m) in dist.iter() {
        abs_x += m * Rational::from_integer(v.x.abs().into());
        abs_y += m * Rational::from_integer(v.y.abs().into());
        norm_1 += m * Rational::from_integer(v.norm_1().into());
        norm_inf += m * Rational::from_integer(v.norm_inf().into());
    }
    DistanceExpectations {
        abs_x,
        abs_y,
        norm_1,
        norm_inf,
    }
}

/// E[D_k^axis] for k = 0..=n via the tail-sum identity
/// E\[D\] = sum_h P(D > h); the sum is finite because D_k <= k.
pub fn deviation_expectation_profile(n: usize, axis: Axis) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); n + 1];
    for h in 0..n as i64 {
        let profile = survival_profile(n, &BarrierSpec::deviation(axis, h));
        for (k, p) in profile.iter().enumerate() {
            acc[k] += Rational::one() - p;
        }
    }
    acc
}

pub fn deviation_expectation(n: usize, axis: Axis) -> Rational {
    deviation_expectation_profile(n, axis)
        .pop()
        .expect("nonempty profile")
}

/// E[M_k^axis] for k = 0..=n. The span is twice the one-sided maximum in
/// expectation (max and -min are exchangeable by reflection), so one-sided
/// barrier sweeps suffice.
pub fn span_expectation_profile(n: usize, axis: Axis) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); n + 1];
    for h in 0..n as i64 {
        let profile = survival_profile(n, &BarrierSpec::one_sided(axis, h));
        for (k, p) in profile.iter().enumerate() {
            acc[k] += Rational::one() - p;
        }
    }
    for a in &mut acc {
        *a += a.clone();
    }
    acc
}

pub fn span_expectation(n: usize, axis: Axis) -> Rational {
    span_expectation_profile(n, axis)
        .pop()
        .expect("nonempty profile")
}

/// P(walk started at `from` hits `target` for the first time at step k),
/// for k = 0..=n: absorbing-target DP, recording and removing the mass
/// that lands on the target each step.
pub fn first_passage_profile(from: CombVertex, target: CombVertex, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut mass: HashMap<CombVertex, Rational> = HashMap::new();
    mass.insert(from, Rational::one());
    out.push(if from == target {
        Rational::one()
    } else {
        Rational::zero()
    });
    if from == target {
        return out; // absorbed immediately; nothing left to propagate
    }
    for _ in 0..n {
        let mut next: HashMap<CombVertex, Rational> = HashMap::with_capacity(mass.len() * 2);
        for (&v, m) in &mass {
            for (u, p) in transitions(v) {
                let entry = next.entry(u).or_insert_with(Rational::zero);
                *entry += m * &p;
            }
        }
        out.push(next.remove(&target).unwrap_or_else(Rational::zero));
        mass = next;
    }
    out
}

/// Number of +-1 paths on Z of length n from 0 to l that stay within
/// [-k, h]. Pure integer DP; the count is bounded by 2^n.
pub fn path_counts_1d(h: i64, k: i64, l: i64, n: usize) -> u128 {
    assert!(h >= 0 && k >= 0, "barriers must be nonnegative");
    assert!(-k <= l && l <= h, "endpoint must lie inside the band");
    assert!(n <= 120, "count can overflow u128 past n = 120");
    let width = (h + k + 1) as usize;
    let offset = k;
    let mut row = vec![0u128; width];
    row[offset as usize] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; width];
        for (i, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if i > 0 {
                next[i - 1] += c;
            }
            if i + 1 < width {
                next[i + 1] += c;
            }
        }
        row = next;
    }
    row[(l + offset) as usize]
}

/// Endpoint profile of the tooth excursion walk: the vertical component
/// restricted to a single tooth, never taking the loop at zero. From the
/// axis each vertical direction has probability 1/4 (the missing 1/2 is
/// the discarded loop), off the axis 1/2 each. Folded over sign:
/// `profile[k][l]` is the probability mass of k-step no-loop paths with
/// |height| <= bound throughout, ending at height l or -l.
pub fn tooth_excursion_profile(steps: usize, bound: Option<i64>) -> Vec<Vec<Rational>> {
    let height = bound.map_or(steps, |b| b as usize).min(steps.max(1));
    let mut row = vec![Rational::zero(); height + 2];
    row[0] = Rational::one();
    let quarter = rat(1, 4);
    let half = rat(1, 2);
    let mut out = Vec::with_capacity(steps + 1);
    out.push(row[..=height].to_vec());
    for _ in 0..steps {
        let mut next = vec![Rational::zero(); height + 2];
        // from 0: both vertical directions fold onto height 1
        if height >= 1 && !row[0].is_zero() {
            next[1] += &row[0] * (&quarter + &quarter);
        }
        for j in 1..=height {
            if row[j].is_zero() {
                continue;
            }
            next[j - 1] += &row[j] * &half;
            if j < height {
                next[j + 1] += &row[j] * &half;
            }
        }
        row = next;
        out.push(row[..=height].to_vec());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    #[test]
    fn kernel_from_origin() {
        let dist = StateDistribution::origin().step();
        for v in [
            CombVertex::new(1, 0),
            CombVertex::new(-1, 0),
            CombVertex::new(0, 1),
            CombVertex::new(0, -1),
        ] {
            assert_eq!(dist.mass_at(v), rat(1, 4));
        }
        assert_eq!(dist.total_mass(), int(1));
    }

    #[test]
    fn kernel_off_axis() {
        // a walker parked on a tooth moves only vertically, half each way
        let dist = StateDistribution::point_mass(CombVertex::new(0, 1)).step();
        assert_eq!(dist.mass_at(CombVertex::ORIGIN), rat(1, 2));
        assert_eq!(dist.mass_at(CombVertex::new(0, 2)), rat(1, 2));
        assert_eq!(dist.total_mass(), int(1));

        let mut dist = StateDistribution::origin().step();
        dist = dist.step();
        assert_eq!(dist.mass_at(CombVertex::new(0, 2)), rat(1, 8));
        // return probability after two steps: 2*(1/4)(1/4) + 2*(1/4)(1/2)
        assert_eq!(dist.mass_at(CombVertex::ORIGIN), rat(3, 8));
        assert_eq!(dist.total_mass(), int(1));
    }

    #[test]
    fn mass_conservation_and_support() {
        let mut dist = StateDistribution::origin();
        for n in 1..=25 {
            dist = dist.step();
            assert_eq!(dist.total_mass(), int(1), "mass leaked at step {n}");
            assert!(dist.iter().all(|(v, _)| v.norm_1() <= n as i64));
        }
    }

    #[test]
    fn reflection_symmetry() {
        let mut dist = StateDistribution::origin();
        for _ in 0..12 {
            dist = dist.step();
        }
        for (v, m) in dist.iter() {
            assert_eq!(&dist.mass_at(CombVertex::new(-v.x, v.y)), m);
            assert_eq!(&dist.mass_at(CombVertex::new(v.x, -v.y)), m);
        }
    }

    #[test]
    fn survival_basics() {
        let barrier = BarrierSpec::deviation(Axis::Y, 0);
        assert_eq!(survival_probability(0, &barrier), int(1));
        // both steps must be horizontal: (1/2)^2
        assert_eq!(survival_probability(2, &barrier), rat(1, 4));
    }

    #[test]
    fn one_step_expectations() {
        let e = expectations(1);
        assert_eq!(e.abs_x, rat(1, 2));
        assert_eq!(e.abs_y, rat(1, 2));
        assert_eq!(e.norm_1, int(1));
        let zero = expectations(0);
        assert_eq!(zero.abs_x, int(0));
        assert_eq!(zero.abs_y, int(0));
        assert_eq!(zero.norm_inf, int(0));
    }

    #[test]
    fn norm_1_splits_into_components() {
        for n in 0..=15 {
            let e = expectations(n);
            assert_eq!(e.norm_1, &e.abs_x + &e.abs_y);
            assert!(e.norm_inf <= e.norm_1);
        }
    }

    #[test]
    fn deviation_and_span_small_values() {
        assert_eq!(deviation_expectation(1, Axis::X), rat(1, 2));
        assert_eq!(deviation_expectation(1, Axis::Y), rat(1, 2));
        assert_eq!(span_expectation(0, Axis::Y), int(0));
        // M_1 = 1 iff the first step moves along the axis in question,
        // which happens with probability 1/2 either way.
        assert_eq!(span_expectation(1, Axis::X), rat(1, 2));
        assert_eq!(span_expectation(1, Axis::Y), rat(1, 2));
        // deviation never exceeds span, span never exceeds twice deviation
        for n in 0..=12 {
            for axis in [Axis::X, Axis::Y] {
                let d = deviation_expectation(n, axis);
                let m = span_expectation(n, axis);
                assert!(d <= m, "E[D] > E[M] at n={n}");
                assert!(m <= rat(2, 1) * &d, "E[M] > 2 E[D] at n={n}");
            }
        }
    }

    #[test]
    fn path_counts_small_cases() {
        assert_eq!(path_counts_1d(1, 1, 0, 2), 2);
        assert_eq!(path_counts_1d(3, 2, 3, 3), 1);
        assert_eq!(path_counts_1d(5, 5, -2, 2), 1);
        // parity: an odd step count cannot end at an even position
        assert_eq!(path_counts_1d(5, 5, -2, 3), 0);
        // unconstrained-looking band wide enough for n=4: binomial(4,2)
        assert_eq!(path_counts_1d(4, 4, 0, 4), 6);
    }

    #[test]
    fn tooth_excursion_returns() {
        let profile = tooth_excursion_profile(6, None);
        // no-loop return probabilities: 1, 0, 1/4, 0, 1/8, 0, 5/64
        assert_eq!(profile[0][0], int(1));
        assert_eq!(profile[2][0], rat(1, 4));
        assert_eq!(profile[4][0], rat(1, 8));
        assert_eq!(profile[6][0], rat(5, 64));
        for k in [1, 3, 5] {
            assert_eq!(profile[k][0], int(0));
        }
    }
}
