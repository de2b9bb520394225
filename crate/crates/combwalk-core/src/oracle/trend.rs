//! Float dynamic programming for large-n trend checks.
//!
//! The exact rational DP is priced out of reach past a few dozen steps, so
//! asymptotic-exponent checks use f64 state vectors instead. Results from
//! this module feed power-law fits only, never bit-exact comparisons.
//!
//! The horizontal statistics factor exactly: the horizontal trace is a
//! simple random walk read at the loop count L_n, and its coin flips are
//! independent of the vertical dynamics, so E[f(X over L_n)] =
//! sum_l P(L_n = l) E[f(X over l)]. The vertical component has no such
//! factorization (its time change is driven by its own zero visits) and
//! is handled by direct barrier sweeps on the one-dimensional chain.
//!
//! State vectors are truncated where the discarded tail is below 1e-13;
//! that bias is far under the fit tolerances this module serves.

/// One statistic sampled on a grid of walk lengths.
pub type TrendSeries = Vec<(usize, f64)>;

/// The six distance statistics on a common grid of walk lengths.
#[derive(Debug, Clone)]
pub struct TrendData {
    pub abs_x: TrendSeries,
    pub abs_y: TrendSeries,
    pub dev_x: TrendSeries,
    pub dev_y: TrendSeries,
    pub span_x: TrendSeries,
    pub span_y: TrendSeries,
}

/// Expected |S_n^x|, |S_n^y|, deviations and spans at each length in `ns`
/// (ascending, largest a few thousand at most).
pub fn trend_sequences(ns: &[usize]) -> TrendData {
    assert!(!ns.is_empty());
    assert!(ns.windows(2).all(|w| w[0] < w[1]), "lengths must ascend");
    let n_max = *ns.last().unwrap();
    assert!(n_max <= 4096, "float DP is intended for n <= 4096");

    let y_cap = n_max.min(9 * isqrt(n_max) + 12);
    let l_cap = n_max.min(12 * isqrt(n_max) + 24);

    let loop_counts = loop_count_distributions(ns, n_max, y_cap, l_cap);
    let srw = SrwTables::build(l_cap);

    let mut abs_x = Vec::new();
    let mut dev_x = Vec::new();
    let mut span_x = Vec::new();
    for (&n, q) in ns.iter().zip(&loop_counts) {
        let mix = |table: &[f64]| q.iter().zip(table).map(|(p, v)| p * v).sum::<f64>();
        abs_x.push((n, mix(&srw.abs)));
        dev_x.push((n, mix(&srw.dev)));
        span_x.push((n, 2.0 * mix(&srw.one_sided_max)));
    }

    TrendData {
        abs_x,
        abs_y: vertical_abs(ns, n_max, y_cap),
        dev_x,
        dev_y: vertical_deviation(ns, n_max, y_cap),
        span_x,
        span_y: vertical_span(ns, n_max, y_cap),
    }
}

fn isqrt(n: usize) -> usize {
    (n as f64).sqrt().ceil() as usize
}

/// P(L_n = l) for each requested n, from the joint chain over
/// (|vertical position|, loops so far). Loops happen only on the axis,
/// with probability 1/2.
fn loop_count_distributions(
    ns: &[usize],
    n_max: usize,
    y_cap: usize,
    l_cap: usize,
) -> Vec<Vec<f64>> {
    let width = l_cap + 1;
    let mut state = vec![0.0f64; (y_cap + 1) * width];
    state[0] = 1.0;
    let mut next = vec![0.0f64; state.len()];
    let mut out = Vec::with_capacity(ns.len());
    let marginal = |state: &[f64]| {
        let mut q = vec![0.0f64; width];
        for j in 0..=y_cap {
            for l in 0..width {
                q[l] += state[j * width + l];
            }
        }
        q
    };
    if ns[0] == 0 {
        out.push(marginal(&state));
    }
    for n in 1..=n_max {
        next.iter_mut().for_each(|v| *v = 0.0);
        for j in 0..=y_cap {
            let row = j * width;
            for l in 0..width {
                let m = state[row + l];
                if m == 0.0 {
                    continue;
                }
                if j == 0 {
                    if l + 1 < width {
                        next[row + l + 1] += 0.5 * m;
                    }
                    next[width + l] += 0.5 * m;
                } else {
                    next[row - width + l] += 0.5 * m;
                    if j < y_cap {
                        next[row + width + l] += 0.5 * m;
                    }
                }
            }
        }
        std::mem::swap(&mut state, &mut next);
        if ns.contains(&n) {
            out.push(marginal(&state));
        }
    }
    out
}

/// Expectation tables for the simple random walk on Z up to `m_max` steps.
struct SrwTables {
    /// E |X_m|
    abs: Vec<f64>,
    /// E max_{i<=m} |X_i|
    dev: Vec<f64>,
    /// E max_{i<=m} X_i, via the reflection identity
    /// E[max] = E|X_m| - 1/2 + P(X_m = 0)/2.
    one_sided_max: Vec<f64>,
}

impl SrwTables {
    fn build(m_max: usize) -> Self {
        // folded walk |X|: from 0 both signs land on 1
        let mut mass = vec![0.0f64; m_max + 2];
        mass[0] = 1.0;
        let mut abs = Vec::with_capacity(m_max + 1);
        let mut one_sided_max = Vec::with_capacity(m_max + 1);
        abs.push(0.0);
        one_sided_max.push(0.0);
        for m in 1..=m_max {
            let mut next = vec![0.0f64; m_max + 2];
            next[1] += mass[0];
            for j in 1..=m {
                if mass[j] == 0.0 {
                    continue;
                }
                next[j - 1] += 0.5 * mass[j];
                next[j + 1] += 0.5 * mass[j];
            }
            mass = next;
            let e_abs: f64 = mass.iter().enumerate().map(|(j, p)| j as f64 * p).sum();
            abs.push(e_abs);
            one_sided_max.push(e_abs - 0.5 + 0.5 * mass[0]);
        }

        // two-sided deviation by barrier sweeps: E[D_m] = sum_h P(D_m > h)
        let mut dev = vec![0.0f64; m_max + 1];
        for h in 0..=m_max {
            let mut conf = vec![0.0f64; h + 2];
            conf[0] = 1.0;
            let mut touched = false;
            for slot in dev.iter_mut().skip(1) {
                let mut next = vec![0.0f64; h + 2];
                if h >= 1 {
                    next[1] += conf[0];
                    for j in 1..=h {
                        if conf[j] == 0.0 {
                            continue;
                        }
                        next[j - 1] += 0.5 * conf[j];
                        if j < h {
                            next[j + 1] += 0.5 * conf[j];
                        }
                    }
                }
                conf = next;
                let excess = 1.0 - conf.iter().sum::<f64>();
                *slot += excess;
                if excess > 1e-17 {
                    touched = true;
                }
            }
            if !touched {
                break;
            }
        }

        Self {
            abs,
            dev,
            one_sided_max,
        }
    }
}

/// Requested-step snapshots of E|Y_n| for the vertical component (the
/// folded chain with a half-probability loop at zero).
fn vertical_abs(ns: &[usize], n_max: usize, y_cap: usize) -> TrendSeries {
    let mut mass = vec![0.0f64; y_cap + 2];
    mass[0] = 1.0;
    let mut out = Vec::new();
    let expect = |mass: &[f64]| {
        mass.iter()
            .enumerate()
            .map(|(j, p)| j as f64 * p)
            .sum::<f64>()
    };
    if ns[0] == 0 {
        out.push((0, 0.0));
    }
    for n in 1..=n_max {
        let mut next = vec![0.0f64; y_cap + 2];
        next[0] += 0.5 * mass[0];
        next[1] += 0.5 * mass[0];
        for j in 1..=y_cap {
            if mass[j] == 0.0 {
                continue;
            }
            next[j - 1] += 0.5 * mass[j];
            if j < y_cap {
                next[j + 1] += 0.5 * mass[j];
            }
        }
        mass = next;
        if ns.contains(&n) {
            out.push((n, expect(&mass)));
        }
    }
    out
}

/// E[D_n^y] at the requested steps: barrier sweep over the folded vertical
/// chain confined to [0, h].
fn vertical_deviation(ns: &[usize], n_max: usize, y_cap: usize) -> TrendSeries {
    let mut acc = vec![0.0f64; ns.len()];
    for h in 0..=y_cap {
        let mut conf = vec![0.0f64; h + 2];
        conf[0] = 1.0;
        let mut last_excess = 0.0;
        for n in 1..=n_max {
            let mut next = vec![0.0f64; h + 2];
            next[0] += 0.5 * conf[0];
            if h >= 1 {
                next[1] += 0.5 * conf[0];
            }
            for j in 1..=h {
                if conf[j] == 0.0 {
                    continue;
                }
                next[j - 1] += 0.5 * conf[j];
                if j < h {
                    next[j + 1] += 0.5 * conf[j];
                }
            }
            conf = next;
            let excess = 1.0 - conf.iter().sum::<f64>();
            last_excess = excess;
            if let Some(i) = ns.iter().position(|&m| m == n) {
                acc[i] += excess;
            }
        }
        if last_excess < 1e-17 {
            break;
        }
    }
    ns.iter().copied().zip(acc).collect()
}

/// E[M_n^y] = 2 E[max Y_n] at the requested steps: one-sided sweep over the
/// signed vertical chain confined to (-inf, h], with the low side truncated
/// at -y_cap.
fn vertical_span(ns: &[usize], n_max: usize, y_cap: usize) -> TrendSeries {
    let mut acc = vec![0.0f64; ns.len()];
    for h in 0..=y_cap {
        let low = y_cap as i64;
        let width = (low + h as i64 + 1) as usize;
        let zero = low as usize;
        let mut conf = vec![0.0f64; width];
        conf[zero] = 1.0;
        let mut last_excess = 0.0;
        for n in 1..=n_max {
            let mut next = vec![0.0f64; width];
            for i in 0..width {
                let m = conf[i];
                if m == 0.0 {
                    continue;
                }
                if i == zero {
                    next[zero] += 0.5 * m;
                    if zero + 1 < width {
                        next[zero + 1] += 0.25 * m;
                    }
                    if zero >= 1 {
                        next[zero - 1] += 0.25 * m;
                    }
                } else {
                    if i >= 1 {
                        next[i - 1] += 0.5 * m;
                    }
                    if i + 1 < width {
                        next[i + 1] += 0.5 * m;
                    }
                }
            }
            conf = next;
            let excess = 1.0 - conf.iter().sum::<f64>();
            last_excess = excess;
            if let Some(idx) = ns.iter().position(|&m| m == n) {
                acc[idx] += excess;
            }
        }
        if last_excess < 1e-16 {
            break;
        }
    }
    ns.iter()
        .copied()
        .zip(acc.iter().map(|a| 2.0 * a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::Axis;
    use num_traits::ToPrimitive;

    #[test]
    fn trend_matches_exact_oracle_at_small_n() {
        let ns: Vec<usize> = (1..=24).collect();
        let data = trend_sequences(&ns);
        let expectations = oracle::expectation_profile(24);
        let dev_x = oracle::deviation_expectation_profile(24, Axis::X);
        let dev_y = oracle::deviation_expectation_profile(24, Axis::Y);
        let span_x = oracle::span_expectation_profile(24, Axis::X);
        let span_y = oracle::span_expectation_profile(24, Axis::Y);
        for (i, &n) in ns.iter().enumerate() {
            let close = |a: f64, b: f64| (a - b).abs() < 1e-11;
            assert!(
                close(data.abs_x[i].1, expectations[n].abs_x.to_f64().unwrap()),
                "abs_x at {n}"
            );
            assert!(
                close(data.abs_y[i].1, expectations[n].abs_y.to_f64().unwrap()),
                "abs_y at {n}"
            );
            assert!(
                close(data.dev_x[i].1, dev_x[n].to_f64().unwrap()),
                "dev_x at {n}"
            );
            assert!(
                close(data.dev_y[i].1, dev_y[n].to_f64().unwrap()),
                "dev_y at {n}"
            );
            assert!(
                close(data.span_x[i].1, span_x[n].to_f64().unwrap()),
                "span_x at {n}"
            );
            assert!(
                close(data.span_y[i].1, span_y[n].to_f64().unwrap()),
                "span_y at {n}"
            );
        }
    }
}
