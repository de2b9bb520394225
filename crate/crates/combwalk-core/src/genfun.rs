//! The named generating functions of the comb walk, realized as exact
//! truncated series in z (step count), w (1-D path steps) or v (the
//! Catalan substitution variable).
//!
//! Closed forms stated in v are always converted to z-series through one
//! canonical pipeline: build the Catalan series v(u) = u + u^3 + 2 u^5 + ...
//! (the branch of v/(1+v^2) = u with v(0) = 0), compose it with the
//! appropriate inner series — z/2 for the vertical substitution,
//! w(z) = (1 - sqrt(1-z^2))/(2z) for the horizontal one — and do the rest
//! of the algebra over z-series. No two-variable symbolic work anywhere,
//! so every stage can be checked against the enumeration oracle on its own.

use thiserror::Error;

use crate::series::{geometric, int, rat, PowerSeries};
use crate::Axis;

/// Which formal variable a catalog series is truncated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    /// step-count variable of the walk generating functions
    Z,
    /// step variable of the 1-D lattice path series
    W,
    /// Catalan substitution variable
    V,
}

impl std::fmt::Display for Variable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variable::Z => write!(f, "z"),
            Variable::W => write!(f, "w"),
            Variable::V => write!(f, "v"),
        }
    }
}

/// A named series together with its variable tag. Series in different
/// variables must never be combined without an explicit substitution.
#[derive(Debug, Clone)]
pub struct GfEntry {
    pub name: String,
    pub variable: Variable,
    pub series: PowerSeries,
}

fn expect_series(r: Result<PowerSeries, crate::series::SeriesError>, what: &str) -> PowerSeries {
    r.unwrap_or_else(|e| panic!("internal failure building {what}: {e}"))
}

/// sqrt(1 - z^2), the square-root every closed form below is built from.
fn sqrt_one_minus_z2(order: usize) -> PowerSeries {
    let arg = PowerSeries::one(order).sub(&PowerSeries::monomial(int(1), 2, order));
    expect_series(arg.sqrt(), "sqrt(1 - z^2)")
}

/// G(z): the Green function at the origin,
/// sqrt(2)/sqrt(1 - z^2 + sqrt(1 - z^2)). The two radicals combine into
/// 1/sqrt((1 - z^2 + sqrt(1-z^2))/2), whose argument has constant term 1,
/// so the whole computation stays rational.
pub fn green_g(order: usize) -> PowerSeries {
    let s = sqrt_one_minus_z2(order);
    let inner = PowerSeries::one(order)
        .sub(&PowerSeries::monomial(int(1), 2, order))
        .add(&s)
        .scale(&rat(1, 2));
    let root = expect_series(inner.sqrt(), "sqrt((1 - z^2 + sqrt(1-z^2))/2)");
    expect_series(PowerSeries::one(order).div(&root), "G(z)")
}

/// F1(z): first-passage series of one horizontal step,
/// (1 + sqrt(1-z^2) - sqrt(2) sqrt(1 - z^2 + sqrt(1-z^2)))/z.
pub fn green_f1(order: usize) -> PowerSeries {
    let n = order + 1;
    let s = sqrt_one_minus_z2(n);
    let inner = PowerSeries::one(n)
        .sub(&PowerSeries::monomial(int(1), 2, n))
        .add(&s)
        .scale(&rat(1, 2));
    let root = expect_series(inner.sqrt(), "sqrt((1 - z^2 + sqrt(1-z^2))/2)");
    let num = PowerSeries::one(n).add(&s).sub(&root.scale(&int(2)));
    expect_series(num.shift_div_z(1), "F1(z)")
}

/// F2(z): first-passage series of one vertical step, (1 - sqrt(1-z^2))/z.
pub fn green_f2(order: usize) -> PowerSeries {
    let n = order + 1;
    let num = PowerSeries::one(n).sub(&sqrt_one_minus_z2(n));
    expect_series(num.shift_div_z(1), "F2(z)")
}

/// G((0,0),(k,l)|z): the n-th coefficient is the exact n-step transition
/// probability from the origin to (k, l).
///
/// ```
/// use combwalk_core::genfun::green;
/// use combwalk_core::series::rat;
///
/// // two-step return probability at the origin
/// assert_eq!(green(0, 0, 8).coeff(2), &rat(3, 8));
/// ```
pub fn green(k: i64, l: i64, order: usize) -> PowerSeries {
    assert!(
        order >= (k.unsigned_abs() + l.unsigned_abs()) as usize,
        "order must reach the target vertex"
    );
    let g = green_g(order);
    let f1 = green_f1(order);
    let base = g.mul(&f1.pow(k.unsigned_abs() as usize));
    if l == 0 {
        base
    } else {
        let f2 = green_f2(order);
        base.mul(&f2.pow(l.unsigned_abs() as usize))
            .scale(&rat(1, 2))
    }
}

/// Green function of the tooth excursion walk at height 0:
/// 2 (1 - sqrt(1-z^2)) / z^2.
pub fn tooth_green_00(order: usize) -> PowerSeries {
    let n = order + 2;
    let num = PowerSeries::one(n)
        .sub(&sqrt_one_minus_z2(n))
        .scale(&int(2));
    expect_series(num.shift_div_z(2), "tooth excursion Green function")
}

/// E(z): the final-excursion factor
/// 2 (1 - sqrt(1-z^2)) / (z (sqrt(1-z^2) - 1 + z)). Both numerator and
/// denominator vanish to second order at z = 0; the singularity is
/// removable and the quotient has constant term 1.
pub fn excursion_e(order: usize) -> PowerSeries {
    let n = order + 2;
    let s = sqrt_one_minus_z2(n);
    let num = PowerSeries::one(n).sub(&s).scale(&int(2));
    let den = s
        .sub(&PowerSeries::one(n))
        .add(&PowerSeries::identity(n))
        .mul_z(1);
    let num = expect_series(num.shift_div_z(2), "E(z) numerator");
    let den = expect_series(den.shift_div_z(2), "E(z) denominator");
    expect_series(num.div(&den), "E(z)")
}

/// w(z) = (1 - sqrt(1-z^2))/(2z), the weight one horizontal step carries
/// in the excursion decomposition. Equals z * tooth_green_00 / 4 and also
/// F2(z)/2.
pub fn w_of_z(order: usize) -> PowerSeries {
    green_f2(order).scale(&rat(1, 2))
}

/// The Catalan series v(u) = (1 - sqrt(1 - 4u^2))/(2u): the solution of
/// v/(1 + v^2) = u with v(0) = 0.
pub fn catalan_series(order: usize) -> PowerSeries {
    let n = order + 1;
    let arg = PowerSeries::one(n).sub(&PowerSeries::monomial(int(4), 2, n));
    let num = PowerSeries::one(n).sub(&expect_series(arg.sqrt(), "sqrt(1 - 4u^2)"));
    expect_series(num.shift_div_z(1), "Catalan series").scale(&rat(1, 2))
}

/// Substitute an arbitrary series with zero constant term into the Catalan
/// series: the unique v-series with v/(1+v^2) == w and v(0) = 0.
pub fn catalan_inverse(w: &PowerSeries) -> Result<PowerSeries, crate::series::SeriesError> {
    catalan_series(w.order()).compose(w)
}

/// The vertical substitution variable: v with v/(1+v^2) = z/2.
pub fn v_vertical(order: usize) -> PowerSeries {
    let half_z = PowerSeries::monomial(rat(1, 2), 1, order);
    expect_series(catalan_inverse(&half_z), "vertical substitution v(z/2)")
}

/// The horizontal substitution variable: v with v/(1+v^2) = w(z).
pub fn v_horizontal(order: usize) -> PowerSeries {
    expect_series(
        catalan_inverse(&w_of_z(order)),
        "horizontal substitution v(w(z))",
    )
}

/// Determinant polynomial of the (i+1) x (i+1) tridiagonal matrix with
/// unit diagonal and off-diagonal entries -w, evaluated at the series `w`.
/// Satisfies a_i = a_{i-1} - w^2 a_{i-2}, with a_{-1} = a_0 = 1 (the empty
/// determinant convention Cramer's rule needs at the boundary). `i < -1`
/// is a usage error.
pub fn a_poly_at(i: i64, w: &PowerSeries) -> PowerSeries {
    assert!(i >= -1, "a_i is defined only for i >= -1");
    let order = w.order();
    let w2 = w.mul(w);
    let mut prev2 = PowerSeries::one(order); // a_{-1}
    let mut prev = PowerSeries::one(order); // a_0
    for _ in 1..=i {
        let cur = prev.sub(&w2.mul(&prev2));
        prev2 = prev;
        prev = cur;
    }
    if i <= -1 {
        prev2
    } else {
        prev
    }
}

/// a_i(z/2) as a z-series: the tridiagonal determinant with entries -z/2.
pub fn a_det(i: i64, order: usize) -> PowerSeries {
    a_poly_at(i, &PowerSeries::monomial(rat(1, 2), 1, order))
}

/// Closed form of a_i(z/2) in the vertical substitution variable:
/// (1 - v^{2i+4}) / ((1 - v^2)(1 + v^2)^{i+1}).
pub fn a_det_closed_form(i: i64, order: usize) -> PowerSeries {
    assert!(i >= -1);
    let v = v_vertical(order);
    let v2 = v.mul(&v);
    let num = PowerSeries::one(order).sub(&v.pow((2 * i + 4) as usize));
    let den = PowerSeries::one(order)
        .sub(&v2)
        .mul(&PowerSeries::one(order).add(&v2).pow((i + 1) as usize));
    expect_series(num.div(&den), "closed form of a_i")
}

/// Generating function (in w) of the number of n-step +-1 paths from 0
/// to l that stay inside [-k, h]. Exact nonnegative integer coefficients.
pub fn psi_two_sided(h: i64, k: i64, l: i64, order: usize) -> PowerSeries {
    assert!(h >= 0 && k >= 0, "barriers must be nonnegative");
    assert!(-k <= l && l <= h, "endpoint outside the band");
    let w = PowerSeries::identity(order);
    let num = if l >= 0 {
        w.pow(l as usize)
            .mul(&a_poly_at(h - l - 1, &w))
            .mul(&a_poly_at(k - 1, &w))
    } else {
        w.pow((-l) as usize)
            .mul(&a_poly_at(h - 1, &w))
            .mul(&a_poly_at(k + l - 1, &w))
    };
    expect_series(num.div(&a_poly_at(h + k, &w)), "two-sided path series")
}

/// The confined-path series summed over endpoints,
/// psi_h = (1 + v^2)(1 - v^{h+1})^2 / ((1 - v)^2 (1 + v^{2h+2})),
/// evaluated at any substitution series v with v(0) = 0.
pub fn psi_closed_form(h: usize, v: &PowerSeries) -> PowerSeries {
    let order = v.order();
    let one = PowerSeries::one(order);
    let vh1 = v.pow(h + 1);
    let num = one.add(&v.mul(v)).mul(&one.sub(&vh1).pow(2));
    let den = one.sub(v).pow(2).mul(&one.add(&vh1.mul(&vh1)));
    expect_series(num.div(&den), "psi_h closed form")
}

/// H_h(z): generating function of P(D_n^x <= h). Decomposition: confined
/// 1-D paths for the horizontal trace, composed at the excursion weight,
/// times the final-excursion factor.
pub fn deviation_h(h: i64, order: usize) -> PowerSeries {
    assert!(h >= 0);
    psi_closed_form(h as usize, &v_horizontal(order)).mul(&excursion_e(order))
}

/// Generating function of P(D_n^y <= h, |S_n^y| = l), by Cramer's rule on
/// the folded vertical chain: (z/2)^l a_{h-l-1} / ((1-z/2) a_{h-1} - z^2 a_{h-2}/4).
/// For h = 0 the system is the single equation (1 - z/2) psi = 1.
pub fn psi_hat(h: i64, l: i64, order: usize) -> PowerSeries {
    assert!(h >= 0, "deviation bound must be nonnegative");
    assert!(0 <= l && l <= h, "endpoint outside [0, h]");
    if h == 0 {
        let den = PowerSeries::one(order).sub(&PowerSeries::monomial(rat(1, 2), 1, order));
        return expect_series(PowerSeries::one(order).div(&den), "psi_hat(0, 0)");
    }
    let num = PowerSeries::monomial(rat(1, 2), 1, order)
        .pow(l as usize)
        .mul(&a_det(h - l - 1, order));
    let den = psi_hat_denominator(h, order);
    expect_series(num.div(&den), "psi_hat")
}

/// Determinant of the folded-chain system matrix:
/// (1 - z/2) a_{h-1} - z^2 a_{h-2} / 4.
fn psi_hat_denominator(h: i64, order: usize) -> PowerSeries {
    let one = PowerSeries::one(order);
    let half_z = PowerSeries::monomial(rat(1, 2), 1, order);
    one.sub(&half_z)
        .mul(&a_det(h - 1, order))
        .sub(&PowerSeries::monomial(rat(1, 4), 2, order).mul(&a_det(h - 2, order)))
}

/// Generating function of P(D_n^y <= h): the l-sum of psi_hat in closed
/// form, (1 + v^2)(1 - v^{h+1})(1 - v^{h+2}) / ((1 - v)^2 (1 + v^{2h+3})).
pub fn psi_hat_sum(h: i64, order: usize) -> PowerSeries {
    assert!(h >= 0);
    psi_hat_sum_in(h as usize, &v_vertical(order))
}

fn psi_hat_sum_in(h: usize, v: &PowerSeries) -> PowerSeries {
    let order = v.order();
    let one = PowerSeries::one(order);
    let vh1 = v.pow(h + 1);
    let vh2 = vh1.mul(v);
    let num = one.add(&v.mul(v)).mul(&one.sub(&vh1)).mul(&one.sub(&vh2));
    let den = one.sub(v).pow(2).mul(&one.add(&vh1.mul(&vh1).mul(v)));
    expect_series(num.div(&den), "psi_hat_sum closed form")
}

/// Generating function of E|S_n^x|: 2 G F1 / ((1-F1)^2 (1-F2)).
pub fn mean_dist_x_gf(order: usize) -> PowerSeries {
    let one = PowerSeries::one(order);
    let g = green_g(order);
    let f1 = green_f1(order);
    let f2 = green_f2(order);
    let num = g.mul(&f1).scale(&int(2));
    let den = one.sub(&f1).pow(2).mul(&one.sub(&f2));
    expect_series(num.div(&den), "mean horizontal distance GF")
}

/// Generating function of E|S_n^y|: G (1+F1)/(1-F1) * F2/(1-F2)^2.
pub fn mean_dist_y_gf(order: usize) -> PowerSeries {
    let one = PowerSeries::one(order);
    let g = green_g(order);
    let f1 = green_f1(order);
    let f2 = green_f2(order);
    let num = g.mul(&one.add(&f1)).mul(&f2);
    let den = one.sub(&f1).mul(&one.sub(&f2).pow(2));
    expect_series(num.div(&den), "mean vertical distance GF")
}

/// Generating function of E[D_n^axis], as the h-sum of 1/(1-z) - H_h.
/// Terms with h >= order vanish identically below the truncation point
/// (a deviation cannot exceed the step count), so the sum is finite, not
/// approximated.
pub fn mean_deviation_gf(axis: Axis, order: usize) -> PowerSeries {
    let one = PowerSeries::one(order);
    let geom = geometric(order);
    let mut acc = PowerSeries::zero(order);
    match axis {
        Axis::X => {
            let v = v_horizontal(order);
            let e = excursion_e(order);
            let v2 = v.mul(&v);
            let one_plus_v2 = one.add(&v2);
            let denom_base = one.sub(&v).pow(2);
            let mut vh1 = v.clone(); // v^{h+1}
            for _ in 0..=order {
                if vh1.is_zero() {
                    break;
                }
                let num = one_plus_v2.mul(&one.sub(&vh1).pow(2));
                let den = denom_base.mul(&one.add(&vh1.mul(&vh1)));
                let h_h = expect_series(num.div(&den), "H_h").mul(&e);
                acc = acc.add(&geom.sub(&h_h));
                vh1 = vh1.mul(&v);
            }
        }
        Axis::Y => {
            let v = v_vertical(order);
            let one_plus_v2 = one.add(&v.mul(&v));
            let denom_base = one.sub(&v).pow(2);
            let mut vh1 = v.clone();
            for _ in 0..=order {
                if vh1.is_zero() {
                    break;
                }
                let vh2 = vh1.mul(&v);
                let num = one_plus_v2.mul(&one.sub(&vh1)).mul(&one.sub(&vh2));
                let den = denom_base.mul(&one.add(&vh1.mul(&vh1).mul(&v)));
                let psi_hat_h = expect_series(num.div(&den), "psi_hat_sum");
                acc = acc.add(&geom.sub(&psi_hat_h));
                vh1 = vh2;
            }
        }
    }
    acc
}

/// Generating function of P(m_n^x <= h) for the one-sided horizontal
/// maximum: the k -> infinity limit of the two-barrier sum times E(z),
/// (1 + v^2)(1 - v^{h+1})/(1 - v)^2 * E(z).
pub fn span_psi_tilde(h: i64, order: usize) -> PowerSeries {
    assert!(h >= 0);
    let v = v_horizontal(order);
    let one = PowerSeries::one(order);
    let num = one.add(&v.mul(&v)).mul(&one.sub(&v.pow(h as usize + 1)));
    let den = one.sub(&v).pow(2);
    expect_series(num.div(&den), "one-sided confinement sum").mul(&excursion_e(order))
}

/// Generating function of E[m_n^x] (one-sided horizontal maximum).
/// The expected span E[M_n^x] is exactly twice each coefficient.
pub fn span_gf_x(order: usize) -> PowerSeries {
    let one = PowerSeries::one(order);
    let geom = geometric(order);
    let v = v_horizontal(order);
    let e = excursion_e(order);
    let one_plus_v2 = one.add(&v.mul(&v));
    let denom = one.sub(&v).pow(2);
    let mut acc = PowerSeries::zero(order);
    let mut vh1 = v.clone();
    for _ in 0..=order {
        if vh1.is_zero() {
            break;
        }
        let num = one_plus_v2.mul(&one.sub(&vh1));
        let psi_tilde = expect_series(num.div(&denom), "one-sided confinement sum").mul(&e);
        acc = acc.add(&geom.sub(&psi_tilde));
        vh1 = vh1.mul(&v);
    }
    acc
}

/// Generating function of P(m_n^y <= h) by direct elimination of the
/// two-barrier block system, with the lower barrier pushed to -order so
/// that it is unreachable below the truncation point. Levels run from h
/// down to -order; the coupling into level 0 from its neighbours carries
/// probability 1/4 (axis steps), every other coupling 1/2.
pub fn span_psi_hat_system(h: i64, order: usize) -> PowerSeries {
    assert!(h >= 0);
    let k = order as i64;
    let size = (h + k + 1) as usize;
    let one = PowerSeries::one(order);
    let half_z = PowerSeries::monomial(rat(1, 2), 1, order);
    let quarter_z = PowerSeries::monomial(rat(1, 4), 1, order);

    let level = |i: usize| h - i as i64;
    let diag = |i: usize| {
        if level(i) == 0 {
            one.sub(&half_z)
        } else {
            one.clone()
        }
    };
    // row for level l holds, in the column of level l', the weight
    // -z P(l' -> l); steps out of the axis carry 1/4, all others 1/2
    let row_coupling = |i_from: usize, i_to: usize| {
        if level(i_from).abs() == 1 && level(i_to) == 0 {
            quarter_z.clone()
        } else {
            half_z.clone()
        }
    };

    // Thomas elimination on the tridiagonal system
    //   diag_i x_i - sub_i x_{i-1} - sup_i x_{i+1} = rhs_i
    let mut c_prime: Vec<PowerSeries> = Vec::with_capacity(size);
    let mut d_prime: Vec<PowerSeries> = Vec::with_capacity(size);
    for i in 0..size {
        let sup = if i + 1 < size {
            row_coupling(i, i + 1)
        } else {
            PowerSeries::zero(order)
        };
        let sub = if i > 0 {
            row_coupling(i, i - 1)
        } else {
            PowerSeries::zero(order)
        };
        let rhs = if level(i) == 0 {
            one.clone()
        } else {
            PowerSeries::zero(order)
        };
        let (denom, new_rhs) = if i == 0 {
            (diag(i), rhs)
        } else {
            let denom = diag(i).sub(&sub.mul(&c_prime[i - 1]));
            let new_rhs = rhs.add(&sub.mul(&d_prime[i - 1]));
            (denom, new_rhs)
        };
        c_prime.push(expect_series(sup.div(&denom), "span system pivot"));
        d_prime.push(expect_series(new_rhs.div(&denom), "span system rhs"));
    }
    let mut sum = PowerSeries::zero(order);
    let mut x_next = PowerSeries::zero(order);
    for i in (0..size).rev() {
        let x = d_prime[i].add(&c_prime[i].mul(&x_next));
        sum = sum.add(&x);
        x_next = x;
    }
    sum
}

/// 1/(1-z) - psi_hat_h for the vertical one-sided maximum, valid for
/// h >= 2: (1+v^2)/(1-v)^2 * (1+v) v^{h+1} / (2 - (1-v) v^{2h+2}).
pub fn span_y_complement_closed(h: i64, order: usize) -> PowerSeries {
    assert!(h >= 2, "closed form is stated for h >= 2 only");
    let v = v_vertical(order);
    span_y_complement_in(h as usize, &v)
}

fn span_y_complement_in(h: usize, v: &PowerSeries) -> PowerSeries {
    let order = v.order();
    let one = PowerSeries::one(order);
    let vh1 = v.pow(h + 1);
    let num = one.add(&v.mul(v)).mul(&one.add(v)).mul(&vh1);
    let den = one
        .sub(v)
        .pow(2)
        .mul(&PowerSeries::constant(int(2), order).sub(&one.sub(v).mul(&vh1.mul(&vh1))));
    expect_series(num.div(&den), "vertical span complement")
}

/// Generating function of E[m_n^y] (one-sided vertical maximum): block
/// system solves for h in {0, 1}, the closed complement for h >= 2.
/// E[M_n^y] is exactly twice each coefficient.
pub fn span_gf_y(order: usize) -> PowerSeries {
    let geom = geometric(order);
    let mut acc = PowerSeries::zero(order);
    for h in 0..=1 {
        acc = acc.add(&geom.sub(&span_psi_hat_system(h, order)));
    }
    let v = v_vertical(order);
    let mut vh1 = v.pow(3);
    for h in 2..=order {
        if vh1.is_zero() {
            break;
        }
        acc = acc.add(&span_y_complement_in(h, &v));
        vh1 = vh1.mul(&v);
    }
    acc
}

/// Bounded tooth excursion Green function: k-step no-loop excursions on a
/// tooth ending at height l or -l, never exceeding height n in absolute
/// value: v^l (1 + v^2)(1 - v^{2n-2l+2}) / (1 - v^{2n+4}).
pub fn bounded_tooth_green(n: i64, l: i64, order: usize) -> PowerSeries {
    assert!(n >= 1 && (0..=n).contains(&l));
    let v = v_vertical(order);
    let one = PowerSeries::one(order);
    let num = v
        .pow(l as usize)
        .mul(&one.add(&v.mul(&v)))
        .mul(&one.sub(&v.pow((2 * n - 2 * l + 2) as usize)));
    let den = one.sub(&v.pow((2 * n + 4) as usize));
    expect_series(num.div(&den), "bounded tooth Green function")
}

/// Sum of the bounded tooth Green functions over l = 0..=n:
/// (1 + v^2)(1 - v^{n+1})(1 - v^{n+2}) / ((1 - v)(1 - v^{2n+4})).
pub fn bounded_tooth_green_sum(n: i64, order: usize) -> PowerSeries {
    assert!(n >= 1);
    let v = v_vertical(order);
    let one = PowerSeries::one(order);
    let num = one
        .add(&v.mul(&v))
        .mul(&one.sub(&v.pow(n as usize + 1)))
        .mul(&one.sub(&v.pow(n as usize + 2)));
    let den = one.sub(&v).mul(&one.sub(&v.pow((2 * n + 4) as usize)));
    expect_series(num.div(&den), "bounded tooth Green sum")
}

/// Theta_n(z): the k-th coefficient is P(T_n^inf > k), the probability
/// that the walk stays inside the box [-n, n]^2 through step k. Built
/// from its constituents: confined 1-D paths composed at the bounded
/// excursion weight, times the bounded final-excursion sum.
pub fn theta_gf(n: i64, order: usize) -> PowerSeries {
    assert!(n >= 1);
    let g0 = bounded_tooth_green(n, 0, order);
    let w_arg = g0.mul_z(1).scale(&rat(1, 4));
    let psi_n = psi_closed_form(n as usize, &catalan_series(order));
    let composed = expect_series(psi_n.compose(&w_arg), "psi_n at bounded excursion weight");
    composed.mul(&bounded_tooth_green_sum(n, order))
}

/// Parameters for looking a generating function up by name.
#[derive(Debug, Clone, Default)]
pub struct GfParams {
    pub k: Option<i64>,
    pub l: Option<i64>,
    pub h: Option<i64>,
    pub i: Option<i64>,
    pub radius: Option<i64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown generating function '{0}'")]
    Unknown(String),
    #[error("generating function '{name}' requires parameter --{param}")]
    MissingParam {
        name: &'static str,
        param: &'static str,
    },
    #[error("invalid parameter for '{name}': {reason}")]
    InvalidParam { name: &'static str, reason: String },
}

/// Catalog lookup used by the command-line front end.
pub fn by_name(name: &str, params: &GfParams, order: usize) -> Result<GfEntry, CatalogError> {
    let need = |p: Option<i64>, pname: &'static str, gf: &'static str| {
        p.ok_or(CatalogError::MissingParam {
            name: gf,
            param: pname,
        })
    };
    let check = |cond: bool, gf: &'static str, reason: &str| {
        if cond {
            Ok(())
        } else {
            Err(CatalogError::InvalidParam {
                name: gf,
                reason: reason.to_string(),
            })
        }
    };
    let entry = |variable: Variable, series: PowerSeries| GfEntry {
        name: name.to_string(),
        variable,
        series,
    };
    Ok(match name {
        "green" => {
            let k = need(params.k, "k", "green")?;
            let l = need(params.l, "l", "green")?;
            check(
                order >= (k.unsigned_abs() + l.unsigned_abs()) as usize,
                "green",
                "order must be at least |k| + |l|",
            )?;
            entry(Variable::Z, green(k, l, order))
        }
        "green-g" => entry(Variable::Z, green_g(order)),
        "green-f1" => entry(Variable::Z, green_f1(order)),
        "green-f2" => entry(Variable::Z, green_f2(order)),
        "excursion-e" => entry(Variable::Z, excursion_e(order)),
        "w-of-z" => entry(Variable::Z, w_of_z(order)),
        "catalan" => entry(Variable::W, catalan_series(order)),
        "a-det" => {
            let i = need(params.i, "i", "a-det")?;
            check(i >= -1, "a-det", "index must be >= -1")?;
            entry(Variable::Z, a_det(i, order))
        }
        "deviation-h" => {
            let h = need(params.h, "h", "deviation-h")?;
            check(h >= 0, "deviation-h", "barrier must be nonnegative")?;
            entry(Variable::Z, deviation_h(h, order))
        }
        "psi-hat" => {
            let h = need(params.h, "h", "psi-hat")?;
            let l = need(params.l, "l", "psi-hat")?;
            check(
                h >= 0 && (0..=h).contains(&l),
                "psi-hat",
                "need 0 <= l <= h",
            )?;
            entry(Variable::Z, psi_hat(h, l, order))
        }
        "psi-hat-sum" => {
            let h = need(params.h, "h", "psi-hat-sum")?;
            check(h >= 0, "psi-hat-sum", "barrier must be nonnegative")?;
            entry(Variable::Z, psi_hat_sum(h, order))
        }
        "psi-two-sided" => {
            let h = need(params.h, "h", "psi-two-sided")?;
            let k = need(params.k, "k", "psi-two-sided")?;
            let l = need(params.l, "l", "psi-two-sided")?;
            check(
                h >= 0 && k >= 0 && -k <= l && l <= h,
                "psi-two-sided",
                "need h, k >= 0 and -k <= l <= h",
            )?;
            entry(Variable::W, psi_two_sided(h, k, l, order))
        }
        "mean-dist-x" => entry(Variable::Z, mean_dist_x_gf(order)),
        "mean-dist-y" => entry(Variable::Z, mean_dist_y_gf(order)),
        "mean-deviation-x" => entry(Variable::Z, mean_deviation_gf(Axis::X, order)),
        "mean-deviation-y" => entry(Variable::Z, mean_deviation_gf(Axis::Y, order)),
        "span-x" => entry(Variable::Z, span_gf_x(order)),
        "span-y" => entry(Variable::Z, span_gf_y(order)),
        "theta" => {
            let r = need(params.radius, "radius", "theta")?;
            check(r >= 1, "theta", "radius must be at least 1")?;
            entry(Variable::Z, theta_gf(r, order))
        }
        other => return Err(CatalogError::Unknown(other.to_string())),
    })
}

/// Names accepted by `by_name`, for help text.
pub const CATALOG_NAMES: &[&str] = &[
    "green",
    "green-g",
    "green-f1",
    "green-f2",
    "excursion-e",
    "w-of-z",
    "catalan",
    "a-det",
    "deviation-h",
    "psi-hat",
    "psi-hat-sum",
    "psi-two-sided",
    "mean-dist-x",
    "mean-dist-y",
    "mean-deviation-x",
    "mean-deviation-y",
    "span-x",
    "span-y",
    "theta",
];
