//! Expected exit times from norm balls, by exact linear solves.
//!
//! The system (I - Q) t = 1 over the interior of a ball is eliminated in
//! two stages that exploit the comb's shape: every tooth is a path graph,
//! so eliminating tooth variables from the top down leaves one relation
//! t(x, 1) = alpha * t(x, 0) + beta per column, and the remaining axis
//! system is tridiagonal. Both stages are ordinary Gaussian elimination
//! with a good ordering, and both run over exact rationals or floats.

use num_traits::{One, Zero};

use crate::series::Rational;

/// Which norm defines the ball the walk must exit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    One,
    Inf,
}

/// Exact expected exit time from the radius-`radius` ball, started at the
/// origin. Cost grows quickly with the radius (rational entries lengthen
/// along the elimination); radii up to a few dozen are the intended range,
/// larger ones belong to the float solver.
pub fn exit_time_expectation(radius: i64, norm: Norm) -> Rational {
    solve::<Rational>(radius, norm)
}

/// Float variant of the same elimination, for radii where exact
/// arithmetic is too slow. Agrees with the exact solver to ~1e-12
/// relative on overlapping radii.
pub fn exit_time_expectation_f64(radius: i64, norm: Norm) -> f64 {
    solve::<f64>(radius, norm)
}

trait Scalar:
    Clone
    + Zero
    + One
    + PartialEq
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
{
    fn from_i64(n: i64) -> Self;
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Scalar for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
}

/// Tooth height above column x inside the ball.
fn tooth_height(radius: i64, norm: Norm, x: i64) -> i64 {
    match norm {
        Norm::Inf => radius,
        Norm::One => radius - x.abs(),
    }
}

/// Eliminate the tooth above one column. For a tooth of height `h` the
/// expected-time equations are
///   t_y = 1 + (t_{y+1} + t_{y-1}) / 2      for 1 <= y < h,
///   t_h = 1 + t_{h-1} / 2                  (the step above exits),
/// and sweeping from the top expresses each t_y as c_y + d_y t_{y-1}.
/// Returns (alpha, beta) with t_1 = alpha * t_0 + beta; a zero-height
/// tooth gives (0, 0), meaning a vertical step exits immediately.
fn eliminate_tooth<T: Scalar>(h: i64) -> (T, T) {
    if h == 0 {
        return (T::zero(), T::zero());
    }
    let one = T::one();
    let two = T::from_i64(2);
    let mut d = one.clone() / two.clone();
    let mut c = one.clone();
    for _ in 1..h {
        let pivot = one.clone() - d / two.clone();
        d = (one.clone() / two.clone()) / pivot.clone();
        c = (one.clone() + c / two.clone()) / pivot;
    }
    (d, c)
}

fn solve<T: Scalar>(radius: i64, norm: Norm) -> T {
    assert!(radius >= 1, "exit time needs a ball of radius at least 1");
    let one = T::one();
    let two = T::from_i64(2);
    let four = T::from_i64(4);

    // Axis system for t(x, 0), x = -radius ..= radius:
    //   (1 - alpha_x / 2) t_x - (t_{x-1} + t_{x+1}) / 4 = 1 + beta_x / 2
    // with missing neighbours (|x| = radius + 1) contributing zero.
    let size = (2 * radius + 1) as usize;
    let mut diag = Vec::with_capacity(size);
    let mut rhs = Vec::with_capacity(size);
    for i in 0..size {
        let x = i as i64 - radius;
        let (alpha, beta) = eliminate_tooth::<T>(tooth_height(radius, norm, x));
        diag.push(one.clone() - alpha / two.clone());
        rhs.push(one.clone() + beta / two.clone());
    }
    let off = T::zero() - one.clone() / four;

    // Thomas sweep.
    let mut c_prime = vec![T::zero(); size];
    let mut d_prime = vec![T::zero(); size];
    c_prime[0] = off.clone() / diag[0].clone();
    d_prime[0] = rhs[0].clone() / diag[0].clone();
    for i in 1..size {
        let denom = diag[i].clone() - off.clone() * c_prime[i - 1].clone();
        if i + 1 < size {
            c_prime[i] = off.clone() / denom.clone();
        }
        d_prime[i] = (rhs[i].clone() - off.clone() * d_prime[i - 1].clone()) / denom;
    }
    let mut t = vec![T::zero(); size];
    t[size - 1] = d_prime[size - 1].clone();
    for i in (0..size - 1).rev() {
        t[i] = d_prime[i].clone() - c_prime[i].clone() * t[i + 1].clone();
    }
    t[radius as usize].clone()
}
