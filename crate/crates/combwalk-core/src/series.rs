//! Truncated formal power series over exact rationals.
//!
//! Every generating function in this crate is a `PowerSeries`: a dense
//! coefficient vector of length `order + 1` with `BigRational` entries.
//! All arithmetic is exact; no operation ever rounds. Binary operations
//! require equal truncation orders, so a mismatch is a caller bug and
//! panics, while value-dependent failures (dividing by a series with zero
//! constant term, taking a square root of a series whose constant term is
//! not one, ...) are reported as `SeriesError` — those are the cases where
//! a mistyped formula would otherwise slip through silently.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rational = BigRational;

/// Shorthand for a small rational constant.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer constant.
pub fn int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    SingularDivision,
    #[error("sqrt requires constant term 1, found {0}")]
    SqrtConstantTerm(String),
    #[error("compose requires inner series with zero constant term")]
    ComposeConstantTerm,
    #[error("series is not divisible by z^{power}: coefficient {index} is {value}")]
    NotDivisible {
        power: usize,
        index: usize,
        value: String,
    },
}

/// A formal power series truncated at `order`: exactly `order + 1`
/// rational coefficients, constant term first.
///
/// ```
/// use combwalk_core::series::{int, PowerSeries};
///
/// let one = PowerSeries::one(6);
/// let geometric = one.div(&one.sub(&PowerSeries::identity(6))).unwrap();
/// assert_eq!(geometric.coeff(5), &int(1));
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Build from explicit coefficients. The vector length fixes the order.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// The identity series z.
    pub fn identity(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// c * z^k, truncated (the zero series if k exceeds the order).
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Self { coeffs }
    }

    /// Truncation degree N; coefficients 0..=N are known exactly.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact n-th coefficient. Panics if `n` exceeds the order: the
    /// coefficient is simply unknown past the truncation point.
    pub fn coeff(&self, n: usize) -> &Rational {
        assert!(
            n <= self.order(),
            "coefficient {} requested from a series of order {}",
            n,
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Drop coefficients above `new_order`.
    pub fn truncate(&self, new_order: usize) -> Self {
        assert!(new_order <= self.order(), "truncate cannot extend a series");
        Self {
            coeffs: self.coeffs[..=new_order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.require_same_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.require_same_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.require_same_order(rhs);
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Exact quotient: q with q * rhs == self up to truncation.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(rhs);
        if rhs.coeffs[0].is_zero() {
            return Err(SeriesError::SingularDivision);
        }
        let n = self.order();
        let mut q = vec![Rational::zero(); n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (qj, bj) in q[..k].iter().zip(rhs.coeffs[1..=k].iter().rev()) {
                if !qj.is_zero() && !bj.is_zero() {
                    acc -= qj * bj;
                }
            }
            q[k] = acc / &rhs.coeffs[0];
        }
        Ok(Self { coeffs: q })
    }

    /// Principal square root of a series with constant term 1, by the
    /// coefficient recursion from s * s == self.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut s = vec![Rational::zero(); n + 1];
        s[0] = Rational::one();
        let two = int(2);
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                if !s[j].is_zero() && !s[k - j].is_zero() {
                    acc -= &s[j] * &s[k - j];
                }
            }
            s[k] = acc / &two;
        }
        Ok(Self { coeffs: s })
    }

    /// Substitution self(inner), truncated; inner must vanish at 0.
    /// Horner evaluation: N series multiplications at order N.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(inner);
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::ComposeConstantTerm);
        }
        let n = self.order();
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Divide by z^k. The first k coefficients must be exactly zero —
    /// a nonzero residue means a formula was transcribed wrong, so it is
    /// an error, never a silent truncation. The order drops by k.
    pub fn shift_div_z(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(
            k <= self.order(),
            "cannot strip more coefficients than the order"
        );
        for (i, c) in self.coeffs.iter().take(k).enumerate() {
            if !c.is_zero() {
                return Err(SeriesError::NotDivisible {
                    power: k,
                    index: i,
                    value: c.to_string(),
                });
            }
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiply by z^k (coefficients shift up, the top k are lost).
    pub fn mul_z(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n + 1];
        if k <= n {
            coeffs[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        Self { coeffs }
    }

    /// Integer power by repeated multiplication. `pow(0)` is the one series.
    pub fn pow(&self, exp: usize) -> Self {
        let n = self.order();
        let mut acc = Self::one(n);
        for _ in 0..exp {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(self);
        }
        acc
    }

    /// Coefficients as f64, for reporting and fitting only.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().expect("rational out of f64 range"))
            .collect()
    }

    /// True if every coefficient lies in [lo, hi].
    pub fn coeffs_within(&self, lo: &Rational, hi: &Rational) -> bool {
        self.coeffs.iter().all(|c| c >= lo && c <= hi)
    }

    fn require_same_order(&self, rhs: &Self) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series order mismatch: {} vs {}",
            self.order(),
            rhs.order()
        );
    }
}

impl std::fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let lead = first;
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = if lead { c.clone() } else { c.abs() };
            match k {
                0 => write!(f, "{}", a)?,
                1 if a.is_one() => write!(f, "z")?,
                1 => write!(f, "{} z", a)?,
                _ if a.is_one() => write!(f, "z^{}", k)?,
                _ => write!(f, "{} z^{}", a, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// 1/(1-z) up to the given order.
pub fn geometric(order: usize) -> PowerSeries {
    PowerSeries::from_coeffs(vec![Rational::one(); order + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(vals: &[(i64, i64)]) -> PowerSeries {
        PowerSeries::from_coeffs(vals.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn add_cancellation_and_identity() {
        let order = 4;
        let one_plus = PowerSeries::one(order).add(&PowerSeries::identity(order));
        let one_minus = PowerSeries::one(order).sub(&PowerSeries::identity(order));
        assert_eq!(
            one_plus.add(&one_minus),
            PowerSeries::constant(int(2), order)
        );
        let f = series(&[(1, 3), (2, 5), (0, 1), (7, 2), (1, 1)]);
        assert_eq!(PowerSeries::zero(order).add(&f), f);
        let half_z = PowerSeries::monomial(rat(1, 2), 1, order);
        assert_eq!(half_z.add(&half_z), PowerSeries::identity(order));
    }

    #[test]
    fn mul_basics() {
        let order = 6;
        let one_plus = PowerSeries::one(order).add(&PowerSeries::identity(order));
        let one_minus = PowerSeries::one(order).sub(&PowerSeries::identity(order));
        let mut expect = PowerSeries::one(order);
        expect = expect.sub(&PowerSeries::monomial(int(1), 2, order));
        assert_eq!(one_plus.mul(&one_minus), expect);

        let f = series(&[(3, 7), (1, 2), (5, 1), (0, 1), (1, 6), (2, 9), (4, 1)]);
        assert_eq!(f.mul(&PowerSeries::one(order)), f);

        // (sum z^k)(1-z) telescopes to 1 below the truncation point.
        assert_eq!(geometric(order).mul(&one_minus).coeff(0), &int(1));
        for n in 1..=order {
            assert_eq!(geometric(order).mul(&one_minus).coeff(n), &int(0));
        }
    }

    #[test]
    fn div_geometric_and_roundtrip() {
        let order = 8;
        let one_minus = PowerSeries::one(order).sub(&PowerSeries::identity(order));
        let g = PowerSeries::one(order).div(&one_minus).unwrap();
        assert_eq!(g, geometric(order));

        let f = series(&[
            (2, 3),
            (1, 7),
            (0, 1),
            (5, 2),
            (1, 1),
            (0, 1),
            (3, 4),
            (1, 9),
            (2, 1),
        ]);
        assert_eq!(f.div(&f).unwrap(), PowerSeries::one(order));

        // (1 - z^2)/(1 - z) = 1 + z
        let num = PowerSeries::one(order).sub(&PowerSeries::monomial(int(1), 2, order));
        let expect = PowerSeries::one(order).add(&PowerSeries::identity(order));
        assert_eq!(num.div(&one_minus).unwrap(), expect);
    }

    #[test]
    fn div_by_zero_constant_term_fails() {
        let order = 3;
        let z = PowerSeries::identity(order);
        assert_eq!(
            PowerSeries::one(order).div(&z),
            Err(SeriesError::SingularDivision)
        );
    }

    #[test]
    fn sqrt_of_one_minus_z_squared() {
        let order = 8;
        let arg = PowerSeries::one(order).sub(&PowerSeries::monomial(int(1), 2, order));
        let s = arg.sqrt().unwrap();
        // binomial series (1-u)^(1/2): 1 - z^2/2 - z^4/8 - z^6/16 - ...
        assert_eq!(s.coeff(0), &int(1));
        assert_eq!(s.coeff(2), &rat(-1, 2));
        assert_eq!(s.coeff(4), &rat(-1, 8));
        assert_eq!(s.coeff(6), &rat(-1, 16));
        assert_eq!(s.mul(&s), arg);
    }

    #[test]
    fn sqrt_edge_cases() {
        let order = 5;
        assert_eq!(
            PowerSeries::one(order).sqrt().unwrap(),
            PowerSeries::one(order)
        );
        let one_plus = PowerSeries::one(order).add(&PowerSeries::identity(order));
        assert_eq!(one_plus.mul(&one_plus).sqrt().unwrap(), one_plus);
        let two = PowerSeries::constant(int(2), order);
        assert!(matches!(two.sqrt(), Err(SeriesError::SqrtConstantTerm(_))));
    }

    #[test]
    fn compose_basics() {
        let order = 8;
        let z2 = PowerSeries::monomial(int(1), 2, order);
        let composed = geometric(order).compose(&z2).unwrap();
        for n in 0..=order {
            let expect = if n % 2 == 0 { int(1) } else { int(0) };
            assert_eq!(composed.coeff(n), &expect);
        }

        let f = series(&[
            (1, 2),
            (3, 1),
            (0, 1),
            (2, 7),
            (1, 1),
            (0, 1),
            (5, 3),
            (1, 4),
            (2, 1),
        ]);
        assert_eq!(f.compose(&PowerSeries::identity(order)).unwrap(), f);

        let one = PowerSeries::one(order);
        assert_eq!(f.compose(&one), Err(SeriesError::ComposeConstantTerm));
    }

    #[test]
    fn shift_div_z_basics() {
        let order = 6;
        let z2 = PowerSeries::monomial(int(1), 2, order);
        assert_eq!(z2.shift_div_z(2).unwrap(), PowerSeries::one(order - 2));
        let z = PowerSeries::identity(order);
        assert_eq!(z.shift_div_z(1).unwrap(), PowerSeries::one(order - 1));
        let err = geometric(order).shift_div_z(1);
        assert!(matches!(err, Err(SeriesError::NotDivisible { .. })));
    }

    #[test]
    fn coeff_extraction() {
        let order = 6;
        assert_eq!(geometric(order).coeff(5), &int(1));
        let z3 = PowerSeries::monomial(int(1), 3, order);
        assert_eq!(z3.coeff(3), &int(1));
        assert_eq!(z3.coeff(4), &int(0));
    }

    #[test]
    fn display_formatting() {
        let s = series(&[(-1, 2), (0, 1), (3, 1), (0, 1), (-1, 4)]);
        assert_eq!(s.to_string(), "-1/2 + 3 z^2 - 1/4 z^4 + O(z^5)");
        assert_eq!(PowerSeries::zero(2).to_string(), "0 + O(z^3)");
        assert_eq!(PowerSeries::identity(3).to_string(), "z + O(z^4)");
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn order_mismatch_panics() {
        let _ = PowerSeries::one(3).add(&PowerSeries::one(4));
    }

    #[test]
    #[should_panic(expected = "coefficient 7 requested")]
    fn coeff_out_of_range_panics() {
        let _ = PowerSeries::one(6).coeff(7);
    }
}
