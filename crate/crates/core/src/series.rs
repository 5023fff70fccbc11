//! Truncated formal power series with exact rational coefficients.
//!
//! A [`TruncSeries`] of order `N` stores `c_0..=c_N` and represents a power
//! series modulo `x^{N+1}`. Binary operations require both operands to have
//! the same order; they never re-truncate silently.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("exponential requires a zero constant term, found {0}")]
    NonzeroConstantTerm(BigRational),
    #[error("coefficient index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("a series needs at least one coefficient")]
    Empty,
}

/// Power series truncated after `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Builds a series from `c_0..=c_N`; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Self { coeffs })
    }

    /// Integer coefficients, zero-padded (or truncated) to `order`.
    pub fn from_integers(order: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = BigRational::from_integer(BigInt::from(c));
        }
        s
    }

    /// `coeff * x^power`, or the zero series if `power > order`.
    pub fn monomial(order: usize, power: usize, coeff: BigRational) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = coeff;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> Result<&BigRational, SeriesError> {
        self.coeffs.get(index).ok_or(SeriesError::IndexOutOfRange {
            index,
            order: self.order(),
        })
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Index of the first non-integral coefficient, if any.
    pub fn first_non_integral(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_integer())
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Truncated Cauchy product. Integral operands take a pure `BigInt` path.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        if self.is_integral() && other.is_integral() {
            let a: Vec<BigInt> = self.coeffs.iter().map(|c| c.to_integer()).collect();
            let b: Vec<BigInt> = other.coeffs.iter().map(|c| c.to_integer()).collect();
            let out = convolve(&a, &b, self.order());
            return Ok(Self {
                coeffs: out.into_iter().map(BigRational::from_integer).collect(),
            });
        }
        Ok(Self {
            coeffs: convolve(&self.coeffs, &other.coeffs, self.order()),
        })
    }

    /// `self^e` by binary exponentiation; `e = 0` gives the unit series.
    pub fn pow_int(&self, mut e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("orders agree");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("orders agree");
            }
        }
        result
    }

    /// Multiplies in place by `(1 - x^n)` using one sparse pass.
    pub fn mul_one_minus_xn(&mut self, n: usize) {
        assert!(n >= 1, "factor (1 - x^0) is the zero series");
        let order = self.order();
        if n > order {
            return;
        }
        for i in (n..=order).rev() {
            if self.coeffs[i - n].is_zero() {
                continue;
            }
            let shifted = self.coeffs[i - n].clone();
            self.coeffs[i] -= shifted;
        }
    }

    /// `exp(self)` via `n h_n = sum_{k=1}^{n} k g_k h_{n-k}`, `h_0 = 1`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm(self.coeffs[0].clone()));
        }
        let order = self.order();
        // k * g_k, keeping only the nonzero entries
        let weighted: Vec<(usize, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, g)| !g.is_zero())
            .map(|(k, g)| (k, g * BigRational::from_integer(BigInt::from(k))))
            .collect();

        let mut h = Vec::with_capacity(order + 1);
        h.push(BigRational::one());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for (k, kg) in weighted.iter().take_while(|(k, _)| *k <= n) {
                let prev = &h[n - k];
                if !prev.is_zero() {
                    acc += kg * prev;
                }
            }
            h.push(acc / BigRational::from_integer(BigInt::from(n)));
        }
        Ok(Self { coeffs: h })
    }

    /// Highest index with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

fn convolve<T>(a: &[T], b: &[T], order: usize) -> Vec<T>
where
    T: Clone + Zero,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
    for<'x> T: std::ops::AddAssign<T>,
{
    let mut out = vec![T::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `ln(1 - x^n) = -sum_{m >= 1} x^{nm} / m`, truncated at `order`.
pub fn log_one_minus_xn(n: usize, order: usize) -> TruncSeries {
    assert!(n >= 1, "ln(1 - x^0) is undefined");
    let mut s = TruncSeries::zero(order);
    for (m, idx) in (1..).zip((n..=order).step_by(n)) {
        s.coeffs[idx] = -BigRational::new(BigInt::one(), BigInt::from(m));
    }
    s
}

/// `-Σ_{n=1}^{order} ln(1 - x^n)` truncated at `order`; its coefficient of
/// `x^m` is `σ(m)/m`.
pub fn neg_log_euler_product(order: usize) -> TruncSeries {
    let mut acc = TruncSeries::zero(order);
    for n in 1..=order {
        for (m, idx) in (1..).zip((n..=order).step_by(n)) {
            acc.coeffs[idx] += BigRational::new(BigInt::one(), BigInt::from(m));
        }
    }
    acc
}
