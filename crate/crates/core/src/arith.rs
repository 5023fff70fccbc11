//! Divisor sums `σ_k(n)`, the ratio `E(n) = σ(n)/n`, perfect numbers and
//! the growth of `E(n!)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Default cap on sieve entries.
pub const DEFAULT_CAPACITY: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("table size must be at least 1")]
    EmptyTable,
    #[error("requested {requested} entries exceeds capacity {capacity}")]
    Capacity { requested: usize, capacity: usize },
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("factorial growth needs n_max >= 2, got {0}")]
    FactorialTooSmall(u32),
}

/// `σ_k(1..=max_n)`, plus `E(n)` when `k = 1`. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTable {
    k: u32,
    sigma: Vec<BigInt>,
    e_ratio: Option<Vec<BigRational>>,
}

impl SigmaTable {
    pub fn max_n(&self) -> usize {
        self.sigma.len()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `σ_k(n)` for `1 <= n <= max_n`.
    pub fn sigma(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.sigma.get(i))
    }

    /// `E(n) = σ(n)/n` in lowest terms; `None` unless `k = 1` and `n` is in range.
    pub fn e_ratio(&self, n: usize) -> Option<&BigRational> {
        let table = self.e_ratio.as_ref()?;
        n.checked_sub(1).and_then(|i| table.get(i))
    }

    pub fn sigmas(&self) -> &[BigInt] {
        &self.sigma
    }
}

pub fn build_sigma_table(max_n: usize, k: u32) -> Result<SigmaTable, ArithError> {
    build_sigma_table_with_capacity(max_n, k, DEFAULT_CAPACITY)
}

/// Divisor sieve: every `d` adds `d^k` to each of its multiples.
pub fn build_sigma_table_with_capacity(
    max_n: usize,
    k: u32,
    capacity: usize,
) -> Result<SigmaTable, ArithError> {
    if max_n == 0 {
        return Err(ArithError::EmptyTable);
    }
    if max_n > capacity {
        return Err(ArithError::Capacity {
            requested: max_n,
            capacity,
        });
    }

    let sigma: Vec<BigInt> = if k <= 1 {
        // σ_0, σ_1 < n^2 fit comfortably in u64 at any admissible capacity
        let mut acc = vec![0u64; max_n + 1];
        for d in 1..=max_n {
            let term = if k == 0 { 1 } else { d as u64 };
            for m in (d..=max_n).step_by(d) {
                acc[m] += term;
            }
        }
        acc.into_iter().skip(1).map(BigInt::from).collect()
    } else {
        let mut acc = vec![BigInt::zero(); max_n + 1];
        for d in 1..=max_n {
            let term = BigInt::from(d).pow(k);
            for m in (d..=max_n).step_by(d) {
                acc[m] += &term;
            }
        }
        acc.into_iter().skip(1).collect()
    };

    let e_ratio = (k == 1).then(|| {
        sigma
            .iter()
            .enumerate()
            .map(|(i, s)| BigRational::new(s.clone(), BigInt::from(i + 1)))
            .collect()
    });

    Ok(SigmaTable { k, sigma, e_ratio })
}

/// Prime factorization with strictly increasing primes and positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn new(factors: Vec<(BigInt, u32)>) -> Result<Self, ArithError> {
        for (i, (p, e)) in factors.iter().enumerate() {
            if *e == 0 {
                return Err(ArithError::InvalidFactorization(format!(
                    "exponent of {p} is zero"
                )));
            }
            if !is_prime(p) {
                return Err(ArithError::InvalidFactorization(format!(
                    "{p} is not prime"
                )));
            }
            if i > 0 && factors[i - 1].0 >= *p {
                return Err(ArithError::InvalidFactorization(
                    "primes must be strictly increasing".into(),
                ));
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    /// The factored integer.
    pub fn value(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e))
    }
}

/// Deterministic trial division.
pub fn is_prime(p: &BigInt) -> bool {
    if let Some(small) = p.to_u64() {
        return is_prime_u64(small);
    }
    if p <= &BigInt::one() || p.is_even() {
        return false;
    }
    let mut d = BigInt::from(3u32);
    while &d * &d <= *p {
        if (p % &d).is_zero() {
            return false;
        }
        d += 2u32;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: usize) -> Vec<usize> {
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i);
        for m in (i * i..=n).step_by(i) {
            composite[m] = true;
        }
    }
    primes
}

/// Factorization of a machine-sized integer by trial division.
pub fn factorize(mut n: u64) -> Factorization {
    assert!(n >= 1, "0 has no prime factorization");
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            factors.push((BigInt::from(d), e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((BigInt::from(n), 1));
    }
    Factorization { factors }
}

/// `σ(∏ p^e) = ∏ (p^{e+1} - 1) / (p - 1)`.
pub fn sigma_from_factorization(f: &Factorization) -> BigInt {
    f.factors.iter().fold(BigInt::one(), |acc, (p, e)| {
        let num = p.pow(e + 1) - 1u32;
        let den = p - 1u32;
        acc * (num / den)
    })
}

/// Prime factorization of `n!` by Legendre's formula.
pub fn factorial_factorization(n: u32) -> Factorization {
    let factors = primes_up_to(n as usize)
        .into_iter()
        .map(|p| {
            let p = p as u64;
            let mut e = 0u64;
            let mut pk = p;
            while pk <= n as u64 {
                e += n as u64 / pk;
                pk *= p;
            }
            (BigInt::from(p), e as u32)
        })
        .collect();
    Factorization { factors }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialGrowthRow {
    pub n: u32,
    /// `E(n!)`
    pub e_ratio: BigRational,
    /// `1 + sum_{k=2}^{n} 1/k`
    pub harmonic_bound: BigRational,
    /// strict `E(n!) > harmonic_bound`
    pub holds: bool,
}

/// Compares `E(n!)` with `1 + 1/2 + ... + 1/n` for `n = 2..=n_max`.
pub fn check_factorial_growth(n_max: u32) -> Result<Vec<FactorialGrowthRow>, ArithError> {
    if n_max < 2 {
        return Err(ArithError::FactorialTooSmall(n_max));
    }
    let mut bound = BigRational::one();
    let mut rows = Vec::with_capacity(n_max as usize - 1);
    for n in 2..=n_max {
        bound += BigRational::new(BigInt::one(), BigInt::from(n));
        let fact = factorial_factorization(n);
        let e_ratio = BigRational::new(sigma_from_factorization(&fact), fact.value());
        rows.push(FactorialGrowthRow {
            n,
            holds: e_ratio > bound,
            e_ratio,
            harmonic_bound: bound.clone(),
        });
    }
    Ok(rows)
}

/// All `n <= max_n` with `σ(n) = 2n`, ascending.
pub fn find_perfect(max_n: usize) -> Result<Vec<usize>, ArithError> {
    let table = build_sigma_table(max_n, 1)?;
    Ok(table
        .sigmas()
        .iter()
        .enumerate()
        .map(|(i, s)| (i + 1, s))
        .filter(|(n, s)| **s == BigInt::from(2 * n))
        .map(|(n, _)| n)
        .collect())
}
