//! Ramanujan's τ(n) from `x ∏(1 - x^n)^24 = Σ τ(n) x^n`, computed three ways:
//!
//! - [`tau_product`]: the product expanded factor by factor
//! - [`tau_exp`]: `x exp(-24 Σ E(n) x^n)` with exact rational intermediates
//! - [`tau_pentagonal`]: Euler's pentagonal series for `∏(1 - x^n)`, then the 24th power
//!
//! All three must agree entry for entry.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{primes_up_to, SigmaTable};
use crate::series::{SeriesError, TruncSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Product,
    Exp,
    Pentagonal,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Product, Route::Exp, Route::Pentagonal];

    pub fn name(self) -> &'static str {
        match self {
            Route::Product => "product",
            Route::Exp => "exp",
            Route::Pentagonal => "pentagonal",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown route {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TauError {
    #[error("max_n must be at least 1")]
    ZeroMaxN,
    #[error("{route} route: coefficient of x^{index} is not an integer ({value})")]
    Integrality {
        route: Route,
        index: usize,
        value: BigRational,
    },
    #[error("sigma table covers n <= {have} but {need} is required")]
    SigmaTooSmall { need: usize, have: usize },
    #[error("sigma table must hold σ_1, got σ_{0}")]
    WrongSigmaPower(u32),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `τ(1..=max_n)` and the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauTable {
    route: Route,
    tau: Vec<BigInt>,
}

impl TauTable {
    pub fn route(&self) -> Route {
        self.route
    }

    pub fn max_n(&self) -> usize {
        self.tau.len()
    }

    /// `τ(n)` for `1 <= n <= max_n`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.tau.get(i))
    }

    pub fn values(&self) -> &[BigInt] {
        &self.tau
    }

    /// Rebuilds a table from stored values, e.g. a cache file.
    pub fn from_values(route: Route, tau: Vec<BigInt>) -> Self {
        Self { route, tau }
    }

    /// Same values, ignoring which route produced them.
    pub fn same_values(&self, other: &TauTable) -> bool {
        self.tau == other.tau
    }
}

/// Multiplication by the leading `x`: coefficient `i` of `series` becomes `τ(i + 1)`.
fn shift_into_table(route: Route, series: &TruncSeries) -> Result<TauTable, TauError> {
    if let Some(index) = series.first_non_integral() {
        return Err(TauError::Integrality {
            route,
            index: index + 1,
            value: series.coeffs()[index].clone(),
        });
    }
    Ok(TauTable {
        route,
        tau: series.coeffs().iter().map(|c| c.to_integer()).collect(),
    })
}

fn series_order(max_n: usize) -> Result<usize, TauError> {
    max_n.checked_sub(1).ok_or(TauError::ZeroMaxN)
}

pub fn tau_product(max_n: usize) -> Result<TauTable, TauError> {
    let order = series_order(max_n)?;
    let mut euler = TruncSeries::one(order);
    for n in 1..=order {
        euler.mul_one_minus_xn(n);
    }
    shift_into_table(Route::Product, &euler.pow_int(24))
}

pub fn tau_exp(max_n: usize, sigma: &SigmaTable) -> Result<TauTable, TauError> {
    let order = series_order(max_n)?;
    if sigma.k() != 1 {
        return Err(TauError::WrongSigmaPower(sigma.k()));
    }
    if sigma.max_n() < order {
        return Err(TauError::SigmaTooSmall {
            need: order,
            have: sigma.max_n(),
        });
    }
    let minus_24 = BigRational::from_integer(BigInt::from(-24));
    let mut g = vec![BigRational::zero(); order + 1];
    for (n, slot) in g.iter_mut().enumerate().skip(1) {
        *slot = sigma.e_ratio(n).expect("covered by the size check") * &minus_24;
    }
    let h = TruncSeries::from_coeffs(g)?.exp()?;
    shift_into_table(Route::Exp, &h)
}

/// `∏_{n>=1}(1 - x^n) = Σ_k (-1)^k x^{k(3k-1)/2}` over all integers `k`.
pub fn pentagonal_series(order: usize) -> TruncSeries {
    let mut coeffs = vec![0i64; order + 1];
    coeffs[0] = 1;
    for k in 1usize.. {
        let lo = k * (3 * k - 1) / 2;
        if lo > order {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs[lo] = sign;
        let hi = k * (3 * k + 1) / 2;
        if hi <= order {
            coeffs[hi] = sign;
        }
    }
    TruncSeries::from_integers(order, &coeffs)
}

pub fn tau_pentagonal(max_n: usize) -> Result<TauTable, TauError> {
    let order = series_order(max_n)?;
    shift_into_table(Route::Pentagonal, &pentagonal_series(order).pow_int(24))
}

/// Runs the three routes on separate threads, returned in [`Route::ALL`] order.
pub fn tau_all_routes(max_n: usize, sigma: &SigmaTable) -> [Result<TauTable, TauError>; 3] {
    std::thread::scope(|s| {
        let product = s.spawn(|| tau_product(max_n));
        let exp = s.spawn(|| tau_exp(max_n, sigma));
        let pentagonal = tau_pentagonal(max_n);
        [
            product.join().expect("product route panicked"),
            exp.join().expect("exp route panicked"),
            pentagonal,
        ]
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeligneRow {
    pub p: usize,
    pub tau: BigInt,
    pub satisfied: bool,
    /// `τ(p)^2 / (4 p^11)`
    pub margin: BigRational,
}

/// Checks `τ(p)^2 <= 4 p^11` for every prime `p <= max_n`.
pub fn check_deligne(table: &TauTable) -> Vec<DeligneRow> {
    primes_up_to(table.max_n())
        .into_iter()
        .map(|p| {
            let tau = table.get(p).expect("prime within table").clone();
            let lhs = &tau * &tau;
            let rhs = BigInt::from(p).pow(11) * 4u32;
            DeligneRow {
                p,
                satisfied: lhs <= rhs,
                margin: BigRational::new(lhs, rhs),
                tau,
            }
        })
        .collect()
}
