//! Certified checks of `ζ(2)/ln x < f(x) < x/(x - 1)` on `0 < x < 1`, where
//! `f(x) = Σ_{n>=1} ln(1 - x^n)`.
//!
//! A partial sum over `n <= N` over-estimates `f` (every term is negative),
//! and the discarded tail is bounded by
//! `Σ_{n>N} |ln(1 - x^n)| <= x^{N+1} / ((1 - x)(1 - x^{N+1}))`,
//! so `f(x) ∈ [f_N - T, f_N]`.

use std::sync::OnceLock;

use thiserror::Error;

pub const DEFAULT_EPSILON: f64 = 1e-9;
pub const DEFAULT_N_CAP: usize = 1 << 20;
pub const INITIAL_TERMS: usize = 16;
pub const DEFAULT_TERM_COUNTS: [usize; 2] = [10, 20];

const ZETA2_TERMS: u32 = 1_000_000;

/// Relative inflation of the tail bound; covers rounding in `powi` and the division.
const TAIL_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("x = {0} is outside (0, 1)")]
    Domain(f64),
    #[error("term count must be positive")]
    ZeroTerms,
    #[error("epsilon must be positive and finite, got {0}")]
    Epsilon(f64),
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("quadrature needs at least 100 points, got {0}")]
    TooFewPoints(usize),
}

fn check_x(x: f64) -> Result<(), BoundsError> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(BoundsError::Domain(x))
    }
}

/// `ζ(2)` as `Σ_{n<=10^6} 1/n^2 + 10^{-6}`, summed smallest term first.
pub fn zeta2() -> f64 {
    static ZETA2: OnceLock<f64> = OnceLock::new();
    *ZETA2.get_or_init(|| {
        let head: f64 = (1..=ZETA2_TERMS)
            .rev()
            .map(|n| {
                let n = n as f64;
                1.0 / (n * n)
            })
            .sum();
        head + 1.0 / ZETA2_TERMS as f64
    })
}

/// `ζ(2) / ln x`.
pub fn lower_bound(x: f64) -> Result<f64, BoundsError> {
    check_x(x)?;
    Ok(zeta2() / x.ln())
}

/// `x / (x - 1)`.
pub fn upper_bound(x: f64) -> Result<f64, BoundsError> {
    check_x(x)?;
    Ok(x / (x - 1.0))
}

/// `Σ_{n=1}^{n_terms} ln(1 - x^n)`, accumulated from the smallest term up.
pub fn partial_sum_f(x: f64, n_terms: usize) -> Result<f64, BoundsError> {
    check_x(x)?;
    if n_terms == 0 {
        return Err(BoundsError::ZeroTerms);
    }
    Ok((1..=n_terms)
        .rev()
        .map(|n| (-x.powi(n as i32)).ln_1p())
        .sum())
}

/// Upper bound on `Σ_{n>n_terms} |ln(1 - x^n)|`, from `|ln(1 - y)| <= y/(1 - y)`.
///
/// The bound is first-order tight when `x^{n_terms}` is tiny, so the
/// floating-point result is nudged up by [`TAIL_SLACK`] to stay an upper bound.
pub fn tail_bound(x: f64, n_terms: usize) -> Result<f64, BoundsError> {
    check_x(x)?;
    // subnormal powers carry no relative accuracy; bound them by the smallest normal
    let lead = x.powi(n_terms as i32 + 1).max(f64::MIN_POSITIVE);
    Ok(lead / ((1.0 - x) * (1.0 - lead)) * (1.0 + TAIL_SLACK))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCertificate {
    pub x: f64,
    pub terms_used: usize,
    pub f_partial: f64,
    pub tail_bound: f64,
    pub lower: f64,
    pub upper: f64,
    pub certified: bool,
}

fn sandwich_holds(lower: f64, f_partial: f64, tail: f64, upper: f64, epsilon: f64) -> bool {
    lower + epsilon < f_partial - tail && f_partial + epsilon < upper
}

/// Doubles the term count from [`INITIAL_TERMS`] until both strict inequalities
/// hold with margin `epsilon`, or the count would exceed `n_cap`.
pub fn certify_sandwich(
    x: f64,
    epsilon: f64,
    n_cap: usize,
) -> Result<BoundCertificate, BoundsError> {
    check_x(x)?;
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(BoundsError::Epsilon(epsilon));
    }
    if n_cap == 0 {
        return Err(BoundsError::ZeroTerms);
    }
    let lower = lower_bound(x)?;
    let upper = upper_bound(x)?;

    let mut n = INITIAL_TERMS.min(n_cap);
    loop {
        let f_partial = partial_sum_f(x, n)?;
        let tail = tail_bound(x, n)?;
        let certified = sandwich_holds(lower, f_partial, tail, upper, epsilon);
        if certified || n >= n_cap {
            return Ok(BoundCertificate {
                x,
                terms_used: n,
                f_partial,
                tail_bound: tail,
                lower,
                upper,
                certified,
            });
        }
        n = (n * 2).min(n_cap);
    }
}

/// `count` points `start + i * step`, with `count` inferred from `stop`.
pub fn grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, BoundsError> {
    if step.is_nan() || step <= 0.0 || stop < start {
        return Err(BoundsError::Grid(format!("{start}:{stop}:{step}")));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    let points: Vec<f64> = (0..count).map(|i| start + i as f64 * step).collect();
    for &x in &points {
        check_x(x)?;
    }
    Ok(points)
}

/// Evenly spaced points from `x_min` to `x_max` inclusive.
pub fn linspace(x_min: f64, x_max: f64, samples: usize) -> Result<Vec<f64>, BoundsError> {
    check_x(x_min)?;
    check_x(x_max)?;
    if x_min >= x_max || samples < 2 {
        return Err(BoundsError::Grid(format!(
            "need x_min < x_max and samples >= 2, got {x_min}, {x_max}, {samples}"
        )));
    }
    let step = (x_max - x_min) / (samples - 1) as f64;
    Ok((0..samples)
        .map(|i| {
            if i == samples - 1 {
                x_max
            } else {
                x_min + i as f64 * step
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub x: f64,
    /// `(term count, partial sum)` in the requested order.
    pub partials: Vec<(usize, f64)>,
    pub lower: f64,
    pub upper: f64,
}

impl CurvePoint {
    pub fn partial(&self, terms: usize) -> Option<f64> {
        self.partials
            .iter()
            .find(|(k, _)| *k == terms)
            .map(|(_, v)| *v)
    }
}

/// Partial sums for each term count plus both bound curves, on an even grid.
pub fn emit_curve(
    x_min: f64,
    x_max: f64,
    samples: usize,
    term_counts: &[usize],
) -> Result<Vec<CurvePoint>, BoundsError> {
    if term_counts.is_empty() || term_counts.contains(&0) {
        return Err(BoundsError::ZeroTerms);
    }
    linspace(x_min, x_max, samples)?
        .into_iter()
        .map(|x| {
            let partials = term_counts
                .iter()
                .map(|&k| partial_sum_f(x, k).map(|v| (k, v)))
                .collect::<Result<_, _>>()?;
            Ok(CurvePoint {
                x,
                partials,
                lower: lower_bound(x)?,
                upper: upper_bound(x)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralCheck {
    pub value: f64,
    pub target: f64,
    pub abs_err: f64,
}

/// `ln(1 - u) / u - ln(1 - u)`, which is bounded on `(0, 1)`.
fn regular_part(u: f64) -> f64 {
    if u < 1e-8 {
        // ln(1 - u)(1 - u)/u = -1 + u/2 + O(u^2)
        return -1.0 + 0.5 * u;
    }
    (-u).ln_1p() * (1.0 - u) / u
}

/// `∫_0^1 ln(1 - u)/u du`, the substitution `u = e^y` of `∫_{-∞}^0 ln(1 - e^y) dy`,
/// against `-π²/6`.
///
/// The logarithmic singularity at `u = 1` is removed analytically
/// (`∫_0^1 ln(1 - u) du = -1`); the bounded remainder uses the composite
/// midpoint rule.
pub fn verify_integral_identity(quadrature_points: usize) -> Result<IntegralCheck, BoundsError> {
    if quadrature_points < 100 {
        return Err(BoundsError::TooFewPoints(quadrature_points));
    }
    let h = 1.0 / quadrature_points as f64;
    let remainder: f64 = (0..quadrature_points)
        .rev()
        .map(|i| regular_part((i as f64 + 0.5) * h))
        .sum::<f64>()
        * h;
    let value = remainder - 1.0;
    let target = -zeta2();
    Ok(IntegralCheck {
        value,
        target,
        abs_err: (value - target).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Kahan-compensated direct sum, used as a higher-accuracy reference.
    fn compensated(terms: impl Iterator<Item = f64>) -> f64 {
        let (mut sum, mut carry) = (0.0f64, 0.0f64);
        for t in terms {
            let y = t - carry;
            let s = sum + y;
            carry = (s - sum) - y;
            sum = s;
        }
        sum
    }

    fn explicit_tail(x: f64, from: usize, to: usize) -> f64 {
        compensated((from..=to).rev().map(|n| -(-x.powi(n as i32)).ln_1p()))
    }

    #[test]
    fn zeta2_is_close_to_pi_squared_over_six() {
        let exact = std::f64::consts::PI.powi(2) / 6.0;
        assert!((zeta2() - exact).abs() < 1e-12, "{}", zeta2() - exact);
    }

    #[test]
    fn partial_sum_examples() {
        assert!((partial_sum_f(0.5, 1).unwrap() - 0.5f64.ln()).abs() < 1e-15);
        let f20 = partial_sum_f(0.5, 20).unwrap();
        let reference = compensated((1..=20).map(|n| (-0.5f64.powi(n)).ln_1p()));
        assert!((f20 - reference).abs() < 1e-14);
        // 40-digit mpmath evaluation of the same 20 terms
        assert!((f20 - (-1.242_061_141_137_947)).abs() < 1e-14);
        assert!(partial_sum_f(1e-12, 50).unwrap().abs() < 1e-11);
    }

    #[test]
    fn domain_errors() {
        for bad in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
            assert!(partial_sum_f(bad, 3).is_err());
            assert!(tail_bound(bad, 3).is_err());
            assert!(certify_sandwich(bad, 1e-9, 100).is_err());
        }
        assert_eq!(partial_sum_f(0.5, 0), Err(BoundsError::ZeroTerms));
        assert!(certify_sandwich(0.5, 0.0, 100).is_err());
        assert!(emit_curve(0.1, 0.9, 1, &[10]).is_err());
        assert!(emit_curve(0.9, 0.1, 5, &[10]).is_err());
        assert_eq!(
            verify_integral_identity(99),
            Err(BoundsError::TooFewPoints(99))
        );
    }

    #[test]
    fn tail_bound_examples() {
        let t = tail_bound(0.5, 10).unwrap();
        let formula = 0.5f64.powi(11) / (0.5 * (1.0 - 0.5f64.powi(11)));
        assert!(t >= formula && t - formula < 1e-15);
        assert!(t > 9.7e-4 && t < 9.8e-4);
        assert!(t >= explicit_tail(0.5, 11, 1010));

        assert!(tail_bound(0.9, 10).unwrap() >= explicit_tail(0.9, 11, 10_000));
        assert!(tail_bound(0.3, 2000).unwrap() < 1e-300);
        assert!(tail_bound(0.9, 400).unwrap() < 1e-16);
    }

    #[test]
    fn tail_bound_dominates_long_explicit_tails() {
        for &x in &[0.01, 0.1, 0.5, 0.8, 0.95, 0.99] {
            for &n in &[1usize, 5, 16, 100, 1000] {
                let t = tail_bound(x, n).unwrap();
                assert!(t >= explicit_tail(x, n + 1, 100_000), "x={x} n={n}");
            }
        }
    }

    #[test]
    fn certificate_examples() {
        let c = certify_sandwich(0.5, DEFAULT_EPSILON, DEFAULT_N_CAP).unwrap();
        assert!(c.certified);
        assert_eq!(c.terms_used, 16);
        assert!((c.lower - (-2.3731)).abs() < 1e-4);
        assert_eq!(c.upper, -1.0);
        assert!(c.lower < c.f_partial - c.tail_bound && c.f_partial < c.upper);

        let c = certify_sandwich(0.9, DEFAULT_EPSILON, DEFAULT_N_CAP).unwrap();
        assert!(c.certified);
        assert!((c.upper + 9.0).abs() < 1e-14);

        let c = certify_sandwich(0.01, DEFAULT_EPSILON, DEFAULT_N_CAP).unwrap();
        assert!(c.certified);
        assert_eq!(c.terms_used, 16);
        assert!((c.lower - (-0.3572)).abs() < 1e-4);
        assert!((c.upper - (-0.010101)).abs() < 1e-6);
        assert!((c.f_partial - (-0.01015)).abs() < 1e-5);
    }

    #[test]
    fn cap_exhaustion_is_reported_not_hidden() {
        // at x = 0.99 four terms stay far above x/(x-1) = -99
        let c = certify_sandwich(0.99, DEFAULT_EPSILON, 4).unwrap();
        assert!(!c.certified);
        assert_eq!(c.terms_used, 4);
    }

    #[test]
    fn both_bounds_are_negative() {
        for i in 1..100 {
            let x = i as f64 / 100.0;
            assert!(lower_bound(x).unwrap() < 0.0);
            assert!(upper_bound(x).unwrap() < 0.0);
        }
    }

    #[test]
    fn grid_shapes() {
        let g = grid(0.01, 0.99, 0.01).unwrap();
        assert_eq!(g.len(), 99);
        assert!((g[98] - 0.99).abs() < 1e-12);
        assert!(grid(0.5, 1.0, 0.25).is_err());
        assert!(grid(0.5, 0.4, 0.1).is_err());
        let l = linspace(0.1, 0.9, 5).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l[4], 0.9);
    }

    #[test]
    fn curve_examples() {
        let rows = emit_curve(0.1, 0.9, 2, &[10]).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].x, 0.1);
        assert_eq!(rows[1].x, 0.9);
        assert_eq!(rows[1].partial(10), Some(partial_sum_f(0.9, 10).unwrap()));
        assert_eq!(rows[1].partial(20), None);

        let rows = emit_curve(0.05, 0.99, 95, &DEFAULT_TERM_COUNTS).unwrap();
        assert!(rows.iter().any(|p| p.partial(10).unwrap() > p.upper));
        for p in &rows {
            assert!(p.partial(20).unwrap() <= p.partial(10).unwrap());
            assert!(p.lower < p.partial(20).unwrap());
        }
    }

    #[test]
    fn integral_identity() {
        let check = verify_integral_identity(10_000).unwrap();
        assert!((check.target - (-1.6449341)).abs() < 1e-7);
        assert!(check.abs_err < 1e-6, "{}", check.abs_err);

        let mut errors = Vec::new();
        let mut points = 100;
        while points <= 12_800 {
            errors.push(verify_integral_identity(points).unwrap().abs_err);
            points *= 2;
        }
        assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    }

    proptest! {
        #[test]
        fn partial_sums_strictly_decrease(x in 0.05f64..0.99, n in 1usize..200) {
            // below this the added term is lost to rounding
            prop_assume!(x.powi(n as i32 + 1) > 1e-12);
            prop_assert!(partial_sum_f(x, n + 1).unwrap() < partial_sum_f(x, n).unwrap());
        }

        #[test]
        fn tail_bound_is_valid(x in 0.001f64..0.995, n in 1usize..500) {
            let t = tail_bound(x, n).unwrap();
            prop_assert!(t >= explicit_tail(x, n + 1, 20_000));
        }
    }
}
