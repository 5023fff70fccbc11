//! Exact divisor sums and the generating function of `σ(n)/n`, three routes
//! to Ramanujan's τ, and certified bounds on `Σ ln(1 - x^n)`.

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod series;
pub mod tau;

pub use arith::{build_sigma_table, find_perfect, Factorization, SigmaTable};
pub use bounds::{certify_sandwich, BoundCertificate, CurvePoint};
pub use series::{log_one_minus_xn, TruncSeries};
pub use tau::{check_deligne, tau_exp, tau_pentagonal, tau_product, Route, TauTable};
