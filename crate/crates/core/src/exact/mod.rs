//! Exact arithmetic kernel: arbitrary-precision rationals, multivariate
//! polynomials over (q, p, z, u), canonically normalized rational functions,
//! and truncated power series.

mod gcd;
mod parse;
mod poly;
mod ratfun;
mod series;

pub use gcd::poly_gcd;
pub use parse::parse_rational_function;
pub use poly::{Monomial, MultiPoly, Var, NUM_VARS};
pub use ratfun::RationalFunction;
pub use series::{eps_limit_series, exp_eps, series_expand, EpsSeries, TruncatedSeries};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational scalar; reduced form with positive denominator
/// is guaranteed by construction.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
