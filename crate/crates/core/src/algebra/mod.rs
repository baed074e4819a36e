//! Exact arithmetic kernels.

pub mod laurent;
pub mod series;
pub mod unipoly;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use laurent::{Exponent, LaurentPoly};
pub use series::{inv_one_minus_exp, todd_coefficients, TruncSeries};
pub use unipoly::{interpolate, UniPoly};

/// Arbitrary-precision rational number used throughout.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}
