//! Exact arithmetic over 𝔽_p, truncated Laurent series in a uniformizer,
//! and polynomials with series coefficients.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here is safe to share across threads.

mod field;
mod poly;
mod series;

pub use field::{binomial_mod_p, is_odd_prime, PrimeFieldElement};
pub use poly::SeriesPolynomial;
pub use series::{TruncatedLaurentSeries, Valuation, PREC_EXACT};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("modulus {0} is not an odd prime >= 3")]
    InvalidModulus(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("term at exponent {exp} lies at or above the precision {precision}")]
    TermBeyondPrecision { exp: i64, precision: i64 },
    #[error("series is zero to precision {0}; valuation unknown")]
    ZeroToPrecision(i64),
    #[error("precision exhausted: no terms determined below {0}")]
    PrecisionExhausted(i64),
    #[error("polynomial needs at least one coefficient")]
    EmptyPolynomial,
    #[error("leading coefficient is zero to precision; degree unknown")]
    UnknownLeadingCoefficient,
}
