//! Missing integers in integer partitions and overpartitions.
//!
//! A *missing integer* of a partition is a positive integer below the largest
//! part that does not occur as a part. This crate provides
//!
//! - [`qseries`]: exact truncated power series in `q` and polynomials in a
//!   marker variable with series coefficients, plus q-Pochhammer products;
//! - [`partitions`]: exhaustive enumeration of partitions and overpartitions
//!   together with the statistics (missing count, mex, maex, multiplicity
//!   counts) that serve as a brute-force oracle;
//! - [`gfs`]: every generating function for these statistics as a
//!   truncated-series computation;
//! - [`verify`]: congruence checks, bias scans and series-versus-enumeration
//!   cross checks producing a serializable [`verify::VerdictReport`];
//! - [`cli`]: the batch command-line front end.
//!
//! Series and bivariate tables are generic over the coefficient ring
//! ([`qseries::Coeff`]); the aliases below fix the arbitrary-precision
//! integer instantiation used everywhere the numbers get large.

pub mod cli;
pub mod error;
pub mod gfs;
pub mod partitions;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
pub use gfs::{Family, GfSpec};
pub use partitions::{Overpartition, Partition};
pub use qseries::{Coeff, Monomial, QSeries, WqPoly};

/// Exact integer series, the default for every computation in this crate.
pub type Series = QSeries<num_bigint::BigInt>;
/// Marker-variable polynomial over exact integer series.
pub type BiSeries = WqPoly<num_bigint::BigInt>;
/// Exact integer monomial `c·q^s`.
pub type IntMonomial = Monomial<num_bigint::BigInt>;
/// Fixed-width series; fine for small truncation orders, overflows quickly.
pub type Series64 = QSeries<i64>;
/// Floating-point series, for quick numerical exploration only.
pub type SeriesF64 = QSeries<f64>;
