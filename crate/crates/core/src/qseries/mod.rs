//! Truncated power series in `q`, polynomials in a marker variable with series
//! coefficients, and the q-Pochhammer constructors built on them.

mod bivariate;
mod products;
mod series;

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, NumAssignRef, NumRef};

pub use bivariate::WqPoly;
pub use products::{
    geometric_tail, pochhammer_fin, pochhammer_fin_step, pochhammer_inf, pochhammer_inf_step, theta_alternating_squares,
};
pub use series::QSeries;

/// Coefficient ring for series.
///
/// Any commutative ring with by-reference arithmetic qualifies. The intended
/// instantiation is `BigInt`; `i64`/`i128` work for small orders and `f64` for
/// rough exploration.
pub trait Coeff: NumRef + NumAssignRef + Neg<Output = Self> + FromPrimitive + Clone + Debug + Send + Sync {}

impl<T> Coeff for T where T: NumRef + NumAssignRef + Neg<Output = T> + FromPrimitive + Clone + Debug + Send + Sync {}

pub(crate) fn from_i64<T: Coeff>(v: i64) -> T {
    T::from_i64(v).expect("coefficient ring cannot represent a small integer")
}

/// The monomial `c·q^s`, used as the `a` argument of `(a;q)_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial<T> {
    pub coeff: T,
    pub exponent: usize,
}

impl<T: Coeff> Monomial<T> {
    pub fn new(coeff: T, exponent: usize) -> Self {
        Monomial { coeff, exponent }
    }

    /// `c·q^s` from a machine integer, e.g. `Monomial::int(-2, 1)` is `-2q`.
    pub fn int(coeff: i64, exponent: usize) -> Self {
        Monomial {
            coeff: from_i64(coeff),
            exponent,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Product of two monomials.
    pub fn times(&self, other: &Self) -> Self {
        Monomial {
            coeff: self.coeff.clone() * &other.coeff,
            exponent: self.exponent + other.exponent,
        }
    }

    pub fn to_series(&self, order: usize) -> QSeries<T> {
        QSeries::monomial(self.coeff.clone(), self.exponent, order)
    }
}
