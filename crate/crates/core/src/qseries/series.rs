use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::{from_i64, Coeff};

/// A power series in `q` truncated after `q^N`.
///
/// Always holds exactly `N + 1` coefficients. Binary operations require both
/// operands to share the same truncation order; the `try_*` methods report a
/// mismatch as an error while the operator impls panic on it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> QSeries<T> {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(T::one(), 0, order)
    }

    /// `c·q^s`, which is zero if `s > order`.
    pub fn monomial(c: T, s: usize, order: usize) -> Self {
        let mut out = Self::zero(order);
        if s <= order {
            out.coeffs[s] = c;
        }
        out
    }

    /// Builds a series from leading coefficients; missing entries are zero and
    /// entries past `order` are dropped.
    pub fn from_coeffs<I: IntoIterator<Item = T>>(order: usize, coeffs: I) -> Self {
        let mut out = Self::zero(order);
        for (slot, c) in out.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        out
    }

    pub fn from_i64s(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| from_i64(c)))
    }

    /// The truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics if `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    /// Cauchy product truncated at the shared order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += a.clone() * b;
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Multiplies by `q^k`, dropping what falls past the truncation order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        if k <= order {
            out.coeffs[k..].clone_from_slice(&self.coeffs[..=order - k]);
        }
        out
    }

    /// Re-truncates at a new order, padding with zeros when it grows.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    /// In place: `self *= 1 - c·q^d`.
    pub fn mul_binomial(&mut self, c: &T, d: usize) {
        if c.is_zero() {
            return;
        }
        if d == 0 {
            let f = T::one() - c.clone();
            for a in &mut self.coeffs {
                *a *= &f;
            }
            return;
        }
        for n in (d..self.coeffs.len()).rev() {
            let t = self.coeffs[n - d].clone() * c;
            self.coeffs[n] -= t;
        }
    }

    /// In place: `self /= 1 - c·q^d` for `d >= 1`, i.e. multiplication by the
    /// geometric series `1 + c q^d + c^2 q^{2d} + ...`.
    pub fn div_binomial(&mut self, c: &T, d: usize) {
        assert!(d >= 1, "division by a binomial with constant term 1 - c");
        if c.is_zero() {
            return;
        }
        for n in d..self.coeffs.len() {
            let t = self.coeffs[n - d].clone() * c;
            self.coeffs[n] += t;
        }
    }

    /// Multiplicative inverse up to `q^N`; the constant term must be `±1`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let one = T::one();
        let minus_one = -T::one();
        if *c0 != one && *c0 != minus_one {
            return Err(Error::NonUnitConstant);
        }
        // 1/c0 == c0 for a unit
        let inv0 = c0.clone();
        let order = self.order();
        let mut out = Self::zero(order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = T::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if a.is_zero() {
                    continue;
                }
                acc += a.clone() * &out.coeffs[n - i];
            }
            out.coeffs[n] = -(acc * &inv0);
        }
        Ok(out)
    }

    /// Maps coefficients into another ring.
    pub fn map<U: Coeff, F: FnMut(&T) -> U>(&self, f: F) -> QSeries<U> {
        QSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for QSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl<T: fmt::Debug> fmt::Debug for QSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QSeries")
            .field("order", &(self.coeffs.len() - 1))
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<T: Coeff> $trait<&QSeries<T>> for &QSeries<T> {
            type Output = QSeries<T>;
            fn $method(self, rhs: &QSeries<T>) -> QSeries<T> {
                self.$try(rhs).expect("series truncation orders differ")
            }
        }
        impl<T: Coeff> $trait<QSeries<T>> for QSeries<T> {
            type Output = QSeries<T>;
            fn $method(self, rhs: QSeries<T>) -> QSeries<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Coeff> $trait<&QSeries<T>> for QSeries<T> {
            type Output = QSeries<T>;
            fn $method(self, rhs: &QSeries<T>) -> QSeries<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<T: Coeff> Neg for QSeries<T> {
    type Output = QSeries<T>;
    fn neg(self) -> QSeries<T> {
        QSeries {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Coeff> Neg for &QSeries<T> {
    type Output = QSeries<T>;
    fn neg(self) -> QSeries<T> {
        -self.clone()
    }
}
