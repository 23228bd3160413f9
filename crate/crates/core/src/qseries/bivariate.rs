use std::ops::{Add, Mul};

use crate::error::{Error, Result};

use super::{Coeff, QSeries};

/// Polynomial in a marker variable `w` whose coefficients are truncated series
/// in `q`: `∑_m w^m F_m(q)`.
///
/// Every row shares the truncation order `N` and the `w`-degree never exceeds
/// `N` (products drop higher rows). Trailing zero rows are not stored, so two
/// polynomials compare equal exactly when all their coefficients agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WqPoly<T> {
    order: usize,
    rows: Vec<QSeries<T>>,
}

impl<T: Coeff> WqPoly<T> {
    pub fn zero(order: usize) -> Self {
        WqPoly {
            order,
            rows: Vec::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(QSeries::one(order))
    }

    /// The polynomial with only a `w^0` row.
    pub fn constant(series: QSeries<T>) -> Self {
        let order = series.order();
        let mut out = WqPoly {
            order,
            rows: vec![series],
        };
        out.normalize();
        out
    }

    /// The marker itself, `w`.
    pub fn marker(order: usize) -> Self {
        Self::from_rows(order, vec![QSeries::zero(order), QSeries::one(order)]).expect("rows built at the right order")
    }

    /// Builds `∑ w^m rows[m]`; rows past `w^order` are dropped.
    pub fn from_rows(order: usize, rows: Vec<QSeries<T>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.order() != order) {
            return Err(Error::OrderMismatch {
                left: order,
                right: bad.order(),
            });
        }
        let mut out = WqPoly { order, rows };
        out.rows.truncate(order + 1);
        out.normalize();
        Ok(out)
    }

    fn normalize(&mut self) {
        while self.rows.last().is_some_and(|r| r.is_zero()) {
            self.rows.pop();
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Highest `w`-power with a nonzero row; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[QSeries<T>] {
        &self.rows
    }

    /// Coefficient series of `w^m`.
    pub fn row(&self, m: usize) -> QSeries<T> {
        self.rows.get(m).cloned().unwrap_or_else(|| QSeries::zero(self.order))
    }

    /// Coefficient of `w^m q^n`.
    pub fn coeff(&self, m: usize, n: usize) -> T {
        match self.rows.get(m) {
            Some(r) if n <= self.order => r.coeff(n).clone(),
            _ => T::zero(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let len = self.rows.len().max(other.rows.len());
        let rows = (0..len).map(|m| self.row(m) + other.row(m)).collect();
        Self::from_rows(self.order, rows)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let len = self.rows.len().max(other.rows.len());
        let rows = (0..len).map(|m| self.row(m) - other.row(m)).collect();
        Self::from_rows(self.order, rows)
    }

    /// Product with the `w`-degree capped at the truncation order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.order));
        }
        let len = (self.rows.len() + other.rows.len() - 1).min(self.order + 1);
        let mut rows = vec![QSeries::zero(self.order); len];
        for (a, ra) in self.rows.iter().enumerate() {
            if ra.is_zero() {
                continue;
            }
            for (b, rb) in other.rows.iter().enumerate() {
                if a + b >= len {
                    break;
                }
                rows[a + b] = &rows[a + b] + &(ra * rb);
            }
        }
        Self::from_rows(self.order, rows)
    }

    /// Multiplies every row by a series in `q` alone.
    pub fn mul_series(&self, s: &QSeries<T>) -> Result<Self> {
        if s.order() != self.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: s.order(),
            });
        }
        let rows = self.rows.iter().map(|r| r * s).collect();
        Self::from_rows(self.order, rows)
    }

    pub fn scale(&self, c: &T) -> Self {
        let rows = self.rows.iter().map(|r| r.scale(c)).collect();
        Self::from_rows(self.order, rows).expect("orders unchanged")
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let rows = self.rows.iter().map(|r| r.shift(k)).collect();
        Self::from_rows(self.order, rows).expect("orders unchanged")
    }

    /// Multiplies by `w^k`, dropping rows past the degree cap.
    pub fn shift_marker(&self, k: usize) -> Self {
        let mut rows = vec![QSeries::zero(self.order); k];
        rows.extend(self.rows.iter().cloned());
        Self::from_rows(self.order, rows).expect("orders unchanged")
    }

    /// Drops every row above `w^cap`.
    pub fn truncate_degree(&mut self, cap: usize) {
        self.rows.truncate(cap + 1);
        self.normalize();
    }

    /// In place: multiplies by `(c0 + c1 q^d) + w (m0 + m1 q^d)`.
    ///
    /// This is the shape of every per-part factor in the missing-integer
    /// products, so it avoids general series multiplication.
    pub fn mul_linear(&mut self, constant: (&T, &T), marker: (&T, &T), d: usize) {
        let order = self.order;
        let len = (self.rows.len() + 1).min(order + 1);
        let mut out = vec![vec![T::zero(); order + 1]; len];
        let spread = |src: &QSeries<T>, dst: &mut Vec<T>, (a, b): (&T, &T)| {
            let src = src.coeffs();
            if !a.is_zero() {
                for (slot, c) in dst.iter_mut().zip(src) {
                    if !c.is_zero() {
                        *slot += c.clone() * a;
                    }
                }
            }
            if !b.is_zero() && d <= order {
                for (slot, c) in dst[d..].iter_mut().zip(src) {
                    if !c.is_zero() {
                        *slot += c.clone() * b;
                    }
                }
            }
        };
        for (m, row) in self.rows.iter().enumerate() {
            spread(row, &mut out[m], constant);
            if m + 1 < len {
                spread(row, &mut out[m + 1], marker);
            }
        }
        self.rows = out.into_iter().map(|c| QSeries::from_coeffs(order, c)).collect();
        self.normalize();
    }

    /// In place: divides by `1 - w q^d` for `d >= 1`.
    pub fn div_marker_binomial(&mut self, d: usize) {
        assert!(d >= 1);
        if self.is_zero() || d > self.order {
            return;
        }
        let order = self.order;
        // the quotient can reach degree N even from a constant
        let mut rows: Vec<Vec<T>> = self.rows.drain(..).map(|r| r.into_coeffs()).collect();
        rows.resize_with(order + 1, || vec![T::zero(); order + 1]);
        for m in 1..=order {
            let (lo, hi) = rows.split_at_mut(m);
            let prev = &lo[m - 1];
            for n in d..=order {
                if !prev[n - d].is_zero() {
                    hi[0][n] += &prev[n - d];
                }
            }
        }
        self.rows = rows.into_iter().map(|c| QSeries::from_coeffs(order, c)).collect();
        self.normalize();
    }

    /// In place: multiplies every row by `1 - c q^d`.
    pub fn mul_binomial(&mut self, c: &T, d: usize) {
        for r in &mut self.rows {
            r.mul_binomial(c, d);
        }
        self.normalize();
    }

    /// In place: divides every row by `1 - c q^d` (`d >= 1`).
    pub fn div_binomial(&mut self, c: &T, d: usize) {
        for r in &mut self.rows {
            r.div_binomial(c, d);
        }
    }

    /// Substitutes a ring element for `w`.
    pub fn evaluate(&self, w: &T) -> QSeries<T> {
        let mut acc = QSeries::zero(self.order);
        for r in self.rows.iter().rev() {
            acc = acc.scale(w) + r;
        }
        acc
    }

    /// Value at fixed `q^n` as a polynomial in `w`: coefficients for `w^0..`.
    pub fn column(&self, n: usize) -> Vec<T> {
        self.rows.iter().map(|r| r.coeff(n).clone()).collect()
    }
}

impl<T: Coeff> Add<&WqPoly<T>> for &WqPoly<T> {
    type Output = WqPoly<T>;
    fn add(self, rhs: &WqPoly<T>) -> WqPoly<T> {
        self.try_add(rhs).expect("series truncation orders differ")
    }
}

impl<T: Coeff> Mul<&WqPoly<T>> for &WqPoly<T> {
    type Output = WqPoly<T>;
    fn mul(self, rhs: &WqPoly<T>) -> WqPoly<T> {
        self.try_mul(rhs).expect("series truncation orders differ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = QSeries<BigInt>;
    type P = WqPoly<BigInt>;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn identity_and_zero() {
        let p = P::from_rows(4, vec![S::from_i64s(4, &[1, 2]), S::from_i64s(4, &[0, 3, 1])]).unwrap();
        assert_eq!(&p * &P::one(4), p);
        assert!((&p * &P::zero(4)).is_zero());
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeff(1, 2), b(1));
        assert_eq!(p.coeff(7, 2), b(0));
    }

    #[test]
    fn trailing_zero_rows_dropped() {
        let p = P::from_rows(3, vec![S::one(3), S::zero(3), S::zero(3)]).unwrap();
        assert_eq!(p, P::one(3));
    }

    #[test]
    fn degree_cap() {
        let mut p = P::one(2);
        for _ in 0..5 {
            p = &p * &P::marker(2);
        }
        assert!(p.is_zero());
    }

    #[test]
    fn linear_factor_matches_general_product() {
        let p = P::from_rows(6, vec![S::from_i64s(6, &[1, 1, 2]), S::from_i64s(6, &[0, 0, 1, -1])]).unwrap();
        // (2 - q^3) + w (1 + 4 q^3)
        let f = P::from_rows(6, vec![S::from_i64s(6, &[2, 0, 0, -1]), S::from_i64s(6, &[1, 0, 0, 4])]).unwrap();
        let mut fast = p.clone();
        fast.mul_linear((&b(2), &b(-1)), (&b(1), &b(4)), 3);
        assert_eq!(fast, &p * &f);
    }

    #[test]
    fn marker_division_inverts_multiplication() {
        let p = P::from_rows(5, vec![S::from_i64s(5, &[1, 1]), S::from_i64s(5, &[0, 2])]).unwrap();
        let mut q = p.clone();
        q.div_marker_binomial(2);
        q.mul_linear((&b(1), &b(0)), (&b(0), &b(-1)), 2);
        assert_eq!(q, p);
    }

    #[test]
    fn evaluate_horner() {
        let p = P::from_rows(
            3,
            vec![
                S::from_i64s(3, &[1]),
                S::from_i64s(3, &[0, 1]),
                S::from_i64s(3, &[0, 0, 1]),
            ],
        )
        .unwrap();
        assert_eq!(p.evaluate(&b(2)), S::from_i64s(3, &[1, 2, 4]));
        assert_eq!(p.evaluate(&b(-1)), S::from_i64s(3, &[1, -1, 1]));
    }

    #[test]
    fn order_mismatch() {
        assert!(P::one(3).try_mul(&P::one(4)).is_err());
        assert!(P::one(3).try_add(&P::one(4)).is_err());
        assert!(P::from_rows(3, vec![S::one(2)]).is_err());
    }
}
