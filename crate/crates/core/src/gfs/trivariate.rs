use crate::error::{Error, Result};
use crate::qseries::{Coeff, QSeries, WqPoly};

/// Series in `q` indexed by two markers: `w^ℓ` for the largest part and `z^a`
/// for the number of distinct parts of multiplicity at least `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriSeries<T> {
    order: usize,
    // cells[ℓ][a]
    cells: Vec<Vec<QSeries<T>>>,
}

impl<T: Coeff> TriSeries<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn w_cap(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn z_cap(&self) -> usize {
        self.cells[0].len() - 1
    }

    /// Coefficient of `w^ℓ z^a q^n`; zero outside the caps.
    pub fn coeff(&self, ell: usize, a: usize, n: usize) -> T {
        self.cells
            .get(ell)
            .and_then(|row| row.get(a))
            .filter(|_| n <= self.order)
            .map_or_else(T::zero, |s| s.coeff(n).clone())
    }

    /// Sets `z = 1`: a polynomial in `w` alone (largest part).
    pub fn collapse_z(&self) -> WqPoly<T> {
        let rows = self
            .cells
            .iter()
            .map(|row| row.iter().fold(QSeries::zero(self.order), |acc, s| acc + s))
            .collect();
        WqPoly::from_rows(self.order, rows).expect("cells share one order")
    }

    /// Sets `w = z = 1`.
    pub fn collapse_all(&self) -> QSeries<T> {
        self.collapse_z().evaluate(&T::one())
    }

    /// Substitutes `z = 1/w` by regrouping: the coefficient of `w^m` collects
    /// every cell with `ℓ - a = m`, i.e. it counts partitions by
    /// `ν_{d,<k} = ℓ - ν_{d,≥k}`. Needs `z_cap >= w_cap` to be complete.
    pub fn regroup_difference(&self) -> WqPoly<T> {
        let mut rows = vec![QSeries::zero(self.order); self.cells.len()];
        for (ell, row) in self.cells.iter().enumerate() {
            for (a, s) in row.iter().enumerate() {
                if a <= ell {
                    rows[ell - a] = &rows[ell - a] + s;
                } else {
                    debug_assert!(s.is_zero(), "more frequent parts than the largest part");
                }
            }
        }
        WqPoly::from_rows(self.order, rows).expect("cells share one order")
    }
}

/// The trivariate series `L(w,z;q)` with `w` marking the largest part and `z`
/// the number of distinct parts occurring at least `k` times.
///
/// Built as `∑_ℓ w^ℓ ∏_{i<ℓ} F_i · G_ℓ` where `F_i = (1 + ... + q^{(k-1)i}) +
/// z q^{ki}/(1-q^i)` lets value `i` occur any number of times and `G_ℓ` is the
/// same with the zero-occurrence term removed. The empty partition is included
/// as the constant term. Caps must not exceed `order`.
pub fn gf_l_trivariate<T: Coeff>(k: usize, order: usize, w_cap: usize, z_cap: usize) -> Result<TriSeries<T>> {
    if k == 0 {
        return Err(Error::param("k", k, "must be at least 1"));
    }
    if w_cap > order {
        return Err(Error::param("w_cap", w_cap, "must not exceed the order"));
    }
    if z_cap > order {
        return Err(Error::param("z_cap", z_cap, "must not exceed the order"));
    }
    let mut cells = vec![vec![QSeries::zero(order); z_cap + 1]; w_cap + 1];
    cells[0][0] = QSeries::one(order);

    // ∏_{i<ℓ} F_i with z-degree capped
    let mut prefix = WqPoly::one(order);
    for (ell, slots) in cells.iter_mut().enumerate().skip(1) {
        let (low, high) = occurrence_split(ell, k, order);
        let last = WqPoly::from_rows(order, vec![without_constant(&low), high.clone()])?;
        let mut cell = prefix.try_mul(&last)?;
        cell.truncate_degree(z_cap);
        for (a, slot) in slots.iter_mut().enumerate() {
            *slot = cell.row(a);
        }
        let step = WqPoly::from_rows(order, vec![low, high])?;
        prefix = prefix.try_mul(&step)?;
        prefix.truncate_degree(z_cap);
    }
    Ok(TriSeries { order, cells })
}

/// `(1 + q^i + ... + q^{(k-1)i}, q^{ki}/(1-q^i))`: occurrences of value `i`
/// below and at-or-above the threshold `k`.
fn occurrence_split<T: Coeff>(i: usize, k: usize, order: usize) -> (QSeries<T>, QSeries<T>) {
    let mut low = QSeries::zero(order);
    let mut high = QSeries::zero(order);
    let mut r = 0;
    while r * i <= order {
        let term = QSeries::monomial(T::one(), r * i, order);
        if r < k {
            low = low + term;
        } else {
            high = high + term;
        }
        r += 1;
    }
    (low, high)
}

fn without_constant<T: Coeff>(s: &QSeries<T>) -> QSeries<T> {
    let mut coeffs = s.coeffs().to_vec();
    coeffs[0] = T::zero();
    QSeries::from_coeffs(s.order(), coeffs)
}
