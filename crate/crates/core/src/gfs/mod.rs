//! Generating functions for missing integers and multiplicity statistics as
//! truncated-series computations.
//!
//! The two families share one shape. Writing `c = 1` for partitions and
//! `c = 2` for overpartitions, the bivariate generating function is
//! `((w-c)q;q)_∞ / (wq;q)_∞`, its `w = 0` row is `(-cq;q)_∞` and its
//! `w = -1` specialization is `(-(c+1)q;q)_∞ / (-q;q)_∞`.

mod trivariate;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qseries::{from_i64, geometric_tail, pochhammer_fin, pochhammer_inf, Coeff, Monomial, QSeries, WqPoly};

pub use trivariate::{gf_l_trivariate, TriSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Unrestricted,
    Overpartition,
}

impl Family {
    /// Number of ways a value can occur first: plain, or plain and overlined.
    fn weight(self) -> i64 {
        match self {
            Family::Unrestricted => 1,
            Family::Overpartition => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Unrestricted => "partitions",
            Family::Overpartition => "overpartitions",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "partitions" | "partition" | "unrestricted" => Ok(Family::Unrestricted),
            "overpartitions" | "overpartition" => Ok(Family::Overpartition),
            _ => Err(format!("unknown family '{s}' (expected partitions or overpartitions)")),
        }
    }
}

/// Which missing-integer table to build: family, lower bound `j` on the
/// missing integers counted, and truncation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GfSpec {
    pub family: Family,
    pub j: usize,
    pub order: usize,
}

impl GfSpec {
    pub fn new(family: Family, j: usize, order: usize) -> Result<Self> {
        let spec = GfSpec { family, j, order };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.j == 0 {
            return Err(Error::param("j", 0, "must be at least 1"));
        }
        Ok(())
    }
}

/// `∑ P_j(n,m) w^m q^n` (or the overpartition analogue), summed over the
/// largest part `ℓ`.
///
/// For `ℓ >= j` the contribution is
/// `c·B_j(q)·q^ℓ/∏_{i=j}^{ℓ}(1-q^i) · ∏_{i=j}^{ℓ-1}(w - (w-c)q^i)`, where
/// `B_j = 1/(q;q)_{j-1}` (resp. `(-q;q)_{j-1}/(q;q)_{j-1}`) generates the
/// parts below `j`. Each summand is a polynomial in `w`. Partitions whose
/// largest part is below `j` have no missing integers `>= j` and contribute
/// `B_j` to the `w^0` row; for `j = 1` this is the constant `1` of the empty
/// partition.
pub fn gf_missing_table<T: Coeff>(spec: &GfSpec) -> Result<WqPoly<T>> {
    spec.validate()?;
    let GfSpec { family, j, order } = *spec;
    let c: T = from_i64(family.weight());
    let one = T::one();
    let zero = T::zero();
    let minus_one = -T::one();

    let mut below = QSeries::one(order);
    for i in 1..j.min(order + 1) {
        below.div_binomial(&one, i);
    }
    if family == Family::Overpartition {
        below = below * pochhammer_fin(&Monomial::int(-1, 1), j - 1, order);
    }

    let mut total = WqPoly::zero(order);
    if j <= order {
        // running ∏_{i=j}^{ℓ-1}(w - (w-c)q^i) / ∏_{i=j}^{ℓ}(1-q^i)
        let mut running = WqPoly::constant(QSeries::one(order));
        running.div_binomial(&one, j);
        for ell in j..=order {
            total = &total + &running.shift(ell);
            if ell == order {
                break;
            }
            // w - (w-c)q^ℓ = c q^ℓ + w(1 - q^ℓ)
            running.mul_linear((&zero, &c), (&one, &minus_one), ell);
            running.div_binomial(&one, ell + 1);
        }
        total = total.scale(&c);
    }
    let total = total.mul_series(&below)?;
    Ok(&total + &WqPoly::constant(below))
}

/// `((w-c)q;q)_∞ / (wq;q)_∞` expanded directly as a bivariate series.
pub fn gf_missing_closed<T: Coeff>(family: Family, order: usize) -> WqPoly<T> {
    let c: T = from_i64(family.weight());
    let one = T::one();
    let zero = T::zero();
    let minus_one = -T::one();
    let mut out = WqPoly::one(order);
    for n in 1..=order {
        // 1 - (w-c)q^n = (1 + c q^n) - w q^n
        out.mul_linear((&one, &c), (&zero, &minus_one), n);
        out.div_marker_binomial(n);
    }
    out
}

/// The `w^m` row of the closed form: partitions (or overpartitions) of `n`
/// with exactly `m` missing integers.
pub fn gf_missing_row<T: Coeff>(family: Family, m: usize, order: usize) -> QSeries<T> {
    gf_missing_closed(family, order).row(m)
}

/// `(-cq;q)_∞ · ∑_{k≥1} c q^{2k} / (1 + c q^k)`: exactly one missing integer.
pub fn gf_one_missing<T: Coeff>(family: Family, order: usize) -> QSeries<T> {
    let w = family.weight();
    let c: T = from_i64(w);
    let minus_c: T = from_i64(-w);
    let mut sum = QSeries::zero(order);
    let mut k = 1;
    while 2 * k <= order {
        let mut term = QSeries::monomial(c.clone(), 2 * k, order);
        term.div_binomial(&minus_c, k);
        sum = sum + term;
        k += 1;
    }
    pochhammer_inf(&Monomial::int(-w, 1), order) * sum
}

/// `(-(c+1)q;q)_∞ / (-q;q)_∞`: even minus odd number of missing integers.
pub fn gf_parity_diff<T: Coeff>(family: Family, order: usize) -> QSeries<T> {
    let num = pochhammer_inf(&Monomial::int(-(family.weight() + 1), 1), order);
    let den = pochhammer_inf(&Monomial::<T>::int(-1, 1), order);
    num * den.invert().expect("(-q;q)_∞ has constant term 1")
}

/// Gap-free partitions (`w = 0` row): `(-cq;q)_∞`. For partitions these are
/// equinumerous with partitions into distinct parts.
pub fn gf_gapfree<T: Coeff>(family: Family, order: usize) -> QSeries<T> {
    pochhammer_inf(&Monomial::int(-family.weight(), 1), order)
}

/// `p(n)` or `p̄(n)`: `1/(q;q)_∞`, resp. `(-q;q)_∞/(q;q)_∞`.
pub fn gf_total<T: Coeff>(family: Family, order: usize) -> QSeries<T> {
    let mut out = pochhammer_inf(&Monomial::<T>::int(1, 1), order)
        .invert()
        .expect("(q;q)_∞ has constant term 1");
    if family == Family::Overpartition {
        out = out * pochhammer_inf(&Monomial::int(-1, 1), order);
    }
    out
}

/// Distinct-part partitions `q(n)`: `(-q;q)_∞`.
pub fn gf_distinct<T: Coeff>(order: usize) -> QSeries<T> {
    pochhammer_inf(&Monomial::int(-1, 1), order)
}

/// `∑ ν_{D,<k}(n) q^n = 1/(q;q)_∞ · ∑_{n≠k} q^n/(1-q^n)`.
pub fn gf_nu_d_lt_k<T: Coeff>(k: usize, order: usize) -> Result<QSeries<T>> {
    if k == 0 || k > order {
        return Err(Error::param("k", k, "must satisfy 1 <= k <= order"));
    }
    let mut sum = QSeries::zero(order);
    for n in (1..=order).filter(|&n| n != k) {
        sum = sum + geometric_tail(n, order)?;
    }
    Ok(gf_total(Family::Unrestricted, order) * sum)
}

/// Number of parts equal to `k` over all partitions: `q^k/(1-q^k) · 1/(q;q)_∞`.
pub fn gf_parts_equal_k<T: Coeff>(k: usize, order: usize) -> Result<QSeries<T>> {
    Ok(gf_total(Family::Unrestricted, order) * geometric_tail(k, order)?)
}

/// Total number of parts over all partitions: `∑_n q^n/(1-q^n) · 1/(q;q)_∞`.
pub fn gf_total_parts<T: Coeff>(order: usize) -> QSeries<T> {
    let mut sum = QSeries::zero(order);
    for n in 1..=order {
        sum = sum + geometric_tail(n, order).expect("n >= 1");
    }
    gf_total(Family::Unrestricted, order) * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{missing_histogram, missing_histogram_over};
    use num_bigint::BigInt;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn worked_examples() {
        let t: WqPoly<BigInt> = gf_missing_table(&GfSpec::new(Family::Unrestricted, 1, 8).unwrap()).unwrap();
        assert_eq!(t.coeff(1, 5), b(2));
        assert_eq!(t.coeff(1, 7), b(4));
        let over: QSeries<BigInt> = gf_one_missing(Family::Overpartition, 6);
        assert_eq!(over.coeff(4), &b(6));
        let one: QSeries<BigInt> = gf_one_missing(Family::Unrestricted, 8);
        assert_eq!(one.coeff(7), &b(4));
        let g: QSeries<BigInt> = gf_gapfree(Family::Overpartition, 6);
        assert_eq!(g.coeff(5), &b(10));
        let g: QSeries<BigInt> = gf_gapfree(Family::Unrestricted, 6);
        assert_eq!(g.coeff(5), &b(3));
        assert_eq!(g.coeff(0), &b(1));
        let nu: QSeries<BigInt> = gf_nu_d_lt_k(2, 6).unwrap();
        assert_eq!(nu.coeff(4), &b(9));
    }

    #[test]
    fn table_matches_enumeration_j2() {
        let n_max = 22;
        let t: WqPoly<BigInt> = gf_missing_table(&GfSpec::new(Family::Unrestricted, 2, n_max).unwrap()).unwrap();
        for n in 0..=n_max {
            let h = missing_histogram(n, 2).unwrap();
            for m in 0..=n_max {
                let want = h.get(m).copied().unwrap_or(0);
                assert_eq!(t.coeff(m, n), b(want as i64), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn overpartition_table_matches_enumeration_j2() {
        let n_max = 12;
        let t: WqPoly<BigInt> = gf_missing_table(&GfSpec::new(Family::Overpartition, 2, n_max).unwrap()).unwrap();
        for n in 0..=n_max {
            let h = missing_histogram_over(n, 2).unwrap();
            for m in 0..=n_max {
                let want = h.get(m).copied().unwrap_or(0);
                assert_eq!(t.coeff(m, n), b(want as i64), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn j_beyond_order() {
        // every partition of n <= 3 has largest part < 5
        let t: WqPoly<BigInt> = gf_missing_table(&GfSpec::new(Family::Unrestricted, 5, 3).unwrap()).unwrap();
        assert_eq!(t.degree(), Some(0));
        assert_eq!(t.row(0), QSeries::from_i64s(3, &[1, 1, 2, 3]));
        let t: WqPoly<BigInt> = gf_missing_table(&GfSpec::new(Family::Unrestricted, 1, 0).unwrap()).unwrap();
        assert_eq!(t, WqPoly::one(0));
    }

    #[test]
    fn spec_validation() {
        assert!(GfSpec::new(Family::Unrestricted, 0, 5).is_err());
        assert!(gf_nu_d_lt_k::<BigInt>(0, 5).is_err());
        assert!(gf_nu_d_lt_k::<BigInt>(6, 5).is_err());
    }

    #[test]
    fn closed_form_special_rows() {
        let n = 30;
        for family in [Family::Unrestricted, Family::Overpartition] {
            let t: WqPoly<BigInt> = gf_missing_closed(family, n);
            assert_eq!(t.row(0), gf_gapfree(family, n));
            assert_eq!(t.evaluate(&b(1)), gf_total(family, n));
            assert_eq!(t.evaluate(&b(-1)), gf_parity_diff(family, n));
            assert_eq!(t.row(1), gf_one_missing(family, n));
            let top = if family == Family::Unrestricted { 1 } else { 2 };
            for k in 1..=n {
                assert_eq!(t.coeff(k - 1, k), b(top), "{family} n={k}");
                for m in k..=n {
                    assert_eq!(t.coeff(m, k), b(0));
                }
            }
        }
    }

    #[test]
    fn fixed_width_agrees_with_bigint() {
        let big: WqPoly<BigInt> = gf_missing_closed(Family::Overpartition, 20);
        let small: WqPoly<i64> = gf_missing_closed(Family::Overpartition, 20);
        for m in 0..=20 {
            for n in 0..=20 {
                assert_eq!(big.coeff(m, n), b(small.coeff(m, n)));
            }
        }
        let f: QSeries<f64> = gf_parity_diff(Family::Unrestricted, 15);
        let i: QSeries<i64> = gf_parity_diff(Family::Unrestricted, 15);
        for n in 0..=15 {
            assert_eq!(*f.coeff(n), *i.coeff(n) as f64);
        }
    }

    #[test]
    fn family_parsing() {
        assert_eq!("partitions".parse::<Family>(), Ok(Family::Unrestricted));
        assert_eq!("overpartitions".parse::<Family>(), Ok(Family::Overpartition));
        assert!("cakes".parse::<Family>().is_err());
        assert_eq!(Family::Overpartition.to_string(), "overpartitions");
    }
}
