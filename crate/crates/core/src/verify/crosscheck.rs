use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::Result;
use crate::gfs::{
    gf_gapfree, gf_l_trivariate, gf_missing_closed, gf_missing_table, gf_nu_d_lt_k, gf_one_missing, gf_parity_diff,
    gf_parts_equal_k, gf_total, gf_total_parts, Family, GfSpec, TriSeries,
};
use crate::partitions::{
    aggregate_stats, enumerate_partitions, exactly_one_double_count, exactly_one_double_count_over, missing_histogram,
    missing_histogram_over,
};
use crate::{BiSeries, Series};

use super::report::ReportBuilder;
use super::VerdictReport;

/// Table from the generating function against the enumerated histogram of
/// missing integers `>= j`, for every `n <= n_max` and `m <= n_max`.
pub fn crosscheck_missing_tables(family: Family, j: usize, n_max: usize) -> Result<VerdictReport> {
    let spec = GfSpec::new(family, j, n_max)?;
    let name = format!("crosscheck-table-{family}-j{j}");
    let mut b = ReportBuilder::new(&name, 0, n_max);
    let table: BiSeries = gf_missing_table(&spec)?;
    let hists = (0..=n_max)
        .into_par_iter()
        .map(|n| match family {
            Family::Unrestricted => missing_histogram(n, j),
            Family::Overpartition => missing_histogram_over(n, j),
        })
        .collect::<Result<Vec<_>>>()?;
    for (n, h) in hists.iter().enumerate() {
        for m in 0..=n_max {
            let want = BigInt::from(h.get(m).copied().unwrap_or(0));
            let got = table.coeff(m, n);
            if want != got {
                b.fail(n, format!("m={m}: {want}"), got);
            }
        }
    }
    Ok(b.finish())
}

/// Exactly one missing integer: the closed-form `w^1` row, the product-sum
/// series, the enumerated count, and the count of (over)partitions with
/// exactly one doubled value all agree for `n <= n_max`.
pub fn crosscheck_one_double(family: Family, n_max: usize) -> VerdictReport {
    let mut b = ReportBuilder::new(&format!("crosscheck-one-double-{family}"), 0, n_max);
    let row = gf_missing_closed::<BigInt>(family, n_max).row(1);
    let series: Series = gf_one_missing(family, n_max);
    let counts: Vec<(u64, u64)> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let (hist, doubled) = match family {
                Family::Unrestricted => (missing_histogram(n, 1), exactly_one_double_count(n)),
                Family::Overpartition => (missing_histogram_over(n, 1), exactly_one_double_count_over(n)),
            };
            let one_missing = hist.expect("j = 1").get(1).copied().unwrap_or(0);
            (one_missing, doubled)
        })
        .collect();
    for (n, (one_missing, doubled)) in counts.into_iter().enumerate() {
        let doubled = BigInt::from(doubled);
        b.expect_eq(n, doubled.clone(), row.coeff(n).clone());
        b.expect_eq(n, doubled.clone(), series.coeff(n).clone());
        b.expect_eq(n, doubled, BigInt::from(one_missing));
    }
    b.finish()
}

/// For every `1 <= k <= k_max` and `n <= n_max`: the series coefficient of
/// `ν_{D,<k}(n)`, the enumerated sum, the number of parts different from `k`
/// and `σL(n) - ν_{D,≥k}(n)` coincide, and `σL(n) = t(n)`.
pub fn crosscheck_nu_identity(k_max: usize, n_max: usize) -> Result<VerdictReport> {
    let mut b = ReportBuilder::new("crosscheck-nu", 0, n_max);
    let order = n_max.max(k_max);
    let total_parts: Series = gf_total_parts(order);
    for k in 1..=k_max {
        let nu: Series = gf_nu_d_lt_k(k, order)?;
        let eq_k: Series = gf_parts_equal_k(k, order)?;
        let aggs = (0..=n_max)
            .into_par_iter()
            .map(|n| aggregate_stats(n, k))
            .collect::<Result<Vec<_>>>()?;
        for (n, a) in aggs.into_iter().enumerate() {
            let tag = |s: &str| format!("k={k} {s}");
            let series = nu.coeff(n).clone();
            b.expect_eq(n, BigInt::from(a.nu_d_lt_k), series.clone());
            if a.parts_not_equal_k != a.nu_d_lt_k {
                b.fail(n, tag(&format!("parts != k: {}", a.parts_not_equal_k)), a.nu_d_lt_k);
            }
            if a.sigma_l - a.nu_d_geq_k != a.nu_d_lt_k {
                b.fail(
                    n,
                    tag(&format!("sigmaL - nu_geq: {}", a.sigma_l - a.nu_d_geq_k)),
                    a.nu_d_lt_k,
                );
            }
            if a.sigma_l != a.total_parts {
                b.fail(n, tag(&format!("sigmaL: {}", a.sigma_l)), a.total_parts);
            }
            b.expect_eq(n, BigInt::from(a.total_parts), total_parts.coeff(n).clone());
            b.expect_eq(n, BigInt::from(a.parts_equal_k), eq_k.coeff(n).clone());
            b.expect_eq(n, total_parts.coeff(n).clone(), series + eq_k.coeff(n));
            if k == 1 && a.missing_total != a.nu_d_lt_k {
                b.fail(n, tag(&format!("missing total: {}", a.missing_total)), a.nu_d_lt_k);
            }
        }
    }
    Ok(b.finish())
}

/// The closed bivariate product against the largest-part sum (`j = 1`) up to
/// `table_order`, and its univariate specializations up to `series_order`:
/// `w = 1` gives the total count, `w = -1` the parity difference, the `w^0`
/// row the gap-free series and the `w^1` row the one-missing series.
pub fn crosscheck_closed_forms(family: Family, table_order: usize, series_order: usize) -> VerdictReport {
    let mut b = ReportBuilder::new(&format!("crosscheck-closed-{family}"), 0, table_order.max(series_order));
    let closed: BiSeries = gf_missing_closed(family, table_order);
    let table: BiSeries =
        gf_missing_table(&GfSpec::new(family, 1, table_order).expect("j = 1 is valid")).expect("valid spec");
    for m in 0..=table_order {
        for n in 0..=table_order {
            let (c, t) = (closed.coeff(m, n), table.coeff(m, n));
            if c != t {
                b.fail(n, format!("closed m={m}: {c}"), t);
            }
        }
    }

    let closed: BiSeries = gf_missing_closed(family, series_order);
    let pairs: [(&str, Series, Series); 4] = [
        ("w=1", gf_total(family, series_order), closed.evaluate(&BigInt::from(1))),
        (
            "w=-1",
            gf_parity_diff(family, series_order),
            closed.evaluate(&BigInt::from(-1)),
        ),
        ("w^0", gf_gapfree(family, series_order), closed.row(0)),
        ("w^1", gf_one_missing(family, series_order), closed.row(1)),
    ];
    for (label, want, got) in &pairs {
        for n in 0..=series_order {
            if want.coeff(n) != got.coeff(n) {
                b.fail(n, format!("{label}: {}", want.coeff(n)), got.coeff(n));
            }
        }
    }
    b.finish()
}

/// `L(w,z;q)` against the enumerated joint distribution of (largest part,
/// `ν_{d,≥k}`) for `n <= n_max`, plus the regrouped `ν_{d,<k}` distribution
/// and the `w = z = 1` collapse to `p(n)`.
pub fn crosscheck_trivariate(k: usize, n_max: usize) -> Result<VerdictReport> {
    let mut b = ReportBuilder::new(&format!("crosscheck-trivariate-k{k}"), 0, n_max);
    let l: TriSeries<BigInt> = gf_l_trivariate(k, n_max, n_max, n_max)?;
    let joint = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut cells: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            let mut by_lt: BTreeMap<usize, u64> = BTreeMap::new();
            for p in enumerate_partitions(n) {
                *cells.entry((p.largest(), p.nu_d_geq_k(k)?)).or_default() += 1;
                *by_lt.entry(p.nu_d_lt_k(k)?).or_default() += 1;
            }
            Ok((cells, by_lt))
        })
        .collect::<Result<Vec<_>>>()?;
    let regrouped = l.regroup_difference();
    let collapsed = l.collapse_all();
    let total: Series = gf_total(Family::Unrestricted, n_max);
    for (n, (cells, by_lt)) in joint.iter().enumerate() {
        for ell in 0..=n_max {
            for a in 0..=n_max {
                let want = BigInt::from(cells.get(&(ell, a)).copied().unwrap_or(0));
                let got = l.coeff(ell, a, n);
                if want != got {
                    b.fail(n, format!("w^{ell} z^{a}: {want}"), got);
                }
            }
        }
        for m in 0..=n_max {
            let want = BigInt::from(by_lt.get(&m).copied().unwrap_or(0));
            let got = regrouped.coeff(m, n);
            if want != got {
                b.fail(n, format!("nu_lt={m}: {want}"), got);
            }
        }
        b.expect_eq(n, total.coeff(n).clone(), collapsed.coeff(n).clone());
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        assert!(crosscheck_missing_tables(Family::Unrestricted, 1, 12).unwrap().passed);
        assert!(crosscheck_missing_tables(Family::Overpartition, 3, 9).unwrap().passed);
        assert!(crosscheck_one_double(Family::Unrestricted, 12).passed);
        assert!(crosscheck_one_double(Family::Overpartition, 8).passed);
        assert!(crosscheck_nu_identity(3, 10).unwrap().passed);
        assert!(crosscheck_closed_forms(Family::Overpartition, 12, 30).passed);
        assert!(crosscheck_trivariate(2, 9).unwrap().passed);
    }

    #[test]
    fn invalid_parameters() {
        assert!(crosscheck_missing_tables(Family::Unrestricted, 0, 5).is_err());
        assert!(crosscheck_trivariate(0, 5).is_err());
    }

    #[test]
    fn empty_range() {
        let r = crosscheck_nu_identity(2, 0).unwrap();
        assert!(r.passed);
        assert!(crosscheck_one_double(Family::Overpartition, 1).passed);
    }
}
