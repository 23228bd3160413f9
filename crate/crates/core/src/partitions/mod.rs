//! Exhaustive enumeration of partitions and overpartitions, and the statistics
//! computed on them. Everything here works object by object and is the
//! reference the generating functions are checked against.

mod overpartition;
mod partition;

use crate::error::Result;

pub use overpartition::{OverPart, Overpartition};
pub use partition::{Partition, StatRecord};

use partition::check_positive;

/// Missing integers: values `v` with `j <= v < largest` that do not occur.
///
/// For overpartitions a value is present whether or not it is overlined.
pub trait MissingIntegers {
    fn largest_part(&self) -> usize;

    /// Distinct values occurring, in any order.
    fn distinct_values(&self) -> impl Iterator<Item = usize> + '_;

    fn missing_count(&self, j: usize) -> Result<usize> {
        check_positive("j", j)?;
        let top = self.largest_part();
        if top <= j {
            return Ok(0);
        }
        let present = self.distinct_values().filter(|&v| v >= j && v < top).count();
        Ok(top - j - present)
    }

    /// The missing integers `>= j`, ascending.
    fn missing_integers(&self, j: usize) -> Result<Vec<usize>> {
        check_positive("j", j)?;
        let top = self.largest_part();
        let mut present = vec![false; top.max(1)];
        for v in self.distinct_values() {
            if v < top {
                present[v] = true;
            }
        }
        Ok((j..top).filter(|&v| !present[v]).collect())
    }

    fn is_gap_free(&self) -> bool {
        self.missing_count(1).map_or(true, |m| m == 0)
    }
}

/// Partitions of `n` in reverse-lexicographic order, generated one at a time.
///
/// `n = 0` yields the empty partition once.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let out = Partition::from_sorted(current.clone());
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let mut a = current;
            let ones = a.len() - i - 1;
            let v = a[i] - 1;
            a.truncate(i);
            let mut rest = ones + v + 1;
            while rest >= v {
                a.push(v);
                rest -= v;
            }
            if rest > 0 {
                a.push(rest);
            }
            self.next = Some(a);
        }
        Some(out)
    }
}

/// Overpartitions of `n`: for each partition in reverse-lexicographic order,
/// every overline pattern, counting the mask in binary with the largest
/// distinct value as the lowest bit.
pub fn enumerate_overpartitions(n: usize) -> Overpartitions {
    Overpartitions {
        partitions: enumerate_partitions(n),
        current: None,
        mask: 0,
    }
}

pub struct Overpartitions {
    partitions: Partitions,
    current: Option<Partition>,
    mask: u64,
}

impl Iterator for Overpartitions {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        loop {
            if let Some(p) = &self.current {
                if self.mask < 1u64 << p.distinct_count() {
                    let out = Overpartition::from_partition(p, self.mask);
                    self.mask += 1;
                    return Some(out);
                }
            }
            self.current = Some(self.partitions.next()?);
            self.mask = 0;
        }
    }
}

/// Number of partitions of `n` with exactly one value occurring twice and
/// every other value once.
pub fn exactly_one_double_count(n: usize) -> u64 {
    enumerate_partitions(n)
        .filter(|p| one_doubled(p.multiplicities().iter().map(|&(_, m)| m)))
        .count() as u64
}

/// Overpartition analogue: one value occurs twice (both plain, or one overlined
/// and one plain), every other value once, overlined or not.
pub fn exactly_one_double_count_over(n: usize) -> u64 {
    enumerate_overpartitions(n)
        .filter(|o| one_doubled(o.parts().iter().map(|p| p.multiplicity)))
        .count() as u64
}

fn one_doubled(mults: impl Iterator<Item = usize>) -> bool {
    let mut doubled = 0;
    for m in mults {
        match m {
            1 => {}
            2 => doubled += 1,
            _ => return false,
        }
    }
    doubled == 1
}

/// Sums of per-partition statistics over all partitions of `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AggregateStats {
    /// `∑ ν_{d,<k}(π)`.
    pub nu_d_lt_k: u64,
    /// `∑ ν_{d,≥k}(π)`.
    pub nu_d_geq_k: u64,
    /// Sum of largest parts.
    pub sigma_l: u64,
    /// Total number of parts.
    pub total_parts: u64,
    /// Number of parts equal to `k`, over all partitions.
    pub parts_equal_k: u64,
    /// Number of parts different from `k`, over all partitions.
    pub parts_not_equal_k: u64,
    /// Total number of missing integers (`j = 1`).
    pub missing_total: u64,
}

pub fn aggregate_stats(n: usize, k: usize) -> Result<AggregateStats> {
    check_positive("k", k)?;
    let mut acc = AggregateStats::default();
    for p in enumerate_partitions(n) {
        acc.nu_d_lt_k += p.nu_d_lt_k(k)? as u64;
        acc.nu_d_geq_k += p.nu_d_geq_k(k)? as u64;
        acc.sigma_l += p.largest() as u64;
        acc.total_parts += p.num_parts() as u64;
        let eq = p.multiplicity(k) as u64;
        acc.parts_equal_k += eq;
        acc.parts_not_equal_k += p.num_parts() as u64 - eq;
        acc.missing_total += p.missing_count(1)? as u64;
    }
    Ok(acc)
}

/// Overpartition counterpart of `∑ ν_{d,<k}`: integers in `[1, largest]`
/// occurring fewer than `k` times, summed over all overpartitions of `n`.
/// Exposed for exploration only; no closed form is implemented.
pub fn overpartition_nu_d_lt_k_total(n: usize, k: usize) -> Result<u64> {
    check_positive("k", k)?;
    Ok(enumerate_overpartitions(n)
        .map(|o| {
            let geq = o.parts().iter().filter(|p| p.multiplicity >= k).count();
            (o.largest() - geq) as u64
        })
        .sum())
}

/// Histogram `counts[m]` of missing integers `>= j` over partitions of `n`.
pub fn missing_histogram(n: usize, j: usize) -> Result<Vec<u64>> {
    histogram(enumerate_partitions(n), n, j)
}

/// Histogram `counts[m]` of missing integers `>= j` over overpartitions of `n`.
pub fn missing_histogram_over(n: usize, j: usize) -> Result<Vec<u64>> {
    histogram(enumerate_overpartitions(n), n, j)
}

fn histogram<P: MissingIntegers>(items: impl Iterator<Item = P>, n: usize, j: usize) -> Result<Vec<u64>> {
    check_positive("j", j)?;
    let mut counts = vec![0u64; n.max(1)];
    for p in items {
        counts[p.missing_count(j)?] += 1;
    }
    Ok(counts)
}
