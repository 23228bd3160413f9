use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::MissingIntegers;

/// An integer partition stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::param("part", 0, "parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Number of distinct part values.
    pub fn distinct_count(&self) -> usize {
        self.parts.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(!self.parts.is_empty())
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Least integer `>= j` that is not a part; may exceed the largest part.
    pub fn mex(&self, j: usize) -> Result<usize> {
        check_positive("j", j)?;
        let mut v = j;
        // parts ascending from the tail
        for &p in self.parts.iter().rev() {
            if p == v {
                v += 1;
            } else if p > v {
                break;
            }
        }
        Ok(v)
    }

    /// Largest missing integer below the largest part, absent when gap-free.
    pub fn maex(&self) -> Option<usize> {
        let mut expect = self.largest().checked_sub(1)?;
        for &p in &self.parts {
            if p > expect {
                continue;
            }
            if p < expect {
                return Some(expect);
            }
            expect -= 1;
        }
        (expect >= 1).then_some(expect)
    }

    /// Number of integers in `[1, largest]` appearing fewer than `k` times.
    pub fn nu_d_lt_k(&self, k: usize) -> Result<usize> {
        Ok(self.largest() - self.nu_d_geq_k(k)?)
    }

    /// Number of distinct parts appearing at least `k` times.
    pub fn nu_d_geq_k(&self, k: usize) -> Result<usize> {
        check_positive("k", k)?;
        Ok(self.multiplicities().iter().filter(|&&(_, m)| m >= k).count())
    }

    /// All statistics for one partition at the given `j` and `k`.
    pub fn stats(&self, j: usize, k: usize) -> Result<StatRecord> {
        Ok(StatRecord {
            largest: self.largest(),
            missing_count: self.missing_count(j)?,
            mex: self.mex(j)?,
            maex: self.maex(),
            nu_d_lt_k: self.nu_d_lt_k(k)?,
            nu_d_geq_k: self.nu_d_geq_k(k)?,
            total_parts: self.num_parts(),
            distinct_values: self.distinct_count(),
        })
    }
}

pub(crate) fn check_positive(name: &'static str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::param(name, v, "must be at least 1"));
    }
    Ok(())
}

impl MissingIntegers for Partition {
    fn largest_part(&self) -> usize {
        self.largest()
    }

    fn distinct_values(&self) -> impl Iterator<Item = usize> + '_ {
        self.multiplicities().into_iter().map(|(v, _)| v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `9+9+7+5+2`; `()` or an empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::param("part", 0, "not a positive integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Per-partition statistics at fixed `j` (missing count, mex) and `k`
/// (multiplicity threshold).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatRecord {
    pub largest: usize,
    pub missing_count: usize,
    pub mex: usize,
    pub maex: Option<usize>,
    pub nu_d_lt_k: usize,
    pub nu_d_geq_k: usize,
    pub total_parts: usize,
    pub distinct_values: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let pi = p("9+9+7+5+2");
        assert_eq!(pi.missing_integers(1).unwrap(), vec![1, 3, 4, 6, 8]);
        assert_eq!(pi.missing_count(1).unwrap(), 5);
        assert_eq!(pi.missing_count(4).unwrap(), 3);
        assert_eq!(pi.mex(1).unwrap(), 1);
        assert_eq!(pi.mex(2).unwrap(), 3);
        assert_eq!(pi.maex(), Some(8));
    }

    #[test]
    fn single_part() {
        for n in 1..10 {
            let pi = Partition::new(vec![n]).unwrap();
            assert_eq!(pi.missing_count(1).unwrap(), n - 1);
        }
    }

    #[test]
    fn empty_conventions() {
        let e = Partition::empty();
        assert_eq!(e.largest(), 0);
        assert_eq!(e.missing_count(1).unwrap(), 0);
        assert_eq!(e.missing_count(5).unwrap(), 0);
        assert!(e.is_gap_free());
        assert_eq!(e.mex(1).unwrap(), 1);
        assert_eq!(e.mex(4).unwrap(), 4);
        assert_eq!(e.maex(), None);
        assert_eq!(e.distinct_count(), 0);
        assert_eq!(e.to_string(), "()");
    }

    #[test]
    fn mex_and_maex() {
        assert_eq!(p("2+1").mex(1).unwrap(), 3);
        assert_eq!(p("2+1").maex(), None);
        assert_eq!(p("3+1").maex(), Some(2));
        assert_eq!(p("5+5+1").maex(), Some(4));
        assert_eq!(p("4+2").maex(), Some(3));
        assert_eq!(p("2").maex(), Some(1));
        assert_eq!(p("1+1").maex(), None);
    }

    #[test]
    fn nu_examples() {
        assert_eq!(p("4").nu_d_lt_k(2).unwrap(), 4);
        assert_eq!(p("1+1+1+1").nu_d_lt_k(2).unwrap(), 0);
        assert_eq!(p("2+1+1").nu_d_lt_k(2).unwrap(), 1);
        assert_eq!(p("3+1").nu_d_lt_k(2).unwrap(), 3);
        assert_eq!(p("2+2").nu_d_lt_k(2).unwrap(), 1);
    }

    #[test]
    fn zero_parameters_rejected() {
        let pi = p("3+1");
        assert!(pi.missing_count(0).is_err());
        assert!(pi.mex(0).is_err());
        assert!(pi.nu_d_lt_k(0).is_err());
        assert!(pi.nu_d_geq_k(0).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3+x".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugation() {
        let pi = p("5+3+3+1");
        assert_eq!(pi.conjugate(), p("4+3+3+1+1"));
        assert_eq!(pi.conjugate().conjugate(), pi);
    }

    #[test]
    fn stat_record() {
        let r = p("9+9+7+5+2").stats(1, 2).unwrap();
        assert_eq!(r.largest, 9);
        assert_eq!(r.missing_count, 5);
        assert_eq!(r.mex, 1);
        assert_eq!(r.maex, Some(8));
        assert_eq!(r.nu_d_geq_k, 1);
        assert_eq!(r.nu_d_lt_k, 8);
        assert_eq!(r.total_parts, 5);
        assert_eq!(r.distinct_values, 4);
    }
}
