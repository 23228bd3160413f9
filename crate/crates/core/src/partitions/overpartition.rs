use std::fmt;

use crate::error::{Error, Result};

use super::{MissingIntegers, Partition};

/// One distinct value of an overpartition: how often it occurs and whether its
/// first occurrence is overlined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverPart {
    pub value: usize,
    pub multiplicity: usize,
    pub overlined: bool,
}

/// A partition in which the first occurrence of each value may be overlined.
///
/// Stored per distinct value, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

impl Overpartition {
    /// Builds from `(value, overlined)` entries in any order. At most one
    /// occurrence of each value may be overlined.
    pub fn from_entries(entries: &[(usize, bool)]) -> Result<Self> {
        let mut sorted = entries.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<OverPart> = Vec::new();
        for (value, bar) in sorted {
            if value == 0 {
                return Err(Error::param("part", 0, "parts must be positive"));
            }
            match parts.last_mut() {
                Some(last) if last.value == value => {
                    if bar && last.overlined {
                        return Err(Error::param("part", value, "a value may be overlined at most once"));
                    }
                    last.multiplicity += 1;
                    last.overlined |= bar;
                }
                _ => parts.push(OverPart {
                    value,
                    multiplicity: 1,
                    overlined: bar,
                }),
            }
        }
        Ok(Overpartition { parts })
    }

    /// Overlines the distinct values of `p` selected by `mask`; bit `i` refers
    /// to the `i`-th largest distinct value.
    pub fn from_partition(p: &Partition, mask: u64) -> Self {
        let parts = p
            .multiplicities()
            .into_iter()
            .enumerate()
            .map(|(i, (value, multiplicity))| OverPart {
                value,
                multiplicity,
                overlined: mask >> i & 1 == 1,
            })
            .collect();
        Overpartition { parts }
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|p| p.value * p.multiplicity).sum()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().map_or(0, |p| p.value)
    }

    /// Occurrences of `v`, overlined or not.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().find(|p| p.value == v).map_or(0, |p| p.multiplicity)
    }

    pub fn overlined_count(&self) -> usize {
        self.parts.iter().filter(|p| p.overlined).count()
    }

    /// The partition obtained by erasing overlines.
    pub fn underlying(&self) -> Partition {
        let parts = self
            .parts
            .iter()
            .flat_map(|p| std::iter::repeat_n(p.value, p.multiplicity))
            .collect();
        Partition::from_sorted(parts)
    }

    /// `(value, overlined)` per occurrence, in display order: largest value
    /// first, overlined copy before plain copies.
    pub fn entries(&self) -> Vec<(usize, bool)> {
        let mut out = Vec::new();
        for p in &self.parts {
            for i in 0..p.multiplicity {
                out.push((p.value, i == 0 && p.overlined));
            }
        }
        out
    }
}

impl MissingIntegers for Overpartition {
    fn largest_part(&self) -> usize {
        self.largest()
    }

    fn distinct_values(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().map(|p| p.value)
    }
}

impl fmt::Display for Overpartition {
    /// Overlined parts are written with a trailing apostrophe: `2'+1+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        for (i, (v, bar)) in self.entries().into_iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{v}{}", if bar { "'" } else { "" })?;
        }
        Ok(())
    }
}
