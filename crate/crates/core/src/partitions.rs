//! Partitions, bipartitions and their exhaustive enumeration.
//!
//! Parts are stored as an explicit finite list. Indexing past the last part
//! reads zero, so formulas that reach beyond the length of a partition never
//! go out of range.
//!
//! The textual syntax is a comma-separated list of weakly decreasing positive
//! integers, with the empty string (or `∅`) for the empty partition. The same
//! syntax is used on the command line and inside JSON documents.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from parts that may carry trailing zeros.
    pub(crate) fn from_padded(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based, reading zero past the last part.
    pub fn part_at(&self, i: usize) -> Result<u32> {
        if i == 0 {
            return Err(Error::InvalidIndex(i));
        }
        Ok(self.part(i))
    }

    /// Zero-extended 1-based read for indices already known to be positive.
    pub(crate) fn part(&self, i: usize) -> u32 {
        debug_assert!(i >= 1);
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "∅" {
            return Ok(Self::empty());
        }
        let parse_err = |reason: String| Error::ParsePartition { input: s.to_string(), reason };
        let parts = trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>().map_err(|e| parse_err(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|e| parse_err(e.to_string()))
    }
}

/// Renders in the textual syntax, with the empty string for the empty partition.
fn to_syntax(p: &Partition) -> String {
    p.parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&to_syntax(self))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered pair of partitions `(λ¹, λ²)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[Partition; 2]", from = "[Partition; 2]")]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(first: &[u32], second: &[u32]) -> Result<Self> {
        Ok(Self::new(Partition::new(first)?, Partition::new(second)?))
    }

    pub fn parse(first: &str, second: &str) -> Result<Self> {
        Ok(Self::new(first.parse()?, second.parse()?))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    pub fn is_symmetric(&self) -> bool {
        self.first == self.second
    }

    /// Sort key of the canonical enumeration order.
    fn order_key(&self) -> (u32, &Partition, &Partition) {
        (self.first.size(), &self.first, &self.second)
    }
}

impl From<Bipartition> for [Partition; 2] {
    fn from(b: Bipartition) -> Self {
        [b.first, b.second]
    }
}

impl From<[Partition; 2]> for Bipartition {
    fn from([first, second]: [Partition; 2]) -> Self {
        Self { first, second }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.first, self.second)
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical enumeration order: by `|λ¹|`, then `λ¹`, then `λ²`, the
/// partitions compared lexicographically as part lists.
impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

/// All partitions of `n`, in increasing lexicographic order of part lists.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in 1..=remaining.min(max_part) {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every bipartition of `n` exactly once, in the canonical order.
pub fn enumerate_bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        let firsts = enumerate_partitions(k);
        let seconds = enumerate_partitions(n - k);
        for first in &firsts {
            for second in &seconds {
                out.push(Bipartition::new(first.clone(), second.clone()));
            }
        }
    }
    out
}

/// All `(μ, μ)` with `|μ| = n/2`; empty when `n` is odd.
pub fn enumerate_symmetric_bipartitions(n: u32) -> Vec<Bipartition> {
    if n % 2 == 1 {
        return Vec::new();
    }
    enumerate_partitions(n / 2).into_iter().map(|mu| Bipartition::new(mu.clone(), mu)).collect()
}
