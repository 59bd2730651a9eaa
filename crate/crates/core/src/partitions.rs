//! Integer partitions and cycle types.
//!
//! A [`Partition`] lists parts in weakly decreasing order; a [`CycleType`]
//! records the same data as multiplicities `(m1, m2, …)`, where `mj` is the
//! number of parts equal to `j`. Partitions index Young subgroups, cycle
//! types index conjugacy classes, and the two convert losslessly.
//!
//! The textual syntax is a comma-separated list of parts with an optional
//! exponent shorthand: `2^2,1` is `(2, 2, 1)` and `1^5` is `(1, 1, 1, 1, 1)`.
//! The empty partition renders as `-`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing steps.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (i, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(Error::Parse {
                    token: "0".into(),
                    reason: "parts must be positive".into(),
                });
            }
            if i > 0 && parts[i - 1] < part {
                return Err(Error::NotDecreasing {
                    token: part.to_string(),
                });
            }
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_cycle_type(&self) -> CycleType {
        let mut mult = vec![0; self.parts.first().copied().unwrap_or(0)];
        for &part in &self.parts {
            mult[part - 1] += 1;
        }
        CycleType { multiplicities: mult }
    }

    /// Parses the textual syntax and checks that the weight is `n`.
    pub fn parse_with_weight(text: &str, n: usize) -> Result<Self> {
        let p: Partition = text.parse()?;
        if p.weight() != n {
            return Err(Error::WeightMismatch {
                expected: n,
                found: p.weight(),
            });
        }
        Ok(p)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.is_empty() || text == "-" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let bad = |reason: &str| Error::Parse {
                token: token.to_string(),
                reason: reason.to_string(),
            };
            if token.is_empty() {
                return Err(bad("empty part"));
            }
            if token.chars().any(char::is_whitespace) {
                return Err(bad("whitespace is not allowed"));
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, Some(e)),
                None => (token, None),
            };
            let part: usize = parse_digits(base).ok_or_else(|| bad("not a positive integer"))?;
            if part == 0 {
                return Err(bad("parts must be positive"));
            }
            let copies = match exp {
                Some(e) => parse_digits(e).ok_or_else(|| bad("exponent is not a positive integer"))?,
                None => 1,
            };
            if copies == 0 {
                return Err(bad("exponent must be positive"));
            }
            if let Some(&last) = parts.last() {
                if last < part {
                    return Err(Error::NotDecreasing {
                        token: token.to_string(),
                    });
                }
            }
            parts.extend(std::iter::repeat_n(part, copies));
        }
        Ok(Self { parts })
    }
}

fn parse_digits(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Groups runs of equal values as `k^e` (or bare `k` when `e == 1`).
fn write_runs(f: &mut fmt::Formatter<'_>, runs: impl Iterator<Item = (usize, usize)>) -> fmt::Result {
    let mut first = true;
    for (part, count) in runs {
        if !first {
            f.write_str(",")?;
        }
        first = false;
        if count == 1 {
            write!(f, "{part}")?;
        } else {
            write!(f, "{part}^{count}")?;
        }
    }
    if first {
        f.write_str("-")?;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_runs(f, self.to_cycle_type().descending_runs())
    }
}

/// Multiplicity vector `(m1, …, mL)` with `mL > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycleType {
    multiplicities: Vec<usize>,
}

impl CycleType {
    /// Builds a cycle type from `(m1, m2, …)`, trimming trailing zeros.
    pub fn new(mut multiplicities: Vec<usize>) -> Self {
        while multiplicities.last() == Some(&0) {
            multiplicities.pop();
        }
        Self { multiplicities }
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of cycles of length `j` (1-based; zero beyond the stored range).
    pub fn multiplicity(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.multiplicities.get(j - 1).copied().unwrap_or(0)
    }

    /// Longest cycle length present, i.e. the canonical length `L`.
    pub fn max_length(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn weight(&self) -> usize {
        self.multiplicities.iter().enumerate().map(|(i, &m)| (i + 1) * m).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .descending_runs()
            .flat_map(|(part, count)| std::iter::repeat_n(part, count))
            .collect();
        Partition { parts }
    }

    /// Ascending exponent notation used for class headers, e.g. `1^3,2`.
    pub fn class_label(&self) -> String {
        struct Ascending<'a>(&'a CycleType);
        impl fmt::Display for Ascending<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let runs = self
                    .0
                    .multiplicities
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(i, &m)| (i + 1, m));
                write_runs(f, runs)
            }
        }
        Ascending(self).to_string()
    }

    fn descending_runs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i + 1, m))
    }
}

impl From<&Partition> for CycleType {
    fn from(p: &Partition) -> Self {
        p.to_cycle_type()
    }
}

impl From<&CycleType> for Partition {
    fn from(c: &CycleType) -> Self {
        c.to_partition()
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.parse::<Partition>().map(|p| p.to_cycle_type())
    }
}

/// Renders in descending partition syntax, e.g. `2,1^3`.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_runs(f, self.descending_runs())
    }
}

pub fn partition_to_cycle_type(p: &Partition) -> CycleType {
    p.to_cycle_type()
}

pub fn cycle_type_to_partition(c: &CycleType) -> Partition {
    c.to_partition()
}

/// All partitions of `n` in descending lexicographic order: `(n)` first,
/// `(1^n)` last. `n = 0` yields the single empty partition.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Cycle types of `n`, i.e. [`enumerate_partitions`] converted.
pub fn enumerate_cycle_types(n: usize) -> Vec<CycleType> {
    enumerate_partitions(n).iter().map(Partition::to_cycle_type).collect()
}
