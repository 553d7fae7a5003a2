//! Integer partitions and the quantities attached to their Young diagrams.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition in canonical form: strictly positive parts, weakly decreasing.
///
/// Partitions of the same size are ordered reverse lexicographically, so
/// `(n)` comes first and `(1^n)` last. Partitions of different sizes order
/// by size first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    /// Wraps parts that are already canonical.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::from_sorted(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based); rows past the end have length 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of the first row.
    pub fn first_row(&self) -> usize {
        self.part(0)
    }

    /// Length of the first column.
    pub fn first_column(&self) -> usize {
        self.parts.len()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part size, multiplicity)` pairs in increasing part-size order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True when `other` fits inside this diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    /// Each part multiplied by `m`.
    pub fn scaled(&self, m: usize) -> Partition {
        assert!(m > 0, "scale factor must be positive");
        Partition::from_sorted(self.parts.iter().map(|p| p * m).collect())
    }

    /// The column-length partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_row();
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition::from_sorted(parts)
    }

    /// Multiset union of the parts.
    pub fn disjoint_union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Whether the two partitions have a part size in common.
    pub fn shares_part_with(&self, other: &Partition) -> bool {
        self.parts.iter().any(|p| other.parts.contains(p))
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation
    /// of cycle type `λ`.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, m) in self.multiplicities() {
            z *= BigUint::from(i).pow(m as u32);
            z *= factorial(m);
        }
        z
    }

    /// Size of the conjugacy class `C_λ`, that is `n!/z_λ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size) / self.z()
    }

    /// `(-1)^{n - ℓ(λ)}`, the sign of a permutation of cycle type `λ`.
    pub fn sign(&self) -> i32 {
        if (self.size - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `max(λ₁, λ′₁) ≤ c·√n`, decided exactly by squaring.
    pub fn is_balanced(&self, c: &BigRational) -> bool {
        assert!(c.is_positive(), "balance constant must be positive");
        let m = BigUint::from(self.first_row().max(self.first_column()));
        let num = c.numer().magnitude();
        let den = c.denom().magnitude();
        &m * &m * den * den <= num * num * BigUint::from(self.size)
    }

    /// `Σ (i-1) λ_i`, the smallest major index over tableaux of this shape.
    pub fn weighted_size(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"5,3,1"` or exponent notation such as `"2^3,1^2"`.
///
/// Whitespace around tokens and surrounding parentheses are tolerated. The
/// empty string (or `"()"`) is the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let trimmed = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for raw in trimmed.split(',') {
        let token = raw.trim();
        let bad = || Error::Parse {
            token: token.to_string(),
        };
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim().parse::<usize>().map_err(|_| bad())?),
            None => (token, 1),
        };
        let base: usize = base.parse().map_err(|_| bad())?;
        if base == 0 {
            return Err(bad());
        }
        parts.extend(std::iter::repeat_n(base, exp));
    }
    Ok(Partition::new(parts))
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(serde::de::Error::custom(
                "partition must be weakly decreasing positive integers",
            ));
        }
        Ok(Partition::from_sorted(parts))
    }
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Precondition(format!(
                "{inner} does not fit inside {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition::from_sorted(current.clone());

        // Successor: decrement the last part > 1, then refill the tail with
        // copies of the new value followed by the remainder.
        let mut parts = current;
        let mut freed = 0;
        while let Some(&1) = parts.last() {
            parts.pop();
            freed += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let v = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(v);
                parts.push(take);
                freed -= take;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}
