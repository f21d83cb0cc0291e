//! Integer partitions viewed as Young diagrams.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive parts. Rows are
//! indexed from zero, so `λ[i,j]` deletes the first `i` rows and the first `j`
//! columns of the diagram.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition `⟨λ1, …, λr⟩` with `λ1 ≥ … ≥ λr ≥ 1`.
///
/// The empty partition is a valid value but never a game position.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates `raw` and wraps it.
    pub fn new(raw: Vec<u32>) -> Result<Self> {
        if let Some(pos) = raw.iter().position(|&p| p == 0) {
            return Err(Error::invalid(format!(
                "part {} is zero; parts must be positive",
                pos + 1
            )));
        }
        if let Some(w) = raw.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "parts increase at position {} ({} < {})",
                w + 1,
                raw[w],
                raw[w + 1]
            )));
        }
        Ok(Partition { parts: raw })
    }

    /// Builds a partition from signed input, rejecting nonpositive entries.
    pub fn from_signed(raw: &[i64]) -> Result<Self> {
        let mut parts = Vec::with_capacity(raw.len());
        for &p in raw {
            if p <= 0 {
                return Err(Error::invalid(format!("part {p} is not positive")));
            }
            parts.push(u32::try_from(p).map_err(|_| Error::invalid(format!("part {p} too large")))?);
        }
        Partition::new(parts)
    }

    /// Skips validation; callers guarantee the invariant.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-cell partition `⟨1⟩`, the terminal position of every game.
    pub fn unit() -> Self {
        Partition { parts: vec![1] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of rows `r`.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of the first row, `λ1` (zero for the empty partition).
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `λ_{i+1}` for zero-based `i`, or 0 past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn cells(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Rows of the result are the columns of `self`.
    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// True iff `λ[i,j]` is nonempty, i.e. `i < r` and `λ_{i+1} > j`.
    #[inline]
    pub fn is_defined(&self, i: usize, j: usize) -> bool {
        i < self.parts.len() && self.parts[i] as usize > j
    }

    /// `λ[i,j] = ⟨λ_{i+1} − j, λ_{i+2} − j, …⟩` with nonpositive entries dropped.
    ///
    /// Returns `None` when the result would be empty.
    pub fn subpartition(&self, i: usize, j: usize) -> Option<Partition> {
        if !self.is_defined(i, j) {
            return None;
        }
        let j = j as u32;
        let parts = self.parts[i..]
            .iter()
            .take_while(|&&p| p > j)
            .map(|&p| p - j)
            .collect();
        Some(Partition { parts })
    }

    /// Like [`subpartition`](Self::subpartition) but as a `Result`.
    pub fn try_subpartition(&self, i: usize, j: usize) -> Result<Partition> {
        self.subpartition(i, j)
            .ok_or(Error::UndefinedSubpartition(i, j))
    }

    /// Every well-defined `λ[i,j]`, row by row. Distinct cells may give equal
    /// partitions; duplicates are kept.
    pub fn subpartitions(&self) -> impl Iterator<Item = Partition> + '_ {
        self.parts.iter().enumerate().flat_map(move |(i, &len)| {
            (0..len as usize).map(move |j| self.subpartition(i, j).expect("cell inside the row"))
        })
    }

    /// All `(i,j)` with `λ[i,j] = ⟨1⟩`, in increasing row order.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.parts.len())
            .filter(|&i| self.part(i + 1) < self.parts[i])
            .map(|i| (i, self.parts[i] as usize - 1))
            .collect()
    }

    /// `λ⁻`: the partition with every corner removed. Requires `λ > ⟨1⟩`.
    pub fn remove_corners(&self) -> Result<Partition> {
        if self.cells() <= 1 {
            return Err(Error::invalid(format!(
                "removing corners needs a partition larger than <1>, got {self:?}"
            )));
        }
        let r = self.parts.len();
        let mut parts: Vec<u32> = (0..r)
            .map(|i| {
                if i + 1 == r || self.parts[i] > self.parts[i + 1] {
                    self.parts[i] - 1
                } else {
                    self.parts[i]
                }
            })
            .collect();
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Young-lattice order: diagram containment.
    pub fn young_leq(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Strict Young order.
    pub fn young_lt(&self, other: &Partition) -> bool {
        self != other && self.young_leq(other)
    }

    /// Dyson's rank `|λ1 − r|`.
    pub fn rank(&self) -> Result<u32> {
        if self.is_empty() {
            return Err(Error::invalid("rank of the empty partition"));
        }
        Ok(self.first().abs_diff(self.parts.len() as u32))
    }

    /// Durfee length: the largest `ℓ` with `λ_ℓ ≥ ℓ`.
    pub fn durfee(&self) -> Result<u32> {
        if self.is_empty() {
            return Err(Error::invalid("Durfee length of the empty partition"));
        }
        Ok(self
            .parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count() as u32)
    }

    /// Multiplicity of every distinct part, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Graded order used by enumeration: cell count, then parts descending.
    pub fn graded_cmp(&self, other: &Partition) -> Ordering {
        self.cells()
            .cmp(&other.cells())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (n, p) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "⟩")
    }
}

/// Comma-separated literal, e.g. `5,4,4,2,1,1`; the empty partition prints as `<>`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "<>");
        }
        for (n, p) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s);
        if inner.is_empty() || inner == "<>" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::parse(tok, "expected a decimal part"))?;
            parts.push(v);
        }
        Partition::from_signed(&parts).map_err(|e| Error::parse(s, e.to_string()))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Convenience constructor for literals known to be valid; panics otherwise.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("invalid partition literal")
    };
}
