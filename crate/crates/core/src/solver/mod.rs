//! Normal-play Sprague-Grundy values and misère Grundy values.
//!
//! Both values are computed in one memoized pass: the SG value is the mex of
//! successor SG values with terminals at 0, the misère value uses the same
//! recursion with terminals at 1.

mod cache;
pub mod closed_form;
mod grid;
mod truncate;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::moveset::Moveset;
use crate::partition::Partition;

pub use cache::{CacheStats, SgCache};
pub use grid::{CellValue, GridExport, GridKind, ValueGrid, value_grid};
pub use truncate::truncate;

/// `(G, G⁻)` of a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct ConwayPair {
    pub normal: u32,
    pub misere: u32,
}

impl ConwayPair {
    pub const TERMINAL: ConwayPair = ConwayPair { normal: 0, misere: 1 };

    pub const fn new(normal: u32, misere: u32) -> Self {
        ConwayPair { normal, misere }
    }

    /// `(0,1)` or `(1,0)`.
    pub fn is_swap(self) -> bool {
        matches!((self.normal, self.misere), (0, 1) | (1, 0))
    }

    /// `(k,k)` for some `k ≥ 0`.
    pub fn is_symmetric(self) -> bool {
        self.normal == self.misere
    }
}

impl From<[u32; 2]> for ConwayPair {
    fn from([normal, misere]: [u32; 2]) -> Self {
        ConwayPair { normal, misere }
    }
}

impl From<ConwayPair> for [u32; 2] {
    fn from(p: ConwayPair) -> Self {
        [p.normal, p.misere]
    }
}

impl fmt::Display for ConwayPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.normal, self.misere)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// The player to move loses.
    P,
    /// The player to move wins.
    N,
}

impl Outcome {
    pub fn from_value(v: u32) -> Self {
        if v == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Normal,
    Misere,
}

/// Smallest nonnegative integer missing from `values`.
///
/// The bitmap is sized by the number of values, since the mex never exceeds it.
pub fn mex(values: impl IntoIterator<Item = u32>) -> u32 {
    let values: Vec<u32> = values.into_iter().collect();
    let mut seen = vec![false; values.len() + 1];
    for v in values {
        if let Some(slot) = seen.get_mut(v as usize) {
            *slot = true;
        }
    }
    seen.iter().position(|&s| !s).expect("n+1 slots leave a gap") as u32
}

/// Memoized evaluator for one moveset.
///
/// Cheap to clone; clones share the underlying cache, and the solver may be
/// used from several threads at once.
#[derive(Clone)]
pub struct Solver {
    moveset: Moveset,
    cache: Arc<SgCache>,
    table: Arc<cache::Table>,
}

impl Solver {
    pub fn new(moveset: impl Into<Moveset>) -> Self {
        Solver::with_cache(moveset, Arc::new(SgCache::new()))
    }

    pub fn with_cache(moveset: impl Into<Moveset>, cache: Arc<SgCache>) -> Self {
        let moveset = moveset.into();
        let table = cache.table(&moveset);
        Solver {
            moveset,
            cache,
            table,
        }
    }

    pub fn moveset(&self) -> &Moveset {
        &self.moveset
    }

    pub fn cache(&self) -> &Arc<SgCache> {
        &self.cache
    }

    /// Conway pair of a nonempty position.
    pub fn pair(&self, lam: &Partition) -> ConwayPair {
        assert!(!lam.is_empty(), "the empty partition is not a position");
        if let Some(v) = self.table.get(lam).map(|r| *r) {
            self.cache.record_hit();
            return v;
        }
        let moves = self.moveset.moves_at(lam);
        let value = if moves.is_empty() {
            ConwayPair::TERMINAL
        } else {
            let children: Vec<ConwayPair> = moves
                .iter()
                .map(|&(y, x)| self.pair(&lam.subpartition(y, x).expect("legal move")))
                .collect();
            ConwayPair::new(
                mex(children.iter().map(|p| p.normal)),
                mex(children.iter().map(|p| p.misere)),
            )
        };
        self.table.insert(lam.clone(), value);
        value
    }

    pub fn sg(&self, lam: &Partition) -> u32 {
        self.pair(lam).normal
    }

    pub fn misere_g(&self, lam: &Partition) -> u32 {
        self.pair(lam).misere
    }

    pub fn outcome(&self, lam: &Partition, convention: Convention) -> Outcome {
        let p = self.pair(lam);
        match convention {
            Convention::Normal => Outcome::from_value(p.normal),
            Convention::Misere => Outcome::from_value(p.misere),
        }
    }

    pub fn is_terminal(&self, lam: &Partition) -> bool {
        self.moveset.is_terminal(lam)
    }
}

/// One-shot SG value with a private cache.
pub fn sg(moveset: &Moveset, lam: &Partition) -> u32 {
    Solver::new(moveset.clone()).sg(lam)
}

/// One-shot misère Grundy value with a private cache.
pub fn misere_g(moveset: &Moveset, lam: &Partition) -> u32 {
    Solver::new(moveset.clone()).misere_g(lam)
}

pub fn conway_pair(moveset: &Moveset, lam: &Partition) -> ConwayPair {
    Solver::new(moveset.clone()).pair(lam)
}

pub fn outcome(moveset: &Moveset, lam: &Partition, convention: Convention) -> Outcome {
    Solver::new(moveset.clone()).outcome(lam, convention)
}
