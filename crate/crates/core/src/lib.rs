//! Impartial chess on integer partitions.
//!
//! A position is a nonempty partition (a Young diagram) and a piece is a
//! [`Moveset`]: a move `(y, x)` takes `λ` to the subpartition `λ[y, x]`
//! obtained by deleting the first `y` rows and `x` columns. The player who
//! cannot move loses under normal play and wins under misère play.
//!
//! ```
//! use partition_games::{partition, PieceId, Solver};
//!
//! let king = Solver::new(PieceId::King);
//! assert_eq!(king.sg(&partition![3, 3, 3]), 0);
//! assert_eq!(king.pair(&partition![2]).to_string(), "(1,0)");
//! ```

pub mod cgh;
pub mod dag;
pub mod enumerate;
mod error;
pub mod family;
pub mod moveset;
mod partition;
pub mod solver;

pub use cgh::{classify, Bounds, CghReport, FamilyKind, PositionSet, Property, Region, Verdict};
pub use dag::{build_dag, game_equivalent, partition_equivalent, GameDag};
pub use enumerate::{enumerate_partitions, partitions_inside, partitions_up_to, Bound};
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use moveset::{piece_moveset, Move, Moveset, PieceId};
pub use partition::Partition;
pub use solver::{ConwayPair, Convention, Outcome, SgCache, Solver};
