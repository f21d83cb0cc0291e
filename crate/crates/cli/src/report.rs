//! Serializable command outputs. Every JSON line the binary prints parses
//! back into one of these.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use partition_games::cgh::Table1Column;
use partition_games::{
    CghReport, ConwayPair, Convention, Move, Outcome, Partition, PieceId, Property, Region, Solver,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SgReport {
    pub piece: String,
    pub partition: Partition,
    pub sg: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub piece: String,
    pub partition: Partition,
    pub pair: ConwayPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeReport {
    pub piece: String,
    pub partition: Partition,
    pub convention: Convention,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncateReport {
    pub piece: String,
    pub partition: Partition,
    pub truncated: Partition,
}

/// A Pawn or Knight board, its Downright image and both values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub piece: String,
    pub partition: Partition,
    pub image: Partition,
    pub sg: u32,
    pub image_sg: u32,
    pub agree: bool,
}

impl ReduceReport {
    pub fn new(solver: &Solver, downright: &Solver, lam: &Partition, image: Partition) -> Self {
        let sg = solver.sg(lam);
        let image_sg = downright.sg(&image);
        ReduceReport {
            piece: solver.moveset().literal(),
            partition: lam.clone(),
            image,
            sg,
            image_sg,
            agree: sg == image_sg,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivReport {
    pub piece: String,
    pub partition: Partition,
    pub to_piece: String,
    pub to_partition: Partition,
    /// Label bijection, or `None` when the games are not equivalent.
    pub mapping: Option<Vec<(Move, Move)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub piece: PieceId,
    pub column: Table1Column,
    pub expected: Region,
    pub agree: bool,
    pub report: CghReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
}

impl Table1Report {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<10} {:<6} {:<6} {:<6} match", "piece", "column", "got", "want");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<10} {:<6} {:<6} {:<6} {}",
                r.piece.name(),
                format!("{:?}", r.column).to_lowercase(),
                r.report.region.to_string(),
                r.expected.to_string(),
                if r.agree { "yes" } else { "NO" }
            );
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut out = format!("column,expected,agree,{}\n", CghReport::CSV_HEADER);
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                format!("{:?}", r.column).to_lowercase(),
                r.expected,
                r.agree,
                r.report.csv_row()
            );
        }
        out
    }
}

/// Human-readable classification report.
pub fn cgh_text(r: &CghReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "piece     {}", r.piece);
    let _ = writeln!(out, "family    {} ({})", r.family, r.bounds);
    let _ = writeln!(out, "positions {}", r.positions);
    let _ = writeln!(out, "region    {}", r.region);
    for p in Property::ALL {
        match r.witness(p) {
            None => {
                let _ = writeln!(out, "  {:<11} holds (bounded scan)", p.name());
            }
            Some(w) => {
                let mut line = format!("  {:<11} fails at {} {}", p.name(), w.partition, w.pair);
                if let (Some((y, x)), Some(s), Some(sp)) = (w.mv, &w.successor, w.successor_pair) {
                    let _ = write!(line, " via ({y},{x}) to {s} {sp}");
                }
                let _ = writeln!(out, "{line}");
            }
        }
    }
    out
}
