use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ConwayPair, Outcome, Solver};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Which value each grid cell shows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Sg,
    Misere,
    Pair,
    Outcome,
}

impl GridKind {
    pub fn name(self) -> &'static str {
        match self {
            GridKind::Sg => "sg",
            GridKind::Misere => "misere",
            GridKind::Pair => "pair",
            GridKind::Outcome => "outcome",
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sg" | "normal" => Ok(GridKind::Sg),
            "misere" => Ok(GridKind::Misere),
            "pair" => Ok(GridKind::Pair),
            "outcome" => Ok(GridKind::Outcome),
            _ => Err(Error::parse(s, "expected sg, misere, pair or outcome")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellValue {
    Value(u32),
    Pair(ConwayPair),
    Outcome(Outcome),
}

impl fmt::Display for CellValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellValue::Value(v) => write!(f, "{v}"),
            CellValue::Pair(p) => write!(f, "{p}"),
            CellValue::Outcome(o) => write!(f, "{o}"),
        }
    }
}

/// Values of every subposition `λ[i,j]`, laid out like the Young diagram:
/// row `i`, column `j`. Cells outside the diagram are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ValueGrid {
    cells: Vec<Vec<Option<CellValue>>>,
}

impl ValueGrid {
    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<CellValue> {
        self.cells.get(i)?.get(j).copied().flatten()
    }

    pub fn cells(&self) -> &[Vec<Option<CellValue>>] {
        &self.cells
    }

    /// Right-aligned cells separated by single spaces, `.` outside the diagram.
    pub fn render(&self) -> String {
        let text: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.map_or_else(|| ".".to_string(), |v| v.to_string()))
                    .collect()
            })
            .collect();
        let width = text.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in text {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ValueGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn value_grid(solver: &Solver, lam: &Partition, kind: GridKind) -> ValueGrid {
    let cols = lam.first() as usize;
    let cells = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..cols)
                .map(|j| {
                    if j >= len as usize {
                        return None;
                    }
                    let p = solver.pair(&lam.subpartition(i, j).expect("inside the row"));
                    Some(match kind {
                        GridKind::Sg => CellValue::Value(p.normal),
                        GridKind::Misere => CellValue::Value(p.misere),
                        GridKind::Pair => CellValue::Pair(p),
                        GridKind::Outcome => CellValue::Outcome(Outcome::from_value(p.normal)),
                    })
                })
                .collect()
        })
        .collect();
    ValueGrid { cells }
}

/// JSON document for a grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridExport {
    pub piece: String,
    pub partition: Partition,
    pub kind: GridKind,
    pub grid: ValueGrid,
}

impl GridExport {
    pub fn new(solver: &Solver, lam: &Partition, kind: GridKind) -> Self {
        GridExport {
            piece: solver.moveset().literal(),
            partition: lam.clone(),
            kind,
            grid: value_grid(solver, lam, kind),
        }
    }
}
