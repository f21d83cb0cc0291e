//! Deterministic parallel scans: conjecture checks and family sweeps.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{bail, Context};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use partition_games::cgh::family_members;
use partition_games::family::gen_staircase;
use partition_games::{Bounds, ConwayPair, FamilyKind, Partition, PieceId, Solver};

use crate::args::ScanArgs;

/// Instance grid of one conjecture scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanPlan {
    pub conjecture: u8,
    /// `(r, c, k)` in lexicographic order.
    pub instances: Vec<(u32, u32, u32)>,
}

impl ScanPlan {
    /// Conjecture 1 runs over odd `r` with `c = r`; conjecture 2 over even
    /// `r ≠ c`, both even.
    pub fn new(args: &ScanArgs) -> anyhow::Result<Self> {
        let conjecture = args.id;
        let mut instances = Vec::new();
        match conjecture {
            1 => {
                if let Some(c) = args.c {
                    if Some(c) != args.r {
                        bail!("conjecture 1 uses c = r");
                    }
                }
                let rs: Vec<u32> = match args.r {
                    Some(r) if r % 2 == 0 => bail!("conjecture 1 needs odd r, got {r}"),
                    Some(r) => vec![r],
                    None => (1..=args.max_r.unwrap_or(5)).filter(|r| r % 2 == 1).collect(),
                };
                for r in rs {
                    for k in 1..=args.max_k.unwrap_or(6) {
                        instances.push((r, r, k));
                    }
                }
            }
            2 => {
                let evens = |one: Option<u32>, max: Option<u32>, what: &str| -> anyhow::Result<Vec<u32>> {
                    Ok(match one {
                        Some(v) if v % 2 == 1 || v == 0 => {
                            bail!("conjecture 2 needs even positive {what}, got {v}")
                        }
                        Some(v) => vec![v],
                        None => (2..=max.unwrap_or(6)).step_by(2).collect(),
                    })
                };
                let rs = evens(args.r, args.max_r, "r")?;
                let cs = evens(args.c, args.max_c, "c")?;
                if args.r.is_some() && args.r == args.c {
                    bail!("conjecture 2 needs r != c");
                }
                for &r in &rs {
                    for &c in cs.iter().filter(|&&c| c != r) {
                        for k in 1..=args.max_k.unwrap_or(4) {
                            instances.push((r, c, k));
                        }
                    }
                }
            }
            other => bail!("unknown conjecture {other} (1 or 2)"),
        }
        if instances.is_empty() {
            bail!("the bounds leave no instances to scan");
        }
        Ok(ScanPlan {
            conjecture,
            instances,
        })
    }
}

/// Conjectured King value of `gs(r,c,k)`.
pub fn conjectured_value(conjecture: u8, r: u32, k: u32) -> u32 {
    match conjecture {
        1 => match k % (r + 2) {
            0 => 2,
            m if m % 2 == 1 => 0,
            _ => 1,
        },
        _ => {
            if k % 2 == 1 {
                2
            } else {
                3
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub conjecture: u8,
    pub r: u32,
    pub c: u32,
    pub k: u32,
    pub sg: u32,
    pub expected: u32,
    pub agree: bool,
}

impl ScanRow {
    pub const CSV_HEADER: &'static str = "conjecture,r,c,k,sg,expected,agree";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.conjecture, self.r, self.c, self.k, self.sg, self.expected, self.agree
        )
    }

    pub fn parse_csv(line: &str) -> anyhow::Result<Self> {
        let f: Vec<&str> = line.trim().split(',').collect();
        if f.len() != 7 {
            bail!("scan row needs 7 fields: {line}");
        }
        let n = |i: usize| -> anyhow::Result<u32> {
            f[i].parse().with_context(|| format!("bad number in scan row: {line}"))
        };
        Ok(ScanRow {
            conjecture: n(0)? as u8,
            r: n(1)?,
            c: n(2)?,
            k: n(3)?,
            sg: n(4)?,
            expected: n(5)?,
            agree: f[6].parse().with_context(|| format!("bad flag in scan row: {line}"))?,
        })
    }
}

/// Evaluates every instance not already in `done`; rows come back in plan
/// order whatever the worker count.
pub fn scan_conjecture(
    plan: &ScanPlan,
    solver: &Solver,
    done: &[ScanRow],
) -> anyhow::Result<Vec<ScanRow>> {
    if solver.moveset().piece() != Some(PieceId::King) {
        bail!("conjecture scans play King");
    }
    let known: BTreeMap<(u32, u32, u32), &ScanRow> = done
        .iter()
        .filter(|row| row.conjecture == plan.conjecture)
        .map(|row| ((row.r, row.c, row.k), row))
        .collect();
    let rows = plan
        .instances
        .par_iter()
        .map(|&(r, c, k)| match known.get(&(r, c, k)) {
            Some(row) => (*row).clone(),
            None => {
                let sg = solver.sg(&gen_staircase(r, c, k));
                let expected = conjectured_value(plan.conjecture, r, k);
                ScanRow {
                    conjecture: plan.conjecture,
                    r,
                    c,
                    k,
                    sg,
                    expected,
                    agree: sg == expected,
                }
            }
        })
        .collect();
    Ok(rows)
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(ScanRow::CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(out, "{}", row.csv());
    }
    out
}

/// Reads rows written by [`scan_csv`]; the header is optional.
pub fn parse_scan_csv(text: &str) -> anyhow::Result<Vec<ScanRow>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != ScanRow::CSV_HEADER)
        .map(ScanRow::parse_csv)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub partition: Partition,
    pub pair: ConwayPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub piece: String,
    pub family: FamilyKind,
    pub bounds: String,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn csv(&self) -> String {
        let mut out = String::from("partition,normal,misere\n");
        for row in &self.rows {
            let _ = writeln!(out, "\"{}\",{},{}", row.partition, row.pair.normal, row.pair.misere);
        }
        out
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let _ = writeln!(out, "{}\t{}", row.partition, row.pair);
        }
        out
    }
}

/// Conway pairs of the family members, deduplicated and in graded order.
pub fn sweep(solver: &Solver, family: FamilyKind, bounds: &Bounds) -> SweepReport {
    let mut members = family_members(family, bounds);
    members.sort_by(|a, b| a.graded_cmp(b));
    members.dedup();
    let rows = members
        .par_iter()
        .map(|lam| SweepRow {
            partition: lam.clone(),
            pair: solver.pair(lam),
        })
        .collect();
    SweepReport {
        piece: solver.moveset().literal(),
        family,
        bounds: bounds.describe(family),
        rows,
    }
}
