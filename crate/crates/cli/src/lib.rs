//! Command-line front end for partition games: single evaluations, value
//! grids, reductions, classification and deterministic parallel scans.
//!
//! [`run`] renders into any writer so the binary stays thin and tests can
//! drive commands in-process.

mod args;
pub mod report;
pub mod scan;

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context};
use partition_games::cgh::{table1_expected, Table1Column};
use partition_games::dag::{phi_knight, phi_pawn};
use partition_games::solver::{truncate, GridExport};
use partition_games::{
    build_dag, classify, game_equivalent, Bounds, Moveset, PieceId, SgCache, Solver,
};

pub use args::{parse_board, Cli, Command, Format, Game, Position, ScanArgs};
use report::{
    EquivReport, OutcomeReport, PairReport, ReduceReport, SgReport, Table1Report, Table1Row,
    TruncateReport,
};
use scan::{parse_scan_csv, scan_conjecture, scan_csv, sweep, ScanPlan};

/// How a successful run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A verification command found a disagreement.
    Mismatch,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
        }
    }

    fn from_agreement(agree: bool) -> Self {
        if agree {
            Status::Ok
        } else {
            Status::Mismatch
        }
    }
}

/// Exit code for errors: every error is bad input or an unusable file.
pub const EXIT_INVALID: u8 = 2;

/// Runs one command, loading and saving the value cache around it.
pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<Status> {
    let cache = Arc::new(SgCache::new());
    if let Some(path) = &cli.cache_file {
        if path.exists() {
            let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
            cache
                .import(BufReader::new(file))
                .with_context(|| format!("loading cache {}", path.display()))?;
        }
    }
    // rendered inside the worker pool, written out afterwards
    let mut buf = Vec::new();
    let status = with_workers(cli.workers, || dispatch(cli, &cache, &mut buf))??;
    out.write_all(&buf)?;
    if let Some(path) = &cli.cache_file {
        save_cache(&cache, path)?;
    }
    Ok(status)
}

fn save_cache(cache: &SgCache, path: &Path) -> anyhow::Result<()> {
    let file = File::create(path).with_context(|| format!("writing {}", path.display()))?;
    let mut w = BufWriter::new(file);
    cache.export(&mut w)?;
    w.flush()?;
    Ok(())
}

fn with_workers<T: Send>(
    workers: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> anyhow::Result<T> {
    match workers {
        None => Ok(f()),
        Some(0) => bail!("--workers must be positive"),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build()?;
            Ok(pool.install(f))
        }
    }
}

fn unsupported(cmd: &str, format: Format) -> anyhow::Error {
    anyhow::anyhow!("{cmd} does not support --format {format:?}")
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(cli: &Cli, cache: &Arc<SgCache>, out: &mut dyn Write) -> anyhow::Result<Status> {
    let solver = |m: Moveset| Solver::with_cache(m, Arc::clone(cache));
    let fmt = cli.format;
    match &cli.command {
        Command::Sg(pos) => {
            let s = solver(pos.game.moveset());
            let r = SgReport {
                piece: s.moveset().literal(),
                partition: pos.partition.clone(),
                sg: s.sg(&pos.partition),
            };
            match fmt {
                Format::Text => writeln!(out, "{}", r.sg)?,
                Format::Json => json_line(out, &r)?,
                f => return Err(unsupported("sg", f)),
            }
        }
        Command::Pair(pos) => {
            let s = solver(pos.game.moveset());
            let r = PairReport {
                piece: s.moveset().literal(),
                partition: pos.partition.clone(),
                pair: s.pair(&pos.partition),
            };
            match fmt {
                Format::Text => writeln!(out, "{}", r.pair)?,
                Format::Json => json_line(out, &r)?,
                f => return Err(unsupported("pair", f)),
            }
        }
        Command::Outcome { pos, convention } => {
            let s = solver(pos.game.moveset());
            let r = OutcomeReport {
                piece: s.moveset().literal(),
                partition: pos.partition.clone(),
                convention: *convention,
                outcome: s.outcome(&pos.partition, *convention),
            };
            match fmt {
                Format::Text => writeln!(out, "{}", r.outcome)?,
                Format::Json => json_line(out, &r)?,
                f => return Err(unsupported("outcome", f)),
            }
        }
        Command::Grid { pos, kind } => {
            let s = solver(pos.game.moveset());
            let export = GridExport::new(&s, &pos.partition, *kind);
            match fmt {
                Format::Text => write!(out, "{}", export.grid.render())?,
                Format::Json => json_line(out, &export)?,
                f => return Err(unsupported("grid", f)),
            }
        }
        Command::Truncate(pos) => {
            let m = pos.game.moveset();
            let r = TruncateReport {
                piece: m.literal(),
                partition: pos.partition.clone(),
                truncated: truncate(&m, &pos.partition)?,
            };
            match fmt {
                Format::Text => writeln!(out, "{}", r.truncated)?,
                Format::Json => json_line(out, &r)?,
                f => return Err(unsupported("truncate", f)),
            }
        }
        Command::Reduce(pos) => {
            let m = pos.game.moveset();
            let image = match m.piece() {
                Some(PieceId::Pawn) => phi_pawn(&pos.partition),
                Some(PieceId::Knight) => phi_knight(&pos.partition),
                _ => bail!("reduce applies to pawn and knight"),
            };
            let s = solver(m);
            let down = solver(PieceId::Downright.moveset());
            let r = ReduceReport::new(&s, &down, &pos.partition, image);
            match fmt {
                Format::Text => writeln!(out, "{}\t{} {}", r.image, r.sg, r.image_sg)?,
                Format::Json => json_line(out, &r)?,
                f => return Err(unsupported("reduce", f)),
            }
            return Ok(Status::from_agreement(r.agree));
        }
        Command::Equiv {
            pos,
            to_piece,
            to_moveset,
            to_partition,
        } => {
            let m1 = pos.game.moveset();
            let m2 = match (to_piece, to_moveset) {
                (Some(p), _) => p.moveset(),
                (None, Some(m)) => m.clone(),
                (None, None) => m1.inverse(),
            };
            let target = match to_partition {
                Some(p) => p.clone(),
                None => pos.partition.conjugate(),
            };
            let mapping = game_equivalent(&m1, &pos.partition, &m2, &target);
            let r = EquivReport {
                piece: m1.literal(),
                partition: pos.partition.clone(),
                to_piece: m2.literal(),
                to_partition: target,
                mapping: mapping.map(|f| f.into_iter().collect()),
            };
            match fmt {
                Format::Text => match &r.mapping {
                    Some(f) => {
                        let pairs: Vec<String> = f
                            .iter()
                            .map(|((a, b), (c, d))| format!("({a},{b})->({c},{d})"))
                            .collect();
                        writeln!(out, "equivalent {}", pairs.join(" "))?
                    }
                    None => writeln!(out, "not equivalent")?,
                },
                Format::Json => json_line(out, &r)?,
                f => return Err(unsupported("equiv", f)),
            }
            return Ok(Status::from_agreement(r.mapping.is_some()));
        }
        Command::Classify {
            game,
            family,
            max,
            extra,
        } => {
            let s = solver(game.moveset());
            let bounds = Bounds::new(*max).with_extra(extra.iter().cloned());
            let r = classify(&s, *family, &bounds)?;
            match fmt {
                Format::Text => write!(out, "{}", report::cgh_text(&r))?,
                Format::Json => json_line(out, &r)?,
                Format::Csv => {
                    writeln!(out, "{}", partition_games::CghReport::CSV_HEADER)?;
                    writeln!(out, "{}", r.csv_row())?;
                }
                f => return Err(unsupported("classify", f)),
            }
        }
        Command::Table1 { piece } => {
            let pieces: Vec<PieceId> = match piece {
                Some(p) => vec![*p],
                None => PieceId::ALL.to_vec(),
            };
            let mut rows = Vec::new();
            for p in pieces {
                let s = solver(p.moveset());
                for col in Table1Column::ALL {
                    let got = classify(&s, col.family(), &col.bounds())?;
                    let expected = table1_expected(p, col);
                    rows.push(Table1Row {
                        piece: p,
                        column: col,
                        expected,
                        agree: got.region == expected,
                        report: got,
                    });
                }
            }
            let table = Table1Report { rows };
            match fmt {
                Format::Text => write!(out, "{}", table.text())?,
                Format::Json => json_line(out, &table)?,
                Format::Csv => write!(out, "{}", table.csv())?,
                f => return Err(unsupported("table1", f)),
            }
            return Ok(Status::from_agreement(table.all_agree()));
        }
        Command::ScanConjecture(args) => {
            let plan = ScanPlan::new(args)?;
            let done = match &args.output {
                Some(path) if path.exists() => parse_scan_csv(
                    &std::fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?,
                )?,
                _ => Vec::new(),
            };
            let rows = scan_conjecture(&plan, &solver(PieceId::King.moveset()), &done)?;
            let csv = scan_csv(&rows);
            if let Some(path) = &args.output {
                std::fs::write(path, &csv).with_context(|| format!("writing {}", path.display()))?;
            }
            match fmt {
                Format::Text | Format::Csv => write!(out, "{csv}")?,
                Format::Json => json_line(out, &rows)?,
                f => return Err(unsupported("scan-conjecture", f)),
            }
        }
        Command::Sweep { game, family, max } => {
            let r = sweep(&solver(game.moveset()), *family, &Bounds::new(*max));
            match fmt {
                Format::Text => write!(out, "{}", r.text())?,
                Format::Csv => write!(out, "{}", r.csv())?,
                Format::Json => json_line(out, &r)?,
                f => return Err(unsupported("sweep", f)),
            }
        }
        Command::Dag(pos) => {
            let dag = build_dag(&pos.game.moveset(), &pos.partition);
            match fmt {
                Format::Dot | Format::Text => write!(out, "{}", dag.to_dot())?,
                f => return Err(unsupported("dag", f)),
            }
        }
    }
    Ok(Status::Ok)
}
