use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partition_games::solver::GridKind;
use partition_games::{Convention, FamilyKind, FamilySpec, Moveset, Partition, PieceId};

#[derive(Debug, Parser)]
#[command(name = "partition-games", version, about = "Impartial chess on Young diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; not every command supports every format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for sweeps, scans and classification.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Value cache loaded before and saved after the command.
    #[arg(long, global = true, env = "PARTITION_GAMES_CACHE")]
    pub cache_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sprague-Grundy value under normal play.
    Sg(Position),
    /// Conway pair (normal, misère).
    Pair(Position),
    /// Winner class of the player to move.
    Outcome {
        #[command(flatten)]
        pos: Position,
        #[arg(long, value_parser = parse_convention, default_value = "normal")]
        convention: Convention,
    },
    /// Value of every cell of the diagram.
    Grid {
        #[command(flatten)]
        pos: Position,
        #[arg(long, default_value = "sg")]
        kind: GridKind,
    },
    /// Board on which normal play mirrors misère play.
    Truncate(Position),
    /// Downright board equivalent to a Pawn or Knight board, checked by value.
    Reduce(Position),
    /// Searches a move-label bijection between two games. Defaults to the
    /// conjugate board with the transposed moveset.
    Equiv {
        #[command(flatten)]
        pos: Position,
        #[arg(long, conflicts_with = "to_moveset")]
        to_piece: Option<PieceId>,
        #[arg(long)]
        to_moveset: Option<Moveset>,
        #[arg(long, value_parser = parse_board)]
        to_partition: Option<Partition>,
    },
    /// Property verdicts and region of a piece on a family.
    Classify {
        #[command(flatten)]
        game: Game,
        #[arg(long)]
        family: FamilyKind,
        /// Family parameter bound (cell count for `young`).
        #[arg(long, visible_alias = "max-cells")]
        max: u32,
        /// Additional seed boards.
        #[arg(long = "extra", value_parser = parse_board)]
        extra: Vec<Partition>,
    },
    /// Recomputes the reference classification table and compares.
    Table1 {
        /// Restrict to one piece.
        #[arg(long)]
        piece: Option<PieceId>,
    },
    /// Checks a conjectured King formula on generalized staircases.
    ScanConjecture(ScanArgs),
    /// Conway pairs of every member of a family.
    Sweep {
        #[command(flatten)]
        game: Game,
        #[arg(long)]
        family: FamilyKind,
        #[arg(long, visible_alias = "max-cells")]
        max: u32,
    },
    /// Game DAG of a position.
    Dag(Position),
}

#[derive(Clone, Debug, Args)]
pub struct Game {
    /// Named piece.
    #[arg(long, conflicts_with = "moveset", required_unless_present = "moveset")]
    pub piece: Option<PieceId>,
    /// Custom moveset such as `steps:(0,1),(1,0);rays:(1,1)`.
    #[arg(long)]
    pub moveset: Option<Moveset>,
}

impl Game {
    pub fn moveset(&self) -> Moveset {
        match (&self.piece, &self.moveset) {
            (Some(p), _) => p.moveset(),
            (None, Some(m)) => m.clone(),
            (None, None) => unreachable!("clap requires one of --piece and --moveset"),
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct Position {
    #[command(flatten)]
    pub game: Game,
    /// Partition `5,4,4,2` or family literal such as `rect:3x4` or `gs:2x2x3`.
    #[arg(long, value_parser = parse_board)]
    pub partition: Partition,
}

#[derive(Clone, Debug, Args)]
pub struct ScanArgs {
    /// Conjecture number, 1 or 2.
    #[arg(long)]
    pub id: u8,
    /// Scan a single row-block height.
    #[arg(long)]
    pub r: Option<u32>,
    /// Scan a single column-block width (conjecture 2).
    #[arg(long)]
    pub c: Option<u32>,
    #[arg(long)]
    pub max_r: Option<u32>,
    #[arg(long)]
    pub max_c: Option<u32>,
    #[arg(long)]
    pub max_k: Option<u32>,
    /// CSV file to resume from and rewrite with the merged rows.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// A partition literal, or a family literal when it contains `:`.
pub fn parse_board(s: &str) -> partition_games::Result<Partition> {
    let p = if s.contains(':') {
        FamilySpec::from_str(s)?.build()?
    } else {
        s.parse()?
    };
    if p.is_empty() {
        return Err(partition_games::Error::Parse {
            token: s.to_string(),
            reason: "a position needs at least one cell".into(),
        });
    }
    Ok(p)
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    match s.to_ascii_lowercase().as_str() {
        "normal" => Ok(Convention::Normal),
        "misere" | "misère" => Ok(Convention::Misere),
        _ => Err(format!("unknown convention '{s}' (normal or misere)")),
    }
}
