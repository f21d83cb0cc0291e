//! Movesets: the finite steps and unbounded rays that define a chess piece.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A move `(down, right)`: from `λ` it leads to `λ[down, right]`.
pub type Move = (usize, usize);

/// The seven named pieces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PieceId {
    Downright,
    Pawn,
    Knight,
    Bishop,
    King,
    Rook,
    Queen,
}

impl PieceId {
    pub const ALL: [PieceId; 7] = [
        PieceId::Downright,
        PieceId::Pawn,
        PieceId::Knight,
        PieceId::Bishop,
        PieceId::King,
        PieceId::Rook,
        PieceId::Queen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PieceId::Downright => "downright",
            PieceId::Pawn => "pawn",
            PieceId::Knight => "knight",
            PieceId::Bishop => "bishop",
            PieceId::King => "king",
            PieceId::Rook => "rook",
            PieceId::Queen => "queen",
        }
    }

    pub fn moveset(self) -> Moveset {
        piece_moveset(self)
    }
}

impl fmt::Display for PieceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PieceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        PieceId::ALL
            .into_iter()
            .find(|p| p.name() == lower)
            .ok_or_else(|| Error::parse(s, "unknown piece"))
    }
}

/// Finite steps plus ray generators; a ray `(dy,dx)` stands for every
/// positive multiple `(k·dy, k·dx)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Moveset {
    steps: BTreeSet<(u32, u32)>,
    rays: BTreeSet<(u32, u32)>,
}

impl Moveset {
    pub fn new(
        steps: impl IntoIterator<Item = (u32, u32)>,
        rays: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let steps: BTreeSet<_> = steps.into_iter().collect();
        let rays: BTreeSet<_> = rays.into_iter().collect();
        if steps.contains(&(0, 0)) || rays.contains(&(0, 0)) {
            return Err(Error::invalid("(0,0) is not a move"));
        }
        if steps.is_empty() && rays.is_empty() {
            return Err(Error::invalid("a moveset needs at least one move"));
        }
        Ok(Moveset { steps, rays })
    }

    pub fn steps(&self) -> &BTreeSet<(u32, u32)> {
        &self.steps
    }

    pub fn rays(&self) -> &BTreeSet<(u32, u32)> {
        &self.rays
    }

    /// `M⁻¹`: every step and ray generator with coordinates swapped.
    pub fn inverse(&self) -> Moveset {
        Moveset {
            steps: self.steps.iter().map(|&(a, b)| (b, a)).collect(),
            rays: self.rays.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// The named piece this moveset equals, if any.
    pub fn piece(&self) -> Option<PieceId> {
        PieceId::ALL.into_iter().find(|p| &p.moveset() == self)
    }

    /// Moves usable from `λ`, sorted by `(y, x)` without duplicates.
    pub fn moves_at(&self, lam: &Partition) -> Vec<Move> {
        let mut out = Vec::new();
        self.moves_at_into(lam, &mut out);
        out
    }

    pub(crate) fn moves_at_into(&self, lam: &Partition, out: &mut Vec<Move>) {
        out.clear();
        for &(y, x) in &self.steps {
            let (y, x) = (y as usize, x as usize);
            if lam.is_defined(y, x) {
                out.push((y, x));
            }
        }
        for &(dy, dx) in &self.rays {
            let (dy, dx) = (dy as usize, dx as usize);
            // definedness is monotone along a ray
            let mut k = 1;
            while lam.is_defined(k * dy, k * dx) {
                out.push((k * dy, k * dx));
                k += 1;
            }
        }
        out.sort_unstable();
        out.dedup();
    }

    /// Every legal move from `λ` with its target position.
    pub fn legal_moves(&self, lam: &Partition) -> Vec<(Move, Partition)> {
        self.moves_at(lam)
            .into_iter()
            .map(|(y, x)| {
                let target = lam.subpartition(y, x).expect("move checked as defined");
                ((y, x), target)
            })
            .collect()
    }

    pub fn is_terminal(&self, lam: &Partition) -> bool {
        self.steps
            .iter()
            .chain(&self.rays)
            .all(|&(y, x)| !lam.is_defined(y as usize, x as usize))
    }

    /// Literal form: piece name for named pieces, otherwise
    /// `steps:(0,1),(1,0);rays:(1,1)`.
    pub fn literal(&self) -> String {
        match self.piece() {
            Some(p) => p.name().to_string(),
            None => self.custom_literal(),
        }
    }

    fn custom_literal(&self) -> String {
        let list = |s: &BTreeSet<(u32, u32)>| {
            s.iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut sections = Vec::new();
        if !self.steps.is_empty() {
            sections.push(format!("steps:{}", list(&self.steps)));
        }
        if !self.rays.is_empty() {
            sections.push(format!("rays:{}", list(&self.rays)));
        }
        sections.join(";")
    }
}

/// The moveset of a named piece.
pub fn piece_moveset(p: PieceId) -> Moveset {
    let (steps, rays): (&[(u32, u32)], &[(u32, u32)]) = match p {
        PieceId::Downright => (&[(0, 1), (1, 0)], &[]),
        PieceId::Pawn => (&[(0, 1), (1, 1)], &[]),
        PieceId::Knight => (&[(1, 2), (2, 1)], &[]),
        PieceId::Bishop => (&[], &[(1, 1)]),
        PieceId::King => (&[(0, 1), (1, 0), (1, 1)], &[]),
        PieceId::Rook => (&[], &[(1, 0), (0, 1)]),
        PieceId::Queen => (&[], &[(1, 0), (0, 1), (1, 1)]),
    };
    Moveset::new(steps.iter().copied(), rays.iter().copied()).expect("named pieces are valid")
}

impl From<PieceId> for Moveset {
    fn from(p: PieceId) -> Self {
        piece_moveset(p)
    }
}

impl fmt::Debug for Moveset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl fmt::Display for Moveset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

fn parse_pairs(body: &str, whole: &str) -> Result<Vec<(u32, u32)>> {
    let mut out = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::parse(rest, "expected '('"))?;
        let (inner, after) = open
            .split_once(')')
            .ok_or_else(|| Error::parse(whole, "unclosed '('"))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(inner, "expected a pair 'y,x'"))?;
        let num = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::parse(t.trim(), "expected a nonnegative integer"))
        };
        out.push((num(a)?, num(b)?));
        rest = after.trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Ok(out)
}

/// Accepts a piece name or `steps:(0,1),(1,0);rays:(1,1)` (either section optional).
impl FromStr for Moveset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(p) = s.parse::<PieceId>() {
            return Ok(p.moveset());
        }
        let mut steps = Vec::new();
        let mut rays = Vec::new();
        for section in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (kind, body) = section
                .split_once(':')
                .ok_or_else(|| Error::parse(section, "expected steps:... or rays:..."))?;
            match kind.trim() {
                "steps" => steps.extend(parse_pairs(body, s)?),
                "rays" => rays.extend(parse_pairs(body, s)?),
                other => return Err(Error::parse(other, "expected 'steps' or 'rays'")),
            }
        }
        Moveset::new(steps, rays).map_err(|e| Error::parse(s, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{rectangle, staircase};
    use crate::partition;

    #[test]
    fn named_movesets() {
        let king = piece_moveset(PieceId::King);
        assert_eq!(king.steps().iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 0), (1, 1)]);
        assert!(king.rays().is_empty());
        let rook = piece_moveset(PieceId::Rook);
        assert_eq!(rook.rays().iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        let knight = piece_moveset(PieceId::Knight);
        assert_eq!(knight.steps().iter().copied().collect::<Vec<_>>(), vec![(1, 2), (2, 1)]);
        for p in PieceId::ALL {
            assert_eq!(p.moveset().piece(), Some(p));
        }
    }

    #[test]
    fn inverse_examples() {
        let pawn_inv = PieceId::Pawn.moveset().inverse();
        assert_eq!(pawn_inv, Moveset::new([(1, 0), (1, 1)], []).unwrap());
        assert_eq!(PieceId::Queen.moveset().inverse(), PieceId::Queen.moveset());
        assert_eq!(PieceId::Knight.moveset().inverse(), PieceId::Knight.moveset());
        for p in PieceId::ALL {
            assert_eq!(p.moveset().inverse().inverse(), p.moveset());
        }
    }

    #[test]
    fn legal_move_examples() {
        assert_eq!(
            PieceId::Rook.moveset().legal_moves(&partition![3]),
            vec![((0, 1), partition![2]), ((0, 2), partition![1])]
        );
        assert!(PieceId::King.moveset().legal_moves(&partition![1]).is_empty());
        assert!(PieceId::King.moveset().is_terminal(&partition![1]));
        assert_eq!(
            PieceId::Knight.moveset().legal_moves(&partition![3, 3, 2]),
            vec![((1, 2), partition![1]), ((2, 1), partition![1])]
        );
    }

    #[test]
    fn queen_is_rook_plus_bishop() {
        let q = PieceId::Queen.moveset();
        let r = PieceId::Rook.moveset();
        let b = PieceId::Bishop.moveset();
        for lam in [rectangle(4, 5), staircase(5), partition![6, 3, 3, 1]] {
            let mut union = r.moves_at(&lam);
            let bm = b.moves_at(&lam);
            assert!(bm.iter().all(|m| !union.contains(m)));
            union.extend(bm);
            union.sort();
            assert_eq!(q.moves_at(&lam), union);
        }
    }

    #[test]
    fn rejects_zero_move() {
        assert!(Moveset::new([(0, 0)], []).is_err());
        assert!(Moveset::new([], [(0, 0)]).is_err());
        assert!(Moveset::new([], []).is_err());
    }

    #[test]
    fn custom_literals() {
        let m: Moveset = "steps:(0,1),(1,0);rays:(1,1)".parse().unwrap();
        assert_eq!(m.steps().len(), 2);
        assert_eq!(m.rays().len(), 1);
        assert_eq!(m.literal(), "steps:(0,1),(1,0);rays:(1,1)");
        assert_eq!(m.literal().parse::<Moveset>().unwrap(), m);
        assert_eq!("queen".parse::<Moveset>().unwrap(), PieceId::Queen.moveset());
        assert_eq!("rays:(1,0),(0,1)".parse::<Moveset>().unwrap().literal(), "rook");
        assert!("steps:(0,0)".parse::<Moveset>().is_err());
        assert!("steps:(1;2)".parse::<Moveset>().is_err());
        assert!("bogus".parse::<Moveset>().is_err());
    }

    #[test]
    fn duplicate_ray_and_step_is_one_move() {
        let m = Moveset::new([(0, 2)], [(0, 1)]).unwrap();
        assert_eq!(m.moves_at(&partition![4]), vec![(0, 1), (0, 2), (0, 3)]);
    }
}
