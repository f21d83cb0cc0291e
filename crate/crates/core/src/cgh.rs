//! Conway-Gurvich-Ho properties over finite, move-closed position sets.
//!
//! A verdict of "holds" only covers the positions that were scanned; a
//! verdict of "fails" always carries a concrete witness.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::partitions_up_to;
use crate::error::{Error, Result};
use crate::family::{gen_staircase, hook, rectangle, staircase};
use crate::moveset::{Move, Moveset, PieceId};
use crate::partition::Partition;
use crate::solver::{ConwayPair, Solver};

/// A finite set of positions closed under moves, with their Conway pairs.
#[derive(Clone, Debug)]
pub struct PositionSet {
    moveset: Moveset,
    positions: Vec<Partition>,
    pairs: HashMap<Partition, ConwayPair>,
}

impl PositionSet {
    /// Least move-closed superset of `seeds`, evaluated with `solver`.
    pub fn close(solver: &Solver, seeds: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let moveset = solver.moveset();
        let mut seen: HashSet<Partition> = HashSet::new();
        let mut stack = Vec::new();
        for s in seeds {
            if s.is_empty() {
                return Err(Error::invalid("the empty partition is not a position"));
            }
            if seen.insert(s.clone()) {
                stack.push(s);
            }
        }
        if seen.is_empty() {
            return Err(Error::invalid("at least one seed is required"));
        }
        while let Some(lam) = stack.pop() {
            for (_, target) in moveset.legal_moves(&lam) {
                if seen.insert(target.clone()) {
                    stack.push(target);
                }
            }
        }
        let mut positions: Vec<Partition> = seen.into_iter().collect();
        positions.sort_by(|a, b| a.graded_cmp(b));
        let pairs = positions
            .par_iter()
            .map(|p| (p.clone(), solver.pair(p)))
            .collect();
        Ok(PositionSet {
            moveset: moveset.clone(),
            positions,
            pairs,
        })
    }

    pub fn moveset(&self) -> &Moveset {
        &self.moveset
    }

    /// Members in graded order.
    pub fn positions(&self) -> &[Partition] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, lam: &Partition) -> bool {
        self.pairs.contains_key(lam)
    }

    pub fn pair(&self, lam: &Partition) -> Option<ConwayPair> {
        self.pairs.get(lam).copied()
    }

    /// A sub-collection of members; it must itself be move-closed.
    pub fn restrict(&self, keep: impl Fn(&Partition) -> bool) -> Result<PositionSet> {
        let positions: Vec<Partition> = self.positions.iter().filter(|p| keep(p)).cloned().collect();
        let members: HashSet<&Partition> = positions.iter().collect();
        for p in &positions {
            for (_, t) in self.moveset.legal_moves(p) {
                if !members.contains(&t) {
                    return Err(Error::invalid(format!("{p} moves to {t} outside the subset")));
                }
            }
        }
        let pairs = positions.iter().map(|p| (p.clone(), self.pairs[p])).collect();
        Ok(PositionSet {
            moveset: self.moveset.clone(),
            positions,
            pairs,
        })
    }

    fn successors(&self, lam: &Partition) -> Vec<(Move, Partition, ConwayPair)> {
        self.moveset
            .legal_moves(lam)
            .into_iter()
            .map(|(m, t)| {
                let p = self.pairs[&t];
                (m, t, p)
            })
            .collect()
    }
}

/// Closes `seeds` under `moveset` with a private solver.
pub fn close_positions(
    moveset: &Moveset,
    seeds: impl IntoIterator<Item = Partition>,
) -> Result<PositionSet> {
    PositionSet::close(&Solver::new(moveset.clone()), seeds)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Returnable,
    Forced,
    Domestic,
    Tame,
    Miserable,
    Pet,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Returnable,
        Property::Forced,
        Property::Domestic,
        Property::Tame,
        Property::Miserable,
        Property::Pet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Returnable => "returnable",
            Property::Forced => "forced",
            Property::Domestic => "domestic",
            Property::Tame => "tame",
            Property::Miserable => "miserable",
            Property::Pet => "pet",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A position that violates a property, with the offending move when the
/// property is about moves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub partition: Partition,
    pub pair: ConwayPair,
    pub violated: Property,
    #[serde(rename = "move", default, skip_serializing_if = "Option::is_none")]
    pub mv: Option<Move>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub successor: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub successor_pair: Option<ConwayPair>,
}

impl Witness {
    fn at(lam: &Partition, pair: ConwayPair, violated: Property) -> Self {
        Witness {
            partition: lam.clone(),
            pair,
            violated,
            mv: None,
            successor: None,
            successor_pair: None,
        }
    }

    fn via(mut self, mv: Move, successor: &Partition, pair: ConwayPair) -> Self {
        self.mv = Some(mv);
        self.successor = Some(successor.clone());
        self.successor_pair = Some(pair);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Holds on every scanned position.
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

const ZERO_ONE: ConwayPair = ConwayPair::new(0, 1);
const ONE_ZERO: ConwayPair = ConwayPair::new(1, 0);

fn opposite(p: ConwayPair) -> ConwayPair {
    if p == ZERO_ONE {
        ONE_ZERO
    } else {
        ZERO_ONE
    }
}

/// First violation in graded order, searched in parallel.
fn first_failure(
    set: &PositionSet,
    test: impl Fn(&Partition, ConwayPair) -> Option<Witness> + Sync,
) -> Verdict {
    match set
        .positions
        .par_iter()
        .find_map_first(|lam| test(lam, set.pairs[lam]))
    {
        Some(w) => Verdict::Fails(w),
        None => Verdict::Holds,
    }
}

pub fn check_returnable(set: &PositionSet) -> Verdict {
    first_failure(set, |lam, pair| {
        if !pair.is_swap() {
            return None;
        }
        for (mv, y, ypair) in set.successors(lam) {
            if set.moveset.is_terminal(&y) {
                continue;
            }
            if !set.successors(&y).iter().any(|(_, _, p)| *p == pair) {
                return Some(Witness::at(lam, pair, Property::Returnable).via(mv, &y, ypair));
            }
        }
        None
    })
}

pub fn check_forced(set: &PositionSet) -> Verdict {
    first_failure(set, |lam, pair| {
        if !pair.is_swap() {
            return None;
        }
        let want = opposite(pair);
        set.successors(lam)
            .into_iter()
            .find(|(_, _, p)| *p != want)
            .map(|(mv, y, p)| Witness::at(lam, pair, Property::Forced).via(mv, &y, p))
    })
}

pub fn check_domestic(set: &PositionSet) -> Verdict {
    first_failure(set, |lam, pair| {
        let bad = (pair.normal == 0 && pair.misere >= 2) || (pair.misere == 0 && pair.normal >= 2);
        bad.then(|| Witness::at(lam, pair, Property::Domestic))
    })
}

pub fn check_tame(set: &PositionSet) -> Verdict {
    first_failure(set, |lam, pair| {
        (!pair.is_swap() && !pair.is_symmetric()).then(|| Witness::at(lam, pair, Property::Tame))
    })
}

pub fn check_miserable(set: &PositionSet) -> Verdict {
    first_failure(set, |lam, pair| {
        if pair.is_swap() {
            return None;
        }
        let succ = set.successors(lam);
        let to01 = succ.iter().find(|(_, _, p)| *p == ZERO_ONE);
        let to10 = succ.iter().find(|(_, _, p)| *p == ONE_ZERO);
        match (to01, to10) {
            (Some((mv, y, p)), None) | (None, Some((mv, y, p))) => {
                Some(Witness::at(lam, pair, Property::Miserable).via(*mv, y, *p))
            }
            _ => None,
        }
    })
}

pub fn check_pet(set: &PositionSet) -> Verdict {
    first_failure(set, |lam, pair| {
        let ok = pair.is_swap() || (pair.is_symmetric() && pair.normal >= 2);
        (!ok).then(|| Witness::at(lam, pair, Property::Pet))
    })
}

pub fn check(set: &PositionSet, property: Property) -> Verdict {
    match property {
        Property::Returnable => check_returnable(set),
        Property::Forced => check_forced(set),
        Property::Domestic => check_domestic(set),
        Property::Tame => check_tame(set),
        Property::Miserable => check_miserable(set),
        Property::Pet => check_pet(set),
    }
}

/// The `P/M/T/D/N` side of a region: pet, miserable, tame, domestic, none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassRegion {
    Pet,
    Miserable,
    Tame,
    Domestic,
    NotDomestic,
}

/// The `F/R/N'` side of a region: forced, returnable, neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReturnRegion {
    Forced,
    Returnable,
    NotReturnable,
}

impl ClassRegion {
    pub fn symbol(self) -> &'static str {
        match self {
            ClassRegion::Pet => "P",
            ClassRegion::Miserable => "M",
            ClassRegion::Tame => "T",
            ClassRegion::Domestic => "D",
            ClassRegion::NotDomestic => "N",
        }
    }
}

impl ReturnRegion {
    pub fn symbol(self) -> &'static str {
        match self {
            ReturnRegion::Forced => "F",
            ReturnRegion::Returnable => "R",
            ReturnRegion::NotReturnable => "N'",
        }
    }
}

/// A cell of the classification: rendered class first, e.g. `M∩F`; parsing
/// accepts either order and `^` or `&` for `∩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Region {
    pub class: ClassRegion,
    pub ret: ReturnRegion,
}

impl Region {
    pub const fn new(class: ClassRegion, ret: ReturnRegion) -> Self {
        Region { class, ret }
    }

    /// Finest class first, then forced before returnable.
    pub fn from_verdicts(holds: impl Fn(Property) -> bool) -> Self {
        let class = if holds(Property::Pet) {
            ClassRegion::Pet
        } else if holds(Property::Miserable) {
            ClassRegion::Miserable
        } else if holds(Property::Tame) {
            ClassRegion::Tame
        } else if holds(Property::Domestic) {
            ClassRegion::Domestic
        } else {
            ClassRegion::NotDomestic
        };
        let ret = if holds(Property::Forced) {
            ReturnRegion::Forced
        } else if holds(Property::Returnable) {
            ReturnRegion::Returnable
        } else {
            ReturnRegion::NotReturnable
        };
        Region { class, ret }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∩{}", self.class.symbol(), self.ret.symbol())
    }
}

impl FromStr for Region {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(s, "expected a region such as M∩F or N∩N'");
        let halves: Vec<&str> = s.split(['∩', '^', '&']).map(str::trim).collect();
        let [a, b] = halves[..] else {
            return Err(bad());
        };
        let class = |t: &str| {
            Some(match t {
                "P" => ClassRegion::Pet,
                "M" => ClassRegion::Miserable,
                "T" => ClassRegion::Tame,
                "D" => ClassRegion::Domestic,
                "N" => ClassRegion::NotDomestic,
                _ => return None,
            })
        };
        let ret = |t: &str| {
            Some(match t {
                "F" => ReturnRegion::Forced,
                "R" => ReturnRegion::Returnable,
                "N'" | "N′" => ReturnRegion::NotReturnable,
                _ => return None,
            })
        };
        match (class(a), ret(b), ret(a), class(b)) {
            (Some(c), Some(r), _, _) | (_, _, Some(r), Some(c)) => Ok(Region::new(c, r)),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Region {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Region> for String {
    fn from(r: Region) -> String {
        r.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
}

/// Verdicts of all six properties on one position set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CghReport {
    pub piece: String,
    pub family: String,
    pub bounds: String,
    pub positions: usize,
    pub verdicts: BTreeMap<Property, Status>,
    pub region: Region,
    pub witnesses: Vec<Witness>,
}

impl CghReport {
    pub fn holds(&self, p: Property) -> bool {
        self.verdicts.get(&p) == Some(&Status::Holds)
    }

    pub fn witness(&self, p: Property) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.violated == p)
    }

    /// pet ⇒ tame ⇒ domestic, pet ⇒ miserable, forced ⇒ returnable.
    pub fn implications_hold(&self) -> bool {
        let h = |p| self.holds(p);
        let imp = |a: bool, b: bool| !a || b;
        imp(h(Property::Pet), h(Property::Tame))
            && imp(h(Property::Pet), h(Property::Miserable))
            && imp(h(Property::Tame), h(Property::Domestic))
            && imp(h(Property::Forced), h(Property::Returnable))
    }

    /// One CSV line: `piece,family,bounds,positions,region,<six statuses>`.
    pub fn csv_row(&self) -> String {
        let statuses: Vec<&str> = Property::ALL
            .iter()
            .map(|p| if self.holds(*p) { "holds" } else { "fails" })
            .collect();
        format!(
            "{},{},{},{},{},{}",
            self.piece,
            self.family,
            self.bounds.replace(',', ";"),
            self.positions,
            self.region,
            statuses.join(",")
        )
    }

    pub const CSV_HEADER: &'static str =
        "piece,family,bounds,positions,region,returnable,forced,domestic,tame,miserable,pet";
}

/// Runs all six checks on a closed set.
pub fn report(set: &PositionSet, family: &str, bounds: &str) -> CghReport {
    let verdicts: Vec<(Property, Verdict)> =
        Property::ALL.iter().map(|&p| (p, check(set, p))).collect();
    let region = Region::from_verdicts(|p| verdicts.iter().any(|(q, v)| *q == p && v.holds()));
    let report = CghReport {
        piece: set.moveset.literal(),
        family: family.to_string(),
        bounds: bounds.to_string(),
        positions: set.len(),
        verdicts: verdicts
            .iter()
            .map(|(p, v)| (*p, if v.holds() { Status::Holds } else { Status::Fails }))
            .collect(),
        region,
        witnesses: verdicts
            .iter()
            .filter_map(|(_, v)| v.witness().cloned())
            .collect(),
    };
    assert!(report.implications_hold(), "property implications violated");
    report
}

/// Family grammars understood by [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// All nonempty partitions up to a cell bound.
    Young,
    /// `gs(r,c,k)` for `r,c,k ≤ max`.
    Gs,
    /// `⟨c^r⟩` for `r,c ≤ max`.
    Rect,
    /// `S_k` for `k ≤ max`.
    Stair,
    /// Hooks `⟨c,1^{r−1}⟩` for `r,c ≤ max`.
    Hook,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Young => "young",
            FamilyKind::Gs => "gs",
            FamilyKind::Rect => "rect",
            FamilyKind::Stair => "stair",
            FamilyKind::Hook => "hook",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "young" | "all" | "y+" => FamilyKind::Young,
            "gs" | "gen_staircase" => FamilyKind::Gs,
            "rect" | "rectangle" => FamilyKind::Rect,
            "stair" | "staircase" => FamilyKind::Stair,
            "hook" => FamilyKind::Hook,
            _ => return Err(Error::parse(s, "expected young, gs, rect, stair or hook")),
        })
    }
}

/// Parameter caps for [`classify`]. `max` bounds the family parameters and,
/// for [`FamilyKind::Young`], the cell count. `extra` seeds are added as is.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max: u32,
    #[serde(default)]
    pub extra: Vec<Partition>,
}

impl Bounds {
    pub fn new(max: u32) -> Self {
        Bounds {
            max,
            extra: Vec::new(),
        }
    }

    pub fn with_extra(mut self, extra: impl IntoIterator<Item = Partition>) -> Self {
        self.extra.extend(extra);
        self
    }

    pub fn describe(&self, family: FamilyKind) -> String {
        let base = match family {
            FamilyKind::Young => format!("cells<={}", self.max),
            FamilyKind::Gs => format!("r,c,k<={}", self.max),
            FamilyKind::Rect | FamilyKind::Hook => format!("r,c<={}", self.max),
            FamilyKind::Stair => format!("k<={}", self.max),
        };
        if self.extra.is_empty() {
            base
        } else {
            format!("{base} +{} seeds", self.extra.len())
        }
    }
}

/// Family members within bounds, extra seeds last, without subpartitions.
pub fn family_members(family: FamilyKind, bounds: &Bounds) -> Vec<Partition> {
    let n = bounds.max;
    let mut seeds: Vec<Partition> = match family {
        FamilyKind::Young => partitions_up_to(n).collect(),
        FamilyKind::Stair => (1..=n).map(staircase).collect(),
        FamilyKind::Rect => (1..=n)
            .flat_map(|r| (1..=n).map(move |c| rectangle(r, c)))
            .collect(),
        FamilyKind::Hook => (1..=n).flat_map(|r| (1..=n).map(move |c| hook(r, c))).collect(),
        FamilyKind::Gs => (1..=n)
            .flat_map(|r| (1..=n).flat_map(move |c| (1..=n).map(move |k| gen_staircase(r, c, k))))
            .collect(),
    };
    seeds.extend(bounds.extra.iter().cloned());
    seeds
}

/// Seed partitions of a family within bounds, before move closure. Families
/// are taken closed under subpartitions, so every `λ[i,j]` of a member (and
/// of each extra seed) is included.
pub fn family_seeds(family: FamilyKind, bounds: &Bounds) -> Vec<Partition> {
    with_subpartitions(&family_members(family, bounds))
}

/// Every `λ[i,j]` of every seed, without duplicates, in graded order.
pub fn with_subpartitions(seeds: &[Partition]) -> Vec<Partition> {
    let mut all: Vec<Partition> = seeds
        .iter()
        .flat_map(Partition::subpartitions)
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    all.sort_by(|a, b| a.graded_cmp(b));
    all
}

/// Classifies `(M, family)` on the family members within `bounds`, closed
/// under subpartitions and moves.
pub fn classify(solver: &Solver, family: FamilyKind, bounds: &Bounds) -> Result<CghReport> {
    let set = PositionSet::close(solver, family_seeds(family, bounds))?;
    Ok(report(&set, family.name(), &bounds.describe(family)))
}

/// The four board columns of the reference classification table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Table1Column {
    Young,
    Gs,
    Rect,
    Stair,
}

impl Table1Column {
    pub const ALL: [Table1Column; 4] = [
        Table1Column::Young,
        Table1Column::Gs,
        Table1Column::Rect,
        Table1Column::Stair,
    ];

    pub fn family(self) -> FamilyKind {
        match self {
            Table1Column::Young => FamilyKind::Young,
            Table1Column::Gs => FamilyKind::Gs,
            Table1Column::Rect => FamilyKind::Rect,
            Table1Column::Stair => FamilyKind::Stair,
        }
    }

    /// Scan bounds used to reproduce the column.
    pub fn bounds(self) -> Bounds {
        match self {
            Table1Column::Young => Bounds::new(14)
                .with_extra(rook_queen_witnesses())
                .with_extra(gs_witnesses()),
            Table1Column::Gs => Bounds::new(3).with_extra(gs_witnesses()),
            Table1Column::Rect => Bounds::new(6),
            Table1Column::Stair => Bounds::new(8),
        }
    }
}

/// Generalized staircases whose subpositions separate King and Knight.
pub fn gs_witnesses() -> Vec<Partition> {
    vec![
        gen_staircase(2, 2, 4),
        gen_staircase(4, 3, 2),
        gen_staircase(6, 6, 2),
    ]
}

/// Boards separating Rook and Queen from domestic and returnable games.
pub fn rook_queen_witnesses() -> Vec<Partition> {
    let rows = |spec: &[(u32, usize)]| {
        Partition::new(
            spec.iter()
                .flat_map(|&(v, m)| std::iter::repeat(v).take(m))
                .collect(),
        )
        .expect("weakly decreasing")
    };
    vec![
        rows(&[(5, 1), (4, 3)]),
        rows(&[(9, 1), (8, 4)]),
        rows(&[(6, 1), (5, 4)]),
        rows(&[(11, 13), (10, 4)]),
    ]
}

/// Reference region of each `(piece, column)` cell.
pub fn table1_expected(piece: PieceId, column: Table1Column) -> Region {
    use ClassRegion::{Domestic as D, Miserable as M, NotDomestic as N, Pet as P};
    use ReturnRegion::{Forced as F, NotReturnable as NR, Returnable as R};
    use Table1Column::*;
    let (c, r) = match (piece, column) {
        (PieceId::Downright, Young) => (D, R),
        (PieceId::Downright, Gs) => (P, R),
        (PieceId::Downright, Rect | Stair) => (P, F),
        (PieceId::Pawn, Young | Gs | Stair) => (P, R),
        (PieceId::Pawn, Rect) => (P, F),
        (PieceId::Knight, Young | Gs) => (D, R),
        (PieceId::Knight, Rect) => (P, R),
        (PieceId::Knight, Stair) => (P, F),
        (PieceId::Rook, Young) => (N, NR),
        (PieceId::Rook, Gs | Rect) => (M, F),
        (PieceId::Rook, Stair) => (P, F),
        (PieceId::Queen, Young) => (N, NR),
        (PieceId::Queen, Gs | Rect) => (M, R),
        (PieceId::Queen, Stair) => (P, F),
        (PieceId::Bishop, _) => (P, F),
        (PieceId::King, Young | Gs) => (N, NR),
        (PieceId::King, Rect) => (M, F),
        (PieceId::King, Stair) => (P, R),
    };
    Region::new(c, r)
}
