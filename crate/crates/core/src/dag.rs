//! The labeled reachability DAG of a game `(M, λ)`.
//!
//! Nodes are coordinates `(i,j)` standing for the subposition `λ[i,j]`; an edge
//! `(i,j) → (i+y, j+x)` carries the move label `(y,x)`. Two games can be
//! compared either by exact DAG equality (partition-equivalence) or through a
//! label bijection that relabels one DAG into the other (game-equivalence).

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::enumerate::partitions_inside;
use crate::moveset::{Move, Moveset};
use crate::partition::Partition;

pub type Node = (usize, usize);

/// A labeled edge `(from, to, label)`.
pub type Edge = (Node, Node, Move);

/// Largest label set `game_equivalent` will search bijections over.
pub const MAX_BIJECTION_LABELS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameDag {
    nodes: BTreeSet<Node>,
    edges: BTreeSet<Edge>,
    moveset: Moveset,
}

impl GameDag {
    pub fn nodes(&self) -> &BTreeSet<Node> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn moveset(&self) -> &Moveset {
        &self.moveset
    }

    /// Node and edge sets agree; the generating movesets may differ.
    pub fn same_graph(&self, other: &GameDag) -> bool {
        self.nodes == other.nodes && self.edges == other.edges
    }

    /// DOT rendering with node ids `"i,j"` and edge attribute `label="y,x"`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph dag {\n");
        for (i, j) in &self.nodes {
            let _ = writeln!(out, "  \"{i},{j}\";");
        }
        for ((a, b), (c, d), (y, x)) in &self.edges {
            let _ = writeln!(out, "  \"{a},{b}\" -> \"{c},{d}\" [label=\"{y},{x}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Builds `DAG(M, λ)` by closing `(0,0)` under the moveset.
pub fn build_dag(moveset: &Moveset, lam: &Partition) -> GameDag {
    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    if lam.is_empty() {
        return GameDag {
            nodes,
            edges,
            moveset: moveset.clone(),
        };
    }
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    nodes.insert((0, 0));
    let mut moves = Vec::new();
    while let Some((i, j)) = queue.pop_front() {
        let here = lam.subpartition(i, j).expect("nodes are defined");
        moveset.moves_at_into(&here, &mut moves);
        for &(y, x) in &moves {
            let to = (i + y, j + x);
            edges.insert(((i, j), to, (y, x)));
            if nodes.insert(to) {
                queue.push_back(to);
            }
        }
    }
    GameDag {
        nodes,
        edges,
        moveset: moveset.clone(),
    }
}

/// Number of edges on a longest directed path.
pub fn longest_path(dag: &GameDag) -> usize {
    // every edge strictly increases i + j, so descending coordinate sum is a
    // reverse topological order
    let mut order: Vec<Node> = dag.nodes.iter().copied().collect();
    order.sort_by_key(|&(i, j)| std::cmp::Reverse(i + j));
    let mut out: BTreeMap<Node, Vec<Node>> = BTreeMap::new();
    for &(from, to, _) in &dag.edges {
        out.entry(from).or_default().push(to);
    }
    let mut depth: HashMap<Node, usize> = HashMap::with_capacity(order.len());
    for n in order {
        let d = out
            .get(&n)
            .map(|succ| succ.iter().map(|s| depth[s] + 1).max().unwrap_or(0))
            .unwrap_or(0);
        depth.insert(n, d);
    }
    depth.values().copied().max().unwrap_or(0)
}

/// `M|_λ`: the distinct labels that occur on edges.
pub fn edge_labels(dag: &GameDag) -> BTreeSet<Move> {
    dag.edges.iter().map(|&(_, _, l)| l).collect()
}

/// `DAG(M, λ) = DAG(M, μ)` as labeled node and edge sets.
pub fn partition_equivalent(moveset: &Moveset, lam: &Partition, mu: &Partition) -> bool {
    build_dag(moveset, lam).same_graph(&build_dag(moveset, mu))
}

/// Runs the marking procedure on `source` with label map `f` and reports
/// whether it produces exactly `target`.
fn marking_transforms(source: &GameDag, target: &GameDag, f: &BTreeMap<Move, Move>) -> bool {
    if source.nodes.len() != target.nodes.len() || source.edges.len() != target.edges.len() {
        return false;
    }
    let mut adjacency: BTreeMap<Node, Vec<(Node, Move)>> = BTreeMap::new();
    for &(from, to, label) in &source.edges {
        adjacency.entry(from).or_default().push((to, label));
    }
    let mut placed: BTreeMap<Node, Node> = BTreeMap::new();
    placed.insert((0, 0), (0, 0));
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some(n) = queue.pop_front() {
        let base = placed[&n];
        for &(to, label) in adjacency.get(&n).map(Vec::as_slice).unwrap_or(&[]) {
            if placed.contains_key(&to) {
                continue;
            }
            let (fy, fx) = f[&label];
            placed.insert(to, (base.0 + fy, base.1 + fx));
            queue.push_back(to);
        }
    }
    let nodes: BTreeSet<Node> = placed.values().copied().collect();
    if nodes != target.nodes {
        return false;
    }
    let edges: BTreeSet<Edge> = source
        .edges
        .iter()
        .map(|(from, to, label)| (placed[from], placed[to], f[label]))
        .collect();
    edges == target.edges
}

/// Visits every permutation of `items` in lexicographic index order.
fn for_each_permutation<T: Copy>(items: &[T], mut visit: impl FnMut(&[T]) -> bool) -> bool {
    fn rec<T: Copy>(
        items: &[T],
        used: &mut Vec<bool>,
        cur: &mut Vec<T>,
        visit: &mut dyn FnMut(&[T]) -> bool,
    ) -> bool {
        if cur.len() == items.len() {
            return visit(cur);
        }
        for k in 0..items.len() {
            if used[k] {
                continue;
            }
            used[k] = true;
            cur.push(items[k]);
            let stop = rec(items, used, cur, visit);
            cur.pop();
            used[k] = false;
            if stop {
                return true;
            }
        }
        false
    }
    rec(items, &mut vec![false; items.len()], &mut Vec::new(), &mut visit)
}

/// Searches for a label bijection `f: M1|_λ → M2|_μ` under which the marking
/// procedure turns `DAG(M1, λ)` into `DAG(M2, μ)`. Returns the first witness
/// in lexicographic order, or `None`.
pub fn game_equivalent(
    m1: &Moveset,
    lam: &Partition,
    m2: &Moveset,
    mu: &Partition,
) -> Option<BTreeMap<Move, Move>> {
    let d1 = build_dag(m1, lam);
    let d2 = build_dag(m2, mu);
    game_equivalent_dags(&d1, &d2)
}

pub fn game_equivalent_dags(d1: &GameDag, d2: &GameDag) -> Option<BTreeMap<Move, Move>> {
    let l1: Vec<Move> = edge_labels(d1).into_iter().collect();
    let l2: Vec<Move> = edge_labels(d2).into_iter().collect();
    if l1.len() != l2.len() || l1.len() > MAX_BIJECTION_LABELS {
        return None;
    }
    if d1.nodes.len() != d2.nodes.len() || d1.edges.len() != d2.edges.len() {
        return None;
    }
    let mut found = None;
    for_each_permutation(&l2, |image| {
        let f: BTreeMap<Move, Move> = l1.iter().copied().zip(image.iter().copied()).collect();
        if marking_transforms(d1, d2, &f) {
            found = Some(f);
            true
        } else {
            false
        }
    });
    found
}

/// The Young-minimum `μ ≤ λ` that is partition-equivalent to `λ`.
pub fn minimal_equivalent(moveset: &Moveset, lam: &Partition) -> Partition {
    let target = build_dag(moveset, lam);
    // the class has a Young minimum and graded order reaches it first
    partitions_inside(lam)
        .find(|mu| build_dag(moveset, mu).same_graph(&target))
        .unwrap_or_else(|| lam.clone())
}

/// `⟨λ1, λ2 − 1, …, λr − r + 1⟩` with nonpositive entries dropped; Pawn on `λ`
/// plays like Downright on the result.
pub fn phi_pawn(lam: &Partition) -> Partition {
    let parts: Vec<u32> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p.saturating_sub(i as u32))
        .take_while(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("shifted parts stay weakly decreasing")
}

/// The `μ` with `μ[i,j]` defined iff `λ[2i+j, 2j+i]` is; Knight on `λ` plays
/// like Downright on `μ`.
pub fn phi_knight(lam: &Partition) -> Partition {
    let mut parts = Vec::new();
    for i in 0.. {
        let mut len = 0u32;
        while lam.is_defined(2 * i + len as usize, 2 * len as usize + i) {
            len += 1;
        }
        if len == 0 {
            break;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("row lengths of the image are weakly decreasing")
}
