//! Deterministic enumeration of nonempty partitions.
//!
//! Every enumeration yields partitions in graded order: by cell count, then
//! by parts in descending lexicographic order (`⟨3⟩, ⟨2,1⟩, ⟨1,1,1⟩`).

use crate::partition::Partition;

/// Which partitions to enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    /// All nonempty partitions with at most this many cells.
    MaxCells(u32),
    /// All nonempty `μ` with `μ ≤ λ` in Young order.
    Inside(Partition),
}

/// Iterator over partitions within a bound.
pub struct Partitions {
    inner: Inner,
}

enum Inner {
    Graded {
        max: u32,
        cells: u32,
        current: Option<Vec<u32>>,
    },
    Listed(std::vec::IntoIter<Partition>),
}

pub fn enumerate_partitions(bound: Bound) -> Partitions {
    let inner = match bound {
        Bound::MaxCells(max) => Inner::Graded {
            max,
            cells: 1,
            current: (max >= 1).then(|| vec![1]),
        },
        Bound::Inside(outer) => Inner::Listed(inside(&outer).into_iter()),
    };
    Partitions { inner }
}

/// Shorthand for `enumerate_partitions(Bound::MaxCells(n))`.
pub fn partitions_up_to(max_cells: u32) -> Partitions {
    enumerate_partitions(Bound::MaxCells(max_cells))
}

/// Shorthand for `enumerate_partitions(Bound::Inside(λ))`.
pub fn partitions_inside(outer: &Partition) -> Partitions {
    enumerate_partitions(Bound::Inside(outer.clone()))
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        match &mut self.inner {
            Inner::Listed(it) => it.next(),
            Inner::Graded {
                max,
                cells,
                current,
            } => {
                let out = current.take()?;
                let mut succ = out.clone();
                if next_in_grade(&mut succ) {
                    *current = Some(succ);
                } else if *cells < *max {
                    *cells += 1;
                    *current = Some(vec![*cells]);
                }
                Some(Partition::from_parts_unchecked(out))
            }
        }
    }
}

/// Steps to the next partition of the same integer in reverse lexicographic
/// order. Returns false after `⟨1^n⟩`.
fn next_in_grade(p: &mut Vec<u32>) -> bool {
    let mut rem = 0;
    while p.last() == Some(&1) {
        p.pop();
        rem += 1;
    }
    let Some(last) = p.pop() else {
        return false;
    };
    let v = last - 1;
    rem += last;
    while rem > 0 {
        let t = v.min(rem);
        p.push(t);
        rem -= t;
    }
    true
}

fn inside(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &[u32], row: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if !cur.is_empty() {
            out.push(Partition::from_parts_unchecked(cur.clone()));
        }
        if row == outer.len() {
            return;
        }
        let hi = cap.min(outer[row]);
        for v in 1..=hi {
            cur.push(v);
            rec(outer, row + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer.parts(), 0, u32::MAX, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.graded_cmp(b));
    out
}
