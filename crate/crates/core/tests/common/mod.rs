#![allow(dead_code)]

use partition_games::{Moveset, Partition};
use proptest::prelude::*;

/// Random nonempty partitions with at most `max_rows` rows and `max_cols`
/// columns.
pub fn arb_partition(max_rows: usize, max_cols: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_cols, 1..=max_rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Uncached SG value straight from the recursive definition.
pub fn naive_sg(m: &Moveset, lam: &Partition) -> u32 {
    let vals: Vec<u32> = m.legal_moves(lam).iter().map(|(_, t)| naive_sg(m, t)).collect();
    (0..).find(|v| !vals.contains(v)).unwrap()
}

/// Uncached misère value; terminals are worth 1.
pub fn naive_misere(m: &Moveset, lam: &Partition) -> u32 {
    let moves = m.legal_moves(lam);
    if moves.is_empty() {
        return 1;
    }
    let vals: Vec<u32> = moves.iter().map(|(_, t)| naive_misere(m, t)).collect();
    (0..).find(|v| !vals.contains(v)).unwrap()
}
