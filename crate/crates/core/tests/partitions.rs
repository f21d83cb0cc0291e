mod common;

use common::arb_partition;
use partition_games::family::gen_staircase;
use partition_games::{partition, partitions_inside, partitions_up_to, Partition};
use proptest::prelude::*;

#[test]
fn conjugate_is_an_involution() {
    for lam in partitions_up_to(20) {
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert_eq!(lam.conjugate().cells(), lam.cells());
    }
}

#[test]
fn conjugate_swaps_subpartition_indices() {
    for lam in partitions_up_to(16) {
        let conj = lam.conjugate();
        for i in 0..=lam.rows() {
            for j in 0..=lam.first() as usize {
                let left = lam.subpartition(i, j).map(|p| p.conjugate());
                let right = conj.subpartition(j, i);
                if let (Some(l), Some(r)) = (left, right) {
                    assert_eq!(l, r, "{lam} at [{i},{j}]");
                }
            }
        }
    }
    let lam = partition![5, 4, 4, 2, 1, 1];
    assert_eq!(lam.subpartition(0, 2).unwrap().conjugate(), lam.conjugate().subpartition(2, 0).unwrap());
}

#[test]
fn chained_subpartitions_add_offsets() {
    for lam in partitions_up_to(16) {
        for (i1, &len) in lam.parts().iter().enumerate() {
            for j1 in 0..len as usize {
                let mid = lam.subpartition(i1, j1).unwrap();
                for (i2, &len2) in mid.parts().iter().enumerate() {
                    for j2 in 0..len2 as usize {
                        assert_eq!(
                            mid.subpartition(i2, j2),
                            lam.subpartition(i1 + i2, j1 + j2),
                            "{lam} [{i1},{j1}][{i2},{j2}]"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn removing_corners_drops_one_cell_each() {
    for lam in partitions_up_to(18).filter(|l| l.cells() > 1) {
        let corners = lam.corners();
        let rest = lam.remove_corners().unwrap();
        assert_eq!(rest.cells() + corners.len() as u64, lam.cells(), "{lam}");
        assert!(rest.young_lt(&lam));
        for (i, j) in corners {
            assert_eq!(lam.subpartition(i, j), Some(Partition::unit()));
        }
    }
}

#[test]
fn young_order_is_a_partial_order() {
    let all: Vec<Partition> = partitions_up_to(9).collect();
    for a in &all {
        assert!(a.young_leq(a));
        for b in &all {
            if a.young_leq(b) && b.young_leq(a) {
                assert_eq!(a, b);
            }
            if a.young_leq(b) {
                for c in &all {
                    if b.young_leq(c) {
                        assert!(a.young_leq(c), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn young_ideal_enumeration_matches_filter() {
    let outer = partition![5, 4, 2, 2];
    let inside: Vec<Partition> = partitions_inside(&outer).collect();
    let filtered: Vec<Partition> = partitions_up_to(outer.cells() as u32)
        .filter(|p| p.young_leq(&outer))
        .collect();
    assert_eq!(inside.len(), filtered.len());
    for p in &filtered {
        assert!(inside.contains(p));
    }
}

#[test]
fn generalized_staircase_rows() {
    for r in 1..=6u32 {
        for c in 1..=6u32 {
            for k in 1..=6u32 {
                let g = gen_staircase(r, c, k);
                assert_eq!(g.rows(), (r * k) as usize);
                for i in 1..=(r * k) {
                    // i is 1-based here
                    assert_eq!(g.part(i as usize - 1), c * (k - (i - 1) / r));
                }
            }
        }
    }
}

#[test]
fn literals_roundtrip() {
    for lam in partitions_up_to(10) {
        let text = lam.to_string();
        assert_eq!(text.parse::<Partition>().unwrap(), lam);
    }
    assert!("3,4".parse::<Partition>().is_err());
    assert!("3,x".parse::<Partition>().is_err());
}

proptest! {
    #[test]
    fn large_conjugates_roundtrip(lam in arb_partition(30, 30)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().rows(), lam.first() as usize);
    }

    #[test]
    fn subpartitions_sit_below(lam in arb_partition(12, 12), i in 0usize..12, j in 0usize..12) {
        if let Some(sub) = lam.subpartition(i, j) {
            prop_assert!(sub.young_leq(&lam));
            prop_assert!((i, j) == (0, 0) || sub.young_lt(&lam));
            prop_assert_eq!(sub.conjugate(), lam.conjugate().subpartition(j, i).unwrap());
        }
    }

    #[test]
    fn rank_and_durfee(lam in arb_partition(15, 15)) {
        let rank = lam.rank().unwrap();
        prop_assert_eq!(rank, lam.first().abs_diff(lam.rows() as u32));
        let d = lam.durfee().unwrap();
        prop_assert!(d >= 1 && lam.part(d as usize - 1) >= d);
        prop_assert!(lam.part(d as usize) <= d);
        prop_assert_eq!(lam.conjugate().durfee().unwrap(), d);
    }
}
