use partition_games::cgh::{
    check, close_positions, gs_witnesses, report, table1_expected, with_subpartitions, Table1Column,
};
use partition_games::family::{gen_staircase, hook, rectangle, staircase};
use partition_games::{
    classify, partition, partitions_up_to, Bounds, CghReport, FamilyKind, Partition, PieceId,
    PositionSet, Property, Solver,
};

fn closed(p: PieceId, seeds: &[Partition]) -> PositionSet {
    close_positions(&p.moveset(), with_subpartitions(seeds)).unwrap()
}

fn stacked(top: u32, rest: u32, k: usize) -> Partition {
    let mut parts = vec![top];
    parts.extend(std::iter::repeat(rest).take(k));
    Partition::new(parts).unwrap()
}

#[test]
fn implications_hold_on_assorted_sets() {
    let seeds: Vec<Vec<Partition>> = vec![
        partitions_up_to(9).collect(),
        vec![rectangle(5, 4)],
        vec![staircase(7)],
        vec![gen_staircase(2, 3, 2)],
        vec![hook(6, 5)],
        vec![partition![9, 8, 8, 8, 8]],
    ];
    for p in PieceId::ALL {
        for s in &seeds {
            let set = closed(p, s);
            let r = report(&set, "sample", "-");
            assert!(r.implications_hold(), "{p}");
        }
    }
}

#[test]
fn properties_pass_to_closed_subsets() {
    for p in PieceId::ALL {
        let big = closed(p, &partitions_up_to(10).collect::<Vec<_>>());
        let pieces = [
            closed(p, &[rectangle(3, 3)]),
            closed(p, &[staircase(4)]),
            closed(p, &[partition![5, 3, 1]]),
            big.restrict(|l| l.cells() <= 6).unwrap(),
            big.restrict(|l| l.rows() <= 2).unwrap(),
        ];
        for prop in Property::ALL {
            if !check(&big, prop).holds() {
                continue;
            }
            for small in &pieces {
                assert!(small.positions().iter().all(|l| big.contains(l)));
                assert!(check(small, prop).holds(), "{p} {prop}");
            }
        }
    }
}

#[test]
fn rook_on_s1_boards() {
    let rook = Solver::new(PieceId::Rook);
    for ell in [3, 4] {
        for k in ell + 1..=ell + 3 {
            let set = PositionSet::close(&rook, [stacked(ell + 1, ell, k as usize)]).unwrap();
            assert!(check(&set, Property::Forced).holds(), "l={ell} k={k}");
            assert!(check(&set, Property::Tame).holds(), "l={ell} k={k}");
            assert!(!check(&set, Property::Miserable).holds(), "l={ell} k={k}");
        }
    }
}

#[test]
fn queen_on_s2_boards() {
    let queen = Solver::new(PieceId::Queen);
    for k in [7, 8] {
        let set = PositionSet::close(&queen, [stacked(5, 4, k)]).unwrap();
        assert!(check(&set, Property::Tame).holds(), "k={k}");
        assert!(check(&set, Property::Returnable).holds(), "k={k}");
        assert!(!check(&set, Property::Miserable).holds(), "k={k}");
        assert!(!check(&set, Property::Forced).holds(), "k={k}");
    }
}

fn assert_witnessed(r: &CghReport) {
    for prop in Property::ALL {
        match r.witness(prop) {
            Some(w) => {
                assert!(!r.holds(prop));
                assert_eq!(w.violated, prop);
            }
            None => assert!(r.holds(prop), "{} {} {prop} lacks a witness", r.piece, r.family),
        }
    }
}

#[test]
fn reference_table_reproduces() {
    for p in PieceId::ALL {
        let solver = Solver::new(p);
        for col in Table1Column::ALL {
            let r = classify(&solver, col.family(), &col.bounds()).unwrap();
            assert_eq!(r.region, table1_expected(p, col), "{p} {col:?}");
            assert_witnessed(&r);
        }
    }
}

#[test]
fn gs_witness_boards_are_in_the_gs_column() {
    let seeds = partition_games::cgh::family_seeds(FamilyKind::Gs, &Table1Column::Gs.bounds());
    for g in gs_witnesses() {
        assert!(seeds.contains(&g));
    }
    assert!(seeds.contains(&gen_staircase(6, 6, 2).subpartition(1, 0).unwrap()));
}

#[test]
fn reports_roundtrip_through_json() {
    let r = classify(&Solver::new(PieceId::Rook), FamilyKind::Rect, &Bounds::new(6)).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: CghReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["region"], "M∩F");
    assert!(v["witnesses"][0]["pair"].is_array());
}
