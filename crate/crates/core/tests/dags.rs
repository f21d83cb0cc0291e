mod common;

use partition_games::dag::{longest_path, minimal_equivalent, phi_knight, phi_pawn};
use partition_games::{
    build_dag, game_equivalent, partition, partition_equivalent, partitions_up_to, Partition,
    PieceId, Solver,
};

/// Row lengths of the Knight image by the explicit max formula (1-based):
/// `μ_j = max{t : 2t + j − 2 ≤ λ_{t + 2j − 2}}`.
fn phi_knight_formula(lam: &Partition) -> Partition {
    let r = lam.rows();
    let part = |k: usize| if k >= 1 { lam.part(k - 1) as usize } else { 0 };
    let mut parts = Vec::new();
    for j in 1.. {
        let len = (1..=r)
            .filter(|&t| 2 * t + j - 2 <= part(t + 2 * j - 2))
            .max()
            .unwrap_or(0);
        if len == 0 {
            break;
        }
        parts.push(len as u32);
    }
    Partition::new(parts).unwrap()
}

#[test]
fn move_counts_match_on_conjugate_with_inverse_moves() {
    for lam in partitions_up_to(16) {
        let conj = lam.conjugate();
        for p in PieceId::ALL {
            let m = p.moveset();
            assert_eq!(
                m.legal_moves(&lam).len(),
                m.inverse().legal_moves(&conj).len(),
                "{p} {lam}"
            );
        }
    }
}

#[test]
fn every_move_shrinks_the_board() {
    for lam in partitions_up_to(12) {
        for p in PieceId::ALL {
            for (_, t) in p.moveset().legal_moves(&lam) {
                assert!(t.young_lt(&lam), "{p} {lam} -> {t}");
            }
        }
    }
}

#[test]
fn queen_moves_split_into_rook_and_bishop() {
    let (q, r, b) = (PieceId::Queen.moveset(), PieceId::Rook.moveset(), PieceId::Bishop.moveset());
    for lam in partitions_up_to(14) {
        let queen = q.moves_at(&lam);
        let rook = r.moves_at(&lam);
        let bishop = b.moves_at(&lam);
        assert_eq!(queen.len(), rook.len() + bishop.len(), "{lam}");
        for mv in rook.iter().chain(&bishop) {
            assert!(queen.contains(mv));
        }
        assert!(rook.iter().all(|mv| !bishop.contains(mv)));
    }
}

#[test]
fn dags_grow_with_the_board() {
    let all: Vec<Partition> = partitions_up_to(12).collect();
    for p in PieceId::ALL {
        let m = p.moveset();
        let dags: Vec<_> = all.iter().map(|l| build_dag(&m, l)).collect();
        let lps: Vec<usize> = dags.iter().map(longest_path).collect();
        for (a, lam) in all.iter().enumerate() {
            for (b, beta) in all.iter().enumerate() {
                if lam.young_leq(beta) {
                    assert!(dags[a].nodes().is_subset(dags[b].nodes()), "{p} {lam} {beta}");
                    assert!(dags[a].edges().is_subset(dags[b].edges()), "{p} {lam} {beta}");
                    assert!(lps[a] <= lps[b]);
                }
            }
        }
    }
}

#[test]
fn sg_is_at_most_the_longest_path() {
    for p in PieceId::ALL {
        let solver = Solver::new(p);
        for lam in partitions_up_to(14) {
            let lp = longest_path(&build_dag(&p.moveset(), &lam));
            assert!(solver.sg(&lam) as usize <= lp, "{p} {lam}");
        }
    }
}

#[test]
fn pawn_and_knight_reduce_to_downright() {
    let (pawn, knight, down) = (
        Solver::new(PieceId::Pawn),
        Solver::new(PieceId::Knight),
        Solver::new(PieceId::Downright),
    );
    for lam in partitions_up_to(16) {
        assert_eq!(phi_knight(&lam), phi_knight_formula(&lam), "{lam}");
        assert_eq!(pawn.sg(&lam), down.sg(&phi_pawn(&lam)), "{lam}");
        let img = phi_knight(&lam);
        if !img.is_empty() {
            assert_eq!(knight.sg(&lam), down.sg(&img), "{lam}");
        }
    }
    let lam = partition![14, 14, 13, 12, 12, 12, 12, 9, 5, 3];
    assert_eq!(phi_knight(&lam), partition![6, 5, 4, 2, 1]);
    assert_eq!(phi_pawn(&lam), partition![14, 13, 11, 9, 8, 7, 6, 2]);
    assert_eq!(phi_knight_formula(&lam), partition![6, 5, 4, 2, 1]);
}

#[test]
fn reductions_are_game_equivalences() {
    let (pawn, knight, down) = (
        PieceId::Pawn.moveset(),
        PieceId::Knight.moveset(),
        PieceId::Downright.moveset(),
    );
    for lam in partitions_up_to(10) {
        assert!(game_equivalent(&pawn, &lam, &down, &phi_pawn(&lam)).is_some(), "{lam}");
        let img = phi_knight(&lam);
        assert!(game_equivalent(&knight, &lam, &down, &img).is_some(), "{lam}");
    }
}

#[test]
fn conjugate_with_inverse_moveset_is_equivalent() {
    for lam in partitions_up_to(9) {
        for p in PieceId::ALL {
            let m = p.moveset();
            let f = game_equivalent(&m, &lam, &m.inverse(), &lam.conjugate());
            assert!(f.is_some(), "{p} {lam}");
        }
    }
    let custom = "steps:(0,2),(1,3);rays:(2,1)".parse().unwrap();
    let lam = partition![7, 6, 6, 4, 3, 1];
    assert!(game_equivalent(&custom, &lam, &custom.inverse(), &lam.conjugate()).is_some());
}

/// Pawn boards that play like Downright on `lam`, searched up to `max` cells.
fn pawn_preimages(lam: &Partition, max: u32) -> Vec<Partition> {
    let (down, pawn) = (PieceId::Downright.moveset(), PieceId::Pawn.moveset());
    partitions_up_to(max)
        .filter(|mu| game_equivalent(&down, lam, &pawn, mu).is_some())
        .collect()
}

fn has_subposition(lam: &Partition, target: &Partition) -> bool {
    lam.subpartitions().any(|s| &s == target)
}

/// The Pawn board whose reduction is `lam`: `μ_i = λ_i + i − 1` (1-based).
fn unshift(lam: &Partition) -> Partition {
    Partition::new(lam.parts().iter().enumerate().map(|(i, &p)| p + i as u32).collect()).unwrap()
}

#[test]
fn downright_boards_with_pawn_preimages() {
    let (down, pawn) = (PieceId::Downright.moveset(), PieceId::Pawn.moveset());
    assert!(pawn_preimages(&partition![2, 2], 12).is_empty());
    for lam in partitions_up_to(12) {
        let blocked =
            has_subposition(&lam, &partition![2]) || has_subposition(&lam, &partition![1, 1]);
        if !blocked {
            let mu = unshift(&lam);
            assert_eq!(phi_pawn(&mu), lam);
            assert!(game_equivalent(&down, &lam, &pawn, &mu).is_some(), "{lam}");
        }
    }
    assert!(!has_subposition(&partition![4, 3, 2, 1], &partition![2]));
    // holding a ⟨2⟩ subposition does not rule a preimage out
    assert!(has_subposition(&partition![4, 1], &partition![2]));
    assert!(pawn_preimages(&partition![4, 1], 8).contains(&partition![4, 2]));
    for lam in partitions_up_to(8) {
        assert!(pawn_preimages(&phi_pawn(&lam), 8).contains(&lam), "{lam}");
    }
}

#[test]
fn downright_three_has_no_knight_preimage() {
    let (down, knight) = (PieceId::Downright.moveset(), PieceId::Knight.moveset());
    let three = partition![3];
    assert!(partitions_up_to(14).all(|mu| game_equivalent(&down, &three, &knight, &mu).is_none()));
    let col = partition![1, 1, 1];
    assert!(partitions_up_to(14).all(|mu| game_equivalent(&down, &col, &knight, &mu).is_none()));
    assert!(game_equivalent(&down, &partition![2, 2], &knight, &partition![4, 4, 4, 4]).is_some());
}

#[test]
fn partition_equivalence_classes() {
    let knight = PieceId::Knight.moveset();
    assert!(partition_equivalent(&knight, &partition![3, 3, 2], &partition![4, 3, 3]));
    assert!(!partition_equivalent(&knight, &partition![3, 3], &partition![2, 2, 2]));
    assert_eq!(minimal_equivalent(&knight, &partition![4, 3, 3]), partition![3, 3, 2]);
}

#[test]
fn downright_minimal_representatives() {
    // Downright reaches every cell, so a board is its own class
    let down = PieceId::Downright.moveset();
    for lam in partitions_up_to(10) {
        assert_eq!(minimal_equivalent(&down, &lam), lam);
    }
    for lam in partitions_up_to(10) {
        let m = minimal_equivalent(&PieceId::Knight.moveset(), &lam);
        assert!(m.young_leq(&lam));
        assert!(partition_equivalent(&PieceId::Knight.moveset(), &m, &lam));
    }
}
