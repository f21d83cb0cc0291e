//! Benchmark workloads. Each builds a fresh solver so timings include
//! cache fill.

use partition_games::cgh::Table1Column;
use partition_games::family::{rectangle, staircase};
use partition_games::{classify, partitions_up_to, CghReport, PieceId, Solver};

/// Sum of values over every `r x c` rectangle with `r, c <= n`.
pub fn rectangles(piece: PieceId, n: u32) -> u64 {
    let s = Solver::new(piece);
    (1..=n)
        .flat_map(|r| (1..=n).map(move |c| (r, c)))
        .map(|(r, c)| s.sg(&rectangle(r, c)) as u64)
        .sum()
}

/// Value of the staircase `S_k`.
pub fn staircase_value(piece: PieceId, k: u32) -> u32 {
    Solver::new(piece).sg(&staircase(k))
}

/// Number of P-positions among partitions of at most `cells` cells.
pub fn p_positions(piece: PieceId, cells: u32) -> usize {
    let s = Solver::new(piece);
    partitions_up_to(cells).filter(|l| s.sg(l) == 0).count()
}

/// One cell of the classification table.
pub fn classify_column(piece: PieceId, column: Table1Column) -> CghReport {
    let s = Solver::new(piece);
    classify(&s, column.family(), &column.bounds()).expect("table bounds are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_agree_with_known_values() {
        // rook rectangles are nim: sum over r,c <= 2 of (r-1)^(c-1)
        assert_eq!(rectangles(PieceId::Rook, 2), 2);
        assert_eq!(staircase_value(PieceId::King, 4), 0);
        // <1> is the only rook P-position below two cells
        assert_eq!(p_positions(PieceId::Rook, 1), 1);
        let r = classify_column(PieceId::Rook, Table1Column::ALL[0]);
        assert!(r.positions > 0);
    }
}
