use crate::error::{Error, Result};
use crate::moveset::Moveset;
use crate::partition::Partition;

/// Truncation of a non-terminal game: row `i` keeps the cells `(i,j)` whose
/// subposition `λ[i,j]` still has a move. Normal play on the result mirrors
/// misère play on `λ`.
pub fn truncate(moveset: &Moveset, lam: &Partition) -> Result<Partition> {
    if lam.is_empty() {
        return Err(Error::invalid("the empty partition is not a position"));
    }
    if moveset.is_terminal(lam) {
        return Err(Error::Terminal(lam.to_string()));
    }
    let mut parts = Vec::new();
    for (i, &len) in lam.parts().iter().enumerate() {
        // non-terminality is monotone along a row, so scan from the right
        let keep = (0..len as usize)
            .rev()
            .find(|&j| {
                let sub = lam.subpartition(i, j).expect("cell inside the row");
                !moveset.is_terminal(&sub)
            })
            .map_or(0, |j| j as u32 + 1);
        if keep == 0 {
            break;
        }
        parts.push(keep);
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moveset::PieceId::*;
    use crate::partition;

    #[test]
    fn examples() {
        assert_eq!(
            truncate(&Knight.moveset(), &partition![5, 5, 5, 3, 3, 2, 1]).unwrap(),
            partition![4, 3, 2, 1]
        );
        assert_eq!(
            truncate(&Rook.moveset(), &partition![3, 3, 2]).unwrap(),
            partition![3, 2, 1]
        );
        assert!(matches!(
            truncate(&King.moveset(), &partition![1]),
            Err(Error::Terminal(_))
        ));
    }

    #[test]
    fn pawn_drops_the_last_column_of_each_row() {
        // λ[0,2] = ⟨1,1⟩ is terminal for Pawn
        assert_eq!(truncate(&Pawn.moveset(), &partition![3, 3]).unwrap(), partition![2, 2]);
    }
}
