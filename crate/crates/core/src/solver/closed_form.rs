//! Closed-form values and outcome predicates for King, Rook and Queen on
//! structured boards. Each function checks its precondition and reports
//! `Error::Invalid` when it does not hold; none of them touch the solver
//! except [`is_ample_by_definition`].

use crate::error::{Error, Result};
use crate::family::staircase;
use crate::moveset::PieceId;
use crate::partition::Partition;

use super::{Outcome, Solver};

fn positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        Err(Error::invalid(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

fn nonempty(lam: &Partition) -> Result<()> {
    if lam.is_empty() {
        Err(Error::invalid("the empty partition is not a position"))
    } else {
        Ok(())
    }
}

/// King on `⟨c^r⟩`: 0 if both odd, 2 if both even, otherwise 1 or 3 as
/// `min(r,c)` is odd or even.
pub fn king_rect_sg(r: u32, c: u32) -> Result<u32> {
    positive("r", r)?;
    positive("c", c)?;
    Ok(match (r % 2, c % 2) {
        (1, 1) => 0,
        (0, 0) => 2,
        _ if r.min(c) % 2 == 1 => 1,
        _ => 3,
    })
}

/// King on the staircase `S_k`.
pub fn king_stair_sg(k: u32) -> Result<u32> {
    positive("k", k)?;
    Ok((k - 1) % 3)
}

/// King on `gs(r,r,k)` with `r` even.
pub fn king_gs_square_sg(r: u32, k: u32) -> Result<u32> {
    positive("r", r)?;
    positive("k", k)?;
    if r % 2 == 1 {
        return Err(Error::invalid("r must be even"));
    }
    Ok(if k == 1 { 2 } else { 1 })
}

/// Admissible King values of `gs(r,r,k)[i,j]` for even `r`, `k > 1` and
/// `i, j < r`: 0 when `i` and `j` are both odd, 1 when both even, and 2 or 3
/// otherwise. Outside the first `r` rows and columns only the zeros persist.
pub fn king_gs_two_cell_values(i: usize, j: usize) -> &'static [u32] {
    match (i % 2, j % 2) {
        (1, 1) => &[0],
        (0, 0) => &[1],
        _ => &[2, 3],
    }
}

fn all_multiplicities_even(lam: &Partition) -> bool {
    lam.multiplicities().iter().all(|&(_, m)| m % 2 == 0)
}

/// King outcome of `λ[i,j]` when every part of `λ` occurs an even number of
/// times: P iff `i` and `λ_{i+1} − j` are both odd.
pub fn king_even_outcomes(lam: &Partition, i: usize, j: usize) -> Result<Outcome> {
    nonempty(lam)?;
    if !all_multiplicities_even(lam) {
        return Err(Error::invalid("every part must occur an even number of times"));
    }
    if !lam.is_defined(i, j) {
        return Err(Error::UndefinedSubpartition(i, j));
    }
    let tail = lam.part(i) as usize - j;
    Ok(if i % 2 == 1 && tail % 2 == 1 {
        Outcome::P
    } else {
        Outcome::N
    })
}

/// One-sided verdict for partitions with all parts even: `λ[i,j]` is an
/// N-position for King whenever `j` is even. `false` means no verdict.
pub fn king_even_parts_is_n(lam: &Partition, i: usize, j: usize) -> Result<bool> {
    nonempty(lam)?;
    if lam.parts().iter().any(|p| p % 2 == 1) {
        return Err(Error::invalid("every part must be even"));
    }
    if !lam.is_defined(i, j) {
        return Err(Error::UndefinedSubpartition(i, j));
    }
    Ok(j % 2 == 0)
}

/// King outcome of `gs(r,c,k)[i,j]` for even `r`: P iff
/// `i·(c(k − ⌊i/r⌋) − j)` is odd.
pub fn king_gs_even_r_outcome(r: u32, c: u32, k: u32, i: usize, j: usize) -> Result<Outcome> {
    positive("r", r)?;
    positive("c", c)?;
    positive("k", k)?;
    if r % 2 == 1 {
        return Err(Error::invalid("r must be even"));
    }
    let (r64, c64, k64) = (r as u64, c as u64, k as u64);
    let (i64_, j64) = (i as u64, j as u64);
    let block = i64_ / r64;
    if block >= k64 || j64 >= c64 * (k64 - block) {
        return Err(Error::UndefinedSubpartition(i, j));
    }
    let width_left = c64 * (k64 - block) - j64;
    Ok(if i64_ % 2 == 1 && width_left % 2 == 1 {
        Outcome::P
    } else {
        Outcome::N
    })
}

/// Rook on `⟨c^r⟩` is two-pile Nim: `(r−1) ⊕ (c−1)`.
pub fn rook_rect_sg(r: u32, c: u32) -> Result<u32> {
    positive("r", r)?;
    positive("c", c)?;
    Ok((r - 1) ^ (c - 1))
}

/// Rook P-positions: `⟨1⟩`, and otherwise rank 0 with `λ[1,1] ≥ S_{r−1}`.
pub fn rook_is_p(lam: &Partition) -> Result<bool> {
    nonempty(lam)?;
    if lam.cells() == 1 {
        return Ok(true);
    }
    if lam.rank()? != 0 {
        return Ok(false);
    }
    let r = lam.rows() as u32;
    Ok(match lam.subpartition(1, 1) {
        Some(inner) => staircase(r - 1).young_leq(&inner),
        None => false,
    })
}

/// Ampleness by the closed form: rank 0 and `λ ≥ S_r`.
pub fn is_ample(lam: &Partition) -> Result<bool> {
    nonempty(lam)?;
    Ok(lam.rank()? == 0 && staircase(lam.rows() as u32).young_leq(lam))
}

/// Ampleness by definition: every row and every column of `λ` holds a Rook
/// P-subposition. `solver` must play Rook.
pub fn is_ample_by_definition(solver: &Solver, lam: &Partition) -> Result<bool> {
    nonempty(lam)?;
    if solver.moveset().piece() != Some(PieceId::Rook) {
        return Err(Error::invalid("ampleness is defined for Rook"));
    }
    let rows = lam.rows();
    let cols = lam.first() as usize;
    let mut row_hit = vec![false; rows];
    let mut col_hit = vec![false; cols];
    for (i, &len) in lam.parts().iter().enumerate() {
        for j in 0..len as usize {
            let sub = lam.subpartition(i, j).expect("inside the diagram");
            if solver.sg(&sub) == 0 {
                row_hit[i] = true;
                col_hit[j] = true;
            }
        }
    }
    Ok(row_hit.into_iter().all(|h| h) && col_hit.into_iter().all(|h| h))
}

/// Rook on `gs(2^ℓ, 2^ℓ, k)[i,j]`:
/// `2^ℓ·f + (((−i−1) mod 2^ℓ) ⊕ ((−j−1) mod 2^ℓ))` with
/// `f = k − 1 − ⌊i/2^ℓ⌋ − ⌊j/2^ℓ⌋` and nonnegative residues.
pub fn rook_gs_pow2_sg(ell: u32, k: u32, i: usize, j: usize) -> Result<u32> {
    positive("l", ell)?;
    positive("k", k)?;
    if ell > 15 {
        return Err(Error::invalid("l is limited to 15"));
    }
    let side = 1i64 << ell;
    let (i, j) = (i as i64, j as i64);
    let blocks = i / side + j / side;
    if blocks > k as i64 - 1 {
        return Err(Error::UndefinedSubpartition(i as usize, j as usize));
    }
    let f = k as i64 - 1 - blocks;
    let low = (-i - 1).rem_euclid(side) ^ (-j - 1).rem_euclid(side);
    u32::try_from(side * f + low).map_err(|_| Error::invalid("value exceeds u32"))
}

/// Rook or Queen on any `λ ≤ S_k` with `k = max(λ_1, r)` has value `k − 1`.
pub fn stair_bounded_sg(piece: PieceId, lam: &Partition) -> Result<u32> {
    nonempty(lam)?;
    if !matches!(piece, PieceId::Rook | PieceId::Queen) {
        return Err(Error::invalid("the staircase bound holds for Rook and Queen"));
    }
    let k = lam.first().max(lam.rows() as u32);
    if !lam.young_leq(&staircase(k)) {
        return Err(Error::invalid(format!("{lam:?} is not inside S_{k}")));
    }
    Ok(k - 1)
}

/// Sufficient condition for a Queen N-position:
/// `λ_1 − 1 > 2(r − 1)` or `r − 1 > 2(λ_1 − 1)`. `false` means no verdict.
pub fn queen_double_is_n(lam: &Partition) -> Result<bool> {
    nonempty(lam)?;
    let w = lam.first() as u64 - 1;
    let h = lam.rows() as u64 - 1;
    Ok(w > 2 * h || h > 2 * w)
}

/// Queen on the λ-stair `S_base^k` with `rank(base) = 0` and odd `k > 1` is an
/// N-position.
pub fn queen_lambda_stair_is_n(base: &Partition, k: u32) -> Result<bool> {
    nonempty(base)?;
    if base.rank()? != 0 {
        return Err(Error::invalid("the base must have rank 0"));
    }
    if k <= 1 || k % 2 == 0 {
        return Err(Error::invalid("k must be odd and greater than 1"));
    }
    Ok(true)
}

/// Wythoff P-positions: `{a, b} = {a_n, b_n}` for the complementary Beatty
/// pair `a_n = mex{a_m, b_m : m < n}`, `b_n = a_n + n`.
pub fn wythoff_is_p(a: u64, b: u64) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    let mut used = vec![false; (2 * lo + 2) as usize];
    let mut next = 0u64;
    for n in 0.. {
        while used.get(next as usize).copied().unwrap_or(false) {
            next += 1;
        }
        let an = next;
        if an > lo {
            return false;
        }
        let bn = an + n;
        if an == lo {
            return bn == hi;
        }
        used[an as usize] = true;
        if let Some(slot) = used.get_mut(bn as usize) {
            *slot = true;
        }
    }
    unreachable!()
}
