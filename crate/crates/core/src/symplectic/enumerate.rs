//! Exhaustive enumeration of Lagrangian subspaces.
//!
//! Each subspace has a unique reduced echelon basis. For every choice of `n`
//! pivot columns the basis is built row by row; a row is kept only if it pairs
//! to zero with every earlier row, so partial bases are always isotropic.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::ground::GroundSet;

use super::LagrangianSubspace;

/// Largest ground set accepted by [`enumerate_lagrangians`].
pub const MAX_ENUMERATION: usize = 5;

/// `Π_{i=1..n} (2^i + 1)`, the number of Lagrangian subspaces of `V_E`.
pub fn lagrangian_count(n: usize) -> u64 {
    (1..=n as u32).map(|i| (1u64 << i) + 1).product()
}

fn pairs(u: u64, v: u64, n: usize) -> bool {
    let low = (1u64 << n) - 1;
    (((u & low) & (v >> n)) ^ ((u >> n) & (v & low))).count_ones() % 2 == 1
}

/// Every Lagrangian subspace of `V_E`, sorted by canonical basis.
pub fn enumerate_lagrangians(ground: &GroundSet) -> Result<Vec<LagrangianSubspace>> {
    let n = ground.len();
    if n > MAX_ENUMERATION {
        return Err(Error::GroundSetTooLarge {
            size: n,
            limit: MAX_ENUMERATION,
        });
    }
    let width = 2 * n;
    let mut found: Vec<Vec<u64>> = Vec::new();
    for pivots in (0..width).combinations(n) {
        let pivot_mask: u64 = pivots.iter().fold(0, |m, &p| m | 1 << p);
        // Free positions of row i: non-pivot columns to the right of its pivot.
        let free: Vec<Vec<usize>> = pivots
            .iter()
            .map(|&p| {
                (p + 1..width)
                    .filter(|c| pivot_mask >> c & 1 == 0)
                    .collect()
            })
            .collect();
        let mut rows = Vec::with_capacity(n);
        extend(&pivots, &free, n, &mut rows, &mut found);
    }
    let mut out: Vec<LagrangianSubspace> = found
        .into_iter()
        .map(|masks| {
            let rows = masks
                .into_iter()
                .map(|m| BitVec::from_mask(width, m))
                .collect();
            let basis = BitMatrix::from_rows(width, rows).expect("row width");
            LagrangianSubspace::from_echelon_unchecked(ground.clone(), basis)
        })
        .collect();
    out.sort();
    debug_assert_eq!(out.len() as u64, lagrangian_count(n));
    Ok(out)
}

fn extend(
    pivots: &[usize],
    free: &[Vec<usize>],
    n: usize,
    rows: &mut Vec<u64>,
    found: &mut Vec<Vec<u64>>,
) {
    let i = rows.len();
    if i == pivots.len() {
        found.push(rows.clone());
        return;
    }
    let slots = &free[i];
    for fill in 0u64..1 << slots.len() {
        let mut row = 1u64 << pivots[i];
        for (k, &c) in slots.iter().enumerate() {
            if fill >> k & 1 == 1 {
                row |= 1 << c;
            }
        }
        if rows.iter().all(|&r| !pairs(r, row, n)) {
            rows.push(row);
            extend(pivots, free, n, rows, found);
            rows.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_product_formula() {
        assert_eq!(lagrangian_count(0), 1);
        assert_eq!(lagrangian_count(1), 3);
        assert_eq!(lagrangian_count(2), 15);
        assert_eq!(lagrangian_count(3), 135);
        for n in 0..=4 {
            let all = enumerate_lagrangians(&GroundSet::numbered(n)).unwrap();
            assert_eq!(all.len() as u64, lagrangian_count(n));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn rejects_large_ground_sets() {
        assert_eq!(
            enumerate_lagrangians(&GroundSet::numbered(6)),
            Err(Error::GroundSetTooLarge { size: 6, limit: 5 })
        );
    }
}
