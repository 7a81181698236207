//! Rank over GF(2) by streaming elimination into a pivot basis.

use serde::Serialize;

use super::sparse::SparseBinaryMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RankOutcome {
    Complete { rank: usize },
    /// The word-operation budget ran out after `rows_done` rows.
    BudgetExceeded { rows_done: usize, rank_so_far: usize, work: u64 },
}

impl RankOutcome {
    pub fn rank(&self) -> Option<usize> {
        match *self {
            RankOutcome::Complete { rank } => Some(rank),
            RankOutcome::BudgetExceeded { .. } => None,
        }
    }
}

/// Rank of `m`, counting one unit of work per 64-bit word XOR. `None`
/// means unlimited.
pub fn gf2_rank(m: &SparseBinaryMatrix, budget: Option<u64>) -> RankOutcome {
    let words = m.cols().div_ceil(64);
    // basis[p] is a row whose lowest set bit is p.
    let mut basis: Vec<Option<Box<[u64]>>> = vec![None; m.cols()];
    let mut rank = 0;
    let mut work = 0u64;
    for (r, cols) in m.iter_rows().enumerate() {
        if budget.is_some_and(|b| work > b) {
            return RankOutcome::BudgetExceeded { rows_done: r, rank_so_far: rank, work };
        }
        let mut row = vec![0u64; words];
        for &c in cols {
            row[c as usize / 64] |= 1 << (c % 64);
        }
        let mut start = 0;
        while let Some(w) = (start..words).find(|&w| row[w] != 0) {
            let p = w * 64 + row[w].trailing_zeros() as usize;
            match &basis[p] {
                Some(b) => {
                    for k in w..words {
                        row[k] ^= b[k];
                    }
                    work += (words - w) as u64;
                    start = w;
                }
                None => {
                    basis[p] = Some(row.into_boxed_slice());
                    rank += 1;
                    break;
                }
            }
        }
    }
    RankOutcome::Complete { rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Textbook dense elimination on booleans.
    fn dense_rank(mut a: Vec<Vec<bool>>) -> usize {
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&r| a[r][c]) else { continue };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && a[r][c] {
                    let pivot = a[rank].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(gf2_rank(&SparseBinaryMatrix::zeros(4, 70), None), RankOutcome::Complete { rank: 0 });
    }

    #[test]
    fn budget_is_reported() {
        let rows: Vec<Vec<u32>> = (0..50).map(|i| vec![0, i + 1]).collect();
        let m = SparseBinaryMatrix::from_rows(51, &rows).unwrap();
        assert!(matches!(gf2_rank(&m, Some(3)), RankOutcome::BudgetExceeded { .. }));
        assert_eq!(gf2_rank(&m, None).rank(), Some(50));
    }

    proptest! {
        #[test]
        fn matches_dense_elimination(entries in proptest::collection::vec((0u32..12, 0u32..140), 0..60)) {
            let m = SparseBinaryMatrix::from_entries(12, 140, entries).unwrap();
            prop_assert_eq!(gf2_rank(&m, None).rank(), Some(dense_rank(m.to_dense())));
        }
    }
}
