//! Local GF(2) solves: find cells whose boundary is a given chain, using
//! only cells near the chain.

use std::collections::{HashMap, HashSet};

use super::complex::Csr;
use super::syndrome::xor_sorted;

/// `boundary` maps each generator (higher cell) to the target cells it
/// touches; `coboundary` is its transpose.
#[derive(Clone, Copy)]
pub struct FillSpace<'a> {
    pub boundary: &'a Csr,
    pub coboundary: &'a Csr,
}

/// How far a fill may reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FillLimits {
    /// Growth steps beyond the cells touching the target.
    pub levels: usize,
    /// Maximum number of generators considered.
    pub cap: usize,
}

impl Default for FillLimits {
    fn default() -> Self {
        FillLimits { levels: 1, cap: 2000 }
    }
}

impl<'a> FillSpace<'a> {
    /// Generators near `target`, level by level: level 0 touches the
    /// target, level `k+1` touches a cell of level `k`. Each level is in
    /// ascending id order and the whole list is cut at `cap`.
    fn candidate_levels(&self, target: &[u32], limits: FillLimits) -> Vec<Vec<u32>> {
        let mut seen: HashSet<u32> = HashSet::new();
        let mut levels: Vec<Vec<u32>> = Vec::new();
        let mut frontier_cells: Vec<u32> = target.to_vec();
        let mut total = 0;
        for _ in 0..=limits.levels {
            let mut level: Vec<u32> = frontier_cells
                .iter()
                .flat_map(|&c| self.coboundary.row(c).iter().copied())
                .filter(|g| !seen.contains(g))
                .collect();
            level.sort_unstable();
            level.dedup();
            level.truncate(limits.cap - total);
            if level.is_empty() {
                break;
            }
            total += level.len();
            for &g in &level {
                seen.insert(g);
            }
            frontier_cells = level.iter().flat_map(|&g| self.boundary.row(g).iter().copied()).collect();
            frontier_cells.sort_unstable();
            frontier_cells.dedup();
            levels.push(level);
            if total >= limits.cap {
                break;
            }
        }
        levels
    }

    /// Generators whose combined boundary is exactly `target`, sorted;
    /// `None` when no combination within `limits` works. Each level is
    /// tried before the next is added.
    pub fn fill(&self, target: &[u32], limits: FillLimits) -> Option<Vec<u32>> {
        if target.is_empty() {
            return Some(Vec::new());
        }
        let levels = self.candidate_levels(target, limits);
        let mut gens: Vec<u32> = Vec::new();
        for level in levels {
            gens.extend(level);
            if let Some(sol) = solve(self.boundary, &gens, target) {
                return Some(sol);
            }
        }
        None
    }
}

/// Streaming elimination restricted to `gens`. Rows carry the local target
/// bits followed by bits recording which generators were combined.
fn solve(boundary: &Csr, gens: &[u32], target: &[u32]) -> Option<Vec<u32>> {
    let mut local: HashMap<u32, usize> = HashMap::new();
    for &g in gens {
        for &c in boundary.row(g) {
            let next = local.len();
            local.entry(c).or_insert(next);
        }
    }
    if target.iter().any(|c| !local.contains_key(c)) {
        return None;
    }
    let lo_words = local.len().div_ceil(64);
    let width = lo_words + gens.len().div_ceil(64);
    let mut pivots: Vec<Option<usize>> = vec![None; local.len()];
    let mut rows: Vec<Vec<u64>> = Vec::new();

    let reduce = |row: &mut Vec<u64>, rows: &[Vec<u64>], pivots: &[Option<usize>]| -> Option<usize> {
        let mut start = 0;
        loop {
            let w = (start..lo_words).find(|&w| row[w] != 0)?;
            let p = w * 64 + row[w].trailing_zeros() as usize;
            match pivots[p] {
                Some(b) => {
                    let basis = &rows[b];
                    for k in w..width {
                        row[k] ^= basis[k];
                    }
                    start = w;
                }
                None => return Some(p),
            }
        }
    };

    for (j, &g) in gens.iter().enumerate() {
        let mut row = vec![0u64; width];
        for &c in boundary.row(g) {
            let i = local[&c];
            row[i / 64] ^= 1 << (i % 64);
        }
        row[lo_words + j / 64] |= 1 << (j % 64);
        if let Some(p) = reduce(&mut row, &rows, &pivots) {
            pivots[p] = Some(rows.len());
            rows.push(row);
        }
    }
    let mut t = vec![0u64; width];
    for c in target {
        let i = local[c];
        t[i / 64] ^= 1 << (i % 64);
    }
    if reduce(&mut t, &rows, &pivots).is_some() {
        return None;
    }
    let mut sol: Vec<u32> = gens
        .iter()
        .enumerate()
        .filter(|(j, _)| t[lo_words + j / 64] >> (j % 64) & 1 == 1)
        .map(|(_, &g)| g)
        .collect();
    sol.sort_unstable();
    Some(sol)
}

/// Symmetric difference of the boundaries of `cells`, sorted.
pub fn boundary_of(boundary: &Csr, cells: &[u32]) -> Vec<u32> {
    xor_sorted(cells.iter().flat_map(|&g| boundary.row(g).iter().copied()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decode::complex::CellComplex;
    use crate::group::{toric_group, Tessellation};

    fn torus(p: usize) -> CellComplex {
        CellComplex::from_tessellation(&Tessellation::from_group(&toric_group(p).unwrap())).unwrap()
    }

    #[test]
    fn face_boundaries_fill_with_the_face() {
        let c = torus(5);
        let space = FillSpace { boundary: c.faces(2), coboundary: c.cofaces(1) };
        for f in 0..25u32 {
            let cycle = boundary_of(c.faces(2), &[f]);
            assert_eq!(cycle.len(), 4);
            let sol = space.fill(&cycle, FillLimits::default()).unwrap();
            assert_eq!(boundary_of(c.faces(2), &sol), cycle);
            assert_eq!(sol, vec![f]);
        }
        assert_eq!(space.fill(&[], FillLimits::default()), Some(vec![]));
    }

    #[test]
    fn adjacent_pair_fills_with_two_faces() {
        let c = torus(5);
        let space = FillSpace { boundary: c.faces(2), coboundary: c.cofaces(1) };
        let f0 = 0u32;
        let shared = c.faces(2).row(f0)[0];
        let f1 = *c.cofaces(1).row(shared).iter().find(|&&f| f != f0).unwrap();
        let cycle = boundary_of(c.faces(2), &[f0, f1]);
        assert_eq!(cycle.len(), 6);
        let sol = space.fill(&cycle, FillLimits::default()).unwrap();
        assert!(sol.len() <= 2);
        assert_eq!(boundary_of(c.faces(2), &sol), cycle);
    }

    #[test]
    fn non_boundaries_do_not_fill() {
        // A lone edge is not a cycle, so no face set has it as boundary.
        let c = torus(3);
        let space = FillSpace { boundary: c.faces(2), coboundary: c.cofaces(1) };
        assert_eq!(space.fill(&[0], FillLimits { levels: 3, cap: 100 }), None);
    }
}
