//! Compressed incidence tables for decoding, in both directions.

use crate::error::{Error, Result};
use crate::group::Tessellation;

/// Compressed sparse rows of `u32` ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Csr {
    ptr: Vec<u32>,
    idx: Vec<u32>,
}

impl Csr {
    /// Rows from `(row, value)` pairs; values keep their input order
    /// within a row.
    pub fn from_pairs(rows: usize, pairs: impl Iterator<Item = (u32, u32)> + Clone) -> Self {
        let mut ptr = vec![0u32; rows + 1];
        for (r, _) in pairs.clone() {
            ptr[r as usize + 1] += 1;
        }
        for r in 0..rows {
            ptr[r + 1] += ptr[r];
        }
        let mut fill: Vec<u32> = ptr[..rows].to_vec();
        let mut idx = vec![0u32; ptr[rows] as usize];
        for (r, v) in pairs {
            idx[fill[r as usize] as usize] = v;
            fill[r as usize] += 1;
        }
        Csr { ptr, idx }
    }

    pub fn rows(&self) -> usize {
        self.ptr.len().saturating_sub(1)
    }

    #[inline]
    pub fn row(&self, r: u32) -> &[u32] {
        &self.idx[self.ptr[r as usize] as usize..self.ptr[r as usize + 1] as usize]
    }

    /// Composes `self: a → b` with `next: b → c`, deduplicating each row.
    pub fn compose(&self, next: &Csr) -> Csr {
        let rows = self.rows();
        let mut ptr = vec![0u32; rows + 1];
        let mut idx = Vec::new();
        let mut buf = Vec::new();
        for r in 0..rows as u32 {
            buf.clear();
            for &b in self.row(r) {
                buf.extend_from_slice(next.row(b));
            }
            buf.sort_unstable();
            buf.dedup();
            idx.extend_from_slice(&buf);
            ptr[r as usize + 1] = idx.len() as u32;
        }
        Csr { ptr, idx }
    }
}

/// Incidences of a tessellation as up/down adjacency lists.
#[derive(Clone, Debug)]
pub struct CellComplex {
    counts: Vec<usize>,
    /// `down[i]`: each `(i+1)`-cell to its `i`-cells.
    down: Vec<Csr>,
    /// `up[i]`: each `i`-cell to its `(i+1)`-cells.
    up: Vec<Csr>,
}

impl CellComplex {
    pub fn from_tessellation(t: &Tessellation) -> Result<Self> {
        if t.incidences.len() + 1 != t.face_counts.len() {
            return Err(Error::InvalidParameter("tessellation is missing incidences".into()));
        }
        let counts = t.face_counts.clone();
        let mut down = Vec::new();
        let mut up = Vec::new();
        for (i, inc) in t.incidences.iter().enumerate() {
            let pairs = inc.pairs.iter();
            up.push(Csr::from_pairs(counts[i], pairs.clone().map(|&(a, b)| (a, b))));
            down.push(Csr::from_pairs(counts[i + 1], pairs.map(|&(a, b)| (b, a))));
        }
        Ok(CellComplex { counts, down, up })
    }

    pub fn dimension(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, dim: usize) -> usize {
        self.counts[dim]
    }

    /// `(dim)`-cells to their `(dim−1)`-faces.
    pub fn faces(&self, dim: usize) -> &Csr {
        &self.down[dim - 1]
    }

    /// `(dim)`-cells to the `(dim+1)`-cells containing them.
    pub fn cofaces(&self, dim: usize) -> &Csr {
        &self.up[dim]
    }

    /// Cells of dimension `hi` to the `lo`-cells they contain.
    pub fn faces_down_to(&self, hi: usize, lo: usize) -> Csr {
        let mut m = self.faces(hi).clone();
        for d in (lo + 1..hi).rev() {
            m = m.compose(self.faces(d));
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::toric_group;

    #[test]
    fn torus_tables() {
        let t = Tessellation::from_group(&toric_group(3).unwrap());
        let c = CellComplex::from_tessellation(&t).unwrap();
        assert_eq!(c.dimension(), 2);
        for e in 0..18 {
            assert_eq!(c.faces(1).row(e).len(), 2);
            assert_eq!(c.cofaces(1).row(e).len(), 2);
        }
        let corners = c.faces_down_to(2, 0);
        for f in 0..9 {
            assert_eq!(corners.row(f).len(), 4);
        }
    }

    #[test]
    fn compose_dedups() {
        let a = Csr::from_pairs(1, [(0, 0), (0, 1)].into_iter());
        let b = Csr::from_pairs(2, [(0, 5), (1, 5), (1, 2)].into_iter());
        assert_eq!(a.compose(&b).row(0), &[2, 5]);
    }
}
