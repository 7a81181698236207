use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Binary matrix in compressed-row form with sorted, distinct column
/// indices per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseBinaryMatrix {
    rows: usize,
    cols: usize,
    row_ptr: Vec<usize>,
    indices: Vec<u32>,
}

impl SparseBinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseBinaryMatrix { rows, cols, row_ptr: vec![0; rows + 1], indices: Vec::new() }
    }

    /// Builds from `(row, col)` positions; duplicates cancel in pairs.
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut keys: Vec<u64> = Vec::new();
        for (r, c) in entries {
            if r as usize >= rows || c as usize >= cols {
                return Err(Error::InvalidParameter(format!(
                    "entry ({r}, {c}) outside a {rows}×{cols} matrix"
                )));
            }
            keys.push((u64::from(r) << 32) | u64::from(c));
        }
        keys.sort_unstable();
        let mut row_ptr = vec![0usize; rows + 1];
        let mut indices = Vec::with_capacity(keys.len());
        let mut i = 0;
        while i < keys.len() {
            let mut j = i + 1;
            while j < keys.len() && keys[j] == keys[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                row_ptr[(keys[i] >> 32) as usize + 1] += 1;
                indices.push(keys[i] as u32);
            }
            i = j;
        }
        for r in 0..rows {
            row_ptr[r + 1] += row_ptr[r];
        }
        Ok(SparseBinaryMatrix { rows, cols, row_ptr, indices })
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let entries = rows
            .iter()
            .enumerate()
            .flat_map(|(r, cs)| cs.iter().map(move |&c| (r as u32, c)));
        Self::from_entries(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.indices[self.row_ptr[r]..self.row_ptr[r + 1]]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    /// All `(row, col)` positions in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.rows).flat_map(move |r| self.row(r).iter().map(move |&c| (r as u32, c)))
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row(r).binary_search(&(c as u32)).is_ok()
    }

    pub fn transpose(&self) -> Self {
        let mut row_ptr = vec![0usize; self.cols + 1];
        for &c in &self.indices {
            row_ptr[c as usize + 1] += 1;
        }
        for c in 0..self.cols {
            row_ptr[c + 1] += row_ptr[c];
        }
        let mut fill = row_ptr.clone();
        let mut indices = vec![0u32; self.indices.len()];
        for r in 0..self.rows {
            for &c in self.row(r) {
                indices[fill[c as usize]] = r as u32;
                fill[c as usize] += 1;
            }
        }
        SparseBinaryMatrix { rows: self.cols, cols: self.rows, row_ptr, indices }
    }

    /// `self · v` over GF(2) for a support set `v` of columns.
    pub fn mul_support(&self, support: &[u32]) -> Vec<u32> {
        let t = self.transpose();
        let mut hit = vec![false; self.rows];
        for &c in support {
            for &r in t.row(c as usize) {
                hit[r as usize] ^= true;
            }
        }
        hit.iter().enumerate().filter(|(_, &h)| h).map(|(r, _)| r as u32).collect()
    }

    /// Positions where `self · otherᵀ` is odd, sorted; empty when the
    /// product vanishes.
    pub fn odd_overlaps(&self, other: &SparseBinaryMatrix) -> Vec<(u32, u32)> {
        assert_eq!(self.cols, other.cols);
        let (a, b) = (self.transpose(), other.transpose());
        let mut keys: Vec<u64> = Vec::new();
        for q in 0..self.cols {
            for &x in a.row(q) {
                for &z in b.row(q) {
                    keys.push((u64::from(x) << 32) | u64::from(z));
                }
            }
        }
        keys.sort_unstable();
        let mut odd = Vec::new();
        let mut i = 0;
        while i < keys.len() {
            let mut j = i + 1;
            while j < keys.len() && keys[j] == keys[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                odd.push(((keys[i] >> 32) as u32, keys[i] as u32));
            }
            i = j;
        }
        odd
    }

    /// `self · other` over GF(2).
    pub fn mul(&self, other: &SparseBinaryMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidParameter(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = (0..self.rows).flat_map(|r| {
            self.row(r).iter().flat_map(move |&k| other.row(k as usize).iter().map(move |&c| (r as u32, c)))
        });
        Self::from_entries(self.rows, other.cols, entries)
    }

    pub fn is_zero(&self) -> bool {
        self.indices.is_empty()
    }

    /// Histogram `weight → count` over rows.
    pub fn row_weights(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for r in 0..self.rows {
            *h.entry(self.row(r).len()).or_insert(0) += 1;
        }
        h
    }

    pub fn col_weights(&self) -> BTreeMap<usize, usize> {
        self.transpose().row_weights()
    }

    pub fn to_dense(&self) -> Vec<Vec<bool>> {
        (0..self.rows)
            .map(|r| {
                let mut row = vec![false; self.cols];
                for &c in self.row(r) {
                    row[c as usize] = true;
                }
                row
            })
            .collect()
    }
}
