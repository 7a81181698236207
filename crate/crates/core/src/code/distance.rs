//! Exhaustive minimum distance for codes with at most 20 qubits.

use serde::Serialize;

use crate::error::{Error, Result};

use super::css::CssCode;
use super::sparse::SparseBinaryMatrix;

pub const MAX_BRUTE_FORCE_QUBITS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    /// Lightest X-type logical; `None` when there are no logical operators.
    pub x: Option<usize>,
    pub z: Option<usize>,
}

impl DistanceReport {
    pub fn distance(&self) -> Option<usize> {
        match (self.x, self.z) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

/// Row space of `m` as an echelon basis of bitmasks.
fn row_space(m: &SparseBinaryMatrix) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for row in m.iter_rows() {
        let mut v = row.iter().fold(0u32, |acc, &c| acc | 1 << c);
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

fn in_span(basis: &[u32], mut v: u32) -> bool {
    for &b in basis {
        v = v.min(v ^ b);
    }
    v == 0
}

/// Lightest vector in `ker(checks)` outside `rowspace(stabilizers)`.
fn lightest_logical(checks: &SparseBinaryMatrix, stabilizers: &SparseBinaryMatrix, n: usize) -> Option<usize> {
    let t = checks.transpose();
    let words = checks.rows().div_ceil(64).max(1);
    let columns: Vec<Vec<u64>> = (0..n)
        .map(|q| {
            let mut s = vec![0u64; words];
            for &r in t.row(q) {
                s[r as usize / 64] |= 1 << (r % 64);
            }
            s
        })
        .collect();
    let stab = row_space(stabilizers);
    let mut syndrome = vec![0u64; words];
    let mut best: Option<usize> = None;
    // Gray code walk: step i flips the bit at the position of its lowest
    // set bit.
    let mut x = 0u32;
    for i in 1u32..(1 << n) {
        let q = i.trailing_zeros() as usize;
        x ^= 1 << q;
        for (s, c) in syndrome.iter_mut().zip(&columns[q]) {
            *s ^= c;
        }
        let w = x.count_ones() as usize;
        if best.is_some_and(|b| w >= b) {
            continue;
        }
        if syndrome.iter().all(|&s| s == 0) && !in_span(&stab, x) {
            best = Some(w);
        }
    }
    best
}

pub fn min_distance_brute(code: &CssCode) -> Result<DistanceReport> {
    if code.n > MAX_BRUTE_FORCE_QUBITS {
        return Err(Error::TooLarge { n: code.n, limit: MAX_BRUTE_FORCE_QUBITS });
    }
    Ok(DistanceReport {
        x: lightest_logical(&code.hz, &code.hx, code.n),
        z: lightest_logical(&code.hx, &code.hz, code.n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::css::Provenance;

    fn code(n: usize, hx: &[Vec<u32>], hz: &[Vec<u32>]) -> CssCode {
        let p = Provenance { source: "test".into(), face_counts: vec![], qubit_dim: 1 };
        CssCode::new(
            SparseBinaryMatrix::from_rows(n, hx).unwrap(),
            SparseBinaryMatrix::from_rows(n, hz).unwrap(),
            p,
        )
        .unwrap()
    }

    #[test]
    fn repetition_like_code() {
        // Three-qubit bit-flip code: Z-checks Z0Z1, Z1Z2, no X-checks.
        let c = code(3, &[], &[vec![0, 1], vec![1, 2]]);
        let d = min_distance_brute(&c).unwrap();
        assert_eq!(d.x, Some(3));
        assert_eq!(d.z, Some(1));
        assert_eq!(d.distance(), Some(1));
    }

    #[test]
    fn no_logicals_sentinel() {
        let c = code(1, &[vec![0]], &[]);
        let d = min_distance_brute(&c).unwrap();
        assert_eq!(d.z, None);
        let c = code(2, &[vec![0, 1]], &[vec![0, 1]]);
        let d = min_distance_brute(&c).unwrap();
        assert_eq!((d.x, d.z), (None, None));
        assert_eq!(d.distance(), None);
    }
}
