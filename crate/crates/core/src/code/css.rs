use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{toric_group, Tessellation};

use super::sparse::SparseBinaryMatrix;

/// Boundary maps of a cell complex over GF(2). `boundary(i)` has rows
/// indexed by `(i−1)`-faces and columns by `i`-faces.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    boundaries: Vec<SparseBinaryMatrix>,
}

impl ChainComplex {
    pub fn from_tessellation(t: &Tessellation) -> Result<Self> {
        let boundaries = t
            .incidences
            .iter()
            .map(|inc| {
                SparseBinaryMatrix::from_entries(
                    t.face_counts[inc.lo],
                    t.face_counts[inc.hi],
                    inc.pairs.iter().copied(),
                )
            })
            .collect::<Result<_>>()?;
        Ok(ChainComplex { boundaries })
    }

    pub fn dimension(&self) -> usize {
        self.boundaries.len()
    }

    /// `∂_i`, for `1 ≤ i ≤ dimension`.
    pub fn boundary(&self, i: usize) -> &SparseBinaryMatrix {
        &self.boundaries[i - 1]
    }

    /// Checks `∂_i ∘ ∂_{i+1} = 0` by full sparse products.
    pub fn verify(&self) -> Result<()> {
        for i in 1..self.dimension() {
            let odd = self.boundary(i).odd_overlaps(&self.boundary(i + 1).transpose());
            if let Some(&(a, b)) = odd.first() {
                return Err(Error::NonCommuting { x_check: a as usize, z_check: b as usize });
            }
        }
        Ok(())
    }
}

/// Where a code came from, for metadata and logs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub source: String,
    pub face_counts: Vec<usize>,
    pub qubit_dim: usize,
}

#[derive(Clone, Debug)]
pub struct CssCode {
    pub hx: SparseBinaryMatrix,
    pub hz: SparseBinaryMatrix,
    pub n: usize,
    pub provenance: Provenance,
    hx_columns: SparseBinaryMatrix,
    hz_columns: SparseBinaryMatrix,
}

impl CssCode {
    /// Checks `H_X · H_Zᵀ = 0`, reporting the first offending pair.
    pub fn new(hx: SparseBinaryMatrix, hz: SparseBinaryMatrix, provenance: Provenance) -> Result<Self> {
        if hx.cols() != hz.cols() {
            return Err(Error::InvalidParameter(format!(
                "H_X has {} columns but H_Z has {}",
                hx.cols(),
                hz.cols()
            )));
        }
        if let Some(&(x, z)) = hx.odd_overlaps(&hz).first() {
            return Err(Error::NonCommuting { x_check: x as usize, z_check: z as usize });
        }
        let n = hx.cols();
        let (hx_columns, hz_columns) = (hx.transpose(), hz.transpose());
        Ok(CssCode { hx, hz, n, provenance, hx_columns, hz_columns })
    }

    /// `H_Xᵀ`: the X-checks touching each qubit.
    pub fn hx_columns(&self) -> &SparseBinaryMatrix {
        &self.hx_columns
    }

    pub fn hz_columns(&self) -> &SparseBinaryMatrix {
        &self.hz_columns
    }

    pub fn weights(&self) -> WeightSummary {
        WeightSummary {
            hx_rows: self.hx.row_weights(),
            hx_cols: self.hx_columns.row_weights(),
            hz_rows: self.hz.row_weights(),
            hz_cols: self.hz_columns.row_weights(),
        }
    }
}

/// Row and column weight histograms of both check matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSummary {
    pub hx_rows: BTreeMap<usize, usize>,
    pub hx_cols: BTreeMap<usize, usize>,
    pub hz_rows: BTreeMap<usize, usize>,
    pub hz_cols: BTreeMap<usize, usize>,
}

/// Qubits on `qubit_dim`-faces, X-checks on the faces one dimension lower,
/// Z-checks one dimension higher.
pub fn css_from_tessellation(t: &Tessellation, qubit_dim: usize, source: &str) -> Result<CssCode> {
    if qubit_dim == 0 || qubit_dim >= t.face_counts.len() - 1 {
        return Err(Error::InvalidParameter(format!(
            "qubit dimension {qubit_dim} needs faces on both sides"
        )));
    }
    t.check_uniform()?;
    let lower = &t.incidences[qubit_dim - 1];
    let upper = &t.incidences[qubit_dim];
    let counts = &t.face_counts;
    let hx = SparseBinaryMatrix::from_entries(counts[qubit_dim - 1], counts[qubit_dim], lower.pairs.iter().copied())?;
    let hz = SparseBinaryMatrix::from_entries(
        counts[qubit_dim + 1],
        counts[qubit_dim],
        upper.pairs.iter().map(|&(q, c)| (c, q)),
    )?;
    let provenance = Provenance { source: source.to_string(), face_counts: counts.clone(), qubit_dim };
    CssCode::new(hx, hz, provenance)
}

/// Golden code: qubits on 2-faces, X-checks on edges, Z-checks on 3-faces.
pub fn build_css_code(t: &Tessellation, source: &str) -> Result<CssCode> {
    css_from_tessellation(t, 2, source)
}

/// Square-tiling torus code with qubits on the `2p²` edges.
pub fn build_toric_code(p: usize) -> Result<CssCode> {
    let g = toric_group(p)?;
    let t = Tessellation::from_group(&g);
    css_from_tessellation(&t, 1, &format!("toric p={p}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toric_weights() {
        for p in 2..=4 {
            let code = build_toric_code(p).unwrap();
            assert_eq!(code.n, 2 * p * p);
            let w = code.weights();
            assert_eq!(w.hx_rows, BTreeMap::from([(4, p * p)]));
            assert_eq!(w.hz_rows, BTreeMap::from([(4, p * p)]));
            assert_eq!(w.hx_cols, BTreeMap::from([(2, 2 * p * p)]));
        }
    }

    #[test]
    fn anticommuting_checks_are_reported() {
        let hx = SparseBinaryMatrix::from_rows(2, &[vec![0]]).unwrap();
        let hz = SparseBinaryMatrix::from_rows(2, &[vec![0, 1]]).unwrap();
        let p = Provenance { source: "bad".into(), face_counts: vec![], qubit_dim: 1 };
        assert!(matches!(CssCode::new(hx, hz, p), Err(Error::NonCommuting { x_check: 0, z_check: 0 })));
    }

    #[test]
    fn toric_chain_complex() {
        let t = Tessellation::from_group(&toric_group(3).unwrap());
        let c = ChainComplex::from_tessellation(&t).unwrap();
        assert_eq!(c.dimension(), 2);
        c.verify().unwrap();
    }
}
