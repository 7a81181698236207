//! MatrixMarket and alist serialisation of check matrices, plus a JSON
//! metadata record.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::sparse::SparseBinaryMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFormat {
    MatrixMarket,
    Alist,
}

const MM_HEADER: &str = "%%MatrixMarket matrix coordinate pattern general";

pub fn to_matrix_market(m: &SparseBinaryMatrix) -> String {
    let mut s = String::with_capacity(16 * m.nnz() + 64);
    let _ = writeln!(s, "{MM_HEADER}");
    let _ = writeln!(s, "{} {} {}", m.rows(), m.cols(), m.nnz());
    for (r, c) in m.entries() {
        let _ = writeln!(s, "{} {}", r + 1, c + 1);
    }
    s
}

fn parse_usize(tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what}")))
}

pub fn from_matrix_market(text: &str) -> Result<SparseBinaryMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    if header.trim() != MM_HEADER {
        return Err(Error::Parse(format!("unsupported header {header:?}")));
    }
    let mut lines = lines.filter(|l| !l.starts_with('%'));
    let size = lines.next().ok_or_else(|| Error::Parse("missing size line".into()))?;
    let mut it = size.split_whitespace();
    let rows = parse_usize(it.next(), "row count")?;
    let cols = parse_usize(it.next(), "column count")?;
    let nnz = parse_usize(it.next(), "entry count")?;
    let mut entries = Vec::with_capacity(nnz);
    for line in lines {
        let mut it = line.split_whitespace();
        let r = parse_usize(it.next(), "row index")?;
        let c = parse_usize(it.next(), "column index")?;
        if r == 0 || c == 0 {
            return Err(Error::Parse("indices are 1-based".into()));
        }
        entries.push(((r - 1) as u32, (c - 1) as u32));
    }
    if entries.len() != nnz {
        return Err(Error::Parse(format!("expected {nnz} entries, found {}", entries.len())));
    }
    SparseBinaryMatrix::from_entries(rows, cols, entries)
}

fn join(xs: impl Iterator<Item = usize>) -> String {
    xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Columns first: `n m`, max degrees, column degrees, row degrees, then
/// 1-based index lists padded with zeros to the max degree.
pub fn to_alist(m: &SparseBinaryMatrix) -> String {
    let t = m.transpose();
    let col_deg: Vec<usize> = t.iter_rows().map(<[u32]>::len).collect();
    let row_deg: Vec<usize> = m.iter_rows().map(<[u32]>::len).collect();
    let max_col = col_deg.iter().copied().max().unwrap_or(0);
    let max_row = row_deg.iter().copied().max().unwrap_or(0);
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", m.cols(), m.rows());
    let _ = writeln!(s, "{max_col} {max_row}");
    let _ = writeln!(s, "{}", join(col_deg.iter().copied()));
    let _ = writeln!(s, "{}", join(row_deg.iter().copied()));
    for (rows, max) in [(&t, max_col), (m, max_row)] {
        for list in rows.iter_rows() {
            let padded = list.iter().map(|&i| i as usize + 1).chain(std::iter::repeat(0)).take(max);
            let _ = writeln!(s, "{}", join(padded));
        }
    }
    s
}

pub fn from_alist(text: &str) -> Result<SparseBinaryMatrix> {
    let mut lines = text.lines();
    let mut next_numbers = |what: &str| -> Result<Vec<usize>> {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("missing {what}")))?;
        line.split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad number in {what}"))))
            .collect()
    };
    let dims = next_numbers("dimensions")?;
    let (cols, rows) = match dims[..] {
        [n, m] => (n, m),
        _ => return Err(Error::Parse("dimension line needs two numbers".into())),
    };
    next_numbers("max degrees")?;
    let col_deg = next_numbers("column degrees")?;
    let row_deg = next_numbers("row degrees")?;
    if col_deg.len() != cols || row_deg.len() != rows {
        return Err(Error::Parse("degree lines do not match the dimensions".into()));
    }
    let mut entries = Vec::new();
    for (c, &d) in col_deg.iter().enumerate() {
        let list: Vec<usize> = next_numbers("column list")?.into_iter().filter(|&x| x != 0).collect();
        if list.len() != d {
            return Err(Error::Parse(format!("column {} lists {} entries, expected {d}", c + 1, list.len())));
        }
        entries.extend(list.into_iter().map(|r| ((r - 1) as u32, c as u32)));
    }
    let m = SparseBinaryMatrix::from_entries(rows, cols, entries)?;
    for (r, &d) in row_deg.iter().enumerate() {
        let list: Vec<u32> =
            next_numbers("row list")?.into_iter().filter(|&x| x != 0).map(|x| (x - 1) as u32).collect();
        if list.len() != d || list != m.row(r) {
            return Err(Error::Parse(format!("row {} disagrees with the column lists", r + 1)));
        }
    }
    Ok(m)
}

pub fn export_matrix(m: &SparseBinaryMatrix, format: MatrixFormat, path: &Path) -> Result<()> {
    let text = match format {
        MatrixFormat::MatrixMarket => to_matrix_market(m),
        MatrixFormat::Alist => to_alist(m),
    };
    fs::write(path, text)?;
    Ok(())
}

pub fn import_matrix(format: MatrixFormat, path: &Path) -> Result<SparseBinaryMatrix> {
    let text = fs::read_to_string(path)?;
    match format {
        MatrixFormat::MatrixMarket => from_matrix_market(&text),
        MatrixFormat::Alist => from_alist(&text),
    }
}

/// Summary written next to exported matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeMetadata {
    pub ideal: String,
    pub group_order: usize,
    pub face_counts: Vec<usize>,
    pub n: usize,
    pub chi: i64,
    pub k_lower_bound: i64,
    /// Histograms keyed by matrix name (`hx`, `hz`), then weight.
    pub row_weights: BTreeMap<String, BTreeMap<usize, usize>>,
    pub col_weights: BTreeMap<String, BTreeMap<usize, usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_entry_matrix_market() {
        let m = SparseBinaryMatrix::from_rows(1, &[vec![0]]).unwrap();
        let s = to_matrix_market(&m);
        assert_eq!(s, format!("{MM_HEADER}\n1 1 1\n1 1\n"));
        assert_eq!(from_matrix_market(&s).unwrap(), m);
    }

    #[test]
    fn alist_layout() {
        let m = SparseBinaryMatrix::from_rows(3, &[vec![0, 2], vec![1]]).unwrap();
        assert_eq!(to_alist(&m), "3 2\n1 2\n1 1 1\n2 1\n1\n2\n1\n1 3\n2 0\n");
        assert!(from_alist("3 2\n1 2\n1 1 1\n2 1\n1\n2\n1\n1 2\n2 0\n").is_err());
    }

    #[test]
    fn bad_headers() {
        assert!(from_matrix_market("%%MatrixMarket matrix array real general\n1 1\n").is_err());
        assert!(from_matrix_market(&format!("{MM_HEADER}\n2 2 2\n1 1\n")).is_err());
    }

    proptest! {
        #[test]
        fn roundtrips(entries in proptest::collection::vec((0u32..6, 0u32..9), 0..30)) {
            let m = SparseBinaryMatrix::from_entries(6, 9, entries).unwrap();
            prop_assert_eq!(from_matrix_market(&to_matrix_market(&m)).unwrap(), m.clone());
            prop_assert_eq!(from_alist(&to_alist(&m)).unwrap(), m);
        }
    }
}
