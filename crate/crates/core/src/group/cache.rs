//! Binary cache of a built tessellation.
//!
//! Layout, little-endian: magic `GLDC`, `u32` version, `u32` source length
//! and UTF-8 source, `u64` group order, `u32` face dimension count and one
//! `u64` per count, then per incidence `u32` lo, `u32` hi, `u32` min and
//! max multiplicity, `u64` pair count and the pairs as `u32` couples.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::tessellation::{Incidence, Tessellation};

const MAGIC: &[u8; 4] = b"GLDC";
const VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct CachedTessellation {
    pub source: String,
    pub group_order: u64,
    pub tessellation: Tessellation,
}

pub fn write_cache(path: &Path, source: &str, group_order: u64, t: &Tessellation) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(source.len() as u32).to_le_bytes())?;
    w.write_all(source.as_bytes())?;
    w.write_all(&group_order.to_le_bytes())?;
    w.write_all(&(t.face_counts.len() as u32).to_le_bytes())?;
    for &c in &t.face_counts {
        w.write_all(&(c as u64).to_le_bytes())?;
    }
    for inc in &t.incidences {
        for x in [inc.lo as u32, inc.hi as u32, inc.multiplicity.0, inc.multiplicity.1] {
            w.write_all(&x.to_le_bytes())?;
        }
        w.write_all(&(inc.pairs.len() as u64).to_le_bytes())?;
        for &(a, b) in &inc.pairs {
            w.write_all(&a.to_le_bytes())?;
            w.write_all(&b.to_le_bytes())?;
        }
    }
    w.flush()?;
    Ok(())
}

fn read_u32(r: &mut impl Read) -> Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b).map_err(|_| Error::Cache("truncated file".into()))?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64(r: &mut impl Read) -> Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b).map_err(|_| Error::Cache("truncated file".into()))?;
    Ok(u64::from_le_bytes(b))
}

pub fn read_cache(path: &Path) -> Result<CachedTessellation> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic).map_err(|_| Error::Cache("truncated file".into()))?;
    if &magic != MAGIC {
        return Err(Error::Cache("not a tessellation cache".into()));
    }
    let version = read_u32(&mut r)?;
    if version != VERSION {
        return Err(Error::Cache(format!("unsupported version {version}")));
    }
    let len = read_u32(&mut r)? as usize;
    let mut src = vec![0u8; len];
    r.read_exact(&mut src).map_err(|_| Error::Cache("truncated file".into()))?;
    let source = String::from_utf8(src).map_err(|_| Error::Cache("source is not UTF-8".into()))?;
    let group_order = read_u64(&mut r)?;
    let dims = read_u32(&mut r)? as usize;
    if dims == 0 || dims > 8 {
        return Err(Error::Cache(format!("implausible dimension count {dims}")));
    }
    let face_counts = (0..dims).map(|_| read_u64(&mut r).map(|c| c as usize)).collect::<Result<Vec<_>>>()?;
    let mut incidences = Vec::with_capacity(dims - 1);
    for _ in 1..dims {
        let lo = read_u32(&mut r)? as usize;
        let hi = read_u32(&mut r)? as usize;
        let multiplicity = (read_u32(&mut r)?, read_u32(&mut r)?);
        let n = read_u64(&mut r)? as usize;
        let mut buf = vec![0u8; n.checked_mul(8).ok_or_else(|| Error::Cache("pair count overflow".into()))?];
        r.read_exact(&mut buf).map_err(|_| Error::Cache("truncated file".into()))?;
        let pairs = buf
            .chunks_exact(8)
            .map(|c| {
                (
                    u32::from_le_bytes(c[0..4].try_into().expect("4 bytes")),
                    u32::from_le_bytes(c[4..8].try_into().expect("4 bytes")),
                )
            })
            .collect::<Vec<_>>();
        if pairs.iter().any(|&(a, b)| a as usize >= face_counts[lo] || b as usize >= face_counts[hi]) {
            return Err(Error::Cache("incidence index out of range".into()));
        }
        incidences.push(Incidence { lo, hi, pairs, multiplicity });
    }
    let mut rest = Vec::new();
    r.read_to_end(&mut rest)?;
    if !rest.is_empty() {
        return Err(Error::Cache("trailing bytes".into()));
    }
    Ok(CachedTessellation { source, group_order, tessellation: Tessellation::from_parts(face_counts, incidences) })
}
