//! 5×5 matrices over `Z[φ]/I` with a packed `u128` encoding.

use crate::arith::{GoldenInt, PrincipalIdeal, QuotientRing};
use crate::error::{Error, Result};
use crate::geometry::{coxeter_order, golden_generators, Matrix, DIAGRAM_4335};

/// Largest norm whose 25 residues fit in 128 bits.
pub const MAX_PACKED_NORM: u32 = 32;

/// A matrix with entries given as residue indices, row-major.
pub type QuotientMatrix = Vec<u8>;

/// Arithmetic context for matrices over `Z[φ]/I`.
#[derive(Clone, Debug)]
pub struct MatrixRing {
    ring: QuotientRing,
    dim: usize,
    bits: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
}

/// Right multiplication by a fixed matrix, stored column by column as
/// `(row, coefficient)` lists.
#[derive(Clone, Debug)]
pub struct RightAction {
    columns: Vec<Vec<(usize, u8)>>,
}

impl MatrixRing {
    pub fn new(ideal: &PrincipalIdeal, dim: usize) -> Result<Self> {
        let ring = ideal.quotient_ring(MAX_PACKED_NORM)?;
        let size = ring.size();
        let bits = 32 - (size - 1).leading_zeros();
        if bits as usize * dim * dim > 128 {
            return Err(Error::NormTooLarge { norm: size.to_string(), max: MAX_PACKED_NORM });
        }
        let n = size as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                add[x * n + y] = ring.add(x as u16, y as u16) as u8;
                mul[x * n + y] = ring.mul(x as u16, y as u16) as u8;
            }
        }
        Ok(MatrixRing { ring, dim, bits, add, mul })
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bits_per_entry(&self) -> u32 {
        self.bits
    }

    #[inline]
    fn radd(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.ring.size() as usize + y as usize]
    }

    #[inline]
    fn rmul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.ring.size() as usize + y as usize]
    }

    pub fn identity(&self) -> QuotientMatrix {
        let one = self.ring.one() as u8;
        let mut m = vec![0u8; self.dim * self.dim];
        for i in 0..self.dim {
            m[i * self.dim + i] = one;
        }
        m
    }

    pub fn reduce(&self, m: &Matrix<GoldenInt>) -> QuotientMatrix {
        assert_eq!(m.dim(), self.dim);
        m.entries().iter().map(|x| self.ring.index_of(x) as u8).collect()
    }

    /// Canonical representative matrix with entries in `Z[φ]`.
    pub fn lift(&self, m: &QuotientMatrix) -> Matrix<GoldenInt> {
        let rows = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.ring.element(m[i * self.dim + j] as u32)).collect())
            .collect();
        Matrix::from_rows(rows)
    }

    pub fn mul(&self, a: &QuotientMatrix, b: &QuotientMatrix) -> QuotientMatrix {
        let n = self.dim;
        let mut out = vec![0u8; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = b[k * n + j];
                    if y != 0 {
                        out[i * n + j] = self.radd(out[i * n + j], self.rmul(x, y));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &QuotientMatrix, e: u32) -> QuotientMatrix {
        (0..e).fold(self.identity(), |acc, _| self.mul(&acc, a))
    }

    pub fn transpose(&self, a: &QuotientMatrix) -> QuotientMatrix {
        let n = self.dim;
        let mut t = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                t[j * n + i] = a[i * n + j];
            }
        }
        t
    }

    pub fn pack(&self, m: &QuotientMatrix) -> u128 {
        m.iter()
            .enumerate()
            .fold(0u128, |acc, (t, &x)| acc | (u128::from(x) << (self.bits as usize * t)))
    }

    pub fn unpack(&self, key: u128) -> QuotientMatrix {
        let mask = (1u128 << self.bits) - 1;
        (0..self.dim * self.dim)
            .map(|t| ((key >> (self.bits as usize * t)) & mask) as u8)
            .collect()
    }

    pub fn right_action(&self, g: &QuotientMatrix) -> RightAction {
        let n = self.dim;
        let columns = (0..n)
            .map(|j| (0..n).filter(|&k| g[k * n + j] != 0).map(|k| (k, g[k * n + j])).collect())
            .collect();
        RightAction { columns }
    }

    /// `unpack(key)·g`, packed; the hot path of the group enumeration.
    #[inline]
    pub fn apply_packed(&self, key: u128, g: &RightAction) -> u128 {
        let n = self.dim;
        let b = self.bits as usize;
        let mask = (1u128 << b) - 1;
        let mut entries = [0u8; 25];
        for (t, e) in entries.iter_mut().enumerate().take(n * n) {
            *e = ((key >> (b * t)) & mask) as u8;
        }
        let mut out = 0u128;
        for i in 0..n {
            let row = &entries[i * n..i * n + n];
            for (j, col) in g.columns.iter().enumerate() {
                let mut acc = 0u8;
                for &(k, c) in col {
                    let x = row[k];
                    if x != 0 {
                        acc = self.radd(acc, self.rmul(x, c));
                    }
                }
                out |= u128::from(acc) << (b * (i * n + j));
            }
        }
        out
    }
}

/// The five generators reduced mod `I`, after checking that the reduction
/// keeps them distinct, non-trivial involutions with the exact Coxeter
/// orders.
pub fn reduced_generators(ideal: &PrincipalIdeal) -> Result<(MatrixRing, Vec<QuotientMatrix>)> {
    let ring = MatrixRing::new(ideal, 5)?;
    let gens: Vec<QuotientMatrix> = golden_generators().iter().map(|g| ring.reduce(g)).collect();
    check_admissible(&ring, &gens, &DIAGRAM_4335)
        .map_err(|reason| Error::Inadmissible { ideal: ideal.to_string(), reason })?;
    Ok((ring, gens))
}

pub fn check_admissible(
    ring: &MatrixRing,
    gens: &[QuotientMatrix],
    diagram: &[u32],
) -> std::result::Result<(), String> {
    let id = ring.identity();
    for (i, g) in gens.iter().enumerate() {
        if *g == id {
            return Err(format!("r{i} reduces to the identity"));
        }
        if ring.mul(g, g) != id {
            return Err(format!("r{i} is not an involution"));
        }
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if gens[i] == gens[j] {
                return Err(format!("r{i} and r{j} coincide"));
            }
            let order = coxeter_order(diagram, i, j);
            let w = ring.mul(&gens[i], &gens[j]);
            let mut p = id.clone();
            for k in 1..=order {
                p = ring.mul(&p, &w);
                let is_id = p == id;
                if k < order && is_id {
                    return Err(format!("r{i}r{j} has order {k}, expected {order}"));
                }
                if k == order && !is_id {
                    return Err(format!("(r{i}r{j})^{order} is not the identity"));
                }
            }
        }
    }
    Ok(())
}
