//! Dense square matrices over the exact rings.

use std::fmt::Debug;
use std::hash::Hash;

use crate::arith::{GoldenInt, GoldenRat, QuarticInt};

pub trait Ring: Clone + Eq + Hash + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

macro_rules! impl_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn one() -> Self {
                <$t>::one()
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
            fn neg(&self) -> Self {
                -self
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
        }
    };
}
impl_ring!(GoldenInt);
impl_ring!(QuarticInt);
impl_ring!(GoldenRat);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    n: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![R::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn diagonal(d: Vec<R>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n);
        for (i, x) in d.into_iter().enumerate() {
            m.data[i * n + i] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.n;
        assert_eq!(n, rhs.n);
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * n + j] = out.data[i * n + j].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut acc = R::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// `gᵀ·metric·g == metric`.
    pub fn preserves(&self, metric: &Self) -> bool {
        self.transpose().mul(metric).mul(self) == *metric
    }
}

/// Bilinear form `uᵀ·G·v`.
pub fn bilinear<R: Ring>(g: &Matrix<R>, u: &[R], v: &[R]) -> R {
    let gv = g.mul_vec(v);
    let mut acc = R::zero();
    for (a, b) in u.iter().zip(&gv) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc.add(&a.mul(b));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_rows(vec![
            vec![GoldenInt::new(1, 2), GoldenInt::new(0, 1)],
            vec![GoldenInt::new(3, 0), GoldenInt::new(-1, 1)],
        ]);
        assert_eq!(m.mul(&Matrix::identity(2)), m);
        assert_eq!(m.pow(3), m.mul(&m).mul(&m));
        assert_eq!(m.transpose().transpose(), m);
    }
}
