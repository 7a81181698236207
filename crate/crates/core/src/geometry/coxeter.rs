//! Linear Coxeter groups acting on fundamental weights over `Z[φ]`.
//!
//! Every bond order used here has `4cos²(π/m) ∈ Z[φ]`, so the Cartan
//! matrix is integral and the dual action on weight coordinates needs no
//! division. A face of type `k` is an orbit point `w·ω_k`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::arith::{GoldenInt, GoldenRat};
use crate::error::{Error, Result};

use super::matrix::{bilinear, Matrix};

/// `4cos²(π/m)`, or an error for orders outside `Z[φ]`.
fn bond(m: u32) -> Result<GoldenInt> {
    Ok(match m {
        2 => GoldenInt::zero(),
        3 => GoldenInt::one(),
        4 => GoldenInt::from_int(2),
        5 => GoldenInt::new(1, 1),
        6 => GoldenInt::from_int(3),
        10 => GoldenInt::new(2, 1),
        _ => return Err(Error::InvalidParameter(format!("bond order {m} has no Cartan entries in Z[φ]"))),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curvature {
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// A Coxeter group with a linear diagram `m₀₁, m₁₂, …`.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    orders: Vec<u32>,
    /// Symmetrized Cartan matrix `D·A`.
    gram: Matrix<GoldenInt>,
    /// Generators on weight coordinates `c_j = f(α_j)`.
    gens: Vec<Matrix<GoldenInt>>,
}

impl CoxeterSystem {
    pub fn linear(orders: &[u32]) -> Result<Self> {
        let n = orders.len() + 1;
        // a[i][i+1] = -bond, a[i+1][i] = -1, so d[i+1] = d[i]·bond.
        let mut cartan = Matrix::<GoldenInt>::zeros(n);
        let mut d = vec![GoldenInt::one(); n];
        for i in 0..n {
            cartan.set(i, i, GoldenInt::from_int(2));
        }
        for (i, &m) in orders.iter().enumerate() {
            let c = bond(m)?;
            if c.is_zero() {
                return Err(Error::InvalidParameter("disconnected diagrams are not supported".into()));
            }
            cartan.set(i, i + 1, -&c);
            cartan.set(i + 1, i, -&GoldenInt::one());
            d[i + 1] = &d[i] * &c;
        }
        let mut gram = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                gram.set(i, j, &d[i] * cartan.get(i, j));
            }
        }
        debug_assert_eq!(gram, gram.transpose());
        let gens = (0..n)
            .map(|i| {
                let mut s = Matrix::identity(n);
                for m in 0..n {
                    let v = s.get(m, i) - cartan.get(i, m);
                    s.set(m, i, v);
                }
                s
            })
            .collect();
        Ok(CoxeterSystem { orders: orders.to_vec(), gram, gens })
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn generator(&self, i: usize) -> &Matrix<GoldenInt> {
        &self.gens[i]
    }

    pub fn gram(&self) -> &Matrix<GoldenInt> {
        &self.gram
    }

    pub fn curvature(&self) -> Curvature {
        // Every proper subdiagram of the diagrams used here is spherical,
        // so the sign of the determinant decides.
        let det = determinant(&self.gram);
        match det.signum() {
            0 => Curvature::Euclidean,
            s if s > 0 => Curvature::Spherical,
            _ => Curvature::Hyperbolic,
        }
    }

    /// Fundamental weight `ω_k` in weight coordinates.
    pub fn weight(&self, k: usize) -> Vec<GoldenInt> {
        (0..self.rank()).map(|j| if j == k { GoldenInt::one() } else { GoldenInt::zero() }).collect()
    }

    /// Invariant form on weight coordinates, a positive multiple of the
    /// inverse Gram matrix. Only defined when the Gram matrix is
    /// nonsingular.
    pub fn weight_form(&self) -> Option<Matrix<GoldenRat>> {
        let det = determinant(&self.gram);
        if det.is_zero() {
            return None;
        }
        let adj = adjugate(&self.gram);
        let s = det.signum();
        Some(adj.map(|x| {
            let r = GoldenRat::from(x);
            if s < 0 {
                -&r
            } else {
                r
            }
        }))
    }

    /// All elements of the subgroup generated by `which`, which must be
    /// finite and at most `limit` elements.
    pub fn parabolic(&self, which: &[usize], limit: usize) -> Result<Vec<Matrix<GoldenInt>>> {
        let id = Matrix::identity(self.rank());
        let mut seen: HashMap<Matrix<GoldenInt>, ()> = HashMap::from([(id.clone(), ())]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for &i in which {
                let h = g.mul(&self.gens[i]);
                if !seen.contains_key(&h) {
                    if out.len() >= limit {
                        return Err(Error::GroupTooLarge { limit });
                    }
                    seen.insert(h.clone(), ());
                    out.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        Ok(out)
    }

    /// Distinct images `u·ω_k` over `u` in the parabolic subgroup `which`,
    /// each with one group element producing it.
    pub fn orbit_moves(&self, which: &[usize], k: usize, limit: usize) -> Result<Vec<Matrix<GoldenInt>>> {
        let w = self.weight(k);
        let mut seen = HashSet::new();
        let mut moves = Vec::new();
        for u in self.parabolic(which, limit)? {
            if seen.insert(u.mul_vec(&w)) {
                moves.push(u);
            }
        }
        Ok(moves)
    }
}

/// Laplace expansion; the matrices here are at most 5×5.
pub fn determinant(m: &Matrix<GoldenInt>) -> GoldenInt {
    let n = m.dim();
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    minor(m, &rows, &cols)
}

fn minor(m: &Matrix<GoldenInt>, rows: &[usize], cols: &[usize]) -> GoldenInt {
    match rows.len() {
        0 => GoldenInt::one(),
        1 => m.get(rows[0], cols[0]).clone(),
        _ => {
            let mut acc = GoldenInt::zero();
            for (k, &c) in cols.iter().enumerate() {
                let a = m.get(rows[0], c);
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let t = a * &minor(m, &rows[1..], &rest);
                acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

pub fn adjugate(m: &Matrix<GoldenInt>) -> Matrix<GoldenInt> {
    let n = m.dim();
    let mut adj = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let c = minor(m, &rows, &cols);
            adj.set(i, j, if (i + j) % 2 == 0 { c } else { -&c });
        }
    }
    adj
}

/// `uᵀ·M·v` with integral vectors lifted into the field.
pub fn form_value(form: &Matrix<GoldenRat>, u: &[GoldenRat], v: &[GoldenRat]) -> GoldenRat {
    bilinear(form, u, v)
}

pub fn lift(v: &[GoldenInt]) -> Vec<GoldenRat> {
    v.iter().map(GoldenRat::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold() {
        for orders in [vec![4, 5], vec![5, 4], vec![4, 4], vec![5, 3, 3], vec![4, 3, 3, 5]] {
            let g = CoxeterSystem::linear(&orders).unwrap();
            let n = g.rank();
            for i in 0..n {
                assert!(g.generator(i).pow(2).is_identity());
                for j in i + 1..n {
                    let m = if j == i + 1 { orders[i] } else { 2 };
                    let w = g.generator(i).mul(g.generator(j));
                    assert!(w.pow(m).is_identity(), "{orders:?} ({i},{j})");
                    assert!((1..m).all(|k| !w.pow(k).is_identity()));
                }
            }
        }
    }

    #[test]
    fn curvature_of_small_diagrams() {
        assert_eq!(CoxeterSystem::linear(&[4, 5]).unwrap().curvature(), Curvature::Hyperbolic);
        assert_eq!(CoxeterSystem::linear(&[4, 4]).unwrap().curvature(), Curvature::Euclidean);
        assert_eq!(CoxeterSystem::linear(&[3, 5]).unwrap().curvature(), Curvature::Spherical);
        assert_eq!(CoxeterSystem::linear(&[5, 3, 3]).unwrap().curvature(), Curvature::Spherical);
        assert_eq!(CoxeterSystem::linear(&[4, 3, 3, 5]).unwrap().curvature(), Curvature::Hyperbolic);
        assert!(CoxeterSystem::linear(&[7, 3]).is_err());
    }

    #[test]
    fn form_is_invariant_and_weights_are_timelike() {
        for orders in [vec![4, 5], vec![5, 4], vec![4, 3, 3, 5]] {
            let g = CoxeterSystem::linear(&orders).unwrap();
            let m = g.weight_form().unwrap();
            for i in 0..g.rank() {
                let s = g.generator(i).map(|x| GoldenRat::from(x));
                assert!(s.preserves(&m));
                let w = lift(&g.weight(i));
                assert!(form_value(&m, &w, &w).is_negative(), "{orders:?} ω{i}");
            }
        }
    }

    #[test]
    fn parabolic_orders() {
        let g = CoxeterSystem::linear(&[4, 3, 3, 5]).unwrap();
        assert_eq!(g.parabolic(&[0, 1], 100).unwrap().len(), 8);
        assert_eq!(g.parabolic(&[3, 4], 100).unwrap().len(), 10);
        assert_eq!(g.parabolic(&[0, 1, 2], 1000).unwrap().len(), 48);
        // {3,3,5} vertex figure: 120 neighbors per vertex.
        assert_eq!(g.orbit_moves(&[1, 2, 3, 4], 1, 20_000).unwrap().len(), 120);
    }
}
