//! Vectors of the hyperboloid model and the Lorentzian inner product.

use crate::arith::QuarticInt;
use crate::error::{Error, Result};

use super::matrix::Matrix;

/// Which Lorentzian form a matrix group preserves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    /// `diag(−1, 1, 1, 1, 1)`.
    J,
    /// `diag(−φ, 1, 1, 1, 1)`, the form preserved after conjugating by
    /// `diag(√φ, 1, 1, 1, 1)`.
    JTilde,
}

impl Metric {
    pub fn matrix(self) -> Matrix<QuarticInt> {
        let lead = match self {
            Metric::J => QuarticInt::from_int(-1),
            Metric::JTilde => -&QuarticInt::phi(),
        };
        let mut d = vec![lead];
        d.extend((0..4).map(|_| QuarticInt::one()));
        Matrix::diagonal(d)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LorentzVector {
    Exact([QuarticInt; 5]),
    Float([f64; 5]),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(QuarticInt),
    Float(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64(),
            Scalar::Float(f) => *f,
        }
    }
}

impl LorentzVector {
    pub fn basis(i: usize) -> Self {
        let mut v: [QuarticInt; 5] = Default::default();
        v[i] = QuarticInt::one();
        LorentzVector::Exact(v)
    }
}

/// `−u₀v₀ + Σ uᵢvᵢ`.
pub fn lorentz_inner(u: &LorentzVector, v: &LorentzVector) -> Result<Scalar> {
    match (u, v) {
        (LorentzVector::Exact(u), LorentzVector::Exact(v)) => {
            let mut acc = -&(&u[0] * &v[0]);
            for i in 1..5 {
                acc = &acc + &(&u[i] * &v[i]);
            }
            Ok(Scalar::Exact(acc))
        }
        (LorentzVector::Float(u), LorentzVector::Float(v)) => {
            Ok(Scalar::Float(-u[0] * v[0] + (1..5).map(|i| u[i] * v[i]).sum::<f64>()))
        }
        _ => Err(Error::InvalidParameter("Lorentz vectors in different modes".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_products() {
        let e0 = LorentzVector::basis(0);
        let e1 = LorentzVector::basis(1);
        let e2 = LorentzVector::basis(2);
        assert_eq!(lorentz_inner(&e0, &e0).unwrap(), Scalar::Exact(QuarticInt::from_int(-1)));
        assert_eq!(lorentz_inner(&e1, &e2).unwrap(), Scalar::Exact(QuarticInt::zero()));
        assert!(lorentz_inner(&e0, &LorentzVector::Float([1.0, 0.0, 0.0, 0.0, 0.0])).is_err());
    }

    #[test]
    fn facet_normals_meet_at_the_dihedral_angle() {
        let t: f64 = 1.3;
        let (sh, ch) = ((t / 2.0).sinh(), (t / 2.0).cosh());
        let n1 = LorentzVector::Float([sh, ch, 0.0, 0.0, 0.0]);
        let n2 = LorentzVector::Float([sh, 0.0, ch, 0.0, 0.0]);
        let ip = lorentz_inner(&n1, &n2).unwrap().to_f64();
        assert!((ip + sh * sh).abs() < 1e-12);
    }
}
