use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::group::Tessellation;

/// Face counts of the 4-dimensional hypercube, from the cell itself down to
/// its vertices.
pub const HYPERCUBE_FACES: [i64; 5] = [1, 8, 24, 32, 16];

/// Number of hypercubes sharing each of those faces in `{4,3,3,5}`.
pub const HYPERCUBE_SHARING: [i64; 5] = [1, 2, 5, 20, 600];

pub fn euler_characteristic(t: &Tessellation) -> i64 {
    t.euler_characteristic()
}

/// `Σ (−1)ⁱ fᵢ / mᵢ` over the faces of one cell, each weighted by how many
/// cells share it.
pub fn orbifold_euler_characteristic(faces: &[i64], sharing: &[i64]) -> BigRational {
    faces
        .iter()
        .zip(sharing)
        .enumerate()
        .map(|(i, (&f, &m))| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            BigRational::new(BigInt::from(sign * f), BigInt::from(m))
        })
        .fold(BigRational::from_integer(0.into()), |acc, x| acc + x)
}

/// Qubits per unit of Euler characteristic: 2-faces per cell over the
/// orbifold Euler characteristic.
pub fn qubits_per_euler() -> BigRational {
    let per_cell = BigRational::new(HYPERCUBE_FACES[2].into(), HYPERCUBE_SHARING[2].into());
    per_cell / orbifold_euler_characteristic(&HYPERCUBE_FACES, &HYPERCUBE_SHARING)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RateBound {
    pub k_min: i64,
    /// Numerator and denominator of the limiting rate.
    pub asymptotic_rate: (i64, i64),
}

impl RateBound {
    pub fn asymptotic_rate_f64(&self) -> f64 {
        self.asymptotic_rate.0 as f64 / self.asymptotic_rate.1 as f64
    }
}

/// `k ≥ χ − 2`, since `H₀` and `H₄` contribute one dimension each, and the
/// rate tends to `χ/n`.
pub fn rate_lower_bound(chi: i64, _n: usize) -> RateBound {
    let r = qubits_per_euler().recip();
    let num = i64::try_from(r.numer()).expect("small numerator");
    let den = i64::try_from(r.denom()).expect("small denominator");
    RateBound { k_min: chi - 2, asymptotic_rate: (num, den) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypercube_orbifold_value() {
        // 1 − 4 + 24/5 − 8/5 + 2/75 = 17/75.
        let chi = orbifold_euler_characteristic(&HYPERCUBE_FACES, &HYPERCUBE_SHARING);
        assert_eq!(chi, BigRational::new(17.into(), 75.into()));
        assert_eq!(qubits_per_euler(), BigRational::new(360.into(), 17.into()));
    }

    #[test]
    fn rate() {
        let b = rate_lower_bound(11_050, 234_000);
        assert_eq!(b.k_min, 11_048);
        assert_eq!(b.asymptotic_rate, (17, 360));
        assert!((b.asymptotic_rate_f64() - 0.0472).abs() < 1e-4);
        assert!(b.k_min as f64 / 234_000.0 >= 17.0 / 360.0 - 2.0 / 234_000.0 - 1e-15);
    }
}
