//! Exact arithmetic in `Z[φ]`, its quotients, and `Z[√φ]`.

pub mod field;
pub mod golden;
pub mod ideal;
pub mod quartic;

pub use field::GoldenRat;
pub use golden::GoldenInt;
pub use ideal::{enumerate_ideals_up_to_norm, ideal_norm, reduce_mod, PrincipalIdeal, QuotientRing, Residue};
pub use quartic::{sign_of, QuarticInt};

/// `σ(a + bφ) = (a + b) − bφ`.
pub fn galois_conjugate(x: &GoldenInt) -> GoldenInt {
    x.conj()
}

pub fn golden_mul(x: &GoldenInt, y: &GoldenInt) -> GoldenInt {
    x * y
}

pub fn quartic_mul(x: &QuarticInt, y: &QuarticInt) -> QuarticInt {
    x * y
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn worked_products() {
        let one_plus = GoldenInt::new(1, 1);
        let one_minus = GoldenInt::new(1, -1);
        assert_eq!(golden_mul(&one_plus, &one_minus), GoldenInt::new(0, -1));
        assert_eq!(galois_conjugate(&GoldenInt::phi()), GoldenInt::new(1, -1));
        assert_eq!(galois_conjugate(&GoldenInt::sqrt5()), GoldenInt::new(1, -2));
        let two_phi = GoldenInt::new(0, 2);
        assert_eq!(golden_mul(&two_phi, &galois_conjugate(&two_phi)), GoldenInt::from_int(-4));
        let s = QuarticInt::s();
        let s3 = quartic_mul(&quartic_mul(&s, &s), &s);
        assert_eq!(quartic_mul(&s3, &s), QuarticInt::new(1, 0, 1, 0));
    }

    proptest! {
        #[test]
        fn quartic_embedding_is_multiplicative(a in -1000i64..1000, b in -1000i64..1000,
                                               c in -1000i64..1000, d in -1000i64..1000) {
            let x = GoldenInt::new(a, b);
            let y = GoldenInt::new(c, d);
            let lhs = quartic_mul(&QuarticInt::from(&x), &QuarticInt::from(&y));
            prop_assert_eq!(lhs, QuarticInt::from(&golden_mul(&x, &y)));
        }

        #[test]
        fn golden_ring_axioms(v in proptest::array::uniform6(-1000i64..1000)) {
            let x = GoldenInt::new(v[0], v[1]);
            let y = GoldenInt::new(v[2], v[3]);
            let z = GoldenInt::new(v[4], v[5]);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(galois_conjugate(&galois_conjugate(&x)), x);
        }
    }
}
