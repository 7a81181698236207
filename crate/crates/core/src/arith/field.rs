//! The field `Q(√5)`, used where exact geometry needs division.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::golden::{sign_p_plus_q_sqrt5, GoldenInt};

/// `a + b·φ` with rational `a, b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenRat {
    pub a: BigRational,
    pub b: BigRational,
}

impl GoldenRat {
    pub fn zero() -> Self {
        GoldenRat { a: BigRational::zero(), b: BigRational::zero() }
    }

    pub fn one() -> Self {
        GoldenRat { a: BigRational::one(), b: BigRational::zero() }
    }

    pub fn from_int(x: i64) -> Self {
        GoldenRat { a: BigRational::from_integer(x.into()), b: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        GoldenRat { a: &self.a + &self.b, b: -&self.b }
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(GoldenRat { a: c.a / &n, b: c.b / n })
    }

    pub fn signum(&self) -> i32 {
        // Sign of (2a + b) + b√5 after clearing the common denominator.
        let den = num_integer::Integer::lcm(self.a.denom(), self.b.denom());
        let a = (&self.a * BigRational::from_integer(den.clone())).to_integer();
        let b = (&self.b * BigRational::from_integer(den)).to_integer();
        let p = BigInt::from(2) * a + &b;
        sign_p_plus_q_sqrt5(&p, &b)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * phi
    }
}

impl From<&GoldenInt> for GoldenRat {
    fn from(g: &GoldenInt) -> Self {
        GoldenRat {
            a: BigRational::from_integer(g.a.clone()),
            b: BigRational::from_integer(g.b.clone()),
        }
    }
}

impl<'a> Add<&'a GoldenRat> for &'a GoldenRat {
    type Output = GoldenRat;
    fn add(self, rhs: &GoldenRat) -> GoldenRat {
        GoldenRat { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a GoldenRat> for &'a GoldenRat {
    type Output = GoldenRat;
    fn sub(self, rhs: &GoldenRat) -> GoldenRat {
        GoldenRat { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a GoldenRat> for &'a GoldenRat {
    type Output = GoldenRat;
    fn mul(self, rhs: &GoldenRat) -> GoldenRat {
        let bb = &self.b * &rhs.b;
        GoldenRat {
            a: &self.a * &rhs.a + &bb,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bb,
        }
    }
}

impl<'a> Div<&'a GoldenRat> for &'a GoldenRat {
    type Output = GoldenRat;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GoldenRat) -> GoldenRat {
        self * &rhs.inv().expect("division by zero in Q(√5)")
    }
}

impl Neg for &GoldenRat {
    type Output = GoldenRat;
    fn neg(self) -> GoldenRat {
        GoldenRat { a: -&self.a, b: -&self.b }
    }
}

impl GoldenRat {
    pub fn abs(&self) -> GoldenRat {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(a: i64, b: i64) -> GoldenRat {
        GoldenRat::from(&GoldenInt::new(a, b))
    }

    #[test]
    fn inverse_of_phi() {
        let phi = r(0, 1);
        assert_eq!(&phi * &phi.inv().unwrap(), GoldenRat::one());
        assert_eq!(phi.inv().unwrap(), r(-1, 1));
    }

    proptest! {
        #[test]
        fn division_roundtrip(a in -500i64..500, b in -500i64..500,
                              c in -500i64..500, d in -500i64..500) {
            let x = r(a, b);
            let y = r(c, d);
            prop_assume!(!y.is_zero());
            prop_assert_eq!(&(&x / &y) * &y, x);
        }

        #[test]
        fn sign_matches_float(a in -500i64..500, b in -500i64..500, d in 1i64..50) {
            let x = &r(a, b) / &r(d, 0);
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
            }
        }
    }
}
