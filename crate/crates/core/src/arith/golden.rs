//! Integers of the golden field, `a + b·φ` with `φ² = φ + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element `a + b·φ` of `Z[φ]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GoldenInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt { a: a.into(), b: b.into() }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        GoldenInt { a: a.into(), b: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn phi() -> Self {
        Self::new(0, 1)
    }

    /// `√5 = 2φ − 1`.
    pub fn sqrt5() -> Self {
        Self::new(-1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate: `φ ↦ 1 − φ`.
    pub fn conj(&self) -> Self {
        GoldenInt { a: &self.a + &self.b, b: -&self.b }
    }

    /// Field norm `a² + ab − b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Exact sign of the real embedding `φ = (1 + √5)/2`.
    pub fn signum(&self) -> i32 {
        // Sign of 2a + b + b√5.
        let p = BigInt::from(2) * &self.a + &self.b;
        sign_p_plus_q_sqrt5(&p, &self.b)
    }

    pub fn to_f64(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        bigint_to_f64(&self.a) + bigint_to_f64(&self.b) * phi
    }

    /// Exact division, `None` when `rhs` does not divide `self`.
    pub fn checked_div(&self, rhs: &GoldenInt) -> Option<GoldenInt> {
        let n = rhs.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &rhs.conj();
        let (qa, ra) = num.a.div_rem(&n);
        let (qb, rb) = num.b.div_rem(&n);
        if ra.is_zero() && rb.is_zero() {
            Some(GoldenInt { a: qa, b: qb })
        } else {
            None
        }
    }

    pub fn divides(&self, other: &GoldenInt) -> bool {
        other.checked_div(self).is_some()
    }

    pub fn pow(&self, mut e: u32) -> GoldenInt {
        let mut base = self.clone();
        let mut acc = GoldenInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Sign of `p + q√5` for integers `p, q`.
pub fn sign_p_plus_q_sqrt5(p: &BigInt, q: &BigInt) -> i32 {
    let sp = sgn(p);
    let sq = sgn(q);
    if sq == 0 {
        return sp;
    }
    if sp == 0 {
        return sq;
    }
    if sp == sq {
        return sp;
    }
    // Opposite signs: compare p² with 5q².
    let lhs = p * p;
    let rhs = BigInt::from(5) * q * q;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => sp,
        std::cmp::Ordering::Less => sq,
        std::cmp::Ordering::Equal => 0,
    }
}

pub(crate) fn sgn(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn bigint_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}φ", self.b)
        } else if self.b.is_negative() {
            write!(f, "{} - {}φ", self.a, -&self.b)
        } else {
            write!(f, "{} + {}φ", self.a, self.b)
        }
    }
}

impl<'a> Add<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        let bb = &self.b * &rhs.b;
        GoldenInt {
            a: &self.a * &rhs.a + &bb,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bb,
        }
    }
}

impl Neg for &GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GoldenInt {
            type Output = GoldenInt;
            fn $m(self, rhs: GoldenInt) -> GoldenInt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GoldenInt {
        GoldenInt::new(a, b)
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        assert_eq!(&GoldenInt::phi() * &GoldenInt::phi(), g(1, 1));
    }

    #[test]
    fn norm_of_two_phi() {
        assert_eq!(g(0, 2).norm(), BigInt::from(-4));
    }

    #[test]
    fn sqrt5_squares_to_five() {
        assert_eq!(&GoldenInt::sqrt5() * &GoldenInt::sqrt5(), g(5, 0));
        assert_eq!(GoldenInt::sqrt5().norm(), BigInt::from(-5));
    }

    #[test]
    fn division() {
        let x = &g(3, -2) * &g(7, 5);
        assert_eq!(x.checked_div(&g(7, 5)), Some(g(3, -2)));
        assert_eq!(g(1, 0).checked_div(&g(2, 0)), None);
        assert!(g(0, 1).is_unit());
    }

    #[test]
    fn signs() {
        assert_eq!(g(-1, 1).signum(), 1); // φ − 1 ≈ 0.618
        assert_eq!(g(2, -1).signum(), 1); // 2 − φ ≈ 0.382
        assert_eq!(g(-2, 1).signum(), -1);
        assert_eq!(g(0, 0).signum(), 0);
        assert_eq!(g(-8, 5).signum(), 1); // 5φ − 8 ≈ 0.09
        assert_eq!(g(8, -5).signum(), -1);
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in -1000i64..1000, b in -1000i64..1000,
                                  c in -1000i64..1000, d in -1000i64..1000) {
            let x = g(a, b);
            let y = g(c, d);
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn conj_is_ring_hom(a in -100i64..100, b in -100i64..100,
                            c in -100i64..100, d in -100i64..100) {
            let x = g(a, b);
            let y = g(c, d);
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
            prop_assert_eq!(&x * &x.conj(), GoldenInt::from_int(x.norm()));
        }

        #[test]
        fn signum_matches_float(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            let x = g(a, b);
            let f = x.to_f64();
            if f.abs() > 1e-6 {
                prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
            }
        }
    }
}
