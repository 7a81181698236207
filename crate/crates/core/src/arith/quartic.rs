//! Integers of the quartic field generated by `s = √φ`, written in the
//! basis `1, s, s², s³` with `s⁴ = s² + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::golden::GoldenInt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuarticInt {
    pub c: [BigInt; 4],
}

impl QuarticInt {
    pub fn new(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        QuarticInt { c: [c0.into(), c1.into(), c2.into(), c3.into()] }
    }

    pub fn zero() -> Self {
        Self::new(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0, 0, 0)
    }

    /// `s = √φ`, i.e. `sinh t` for the translation length with `cosh t = φ`.
    pub fn s() -> Self {
        Self::new(0, 1, 0, 0)
    }

    /// `φ = s²`.
    pub fn phi() -> Self {
        Self::new(0, 0, 1, 0)
    }

    /// `1/s = s³ − s`.
    pub fn s_inv() -> Self {
        Self::new(0, -1, 0, 1)
    }

    pub fn from_int(a: i64) -> Self {
        Self::new(a, 0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Splits `x = A + s·B` with `A, B ∈ Z[φ]`.
    pub fn split(&self) -> (GoldenInt, GoldenInt) {
        (
            GoldenInt { a: self.c[0].clone(), b: self.c[2].clone() },
            GoldenInt { a: self.c[1].clone(), b: self.c[3].clone() },
        )
    }

    /// Returns the golden integer if `self` lies in `Z[φ]`.
    pub fn as_golden(&self) -> Option<GoldenInt> {
        let (a, b) = self.split();
        if b.is_zero() {
            Some(a)
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let s = phi.sqrt();
        let mut acc = 0.0;
        let mut p = 1.0;
        for c in &self.c {
            acc += super::golden::bigint_to_f64(c) * p;
            p *= s;
        }
        acc
    }

    /// Exact sign of the real value with `s ≈ 1.272`.
    pub fn signum(&self) -> i32 {
        sign_of(self)
    }
}

impl From<&GoldenInt> for QuarticInt {
    fn from(g: &GoldenInt) -> Self {
        QuarticInt { c: [g.a.clone(), BigInt::zero(), g.b.clone(), BigInt::zero()] }
    }
}

/// Decides the sign by bisecting a rational interval around `s`, the
/// positive root of `x⁴ − x² − 1` in `[1, 2]`.
///
/// Terminates because `1, s, s², s³` are linearly independent over `Q`, so
/// a nonzero coefficient vector has a nonzero value.
pub fn sign_of(x: &QuarticInt) -> i32 {
    if x.is_zero() {
        return 0;
    }
    let coeffs: Vec<BigRational> =
        x.c.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let mut lo = BigRational::one();
    let mut hi = BigRational::from_integer(BigInt::from(2));
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let (vlo, vhi) = eval_interval(&coeffs, &lo, &hi);
        if vlo.is_positive() {
            return 1;
        }
        if vhi.is_negative() {
            return -1;
        }
        let mid = (&lo + &hi) / &two;
        if minimal_poly(&mid).is_positive() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

fn minimal_poly(x: &BigRational) -> BigRational {
    let x2 = x * x;
    &x2 * &x2 - &x2 - BigRational::one()
}

/// Bounds `Σ c_k s^k` for `s ∈ [lo, hi]` with `lo > 0`.
fn eval_interval(
    coeffs: &[BigRational],
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut plo = BigRational::one();
    let mut phi = BigRational::one();
    let mut vlo = BigRational::zero();
    let mut vhi = BigRational::zero();
    for c in coeffs {
        if c.is_positive() {
            vlo += c * &plo;
            vhi += c * &phi;
        } else {
            vlo += c * &phi;
            vhi += c * &plo;
        }
        plo = &plo * lo;
        phi = &phi * hi;
    }
    (vlo, vhi)
}

impl fmt::Display for QuarticInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "s", "s²", "s³"];
        let mut first = true;
        for (c, n) in self.c.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if n.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}{n}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a QuarticInt> for &'a QuarticInt {
    type Output = QuarticInt;
    fn add(self, rhs: &QuarticInt) -> QuarticInt {
        QuarticInt {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl<'a> Sub<&'a QuarticInt> for &'a QuarticInt {
    type Output = QuarticInt;
    fn sub(self, rhs: &QuarticInt) -> QuarticInt {
        QuarticInt {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl<'a> Mul<&'a QuarticInt> for &'a QuarticInt {
    type Output = QuarticInt;
    fn mul(self, rhs: &QuarticInt) -> QuarticInt {
        let mut p: [BigInt; 7] = Default::default();
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                p[i + j] += &self.c[i] * &rhs.c[j];
            }
        }
        // s⁶ = 2s² + 1, s⁵ = s³ + s, s⁴ = s² + 1.
        let [p0, p1, p2, p3, p4, p5, p6] = p;
        QuarticInt {
            c: [
                p0 + &p4 + &p6,
                p1 + &p5,
                p2 + p4 + BigInt::from(2) * p6,
                p3 + p5,
            ],
        }
    }
}

impl Neg for &QuarticInt {
    type Output = QuarticInt;
    fn neg(self) -> QuarticInt {
        QuarticInt { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
}
