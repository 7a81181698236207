//! Principal ideals of `Z[φ]` and their finite quotient rings.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::golden::GoldenInt;
use crate::error::{Error, Result};

/// The ideal `g·Z[φ]`, with the Hermite normal form of its lattice in
/// `(a, b)` coordinates: rows `(n1, 0)` and `(m, n2)`, `0 ≤ m < n1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrincipalIdeal {
    generator: GoldenInt,
    norm: BigInt,
    n1: BigInt,
    m: BigInt,
    n2: BigInt,
}

/// A canonical residue `(a, b)` with `0 ≤ a < n1`, `0 ≤ b < n2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    pub a: BigInt,
    pub b: BigInt,
}

impl PrincipalIdeal {
    pub fn new(generator: GoldenInt) -> Result<Self> {
        if generator.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let norm = generator.norm().abs();
        let (a, b) = (&generator.a, &generator.b);
        // Lattice rows: g·1 = (a, b) and g·φ = (b, a + b).
        let apb = a + b;
        let eg = b.extended_gcd(&apb);
        let n2 = eg.gcd.abs();
        let sign = if eg.gcd.is_negative() { -1 } else { 1 };
        let (u, v): (BigInt, BigInt) = (eg.x * sign, eg.y * sign);
        let n1 = &norm / &n2;
        let m = (&u * a + &v * b).mod_floor(&n1);
        Ok(PrincipalIdeal { generator, norm, n1, m, n2 })
    }

    pub fn from_int(m: i64) -> Result<Self> {
        Self::new(GoldenInt::from_int(m))
    }

    pub fn sqrt5() -> Self {
        Self::new(GoldenInt::sqrt5()).expect("nonzero")
    }

    pub fn generator(&self) -> &GoldenInt {
        &self.generator
    }

    /// `|N(g)|`, the number of residues.
    pub fn norm(&self) -> &BigInt {
        &self.norm
    }

    /// Hermite normal form rows `[(n1, 0), (m, n2)]`.
    pub fn hnf(&self) -> [[BigInt; 2]; 2] {
        [[self.n1.clone(), BigInt::zero()], [self.m.clone(), self.n2.clone()]]
    }

    pub fn reduce(&self, x: &GoldenInt) -> Residue {
        let q = x.b.div_floor(&self.n2);
        let b = &x.b - &q * &self.n2;
        let a = (&x.a - &q * &self.m).mod_floor(&self.n1);
        Residue { a, b }
    }

    pub fn contains(&self, x: &GoldenInt) -> bool {
        let r = self.reduce(x);
        r.a.is_zero() && r.b.is_zero()
    }

    /// Same lattice, i.e. generators differ by a unit.
    pub fn same_ideal(&self, other: &PrincipalIdeal) -> bool {
        self.n1 == other.n1 && self.m == other.m && self.n2 == other.n2
    }

    pub fn is_proper(&self) -> bool {
        self.norm > BigInt::from(1)
    }

    /// Builds the residue tables, for norms up to `max_norm`.
    pub fn quotient_ring(&self, max_norm: u32) -> Result<QuotientRing> {
        QuotientRing::new(self, max_norm)
    }
}

impl fmt::Display for PrincipalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

/// Ring morphism `Z[φ] → Z[φ]/I`.
pub fn reduce_mod(x: &GoldenInt, ideal: &PrincipalIdeal) -> Residue {
    ideal.reduce(x)
}

pub fn ideal_norm(ideal: &PrincipalIdeal) -> &BigInt {
    ideal.norm()
}

/// Every proper nonzero ideal of norm at most `bound`, one generator per
/// ideal, sorted by norm then Hermite form.
pub fn enumerate_ideals_up_to_norm(bound: i64) -> Vec<PrincipalIdeal> {
    // Any ideal of norm N has a generator with |a|, |b| ≤ N (multiply by a
    // power of φ to balance the two embeddings), so this scan is exhaustive.
    // The kept generator is the most balanced one, |g| + |σ(g)| minimal.
    let bound_big = BigInt::from(bound);
    let mut found: Vec<(PrincipalIdeal, (i64, bool, bool))> = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let g = GoldenInt::new(a, b);
            let n = g.norm().abs();
            if n.is_zero() || n == BigInt::from(1) || n > bound_big {
                continue;
            }
            let ideal = PrincipalIdeal::new(g.clone()).expect("nonzero");
            let spread = g.to_f64().abs() + g.conj().to_f64().abs();
            let key = ((spread * 1e9).round() as i64, b < 0, a < 0);
            match found.iter_mut().find(|(i, _)| i.same_ideal(&ideal)) {
                Some(slot) => {
                    if key < slot.1 {
                        *slot = (ideal, key);
                    }
                }
                None => found.push((ideal, key)),
            }
        }
    }
    let mut ideals: Vec<PrincipalIdeal> = found.into_iter().map(|(i, _)| i).collect();
    ideals.sort_by(|x, y| {
        (x.norm(), &x.n1, &x.m, &x.n2).cmp(&(y.norm(), &y.n1, &y.m, &y.n2))
    });
    ideals
}

/// `Z[φ]/I` with residues indexed `0..N` and dense operation tables.
///
/// Index of residue `(a, b)` is `a + n1·b`.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    size: u32,
    n1: u32,
    n2: u32,
    m: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

impl QuotientRing {
    fn new(ideal: &PrincipalIdeal, max_norm: u32) -> Result<Self> {
        let size = ideal
            .norm
            .to_u32()
            .filter(|&n| n <= max_norm && n <= u16::MAX as u32)
            .ok_or_else(|| Error::NormTooLarge { norm: ideal.norm.to_string(), max: max_norm })?;
        let n1 = ideal.n1.to_u32().expect("n1 divides norm");
        let n2 = ideal.n2.to_u32().expect("n2 divides norm");
        let m = ideal.m.to_u32().expect("m < n1");
        let mut ring = QuotientRing {
            size,
            n1,
            n2,
            m,
            add: vec![0; (size * size) as usize],
            mul: vec![0; (size * size) as usize],
            neg: vec![0; size as usize],
        };
        for i in 0..size {
            let x = ring.element(i);
            ring.neg[i as usize] = ring.index_of(&-&x);
            for j in 0..size {
                let y = ring.element(j);
                let k = (i * size + j) as usize;
                ring.add[k] = ring.index_of(&(&x + &y));
                ring.mul[k] = ring.index_of(&(&x * &y));
            }
        }
        Ok(ring)
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// The canonical representative of residue `i`.
    pub fn element(&self, i: u32) -> GoldenInt {
        GoldenInt::new(i64::from(i % self.n1), i64::from(i / self.n1))
    }

    pub fn index_of(&self, x: &GoldenInt) -> u16 {
        let n2 = BigInt::from(self.n2);
        let n1 = BigInt::from(self.n1);
        let q = x.b.div_floor(&n2);
        let b = &x.b - &q * &n2;
        let a = (&x.a - &q * BigInt::from(self.m)).mod_floor(&n1);
        let a = a.to_u32().expect("reduced");
        let b = b.to_u32().expect("reduced");
        (a + self.n1 * b) as u16
    }

    pub fn zero(&self) -> u16 {
        0
    }

    pub fn one(&self) -> u16 {
        self.index_of(&GoldenInt::one())
    }

    #[inline]
    pub fn add(&self, x: u16, y: u16) -> u16 {
        self.add[x as usize * self.size as usize + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: u16, y: u16) -> u16 {
        self.mul[x as usize * self.size as usize + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u16) -> u16 {
        self.neg[x as usize]
    }
}
