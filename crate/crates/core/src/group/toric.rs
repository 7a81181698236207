//! The `{4,4}` reflection group of the square tiling, reduced modulo a
//! translation lattice so that its quotient is a `p × p` torus.
//!
//! Coordinates are doubled: vertices sit on `(2Z)²`, the fundamental
//! triangle has corners `(0,0)`, `(1,0)`, `(1,1)`.

use crate::error::{Error, Result};

use super::enumerate::{closure, GroupIndex};

/// Affine map `v ↦ A·v + t` with `A` a signed permutation matrix and `t`
/// taken modulo `2p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Affine {
    a: [[i8; 2]; 2],
    t: [i64; 2],
}

impl Affine {
    fn compose(&self, g: &Affine, modulus: i64) -> Affine {
        let mut a = [[0i8; 2]; 2];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.a[i][0] * g.a[0][j] + self.a[i][1] * g.a[1][j];
            }
        }
        let mut t = [0i64; 2];
        for (i, ti) in t.iter_mut().enumerate() {
            let v = i64::from(self.a[i][0]) * g.t[0] + i64::from(self.a[i][1]) * g.t[1] + self.t[i];
            *ti = v.rem_euclid(modulus);
        }
        Affine { a, t }
    }

    fn pack(&self) -> u128 {
        let code = self.a.iter().flatten().fold(0u128, |acc, &e| acc * 3 + (e + 1) as u128);
        code | (self.t[0] as u128) << 8 | (self.t[1] as u128) << 40
    }

    fn unpack(key: u128) -> Affine {
        let mut code = key & 0xff;
        let mut flat = [0i8; 4];
        for e in flat.iter_mut().rev() {
            *e = (code % 3) as i8 - 1;
            code /= 3;
        }
        Affine {
            a: [[flat[0], flat[1]], [flat[2], flat[3]]],
            t: [((key >> 8) & 0xffff_ffff) as i64, ((key >> 40) & 0xffff_ffff) as i64],
        }
    }
}

fn generators() -> [Affine; 3] {
    [
        Affine { a: [[-1, 0], [0, 1]], t: [2, 0] },
        Affine { a: [[0, 1], [1, 0]], t: [0, 0] },
        Affine { a: [[1, 0], [0, -1]], t: [0, 0] },
    ]
}

/// Enumerates the quotient group of order `8p²`.
pub fn toric_group(p: usize) -> Result<GroupIndex> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("toric size p = {p} must be at least 2")));
    }
    let modulus = 2 * p as i64;
    let gens = generators();
    let id = Affine { a: [[1, 0], [0, 1]], t: [0, 0] };
    let order = 8 * p * p;
    closure(
        id.pack(),
        gens.len(),
        |x, g| Affine::unpack(x).compose(&gens[g], modulus).pack(),
        order,
        order,
    )
}
