//! Breadth-first closure of a finite group under right multiplication by
//! its generators.

use crate::arith::PrincipalIdeal;
use crate::error::{Error, Result};

use super::quotient::{reduced_generators, MatrixRing};

const EMPTY: u32 = u32::MAX;

/// Open-addressing map from packed element to its index in discovery order.
struct OpenIndex {
    slots: Vec<u32>,
    mask: usize,
}

#[inline]
fn mix(key: u128) -> u64 {
    let lo = key as u64;
    let hi = (key >> 64) as u64;
    let mut h = lo ^ hi.rotate_left(29) ^ 0x9e37_79b9_7f4a_7c15;
    h ^= h >> 33;
    h = h.wrapping_mul(0xff51_afd7_ed55_8ccd);
    h ^= h >> 33;
    h = h.wrapping_mul(0xc4ce_b9fe_1a85_ec53);
    h ^ (h >> 33)
}

impl OpenIndex {
    fn with_capacity(expected: usize) -> Self {
        let cap = (expected * 10 / 7 + 1).next_power_of_two().max(1024);
        OpenIndex { slots: vec![EMPTY; cap], mask: cap - 1 }
    }

    /// Index of `key`, inserting `next` if absent.
    #[inline]
    fn find_or_insert(&mut self, key: u128, elements: &[u128], next: u32) -> (u32, bool) {
        let mut pos = mix(key) as usize & self.mask;
        loop {
            let s = self.slots[pos];
            if s == EMPTY {
                self.slots[pos] = next;
                return (next, true);
            }
            if elements[s as usize] == key {
                return (s, false);
            }
            pos = (pos + 1) & self.mask;
        }
    }

    fn grow(&mut self, elements: &[u128]) {
        let cap = self.slots.len() * 2;
        let mut fresh = OpenIndex { slots: vec![EMPTY; cap], mask: cap - 1 };
        for (i, &k) in elements.iter().enumerate() {
            let mut pos = mix(k) as usize & fresh.mask;
            while fresh.slots[pos] != EMPTY {
                pos = (pos + 1) & fresh.mask;
            }
            fresh.slots[pos] = i as u32;
        }
        *self = fresh;
    }

    fn needs_growth(&self, len: usize) -> bool {
        len * 10 > self.slots.len() * 7
    }
}

/// An enumerated finite group: packed elements in discovery order and, for
/// each generator, the permutation `index(x) ↦ index(x·g)`.
#[derive(Clone, Debug)]
pub struct GroupIndex {
    elements: Vec<u128>,
    actions: Vec<Vec<u32>>,
}

impl GroupIndex {
    pub fn order(&self) -> usize {
        self.actions.first().map_or(self.elements.len(), Vec::len)
    }

    pub fn rank(&self) -> usize {
        self.actions.len()
    }

    /// Packed encodings; empty after [`GroupIndex::drop_elements`].
    pub fn elements(&self) -> &[u128] {
        &self.elements
    }

    pub fn action(&self, generator: usize) -> &[u32] {
        &self.actions[generator]
    }

    pub fn actions(&self) -> &[Vec<u32>] {
        &self.actions
    }

    /// Frees the element table; the action tables are all later stages need.
    pub fn drop_elements(&mut self) {
        self.elements = Vec::new();
    }

    pub fn from_actions(actions: Vec<Vec<u32>>) -> Self {
        GroupIndex { elements: Vec::new(), actions }
    }

    /// Order of the subgroup generated by all generators except `skip`.
    pub fn subgroup_order(&self, skip: usize) -> usize {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for (j, act) in self.actions.iter().enumerate() {
                if j == skip {
                    continue;
                }
                let y = act[x as usize];
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    /// Applies the word `w` (generator indices, left to right) to every
    /// element and reports whether the result is the identity permutation.
    pub fn word_acts_trivially(&self, word: &[usize], stride: usize) -> bool {
        (0..self.order()).step_by(stride.max(1)).all(|x| {
            let y = word.iter().fold(x as u32, |acc, &g| self.actions[g][acc as usize]);
            y as usize == x
        })
    }
}

/// Closure from `identity` under `gens` right-multiplications, with
/// children visited in generator order. Fails once `limit` elements are
/// exceeded.
pub fn closure(
    identity: u128,
    gens: usize,
    product: impl Fn(u128, usize) -> u128,
    capacity_hint: usize,
    limit: usize,
) -> Result<GroupIndex> {
    let mut elements = Vec::with_capacity(capacity_hint);
    let mut actions: Vec<Vec<u32>> = (0..gens).map(|_| Vec::with_capacity(capacity_hint)).collect();
    let mut index = OpenIndex::with_capacity(capacity_hint);
    elements.push(identity);
    index.find_or_insert(identity, &elements, 0);
    let mut head = 0usize;
    while head < elements.len() {
        let x = elements[head];
        for (g, act) in actions.iter_mut().enumerate() {
            let y = product(x, g);
            let next = elements.len() as u32;
            let (idx, fresh) = index.find_or_insert(y, &elements, next);
            if fresh {
                if elements.len() >= limit {
                    return Err(Error::GroupTooLarge { limit });
                }
                elements.push(y);
                if index.needs_growth(elements.len()) {
                    index.grow(&elements);
                }
            }
            act.push(idx);
        }
        head += 1;
    }
    Ok(GroupIndex { elements, actions })
}

/// Initial table size; the index grows on demand past it.
fn capacity_hint(norm: u32) -> usize {
    match norm {
        0..=4 => 1 << 16,
        5 => 18_720_000,
        _ => 1 << 22,
    }
}

/// Enumerates `π_I(Γ)` for an admissible ideal, up to `limit` elements.
pub fn enumerate_group_bounded(ideal: &PrincipalIdeal, limit: usize) -> Result<(MatrixRing, GroupIndex)> {
    let (ring, gens) = reduced_generators(ideal)?;
    let acts: Vec<_> = gens.iter().map(|g| ring.right_action(g)).collect();
    let id = ring.pack(&ring.identity());
    let hint = capacity_hint(ring.ring().size()).min(limit);
    let group = closure(id, acts.len(), |x, g| ring.apply_packed(x, &acts[g]), hint, limit)?;
    Ok((ring, group))
}

/// Default element limit for [`enumerate_group`].
pub const DEFAULT_GROUP_LIMIT: usize = 60_000_000;

pub fn enumerate_group(ideal: &PrincipalIdeal) -> Result<GroupIndex> {
    enumerate_group_bounded(ideal, DEFAULT_GROUP_LIMIT).map(|(_, g)| g)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Dihedral group of order 2m acting on Z/m, as (sign, shift) pairs.
    fn dihedral(m: u128) -> GroupIndex {
        let product = |x: u128, g: usize| {
            let (s, t) = (x >> 64, x & 0xffff);
            // Right-multiply by reflection a: (s, t) -> (1-s, t), or b: (1-s, t+1 or t-1).
            let (s2, t2) = match g {
                0 => (1 - s, t),
                _ => (1 - s, if s == 0 { (t + 1) % m } else { (t + m - 1) % m }),
            };
            (s2 << 64) | t2
        };
        closure(0, 2, product, 16, 1000).unwrap()
    }

    #[test]
    fn dihedral_closure() {
        let g = dihedral(5);
        assert_eq!(g.order(), 10);
        assert_eq!(g.subgroup_order(0), 2);
        assert!(g.word_acts_trivially(&[0, 1, 0, 1, 0, 1, 0, 1, 0, 1], 1));
        assert!(!g.word_acts_trivially(&[0, 1], 1));
    }

    #[test]
    fn limit_is_enforced() {
        let product = |x: u128, _g: usize| x + 1;
        assert!(matches!(closure(0, 1, product, 4, 100), Err(Error::GroupTooLarge { .. })));
    }
}
