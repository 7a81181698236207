//! Faces as cosets of the facet subgroups, and their incidence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::enumerate::GroupIndex;

/// Face ids of dimension `dim` for every group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePartition {
    pub dim: usize,
    pub ids: Vec<u32>,
    pub count: usize,
}

/// Orbits of right multiplication by `{r_j : j ≠ dim}`, numbered by their
/// smallest element index.
pub fn face_partition(group: &GroupIndex, dim: usize) -> FacePartition {
    let n = group.order();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            let p = parent[x as usize];
            parent[x as usize] = parent[p as usize];
            x = p;
        }
        x
    }
    for (j, act) in group.actions().iter().enumerate() {
        if j == dim {
            continue;
        }
        for x in 0..n as u32 {
            let y = act[x as usize];
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            // The smaller index becomes the root, so roots are class minima.
            if rx < ry {
                parent[ry as usize] = rx;
            } else if ry < rx {
                parent[rx as usize] = ry;
            }
        }
    }
    // Parents always point to smaller indices, so an ascending pass finds
    // each parent's entry already rewritten to the class id.
    let mut count = 0u32;
    for x in 0..n {
        let p = parent[x] as usize;
        if p == x {
            parent[x] = count;
            count += 1;
        } else {
            parent[x] = parent[p];
        }
    }
    FacePartition { dim, ids: parent, count: count as usize }
}

/// Deduplicated incidence between `lo`-faces and `hi`-faces, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Incidence {
    pub lo: usize,
    pub hi: usize,
    pub pairs: Vec<(u32, u32)>,
    /// Smallest and largest number of group elements in a coset
    /// intersection.
    pub multiplicity: (u32, u32),
}

impl Incidence {
    pub fn is_uniform(&self) -> bool {
        self.multiplicity.0 == self.multiplicity.1
    }

    /// Number of `hi`-faces incident to each `lo`-face.
    pub fn lo_degrees(&self, lo_count: usize) -> Vec<u32> {
        let mut d = vec![0u32; lo_count];
        for &(a, _) in &self.pairs {
            d[a as usize] += 1;
        }
        d
    }

    pub fn hi_degrees(&self, hi_count: usize) -> Vec<u32> {
        let mut d = vec![0u32; hi_count];
        for &(_, b) in &self.pairs {
            d[b as usize] += 1;
        }
        d
    }
}

pub fn incidence(lo: &FacePartition, hi: &FacePartition) -> Incidence {
    assert_eq!(lo.ids.len(), hi.ids.len());
    let mut keys: Vec<u64> = lo
        .ids
        .iter()
        .zip(&hi.ids)
        .map(|(&a, &b)| (u64::from(a) << 32) | u64::from(b))
        .collect();
    keys.sort_unstable();
    let mut pairs = Vec::new();
    let (mut min, mut max) = (u32::MAX, 0u32);
    let mut i = 0;
    while i < keys.len() {
        let mut j = i + 1;
        while j < keys.len() && keys[j] == keys[i] {
            j += 1;
        }
        let run = (j - i) as u32;
        min = min.min(run);
        max = max.max(run);
        pairs.push(((keys[i] >> 32) as u32, keys[i] as u32));
        i = j;
    }
    Incidence { lo: lo.dim, hi: hi.dim, pairs, multiplicity: (min, max) }
}

/// All faces of a quotient tessellation with incidence between
/// consecutive dimensions.
#[derive(Clone, Debug)]
pub struct Tessellation {
    pub face_counts: Vec<usize>,
    pub partitions: Vec<FacePartition>,
    pub incidences: Vec<Incidence>,
}

impl Tessellation {
    pub fn from_group(group: &GroupIndex) -> Self {
        let partitions: Vec<FacePartition> =
            (0..group.rank()).map(|i| face_partition(group, i)).collect();
        let incidences =
            partitions.windows(2).map(|w| incidence(&w[0], &w[1])).collect();
        let face_counts = partitions.iter().map(|p| p.count).collect();
        Tessellation { face_counts, partitions, incidences }
    }

    pub fn from_parts(face_counts: Vec<usize>, incidences: Vec<Incidence>) -> Self {
        Tessellation { face_counts, partitions: Vec::new(), incidences }
    }

    pub fn dimension(&self) -> usize {
        self.face_counts.len() - 1
    }

    /// Frees the per-element face ids once incidences are known.
    pub fn drop_partitions(&mut self) {
        self.partitions = Vec::new();
    }

    pub fn incidence(&self, lo: usize) -> &Incidence {
        &self.incidences[lo]
    }

    /// `Σ (−1)ⁱ · #i-faces`.
    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn check_uniform(&self) -> Result<()> {
        for inc in &self.incidences {
            if !inc.is_uniform() {
                return Err(Error::NonUniformIncidence {
                    lo: inc.lo,
                    hi: inc.hi,
                    min: inc.multiplicity.0,
                    max: inc.multiplicity.1,
                });
            }
        }
        Ok(())
    }
}
