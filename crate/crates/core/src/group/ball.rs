//! Neighborhoods of a face: everything whose vertices lie within a given
//! edge distance of the face's vertices.

use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::tessellation::{Incidence, Tessellation};

#[derive(Clone, Debug)]
pub struct LocalBall {
    /// Global ids per dimension, sorted; local id = position.
    pub faces: Vec<Vec<u32>>,
    pub tessellation: Tessellation,
}

impl LocalBall {
    pub fn size(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }
}

fn adjacency(inc: &Incidence, lo_count: usize, hi_count: usize) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let mut up = vec![Vec::new(); lo_count];
    let mut down = vec![Vec::new(); hi_count];
    for &(a, b) in &inc.pairs {
        up[a as usize].push(b);
        down[b as usize].push(a);
    }
    (up, down)
}

pub fn local_ball(t: &Tessellation, seed_dim: usize, seed: u32, radius: u32) -> Result<LocalBall> {
    let dims = t.face_counts.len();
    if seed_dim >= dims || seed as usize >= t.face_counts[seed_dim] {
        return Err(Error::InvalidParameter(format!("no {seed_dim}-face {seed}")));
    }
    let links: Vec<_> = (0..dims - 1).map(|k| adjacency(&t.incidences[k], t.face_counts[k], t.face_counts[k + 1])).collect();

    // Vertices of the seed.
    let mut frontier = vec![seed];
    for k in (0..seed_dim).rev() {
        let mut next: Vec<u32> = frontier.iter().flat_map(|&c| links[k].1[c as usize].iter().copied()).collect();
        next.sort_unstable();
        next.dedup();
        frontier = next;
    }

    let mut dist = vec![u32::MAX; t.face_counts[0]];
    let mut queue = VecDeque::new();
    for &v in &frontier {
        dist[v as usize] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize];
        if d == radius {
            continue;
        }
        for &e in &links[0].0[v as usize] {
            for &w in &links[0].1[e as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = d + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut included: Vec<Vec<bool>> = vec![dist.iter().map(|&d| d != u32::MAX).collect()];
    for k in 1..dims {
        let mut inc = vec![false; t.face_counts[k]];
        for (lo, &yes) in included[k - 1].iter().enumerate() {
            if !yes {
                continue;
            }
            for &c in &links[k - 1].0[lo] {
                if !inc[c as usize] {
                    inc[c as usize] = links[k - 1].1[c as usize].iter().all(|&f| included[k - 1][f as usize]);
                }
            }
        }
        included.push(inc);
    }

    let faces: Vec<Vec<u32>> =
        included.iter().map(|inc| (0..inc.len() as u32).filter(|&i| inc[i as usize]).collect()).collect();
    let local = |k: usize, g: u32| faces[k].binary_search(&g).expect("included face") as u32;
    let incidences = t
        .incidences
        .iter()
        .map(|inc| {
            let pairs: Vec<(u32, u32)> = inc
                .pairs
                .iter()
                .filter(|&&(a, b)| included[inc.hi][b as usize] && included[inc.lo][a as usize])
                .map(|&(a, b)| (local(inc.lo, a), local(inc.hi, b)))
                .collect();
            Incidence { lo: inc.lo, hi: inc.hi, pairs, multiplicity: inc.multiplicity }
        })
        .collect();
    let counts = faces.iter().map(Vec::len).collect();
    Ok(LocalBall { tessellation: Tessellation::from_parts(counts, incidences), faces })
}
