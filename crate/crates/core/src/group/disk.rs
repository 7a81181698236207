//! Finite disks of a `{p,q}` tiling grown face by face from a base face.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::arith::GoldenInt;
use crate::error::{Error, Result};
use crate::geometry::{CoxeterSystem, Matrix};

use super::combinatorial::CombinatorialComplex;

/// Faces within `layers` edge-adjacency steps of the base face of the
/// hyperbolic `{p,q}` tiling, with all their edges and vertices.
pub fn build_h2_disk(p: u32, q: u32, layers: usize) -> Result<CombinatorialComplex> {
    if (p as i64 - 2) * (q as i64 - 2) <= 4 {
        return Err(Error::InvalidParameter(format!("{{{p},{q}}} is not hyperbolic")));
    }
    tiling_disk(p, q, layers)
}

/// Same construction without the curvature check.
pub fn tiling_disk(p: u32, q: u32, layers: usize) -> Result<CombinatorialComplex> {
    if p < 3 || q < 3 {
        return Err(Error::InvalidParameter(format!("{{{p},{q}}} is degenerate")));
    }
    let sys = CoxeterSystem::linear(&[p, q])?;
    let face_group = sys.parabolic(&[0, 1], 4 * p as usize)?;
    let s2 = sys.generator(2);
    let across: Vec<Matrix<GoldenInt>> = face_group.iter().map(|u| u.mul(s2)).collect();
    let (w0, w1, w2) = (sys.weight(0), sys.weight(1), sys.weight(2));

    let mut face_ids: HashMap<Vec<GoldenInt>, u32> = HashMap::new();
    let mut frames = vec![Matrix::identity(3)];
    face_ids.insert(w2.clone(), 0);
    let mut queue = VecDeque::from([(0u32, 0usize)]);
    while let Some((f, depth)) = queue.pop_front() {
        if depth == layers {
            continue;
        }
        let frame = frames[f as usize].clone();
        for a in &across {
            let g = frame.mul(a);
            let key = g.mul_vec(&w2);
            if let Entry::Vacant(e) = face_ids.entry(key) {
                let id = frames.len() as u32;
                e.insert(id);
                frames.push(g);
                queue.push_back((id, depth + 1));
            }
        }
    }

    let mut vertex_ids: HashMap<Vec<GoldenInt>, u32> = HashMap::new();
    let mut edge_ids: HashMap<Vec<GoldenInt>, u32> = HashMap::new();
    let mut edges: Vec<[u32; 2]> = Vec::new();
    let mut face_edges: Vec<Vec<u32>> = Vec::with_capacity(frames.len());
    let intern = |map: &mut HashMap<Vec<GoldenInt>, u32>, key: Vec<GoldenInt>| -> (u32, bool) {
        let next = map.len() as u32;
        match map.get(&key) {
            Some(&id) => (id, false),
            None => {
                map.insert(key, next);
                (next, true)
            }
        }
    };
    let s0 = sys.generator(0);
    for frame in &frames {
        let mut es = Vec::with_capacity(p as usize);
        for u in &face_group {
            let g = frame.mul(u);
            let (e, fresh) = intern(&mut edge_ids, g.mul_vec(&w1));
            if fresh {
                let (a, _) = intern(&mut vertex_ids, g.mul_vec(&w0));
                let (b, _) = intern(&mut vertex_ids, g.mul(s0).mul_vec(&w0));
                edges.push([a.min(b), a.max(b)]);
            }
            if !es.contains(&e) {
                es.push(e);
            }
        }
        face_edges.push(es);
    }
    CombinatorialComplex::from_parts(vertex_ids.len(), edges, face_edges, Vec::new())
}
