//! Edge-path shortening in the `{4,5}` tiling of the hyperbolic plane.
//!
//! Every geodesic path of length 4 starting on a fixed directed edge is
//! enumerated exactly. A path passes when some edge `e_j` has a cone
//! containing the cone of an earlier edge `e_i`. Paths related by the
//! reflection fixing the base edge are counted once.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::geometry::Containment;

use super::explorer::VertexGraph;
use super::LemmaReport;

pub const PLANE_PATH_LENGTH: usize = 4;

/// All geodesic vertex paths of `len` edges from `v0` through `v1`.
pub fn geodesic_paths(g: &mut VertexGraph, v0: u32, v1: u32, len: usize) -> Vec<Vec<u32>> {
    let dist = g.ball(v0, len as u32);
    let mut out = Vec::new();
    let mut stack = vec![vec![v0, v1]];
    while let Some(path) = stack.pop() {
        if path.len() == len + 1 {
            out.push(path);
            continue;
        }
        let last = *path.last().expect("nonempty");
        for w in g.neighbors(last) {
            if dist.get(&w) == Some(&(path.len() as u32)) {
                let mut p = path.clone();
                p.push(w);
                stack.push(p);
            }
        }
    }
    out.sort();
    out
}

/// First `(i, j)` with `i < j` whose cones nest, if any.
pub fn nested_pair(g: &mut VertexGraph, path: &[u32]) -> Option<(usize, usize)> {
    let edges: Vec<(u32, u32)> = path.windows(2).map(|w| (w[0], w[1])).collect();
    for j in 1..edges.len() {
        for i in 0..j {
            if g.contains(edges[j], edges[i]) == Containment::Yes {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn verify_lemma_2d() -> Result<LemmaReport> {
    let mut g = VertexGraph::new(&[4, 5], 1000)?;
    let v0 = 0;
    let v1 = g.neighbors(v0)[0];
    let flip = g.system().generator(2).clone();
    let mut details = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut checked = 0u64;
    for len in 1..=PLANE_PATH_LENGTH {
        let paths = geodesic_paths(&mut g, v0, v1, len);
        let mut classes = BTreeSet::new();
        for p in &paths {
            let image: Vec<u32> = p.iter().map(|&v| g.image(&flip, v).expect("ball is closed under the flip")).collect();
            classes.insert(p.clone().min(image));
        }
        details.insert(format!("geodesic_paths_len{len}"), paths.len() as u64);
        details.insert(format!("path_classes_len{len}"), classes.len() as u64);
        if len == PLANE_PATH_LENGTH {
            for p in &classes {
                checked += 1;
                if nested_pair(&mut g, p).is_none() {
                    counterexamples.push(p.clone());
                }
            }
        }
    }
    details.insert("explored_vertices".into(), g.len() as u64);
    Ok(LemmaReport { lemma: "2d".into(), checked, counterexamples, budget_exhausted: false, details })
}
