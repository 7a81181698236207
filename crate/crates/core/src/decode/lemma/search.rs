//! Budgeted search for long edge paths without nested cones in the
//! `{4,3,3,5}` tiling.
//!
//! Paths start on a fixed directed edge and grow level by level. A prefix
//! is dropped when it stops being locally geodesic (a shortcut of length at
//! most 2 between two of its vertices) or when its last edge's cone
//! contains the cone of an earlier edge. The second vertex is taken up to
//! the stabilizer of the first edge. Prefixes that reach `max_len` are
//! counterexamples.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::geometry::Containment;

use super::explorer::VertexGraph;
use super::LemmaReport;

pub const SEARCH_DIAGRAM: [u32; 4] = [4, 3, 3, 5];
const STABILIZER_LIMIT: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_len: usize,
    /// Cone containment tests allowed.
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_len: 8, budget: 10_000 }
    }
}

/// Whether `w` can extend `path` without a shortcut of length ≤ 2.
fn locally_geodesic(g: &mut VertexGraph, path: &[u32], w: u32) -> bool {
    let k = path.len();
    let last = path[k - 1];
    if path.contains(&w) {
        return false;
    }
    let wn: BTreeSet<u32> = g.neighbors(w).into_iter().collect();
    for (i, &v) in path[..k - 1].iter().enumerate() {
        if wn.contains(&v) {
            return false;
        }
        // Path distance from v to w is k − i; a common neighbor gives 2.
        if k - i > 2 && g.neighbors(v).iter().any(|x| *x != last && wn.contains(x)) {
            return false;
        }
    }
    true
}

pub fn search_lemma_4d(config: SearchConfig) -> Result<LemmaReport> {
    let mut g = VertexGraph::new(&SEARCH_DIAGRAM, STABILIZER_LIMIT)?;
    let stabilizer = g.system().parabolic(&[2, 3, 4], STABILIZER_LIMIT)?;
    let v0 = 0;
    let v1 = g.neighbors(v0)[0];
    let mut details = BTreeMap::new();
    let mut tests = 0u64;
    let mut exhausted = false;
    let mut frontier = vec![vec![v0, v1]];
    let mut depth_done = 1usize;
    details.insert("frontier_len1".to_string(), 1);

    'levels: while depth_done < config.max_len && !frontier.is_empty() {
        let mut next = Vec::new();
        let mut pruned_geodesic = 0u64;
        let mut pruned_cone = 0u64;
        for path in &frontier {
            let last = *path.last().expect("nonempty");
            let mut candidates = g.neighbors(last);
            if path.len() == 2 {
                let mut reps = BTreeSet::new();
                for &w in &candidates {
                    let orbit_min = stabilizer
                        .iter()
                        .map(|s| g.image(s, w).expect("stabilizer permutes the neighbors of v1"))
                        .min()
                        .expect("identity is in the stabilizer");
                    reps.insert(orbit_min);
                }
                candidates = reps.into_iter().collect();
            }
            for w in candidates {
                if !locally_geodesic(&mut g, path, w) {
                    pruned_geodesic += 1;
                    continue;
                }
                let new_edge = (last, w);
                let mut nested = false;
                for e in path.windows(2) {
                    if tests >= config.budget {
                        exhausted = true;
                        break 'levels;
                    }
                    tests += 1;
                    if g.contains(new_edge, (e[0], e[1])) == Containment::Yes {
                        nested = true;
                        break;
                    }
                }
                if nested {
                    pruned_cone += 1;
                } else {
                    let mut p = path.clone();
                    p.push(w);
                    next.push(p);
                }
            }
        }
        depth_done += 1;
        details.insert(format!("pruned_geodesic_len{depth_done}"), pruned_geodesic);
        details.insert(format!("pruned_cone_len{depth_done}"), pruned_cone);
        details.insert(format!("frontier_len{depth_done}"), next.len() as u64);
        frontier = next;
    }
    details.insert("depth_exhausted".into(), depth_done as u64);
    details.insert("containment_tests".into(), tests);
    let counterexamples = if !exhausted && depth_done == config.max_len { frontier } else { Vec::new() };
    Ok(LemmaReport {
        lemma: "search4d".into(),
        checked: tests,
        counterexamples,
        budget_exhausted: exhausted,
        details,
    })
}
