//! Shortcut through a dodecahedral facet of the 120-cell.
//!
//! Take a facet `D` of a 120-cell `P`, a vertex `v₁` of `D`, and a path `S`
//! that leaves `D` at `v₁`, stays in `P ∖ D`, and ends at a vertex `w` one
//! step away from `x ∈ D`. Every vertex of `D` has a single neighbor outside
//! `D`, so `w = out(x)` and the shortest such `S` has length
//! `1 + d_{P∖D}(out(v₁), out(x))`. The replacement runs inside `D` to `x` and
//! steps to `w`, of length `d_D(v₁, x) + 1`. The check is
//! `d_D(v₁, x) < d_{P∖D}(out(v₁), out(x))` for all `v₁ ≠ x`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::group::{build_120cell_skeleton, CombinatorialComplex, UNREACHABLE};

use super::LemmaReport;

pub fn verify_lemma_120cell() -> Result<LemmaReport> {
    Ok(check_skeleton(&build_120cell_skeleton()?))
}

pub fn check_skeleton(p: &CombinatorialComplex) -> LemmaReport {
    let n = p.vertex_count();
    let mut checked = 0u64;
    let mut counterexamples = Vec::new();
    let mut longest_detour = 0u64;
    for cell in 0..p.cell_count() {
        let facet = p.cell_vertices(cell);
        let mut inside = vec![false; n];
        for &v in &facet {
            inside[v as usize] = true;
        }
        let outside: Vec<bool> = inside.iter().map(|&b| !b).collect();
        let out = |v: u32| -> u32 {
            let mut it = p.neighbors(v).iter().copied().filter(|&w| !inside[w as usize]);
            let w = it.next().expect("facet vertex has an outside neighbor");
            debug_assert!(it.next().is_none());
            w
        };
        for &v1 in &facet {
            let in_d = p.distances_within(v1, &inside);
            let in_rest = p.distances_within(out(v1), &outside);
            for &x in &facet {
                if x == v1 {
                    continue;
                }
                checked += 1;
                let detour = in_rest[out(x) as usize];
                if detour != UNREACHABLE {
                    longest_detour = longest_detour.max(detour as u64);
                }
                if in_d[x as usize] >= detour {
                    counterexamples.push(vec![cell as u32, v1, x]);
                }
            }
        }
    }
    let mut details = BTreeMap::new();
    details.insert("vertices".to_string(), p.vertex_count() as u64);
    details.insert("edges".to_string(), p.edge_count() as u64);
    details.insert("facets".to_string(), p.cell_count() as u64);
    details.insert("longest_outside_path".to_string(), longest_detour + 1);
    LemmaReport { lemma: "120cell".into(), checked, counterexamples, budget_exhausted: false, details }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_on_the_120_cell() {
        let r = verify_lemma_120cell().unwrap();
        assert_eq!(r.checked, 120 * 20 * 19);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn adjacent_pairs_need_a_long_detour() {
        // Girth 5: an edge of D plus the two outside edges cannot close up
        // in fewer than two more steps.
        let p = build_120cell_skeleton().unwrap();
        let facet = p.cell_vertices(0);
        let inside: Vec<bool> = (0..600u32).map(|v| facet.binary_search(&v).is_ok()).collect();
        let outside: Vec<bool> = inside.iter().map(|&b| !b).collect();
        let out = |v: u32| *p.neighbors(v).iter().find(|&&w| !inside[w as usize]).unwrap();
        let (a, b) = (facet[0], *p.neighbors(facet[0]).iter().find(|&&w| inside[w as usize]).unwrap());
        let d = p.distances_within(out(a), &outside)[out(b) as usize];
        assert!(d >= 2);
    }
}
