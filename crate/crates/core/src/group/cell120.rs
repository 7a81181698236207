//! The 120-cell as the coset complex of its symmetry group, taken inside
//! the mod-√5 quotient where `⟨r₁,…,r₄⟩` survives intact.

use crate::arith::PrincipalIdeal;
use crate::error::Result;

use super::combinatorial::CombinatorialComplex;
use super::enumerate::{closure, GroupIndex};
use super::quotient::reduced_generators;
use super::tessellation::Tessellation;

/// Order of the `{5,3,3}` Coxeter group.
pub const H4_ORDER: usize = 14_400;

/// `⟨r₄, r₃, r₂, r₁⟩` in that order, so the diagram reads `{5,3,3}` and
/// generator 0 moves the vertex.
pub fn cell120_group() -> Result<GroupIndex> {
    let (ring, gens) = reduced_generators(&PrincipalIdeal::sqrt5())?;
    let acts: Vec<_> = [4, 3, 2, 1].iter().map(|&i| ring.right_action(&gens[i])).collect();
    let id = ring.pack(&ring.identity());
    closure(id, acts.len(), |x, g| ring.apply_packed(x, &acts[g]), H4_ORDER, H4_ORDER)
}

/// Vertices, edges, pentagons and dodecahedra of the 120-cell.
pub fn build_120cell_skeleton() -> Result<CombinatorialComplex> {
    let g = cell120_group()?;
    let t = Tessellation::from_group(&g);
    t.check_uniform()?;
    CombinatorialComplex::from_tessellation(&t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_degrees() {
        let c = build_120cell_skeleton().unwrap();
        assert_eq!(
            [c.vertex_count(), c.edge_count(), c.face_count(), c.cell_count()],
            [600, 1200, 720, 120]
        );
        assert!((0..600).all(|v| c.degree(v) == 4));
        assert!(c.faces().iter().all(|f| f.len() == 5));
        assert!((0..120).all(|k| c.cells()[k].len() == 12 && c.cell_vertices(k).len() == 20));
    }

    #[test]
    fn subgroup_orders() {
        let g = cell120_group().unwrap();
        assert_eq!(g.order(), H4_ORDER);
        // Vertex stabilizer {3,3}, edge stabilizer ⟨s₀⟩×{3}.
        assert_eq!(g.subgroup_order(0), 24);
        assert_eq!(g.subgroup_order(1), 12);
        assert_eq!(g.subgroup_order(3), 120);
    }

    #[test]
    fn pentagon_chords_are_shorter_than_arcs() {
        let c = build_120cell_skeleton().unwrap();
        for f in c.faces().iter().take(50) {
            let d = c.distances_from(f[0]);
            assert_eq!(d[f[2] as usize], 2);
            assert_eq!(d[f[3] as usize], 2);
        }
    }
}
