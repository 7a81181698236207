//! Plain vertex/edge/face complexes for the small polytopes and disks the
//! lemma checks walk on.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

use super::tessellation::Tessellation;

#[derive(Clone, Debug)]
pub struct CombinatorialComplex {
    vertex_count: usize,
    edges: Vec<[u32; 2]>,
    /// Each face as its boundary vertex cycle.
    faces: Vec<Vec<u32>>,
    /// Each 3-cell as a sorted list of face ids; empty for surfaces.
    cells: Vec<Vec<u32>>,
    neighbors: Vec<Vec<u32>>,
    faces_at: Vec<Vec<u32>>,
}

/// Unreachable marker in distance tables.
pub const UNREACHABLE: u32 = u32::MAX;

impl CombinatorialComplex {
    /// `faces` lists edge ids; they are ordered into vertex cycles here.
    pub fn from_parts(
        vertex_count: usize,
        edges: Vec<[u32; 2]>,
        face_edges: Vec<Vec<u32>>,
        cells: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let mut neighbors = vec![Vec::new(); vertex_count];
        for (i, &[a, b]) in edges.iter().enumerate() {
            if a == b || a as usize >= vertex_count || b as usize >= vertex_count {
                return Err(Error::InvalidParameter(format!("edge {i} = ({a}, {b}) is not a simple edge")));
            }
            neighbors[a as usize].push(b);
            neighbors[b as usize].push(a);
        }
        for (v, ns) in neighbors.iter_mut().enumerate() {
            ns.sort_unstable();
            if ns.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!("vertex {v} has a repeated neighbor")));
            }
        }
        let faces = face_edges
            .iter()
            .enumerate()
            .map(|(f, es)| boundary_cycle(&edges, es).ok_or_else(|| Error::InvalidParameter(format!("face {f} is not a cycle"))))
            .collect::<Result<Vec<_>>>()?;
        let mut faces_at = vec![Vec::new(); vertex_count];
        for (f, cycle) in faces.iter().enumerate() {
            for &v in cycle {
                faces_at[v as usize].push(f as u32);
            }
        }
        Ok(CombinatorialComplex { vertex_count, edges, faces, cells, neighbors, faces_at })
    }

    /// Vertices, edges and 2-faces of a tessellation, plus 3-cells when
    /// present.
    pub fn from_tessellation(t: &Tessellation) -> Result<Self> {
        if t.dimension() < 2 {
            return Err(Error::InvalidParameter("need vertices, edges and faces".into()));
        }
        let mut ends: Vec<Vec<u32>> = vec![Vec::new(); t.face_counts[1]];
        for &(v, e) in &t.incidences[0].pairs {
            ends[e as usize].push(v);
        }
        let edges = ends
            .iter()
            .enumerate()
            .map(|(e, vs)| match vs.as_slice() {
                &[a, b] => Ok([a, b]),
                _ => Err(Error::InvalidParameter(format!("edge {e} has {} endpoints", vs.len()))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut face_edges: Vec<Vec<u32>> = vec![Vec::new(); t.face_counts[2]];
        for &(e, f) in &t.incidences[1].pairs {
            face_edges[f as usize].push(e);
        }
        let mut cells: Vec<Vec<u32>> = Vec::new();
        if t.dimension() >= 3 {
            cells = vec![Vec::new(); t.face_counts[3]];
            for &(f, c) in &t.incidences[2].pairs {
                cells[c as usize].push(f);
            }
        }
        Self::from_parts(t.face_counts[0], edges, face_edges, cells)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn edges(&self) -> &[[u32; 2]] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<u32>] {
        &self.faces
    }

    pub fn cells(&self) -> &[Vec<u32>] {
        &self.cells
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors[v as usize].len()
    }

    pub fn faces_at(&self, v: u32) -> &[u32] {
        &self.faces_at[v as usize]
    }

    /// A vertex is interior when its faces close up around it.
    pub fn is_interior(&self, v: u32) -> bool {
        let d = self.degree(v);
        d >= 3 && self.faces_at(v).len() == d
    }

    /// Sorted vertex set of a 3-cell.
    pub fn cell_vertices(&self, c: usize) -> Vec<u32> {
        let mut vs: Vec<u32> = self.cells[c].iter().flat_map(|&f| self.faces[f as usize].iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// BFS distances from `source`, restricted to vertices with
    /// `allowed[v]`.
    pub fn distances_within(&self, source: u32, allowed: &[bool]) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count];
        if !allowed[source as usize] {
            return dist;
        }
        dist[source as usize] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize] + 1;
            for &w in &self.neighbors[v as usize] {
                if allowed[w as usize] && dist[w as usize] == UNREACHABLE {
                    dist[w as usize] = d;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances_from(&self, source: u32) -> Vec<u32> {
        self.distances_within(source, &vec![true; self.vertex_count])
    }
}

fn boundary_cycle(edges: &[[u32; 2]], face: &[u32]) -> Option<Vec<u32>> {
    if face.len() < 3 {
        return None;
    }
    let mut at: HashMap<u32, Vec<u32>> = HashMap::new();
    for &e in face {
        let [a, b] = *edges.get(e as usize)?;
        at.entry(a).or_default().push(b);
        at.entry(b).or_default().push(a);
    }
    if at.len() != face.len() || at.values().any(|ns| ns.len() != 2) {
        return None;
    }
    let start = *at.keys().min()?;
    let mut cycle = vec![start];
    let (mut prev, mut cur) = (start, at[&start].iter().copied().min()?);
    while cur != start {
        cycle.push(cur);
        let ns = &at[&cur];
        let next = if ns[0] == prev { ns[1] } else { ns[0] };
        prev = cur;
        cur = next;
        if cycle.len() > face.len() {
            return None;
        }
    }
    (cycle.len() == face.len()).then_some(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> CombinatorialComplex {
        CombinatorialComplex::from_parts(4, vec![[0, 1], [1, 2], [2, 3], [3, 0]], vec![vec![0, 1, 2, 3]], vec![]).unwrap()
    }

    #[test]
    fn square_cycle_and_distances() {
        let c = square();
        assert_eq!(c.faces()[0], vec![0, 1, 2, 3]);
        assert_eq!(c.distances_from(0), vec![0, 1, 2, 1]);
        assert!(!c.is_interior(0));
        let blocked = [true, false, true, true];
        assert_eq!(c.distances_within(0, &blocked)[1], UNREACHABLE);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(CombinatorialComplex::from_parts(2, vec![[0, 0]], vec![], vec![]).is_err());
        assert!(CombinatorialComplex::from_parts(2, vec![[0, 1], [1, 0]], vec![], vec![]).is_err());
        assert!(CombinatorialComplex::from_parts(3, vec![[0, 1], [1, 2]], vec![vec![0, 1]], vec![]).is_err());
    }
}
