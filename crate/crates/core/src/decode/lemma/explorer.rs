//! Lazily explored vertex graph of an infinite regular tessellation, with
//! exact coordinates and cached edge cones.

use std::collections::{HashMap, VecDeque};

use crate::arith::{GoldenInt, GoldenRat};
use crate::error::{Error, Result};
use crate::geometry::coxeter::lift;
use crate::geometry::{cone_contains, Cone, Containment, CoxeterSystem, Curvature, LorentzForm, Matrix};

pub struct VertexGraph {
    sys: CoxeterSystem,
    form: LorentzForm,
    /// One `u` fixing the base vertex per edge at it.
    turns: Vec<Matrix<GoldenInt>>,
    /// `u·s₀`, taking the base vertex to its neighbors.
    moves: Vec<Matrix<GoldenInt>>,
    /// Cone of the edge from the first neighbor into the base vertex.
    base_cone: Option<Cone>,
    ids: HashMap<Vec<GoldenInt>, u32>,
    coords: Vec<Vec<GoldenInt>>,
    frames: Vec<Matrix<GoldenInt>>,
    neighbors: Vec<Option<Vec<u32>>>,
    cones: HashMap<(u32, u32), Cone>,
    containment: HashMap<[u32; 4], Containment>,
}

impl VertexGraph {
    /// `orders` is a linear hyperbolic diagram; vertices are the orbit of
    /// `ω₀`.
    pub fn new(orders: &[u32], stabilizer_limit: usize) -> Result<Self> {
        let sys = CoxeterSystem::linear(orders)?;
        if sys.curvature() != Curvature::Hyperbolic {
            return Err(Error::InvalidParameter(format!("{orders:?} is not hyperbolic")));
        }
        let form = LorentzForm::new(sys.weight_form().expect("hyperbolic forms are nondegenerate"));
        let rest: Vec<usize> = (1..sys.rank()).collect();
        let s0 = sys.generator(0).clone();
        let turns = sys.orbit_moves(&rest, 1, stabilizer_limit)?;
        let moves = turns.iter().map(|u| u.mul(&s0)).collect();
        let mut g = VertexGraph {
            form,
            turns,
            moves,
            base_cone: None,
            ids: HashMap::new(),
            coords: Vec::new(),
            frames: Vec::new(),
            neighbors: Vec::new(),
            cones: HashMap::new(),
            containment: HashMap::new(),
            sys,
        };
        let id = Matrix::identity(g.sys.rank());
        g.intern(id);
        Ok(g)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn form(&self) -> &LorentzForm {
        &self.form
    }

    pub fn degree(&self) -> usize {
        self.moves.len()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self, v: u32) -> &[GoldenInt] {
        &self.coords[v as usize]
    }

    pub fn frame(&self, v: u32) -> &Matrix<GoldenInt> {
        &self.frames[v as usize]
    }

    /// Vertex `frame·ω₀`, added if new.
    pub fn intern(&mut self, frame: Matrix<GoldenInt>) -> u32 {
        let p: Vec<GoldenInt> = (0..frame.dim()).map(|i| frame.get(i, 0).clone()).collect();
        if let Some(&id) = self.ids.get(&p) {
            return id;
        }
        let id = self.coords.len() as u32;
        self.ids.insert(p.clone(), id);
        self.coords.push(p);
        self.frames.push(frame);
        self.neighbors.push(None);
        id
    }

    pub fn lookup(&self, p: &[GoldenInt]) -> Option<u32> {
        self.ids.get(p).copied()
    }

    pub fn neighbors(&mut self, v: u32) -> Vec<u32> {
        if let Some(ns) = &self.neighbors[v as usize] {
            return ns.clone();
        }
        let frame = self.frames[v as usize].clone();
        let ns: Vec<u32> = (0..self.moves.len())
            .map(|k| {
                let f = frame.mul(&self.moves[k]);
                self.intern(f)
            })
            .collect();
        self.neighbors[v as usize] = Some(ns.clone());
        ns
    }

    /// Distances from `source` up to `radius`, over the explored graph.
    pub fn ball(&mut self, source: u32, radius: u32) -> HashMap<u32, u32> {
        let mut dist = HashMap::from([(source, 0u32)]);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            if d == radius {
                continue;
            }
            for w in self.neighbors(v) {
                dist.entry(w).or_insert_with(|| {
                    queue.push_back(w);
                    d + 1
                });
            }
        }
        dist
    }

    /// The cone built from scratch out of the head's neighbors.
    pub fn direct_cone(&mut self, tail: u32, head: u32) -> Cone {
        let others: Vec<_> =
            self.neighbors(head).into_iter().filter(|&b| b != tail).map(|b| lift(&self.coords[b as usize])).collect();
        Cone::of_edge(&self.form, &lift(&self.coords[tail as usize]), &lift(&self.coords[head as usize]), &others)
    }

    /// The cone of `tail → head`, carried over from the base edge by the
    /// symmetry `frame(head)·u_k` where `tail` is the head's `k`-th neighbor.
    pub fn cone(&mut self, tail: u32, head: u32) -> &Cone {
        if !self.cones.contains_key(&(tail, head)) {
            if self.base_cone.is_none() {
                let first = self.neighbors(0)[0];
                self.base_cone = Some(self.direct_cone(first, 0));
            }
            let k = self.neighbors(head).iter().position(|&b| b == tail).expect("tail is adjacent to head");
            let g = self.frames[head as usize].mul(&self.turns[k]).map(|x| GoldenRat::from(x));
            let cone = self.base_cone.as_ref().expect("built above").transport(&self.form, &g);
            self.cones.insert((tail, head), cone);
        }
        &self.cones[&(tail, head)]
    }

    /// Whether the cone of `outer` contains the cone of `inner`, both
    /// directed edges.
    pub fn contains(&mut self, outer: (u32, u32), inner: (u32, u32)) -> Containment {
        let key = [outer.0, outer.1, inner.0, inner.1];
        if let Some(&c) = self.containment.get(&key) {
            return c;
        }
        self.cone(outer.0, outer.1);
        self.cone(inner.0, inner.1);
        let c = cone_contains(&self.form, &self.cones[&outer], &self.cones[&inner]);
        self.containment.insert(key, c);
        c
    }

    /// Image of vertex `v` under the linear map `g`, if already explored.
    pub fn image(&self, g: &Matrix<GoldenInt>, v: u32) -> Option<u32> {
        self.lookup(&g.mul_vec(&self.coords[v as usize]))
    }
}
