//! Edge cones and an exact containment test in the weight coordinates of a
//! hyperbolic Coxeter group.
//!
//! The cone of a directed edge `t → h` is the set of points closer to the
//! edge than to any other edge at `h`. All vertices lie in one orbit, so
//! the bisector between edges `h t` and `h b` is the hyperplane
//! `Q(x, t − b) = 0`, which passes through `h`. A cone is therefore the
//! union of geodesic rays from `h` whose directions lie in a polyhedral
//! cone `K` of the tangent space `h^⊥`.
//!
//! The cone from `h` lies in `{Q(x, n) ≥ 0}` iff `Q(h, n) ≥ 0` and
//! `c·|Π_K(−n_⊥)|² ≤ Q(h, n)²`, where `c = −Q(h, h)`, `n_⊥` is the part of
//! `n` orthogonal to `h`, and `Π_K` is the nearest-point projection onto
//! `K`. The projection is found exactly among the faces of `K`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::GoldenRat;

use super::matrix::{bilinear, Matrix};

pub type Vector = Vec<GoldenRat>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    Yes,
    No,
    Undecided,
}

/// An invariant Lorentzian form; timelike vectors have negative norm.
#[derive(Clone, Debug)]
pub struct LorentzForm {
    m: Matrix<GoldenRat>,
}

impl LorentzForm {
    pub fn new(m: Matrix<GoldenRat>) -> Self {
        LorentzForm { m }
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn q(&self, u: &[GoldenRat], v: &[GoldenRat]) -> GoldenRat {
        bilinear(&self.m, u, v)
    }

    /// The linear functional `u ↦ Q(v, u)` as a coefficient row.
    fn functional(&self, v: &[GoldenRat]) -> Vector {
        self.m.transpose().mul_vec(v)
    }
}

#[derive(Clone, Debug)]
pub struct Cone {
    head: Vector,
    /// Bisector normals `t − b`, one per other edge at the head.
    normals: Vec<Vector>,
    /// Extreme directions of `K`.
    rays: Vec<Vector>,
    /// Faces of `K` as sorted ray index sets, the apex and `K` included.
    faces: Vec<Vec<usize>>,
    /// One normal per facet of `K`; the other half-spaces are redundant.
    facets: Vec<usize>,
    projectors: Vec<FaceProjector>,
}

/// Precomputed orthogonal projection onto the span of one face of `K`.
#[derive(Clone, Debug)]
struct FaceProjector {
    basis: Vec<Vector>,
    /// Functionals `Q(b_i, ·)` of the basis rays.
    basis_rows: Vec<Vector>,
    gram_inv: Vec<Vector>,
    /// `Q(b_i, m)` for each facet normal `m`, one row per facet.
    facet_values: Vec<Vector>,
}

fn sub(a: &[GoldenRat], b: &[GoldenRat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(a: &[GoldenRat], s: &GoldenRat) -> Vector {
    a.iter().map(|x| x * s).collect()
}

fn dot(a: &[GoldenRat], b: &[GoldenRat]) -> GoldenRat {
    a.iter().zip(b).fold(GoldenRat::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Row-reduces in place and returns the pivot columns.
fn row_reduce(rows: &mut [Vector]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        rows[r] = scale(&rows[r], &inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let t = scale(&rows[r], &f);
                rows[i] = sub(&rows[i], &t);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// A basis of `{u : row·u = 0 for all rows}`.
fn null_space(rows: &[Vector], n: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut u = vec![GoldenRat::zero(); n];
            u[free] = GoldenRat::one();
            for (r, &p) in pivots.iter().enumerate() {
                u[p] = -&m[r][free];
            }
            u
        })
        .collect()
}

fn rank(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let mut m = vectors.to_vec();
    row_reduce(&mut m).len()
}

/// Scales so the first nonzero entry has absolute value 1.
fn normalize(u: Vector) -> Vector {
    match u.iter().find(|x| !x.is_zero()) {
        Some(x) => {
            let inv = x.abs().inv().expect("nonzero");
            scale(&u, &inv)
        }
        None => u,
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl Cone {
    /// Cone of the directed edge `tail → head`; `others` are the remaining
    /// neighbors of `head`.
    pub fn of_edge(form: &LorentzForm, tail: &[GoldenRat], head: &[GoldenRat], others: &[Vector]) -> Cone {
        let normals: Vec<Vector> = others.iter().map(|b| sub(tail, b)).collect();
        // The bisectors nearest the tail bound K; check the rays against
        // every normal and fall back to all of them if that fails.
        let closeness: Vec<GoldenRat> = others.iter().map(|b| form.q(tail, b)).collect();
        let best = closeness.iter().cloned().reduce(|a, b| if (&b - &a).is_positive() { b } else { a });
        let nearest: Vec<usize> = match &best {
            Some(best) => (0..others.len()).filter(|&i| closeness[i] == *best).collect(),
            None => Vec::new(),
        };
        let mut cone = Cone { head: head.to_vec(), normals, rays: Vec::new(), faces: Vec::new(), facets: Vec::new(), projectors: Vec::new() };
        if !cone.build_rays(form, &nearest) {
            let all: Vec<usize> = (0..cone.normals.len()).collect();
            cone.build_rays(form, &all);
        }
        cone
    }

    pub fn head(&self) -> &[GoldenRat] {
        &self.head
    }

    pub fn normals(&self) -> &[Vector] {
        &self.normals
    }

    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    /// Image under an isometry `g` of the form. Gram data carry over.
    pub fn transport(&self, form: &LorentzForm, g: &Matrix<GoldenRat>) -> Cone {
        let map = |v: &Vector| g.mul_vec(v);
        Cone {
            head: map(&self.head),
            normals: self.normals.iter().map(map).collect(),
            rays: self.rays.iter().map(map).collect(),
            faces: self.faces.clone(),
            facets: self.facets.clone(),
            projectors: self
                .projectors
                .iter()
                .map(|f| {
                    let basis: Vec<Vector> = f.basis.iter().map(map).collect();
                    FaceProjector {
                        basis_rows: basis.iter().map(|b| form.functional(b)).collect(),
                        basis,
                        gram_inv: f.gram_inv.clone(),
                        facet_values: f.facet_values.clone(),
                    }
                })
                .collect(),
        }
    }

    /// Normals of the facets of `K`.
    pub fn facet_normals(&self) -> impl Iterator<Item = &Vector> {
        self.facets.iter().map(|&i| &self.normals[i])
    }

    fn inside(&self, form: &LorentzForm, u: &[GoldenRat]) -> bool {
        self.normals.iter().all(|m| !form.q(u, m).is_negative())
    }

    /// Rays from `(d−1)`-subsets of `bounding`, where `d = dim h^⊥`.
    /// Returns false when the rays do not span a full-dimensional cone.
    fn build_rays(&mut self, form: &LorentzForm, bounding: &[usize]) -> bool {
        let n = form.dim();
        let d = n - 1;
        let h_row = form.functional(&self.head);
        let mut rays: Vec<Vector> = Vec::new();
        for subset in k_subsets(bounding.len(), d - 1) {
            let mut rows = vec![h_row.clone()];
            rows.extend(subset.iter().map(|&i| form.functional(&self.normals[bounding[i]])));
            let ns = null_space(&rows, n);
            if ns.len() != 1 {
                continue;
            }
            let u = normalize(ns.into_iter().next().expect("one vector"));
            for cand in [u.clone(), u.iter().map(|x| -x).collect::<Vector>()] {
                if self.inside(form, &cand) && !rays.contains(&cand) {
                    rays.push(cand);
                }
            }
        }
        if rank(&rays) < d {
            return false;
        }
        self.rays = rays;
        let (faces, facets) = self.face_lattice(form, d);
        self.faces = faces;
        self.facets = facets;
        self.projectors = self.faces.iter().filter_map(|f| self.projector(form, f)).collect();
        true
    }

    fn projector(&self, form: &LorentzForm, face: &[usize]) -> Option<FaceProjector> {
        let mut basis: Vec<Vector> = Vec::new();
        for &r in face {
            let mut trial = basis.clone();
            trial.push(self.rays[r].clone());
            if rank(&trial) > basis.len() {
                basis = trial;
            }
        }
        if basis.is_empty() {
            return None;
        }
        let k = basis.len();
        let mut aug: Vec<Vector> = (0..k)
            .map(|i| {
                let mut row: Vector = (0..k).map(|j| form.q(&basis[i], &basis[j])).collect();
                row.extend((0..k).map(|j| if i == j { GoldenRat::one() } else { GoldenRat::zero() }));
                row
            })
            .collect();
        row_reduce(&mut aug);
        let gram_inv = aug.into_iter().map(|row| row[k..].to_vec()).collect();
        let facet_values = self
            .facets
            .iter()
            .map(|&m| basis.iter().map(|b| form.q(b, &self.normals[m])).collect())
            .collect();
        Some(FaceProjector { basis: basis.clone(), basis_rows: basis.iter().map(|b| form.functional(b)).collect(), gram_inv, facet_values })
    }

    fn face_lattice(&self, form: &LorentzForm, d: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut facets = Vec::new();
        for (i, m) in self.normals.iter().enumerate() {
            let tight: Vec<usize> = (0..self.rays.len()).filter(|&r| form.q(&self.rays[r], m).is_zero()).collect();
            if faces.contains(&tight) {
                continue;
            }
            let span: Vec<Vector> = tight.iter().map(|&r| self.rays[r].clone()).collect();
            if rank(&span) == d - 1 {
                faces.insert(tight);
                facets.push(i);
            }
        }
        loop {
            let current: Vec<Vec<usize>> = faces.iter().cloned().collect();
            let before = faces.len();
            for (i, a) in current.iter().enumerate() {
                for b in &current[i + 1..] {
                    let meet: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
                    faces.insert(meet);
                }
            }
            if faces.len() == before {
                break;
            }
        }
        faces.insert((0..self.rays.len()).collect());
        faces.insert(Vec::new());
        (faces.into_iter().collect(), facets)
    }

    /// `|Π_K(z)|²` for `z ∈ h^⊥`, as the largest squared norm of a face
    /// projection that lands in `K`.
    fn projection_norm2(&self, z: &[GoldenRat]) -> GoldenRat {
        let mut best = GoldenRat::zero();
        for f in &self.projectors {
            let rhs: Vector = f.basis_rows.iter().map(|r| dot(r, z)).collect();
            let lambda: Vector = f.gram_inv.iter().map(|r| dot(r, &rhs)).collect();
            if f.facet_values.iter().any(|row| dot(row, &lambda).is_negative()) {
                continue;
            }
            let norm2 = dot(&lambda, &rhs);
            if (&norm2 - &best).is_positive() {
                best = norm2;
            }
        }
        best
    }

    /// Whether the cone lies in the half-space `{Q(x, n) ≥ 0}`.
    fn within(&self, form: &LorentzForm, n: &[GoldenRat]) -> bool {
        let h = &self.head;
        let a = form.q(h, n);
        if a.is_negative() {
            return false;
        }
        // Every ray on the good side: K lies in the half-space outright.
        let along: Vec<GoldenRat> = self.rays.iter().map(|u| form.q(u, n)).collect();
        if along.iter().all(|x| !x.is_negative()) {
            return true;
        }
        let hh = form.q(h, h);
        let c = -&hh;
        // A single ray escaping at infinity already decides.
        for (u, x) in self.rays.iter().zip(&along) {
            if x.is_negative() && (&(&c * &(x * x)) - &(&(&a * &a) * &form.q(u, u))).is_positive() {
                return false;
            }
        }
        let beta = &a / &hh;
        let n_perp = sub(n, &scale(h, &beta));
        let z: Vector = n_perp.iter().map(|x| -x).collect();
        let lhs = &c * &self.projection_norm2(&z);
        !(&lhs - &(&a * &a)).is_positive()
    }
}

/// Whether `inner ⊆ outer`, decided exactly from the extreme directions of
/// `inner`. `Undecided` only when those could not be computed.
pub fn cone_contains(form: &LorentzForm, outer: &Cone, inner: &Cone) -> Containment {
    if inner.rays.is_empty() {
        return Containment::Undecided;
    }
    if outer.facets.iter().all(|&i| inner.within(form, &outer.normals[i])) {
        Containment::Yes
    } else {
        Containment::No
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_of_a_plane() {
        let r = |v: &[i64]| v.iter().map(|&x| GoldenRat::from_int(x)).collect::<Vector>();
        let ns = null_space(&[r(&[1, 1, 0])], 3);
        assert_eq!(ns.len(), 2);
        assert!(ns.iter().all(|u| dot(u, &r(&[1, 1, 0])).is_zero()));
        assert_eq!(rank(&[r(&[1, 2]), r(&[2, 4])]), 1);
        assert_eq!(k_subsets(4, 2).len(), 6);
    }
}
