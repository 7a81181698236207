//! Translation generators, Coxeter reflections and their relations.

use crate::arith::{GoldenInt, QuarticInt};

use super::lorentz::Metric;
use super::matrix::Matrix;

/// Coxeter diagram of the `{4,3,3,5}` tessellation: orders of `rᵢrᵢ₊₁`.
pub const DIAGRAM_4335: [u32; 4] = [4, 3, 3, 5];

/// Order of `rᵢrⱼ` for a string diagram.
pub fn coxeter_order(diagram: &[u32], i: usize, j: usize) -> u32 {
    if i == j {
        1
    } else if i.abs_diff(j) == 1 {
        diagram[i.min(j)]
    } else {
        2
    }
}

fn q(x: i64) -> QuarticInt {
    QuarticInt::from_int(x)
}

/// Pairs `(gᵢ, gᵢ⁻¹)` for `i = 1..4`, translations along coordinate axis
/// `i` with `cosh t = φ` and `sinh t = √φ`.
pub fn translation_generators() -> Vec<(Matrix<QuarticInt>, Matrix<QuarticInt>)> {
    (1..5)
        .map(|axis| {
            let build = |sinh: QuarticInt| {
                let mut m = Matrix::identity(5);
                m.set(0, 0, QuarticInt::phi());
                m.set(axis, axis, QuarticInt::phi());
                m.set(0, axis, sinh.clone());
                m.set(axis, 0, sinh);
                m
            };
            (build(QuarticInt::s()), build(-&QuarticInt::s()))
        })
        .collect()
}

/// The five reflections `r₀..r₄` preserving `metric`.
pub fn coxeter_generators(metric: Metric) -> [Matrix<QuarticInt>; 5] {
    let mut r0 = Matrix::identity(5);
    r0.set(1, 1, q(-1));
    let swap = |a: usize, b: usize| {
        let mut m = Matrix::identity(5);
        m.set(a, a, q(0));
        m.set(b, b, q(0));
        m.set(a, b, q(1));
        m.set(b, a, q(1));
        m
    };
    let mut r4 = Matrix::identity(5);
    r4.set(0, 0, QuarticInt::phi());
    r4.set(0, 4, -&QuarticInt::s());
    r4.set(4, 0, QuarticInt::s());
    r4.set(4, 4, -&QuarticInt::phi());
    let gens = [r0, swap(1, 2), swap(2, 3), swap(3, 4), r4];
    match metric {
        Metric::J => gens,
        Metric::JTilde => gens.map(|g| conjugate_by_p(&g)),
    }
}

/// `P⁻¹·g·P` with `P = diag(√φ, 1, 1, 1, 1)`.
pub fn conjugate_by_p(g: &Matrix<QuarticInt>) -> Matrix<QuarticInt> {
    let mut p = Matrix::identity(5);
    p.set(0, 0, QuarticInt::s());
    let mut p_inv = Matrix::identity(5);
    p_inv.set(0, 0, QuarticInt::s_inv());
    p_inv.mul(g).mul(&p)
}

/// The `J̃` generators with entries in `Z[φ]`, ready for reduction mod an
/// ideal.
pub fn golden_generators() -> [Matrix<GoldenInt>; 5] {
    coxeter_generators(Metric::JTilde)
        .map(|g| g.map(|x| x.as_golden().expect("J̃ generators have entries in Z[φ]")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub i: usize,
    pub j: usize,
    pub order: u32,
    /// `(rᵢrⱼ)^order = id` (for `i == j`, `rᵢ² = id`).
    pub holds: bool,
    /// No smaller positive power is the identity.
    pub exact: bool,
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds && c.exact)
    }

    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !(c.holds && c.exact))
    }
}

/// Checks involutions, string relations and commutations for any ring.
pub fn verify_coxeter_relations<R: super::matrix::Ring>(
    gens: &[Matrix<R>],
    diagram: &[u32],
) -> RelationReport {
    let mut report = RelationReport::default();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let (word, order) = if i == j {
                (gens[i].clone(), 2)
            } else {
                (gens[i].mul(&gens[j]), coxeter_order(diagram, i, j))
            };
            let holds = word.pow(order).is_identity();
            let exact = (1..order).all(|k| order % k != 0 || !word.pow(k).is_identity());
            report.checks.push(RelationCheck { i, j, order, holds, exact });
        }
    }
    report
}
