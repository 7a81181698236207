//! Floating-point evaluators for angles and the distance lower bound.

use std::f64::consts::PI;

use serde::Serialize;

/// Dihedral angle between adjacent 3-faces of the hypercube whose facets
/// are translated by `t`.
///
/// Defined for `0 ≤ t ≤ MAX_TRANSLATION`; beyond it adjacent facets no
/// longer meet and the result is NaN.
pub fn dihedral_angle(t: f64) -> f64 {
    let sh = (t / 2.0).sinh();
    PI - (-(sh * sh)).acos()
}

/// `2·arsinh(1)`, where the dihedral angle reaches 0.
pub const MAX_TRANSLATION: f64 = 1.762_747_174_039_086;

/// The translation length giving dihedral angle `2π/5`.
pub fn golden_translation_length() -> f64 {
    2.0 * (2.0 * PI / 5.0).cos().sqrt().asinh()
}

/// Lower bound on the displacement `ρ` of an isometry from `|tr g| ≤ 2cosh ρ + 3`.
pub fn displacement_lower_bound(trace_abs: f64) -> f64 {
    if trace_abs < 5.0 {
        return 0.0;
    }
    ((trace_abs - 3.0) / 2.0).acosh().max(0.0)
}

/// Area of a square 2-face, `2π − 4·(2π/5)`.
pub const SQUARE_AREA: f64 = 2.0 * PI / 5.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistanceBound {
    /// `N²/40 − 5`, from the ideal norm.
    pub trace_bound: f64,
    /// `n^0.2/(2·20^0.8) − 5`, the same bound expressed through `n ≤ N^10/20`.
    pub trace_bound_from_n: f64,
    /// `ln(|tr| − 4)` lower bound on the 1-systole.
    pub systole_bound: f64,
    /// Half the systole.
    pub injectivity_bound: f64,
    /// `(5/2)·e^R − 5`.
    pub distance_bound: f64,
    pub square_area: f64,
    /// Coefficient `c` in `d ≳ c·n^0.1`.
    pub asymptotic_coefficient: f64,
    /// False when any intermediate had to be clamped at zero.
    pub asymptotic_regime_reached: bool,
}

/// Evaluates the chain trace → systole → injectivity radius → distance.
pub fn distance_bound_chain(norm: f64, n: f64) -> DistanceBound {
    let mut reached = true;
    let mut clamp = |x: f64| {
        if x > 0.0 {
            x
        } else {
            reached = false;
            0.0
        }
    };
    let c = 2.0 * 20f64.powf(0.8);
    let trace_bound = clamp(norm * norm / 40.0 - 5.0);
    let trace_bound_from_n = clamp(n.powf(0.2) / c - 5.0);
    let systole_bound = clamp((trace_bound_from_n - 4.0).max(0.0).ln());
    let injectivity_bound = systole_bound / 2.0;
    let distance_bound =
        clamp(if systole_bound > 0.0 { 2.5 * injectivity_bound.exp() - 5.0 } else { 0.0 });
    DistanceBound {
        trace_bound,
        trace_bound_from_n,
        systole_bound,
        injectivity_bound,
        distance_bound,
        square_area: SQUARE_AREA,
        asymptotic_coefficient: 5.0 / (2f64.powf(1.5) * 20f64.powf(0.4)),
        asymptotic_regime_reached: reached,
    }
}

/// Anderson's lower bound `2π(cosh R − 1)` on the area of a disk of radius `R`.
pub fn disk_area_lower_bound(radius: f64) -> f64 {
    2.0 * PI * (radius.cosh() - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PHI: f64 = 1.618_033_988_749_895;

    #[test]
    fn golden_dihedral_angle() {
        let t = golden_translation_length();
        assert!((dihedral_angle(t) - 2.0 * PI / 5.0).abs() < 1e-12);
        assert!((t.cosh() - PHI).abs() < 1e-12);
        assert!((dihedral_angle(0.0) - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn dihedral_angle_decreases() {
        let grid: Vec<f64> = (0..=300)
            .map(|k| k as f64 * 0.01)
            .filter(|&t| t <= MAX_TRANSLATION)
            .collect();
        for w in grid.windows(2) {
            assert!(dihedral_angle(w[1]) < dihedral_angle(w[0]));
        }
        assert!(dihedral_angle(MAX_TRANSLATION).abs() < 1e-6);
        assert!(dihedral_angle(3.0).is_nan());
        assert!((MAX_TRANSLATION - 2.0 * 1f64.asinh()).abs() < 1e-15);
    }

    #[test]
    fn displacement() {
        assert_eq!(displacement_lower_bound(5.0), 0.0);
        assert_eq!(displacement_lower_bound(3.0), 0.0);
        assert!((displacement_lower_bound(2.0 * 1f64.cosh() + 3.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn chain_constants() {
        let b = distance_bound_chain(5.0, 234_000.0);
        assert!((b.square_area - 2.0 * PI / 5.0).abs() < 1e-15);
        assert!((b.asymptotic_coefficient - 0.5334).abs() < 1e-3);
        assert_eq!(b.distance_bound, 0.0);
        assert!(!b.asymptotic_regime_reached);
        let big = distance_bound_chain(1e6, 1e60);
        assert!(big.asymptotic_regime_reached);
        let ratio = big.distance_bound / 1e6;
        assert!((ratio - big.asymptotic_coefficient).abs() < 0.01, "{ratio}");
    }
}
