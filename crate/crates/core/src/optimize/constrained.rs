//! Optima of the fold that must stay below the top edge.
//!
//! With `O'` capped at height `A`, the best case-2 fold lies on the curve
//! `2a = A(1 + (a−b)²)`. Parameterized by `a ∈ [A/2, A]`, the excess along
//! that curve has either an interior local maximum or is best at the vertex
//! `(A, A−1)`. Which one wins switches abruptly at the critical aspect ratio.

use crate::closed_form::{
    constrained_square_cubic, cubic_radical_root, rect_boundary_b_from_a,
    rect_constrained_objective, rect_constrained_slope, square_boundary_a_from_b,
    square_constrained_objective,
};
use crate::error::{invalid, Error, Result};
use crate::optimize::root::find_root;

/// Grid resolution used to bracket stationary points of the boundary
/// objective.
pub const SCAN_POINTS: usize = 1000;

/// Residual tolerance on the slope at a refined stationary point.
const STATIONARY_TOL: f64 = 1e-13;

/// Values closer than this count as a tie, resolved toward the vertex fold.
const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Optimum at a stationary point strictly inside `(A/2, A)`.
    Internal,
    /// Optimum at the vertex `(a, b) = (A, A−1)`.
    Boundary,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Internal => "internal",
            Regime::Boundary => "boundary",
        }
    }
}

/// Constrained optimum for one aspect ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub aspect: f64,
    pub a_opt: f64,
    pub b_opt: f64,
    pub excess: f64,
    pub regime: Regime,
}

/// `b ≤ a`, `2a ≤ 1 + (a−b)²`, `a, b ≥ 0`, each with `1e-12` slack.
pub fn feasible(a: f64, b: f64) -> bool {
    const SLACK: f64 = 1e-12;
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    b <= a + SLACK && 2.0 * a <= 1.0 + (a - b) * (a - b) + SLACK && a >= -SLACK && b >= -SLACK
}

/// `b` of the constrained square optimum, from the cubic in `√b`, checked
/// against the closed radical expression.
pub fn solve_cubic_sqrt_b() -> Result<f64> {
    let t = find_root(constrained_square_cubic, 0.0, 1.0, 1e-15)?;
    let numeric = t.x * t.x;
    let radical = cubic_radical_root();
    if (numeric - radical).abs() > 1e-10 {
        return Err(Error::Internal(format!(
            "cubic root b = {numeric} disagrees with radical expression {radical}"
        )));
    }
    Ok(numeric)
}

pub fn square_constrained_optimum() -> Result<PhasePoint> {
    let b = solve_cubic_sqrt_b()?;
    Ok(PhasePoint {
        aspect: 1.0,
        a_opt: square_boundary_a_from_b(b)?,
        b_opt: b,
        excess: square_constrained_objective(b)?,
        regime: Regime::Internal,
    })
}

/// Best local maximum of the boundary objective strictly inside `(A/2, A)`,
/// as `(a, excess)`.
pub fn best_interior_maximum(aspect: f64) -> Result<Option<(f64, f64)>> {
    if !aspect.is_finite() || aspect < 1.0 {
        return Err(invalid(format!("aspect ratio must be >= 1, got {aspect}")));
    }
    let half = aspect / 2.0;
    let grid = |i: usize| {
        if i == SCAN_POINTS {
            aspect
        } else {
            half + half * i as f64 / SCAN_POINTS as f64
        }
    };
    let slope = |a: f64| rect_constrained_slope(a, aspect).unwrap_or(f64::NAN);

    let mut best: Option<(f64, f64)> = None;
    let mut prev = (grid(0), slope(grid(0)));
    for i in 1..=SCAN_POINTS {
        let a = grid(i);
        let s = slope(a);
        if prev.1 > 0.0 && s <= 0.0 {
            let root = find_root(slope, prev.0, a, STATIONARY_TOL)?;
            if root.x > half && root.x < aspect {
                let e = rect_constrained_objective(root.x, aspect)?;
                if best.is_none_or(|(_, e_best)| e > e_best) {
                    best = Some((root.x, e));
                }
            }
        }
        prev = (a, s);
    }
    Ok(best)
}

/// Maximize the excess subject to `y_e ≤ A` and classify the regime.
pub fn rect_constrained_optimum(aspect: f64) -> Result<PhasePoint> {
    let vertex_excess = aspect - 1.0;
    match best_interior_maximum(aspect)? {
        Some((a, e)) if e - vertex_excess > TIE_TOL => Ok(PhasePoint {
            aspect,
            a_opt: a,
            b_opt: rect_boundary_b_from_a(a, aspect)?,
            excess: e,
            regime: Regime::Internal,
        }),
        _ => Ok(PhasePoint {
            aspect,
            a_opt: aspect,
            b_opt: aspect - 1.0,
            excess: vertex_excess,
            regime: Regime::Boundary,
        }),
    }
}

/// Aspect ratio at which the interior optimum stops beating the vertex fold,
/// bisected on `[1, 1.5]`.
pub fn critical_aspect(tol: f64) -> Result<f64> {
    if tol.is_nan() || tol < 1e-12 {
        return Err(invalid(format!("tolerance must be >= 1e-12, got {tol}")));
    }
    let advantage = |aspect: f64| match best_interior_maximum(aspect) {
        Ok(Some((_, e))) => e - (aspect - 1.0),
        // the interior maximum has merged with the minimum and vanished
        Ok(None) => -1.0,
        Err(_) => f64::NAN,
    };
    let root = find_root(advantage, 1.0, 1.5, tol)
        .map_err(|e| Error::Internal(format!("critical aspect bracket failed: {e}")))?;
    if !root.residual.is_finite() {
        return Err(Error::Internal(
            "critical aspect search hit an invalid objective".into(),
        ));
    }
    Ok(root.x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::case2_ye;
    use std::f64::consts::SQRT_2;

    #[test]
    fn feasible_examples() {
        assert!(feasible(0.543_689_012_692_076_4, 0.248_091_270_169_991_6));
        assert!(!feasible(1.0, 2.0 - SQRT_2));
        assert!(feasible(0.0, 0.0));
        assert!(!feasible(0.3, 0.4));
        assert!(!feasible(f64::NAN, 0.0));
    }

    #[test]
    fn cubic_root_matches_paper_rounding() {
        let b = solve_cubic_sqrt_b().unwrap();
        assert!((b - 0.248).abs() < 5e-4);
        assert!(constrained_square_cubic(b.sqrt()).abs() < 1e-10);
        assert!((square_boundary_a_from_b(b).unwrap() - 0.543).abs() < 1e-3);
    }

    #[test]
    fn square_optimum_sits_on_the_top_edge() {
        let p = square_constrained_optimum().unwrap();
        assert_eq!(p.regime, Regime::Internal);
        assert!((case2_ye(p.a_opt, p.b_opt).unwrap() - 1.0).abs() < 1e-9);
        assert!((p.excess - 0.1349).abs() < 1e-4);
        let rect = rect_constrained_optimum(1.0).unwrap();
        assert!((rect.a_opt - p.a_opt).abs() < 1e-9);
        assert!((rect.excess - p.excess).abs() < 1e-12);
    }

    #[test]
    fn regimes_on_either_side() {
        let p = rect_constrained_optimum(2.0).unwrap();
        assert_eq!(p.regime, Regime::Boundary);
        assert_eq!((p.a_opt, p.b_opt, p.excess), (2.0, 1.0, 1.0));

        let q = rect_constrained_optimum(1.1).unwrap();
        assert_eq!(q.regime, Regime::Internal);
        assert!(q.excess > 0.1);
        assert!(q.a_opt > 0.55 && q.a_opt < 1.1);
        assert!(rect_constrained_slope(q.a_opt, 1.1).unwrap().abs() < 1e-8);
        assert!((case2_ye(q.a_opt, q.b_opt).unwrap() - 1.1).abs() < 1e-9);

        assert!(rect_constrained_optimum(0.5).is_err());
    }

    #[test]
    fn interior_maximum_vanishes_for_long_pages() {
        assert!(best_interior_maximum(1.5).unwrap().is_none());
        assert!(best_interior_maximum(1.2).unwrap().is_some());
    }

    #[test]
    fn critical_aspect_near_known_value() {
        let a_cr = critical_aspect(1e-6).unwrap();
        assert!((a_cr - 1.20711).abs() < 1e-4);
        assert!(critical_aspect(1e-13).is_err());
    }
}
