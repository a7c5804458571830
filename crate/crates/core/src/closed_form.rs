//! Explicit formulas for single folds and their closed-form optima.
//!
//! Notation follows [`FoldParams`](crate::geometry::FoldParams): `a` is where
//! the crease meets the left edge, `b` where it meets the bottom (case 1) or
//! right (case 2) edge, and `aspect` is the page height `A`. Domain guards
//! reject out-of-range input instead of clamping it.

use std::f64::consts::SQRT_2;

use crate::error::{invalid, Result};
use crate::geometry::FoldCase;

fn check_finite(values: &[f64]) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(invalid("arguments must be finite"))
    }
}

fn check_aspect(aspect: f64) -> Result<()> {
    check_finite(&[aspect])?;
    if aspect < 1.0 {
        return Err(invalid(format!("aspect ratio must be >= 1, got {aspect}")));
    }
    Ok(())
}

fn check_upper_right(a: f64, b: f64) -> Result<()> {
    check_finite(&[a, b])?;
    if b < 0.0 || b > a {
        return Err(invalid(format!(
            "case-2 fold needs 0 <= b <= a, got a = {a}, b = {b}"
        )));
    }
    Ok(())
}

/// x-coordinate of the folded corner `O'` for a case-1 crease through
/// `(0, a)` and `(b, 0)`: `2a²b / (a² + b²)`.
pub fn case1_xe(a: f64, b: f64) -> Result<f64> {
    check_finite(&[a, b])?;
    if a < 0.0 || b < 0.0 {
        return Err(invalid("case-1 lengths must be non-negative"));
    }
    let denom = a * a + b * b;
    if denom == 0.0 {
        return Err(invalid("case-1 fold with a = b = 0 is undefined"));
    }
    Ok(2.0 * a * a * b / denom)
}

/// Excess of the case-2 corner `C'`: `2b(a−b) / (1 + (a−b)²)`.
pub fn case2_excess(a: f64, b: f64) -> Result<f64> {
    check_upper_right(a, b)?;
    let c = a - b;
    Ok(2.0 * b * c / (1.0 + c * c))
}

/// Height of the case-2 corner `O'`: `2a / (1 + (a−b)²)`.
pub fn case2_ye(a: f64, b: f64) -> Result<f64> {
    check_upper_right(a, b)?;
    let c = a - b;
    Ok(2.0 * a / (1.0 + c * c))
}

/// x-coordinate of the case-2 corner `O'`: `2a(a−b) / (1 + (a−b)²)`.
///
/// Never larger than `1 + case2_excess` while `a − b ≤ 1`; beyond that
/// (possible only on rectangles) `O'` becomes the rightmost point.
pub fn case2_xo(a: f64, b: f64) -> Result<f64> {
    check_upper_right(a, b)?;
    let c = a - b;
    Ok(2.0 * a * c / (1.0 + c * c))
}

/// Best unconstrained case-2 fold of the unit square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareCase2Optimum {
    pub a: f64,
    pub b: f64,
    pub excess: f64,
    pub y_e: f64,
}

pub fn square_case2_optimum() -> SquareCase2Optimum {
    SquareCase2Optimum {
        a: 1.0,
        b: 2.0 - SQRT_2,
        excess: SQRT_2 - 1.0,
        y_e: 1.0 + SQRT_2 / 2.0,
    }
}

/// Upper end of the square's constraint boundary, where it meets `a = b`
/// (`√b = √2/2`).
pub const SQUARE_BOUNDARY_B_MAX: f64 = 0.5;

/// On the unit square, the `a` that puts `O'` exactly on the top edge for a
/// given `b ∈ [0, 1/2]`: the smaller root `1 + b − √(2b)` of
/// `2a = 1 + (a−b)²`.
pub fn square_boundary_a_from_b(b: f64) -> Result<f64> {
    check_finite(&[b])?;
    if !(0.0..=SQUARE_BOUNDARY_B_MAX).contains(&b) {
        return Err(invalid(format!("b must lie in [0, 1/2], got {b}")));
    }
    Ok(1.0 + b - (2.0 * b).sqrt())
}

/// Excess along the constraint boundary of the unit square, as a function of
/// `b`: `b − b² / (1 + b − √(2b))`.
pub fn square_constrained_objective(b: f64) -> Result<f64> {
    let a = square_boundary_a_from_b(b)?;
    // a >= 1/2 on the whole domain
    debug_assert!(a > 1e-12);
    Ok(b - b * b / a)
}

/// Root of `t³ − 2√2 t² + 4t − √2 = 0` in `t = √b`, squared, by radicals:
/// `∛(7√33 + 9) / ∛9 − 8 / ∛(3(7√33 + 9))`.
pub fn cubic_radical_root() -> f64 {
    let s = 7.0 * 33f64.sqrt() + 9.0;
    s.cbrt() / 9f64.cbrt() - 8.0 / (3.0 * s).cbrt()
}

/// The cubic whose root in `t = √b` locates the constrained square optimum.
pub fn constrained_square_cubic(t: f64) -> f64 {
    ((t - 2.0 * SQRT_2) * t + 4.0) * t - SQRT_2
}

/// Closed-form optimum of one fold family on a page of height `aspect`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectOptimum {
    pub aspect: f64,
    pub a: f64,
    pub b: f64,
    pub excess: f64,
    pub case: FoldCase,
}

/// Diagonal fold: `a = A`, `b = 1`, excess `(A² − 1) / (A² + 1)`.
pub fn rect_case1_optimum(aspect: f64) -> Result<RectOptimum> {
    check_aspect(aspect)?;
    let a2 = aspect * aspect;
    Ok(RectOptimum {
        aspect,
        a: aspect,
        b: 1.0,
        excess: (a2 - 1.0) / (a2 + 1.0),
        case: FoldCase::Case1,
    })
}

/// Unconstrained case-2 optimum: `a = A`, `b = (1 + A² − √(1+A²)) / A`,
/// excess `√(1+A²) − 1`.
pub fn rect_case2_optimum(aspect: f64) -> Result<RectOptimum> {
    check_aspect(aspect)?;
    let r = aspect.hypot(1.0);
    Ok(RectOptimum {
        aspect,
        a: aspect,
        b: (1.0 + aspect * aspect - r) / aspect,
        excess: r - 1.0,
        case: FoldCase::Case2,
    })
}

fn check_boundary_domain(a: f64, aspect: f64) -> Result<()> {
    check_aspect(aspect)?;
    check_finite(&[a])?;
    if a < aspect / 2.0 || a > aspect {
        return Err(invalid(format!(
            "a must lie in [A/2, A] = [{}, {aspect}], got {a}",
            aspect / 2.0
        )));
    }
    Ok(())
}

/// On the page of height `A`, the `b` that puts `O'` exactly at height `A`:
/// `a − √(2aA − A²) / A`.
pub fn rect_boundary_b_from_a(a: f64, aspect: f64) -> Result<f64> {
    check_boundary_domain(a, aspect)?;
    let radicand = (2.0 * a * aspect - aspect * aspect).max(0.0);
    Ok(a - radicand.sqrt() / aspect)
}

/// Excess along the constraint boundary of a page of height `A`, as a
/// function of `a`: `A/a + √(A(2a − A)) − 2`.
pub fn rect_constrained_objective(a: f64, aspect: f64) -> Result<f64> {
    check_boundary_domain(a, aspect)?;
    let radicand = (aspect * (2.0 * a - aspect)).max(0.0);
    Ok(aspect / a + radicand.sqrt() - 2.0)
}

/// Derivative of [`rect_constrained_objective`] in `a`:
/// `−A/a² + A / √(A(2a − A))`. Infinite at `a = A/2`.
pub fn rect_constrained_slope(a: f64, aspect: f64) -> Result<f64> {
    check_boundary_domain(a, aspect)?;
    let radicand = aspect * (2.0 * a - aspect);
    if radicand <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(-aspect / (a * a) + aspect / radicand.sqrt())
}
