//! Sampled curves: excess versus `b` on the square, excess along the
//! constraint boundary, the constrained optimum versus aspect ratio, and
//! trajectories of the folded corner `C'`.

use crate::closed_form::{case2_excess, rect_constrained_objective};
use crate::error::{invalid, Result};
use crate::geometry::{reflect_point, FoldCase, FoldParams, PageSpec, Point};
use crate::optimize::constrained::{rect_constrained_optimum, PhasePoint};

/// `samples` evenly spaced values from `lo` to `hi`, both ends exact.
fn linspace(lo: f64, hi: f64, samples: usize) -> impl Iterator<Item = f64> {
    let last = samples - 1;
    (0..samples).map(move |k| {
        if k == last {
            hi
        } else {
            lo + (hi - lo) * k as f64 / last as f64
        }
    })
}

fn check_samples(samples: usize) -> Result<()> {
    if samples < 2 {
        return Err(invalid(format!("need at least 2 samples, got {samples}")));
    }
    Ok(())
}

/// `(b, e(1, b))` for `b` uniform on `[0, 1]`.
pub fn eb_curve(samples: usize) -> Result<Vec<(f64, f64)>> {
    check_samples(samples)?;
    linspace(0.0, 1.0, samples)
        .map(|b| Ok((b, case2_excess(1.0, b)?)))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransitionCurve {
    pub aspect: f64,
    /// `(a, e(a, A))` for `a` uniform on `[A/2, A]`.
    pub points: Vec<(f64, f64)>,
    /// Where the curve attains its maximum.
    pub optimum: PhasePoint,
}

pub fn transition_curves(aspects: &[f64], samples: usize) -> Result<Vec<TransitionCurve>> {
    check_samples(samples)?;
    aspects
        .iter()
        .map(|&aspect| {
            let optimum = rect_constrained_optimum(aspect)?;
            let points = linspace(aspect / 2.0, aspect, samples)
                .map(|a| Ok((a, rect_constrained_objective(a, aspect)?)))
                .collect::<Result<_>>()?;
            Ok(TransitionCurve {
                aspect,
                points,
                optimum,
            })
        })
        .collect()
}

/// Constrained optimum sampled uniformly over `[lo, hi]`.
pub fn phase_curve(lo: f64, hi: f64, samples: usize) -> Result<Vec<PhasePoint>> {
    check_samples(samples)?;
    if !(lo >= 1.0 && lo < hi && hi.is_finite()) {
        return Err(invalid(format!("need 1 <= from < to, got [{lo}, {hi}]")));
    }
    linspace(lo, hi, samples)
        .map(rect_constrained_optimum)
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub a: f64,
    /// Swept `b` values, increasing.
    pub b: Vec<f64>,
    /// Position of `C'` for each `b`.
    pub points: Vec<Point>,
}

/// Largest `b` keeping `O'` at or below the top edge of the square.
fn max_feasible_b(a: f64) -> f64 {
    if 2.0 * a <= 1.0 {
        a
    } else {
        (a - (2.0 * a - 1.0).sqrt()).max(0.0)
    }
}

/// Path of the bottom-right corner `C = (1, 0)` of the square under case-2
/// folds with `a` fixed and `b` swept over `[0, a]`, or over the part of it
/// that keeps the fold below the top edge when `constrained`.
pub fn summary_trajectories(
    a_values: &[f64],
    constrained: bool,
    samples: usize,
) -> Result<Vec<Trajectory>> {
    check_samples(samples)?;
    let page = PageSpec::square();
    let corner = Point::new(1.0, 0.0);
    a_values
        .iter()
        .map(|&a| {
            if !(0.0..=1.0).contains(&a) {
                return Err(invalid(format!("a must lie in [0, 1], got {a}")));
            }
            let b_max = if constrained { max_feasible_b(a) } else { a };
            let b: Vec<f64> = if b_max > 0.0 {
                linspace(0.0, b_max, samples).collect()
            } else {
                vec![0.0]
            };
            let points = b
                .iter()
                .map(|&b| {
                    let crease = FoldParams::new(FoldCase::Case2, a, b).crease(&page)?;
                    Ok(reflect_point(corner, &crease))
                })
                .collect::<Result<_>>()?;
            Ok(Trajectory { a, b, points })
        })
        .collect()
}
