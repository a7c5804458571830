//! Brute-force search over crease parameters, scored by the geometry engine.
//!
//! Nothing here touches the closed forms: every candidate fold is realized
//! with [`apply_fold_params`] and scored by the extents of the folded layout.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::geometry::{apply_fold_params, FoldCase, FoldParams, PageSpec, EQ_EPS};

/// Refinement factor of the second, local grid.
pub const REFINEMENT: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub case: FoldCase,
    pub a: f64,
    pub b: f64,
    pub excess: f64,
    /// Spacing of the coarse grid along `a` (`A / n`).
    pub grid_step: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Candidate {
    case: FoldCase,
    a: f64,
    b: f64,
    excess: f64,
}

/// Larger excess wins; ties go to smaller `a`, then smaller `b`, then case 1.
fn rank(x: &Candidate, y: &Candidate) -> Ordering {
    x.excess
        .total_cmp(&y.excess)
        .then_with(|| y.a.total_cmp(&x.a))
        .then_with(|| y.b.total_cmp(&x.b))
        .then_with(|| y.case.cmp(&x.case))
}

fn pick(x: Candidate, y: Candidate) -> Candidate {
    if rank(&x, &y) == Ordering::Less {
        y
    } else {
        x
    }
}

fn pick_opt(x: Option<Candidate>, y: Option<Candidate>) -> Option<Candidate> {
    match (x, y) {
        (Some(x), Some(y)) => Some(pick(x, y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn evaluate(
    page: &PageSpec,
    case: FoldCase,
    a: f64,
    b: f64,
    constrained: bool,
) -> Option<Candidate> {
    let fp = FoldParams::new(case, a, b);
    let out = apply_fold_params(page, &fp).ok()?;
    if constrained && out.y_e > page.aspect() + EQ_EPS {
        return None;
    }
    Some(Candidate {
        case,
        a,
        b,
        excess: out.excess,
    })
}

/// Grid spacing along (a, b) for each case.
fn steps(page: &PageSpec, case: FoldCase, n: usize) -> (f64, f64) {
    let h = page.aspect();
    match case {
        FoldCase::Case1 => (h / n as f64, page.width() / n as f64),
        FoldCase::Case2 => (h / n as f64, h / n as f64),
    }
}

fn coarse_best(page: &PageSpec, case: FoldCase, n: usize, constrained: bool) -> Option<Candidate> {
    let (da, db) = steps(page, case, n);
    (0..=n)
        .into_par_iter()
        .map(|i| {
            let a = if i == n { page.aspect() } else { da * i as f64 };
            let cols = match case {
                FoldCase::Case1 => n,
                FoldCase::Case2 => i,
            };
            (0..=cols)
                .filter_map(|j| {
                    let b = match case {
                        FoldCase::Case1 if j == n => page.width(),
                        FoldCase::Case2 if j == i => a,
                        _ => db * j as f64,
                    };
                    evaluate(page, case, a, b, constrained)
                })
                .reduce(pick)
        })
        .reduce(|| None, pick_opt)
}

fn refine(page: &PageSpec, center: Candidate, n: usize, constrained: bool) -> Candidate {
    let (da, db) = steps(page, center.case, n);
    let k = REFINEMENT as i64;
    let local = (-k..=k)
        .into_par_iter()
        .map(|i| {
            let a = center.a + da * i as f64 / k as f64;
            (-k..=k)
                .filter_map(|j| {
                    let b = center.b + db * j as f64 / k as f64;
                    evaluate(page, center.case, a, b, constrained)
                })
                .reduce(pick)
        })
        .reduce(|| None, pick_opt);
    pick_opt(Some(center), local).unwrap_or(center)
}

/// Best single fold of the page `[0,1] × [0,A]` found on an `n × n` grid per
/// case plus one local grid `REFINEMENT` times finer around the winner.
///
/// With `constrained`, folds whose layout rises above `y = A` are discarded.
/// The result does not depend on thread scheduling.
pub fn grid_oracle(aspect: f64, constrained: bool, n: usize) -> Result<OracleResult> {
    let page = PageSpec::new(aspect)?;
    if n < 100 {
        return Err(invalid(format!("oracle grid needs n >= 100, got {n}")));
    }
    let best = [FoldCase::Case1, FoldCase::Case2]
        .into_iter()
        .map(|case| coarse_best(&page, case, n, constrained))
        .fold(None, pick_opt)
        // the null fold (case 2, a = b = 0) is always admissible
        .expect("grid contains at least one admissible fold");
    let best = refine(&page, best, n, constrained);
    Ok(OracleResult {
        case: best.case,
        a: best.a,
        b: best.b,
        excess: best.excess,
        grid_step: aspect / n as f64,
    })
}
