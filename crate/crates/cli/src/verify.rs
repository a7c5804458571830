//! The `verify` command: reproduce every reference value and print a
//! pass/fail table.
//!
//! The closed forms under test are passed in through [`Formulas`] so the
//! suite can be pointed at a deliberately broken formula to confirm that it
//! notices.

use std::f64::consts::SQRT_2;

use pagefold::closed_form::{self, RectOptimum};
use pagefold::geometry::{
    apply_fold_params, reflect_point, Crease, FoldCase, FoldParams, PageSpec, Point,
};
use pagefold::optimize::{
    critical_aspect, grid_oracle, rect_constrained_optimum, solve_cubic_sqrt_b, two_fold_demo,
    Regime,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Closed-form checks and a 200-point oracle.
    Fast,
    /// 1000-point oracle plus property sweeps.
    Full,
}

type Pair = fn(f64, f64) -> pagefold::Result<f64>;

#[derive(Clone, Copy)]
pub struct Formulas {
    pub case1_xe: Pair,
    pub case2_excess: Pair,
    pub case2_ye: Pair,
    pub case2_xo: Pair,
    pub rect_case1_optimum: fn(f64) -> pagefold::Result<RectOptimum>,
    pub rect_case2_optimum: fn(f64) -> pagefold::Result<RectOptimum>,
}

impl Default for Formulas {
    fn default() -> Self {
        Self {
            case1_xe: closed_form::case1_xe,
            case2_excess: closed_form::case2_excess,
            case2_ye: closed_form::case2_ye,
            case2_xo: closed_form::case2_xo,
            rect_case1_optimum: closed_form::rect_case1_optimum,
            rect_case2_optimum: closed_form::rect_case2_optimum,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Recorder {
    name: &'static str,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Recorder {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn within(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        let line = format!("{label} {got:.9} vs {want:.9}");
        if (got - want).abs() <= tol {
            self.notes.push(line);
        } else {
            self.failures.push(format!("{line} (tol {tol:e})"));
        }
    }

    fn holds(&mut self, label: &str, ok: bool) {
        if ok {
            self.notes.push(label.to_string());
        } else {
            self.failures.push(label.to_string());
        }
    }

    fn finish(self, err: Option<pagefold::Error>) -> CheckResult {
        let mut failures = self.failures;
        if let Some(e) = err {
            failures.push(format!("error: {e}"));
        }
        let passed = failures.is_empty();
        CheckResult {
            name: self.name.to_string(),
            passed,
            detail: if passed {
                self.notes.join("; ")
            } else {
                failures.join("; ")
            },
        }
    }
}

fn check(
    name: &'static str,
    body: impl FnOnce(&mut Recorder) -> pagefold::Result<()>,
) -> CheckResult {
    let mut r = Recorder::new(name);
    let err = body(&mut r).err();
    r.finish(err)
}

fn oracle_n(level: Level) -> usize {
    match level {
        Level::Fast => 200,
        Level::Full => 1000,
    }
}

pub fn run_checks(level: Level, f: &Formulas) -> Vec<CheckResult> {
    let n = oracle_n(level);
    let mut results = vec![
        check("square unconstrained optimum", |r| {
            let opt = (f.rect_case2_optimum)(1.0)?;
            r.within("b", opt.b, 2.0 - SQRT_2, 1e-12);
            r.within("e", opt.excess, SQRT_2 - 1.0, 1e-12);
            r.within(
                "e(a,b)",
                (f.case2_excess)(opt.a, opt.b)?,
                SQRT_2 - 1.0,
                1e-12,
            );
            r.within(
                "oracle",
                grid_oracle(1.0, false, n)?.excess,
                SQRT_2 - 1.0,
                2.0 / n as f64,
            );
            Ok(())
        }),
        check("square optimum height", |r| {
            r.within(
                "y_e",
                (f.case2_ye)(1.0, 2.0 - SQRT_2)?,
                1.0 + SQRT_2 / 2.0,
                1e-12,
            );
            Ok(())
        }),
        check("constrained square", |r| {
            let b = solve_cubic_sqrt_b()?;
            r.within("b vs radical", b, closed_form::cubic_radical_root(), 1e-10);
            let a = closed_form::square_boundary_a_from_b(b)?;
            let e = (f.case2_excess)(a, b)?;
            r.within("a", a, 0.543, 5e-4);
            r.within("b", b, 0.248, 5e-4);
            r.within("e", e, 0.135, 5e-4);
            r.within("y_e", (f.case2_ye)(a, b)?, 1.0, 1e-9);
            let trunc = |v: f64| (v * 1e3).floor() / 1e3;
            r.within(
                "truncated y_e",
                (f.case2_ye)(trunc(a), trunc(b))?,
                0.999057,
                5e-6,
            );
            Ok(())
        }),
        check("rough fold", |r| {
            let rough = (f.case2_excess)(0.5, 0.25)?;
            r.within("e(0.5, 0.25)", rough, 0.1176471, 1e-7);
            let opt = rect_constrained_optimum(1.0)?;
            r.within(
                "shortfall %",
                100.0 * (opt.excess - rough) / opt.excess,
                12.6,
                0.5,
            );
            Ok(())
        }),
        check("rectangle unconstrained", |r| {
            for aspect in [1.0, 1.5, 2.0, 5.0] {
                let e2 = (f.rect_case2_optimum)(aspect)?.excess;
                let e1 = (f.rect_case1_optimum)(aspect)?.excess;
                r.within(
                    &format!("A={aspect} formula"),
                    e2,
                    (1.0 + aspect * aspect).sqrt() - 1.0,
                    1e-12,
                );
                r.within(
                    &format!("A={aspect} oracle"),
                    grid_oracle(aspect, false, n)?.excess,
                    e2,
                    2.0 * aspect / n as f64,
                );
                r.holds(&format!("A={aspect} case 2 >= case 1"), e2 >= e1);
            }
            Ok(())
        }),
        check("critical aspect", |r| {
            let a_cr = critical_aspect(1e-6)?;
            r.within("A_cr", a_cr, 1.20711, 1e-4);
            r.holds(
                "regime flips",
                rect_constrained_optimum(a_cr - 1e-3)?.regime == Regime::Internal
                    && rect_constrained_optimum(a_cr + 1e-3)?.regime == Regime::Boundary,
            );
            Ok(())
        }),
        check("phase transition", |r| {
            let a_cr = critical_aspect(1e-12)?;
            let gap = (rect_constrained_optimum(a_cr - 1e-4)?.excess
                - rect_constrained_optimum(a_cr + 1e-4)?.excess)
                .abs();
            r.holds(&format!("value gap {gap:.1e} < 1e-3"), gap < 1e-3);
            let jump = rect_constrained_optimum(a_cr + 1e-3)?.a_opt
                - rect_constrained_optimum(a_cr - 1e-3)?.a_opt;
            r.holds(&format!("maximizer jump {jump:.3} > 0.2"), jump > 0.2);
            let above = rect_constrained_optimum(1.5)?;
            r.within("e(1.5)", above.excess, 0.5, 1e-9);
            Ok(())
        }),
        check("two-fold demonstration", |r| {
            let out = two_fold_demo()?;
            r.within("excess", out.excess, SQRT_2 - 1.0, 1e-9);
            r.holds("y_e <= 1", out.y_e <= 1.0 + 1e-9);
            r.holds(
                "beats one fold",
                out.excess > rect_constrained_optimum(1.0)?.excess,
            );
            Ok(())
        }),
    ];
    if level == Level::Full {
        results.push(check("property sweeps", |r| property_sweeps(r, f)));
    }
    results
}

/// Deterministic sweep over pages, fold families and crease positions.
fn property_sweeps(r: &mut Recorder, f: &Formulas) -> pagefold::Result<()> {
    let mut worst_area: f64 = 0.0;
    let mut worst_engine: f64 = 0.0;
    let mut worst_reflect: f64 = 0.0;
    for (i, aspect) in [1.0, 1.2, 1.5, 2.0, 3.0, 5.0].into_iter().enumerate() {
        let page = PageSpec::new(aspect)?;
        for j in 0..=12 {
            for k in 0..=12 {
                let (u, v) = (j as f64 / 12.0, k as f64 / 12.0);
                for fp in [
                    FoldParams::new(FoldCase::Case1, aspect * u.max(1e-3), v),
                    FoldParams::new(FoldCase::Case2, aspect * u, aspect * u * v),
                ] {
                    let out = apply_fold_params(&page, &fp)?;
                    worst_area = worst_area.max((out.layout.area() - page.area()).abs());
                    let (x_e, y_e) = match fp.case {
                        FoldCase::Case1 => ((f.case1_xe)(fp.a, fp.b)?.max(1.0), aspect),
                        FoldCase::Case2 => (
                            (1.0 + (f.case2_excess)(fp.a, fp.b)?)
                                .max((f.case2_xo)(fp.a, fp.b)?)
                                .max(1.0),
                            (f.case2_ye)(fp.a, fp.b)?.max(aspect),
                        ),
                    };
                    worst_engine = worst_engine
                        .max((out.x_e - x_e).abs())
                        .max((out.y_e - y_e).abs());
                }
                let c = Crease::new(
                    Point::new(u - 0.3 * i as f64, v),
                    Point::new(1.0 + v, u * aspect + 0.1),
                )?;
                let p = Point::new(3.0 * u - 1.0, 2.0 * v + 0.5);
                worst_reflect =
                    worst_reflect.max(reflect_point(reflect_point(p, &c), &c).distance(p));
            }
        }
    }
    r.holds(
        &format!("area conservation {worst_area:.1e}"),
        worst_area < 1e-9,
    );
    r.holds(
        &format!("engine vs closed forms {worst_engine:.1e}"),
        worst_engine < 1e-9,
    );
    r.holds(
        &format!("reflection involution {worst_reflect:.1e}"),
        worst_reflect < 1e-9,
    );
    Ok(())
}

pub fn format_table(results: &[CheckResult]) -> String {
    let width = results.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in results {
        let status = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status}  {:width$}  {}\n", c.name, c.detail));
    }
    let passed = results.iter().filter(|c| c.passed).count();
    out.push_str(&format!("{passed}/{} checks passed\n", results.len()));
    out
}

/// `Ok` when every check passed, otherwise the names of the failing ones.
pub fn outcome(results: &[CheckResult]) -> Result<(), CliError> {
    let failed: Vec<String> = results
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.clone())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed(failed))
    }
}
