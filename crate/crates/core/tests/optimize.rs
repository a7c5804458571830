use std::f64::consts::SQRT_2;

use pagefold::closed_form::{
    case2_excess, case2_ye, rect_case1_optimum, rect_case2_optimum, rect_constrained_objective,
};
use pagefold::geometry::{apply_fold_params, FoldCase, FoldParams, PageSpec};
use pagefold::optimize::{
    critical_aspect, grid_oracle, phase_curve, rect_constrained_optimum,
    square_constrained_optimum, summary_trajectories, Regime,
};

const ASPECTS: [f64; 5] = [1.0, 1.2, 1.5, 2.0, 5.0];

#[test]
fn oracle_agrees_with_unconstrained_closed_form() {
    for aspect in ASPECTS {
        let r = grid_oracle(aspect, false, 500).unwrap();
        let best = rect_case2_optimum(aspect).unwrap().excess;
        assert!(
            (r.excess - best).abs() <= 2.0 * r.grid_step,
            "A = {aspect}: oracle {} vs {best}",
            r.excess
        );
        assert_eq!(r.case, FoldCase::Case2);
        // the maximum sits on the a = A edge
        assert!((r.a - aspect).abs() <= 2.0 * r.grid_step);
    }
}

#[test]
fn oracle_agrees_with_constrained_optimum() {
    for aspect in ASPECTS {
        let r = grid_oracle(aspect, true, 500).unwrap();
        let best = rect_constrained_optimum(aspect).unwrap();
        let case1 = rect_case1_optimum(aspect).unwrap().excess;
        let expected = best.excess.max(case1);
        assert!(
            (r.excess - expected).abs() <= 2.0 * r.grid_step,
            "A = {aspect}: oracle {} vs {expected}",
            r.excess
        );
        let out = apply_fold_params(
            &PageSpec::new(aspect).unwrap(),
            &FoldParams::new(r.case, r.a, r.b),
        )
        .unwrap();
        assert!(out.y_e <= aspect + 1e-9);
        assert_eq!(out.excess, r.excess);
    }
}

#[test]
fn oracle_finds_the_vertex_fold_on_long_pages() {
    let r = grid_oracle(2.0, true, 500).unwrap();
    assert!((r.excess - 1.0).abs() <= 2.0 * r.grid_step);
    assert!((r.a - 2.0).abs() < 0.02 && (r.b - 1.0).abs() < 0.02);
}

#[test]
fn case2_dominates_case1() {
    for aspect in [1.0, 1.5, 2.0, 5.0] {
        assert!(
            rect_case2_optimum(aspect).unwrap().excess
                >= rect_case1_optimum(aspect).unwrap().excess
        );
    }
}

#[test]
fn large_pages_approach_a_minus_one() {
    for aspect in [10.0, 50.0, 1e3, 1e5] {
        let gap = rect_case2_optimum(aspect).unwrap().excess - (aspect - 1.0);
        assert!(
            gap > 0.0 && gap < 1.0 / (2.0 * aspect - 2.0),
            "A = {aspect}: gap {gap}"
        );
    }
}

#[test]
fn phase_points_lie_on_the_constraint() {
    for p in phase_curve(1.0, 3.0, 401).unwrap() {
        assert!((case2_ye(p.a_opt, p.b_opt).unwrap() - p.aspect).abs() < 1e-9);
        match p.regime {
            Regime::Boundary => {
                assert_eq!(p.a_opt, p.aspect);
                assert!((p.b_opt - (p.aspect - 1.0)).abs() < 1e-9);
                assert!((p.excess - (p.aspect - 1.0)).abs() < 1e-9);
            }
            Regime::Internal => {
                assert!(p.a_opt > p.aspect / 2.0 && p.a_opt < p.aspect);
                let h = 1e-6;
                let f = |a: f64| rect_constrained_objective(a, p.aspect).unwrap();
                let fd = (f(p.a_opt + h) - f(p.a_opt - h)) / (2.0 * h);
                assert!(fd.abs() < 1e-6, "A = {}: slope {fd}", p.aspect);
            }
        }
    }
}

#[test]
fn regime_partition_around_critical_aspect() {
    let a_cr = critical_aspect(1e-10).unwrap();
    for p in phase_curve(1.0 + 1e-6, 3.0, 2001).unwrap() {
        if p.aspect > a_cr + 1e-4 {
            assert_eq!(p.regime, Regime::Boundary, "A = {}", p.aspect);
        } else if p.aspect < a_cr - 1e-4 {
            assert_eq!(p.regime, Regime::Internal, "A = {}", p.aspect);
        }
    }
}

#[test]
fn critical_aspect_is_one_plus_root_two_over_two() {
    let a_cr = critical_aspect(1e-12).unwrap();
    assert!((a_cr - (1.0 + SQRT_2) / 2.0).abs() < 1e-9, "{a_cr}");
}

#[test]
fn constrained_summary_trajectory_peaks_at_the_optimum() {
    let opt = square_constrained_optimum().unwrap();
    let ts = summary_trajectories(&[opt.a_opt], true, 2001).unwrap();
    let last = *ts[0].points.last().unwrap();
    let max_x = ts[0].points.iter().map(|p| p.x).fold(f64::MIN, f64::max);
    assert!((last.x - (1.0 + opt.excess)).abs() < 1e-9);
    assert!((max_x - last.x).abs() < 1e-12);
    assert!((max_x - 1.1349).abs() < 1e-4);
    assert!((case2_excess(opt.a_opt, opt.b_opt).unwrap() - opt.excess).abs() < 1e-12);
}
