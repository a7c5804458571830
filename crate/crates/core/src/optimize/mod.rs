//! Numerical routines built on the geometry engine and the closed forms.

pub mod constrained;
pub mod curves;
pub mod oracle;
pub mod root;
pub mod two_fold;

pub use constrained::{
    best_interior_maximum, critical_aspect, feasible, rect_constrained_optimum, solve_cubic_sqrt_b,
    square_constrained_optimum, PhasePoint, Regime,
};
pub use curves::{
    eb_curve, phase_curve, summary_trajectories, transition_curves, Trajectory, TransitionCurve,
};
pub use oracle::{grid_oracle, OracleResult};
pub use root::{find_root, RootResult};
pub use two_fold::{two_fold_demo, TwoFoldOutcome};
