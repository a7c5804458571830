//! Optimal single folds of a page bound along its top edge.
//!
//! A page `[0, 1] × [0, A]` (`A ≥ 1`) is folded once along a straight crease
//! so that part of it sticks out past the right edge. The crate provides
//!
//! - [`geometry`]: an exact polygon engine that realizes folds and measures
//!   the extents of the folded layout,
//! - [`closed_form`]: explicit formulas for the two fold families and their
//!   optima,
//! - [`optimize`]: root finding, the optimum under the "stay below the top
//!   edge" constraint and its regime switch, a brute-force grid oracle and
//!   curve generators.
//!
//! ```
//! use pagefold::closed_form::rect_case2_optimum;
//! use pagefold::geometry::{apply_fold_params, FoldParams, PageSpec};
//!
//! let opt = rect_case2_optimum(1.0).unwrap();
//! let out = apply_fold_params(&PageSpec::square(), &FoldParams::new(opt.case, opt.a, opt.b)).unwrap();
//! assert!((out.excess - opt.excess).abs() < 1e-12);
//! ```

pub mod closed_form;
pub mod error;
pub mod geometry;
pub mod optimize;

pub use error::{Error, Result};
pub use geometry::{FoldCase, FoldOutcome, FoldParams, PageSpec, Point};
