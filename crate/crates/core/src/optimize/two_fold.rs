use std::f64::consts::FRAC_PI_8;

use crate::error::Result;
use crate::geometry::{extent, fold, Crease, Layout, PageSpec, Point};

#[derive(Debug, Clone, PartialEq)]
pub struct TwoFoldOutcome {
    pub layout: Layout,
    pub excess: f64,
    pub y_e: f64,
}

/// Two successive folds of the unit square: first along the diagonal from
/// the top-left to the bottom-right corner, then along the line through the
/// top-left corner at −22.5°, which lays the diagonal onto the top edge.
pub fn two_fold_demo() -> Result<TwoFoldOutcome> {
    let top_left = Point::new(0.0, 1.0);
    let page = Layout::pristine(PageSpec::square());
    let diagonal = Crease::new(top_left, Point::new(1.0, 0.0))?;
    let once = fold(&page, &diagonal)?;
    let bisector = Crease::through_with_angle(top_left, -FRAC_PI_8)?;
    let twice = fold(&once, &bisector)?;
    let (x_e, y_e) = extent(&twice)?;
    Ok(TwoFoldOutcome {
        layout: twice,
        excess: x_e - 1.0,
        y_e,
    })
}
