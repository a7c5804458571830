//! The `solve` command: best fold for a page, as text or JSON.

use std::fmt;

use pagefold::closed_form::{rect_case1_optimum, rect_case2_optimum};
use pagefold::geometry::{apply_fold_params, FoldCase, FoldParams, PageSpec, EQ_EPS};
use pagefold::optimize::{grid_oracle, rect_constrained_optimum};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::format::{round_sig, sig};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub aspect: f64,
    pub constrained: bool,
    /// 1 or 2.
    pub case: u8,
    pub a: f64,
    pub b: f64,
    pub excess: f64,
    pub x_e: f64,
    pub y_e: f64,
    /// `internal` or `boundary` for constrained solves.
    pub regime: Option<String>,
    pub oracle_excess: Option<f64>,
}

impl SolveReport {
    /// Copy with every number rounded to the printed precision.
    pub fn rounded(&self) -> Self {
        Self {
            aspect: round_sig(self.aspect),
            a: round_sig(self.a),
            b: round_sig(self.b),
            excess: round_sig(self.excess),
            x_e: round_sig(self.x_e),
            y_e: round_sig(self.y_e),
            oracle_excess: self.oracle_excess.map(round_sig),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rounded()).expect("report serializes")
    }
}

impl fmt::Display for SolveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "aspect: {}", sig(self.aspect))?;
        writeln!(f, "constrained: {}", self.constrained)?;
        writeln!(f, "case: {}", self.case)?;
        writeln!(f, "a: {}", sig(self.a))?;
        writeln!(f, "b: {}", sig(self.b))?;
        writeln!(f, "excess: {}", sig(self.excess))?;
        writeln!(f, "x_e: {}", sig(self.x_e))?;
        writeln!(f, "y_e: {}", sig(self.y_e))?;
        writeln!(f, "regime: {}", self.regime.as_deref().unwrap_or("none"))?;
        match self.oracle_excess {
            Some(e) => writeln!(f, "oracle_excess: {}", sig(e)),
            None => writeln!(f, "oracle_excess: none"),
        }
    }
}

/// Best single fold of the page with height `aspect`, optionally checked
/// against the brute-force oracle on an `oracle_n × oracle_n` grid.
pub fn solve(
    aspect: f64,
    constrained: bool,
    oracle_n: Option<usize>,
) -> Result<SolveReport, CliError> {
    let page = PageSpec::new(aspect)?;
    let case1 = rect_case1_optimum(aspect)?;
    let (mut case, mut a, mut b, mut excess, mut regime) = if constrained {
        let p = rect_constrained_optimum(aspect)?;
        (
            FoldCase::Case2,
            p.a_opt,
            p.b_opt,
            p.excess,
            Some(p.regime.as_str().to_string()),
        )
    } else {
        let p = rect_case2_optimum(aspect)?;
        (p.case, p.a, p.b, p.excess, None)
    };
    if case1.excess > excess {
        (case, a, b, excess) = (case1.case, case1.a, case1.b, case1.excess);
        regime = regime.map(|_| "boundary".to_string());
    }

    let out = apply_fold_params(&page, &FoldParams::new(case, a, b))?;
    if (out.excess - excess).abs() > EQ_EPS {
        return Err(CliError::Internal(format!(
            "engine excess {} disagrees with closed form {excess}",
            out.excess
        )));
    }
    let oracle_excess = match oracle_n {
        Some(n) => Some(grid_oracle(aspect, constrained, n)?.excess),
        None => None,
    };
    Ok(SolveReport {
        aspect,
        constrained,
        case: case.number(),
        a,
        b,
        excess,
        x_e: 1.0 + excess,
        y_e: out.y_e,
        regime,
        oracle_excess,
    })
}
