//! CSV export of the sampled curves.
//!
//! Dialect: comma-separated, one header line, LF line endings, no quoting.

use pagefold::optimize::{eb_curve, phase_curve, summary_trajectories, transition_curves};

use crate::error::CliError;
use crate::format::sig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// Excess versus `b` on the square with `a = 1`.
    Eb,
    /// Excess along the constraint boundary for several aspect ratios.
    Transition,
    /// Constrained optimum versus aspect ratio.
    Phase,
    /// Trajectories of the folded corner `C'` on the square.
    Summary,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveParams {
    pub samples: usize,
    pub aspects: Vec<f64>,
    pub from: f64,
    pub to: f64,
    pub a_values: Vec<f64>,
    pub constrained: bool,
}

impl Default for CurveParams {
    fn default() -> Self {
        Self {
            samples: 101,
            aspects: vec![1.05, 1.15, 1.2, 1.35],
            from: 1.0,
            to: 1.5,
            a_values: vec![0.2, 0.4, 0.5437, 0.6, 0.8, 1.0],
            constrained: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveFile {
    pub kind: CurveKind,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl CurveFile {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

pub fn build_curve(kind: CurveKind, params: &CurveParams) -> Result<CurveFile, CliError> {
    let n = params.samples;
    if n < 2 {
        return Err(CliError::InvalidArgs(format!(
            "--samples must be >= 2, got {n}"
        )));
    }
    let (columns, rows): (Vec<&'static str>, Vec<Vec<String>>) = match kind {
        CurveKind::Eb => (
            vec!["b", "e"],
            eb_curve(n)?
                .into_iter()
                .map(|(b, e)| vec![sig(b), sig(e)])
                .collect(),
        ),
        CurveKind::Transition => {
            if params.aspects.is_empty() {
                return Err(CliError::InvalidArgs("--aspects must not be empty".into()));
            }
            let curves = transition_curves(&params.aspects, n)?;
            let rows = curves
                .iter()
                .flat_map(|c| {
                    c.points.iter().map(move |&(a, e)| {
                        vec![
                            sig(c.aspect),
                            sig(a),
                            sig(e),
                            sig(c.optimum.a_opt),
                            sig(c.optimum.excess),
                        ]
                    })
                })
                .collect();
            (vec!["aspect", "a", "e", "argmax_a", "argmax_e"], rows)
        }
        CurveKind::Phase => (
            vec!["aspect", "a_opt", "b_opt", "excess", "regime"],
            phase_curve(params.from, params.to, n)?
                .into_iter()
                .map(|p| {
                    vec![
                        sig(p.aspect),
                        sig(p.a_opt),
                        sig(p.b_opt),
                        sig(p.excess),
                        p.regime.as_str().to_string(),
                    ]
                })
                .collect(),
        ),
        CurveKind::Summary => {
            if params.a_values.is_empty() {
                return Err(CliError::InvalidArgs("--a-values must not be empty".into()));
            }
            let rows = summary_trajectories(&params.a_values, params.constrained, n)?
                .iter()
                .flat_map(|t| {
                    t.b.iter()
                        .zip(&t.points)
                        .map(move |(&b, p)| vec![sig(t.a), sig(b), sig(p.x), sig(p.y)])
                })
                .collect();
            (vec!["a", "b", "x", "y"], rows)
        }
    };
    Ok(CurveFile {
        kind,
        columns,
        rows,
    })
}
