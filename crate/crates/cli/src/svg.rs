//! SVG drawing of a single fold.

use std::fmt::Write;

use pagefold::geometry::{split_polygon, Crease, FoldParams, PageSpec, Point, Polygon};

use crate::error::CliError;
use crate::format::sig;

/// Geometry of a rendered fold, in page coordinates (y up).
#[derive(Debug, Clone, PartialEq)]
pub struct Rendering {
    pub page: PageSpec,
    /// Part of the page that stays in place.
    pub remainder: Vec<Polygon>,
    /// Reflected image of the folded part.
    pub folded: Vec<Polygon>,
    /// Crease as drawn across the page.
    pub crease: Option<(Point, Point)>,
    /// `(min_x, min_y, width, height)` in page coordinates.
    pub bounds: (f64, f64, f64, f64),
}

/// Portion of the crease line inside the page rectangle.
fn crease_segment(page: &PageSpec, crease: &Crease) -> Option<(Point, Point)> {
    let corners = page.corners();
    let mut hits = Vec::new();
    for i in 0..4 {
        let (p, q) = (corners[i], corners[(i + 1) % 4]);
        let (sp, sq) = (crease.side(p), crease.side(q));
        if sp == 0.0 {
            hits.push(p);
        } else if sp * sq < 0.0 {
            hits.push(p + (q - p) * (sp / (sp - sq)));
        }
    }
    let dir = crease.direction();
    let along = |p: &Point| dir.dot(*p - crease.p());
    let lo = hits.iter().min_by(|u, v| along(u).total_cmp(&along(v)))?;
    let hi = hits.iter().max_by(|u, v| along(u).total_cmp(&along(v)))?;
    Some((*lo, *hi))
}

pub fn render(page: PageSpec, fp: FoldParams) -> Result<Rendering, CliError> {
    let crease = fp.crease(&page)?;
    // same split the engine performs when folding the pristine page
    let split = split_polygon(&page.outline(), &crease);
    let folded: Vec<Polygon> = split.moved.iter().map(|p| p.reflected(&crease)).collect();

    let mut min = Point::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let outline = page.outline();
    for v in split
        .kept
        .iter()
        .chain(&folded)
        .chain(std::iter::once(&outline))
        .flat_map(|p| p.vertices())
    {
        min = Point::new(min.x.min(v.x), min.y.min(v.y));
        max = Point::new(max.x.max(v.x), max.y.max(v.y));
    }
    let (w, h) = (max.x - min.x, max.y - min.y);
    let bounds = (min.x - 0.05 * w, min.y - 0.05 * h, 1.1 * w, 1.1 * h);
    Ok(Rendering {
        page,
        remainder: split.kept,
        folded,
        crease: crease_segment(&page, &crease),
        bounds,
    })
}

fn points_attr(poly: &Polygon) -> String {
    poly.vertices()
        .iter()
        .map(|p| format!("{},{}", sig(p.x), sig(-p.y)))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Rendering {
    /// SVG document. The y axis is flipped so the page reads the usual way
    /// up; `viewBox` is the drawing's bounding box padded by 5%.
    pub fn to_svg(&self) -> String {
        let (x, y, w, h) = self.bounds;
        let stroke = sig(0.004 * w.max(h));
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
            sig(x),
            sig(-(y + h)),
            sig(w),
            sig(h),
            sig(400.0 * w / w.max(h)),
            sig(400.0 * h / w.max(h)),
        );
        for poly in &self.remainder {
            let _ = writeln!(
                s,
                r##"  <polygon class="remainder" points="{}" fill="#f2f2f2" stroke="none"/>"##,
                points_attr(poly)
            );
        }
        let _ = writeln!(
            s,
            r#"  <polygon class="page" points="{}" fill="none" stroke="black" stroke-width="{stroke}"/>"#,
            points_attr(&self.page.outline())
        );
        for poly in &self.folded {
            let _ = writeln!(
                s,
                r#"  <polygon class="folded" points="{}" fill="gray" fill-opacity="0.5" stroke="gray" stroke-width="{stroke}"/>"#,
                points_attr(poly)
            );
        }
        if let Some((p, q)) = self.crease {
            let dash = sig(0.02 * w.max(h));
            let _ = writeln!(
                s,
                r#"  <line class="crease" x1="{}" y1="{}" x2="{}" y2="{}" stroke="red" stroke-width="{stroke}" stroke-dasharray="{dash} {dash}"/>"#,
                sig(p.x),
                sig(-p.y),
                sig(q.x),
                sig(-q.y),
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pagefold::geometry::FoldCase;
    use std::f64::consts::SQRT_2;

    fn folded_max_x(r: &Rendering) -> f64 {
        r.folded.iter().map(Polygon::max_x).fold(f64::MIN, f64::max)
    }

    #[test]
    fn square_optimum() {
        let r = render(
            PageSpec::square(),
            FoldParams::new(FoldCase::Case2, 1.0, 2.0 - SQRT_2),
        )
        .unwrap();
        assert!((folded_max_x(&r) - SQRT_2).abs() < 1e-12);
        let (p, q) = r.crease.unwrap();
        assert!((p.x, p.y) == (0.0, 1.0) || (q.x, q.y) == (0.0, 1.0));
        let svg = r.to_svg();
        assert!(svg.contains(r#"class="folded""#));
        assert!(svg.contains("1.41421356,"));
        assert!(svg.contains(r#"stroke="red""#));
    }

    #[test]
    fn fold_upwards_stays_on_the_page() {
        let r = render(
            PageSpec::square(),
            FoldParams::new(FoldCase::Case2, 0.5, 0.5),
        )
        .unwrap();
        for poly in &r.folded {
            for v in poly.vertices() {
                assert!(v.x >= -1e-12 && v.x <= 1.0 + 1e-12 && v.y >= -1e-12 && v.y <= 1.0 + 1e-12);
            }
        }
        assert!((folded_max_x(&r) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_of_long_page() {
        let r = render(
            PageSpec::new(2.0).unwrap(),
            FoldParams::new(FoldCase::Case1, 2.0, 1.0),
        )
        .unwrap();
        assert!((folded_max_x(&r) - 1.6).abs() < 1e-12);
        let (x, _, w, _) = r.bounds;
        assert!(x + w > 1.6);
    }

    #[test]
    fn invalid_params_rejected() {
        let err = render(
            PageSpec::square(),
            FoldParams::new(FoldCase::Case2, 0.2, 0.5),
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn output_is_deterministic() {
        let fp = FoldParams::new(FoldCase::Case2, 0.8, 0.3);
        let a = render(PageSpec::square(), fp).unwrap().to_svg();
        let b = render(PageSpec::square(), fp).unwrap().to_svg();
        assert_eq!(a, b);
    }
}
