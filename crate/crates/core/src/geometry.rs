//! Planar geometry of a page folded along straight creases.
//!
//! The page is the rectangle `[0, 1] × [0, A]` whose top edge (`y = A`) is
//! bound and never moves. A fold splits every layer of the current layout by
//! a crease and reflects whatever lies on the side away from the top edge.
//! Layer ordering and self-penetration are not modeled; only the planar
//! footprint matters for extents.
//!
//! Tolerances: [`DEGENERACY_EPS`] decides point-on-line and zero-area tests,
//! [`EQ_EPS`] is the equality tolerance used by callers comparing results.

use std::ops::{Add, Mul, Sub};

use crate::error::{invalid, Error, Result};

/// Threshold for point-on-line and zero-area decisions.
pub const DEGENERACY_EPS: f64 = 1e-12;

/// Tolerance for equality between independently computed quantities.
pub const EQ_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

/// An oriented straight line through two distinct points.
///
/// The orientation matters only for [`split_polygon`]: the half-plane to the
/// left of `p → q` is the kept side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crease {
    p: Point,
    q: Point,
    dir: Point,
}

impl Crease {
    pub fn new(p: Point, q: Point) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() {
            return Err(invalid("crease points must be finite"));
        }
        let d = q - p;
        let len = d.norm();
        if len <= DEGENERACY_EPS {
            return Err(invalid(format!(
                "degenerate crease: |p - q| = {len:e} <= {DEGENERACY_EPS:e}"
            )));
        }
        Ok(Self {
            p,
            q,
            dir: d * (1.0 / len),
        })
    }

    /// Line through `p` making angle `angle` (radians, counterclockwise from +x).
    pub fn through_with_angle(p: Point, angle: f64) -> Result<Self> {
        Self::new(p, p + Point::new(angle.cos(), angle.sin()))
    }

    pub fn p(&self) -> Point {
        self.p
    }

    pub fn q(&self) -> Point {
        self.q
    }

    /// Unit direction of `p → q`.
    pub fn direction(&self) -> Point {
        self.dir
    }

    /// Angle by which the line descends below the horizontal, in
    /// `(-π/2, π/2]`. For the case-2 crease through `(0, a)` and `(1, b)`
    /// this is `atan(a - b)`.
    pub fn tilt_angle(&self) -> f64 {
        let (dx, dy) = if self.dir.x < 0.0 || (self.dir.x == 0.0 && self.dir.y > 0.0) {
            (-self.dir.x, -self.dir.y)
        } else {
            (self.dir.x, self.dir.y)
        };
        (-dy).atan2(dx)
    }

    /// Signed distance of `pt` from the line, positive on the left of `p → q`.
    pub fn side(&self, pt: Point) -> f64 {
        self.dir.cross(pt - self.p)
    }

    /// Same line with the opposite orientation.
    pub fn reversed(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
            dir: self.dir * -1.0,
        }
    }

    /// Orient the line so that `pt` lies on its left (kept) side. Points on
    /// the line leave the orientation unchanged.
    pub fn facing(&self, pt: Point) -> Self {
        if self.side(pt) < 0.0 {
            self.reversed()
        } else {
            *self
        }
    }
}

/// Mirror image of `p` across the crease line.
pub fn reflect_point(p: Point, crease: &Crease) -> Point {
    let d = crease.side(p);
    if d.abs() <= DEGENERACY_EPS {
        return p;
    }
    // left normal of the unit direction
    let n = Point::new(-crease.dir.y, crease.dir.x);
    p - n * (2.0 * d)
}

fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut twice = 0.0;
    for i in 0..n {
        twice += vertices[i].cross(vertices[(i + 1) % n]);
    }
    0.5 * twice
}

fn segments_touch(a0: Point, a1: Point, b0: Point, b1: Point) -> bool {
    let orient = |p: Point, q: Point, r: Point| (q - p).cross(r - p);
    let on_segment = |p: Point, q: Point, r: Point| {
        r.x >= p.x.min(q.x) - DEGENERACY_EPS
            && r.x <= p.x.max(q.x) + DEGENERACY_EPS
            && r.y >= p.y.min(q.y) - DEGENERACY_EPS
            && r.y <= p.y.max(q.y) + DEGENERACY_EPS
    };
    let d1 = orient(b0, b1, a0);
    let d2 = orient(b0, b1, a1);
    let d3 = orient(a0, a1, b0);
    let d4 = orient(a0, a1, b1);
    let strictly = |u: f64, v: f64| {
        (u > DEGENERACY_EPS && v < -DEGENERACY_EPS) || (u < -DEGENERACY_EPS && v > DEGENERACY_EPS)
    };
    if strictly(d1, d2) && strictly(d3, d4) {
        return true;
    }
    (d1.abs() <= DEGENERACY_EPS && on_segment(b0, b1, a0))
        || (d2.abs() <= DEGENERACY_EPS && on_segment(b0, b1, a1))
        || (d3.abs() <= DEGENERACY_EPS && on_segment(a0, a1, b0))
        || (d4.abs() <= DEGENERACY_EPS && on_segment(a0, a1, b1))
}

/// A simple polygon with counterclockwise vertices and positive area.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Validates the ring. Clockwise input is reversed to counterclockwise.
    pub fn new(mut vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(invalid("polygon needs at least 3 vertices"));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(invalid("polygon vertices must be finite"));
        }
        let area = signed_area(&vertices);
        if area.abs() <= DEGENERACY_EPS {
            return Err(invalid(format!("polygon area {area:e} is degenerate")));
        }
        if area < 0.0 {
            vertices.reverse();
        }
        let n = vertices.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                if segments_touch(
                    vertices[i],
                    vertices[(i + 1) % n],
                    vertices[j],
                    vertices[(j + 1) % n],
                ) {
                    return Err(invalid("polygon is not simple"));
                }
            }
        }
        Ok(Self { vertices })
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
    pub fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        Self::new(vec![
            Point::new(x0, y0),
            Point::new(x1, y0),
            Point::new(x1, y1),
            Point::new(x0, y1),
        ])
    }

    /// Accepts a ring produced internally from a valid polygon; drops it when
    /// it collapsed below the area threshold.
    fn from_ring(ring: Vec<Point>) -> Option<Self> {
        let mut cleaned: Vec<Point> = Vec::with_capacity(ring.len());
        for p in ring {
            if cleaned
                .last()
                .is_none_or(|last: &Point| last.distance(p) > DEGENERACY_EPS)
            {
                cleaned.push(p);
            }
        }
        while cleaned.len() > 1 && cleaned[0].distance(cleaned[cleaned.len() - 1]) <= DEGENERACY_EPS
        {
            cleaned.pop();
        }
        if cleaned.len() < 3 {
            return None;
        }
        let area = signed_area(&cleaned);
        if area.abs() < DEGENERACY_EPS {
            return None;
        }
        if area < 0.0 {
            cleaned.reverse();
        }
        Some(Self { vertices: cleaned })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn max_x(&self) -> f64 {
        self.vertices
            .iter()
            .map(|p| p.x)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_y(&self) -> f64 {
        self.vertices
            .iter()
            .map(|p| p.y)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let c = self.vertices[(i + 2) % n];
            (b - a).cross(c - b) >= -DEGENERACY_EPS
        })
    }

    /// Mirror image across `crease`, re-oriented counterclockwise.
    pub fn reflected(&self, crease: &Crease) -> Self {
        let mut vertices: Vec<Point> = self
            .vertices
            .iter()
            .map(|&p| reflect_point(p, crease))
            .collect();
        vertices.reverse();
        Self { vertices }
    }

    /// Ear-clipping triangulation.
    fn triangulate(&self) -> Vec<Polygon> {
        let mut idx: Vec<usize> = (0..self.vertices.len()).collect();
        let mut out = Vec::with_capacity(idx.len().saturating_sub(2));
        let v = &self.vertices;
        while idx.len() > 3 {
            let n = idx.len();
            let ear = (0..n).find(|&k| {
                let (a, b, c) = (v[idx[(k + n - 1) % n]], v[idx[k]], v[idx[(k + 1) % n]]);
                if (b - a).cross(c - b) <= DEGENERACY_EPS {
                    return false;
                }
                idx.iter().all(|&j| {
                    let p = v[j];
                    if p == a || p == b || p == c {
                        return true;
                    }
                    let inside = (b - a).cross(p - a) >= -DEGENERACY_EPS
                        && (c - b).cross(p - b) >= -DEGENERACY_EPS
                        && (a - c).cross(p - c) >= -DEGENERACY_EPS;
                    !inside
                })
            });
            // A simple polygon always has an ear; fall back to a fan if
            // rounding hides every one of them.
            let k = ear.unwrap_or(0);
            let tri = vec![v[idx[(k + n - 1) % n]], v[idx[k]], v[idx[(k + 1) % n]]];
            out.extend(Polygon::from_ring(tri));
            idx.remove(k);
        }
        out.extend(Polygon::from_ring(idx.iter().map(|&i| v[i]).collect()));
        out
    }
}

/// Clip a convex ring to the closed half-plane where `sign * side >= 0`.
fn clip_convex(vertices: &[Point], sides: &[f64], sign: f64) -> Option<Polygon> {
    let n = vertices.len();
    let mut ring = Vec::with_capacity(n + 2);
    for i in 0..n {
        let j = (i + 1) % n;
        let (si, sj) = (sides[i] * sign, sides[j] * sign);
        if si >= 0.0 {
            ring.push(vertices[i]);
        }
        if (si > 0.0 && sj < 0.0) || (si < 0.0 && sj > 0.0) {
            let t = si / (si - sj);
            ring.push(vertices[i] + (vertices[j] - vertices[i]) * t);
        }
    }
    Polygon::from_ring(ring)
}

/// Result of cutting a polygon with a crease.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Split {
    /// Pieces on the left of the crease (the side that stays put).
    pub kept: Vec<Polygon>,
    /// Pieces on the right of the crease (the side that gets reflected).
    pub moved: Vec<Polygon>,
}

/// Intersect `poly` with both closed half-planes of `crease`.
///
/// Convex input yields at most one piece per side. Non-convex input is
/// triangulated first, so each side may come back as several convex pieces
/// that tile the intersection. Pieces with area below [`DEGENERACY_EPS`] are
/// dropped.
pub fn split_polygon(poly: &Polygon, crease: &Crease) -> Split {
    let sides: Vec<f64> = poly
        .vertices
        .iter()
        .map(|&p| {
            let s = crease.side(p);
            if s.abs() <= DEGENERACY_EPS {
                0.0
            } else {
                s
            }
        })
        .collect();
    if sides.iter().all(|&s| s >= 0.0) {
        return Split {
            kept: vec![poly.clone()],
            moved: Vec::new(),
        };
    }
    if sides.iter().all(|&s| s <= 0.0) {
        return Split {
            kept: Vec::new(),
            moved: vec![poly.clone()],
        };
    }
    if poly.is_convex() {
        return Split {
            kept: clip_convex(&poly.vertices, &sides, 1.0)
                .into_iter()
                .collect(),
            moved: clip_convex(&poly.vertices, &sides, -1.0)
                .into_iter()
                .collect(),
        };
    }
    let mut split = Split::default();
    for tri in poly.triangulate() {
        let part = split_polygon(&tri, crease);
        split.kept.extend(part.kept);
        split.moved.extend(part.moved);
    }
    split
}

/// The page `[0, 1] × [0, aspect]` with its top edge bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageSpec {
    aspect: f64,
}

impl PageSpec {
    pub fn new(aspect: f64) -> Result<Self> {
        if !aspect.is_finite() || aspect < 1.0 {
            return Err(invalid(format!("aspect ratio must be >= 1, got {aspect}")));
        }
        Ok(Self { aspect })
    }

    pub fn square() -> Self {
        Self { aspect: 1.0 }
    }

    pub fn aspect(&self) -> f64 {
        self.aspect
    }

    pub fn width(&self) -> f64 {
        1.0
    }

    pub fn area(&self) -> f64 {
        self.width() * self.aspect
    }

    /// Endpoints of the fixed top edge, left then right.
    pub fn fixed_edge(&self) -> (Point, Point) {
        (
            Point::new(0.0, self.aspect),
            Point::new(self.width(), self.aspect),
        )
    }

    /// Corners counterclockwise from the origin.
    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(0.0, 0.0),
            Point::new(self.width(), 0.0),
            Point::new(self.width(), self.aspect),
            Point::new(0.0, self.aspect),
        ]
    }

    pub fn outline(&self) -> Polygon {
        Polygon {
            vertices: self.corners().to_vec(),
        }
    }
}

/// A stack of polygons making up a (possibly folded) page.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    layers: Vec<Polygon>,
    page: PageSpec,
}

impl Layout {
    pub fn new(layers: Vec<Polygon>, page: PageSpec) -> Self {
        Self { layers, page }
    }

    /// The unfolded page.
    pub fn pristine(page: PageSpec) -> Self {
        Self {
            layers: vec![page.outline()],
            page,
        }
    }

    pub fn layers(&self) -> &[Polygon] {
        &self.layers
    }

    pub fn page(&self) -> PageSpec {
        self.page
    }

    pub fn area(&self) -> f64 {
        self.layers.iter().map(Polygon::area).sum()
    }
}

/// Orient `crease` so the fixed top edge lies on its left, or fail when the
/// crease would carry part of that edge along. A crease lying on the edge
/// itself is a hinge the whole page swings over, as in the limit of creases
/// just below it.
fn orient_away_from_fixed_edge(crease: &Crease, page: &PageSpec) -> Result<Crease> {
    let (left, right) = page.fixed_edge();
    let snap = |s: f64| if s.abs() <= DEGENERACY_EPS { 0.0 } else { s };
    let (s0, s1) = (snap(crease.side(left)), snap(crease.side(right)));
    if (s0 > 0.0 && s1 < 0.0) || (s0 < 0.0 && s1 > 0.0) {
        return Err(Error::FoldCapturesFixedEdge);
    }
    if s0 == 0.0 && s1 == 0.0 {
        return Ok(crease.facing(Point::new(0.0, 0.0)).reversed());
    }
    if s0 < 0.0 || s1 < 0.0 {
        Ok(crease.reversed())
    } else {
        Ok(*crease)
    }
}

/// Fold every layer of `layout` along `crease`, reflecting all material on
/// the side away from the fixed top edge.
pub fn fold(layout: &Layout, crease: &Crease) -> Result<Layout> {
    let crease = orient_away_from_fixed_edge(crease, &layout.page)?;
    let mut kept = Vec::with_capacity(layout.layers.len() + 1);
    let mut moved = Vec::new();
    for layer in &layout.layers {
        let split = split_polygon(layer, &crease);
        kept.extend(split.kept);
        moved.extend(split.moved.iter().map(|p| p.reflected(&crease)));
    }
    kept.extend(moved);
    Ok(Layout {
        layers: kept,
        page: layout.page,
    })
}

/// Maximum x and maximum y over every vertex of every layer.
pub fn extent(layout: &Layout) -> Result<(f64, f64)> {
    if layout.layers.is_empty() {
        return Err(invalid("extent of an empty layout"));
    }
    let x_e = layout
        .layers
        .iter()
        .map(Polygon::max_x)
        .fold(f64::NEG_INFINITY, f64::max);
    let y_e = layout
        .layers
        .iter()
        .map(Polygon::max_y)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok((x_e, y_e))
}

/// The two ways a single upper-right fold can cross the page.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FoldCase {
    /// Crease through the left and bottom edges; the folded part is the
    /// triangle at the bottom-left corner.
    Case1,
    /// Crease through the left and right edges; the folded part is the
    /// trapezoid along the bottom edge.
    Case2,
}

impl FoldCase {
    pub fn number(self) -> u8 {
        match self {
            FoldCase::Case1 => 1,
            FoldCase::Case2 => 2,
        }
    }
}

/// Crease parameters: `a` is the height where the crease meets the left
/// edge; `b` is where it meets the bottom edge (case 1) or the height where
/// it meets the right edge (case 2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoldParams {
    pub case: FoldCase,
    pub a: f64,
    pub b: f64,
}

impl FoldParams {
    pub fn new(case: FoldCase, a: f64, b: f64) -> Self {
        Self { case, a, b }
    }

    pub fn validate(&self, page: &PageSpec) -> Result<()> {
        let (a, b, h) = (self.a, self.b, page.aspect());
        if !a.is_finite() || !b.is_finite() {
            return Err(invalid("fold parameters must be finite"));
        }
        let ok = match self.case {
            FoldCase::Case1 => (0.0..=h).contains(&a) && (0.0..=page.width()).contains(&b),
            FoldCase::Case2 => 0.0 <= b && b <= a && a <= h,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!(
                "{:?} parameters (a = {a}, b = {b}) out of range for aspect {h}",
                self.case
            )))
        }
    }

    /// The crease, oriented so the fixed top edge is on its left.
    pub fn crease(&self, page: &PageSpec) -> Result<Crease> {
        self.validate(page)?;
        match self.case {
            FoldCase::Case1 => Crease::new(Point::new(0.0, self.a), Point::new(self.b, 0.0)),
            FoldCase::Case2 => {
                Crease::new(Point::new(0.0, self.a), Point::new(page.width(), self.b))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FoldOutcome {
    pub layout: Layout,
    pub x_e: f64,
    pub y_e: f64,
    /// `x_e - 1`: how far the folded page sticks out past the right edge.
    pub excess: f64,
}

/// Fold the pristine page once with the crease described by `fp`.
pub fn apply_fold_params(page: &PageSpec, fp: &FoldParams) -> Result<FoldOutcome> {
    let crease = fp.crease(page)?;
    let layout = fold(&Layout::pristine(*page), &crease)?;
    let (x_e, y_e) = extent(&layout)?;
    Ok(FoldOutcome {
        layout,
        x_e,
        y_e,
        excess: x_e - 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn degenerate_crease_is_rejected() {
        let p = Point::new(0.3, 0.3);
        assert!(matches!(
            Crease::new(p, p + Point::new(1e-13, 0.0)),
            Err(Error::InvalidArgument(_))
        ));
        assert!(Crease::new(p, Point::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn reflect_examples() {
        let vertical = Crease::new(Point::new(0.5, 0.0), Point::new(0.5, 1.0)).unwrap();
        assert_eq!(
            reflect_point(Point::new(0.0, 0.0), &vertical),
            Point::new(1.0, 0.0)
        );
        let on = Point::new(0.5, 0.37);
        assert_eq!(reflect_point(on, &vertical), on);

        let fp = FoldParams::new(FoldCase::Case2, 1.0, 2.0 - SQRT_2);
        let crease = fp.crease(&PageSpec::square()).unwrap();
        let c_img = reflect_point(Point::new(1.0, 0.0), &crease);
        assert!(close(c_img.x, SQRT_2, 1e-12));
    }

    #[test]
    fn tilt_angle_matches_case2_slope() {
        let fp = FoldParams::new(FoldCase::Case2, 0.8, 0.3);
        let crease = fp.crease(&PageSpec::square()).unwrap();
        assert!(close(crease.tilt_angle(), 0.5f64.atan(), 1e-15));
        assert!(close(crease.reversed().tilt_angle(), 0.5f64.atan(), 1e-15));
    }

    #[test]
    fn polygon_validation() {
        assert!(Polygon::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)]).is_err());
        // collinear
        assert!(Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0)
        ])
        .is_err());
        // bow-tie
        assert!(Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0)
        ])
        .is_err());
        // clockwise input is accepted and reoriented
        let cw = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(close(cw.area(), 1.0, 1e-15));
    }

    #[test]
    fn split_unit_square() {
        let sq = Polygon::rect(0.0, 0.0, 1.0, 1.0).unwrap();

        let half = split_polygon(
            &sq,
            &Crease::new(Point::new(0.5, 0.0), Point::new(0.5, 1.0)).unwrap(),
        );
        assert_eq!((half.kept.len(), half.moved.len()), (1, 1));
        assert!(close(half.kept[0].area(), 0.5, 1e-12));
        assert!(close(half.moved[0].area(), 0.5, 1e-12));
        assert!(half.kept[0].max_x() <= 0.5 + 1e-15);

        let diag = split_polygon(
            &sq,
            &Crease::new(Point::new(0.0, 1.0), Point::new(1.0, 0.0)).unwrap(),
        );
        assert_eq!(diag.kept[0].vertices().len(), 3);
        assert_eq!(diag.moved[0].vertices().len(), 3);
        assert!(close(diag.kept[0].area(), 0.5, 1e-12));
        assert!(close(diag.moved[0].area(), 0.5, 1e-12));

        let fp = FoldParams::new(FoldCase::Case2, 0.8, 0.3);
        let split = split_polygon(&sq, &fp.crease(&PageSpec::square()).unwrap());
        assert!(close(split.kept[0].area(), 0.45, 1e-12));
        assert!(close(split.moved[0].area(), 0.55, 1e-12));
    }

    #[test]
    fn split_missing_crease_gives_one_empty_side() {
        let sq = Polygon::rect(0.0, 0.0, 1.0, 1.0).unwrap();
        let s = split_polygon(
            &sq,
            &Crease::new(Point::new(3.0, 0.0), Point::new(3.0, 1.0)).unwrap(),
        );
        assert_eq!(s.kept.len(), 1);
        assert!(s.moved.is_empty());
    }

    #[test]
    fn split_non_convex_preserves_area() {
        // U shape, opening upward; a horizontal cut through the arms leaves
        // two disjoint pieces above the cut.
        let u = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(3.0, 0.0),
            Point::new(3.0, 2.0),
            Point::new(2.0, 2.0),
            Point::new(2.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 2.0),
            Point::new(0.0, 2.0),
        ])
        .unwrap();
        let cut = Crease::new(Point::new(0.0, 1.5), Point::new(1.0, 1.5)).unwrap();
        let s = split_polygon(&u, &cut);
        let above: f64 = s.kept.iter().map(Polygon::area).sum();
        let below: f64 = s.moved.iter().map(Polygon::area).sum();
        assert!(close(above, 1.0, 1e-12));
        assert!(close(below, u.area() - 1.0, 1e-12));
        assert!(s
            .kept
            .iter()
            .all(|p| p.vertices().iter().all(|v| v.y >= 1.5 - 1e-12)));
    }

    #[test]
    fn fold_square_case2_optimum() {
        let page = PageSpec::square();
        let out =
            apply_fold_params(&page, &FoldParams::new(FoldCase::Case2, 1.0, 2.0 - SQRT_2)).unwrap();
        assert!(close(out.x_e, SQRT_2, 1e-12));
        assert!(close(out.y_e, 1.0 + SQRT_2 / 2.0, 1e-12));
        assert!(close(out.excess, SQRT_2 - 1.0, 1e-12));
        assert!(close(out.layout.area(), 1.0, 1e-12));
    }

    #[test]
    fn fold_upwards_has_no_excess() {
        let page = PageSpec::square();
        let out = apply_fold_params(&page, &FoldParams::new(FoldCase::Case2, 0.5, 0.5)).unwrap();
        assert!(close(out.x_e, 1.0, 1e-15));
        assert!(close(out.y_e, 1.0, 1e-15));
    }

    #[test]
    fn fold_case1_diagonal_of_square_has_no_excess() {
        let out = apply_fold_params(
            &PageSpec::square(),
            &FoldParams::new(FoldCase::Case1, 1.0, 1.0),
        )
        .unwrap();
        assert!(close(out.x_e, 1.0, 1e-12));
        assert!(close(out.excess, 0.0, 1e-12));
    }

    #[test]
    fn rough_fold_excess() {
        let out = apply_fold_params(
            &PageSpec::square(),
            &FoldParams::new(FoldCase::Case2, 0.5, 0.25),
        )
        .unwrap();
        assert!(close(out.excess, 0.125 / 1.0625, 1e-12));
    }

    #[test]
    fn crease_outside_page_leaves_layout_unchanged() {
        let page = PageSpec::new(2.0).unwrap();
        let layout = Layout::pristine(page);
        for crease in [
            Crease::new(Point::new(5.0, 0.0), Point::new(5.0, 1.0)).unwrap(),
            Crease::new(Point::new(-5.0, 1.0), Point::new(-5.0, 0.0)).unwrap(),
            Crease::new(Point::new(0.0, -1.0), Point::new(1.0, -1.5)).unwrap(),
        ] {
            assert_eq!(fold(&layout, &crease).unwrap(), layout);
        }
    }

    #[test]
    fn fold_through_top_edge_is_rejected() {
        let layout = Layout::pristine(PageSpec::square());
        let through_top = Crease::new(Point::new(0.5, 1.0), Point::new(0.7, 0.0)).unwrap();
        assert_eq!(
            fold(&layout, &through_top),
            Err(Error::FoldCapturesFixedEdge)
        );
    }

    #[test]
    fn crease_along_top_edge_flips_the_page_over() {
        let layout = Layout::pristine(PageSpec::square());
        let flipped = Polygon::rect(0.0, 1.0, 1.0, 2.0).unwrap();
        for (p, q) in [((0.0, 1.0), (1.0, 1.0)), ((1.0, 1.0), (0.0, 1.0))] {
            let c = Crease::new(Point::new(p.0, p.1), Point::new(q.0, q.1)).unwrap();
            let out = fold(&layout, &c).unwrap();
            assert_eq!(out.layers().len(), 1);
            assert!((out.layers()[0].area() - flipped.area()).abs() < 1e-12);
            assert_eq!(extent(&out).unwrap(), (1.0, 2.0));
        }
        let page = PageSpec::new(1.5).unwrap();
        let out = apply_fold_params(&page, &FoldParams::new(FoldCase::Case2, 1.5, 1.5)).unwrap();
        assert_eq!((out.excess, out.y_e), (0.0, 3.0));
    }

    #[test]
    fn extent_examples() {
        assert_eq!(
            extent(&Layout::pristine(PageSpec::square())).unwrap(),
            (1.0, 1.0)
        );
        let tall = PageSpec::new(2.0).unwrap();
        assert_eq!(extent(&Layout::pristine(tall)).unwrap(), (1.0, 2.0));
        assert!(extent(&Layout::new(Vec::new(), tall)).is_err());
    }

    #[test]
    fn fold_params_validation() {
        let page = PageSpec::new(1.5).unwrap();
        assert!(FoldParams::new(FoldCase::Case2, 1.0, 1.2)
            .validate(&page)
            .is_err());
        assert!(FoldParams::new(FoldCase::Case2, 1.6, 0.2)
            .validate(&page)
            .is_err());
        assert!(FoldParams::new(FoldCase::Case1, 1.5, 1.1)
            .validate(&page)
            .is_err());
        assert!(FoldParams::new(FoldCase::Case1, 1.5, 1.0)
            .validate(&page)
            .is_ok());
        assert!(FoldParams::new(FoldCase::Case2, f64::NAN, 0.0)
            .validate(&page)
            .is_err());
        assert!(PageSpec::new(0.9).is_err());
        assert!(PageSpec::new(f64::INFINITY).is_err());
    }
}
