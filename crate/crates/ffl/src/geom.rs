//! Domain types and travel-time primitives.
//!
//! Everything here works in the *canonical frame*: a coordinate system,
//! reached by one of four L1-preserving transforms, in which the highway
//! angle lies in `[0, π/4]`. Only solution assembly and the I/O layer map
//! back to input coordinates.

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

/// Global tolerance for on-line membership, coincidence, and objective
/// comparisons. Inputs are finite doubles; coordinates are expected within
/// ±1e6, where double rounding stays two orders of magnitude below this.
pub const EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Rectilinear (L1) distance.
    pub fn l1(self, other: Point) -> f64 {
        (self.x - other.x).abs() + (self.y - other.y).abs()
    }

    /// Euclidean (L2) distance.
    pub fn l2(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// A weighted client location. The weight scales this point's travel time in
/// the objective and must be strictly positive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DemandPoint {
    pub x: f64,
    pub y: f64,
    pub w: f64,
}

impl DemandPoint {
    pub const fn new(x: f64, y: f64, w: f64) -> Self {
        DemandPoint { x, y, w }
    }

    pub fn loc(self) -> Point {
        Point::new(self.x, self.y)
    }
}

/// A problem instance: the demand set plus the highway speed.
///
/// `speed` is the ratio of highway speed to walking speed and must be
/// strictly greater than 1; duplicates among the points are allowed and
/// simply add their weights.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    points: Vec<DemandPoint>,
    speed: f64,
}

impl Instance {
    pub fn new(points: Vec<DemandPoint>, speed: f64) -> Result<Self> {
        if !(speed > 1.0) || !speed.is_finite() {
            return Err(Error::InvalidSpeed(speed));
        }
        if points.is_empty() {
            return Err(Error::EmptyInstance);
        }
        for (index, p) in points.iter().enumerate() {
            if !(p.x.is_finite() && p.y.is_finite() && p.w.is_finite()) {
                return Err(Error::NonFiniteInput { index });
            }
            if !(p.w > 0.0) {
                return Err(Error::InvalidWeight {
                    index,
                    value: p.w,
                });
            }
        }
        Ok(Instance { points, speed })
    }

    pub fn points(&self) -> &[DemandPoint] {
        &self.points
    }

    pub fn speed(&self) -> f64 {
        self.speed
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Axis-aligned bounding box as (lower-left, upper-right).
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }

    pub fn total_weight(&self) -> f64 {
        self.points.iter().map(|p| p.w).sum()
    }
}

/// One of the four L1-and-L2-preserving coordinate maps used to bring any
/// line orientation in `[0, π)` down to a canonical angle in `[0, π/4]`.
///
/// Declaration order fixes the deterministic tie-break rank used when two
/// frames reach the same objective value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryTransform {
    /// Orientations in `[0, π/4]` already canonical.
    Identity,
    /// `(x, y) → (y, x)`; maps orientations in `(π/4, π/2]` to `π/2 − θ`.
    SwapXy,
    /// `(x, y) → (x, −y)`; maps orientations in `(3π/4, π)` to `π − θ`.
    ReflectX,
    /// Reflection about the x-axis followed by the swap, i.e. a quarter turn
    /// `(x, y) → (−y, x)`; maps orientations in `(π/2, 3π/4]` to `θ − π/2`.
    ReflectXThenSwap,
}

impl SymmetryTransform {
    pub const ALL: [SymmetryTransform; 4] = [
        SymmetryTransform::Identity,
        SymmetryTransform::SwapXy,
        SymmetryTransform::ReflectX,
        SymmetryTransform::ReflectXThenSwap,
    ];

    /// Map a point from input coordinates into the canonical frame. All four
    /// maps are linear, so the same function transforms direction vectors.
    pub fn to_canonical(self, p: Point) -> Point {
        match self {
            SymmetryTransform::Identity => p,
            SymmetryTransform::SwapXy => Point::new(p.y, p.x),
            SymmetryTransform::ReflectX => Point::new(p.x, -p.y),
            SymmetryTransform::ReflectXThenSwap => Point::new(-p.y, p.x),
        }
    }

    /// Inverse of [`to_canonical`](Self::to_canonical).
    pub fn to_input(self, p: Point) -> Point {
        match self {
            SymmetryTransform::Identity => p,
            SymmetryTransform::SwapXy => Point::new(p.y, p.x),
            SymmetryTransform::ReflectX => Point::new(p.x, -p.y),
            SymmetryTransform::ReflectXThenSwap => Point::new(p.y, -p.x),
        }
    }

    /// True when the map exchanges the axes, in which case vertical access
    /// in the canonical frame is horizontal access in the input frame.
    pub fn swaps_axes(self) -> bool {
        matches!(
            self,
            SymmetryTransform::SwapXy | SymmetryTransform::ReflectXThenSwap
        )
    }

    /// Deterministic tie-break rank (declaration order).
    pub fn rank(self) -> u8 {
        match self {
            SymmetryTransform::Identity => 0,
            SymmetryTransform::SwapXy => 1,
            SymmetryTransform::ReflectX => 2,
            SymmetryTransform::ReflectXThenSwap => 3,
        }
    }

    /// Short stable name for reports.
    pub fn name(self) -> &'static str {
        match self {
            SymmetryTransform::Identity => "identity",
            SymmetryTransform::SwapXy => "swap-xy",
            SymmetryTransform::ReflectX => "reflect-x",
            SymmetryTransform::ReflectXThenSwap => "reflect-x-then-swap",
        }
    }
}

/// Choose the frame that maps orientation `theta ∈ [0, π)` to a canonical
/// angle in `[0, π/4]`, and transform `points` into that frame.
///
/// L1 and L2 distances between any two transformed points equal the
/// originals; the transformed line orientation is the returned angle.
pub fn canonicalize(points: &[Point], theta: f64) -> (SymmetryTransform, Vec<Point>, f64) {
    let t = theta.rem_euclid(PI);
    let (frame, alpha) = if t <= FRAC_PI_4 {
        (SymmetryTransform::Identity, t)
    } else if t <= FRAC_PI_2 {
        (SymmetryTransform::SwapXy, FRAC_PI_2 - t)
    } else if t <= 3.0 * FRAC_PI_4 {
        (SymmetryTransform::ReflectXThenSwap, t - FRAC_PI_2)
    } else {
        (SymmetryTransform::ReflectX, PI - t)
    };
    let mapped = points.iter().map(|&p| frame.to_canonical(p)).collect();
    (frame, mapped, alpha.clamp(0.0, FRAC_PI_4))
}

/// The infinite highway, stored in canonical form: an anchor point the line
/// passes through, the canonical angle `alpha ∈ [0, π/4]`, and the transform
/// that maps input coordinates into this frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HighwayLine {
    pub alpha: f64,
    pub anchor: Point,
    pub frame: SymmetryTransform,
}

impl HighwayLine {
    pub fn new(alpha: f64, anchor: Point, frame: SymmetryTransform) -> Self {
        debug_assert!((0.0..=FRAC_PI_4 + 1e-15).contains(&alpha));
        HighwayLine {
            alpha,
            anchor,
            frame,
        }
    }

    /// Unit direction in the canonical frame.
    pub fn direction(&self) -> (f64, f64) {
        let (s, c) = self.alpha.sin_cos();
        (c, s)
    }

    /// Line height at abscissa `x` (canonical frame). Always defined because
    /// `alpha ≤ π/4` keeps the slope at most 1.
    pub fn y_at(&self, x: f64) -> f64 {
        self.anchor.y + (x - self.anchor.x) * self.alpha.tan()
    }

    /// Abscissa at height `y` (canonical frame); requires `alpha > 0`.
    pub fn x_at(&self, y: f64) -> f64 {
        debug_assert!(self.alpha > 0.0);
        self.anchor.x + (y - self.anchor.y) / self.alpha.tan()
    }

    /// The point of the line directly above or below `x`.
    pub fn point_at_x(&self, x: f64) -> Point {
        Point::new(x, self.y_at(x))
    }

    /// Signed parameter of `q`'s projection along the line direction,
    /// measured from the anchor.
    pub fn param_of(&self, q: Point) -> f64 {
        let (dx, dy) = self.direction();
        (q.x - self.anchor.x) * dx + (q.y - self.anchor.y) * dy
    }

    pub fn point_at_param(&self, t: f64) -> Point {
        let (dx, dy) = self.direction();
        Point::new(self.anchor.x + t * dx, self.anchor.y + t * dy)
    }

    /// Perpendicular (L2) distance from `q` to the line.
    pub fn perp_distance(&self, q: Point) -> f64 {
        let (dx, dy) = self.direction();
        ((q.x - self.anchor.x) * (-dy) + (q.y - self.anchor.y) * dx).abs()
    }

    pub fn contains(&self, q: Point) -> bool {
        self.perp_distance(q) <= EPS
    }

    /// Anchor expressed in input coordinates.
    pub fn anchor_input(&self) -> Point {
        self.frame.to_input(self.anchor)
    }

    /// Unit direction expressed in input coordinates.
    pub fn direction_input(&self) -> (f64, f64) {
        let (dx, dy) = self.direction();
        let d = self.frame.to_input(Point::new(dx, dy));
        (d.x, d.y)
    }

    /// Orientation of the input-frame line, normalized to `[0, π)`.
    pub fn orientation_input(&self) -> f64 {
        let (dx, dy) = self.direction_input();
        let theta = dy.atan2(dx).rem_euclid(PI);
        if theta >= PI {
            0.0
        } else {
            theta
        }
    }
}

/// A closed half-line: `origin + t·dir` for `t ≥ 0`, with `dir` a unit
/// vector along the highway.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfLine {
    pub origin: Point,
    pub dir: (f64, f64),
}

impl HalfLine {
    /// Membership test for points already known to lie on the carrying line.
    pub fn contains(&self, q: Point) -> bool {
        let t = (q.x - self.origin.x) * self.dir.0 + (q.y - self.origin.y) * self.dir.1;
        t >= -EPS
    }
}

/// The two axis-parallel feet of a demand point on the highway and the rays
/// that decide which access move is optimal in the shallow-slope regime.
#[derive(Clone, Copy, Debug)]
pub struct ProjectionData {
    vertical_foot: Point,
    vertical_ray: HalfLine,
    horizontal: Option<(Point, HalfLine)>,
}

impl ProjectionData {
    /// Intersection of the highway with the vertical line through the demand
    /// point: the L1-nearest point of the highway for canonical angles.
    pub fn vertical_foot(&self) -> Point {
        self.vertical_foot
    }

    /// The half of the highway starting at the vertical foot and pointing
    /// away from the horizontal foot. A facility on this ray is reached by
    /// dropping vertically first.
    pub fn vertical_ray(&self) -> HalfLine {
        self.vertical_ray
    }

    /// Intersection of the highway with the horizontal line through the
    /// demand point; undefined when the highway itself is horizontal.
    pub fn horizontal_foot(&self) -> Result<Point> {
        self.horizontal
            .map(|(p, _)| p)
            .ok_or(Error::DegenerateProjection)
    }

    /// Counterpart of [`vertical_ray`](Self::vertical_ray) for the
    /// horizontal foot.
    pub fn horizontal_ray(&self) -> Result<HalfLine> {
        self.horizontal
            .map(|(_, r)| r)
            .ok_or(Error::DegenerateProjection)
    }
}

/// Compute both feet of `p` on `h` and their rays (canonical frame).
///
/// For a horizontal highway (`alpha = 0`) the horizontal foot does not
/// exist; the vertical ray then takes its direction from the `alpha → 0⁺`
/// limit (away from the side where the horizontal foot escapes to infinity).
pub fn project(p: Point, h: &HighwayLine) -> ProjectionData {
    let vertical_foot = h.point_at_x(p.x);
    let (dx, dy) = h.direction();
    if h.alpha > 0.0 {
        let horizontal_foot = Point::new(h.x_at(p.y), p.y);
        // Orient the vertical ray away from the horizontal foot; coincident
        // feet (p on h) get an arbitrary but fixed split.
        let tv = h.param_of(vertical_foot);
        let th = h.param_of(horizontal_foot);
        let sign = if th > tv { -1.0 } else { 1.0 };
        let vertical_ray = HalfLine {
            origin: vertical_foot,
            dir: (sign * dx, sign * dy),
        };
        let horizontal_ray = HalfLine {
            origin: horizontal_foot,
            dir: (-sign * dx, -sign * dy),
        };
        ProjectionData {
            vertical_foot,
            vertical_ray,
            horizontal: Some((horizontal_foot, horizontal_ray)),
        }
    } else {
        // As alpha → 0⁺ the horizontal foot runs to +∞ for points above the
        // line and to −∞ for points below; point the ray the other way.
        let sign = if p.y >= vertical_foot.y { -1.0 } else { 1.0 };
        let vertical_ray = HalfLine {
            origin: vertical_foot,
            dir: (sign * dx, sign * dy),
        };
        ProjectionData {
            vertical_foot,
            vertical_ray,
            horizontal: None,
        }
    }
}

/// Critical highway angle `π/4 − arcsin(√2/(2v))` separating the regime
/// where every point accesses the highway vertically from the mixed regime.
pub fn phi_v(v: f64) -> Result<f64> {
    if !(v > 1.0) || !v.is_finite() {
        return Err(Error::InvalidSpeed(v));
    }
    Ok(FRAC_PI_4 - (SQRT_2 / (2.0 * v)).asin())
}

/// How a demand point reaches the facility in an optimal route.
///
/// Ride variants carry the highway entry point and the exit point (the exit
/// is the facility, which sits on the highway). All coordinates are in the
/// same frame as the solution that owns them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PathShape {
    /// Pure rectilinear walk, no highway use.
    Direct,
    /// Walk vertically to the highway, then ride to the facility.
    VerticalThenHighway { entry: Point, exit: Point },
    /// Walk horizontally to the highway, then ride to the facility.
    HorizontalThenHighway { entry: Point, exit: Point },
}

impl PathShape {
    pub fn entry(&self) -> Option<Point> {
        match *self {
            PathShape::Direct => None,
            PathShape::VerticalThenHighway { entry, .. }
            | PathShape::HorizontalThenHighway { entry, .. } => Some(entry),
        }
    }

    pub fn exit(&self) -> Option<Point> {
        match *self {
            PathShape::Direct => None,
            PathShape::VerticalThenHighway { exit, .. }
            | PathShape::HorizontalThenHighway { exit, .. } => Some(exit),
        }
    }

    pub fn is_ride(&self) -> bool {
        !matches!(self, PathShape::Direct)
    }

    /// Stable lowercase label used in reports and the SVG legend.
    pub fn kind_name(&self) -> &'static str {
        match self {
            PathShape::Direct => "direct",
            PathShape::VerticalThenHighway { .. } => "vertical",
            PathShape::HorizontalThenHighway { .. } => "horizontal",
        }
    }
}

/// Travel time from `p` to a facility `f` on highway `h` at speed `v`, with
/// the move shape that attains it (canonical frame).
///
/// The optimum over all entry/exit choices is always one of three routes:
/// the direct L1 walk, the vertical drop to the highway followed by a ride,
/// or the horizontal walk to the highway followed by a ride. The returned
/// time is the minimum of the three; costs within [`EPS`] of it resolve to
/// Direct, then vertical, then horizontal, so routes that tie exactly in
/// real arithmetic (e.g. at the regime boundary angle) pick a deterministic
/// shape regardless of rounding.
pub fn travel_time(p: Point, f: Point, h: &HighwayLine, v: f64) -> Result<(f64, PathShape)> {
    if !(v > 1.0) || !v.is_finite() {
        return Err(Error::InvalidSpeed(v));
    }
    let off = h.perp_distance(f);
    if off > EPS {
        return Err(Error::FacilityOffHighway {
            distance: off,
            tolerance: EPS,
        });
    }

    let direct = p.l1(f);

    let vfoot = h.point_at_x(p.x);
    let vertical = (p.y - vfoot.y).abs() + vfoot.l2(f) / v;

    let mut best = direct.min(vertical);
    let mut hfoot = None;
    if h.alpha > 0.0 {
        let foot = Point::new(h.x_at(p.y), p.y);
        let horizontal = (p.x - foot.x).abs() + foot.l2(f) / v;
        best = best.min(horizontal);
        hfoot = Some(foot);
    }

    let shape = if direct <= best + EPS {
        PathShape::Direct
    } else if vertical <= best + EPS {
        PathShape::VerticalThenHighway {
            entry: vfoot,
            exit: f,
        }
    } else {
        PathShape::HorizontalThenHighway {
            entry: hfoot.expect("horizontal can win only when the foot exists"),
            exit: f,
        }
    };
    Ok((best, shape))
}

/// A closed segment between two points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn length(&self) -> f64 {
        self.a.l2(self.b)
    }
}

/// Which candidate family produced a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Highway through a demand point, facility on a grid line.
    CaseA,
    /// Facility pinned at a grid vertex.
    CaseB,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::CaseA => "case-a",
            Provenance::CaseB => "case-b",
        }
    }
}

/// A complete placement: facility, highway, objective value, and one path
/// shape per demand point. Facility, assignments, and cover segment are in
/// input-frame coordinates; the highway record keeps its canonical form plus
/// the frame, so both views are available.
#[derive(Clone, Debug)]
pub struct Solution {
    pub facility: Point,
    pub highway: HighwayLine,
    pub objective: f64,
    pub assignments: Vec<PathShape>,
    pub provenance: Provenance,
    pub cover_segment: Segment,
}

impl Solution {
    /// Build a full solution record from a canonical-frame candidate:
    /// re-derives every path shape, sums the objective, maps everything to
    /// the input frame, and computes the minimal cover segment.
    pub fn assemble(
        instance: &Instance,
        highway: HighwayLine,
        facility_canonical: Point,
        provenance: Provenance,
    ) -> Result<Solution> {
        let v = instance.speed();
        let frame = highway.frame;
        let swaps = frame.swaps_axes();
        let mut objective = 0.0;
        let mut assignments = Vec::with_capacity(instance.n());
        for dp in instance.points() {
            let pc = frame.to_canonical(dp.loc());
            let (time, shape) = travel_time(pc, facility_canonical, &highway, v)?;
            objective += dp.w * time;
            // Map the shape back to input coordinates; axis-swapping frames
            // exchange what counts as a vertical vs horizontal first leg.
            let mapped = match shape {
                PathShape::Direct => PathShape::Direct,
                PathShape::VerticalThenHighway { entry, exit } => {
                    let e = frame.to_input(entry);
                    let x = frame.to_input(exit);
                    if swaps {
                        PathShape::HorizontalThenHighway { entry: e, exit: x }
                    } else {
                        PathShape::VerticalThenHighway { entry: e, exit: x }
                    }
                }
                PathShape::HorizontalThenHighway { entry, exit } => {
                    let e = frame.to_input(entry);
                    let x = frame.to_input(exit);
                    if swaps {
                        PathShape::VerticalThenHighway { entry: e, exit: x }
                    } else {
                        PathShape::HorizontalThenHighway { entry: e, exit: x }
                    }
                }
            };
            assignments.push(mapped);
        }
        let facility = frame.to_input(facility_canonical);
        let mut solution = Solution {
            facility,
            highway,
            objective,
            assignments,
            provenance,
            cover_segment: Segment {
                a: facility,
                b: facility,
            },
        };
        solution.cover_segment = minimal_cover_segment(&solution);
        Ok(solution)
    }

    /// Input-frame highway orientation in `[0, π)`.
    pub fn orientation(&self) -> f64 {
        self.highway.orientation_input()
    }

    /// Check every structural invariant of the record against its instance.
    ///
    /// Verifies: facility on the highway; objective consistent with the
    /// stored assignments; entries/exits on the highway; opposite-direction
    /// rides use disjoint open stretches of the highway; the cover segment
    /// is exactly the minimal one; and the facility satisfies the grid
    /// condition of its provenance (on a grid line with the highway through
    /// a demand point, or at a grid vertex).
    pub fn validate(&self, instance: &Instance) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidSolution(msg));
        if self.assignments.len() != instance.n() {
            return fail(format!(
                "{} assignments for {} points",
                self.assignments.len(),
                instance.n()
            ));
        }

        // Input-frame line through the facility.
        let anchor = self.highway.anchor_input();
        let (dx, dy) = self.highway.direction_input();
        let line_dist = |q: Point| ((q.x - anchor.x) * (-dy) + (q.y - anchor.y) * dx).abs();
        let param = |q: Point| (q.x - anchor.x) * dx + (q.y - anchor.y) * dy;
        if line_dist(self.facility) > EPS {
            return fail(format!(
                "facility off highway by {:.3e}",
                line_dist(self.facility)
            ));
        }

        let v = instance.speed();
        let mut recomputed = 0.0;
        let mut rides: Vec<(f64, f64)> = Vec::new();
        let tf = param(self.facility);
        for (i, (dp, shape)) in instance.points().iter().zip(&self.assignments).enumerate() {
            let time = match *shape {
                PathShape::Direct => dp.loc().l1(self.facility),
                PathShape::VerticalThenHighway { entry, exit }
                | PathShape::HorizontalThenHighway { entry, exit } => {
                    if line_dist(entry) > EPS {
                        return fail(format!("point {i}: entry off highway"));
                    }
                    if exit.l1(self.facility) > EPS {
                        return fail(format!("point {i}: exit is not the facility"));
                    }
                    rides.push((param(entry), tf));
                    dp.loc().l1(entry) + entry.l2(exit) / v
                }
            };
            recomputed += dp.w * time;
        }
        let scale = 1.0 + self.objective.abs();
        if (recomputed - self.objective).abs() > EPS * scale {
            return fail(format!(
                "objective {} disagrees with recomputed {}",
                self.objective, recomputed
            ));
        }

        // Rides meeting the facility from opposite sides must not overlap
        // except at the facility itself.
        for (i, &(a0, a1)) in rides.iter().enumerate() {
            for &(b0, b1) in &rides[i + 1..] {
                let opposite = (a1 - a0).signum() * (b1 - b0).signum() < 0.0;
                if !opposite {
                    continue;
                }
                let (alo, ahi) = (a0.min(a1), a0.max(a1));
                let (blo, bhi) = (b0.min(b1), b0.max(b1));
                if alo.max(blo) + EPS < ahi.min(bhi) {
                    return fail(format!(
                        "opposite rides overlap on ({:.6}, {:.6})",
                        alo.max(blo),
                        ahi.min(bhi)
                    ));
                }
            }
        }

        let cover = minimal_cover_segment(self);
        if cover.a.l1(self.cover_segment.a) > EPS || cover.b.l1(self.cover_segment.b) > EPS {
            return fail("cover segment is not minimal".to_string());
        }

        // Grid condition in input coordinates.
        let on_grid_x = |x: f64| instance.points().iter().any(|p| (p.x - x).abs() <= EPS);
        let on_grid_y = |y: f64| instance.points().iter().any(|p| (p.y - y).abs() <= EPS);
        let through_demand_point = instance.points().iter().any(|p| line_dist(p.loc()) <= EPS);
        let cond_a =
            through_demand_point && (on_grid_x(self.facility.x) || on_grid_y(self.facility.y));
        let cond_b = on_grid_x(self.facility.x) && on_grid_y(self.facility.y);
        let ok = match self.provenance {
            Provenance::CaseA => cond_a,
            Provenance::CaseB => cond_b,
        };
        if !ok {
            return fail(format!(
                "facility {:?} violates the {} grid condition",
                self.facility,
                self.provenance.name()
            ));
        }
        Ok(())
    }
}

/// Shortest sub-segment of the highway that contains the facility and every
/// entry and exit point. Replacing the infinite line by this segment leaves
/// the objective unchanged. All-direct solutions yield the degenerate
/// segment at the facility.
pub fn minimal_cover_segment(solution: &Solution) -> Segment {
    let anchor = solution.highway.anchor_input();
    let (dx, dy) = solution.highway.direction_input();
    let param = |q: Point| (q.x - anchor.x) * dx + (q.y - anchor.y) * dy;
    let at = |t: f64| Point::new(anchor.x + t * dx, anchor.y + t * dy);

    let tf = param(solution.facility);
    let mut lo = tf;
    let mut hi = tf;
    for shape in &solution.assignments {
        for q in [shape.entry(), shape.exit()].into_iter().flatten() {
            let t = param(q);
            lo = lo.min(t);
            hi = hi.max(t);
        }
    }
    Segment {
        a: at(lo),
        b: at(hi),
    }
}
