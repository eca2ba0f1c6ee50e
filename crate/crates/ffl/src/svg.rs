//! Standalone SVG rendering of a solved instance.
//!
//! The picture contains exactly one element per drawn thing, in drawing
//! order: the highway's cover segment, one route polyline per demand point
//! (color keyed by shape), one circle per demand point (radius scaled by
//! weight), and a cross marking the facility. Keeping the element count
//! rigid makes the output mechanically checkable.

use crate::geom::{Instance, PathShape, Point, Solution};
use std::fmt::Write;

const DIRECT_COLOR: &str = "#8a8a8a";
const VERTICAL_COLOR: &str = "#2563eb";
const HORIZONTAL_COLOR: &str = "#d97706";
const HIGHWAY_COLOR: &str = "#111111";
const POINT_COLOR: &str = "#9333ea";
const FACILITY_COLOR: &str = "#dc2626";

fn shape_color(shape: &PathShape) -> &'static str {
    match shape {
        PathShape::Direct => DIRECT_COLOR,
        PathShape::VerticalThenHighway { .. } => VERTICAL_COLOR,
        PathShape::HorizontalThenHighway { .. } => HORIZONTAL_COLOR,
    }
}

/// Route corners for one demand point, in world coordinates. A direct walk
/// is drawn as the axis-aligned elbow through `(f.x, p.y)`; rides go
/// point → entry → facility.
fn route_corners(p: Point, f: Point, shape: &PathShape) -> Vec<Point> {
    match shape {
        PathShape::Direct => {
            if p.x == f.x || p.y == f.y {
                vec![p, f]
            } else {
                vec![p, Point::new(f.x, p.y), f]
            }
        }
        PathShape::VerticalThenHighway { entry, exit }
        | PathShape::HorizontalThenHighway { entry, exit } => vec![p, *entry, *exit],
    }
}

struct Mapper {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Mapper {
    /// World → picture: y flips so "up" in the plane is up on screen.
    fn map(&self, p: Point) -> (f64, f64) {
        (
            (p.x - self.min_x) * self.scale,
            (self.max_y - p.y) * self.scale,
        )
    }
}

fn fmt_coord(v: f64) -> String {
    let r = format!("{v:.3}");
    // Trim the fraction so typical integer-grid instances stay tidy.
    let t = r.trim_end_matches('0').trim_end_matches('.');
    if t.is_empty() || t == "-" {
        "0".to_string()
    } else {
        t.to_string()
    }
}

/// Render the solved instance as a self-contained SVG document.
pub fn render_svg(instance: &Instance, solution: &Solution) -> String {
    let mut min = Point::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |p: Point| {
        min.x = min.x.min(p.x);
        min.y = min.y.min(p.y);
        max.x = max.x.max(p.x);
        max.y = max.y.max(p.y);
    };
    for p in instance.points() {
        grow(p.loc());
    }
    grow(solution.facility);
    grow(solution.cover_segment.a);
    grow(solution.cover_segment.b);

    let extent = (max.x - min.x).max(max.y - min.y).max(1.0);
    let margin = extent * 0.08;
    min = Point::new(min.x - margin, min.y - margin);
    max = Point::new(max.x + margin, max.y + margin);

    // Normalize to a fixed picture width so stroke widths and dot radii are
    // meaningful regardless of world units.
    let scale = 720.0 / (max.x - min.x);
    let mapper = Mapper {
        min_x: min.x,
        max_y: max.y,
        scale,
    };
    let width = 720.0;
    let height = (max.y - min.y) * scale;

    let w_max = instance
        .points()
        .iter()
        .map(|p| p.w)
        .fold(f64::NEG_INFINITY, f64::max);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}" width="{}" height="{}">"#,
        fmt_coord(width),
        fmt_coord(height),
        fmt_coord(width),
        fmt_coord(height)
    );

    let (ha, hb) = (
        mapper.map(solution.cover_segment.a),
        mapper.map(solution.cover_segment.b),
    );
    let _ = writeln!(
        out,
        r#"  <line class="highway" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{HIGHWAY_COLOR}" stroke-width="3" stroke-linecap="round"/>"#,
        fmt_coord(ha.0),
        fmt_coord(ha.1),
        fmt_coord(hb.0),
        fmt_coord(hb.1)
    );

    for (p, shape) in instance.points().iter().zip(&solution.assignments) {
        let pts: Vec<String> = route_corners(p.loc(), solution.facility, shape)
            .into_iter()
            .map(|c| {
                let (x, y) = mapper.map(c);
                format!("{},{}", fmt_coord(x), fmt_coord(y))
            })
            .collect();
        let _ = writeln!(
            out,
            r#"  <polyline class="route route-{}" points="{}" fill="none" stroke="{}" stroke-width="1.6" stroke-dasharray="{}"/>"#,
            shape.kind_name(),
            pts.join(" "),
            shape_color(shape),
            if shape.is_ride() { "none" } else { "5 3" }
        );
    }

    for p in instance.points() {
        let (x, y) = mapper.map(p.loc());
        let r = 4.0 + 8.0 * (p.w / w_max).sqrt();
        let _ = writeln!(
            out,
            r#"  <circle class="point" cx="{}" cy="{}" r="{}" fill="{POINT_COLOR}" fill-opacity="0.75"/>"#,
            fmt_coord(x),
            fmt_coord(y),
            fmt_coord(r)
        );
    }

    let (fx, fy) = mapper.map(solution.facility);
    let arm = 9.0;
    let _ = writeln!(
        out,
        r#"  <path class="facility" d="M {} {} L {} {} M {} {} L {} {}" stroke="{FACILITY_COLOR}" stroke-width="3" stroke-linecap="round"/>"#,
        fmt_coord(fx - arm),
        fmt_coord(fy - arm),
        fmt_coord(fx + arm),
        fmt_coord(fy + arm),
        fmt_coord(fx - arm),
        fmt_coord(fy + arm),
        fmt_coord(fx + arm),
        fmt_coord(fy - arm)
    );

    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::DemandPoint;
    use crate::solver::{solve, SolveMode};

    /// Minimal well-formedness check for the XML subset we emit: every tag
    /// closes, attributes are quoted, and a single root wraps the document.
    fn assert_well_formed(xml: &str) {
        let mut stack: Vec<String> = Vec::new();
        let mut roots = 0;
        let mut rest = xml.trim();
        while let Some(start) = rest.find('<') {
            let end = start
                + rest[start..]
                    .find('>')
                    .unwrap_or_else(|| panic!("unterminated tag near: {rest:.40}"));
            let tag = &rest[start + 1..end];
            assert_eq!(
                tag.matches('"').count() % 2,
                0,
                "unbalanced quotes in <{tag}>"
            );
            if let Some(name) = tag.strip_prefix('/') {
                let open = stack.pop().unwrap_or_else(|| panic!("stray </{name}>"));
                assert_eq!(open, name, "mismatched close tag");
            } else if !tag.ends_with('/') && !tag.starts_with('?') && !tag.starts_with('!') {
                let name = tag.split_whitespace().next().unwrap().to_string();
                if stack.is_empty() {
                    roots += 1;
                }
                stack.push(name);
            }
            rest = &rest[end + 1..];
        }
        assert!(stack.is_empty(), "unclosed tags: {stack:?}");
        assert_eq!(roots, 1, "expected exactly one root element");
    }

    fn square() -> Instance {
        Instance::new(
            vec![
                DemandPoint::new(1.0, 1.0, 1.0),
                DemandPoint::new(1.0, -1.0, 1.0),
                DemandPoint::new(-1.0, 1.0, 1.0),
                DemandPoint::new(-1.0, -1.0, 1.0),
            ],
            2.0,
        )
        .unwrap()
    }

    #[test]
    fn element_counts_are_rigid() {
        let inst = square();
        let sol = solve(&inst, SolveMode::Auto).unwrap();
        let svg = render_svg(&inst, &sol);
        let n = inst.points().len();
        assert_eq!(svg.matches("<polyline").count(), n);
        assert_eq!(svg.matches("<circle").count(), n);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches(r#"<path class="facility""#).count(), 1);
        assert_well_formed(&svg);
    }

    #[test]
    fn route_classes_match_the_assignments() {
        let inst = square();
        let sol = solve(&inst, SolveMode::Auto).unwrap();
        let svg = render_svg(&inst, &sol);
        for shape in &sol.assignments {
            assert!(svg.contains(&format!("route-{}", shape.kind_name())));
        }
        let rides = sol.assignments.iter().filter(|s| s.is_ride()).count();
        let ride_polylines =
            svg.matches("route-vertical").count() + svg.matches("route-horizontal").count();
        assert_eq!(rides, ride_polylines);
    }

    #[test]
    fn weights_scale_the_dots() {
        let inst = Instance::new(
            vec![
                DemandPoint::new(0.0, 0.0, 9.0),
                DemandPoint::new(5.0, 0.0, 1.0),
            ],
            1.5,
        )
        .unwrap();
        let sol = solve(&inst, SolveMode::Auto).unwrap();
        let svg = render_svg(&inst, &sol);
        // Heaviest point gets the full radius 4 + 8·√1; the light one gets
        // 4 + 8·√(1/9).
        assert!(svg.contains(r#"r="12""#), "{svg}");
        assert!(svg.contains(r#"r="6.667""#), "{svg}");
        assert_well_formed(&svg);
    }
}
