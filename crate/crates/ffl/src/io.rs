//! Instance files and solution reports, both TOML.
//!
//! An instance file carries a `speed` scalar and a `points` array of
//! `{x, y, w}` rows; nothing else is accepted. A solution report leads with
//! the scalar summary, then the facility, highway, and metadata tables, and
//! closes with one assignment row per demand point so the two lists line up
//! by index.

use crate::error::{Error, Result};
use crate::geom::{DemandPoint, Instance, PathShape, Point, Provenance, Solution};
use crate::solver::SolveMode;
use crate::{VERTEX_SWEEP_GATE_EPS, VERTEX_SWEEP_THRESHOLD};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// On-disk form of an [`Instance`]. Field names are the file format; any
/// unknown key is a parse error so that typos fail loudly instead of being
/// silently dropped.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub speed: f64,
    pub points: Vec<PointRow>,
}

/// One demand point row: coordinates plus a strictly positive weight.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointRow {
    pub x: f64,
    pub y: f64,
    pub w: f64,
}

impl InstanceFile {
    pub fn from_instance(instance: &Instance) -> Self {
        InstanceFile {
            speed: instance.speed(),
            points: instance
                .points()
                .iter()
                .map(|p| PointRow {
                    x: p.x,
                    y: p.y,
                    w: p.w,
                })
                .collect(),
        }
    }

    /// Validate and convert. Errors name the offending field.
    pub fn into_instance(self) -> Result<Instance> {
        if !self.speed.is_finite() || self.speed <= 1.0 {
            return Err(Error::Parse(format!(
                "speed must be a finite number strictly greater than 1 (got {})",
                self.speed
            )));
        }
        if self.points.is_empty() {
            return Err(Error::Parse("points must not be empty".into()));
        }
        for (i, row) in self.points.iter().enumerate() {
            if !row.x.is_finite() {
                return Err(Error::Parse(format!("points[{i}].x must be finite")));
            }
            if !row.y.is_finite() {
                return Err(Error::Parse(format!("points[{i}].y must be finite")));
            }
            if !row.w.is_finite() || row.w <= 0.0 {
                return Err(Error::Parse(format!(
                    "points[{i}].w must be a finite positive weight (got {})",
                    row.w
                )));
            }
        }
        let points = self
            .points
            .into_iter()
            .map(|r| DemandPoint::new(r.x, r.y, r.w))
            .collect();
        Instance::new(points, self.speed)
    }
}

/// Parse a TOML instance file.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let file: InstanceFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_instance()
}

/// Serialize an instance so that parsing the output reproduces it exactly,
/// bit for bit: the TOML float encoder emits shortest round-trip literals.
pub fn serialize_instance(instance: &Instance) -> String {
    toml::to_string_pretty(&InstanceFile::from_instance(instance))
        .expect("an instance file has no unserializable values")
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_instance(&text)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// A coordinate pair in a report.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Coord {
    pub x: f64,
    pub y: f64,
}

impl From<Point> for Coord {
    fn from(p: Point) -> Self {
        Coord { x: p.x, y: p.y }
    }
}

/// Facility placement in input coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacilityReport {
    pub x: f64,
    pub y: f64,
}

/// The placed highway: orientation in both units and the minimal segment of
/// it that covers every ride.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HighwayReport {
    pub angle_radians: f64,
    pub angle_degrees: f64,
    pub point_a: Coord,
    pub point_b: Coord,
}

/// Solve context: which mode ran, at what speed, and how long it took.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportMetadata {
    pub mode: String,
    pub v: f64,
    /// Whether the speed threshold let the solver skip the vertex sweep.
    pub threshold_applied: bool,
    /// Wall-clock seconds spent solving.
    pub wall_time: f64,
}

/// Route of one demand point. `entry`/`exit` are present only when the
/// point rides the highway.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentRow {
    pub shape: String,
    pub time: f64,
    pub weighted_time: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entry: Option<Coord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exit: Option<Coord>,
}

/// Full machine-readable outcome of a solve, serialized as TOML.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionReport {
    pub objective: f64,
    pub provenance: String,
    pub facility: FacilityReport,
    pub highway: HighwayReport,
    pub metadata: ReportMetadata,
    pub assignments: Vec<AssignmentRow>,
}

pub fn mode_name(mode: SolveMode) -> &'static str {
    match mode {
        SolveMode::Auto => "auto",
        SolveMode::CaseAOnly => "case-a",
        SolveMode::Full => "full",
    }
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::CaseA => "case-a",
        Provenance::CaseB => "case-b",
    }
}

/// Assemble the report for a solved instance.
///
/// Per-point times are recomputed from the recorded route geometry (walk
/// legs at unit speed, the ride leg at `v`), so the report is
/// self-describing: summing `weighted_time` reproduces `objective` up to
/// rounding, which the test suite asserts.
pub fn build_report(
    instance: &Instance,
    solution: &Solution,
    mode: SolveMode,
    wall_time: f64,
) -> SolutionReport {
    let v = instance.speed();
    let facility = solution.facility;
    let assignments = instance
        .points()
        .iter()
        .zip(&solution.assignments)
        .map(|(p, shape)| {
            let loc = p.loc();
            let time = match shape {
                PathShape::Direct => loc.l1(facility),
                PathShape::VerticalThenHighway { entry, exit }
                | PathShape::HorizontalThenHighway { entry, exit } => {
                    loc.l1(*entry) + entry.l2(*exit) / v
                }
            };
            AssignmentRow {
                shape: shape.kind_name().to_string(),
                time,
                weighted_time: p.w * time,
                entry: shape.entry().map(Coord::from),
                exit: shape.exit().map(Coord::from),
            }
        })
        .collect();

    let angle = solution.orientation();
    SolutionReport {
        objective: solution.objective,
        provenance: provenance_name(solution.provenance).to_string(),
        facility: FacilityReport {
            x: facility.x,
            y: facility.y,
        },
        highway: HighwayReport {
            angle_radians: angle,
            angle_degrees: angle.to_degrees(),
            point_a: solution.cover_segment.a.into(),
            point_b: solution.cover_segment.b.into(),
        },
        metadata: ReportMetadata {
            mode: mode_name(mode).to_string(),
            v,
            threshold_applied: matches!(mode, SolveMode::Auto)
                && v > VERTEX_SWEEP_THRESHOLD + VERTEX_SWEEP_GATE_EPS,
            wall_time,
        },
        assignments,
    }
}

pub fn serialize_report(report: &SolutionReport) -> String {
    toml::to_string_pretty(report).expect("a report has no unserializable values")
}

pub fn parse_report(text: &str) -> Result<SolutionReport> {
    toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
