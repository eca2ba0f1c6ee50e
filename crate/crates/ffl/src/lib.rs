//! Exact solver for joint facility-and-highway placement in the plane.
//!
//! Given weighted demand points and a highway speed `v > 1`, the library
//! places one facility point and one infinite straight highway so that the
//! total weighted travel time from every demand point to the facility is
//! minimized. Off the highway, movement is rectilinear (L1); on the highway,
//! movement is Euclidean at speed `v`, and the highway may be entered and
//! left anywhere.
//!
//! The search runs in O(n³): candidate highways pass through a demand point
//! with the facility on a grid line (the through-point sweep), and for slow
//! highways the facility is additionally pinned to grid vertices (the vertex
//! sweep). Both sweeps rotate the highway through sorted event angles and
//! minimize a five-coefficient trigonometric form on each event-free
//! interval. Brute-force oracles in [`oracle`] certify the structural
//! assumptions on small instances.

// Validation guards are written as `!(x > y)` on purpose: NaN must take the
// rejecting branch, which the un-negated comparison would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod gen;
pub mod geom;
pub mod objective;
pub mod oracle;
pub mod solver;

pub mod bench;
pub mod io;
pub mod svg;

pub use bench::{run_bench, BenchReport, BenchRow};
pub use error::Error;
pub use gen::{generate_instance, Distribution};
pub use geom::{
    canonicalize, minimal_cover_segment, phi_v, project, travel_time, DemandPoint, HalfLine,
    HighwayLine, Instance, PathShape, Point, ProjectionData, Provenance, Segment, Solution,
    SymmetryTransform, EPS,
};
pub use objective::{
    assemble_form, classify, classify_profile, eval_phi_closed, minimize_form, partition,
    AnchorConstraint, GridLine, ObjectiveForm, Partition, ProfileClass, Regime, Sector,
};
pub use io::{
    build_report, parse_instance, parse_report, read_instance, serialize_instance,
    serialize_report, write_file, InstanceFile, SolutionReport,
};
pub use oracle::{
    find_case_b_instance, oracle_solve, oracle_solve_with_limit, oracle_travel_time, Estimate,
    OracleConfig, OracleVerdict, ORACLE_POINT_LIMIT,
};
pub use solver::{
    build_grid, case_a_events, case_b_events, solve, solve_case_a, solve_case_b, EventList, Grid,
    SolveMode,
};
pub use svg::render_svg;

/// Speed threshold above which the vertex sweep is provably unnecessary.
///
/// Equal to `3√2/4 ≈ 1.0606601717798214`. For any `v` strictly above it,
/// some optimal solution has the highway through a demand point and the
/// facility on a grid line, so `solve` in auto mode skips the vertex sweep.
pub const VERTEX_SWEEP_THRESHOLD: f64 = 1.0606601717798214;

/// Guard band added to [`VERTEX_SWEEP_THRESHOLD`] before skipping the vertex
/// sweep; the threshold hypothesis is strict, so boundary speeds stay on the
/// safe side.
pub const VERTEX_SWEEP_GATE_EPS: f64 = 1e-12;

// Every code block in the guide compiles and runs under `cargo test`, so
// the book and the library cannot drift apart.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/time-metric.md")]
    mod time_metric {}
    #[doc = include_str!("../../../book/src/objective.md")]
    mod objective {}
    #[doc = include_str!("../../../book/src/sweep.md")]
    mod sweep {}
    #[doc = include_str!("../../../book/src/threshold.md")]
    mod threshold {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
