//! Exact rotational-sweep solver.
//!
//! The optimum is found by enumerating a finite candidate space that
//! provably contains an optimal placement: in some canonical frame either
//! the highway passes through a demand point while the facility lies on a
//! grid line (the line sweeps), or the facility sits at a grid vertex (the
//! vertex sweep; only needed for slow highways). Each candidate family is
//! swept by angle over `[0, π/4]`; between consecutive events the weighted
//! objective is a fixed five-coefficient form that is minimized exactly, and
//! the coefficient vector is maintained incrementally as events flip one
//! point's term at a time.

use crate::error::Result;
use crate::geom::{
    phi_v, HighwayLine, Instance, Point, Provenance, Solution, SymmetryTransform, EPS,
};
use crate::objective::{
    minimize_on, point_coefficients, AnchorConstraint, GridLine, Regime, Sector,
};
use crate::{VERTEX_SWEEP_GATE_EPS, VERTEX_SWEEP_THRESHOLD};
use rayon::prelude::*;
use std::f64::consts::FRAC_PI_4;

/// Which candidate families [`solve`] explores.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    /// Line sweeps always; vertex sweep only when the speed is too low to
    /// rule it out (`v ≤ 3√2/4` up to a guard band).
    Auto,
    /// Line sweeps only.
    CaseAOnly,
    /// Both families unconditionally.
    Full,
}

/// Distinct sorted x and y coordinates of a point set, deduplicated with
/// tolerance [`EPS`].
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

/// Build the axis grid of `points`.
pub fn build_grid(points: &[Point]) -> Grid {
    Grid {
        xs: cluster_axis(points.iter().map(|p| p.x)).0,
        ys: cluster_axis(points.iter().map(|p| p.y)).0,
    }
}

/// Sorted cluster representatives plus, for each input index, the cluster
/// it belongs to. Values within [`EPS`] of a cluster's representative join
/// that cluster.
fn cluster_axis(values: impl Iterator<Item = f64>) -> (Vec<f64>, Vec<usize>) {
    let vals: Vec<f64> = values.collect();
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_unstable_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    let mut reps: Vec<f64> = Vec::new();
    let mut assign = vec![0usize; vals.len()];
    for &i in &order {
        match reps.last() {
            Some(&rep) if vals[i] - rep <= EPS => {}
            _ => reps.push(vals[i]),
        }
        assign[i] = reps.len() - 1;
    }
    (reps, assign)
}

/// Sorted sweep angles at which the objective form can change shape,
/// including both interval endpoints and the regime cutoff when interior.
#[derive(Clone, Debug, PartialEq)]
pub struct EventList {
    pub angles: Vec<f64>,
}

#[derive(Clone, Copy, Debug)]
enum Tag {
    /// Point `i` crosses the rotating highway.
    Cross(u32),
    /// The facility crosses the grid row/column with this cluster index;
    /// every point in the cluster changes its side of the facility.
    Grid(u32),
    /// The regime cutoff `φ_v`.
    Regime,
}

#[derive(Clone, Copy, Debug)]
struct Ev {
    alpha: f64,
    tag: Tag,
}

/// Angles in `(0, π)` at which the rotating line through `pivot` passes
/// through each point, restricted to the open canonical range `(lo, hi)`,
/// sorted ascending.
fn point_crossings(points: &[Point], pivot: Point, lo: f64, hi: f64, out: &mut Vec<Ev>) {
    out.clear();
    for (i, p) in points.iter().enumerate() {
        let theta = (p.y - pivot.y)
            .atan2(p.x - pivot.x)
            .rem_euclid(std::f64::consts::PI);
        if theta > lo && theta < hi {
            out.push(Ev {
                alpha: theta,
                tag: Tag::Cross(i as u32),
            });
        }
    }
    out.sort_unstable_by(|a, b| a.alpha.total_cmp(&b.alpha));
}

/// Angles at which the facility, sliding along the vertical line `x = X`
/// as the highway pivots at `anchor`, crosses each horizontal grid row.
/// Generated already sorted ascending.
fn grid_crossings_vertical(ys: &[f64], anchor: Point, x_line: f64, out: &mut Vec<Ev>) {
    out.clear();
    let dx = x_line - anchor.x;
    if dx.abs() <= EPS {
        return;
    }
    // y_f = y_a + dx·tan α crosses Y where tan α = (Y − y_a)/dx ∈ (0, 1).
    if dx > 0.0 {
        let start = ys.partition_point(|&y| y <= anchor.y);
        for (k, &y) in ys[start..].iter().enumerate() {
            let t = (y - anchor.y) / dx;
            if t <= 0.0 {
                continue;
            }
            if t >= 1.0 {
                break;
            }
            out.push(Ev {
                alpha: t.atan(),
                tag: Tag::Grid((start + k) as u32),
            });
        }
    } else {
        let end = ys.partition_point(|&y| y < anchor.y);
        for (k, &y) in ys[..end].iter().enumerate().rev() {
            let t = (y - anchor.y) / dx;
            if t <= 0.0 {
                continue;
            }
            if t >= 1.0 {
                break;
            }
            out.push(Ev {
                alpha: t.atan(),
                tag: Tag::Grid(k as u32),
            });
        }
    }
}

/// Angles at which the facility, sliding along the horizontal line `y = Y`,
/// crosses each vertical grid column, restricted to `(lo, π/4)`. Generated
/// sorted ascending.
fn grid_crossings_horizontal(xs: &[f64], anchor: Point, y_line: f64, lo: f64, out: &mut Vec<Ev>) {
    out.clear();
    let dy = y_line - anchor.y;
    if dy.abs() <= EPS {
        return;
    }
    // x_f = x_a + dy·cot α crosses X where tan α = dy/(X − x_a) ∈ (tan lo, 1).
    if dy > 0.0 {
        let start = xs.partition_point(|&x| x <= anchor.x);
        for (k, &x) in xs[start..].iter().enumerate() {
            let t = dy / (x - anchor.x);
            if t >= 1.0 {
                continue;
            }
            let alpha = t.atan();
            if alpha <= lo {
                break;
            }
            out.push(Ev {
                alpha,
                tag: Tag::Grid((start + k) as u32),
            });
        }
        out.reverse();
    } else {
        let end = xs.partition_point(|&x| x < anchor.x);
        for (k, &x) in xs[..end].iter().enumerate() {
            let t = dy / (x - anchor.x);
            if t >= 1.0 {
                break;
            }
            let alpha = t.atan();
            if alpha <= lo {
                continue;
            }
            out.push(Ev {
                alpha,
                tag: Tag::Grid(k as u32),
            });
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0].alpha <= w[1].alpha));
}

/// Events of a line sweep: the highway pivots at demand point `anchor`
/// while the facility slides along `line` (all in canonical coordinates).
/// Vertical facility lines sweep `[0, π/4]`; horizontal ones only the steep
/// regime `[φ_v, π/4]`, where that family is needed.
pub fn case_a_events(points: &[Point], anchor: usize, line: GridLine, v: f64) -> Result<EventList> {
    let cutoff = phi_v(v)?;
    let pivot = points[anchor];
    let grid = build_grid(points);
    let (lo, hi) = line_sweep_range(&line, cutoff);
    let mut evs = Vec::new();
    point_crossings(points, pivot, lo, hi, &mut evs);
    let mut grid_evs = Vec::new();
    match line {
        GridLine::Vertical(x) => grid_crossings_vertical(&grid.ys, pivot, x, &mut grid_evs),
        GridLine::Horizontal(y) => {
            grid_crossings_horizontal(&grid.xs, pivot, y, lo, &mut grid_evs)
        }
    }
    evs.extend_from_slice(&grid_evs);
    let mut angles: Vec<f64> = evs.iter().map(|e| e.alpha).collect();
    angles.push(lo);
    angles.push(hi);
    if matches!(line, GridLine::Vertical(_)) {
        angles.push(cutoff);
    }
    angles.sort_unstable_by(f64::total_cmp);
    angles.dedup();
    Ok(EventList { angles })
}

/// Events of a vertex sweep: the facility is pinned at `vertex` and the
/// highway pivots through it over the steep regime `[φ_v, π/4]`.
pub fn case_b_events(points: &[Point], vertex: Point, v: f64) -> Result<EventList> {
    let cutoff = phi_v(v)?;
    let mut evs = Vec::new();
    point_crossings(points, vertex, cutoff, FRAC_PI_4, &mut evs);
    let mut angles: Vec<f64> = evs.iter().map(|e| e.alpha).collect();
    angles.push(cutoff);
    angles.push(FRAC_PI_4);
    angles.sort_unstable_by(f64::total_cmp);
    angles.dedup();
    Ok(EventList { angles })
}

fn line_sweep_range(line: &GridLine, cutoff: f64) -> (f64, f64) {
    match line {
        GridLine::Vertical(_) => (0.0, FRAC_PI_4),
        GridLine::Horizontal(_) => (cutoff, FRAC_PI_4),
    }
}

/// One candidate placement, carrying both the tie-break key and everything
/// needed to rebuild the solution. Ordering is lexicographic over
/// `(objective, frame rank, angle, facility in input coordinates, candidate
/// family)` with the pivot and line coordinate as final components so the
/// order is total and the parallel reduction is deterministic.
#[derive(Clone, Copy, Debug)]
struct Candidate {
    phi: f64,
    frame: SymmetryTransform,
    alpha: f64,
    f_input: Point,
    f_canonical: Point,
    provenance: Provenance,
    family: u8,
    pivot: Point,
    line_coord: f64,
}

impl Candidate {
    fn key(&self) -> [f64; 10] {
        [
            self.phi,
            self.frame.rank() as f64,
            self.alpha,
            self.f_input.x,
            self.f_input.y,
            match self.provenance {
                Provenance::CaseA => 0.0,
                Provenance::CaseB => 1.0,
            },
            self.family as f64,
            self.pivot.x,
            self.pivot.y,
            self.line_coord,
        ]
    }
}

fn better(a: &Candidate, b: &Candidate) -> bool {
    let (ka, kb) = (a.key(), b.key());
    for (x, y) in ka.iter().zip(kb.iter()) {
        match x.total_cmp(y) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

fn take_better(acc: Option<Candidate>, cand: Option<Candidate>) -> Option<Candidate> {
    match (acc, cand) {
        (Some(a), Some(b)) => Some(if better(&b, &a) { b } else { a }),
        (a, None) => a,
        (None, b) => b,
    }
}

/// Per-frame immutable context shared by all sweeps of that frame.
struct FrameData {
    frame: SymmetryTransform,
    pts: Vec<Point>,
    xs: Vec<f64>,
    ys: Vec<f64>,
    col_groups: Vec<Vec<u32>>,
    row_groups: Vec<Vec<u32>>,
}

impl FrameData {
    fn build(instance: &Instance, frame: SymmetryTransform) -> Self {
        let pts: Vec<Point> = instance
            .points()
            .iter()
            .map(|d| frame.to_canonical(d.loc()))
            .collect();
        let (xs, col_of) = cluster_axis(pts.iter().map(|p| p.x));
        let (ys, row_of) = cluster_axis(pts.iter().map(|p| p.y));
        let mut col_groups = vec![Vec::new(); xs.len()];
        let mut row_groups = vec![Vec::new(); ys.len()];
        for (i, (&c, &r)) in col_of.iter().zip(&row_of).enumerate() {
            col_groups[c].push(i as u32);
            row_groups[r].push(i as u32);
        }
        FrameData {
            frame,
            pts,
            xs,
            ys,
            col_groups,
            row_groups,
        }
    }
}

/// Mutable scratch reused across the sweeps of one worker thread.
struct Scratch {
    rows: Vec<[f64; 5]>,
    point_evs: Vec<Ev>,
    grid_evs: Vec<Ev>,
    merged: Vec<Ev>,
}

impl Scratch {
    fn new() -> Self {
        Scratch {
            rows: Vec::new(),
            point_evs: Vec::new(),
            grid_evs: Vec::new(),
            merged: Vec::new(),
        }
    }
}

struct ProbeCtx {
    f: Point,
    tan: f64,
    regime: Regime,
}

fn probe_ctx(constraint: &AnchorConstraint, alpha: f64, cutoff: f64) -> ProbeCtx {
    let tan = alpha.tan();
    let pivot = constraint.pivot();
    let f = match *constraint {
        AnchorConstraint::ThroughPoint {
            line: GridLine::Vertical(x),
            ..
        } => Point::new(x, pivot.y + (x - pivot.x) * tan),
        AnchorConstraint::ThroughPoint {
            line: GridLine::Horizontal(y),
            ..
        } => Point::new(pivot.x + (y - pivot.y) / tan, y),
        AnchorConstraint::AtVertex { vertex } => vertex,
    };
    let regime = if alpha <= cutoff {
        Regime::LowAngle
    } else {
        Regime::HighAngle
    };
    ProbeCtx { f, tan, regime }
}

/// Sector with a precomputed tangent; agrees with [`classify`] exactly.
fn sector_at(p: Point, f: Point, pivot: Point, tan: f64) -> Sector {
    if (p.x <= f.x && p.y >= f.y) || (p.x >= f.x && p.y <= f.y) {
        return Sector::S1;
    }
    let on_line_y = pivot.y + (p.x - pivot.x) * tan;
    if (p.x < f.x && p.y <= on_line_y) || (p.x > f.x && p.y >= on_line_y) {
        Sector::S2
    } else {
        Sector::S3
    }
}

/// Run one sweep and return its best `(objective, angle)`.
///
/// `merged` must hold the tagged events strictly inside `(lo, hi)`, sorted
/// ascending. Coefficients are rebuilt from scratch at the start and at
/// every regime event, and patched point-by-point otherwise; events closer
/// than 1e-13 are batched so probes always sit strictly inside the next
/// interval.
#[allow(clippy::too_many_arguments)]
fn run_sweep(
    pts: &[Point],
    ws: &[f64],
    v: f64,
    cutoff: f64,
    constraint: &AnchorConstraint,
    lo: f64,
    hi: f64,
    merged: &[Ev],
    groups: Option<&[Vec<u32>]>,
    rows: &mut Vec<[f64; 5]>,
) -> (f64, f64) {
    let n = pts.len();
    rows.clear();
    rows.resize(n, [0.0; 5]);
    let mut c = [0.0f64; 5];
    let pivot = constraint.pivot();

    let rebuild = |probe: f64, rows: &mut Vec<[f64; 5]>, c: &mut [f64; 5]| {
        let ctx = probe_ctx(constraint, probe, cutoff);
        *c = [0.0; 5];
        for i in 0..n {
            let sector = sector_at(pts[i], ctx.f, pivot, ctx.tan);
            let row = point_coefficients(pts[i], ws[i], constraint, ctx.f, sector, ctx.regime, v);
            rows[i] = row;
            for (acc, term) in c.iter_mut().zip(row) {
                *acc += term;
            }
        }
    };

    let first_end = merged.first().map_or(hi, |e| e.alpha);
    rebuild(0.5 * (lo + first_end), rows, &mut c);

    let mut best_phi = f64::INFINITY;
    let mut best_alpha = lo;
    let consider = |phi: f64, alpha: f64, best_phi: &mut f64, best_alpha: &mut f64| {
        if phi < *best_phi || (phi == *best_phi && alpha < *best_alpha) {
            *best_phi = phi;
            *best_alpha = alpha;
        }
    };

    let mut cur_lo = lo;
    let mut idx = 0usize;
    loop {
        let seg_end = if idx < merged.len() {
            merged[idx].alpha
        } else {
            hi
        };
        if seg_end > cur_lo {
            let (alpha, phi) = minimize_on(&c, cur_lo, seg_end);
            consider(phi, alpha, &mut best_phi, &mut best_alpha);
        }
        if idx >= merged.len() {
            break;
        }
        let batch_start = idx;
        let batch_alpha = merged[idx].alpha;
        while idx < merged.len() && merged[idx].alpha - batch_alpha <= 1e-13 {
            idx += 1;
        }
        let next_end = if idx < merged.len() {
            merged[idx].alpha
        } else {
            hi
        };
        let probe = 0.5 * (merged[idx - 1].alpha + next_end);

        let needs_rebuild = merged[batch_start..idx]
            .iter()
            .any(|e| matches!(e.tag, Tag::Regime));
        if needs_rebuild {
            rebuild(probe, rows, &mut c);
        } else {
            let ctx = probe_ctx(constraint, probe, cutoff);
            let refresh = |i: usize, rows: &mut Vec<[f64; 5]>, c: &mut [f64; 5]| {
                for (acc, term) in c.iter_mut().zip(rows[i]) {
                    *acc -= term;
                }
                let sector = sector_at(pts[i], ctx.f, pivot, ctx.tan);
                let row =
                    point_coefficients(pts[i], ws[i], constraint, ctx.f, sector, ctx.regime, v);
                rows[i] = row;
                for (acc, term) in c.iter_mut().zip(row) {
                    *acc += term;
                }
            };
            for ev in &merged[batch_start..idx] {
                match ev.tag {
                    Tag::Cross(i) => refresh(i as usize, rows, &mut c),
                    Tag::Grid(g) => {
                        for &i in &groups.expect("grid event in a vertex sweep")[g as usize] {
                            refresh(i as usize, rows, &mut c);
                        }
                    }
                    Tag::Regime => unreachable!(),
                }
            }
        }
        cur_lo = seg_end;
    }
    (best_phi, best_alpha)
}

/// Merge pre-sorted point events (restricted to `(lo, hi)`), pre-sorted grid
/// events, and the optional regime event into `out`.
fn merge_events(point_evs: &[Ev], grid_evs: &[Ev], regime: Option<f64>, lo: f64, out: &mut Vec<Ev>) {
    out.clear();
    let start = point_evs.partition_point(|e| e.alpha <= lo);
    let pts = &point_evs[start..];
    let mut i = 0;
    let mut j = 0;
    let mut reg = regime;
    loop {
        let pa = pts.get(i).map(|e| e.alpha);
        let ga = grid_evs.get(j).map(|e| e.alpha);
        let next_src = match (pa, ga) {
            (None, None) => break,
            (Some(_), None) => 0,
            (None, Some(_)) => 1,
            (Some(a), Some(b)) => {
                if a <= b {
                    0
                } else {
                    1
                }
            }
        };
        let next_alpha = if next_src == 0 {
            pa.unwrap()
        } else {
            ga.unwrap()
        };
        if let Some(r) = reg {
            if r <= next_alpha {
                out.push(Ev {
                    alpha: r,
                    tag: Tag::Regime,
                });
                reg = None;
                continue;
            }
        }
        if next_src == 0 {
            out.push(pts[i]);
            i += 1;
        } else {
            out.push(grid_evs[j]);
            j += 1;
        }
    }
    if let Some(r) = reg {
        out.push(Ev {
            alpha: r,
            tag: Tag::Regime,
        });
    }
}

enum WorkItem {
    /// All line sweeps pivoting at one demand point in one frame.
    Anchor { frame: usize, anchor: usize },
    /// All vertex sweeps of one grid column in one frame.
    VertexCol { frame: usize, col: usize },
}

fn process_item(
    item: &WorkItem,
    frames: &[FrameData],
    ws: &[f64],
    v: f64,
    cutoff: f64,
    scratch: &mut Scratch,
) -> Option<Candidate> {
    let mut best: Option<Candidate> = None;
    match *item {
        WorkItem::Anchor { frame, anchor } => {
            let fd = &frames[frame];
            let pivot = fd.pts[anchor];
            point_crossings(&fd.pts, pivot, 0.0, FRAC_PI_4, &mut scratch.point_evs);
            for (which, coords) in [(0u8, &fd.xs), (1u8, &fd.ys)] {
                for &coord in coords.iter() {
                    let (line, groups, lo) = if which == 0 {
                        (GridLine::Vertical(coord), &fd.row_groups, 0.0)
                    } else {
                        (GridLine::Horizontal(coord), &fd.col_groups, cutoff)
                    };
                    let constraint = AnchorConstraint::ThroughPoint {
                        anchor: pivot,
                        line,
                    };
                    match line {
                        GridLine::Vertical(x) => {
                            grid_crossings_vertical(&fd.ys, pivot, x, &mut scratch.grid_evs)
                        }
                        GridLine::Horizontal(y) => grid_crossings_horizontal(
                            &fd.xs,
                            pivot,
                            y,
                            lo,
                            &mut scratch.grid_evs,
                        ),
                    }
                    let regime = if which == 0 { Some(cutoff) } else { None };
                    merge_events(
                        &scratch.point_evs,
                        &scratch.grid_evs,
                        regime,
                        lo,
                        &mut scratch.merged,
                    );
                    let (phi, alpha) = run_sweep(
                        &fd.pts,
                        ws,
                        v,
                        cutoff,
                        &constraint,
                        lo,
                        FRAC_PI_4,
                        &scratch.merged,
                        Some(groups),
                        &mut scratch.rows,
                    );
                    let f_c = constraint.facility_at(alpha);
                    best = take_better(
                        best,
                        Some(Candidate {
                            phi,
                            frame: fd.frame,
                            alpha,
                            f_input: fd.frame.to_input(f_c),
                            f_canonical: f_c,
                            provenance: Provenance::CaseA,
                            family: which,
                            pivot,
                            line_coord: coord,
                        }),
                    );
                }
            }
        }
        WorkItem::VertexCol { frame, col } => {
            let fd = &frames[frame];
            let x = fd.xs[col];
            for &y in &fd.ys {
                let vertex = Point::new(x, y);
                let constraint = AnchorConstraint::AtVertex { vertex };
                point_crossings(&fd.pts, vertex, cutoff, FRAC_PI_4, &mut scratch.point_evs);
                scratch.merged.clear();
                scratch.merged.extend_from_slice(&scratch.point_evs);
                let (phi, alpha) = run_sweep(
                    &fd.pts,
                    ws,
                    v,
                    cutoff,
                    &constraint,
                    cutoff,
                    FRAC_PI_4,
                    &scratch.merged,
                    None,
                    &mut scratch.rows,
                );
                best = take_better(
                    best,
                    Some(Candidate {
                        phi,
                        frame: fd.frame,
                        alpha,
                        f_input: fd.frame.to_input(vertex),
                        f_canonical: vertex,
                        provenance: Provenance::CaseB,
                        family: 2,
                        pivot: vertex,
                        line_coord: x,
                    }),
                );
            }
        }
    }
    best
}

fn solve_with(instance: &Instance, run_lines: bool, run_vertices: bool) -> Result<Solution> {
    let v = instance.speed();
    let cutoff = phi_v(v)?;
    let frames: Vec<FrameData> = SymmetryTransform::ALL
        .iter()
        .map(|&frame| FrameData::build(instance, frame))
        .collect();
    let ws: Vec<f64> = instance.points().iter().map(|d| d.w).collect();

    let mut items: Vec<WorkItem> = Vec::new();
    for (frame, data) in frames.iter().enumerate() {
        if run_lines {
            for anchor in 0..instance.n() {
                items.push(WorkItem::Anchor { frame, anchor });
            }
        }
        if run_vertices {
            for col in 0..data.xs.len() {
                items.push(WorkItem::VertexCol { frame, col });
            }
        }
    }

    let best = items
        .par_iter()
        .map_init(Scratch::new, |scratch, item| {
            process_item(item, &frames, &ws, v, cutoff, scratch)
        })
        .reduce(|| None, take_better);

    let cand = best.expect("a validated instance always yields candidates");
    debug_assert!(cand.phi.is_finite());
    let highway = HighwayLine::new(cand.alpha, cand.pivot, cand.frame);
    Solution::assemble(instance, highway, cand.f_canonical, cand.provenance)
}

/// Best placement over the full provable candidate space for the given
/// speed: line sweeps always, vertex sweeps unless the speed threshold
/// makes them redundant (in [`SolveMode::Auto`]).
pub fn solve(instance: &Instance, mode: SolveMode) -> Result<Solution> {
    let run_vertices = match mode {
        SolveMode::CaseAOnly => false,
        SolveMode::Full => true,
        SolveMode::Auto => instance.speed() <= VERTEX_SWEEP_THRESHOLD + VERTEX_SWEEP_GATE_EPS,
    };
    solve_with(instance, true, run_vertices)
}

/// Line-sweep candidates only (highway through a demand point, facility on
/// a grid line).
pub fn solve_case_a(instance: &Instance) -> Result<Solution> {
    solve_with(instance, true, false)
}

/// Vertex-sweep candidates only (facility pinned at a grid vertex, steep
/// angles). On its own this explores a restricted space; it exists so the
/// two families can be compared directly.
pub fn solve_case_b(instance: &Instance) -> Result<Solution> {
    solve_with(instance, false, true)
}
