//! Randomized invariants. Each property encodes a structural fact the
//! solver relies on, checked against independently computed values rather
//! than against the code paths that use it.

use ffl::{
    assemble_form, build_grid, case_a_events, eval_phi_closed, minimize_form, phi_v,
    serialize_instance, solve, travel_time, AnchorConstraint, DemandPoint, GridLine, HighwayLine,
    Instance, Point, Regime, SolveMode, SymmetryTransform,
};
use ffl::parse_instance;
use proptest::prelude::*;
use std::f64::consts::FRAC_PI_4;

fn arb_speed() -> impl Strategy<Value = f64> {
    prop_oneof![
        Just(1.04),
        Just(1.2),
        Just(2.0),
        Just(4.0),
        1.02f64..8.0,
    ]
}

fn arb_coord() -> impl Strategy<Value = f64> {
    -12.0..12.0f64
}

type PlaneMap = fn(f64, f64) -> (f64, f64);

proptest! {
    /// The per-interval closed form and the per-point route minimum are two
    /// routes to the same number.
    #[test]
    fn closed_form_matches_the_primitive_sum(
        raw in prop::collection::vec((arb_coord(), arb_coord(), 0.1..5.0f64), 1..8),
        alpha in 0.0..=FRAC_PI_4,
        anchor in (arb_coord(), arb_coord()),
        along in -10.0..10.0f64,
        v in arb_speed(),
    ) {
        let h = HighwayLine::new(alpha, Point::new(anchor.0, anchor.1), SymmetryTransform::Identity);
        let f = h.point_at_param(along);
        let points: Vec<Point> = raw.iter().map(|&(x, y, _)| Point::new(x, y)).collect();
        let weights: Vec<f64> = raw.iter().map(|&(_, _, w)| w).collect();
        let closed = eval_phi_closed(&points, &weights, f, &h, v);
        let mut direct = 0.0;
        for (p, w) in points.iter().zip(&weights) {
            direct += w * travel_time(*p, f, &h, v).unwrap().0;
        }
        prop_assert!(
            (closed - direct).abs() <= 1e-8 * (1.0 + direct.abs()),
            "closed {closed} vs primitive {direct}"
        );
    }

    /// Riding faster never makes any trip slower: each route's ride leg
    /// scales as 1/v and the walk legs ignore v.
    #[test]
    fn faster_highways_never_hurt(
        p in (arb_coord(), arb_coord()),
        anchor in (arb_coord(), arb_coord()),
        along in -10.0..10.0f64,
        alpha in 0.0..=FRAC_PI_4,
        v in 1.01..8.0f64,
        dv in 0.0..4.0f64,
    ) {
        let h = HighwayLine::new(alpha, Point::new(anchor.0, anchor.1), SymmetryTransform::Identity);
        let f = h.point_at_param(along);
        let p = Point::new(p.0, p.1);
        let (slow, _) = travel_time(p, f, &h, v).unwrap();
        let (fast, _) = travel_time(p, f, &h, v + dv).unwrap();
        prop_assert!(fast <= slow + 1e-12 * (1.0 + slow), "t({}) = {fast} > t({v}) = {slow}", v + dv);
    }

    /// Travel time is continuous across the regime cutoff: the horizontal
    /// route enters the route set exactly where it ties, never with a jump.
    #[test]
    fn travel_time_is_continuous_at_the_cutoff(
        p in (arb_coord(), arb_coord()),
        anchor in (arb_coord(), arb_coord()),
        v in 1.02..8.0f64,
    ) {
        let cutoff = phi_v(v).unwrap();
        let eps = 1e-9;
        prop_assume!(cutoff - eps > 0.0 && cutoff + eps < FRAC_PI_4);
        let f = Point::new(anchor.0, anchor.1);
        let p = Point::new(p.0, p.1);
        let at = |alpha: f64| {
            let h = HighwayLine::new(alpha, f, SymmetryTransform::Identity);
            travel_time(p, f, &h, v).unwrap().0
        };
        let below = at(cutoff - eps);
        let above = at(cutoff + eps);
        // Local Lipschitz envelope: the fastest-moving foot is the
        // horizontal one, whose derivative in alpha is bounded by
        // |dy|/sin^2(alpha).
        let span = 1.0 + p.l1(f);
        let rate = 8.0 * span * (1.0 + 1.0 / (cutoff - eps).sin().powi(2));
        prop_assert!(
            (below - above).abs() <= rate * 2.0 * eps + 1e-12,
            "jump {} across cutoff {cutoff} at v={v}",
            (below - above).abs()
        );
    }

    /// Serialize then parse returns the exact same instance, bit for bit.
    #[test]
    fn instance_text_round_trips_exactly(
        raw in prop::collection::vec((-1e9..1e9f64, -1e9..1e9f64, 1e-6..1e6f64), 1..10),
        v in 1.0001..50.0f64,
    ) {
        let points: Vec<DemandPoint> = raw.iter().map(|&(x, y, w)| DemandPoint::new(x, y, w)).collect();
        let inst = Instance::new(points, v).unwrap();
        let text = serialize_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(back.speed(), inst.speed());
        prop_assert_eq!(back.points().len(), inst.points().len());
        for (a, b) in back.points().iter().zip(inst.points()) {
            prop_assert_eq!(a.x, b.x);
            prop_assert_eq!(a.y, b.y);
            prop_assert_eq!(a.w, b.w);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The optimum is invariant under the eight symmetries of the plane
    /// that preserve both the walk metric and axis alignment.
    #[test]
    fn optimum_survives_the_square_symmetries(
        raw in prop::collection::vec((-9i32..=9, -9i32..=9, 1u8..=5), 2..6),
        v in arb_speed(),
    ) {
        let base: Vec<DemandPoint> = raw
            .iter()
            .map(|&(x, y, w)| DemandPoint::new(x as f64, y as f64, w as f64))
            .collect();
        let reference = solve(&Instance::new(base.clone(), v).unwrap(), SolveMode::Full)
            .unwrap()
            .objective;
        let transforms: [PlaneMap; 7] = [
            |x, y| (-x, y),
            |x, y| (x, -y),
            |x, y| (-x, -y),
            |x, y| (y, x),
            |x, y| (-y, x),
            |x, y| (y, -x),
            |x, y| (-y, -x),
        ];
        for tf in transforms {
            let pts: Vec<DemandPoint> = base
                .iter()
                .map(|p| {
                    let (x, y) = tf(p.x, p.y);
                    DemandPoint::new(x, y, p.w)
                })
                .collect();
            let obj = solve(&Instance::new(pts, v).unwrap(), SolveMode::Full)
                .unwrap()
                .objective;
            prop_assert!(
                (obj - reference).abs() <= 1e-9 * (1.0 + reference.abs()),
                "transformed optimum {obj} vs {reference}"
            );
        }
    }

    /// Between consecutive sweep events the assembled trig form reproduces
    /// the closed objective, and its reported minimum really is the lowest
    /// value on the interval.
    #[test]
    fn assembled_forms_track_the_sweep(
        raw in prop::collection::vec((-9i32..=9, -9i32..=9, 1u8..=5), 2..7),
        anchor_sel in any::<prop::sample::Index>(),
        line_sel in any::<prop::sample::Index>(),
        vertical in any::<bool>(),
        v in arb_speed(),
    ) {
        let points: Vec<Point> = raw.iter().map(|&(x, y, _)| Point::new(x as f64, y as f64)).collect();
        let weights: Vec<f64> = raw.iter().map(|&(_, _, w)| w as f64).collect();
        let grid = build_grid(&points);
        let anchor = anchor_sel.index(points.len());
        let line = if vertical {
            GridLine::Vertical(grid.xs[line_sel.index(grid.xs.len())])
        } else {
            GridLine::Horizontal(grid.ys[line_sel.index(grid.ys.len())])
        };
        let events = case_a_events(&points, anchor, line, v).unwrap();
        let constraint = AnchorConstraint::ThroughPoint { anchor: points[anchor], line };
        for pair in events.angles.windows(2) {
            let (lo, hi) = (pair[0], pair[1]);
            if hi - lo <= 1e-9 {
                continue;
            }
            let form = assemble_form(&points, &weights, &constraint, (lo, hi), v).unwrap();
            let (arg, val) = minimize_form(&form);
            prop_assert!(arg >= lo - 1e-12 && arg <= hi + 1e-12);
            prop_assert!((form.eval(arg) - val).abs() <= 1e-9 * (1.0 + val.abs()));
            for k in 1..6 {
                let alpha = lo + (hi - lo) * k as f64 / 6.0;
                let f = constraint.facility_at(alpha);
                let h = HighwayLine::new(alpha, constraint.pivot(), SymmetryTransform::Identity);
                let direct = eval_phi_closed(&points, &weights, f, &h, v);
                let got = form.eval(alpha);
                prop_assert!(
                    (got - direct).abs() <= 1e-8 * (1.0 + direct.abs()),
                    "form {got} vs closed {direct} at alpha {alpha}"
                );
                prop_assert!(
                    val <= got + 1e-10 * (1.0 + got.abs()),
                    "minimum {val} above sampled {got}"
                );
            }
            // Endpoint check; a high-angle form is singular at alpha = 0,
            // which only arises as an endpoint in the shallow regime.
            for alpha in [lo, hi] {
                if alpha == 0.0 && form.regime == Regime::HighAngle {
                    continue;
                }
                let got = form.eval(alpha);
                prop_assert!(val <= got + 1e-10 * (1.0 + got.abs()));
            }
        }
    }
}
