//! Dubins CSC paths in the local frame, lifted to 3D gliding descents.
//!
//! Headings are compass degrees, clockwise from north; a right turn
//! increases heading. Only the four CSC words (RSR, RSL, LSL, LSR) are
//! considered. A 2D path is lifted to a glide by descending along each
//! segment at the glide ratio for that segment's bank and drag: turns and
//! spirals at the banked ratio, straights wings-level.

use thiserror::Error;

use crate::geodesy::LocalPoint;
use crate::performance::{BankAngle, DragConfig, PerformanceModel};

/// Turn arcs smaller than this are dropped from segment lists.
pub const MIN_ARC_DEG: f64 = 1e-6;

/// Straight pieces shorter than this are dropped from segment lists.
const MIN_STRAIGHT_FT: f64 = 1e-9;

/// Default arc-length discretization step for glide polylines.
pub const DEFAULT_DISCRETIZATION_FT: f64 = 100.0;

// snap raw direction-wise angle deltas that are a hair under a full turn
const ARC_SNAP_DEG: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum DubinsError {
    #[error("no CSC path exists for this configuration pair")]
    NoCscPath,
}

/// 2D point in the local frame, feet east (x) and north (y).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

impl std::ops::Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::ops::Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }
}

/// Normalize a heading into [0, 360).
pub fn norm_heading(deg: f64) -> f64 {
    let h = deg.rem_euclid(360.0);
    if h == 360.0 { 0.0 } else { h }
}

/// Unit vector pointing along a compass heading.
pub fn heading_unit(deg: f64) -> Point2 {
    let (s, c) = deg.to_radians().sin_cos();
    Point2::new(s, c)
}

/// Compass bearing from one point toward another.
pub fn bearing_deg(from: Point2, to: Point2) -> f64 {
    norm_heading((to.x - from.x).atan2(to.y - from.y).to_degrees())
}

/// 2D pose: position plus compass heading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Configuration2D {
    pub position: Point2,
    pub heading_deg: f64,
}

impl Configuration2D {
    pub fn new(x: f64, y: f64, heading_deg: f64) -> Self {
        Self { position: Point2::new(x, y), heading_deg: norm_heading(heading_deg) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TurnDirection {
    Left,
    Right,
}

impl TurnDirection {
    /// Sign of the heading rate: right turns increase compass heading.
    fn sign(self) -> f64 {
        match self {
            TurnDirection::Right => 1.0,
            TurnDirection::Left => -1.0,
        }
    }

    /// Turn center lies at this offset from the heading, in degrees.
    fn center_side(self) -> f64 {
        90.0 * self.sign()
    }
}

/// The four CSC words, in canonical tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[allow(clippy::upper_case_acronyms)]
pub enum PathWord {
    RSR,
    RSL,
    LSL,
    LSR,
}

impl PathWord {
    pub const ALL: [PathWord; 4] = [PathWord::RSR, PathWord::RSL, PathWord::LSL, PathWord::LSR];

    /// Entry and exit turn directions, in flight order.
    pub fn turns(self) -> (TurnDirection, TurnDirection) {
        use TurnDirection::*;
        match self {
            PathWord::RSR => (Right, Right),
            PathWord::RSL => (Right, Left),
            PathWord::LSL => (Left, Left),
            PathWord::LSR => (Left, Right),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PathWord::RSR => "RSR",
            PathWord::RSL => "RSL",
            PathWord::LSL => "LSL",
            PathWord::LSR => "LSR",
        }
    }
}

impl std::fmt::Display for PathWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Geometric piece of a trajectory.
#[derive(Debug, Clone, PartialEq)]
pub enum SegmentKind {
    Turn {
        center: Point2,
        radius: f64,
        direction: TurnDirection,
        arc_deg: f64,
        entry: Configuration2D,
    },
    Straight {
        from: Point2,
        to: Point2,
    },
    Spiral {
        center: Point2,
        radius: f64,
        direction: TurnDirection,
        turns: u32,
        entry: Configuration2D,
    },
    ExtendedFinal {
        from: Point2,
        to: Point2,
    },
}

/// Compact tag for per-point annotations and exports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentClass {
    Turn,
    Straight,
    Spiral,
    ExtendedFinal,
}

impl SegmentClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SegmentClass::Turn => "turn",
            SegmentClass::Straight => "straight",
            SegmentClass::Spiral => "spiral",
            SegmentClass::ExtendedFinal => "extended_final",
        }
    }
}

impl SegmentKind {
    pub fn class(&self) -> SegmentClass {
        match self {
            SegmentKind::Turn { .. } => SegmentClass::Turn,
            SegmentKind::Straight { .. } => SegmentClass::Straight,
            SegmentKind::Spiral { .. } => SegmentClass::Spiral,
            SegmentKind::ExtendedFinal { .. } => SegmentClass::ExtendedFinal,
        }
    }

    pub fn horizontal_length(&self) -> f64 {
        match self {
            SegmentKind::Turn { radius, arc_deg, .. } => radius * arc_deg.to_radians(),
            SegmentKind::Straight { from, to } | SegmentKind::ExtendedFinal { from, to } => from.dist(*to),
            SegmentKind::Spiral { radius, turns, .. } => {
                *turns as f64 * std::f64::consts::TAU * radius
            }
        }
    }

    pub fn entry_config(&self) -> Configuration2D {
        match self {
            SegmentKind::Turn { entry, .. } | SegmentKind::Spiral { entry, .. } => *entry,
            SegmentKind::Straight { from, to } | SegmentKind::ExtendedFinal { from, to } => {
                Configuration2D { position: *from, heading_deg: bearing_deg(*from, *to) }
            }
        }
    }

    pub fn exit_config(&self) -> Configuration2D {
        match self {
            SegmentKind::Turn { .. } | SegmentKind::Spiral { .. } => {
                self.config_at(self.horizontal_length())
            }
            SegmentKind::Straight { from, to } | SegmentKind::ExtendedFinal { from, to } => {
                Configuration2D { position: *to, heading_deg: bearing_deg(*from, *to) }
            }
        }
    }

    /// Pose after flying arc length `s` into the segment.
    pub fn config_at(&self, s: f64) -> Configuration2D {
        match self {
            SegmentKind::Turn { center, radius, direction, entry, .. }
            | SegmentKind::Spiral { center, radius, direction, entry, .. } => {
                let swept = (s / radius).to_degrees() * direction.sign();
                let heading = norm_heading(entry.heading_deg + swept);
                let position = *center + heading_unit(heading - direction.center_side()) * *radius;
                Configuration2D { position, heading_deg: heading }
            }
            SegmentKind::Straight { from, to } | SegmentKind::ExtendedFinal { from, to } => {
                let heading = bearing_deg(*from, *to);
                Configuration2D { position: *from + heading_unit(heading) * s, heading_deg: heading }
            }
        }
    }
}

/// Segment with the bank and drag it is flown at.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub bank: BankAngle,
    pub drag: DragConfig,
}

impl Segment {
    fn geometric(kind: SegmentKind) -> Self {
        Self { kind, bank: BankAngle::level(), drag: DragConfig::clean() }
    }
}

/// Point of a discretized glide path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathPoint {
    pub position: LocalPoint,
    pub bank_deg: f64,
    pub class: SegmentClass,
}

/// A 2D segment chain lifted to a descending trajectory.
#[derive(Debug, Clone)]
pub struct GlidePath {
    pub segments: Vec<Segment>,
    pub start_alt_ft: f64,
    pub end_alt_ft: f64,
    pub points: Vec<PathPoint>,
}

impl GlidePath {
    /// Analytic horizontal length of all segments.
    pub fn horizontal_length(&self) -> f64 {
        self.segments.iter().map(|s| s.kind.horizontal_length()).sum()
    }
}

// direction-wise heading change in [0, 360)
fn turn_arc_deg(from_deg: f64, to_deg: f64, dir: TurnDirection) -> f64 {
    let raw = match dir {
        TurnDirection::Right => to_deg - from_deg,
        TurnDirection::Left => from_deg - to_deg,
    };
    let arc = raw.rem_euclid(360.0);
    if arc < ARC_SNAP_DEG || arc > 360.0 - ARC_SNAP_DEG {
        0.0
    } else {
        arc
    }
}

fn turn_center(cfg: Configuration2D, radius: f64, dir: TurnDirection) -> Point2 {
    cfg.position + heading_unit(cfg.heading_deg + dir.center_side()) * radius
}

struct WordCandidate {
    word: PathWord,
    length: f64,
    segments: Vec<Segment>,
}

fn evaluate_word(
    word: PathWord,
    start: Configuration2D,
    goal: Configuration2D,
    radius: f64,
) -> Option<WordCandidate> {
    let (dir1, dir2) = word.turns();
    let c1 = turn_center(start, radius, dir1);
    let c2 = turn_center(goal, radius, dir2);
    let center_dist = c1.dist(c2);

    let (arc1_deg, straight_heading, straight_len, arc2_deg) = if dir1 == dir2 {
        if center_dist < 1e-9 {
            // both poses on one circle: a single arc joins them
            (0.0, start.heading_deg, 0.0, turn_arc_deg(start.heading_deg, goal.heading_deg, dir2))
        } else {
            let h = bearing_deg(c1, c2);
            (
                turn_arc_deg(start.heading_deg, h, dir1),
                h,
                center_dist,
                turn_arc_deg(h, goal.heading_deg, dir2),
            )
        }
    } else {
        // inner tangent needs the circles at least touching
        if center_dist < 2.0 * radius {
            return None;
        }
        let straight = (center_dist * center_dist - 4.0 * radius * radius).max(0.0).sqrt();
        let skew = (2.0 * radius).atan2(straight).to_degrees() * dir1.sign();
        let h = norm_heading(bearing_deg(c1, c2) + skew);
        (
            turn_arc_deg(start.heading_deg, h, dir1),
            h,
            straight,
            turn_arc_deg(h, goal.heading_deg, dir2),
        )
    };

    let length = radius * (arc1_deg + arc2_deg).to_radians() + straight_len;
    if !length.is_finite() {
        return None;
    }

    let mut segments = Vec::new();
    let mut cfg = start;
    if arc1_deg >= MIN_ARC_DEG {
        let kind = SegmentKind::Turn { center: c1, radius, direction: dir1, arc_deg: arc1_deg, entry: cfg };
        cfg = kind.exit_config();
        segments.push(Segment::geometric(kind));
    }
    if straight_len > MIN_STRAIGHT_FT {
        let from = cfg.position;
        let to = from + heading_unit(straight_heading) * straight_len;
        let kind = SegmentKind::Straight { from, to };
        cfg = Configuration2D { position: to, heading_deg: straight_heading };
        segments.push(Segment::geometric(kind));
    }
    if arc2_deg >= MIN_ARC_DEG {
        let entry = Configuration2D { position: cfg.position, heading_deg: cfg.heading_deg };
        let kind = SegmentKind::Turn {
            center: turn_center(entry, radius, dir2),
            radius,
            direction: dir2,
            arc_deg: arc2_deg,
            entry,
        };
        segments.push(Segment::geometric(kind));
    }

    Some(WordCandidate { word, length, segments })
}

/// Shortest CSC path between two poses at a fixed turn radius.
///
/// Ties between words resolve in the order RSR, RSL, LSL, LSR.
pub fn shortest_csc(
    start: Configuration2D,
    goal: Configuration2D,
    radius: f64,
) -> Result<(PathWord, Vec<Segment>), DubinsError> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(DubinsError::NoCscPath);
    }
    PathWord::ALL
        .into_iter()
        .filter_map(|w| evaluate_word(w, start, goal, radius))
        .min_by(|a, b| a.length.partial_cmp(&b.length).unwrap().then(a.word.cmp(&b.word)))
        .map(|c| (c.word, c.segments))
        .ok_or(DubinsError::NoCscPath)
}

/// Total 2D length of a segment chain.
pub fn chain_length(segments: &[Segment]) -> f64 {
    segments.iter().map(|s| s.kind.horizontal_length()).sum()
}

/// Spiral of full circles continuing from the given pose.
pub fn make_spirals(at: Configuration2D, radius: f64, direction: TurnDirection, turns: u32) -> Segment {
    assert!(turns >= 1, "a spiral has at least one full turn");
    Segment::geometric(SegmentKind::Spiral {
        center: turn_center(at, radius, direction),
        radius,
        direction,
        turns,
        entry: at,
    })
}

/// Final approach flown dirty from `from` to the threshold at `to`.
pub fn make_extended_final(from: Point2, to: Point2, dirty: DragConfig) -> Segment {
    Segment { kind: SegmentKind::ExtendedFinal { from, to }, bank: BankAngle::level(), drag: dirty }
}

/// Lift a 2D segment chain to a descending glide path.
///
/// Turns and spirals are flown at `bank` with `drag`; straights wings-level
/// with `drag`; extended finals wings-level with the drag they were built
/// with. The polyline is sampled every `step` feet of arc length.
pub fn lift_to_glide(
    segments: Vec<Segment>,
    model: &PerformanceModel,
    bank: BankAngle,
    drag: &DragConfig,
    start_alt_ft: f64,
    step: f64,
) -> GlidePath {
    assert!(step > 0.0, "discretization step must be positive");
    let segments: Vec<Segment> = segments
        .into_iter()
        .map(|s| match s.kind.class() {
            SegmentClass::Turn | SegmentClass::Spiral => {
                Segment { kind: s.kind, bank, drag: drag.clone() }
            }
            SegmentClass::Straight => Segment { kind: s.kind, bank: BankAngle::level(), drag: drag.clone() },
            SegmentClass::ExtendedFinal => {
                Segment { kind: s.kind, bank: BankAngle::level(), drag: s.drag }
            }
        })
        .collect();

    let mut points = Vec::new();
    let mut alt = start_alt_ft;
    for (i, seg) in segments.iter().enumerate() {
        let g = model.glide_ratio(seg.bank, &seg.drag);
        let len = seg.kind.horizontal_length();
        let class = seg.kind.class();
        if i == 0 {
            let entry = seg.kind.entry_config();
            points.push(PathPoint {
                position: LocalPoint::new(entry.position.x, entry.position.y, alt),
                bank_deg: seg.bank.degrees(),
                class,
            });
        }
        let n = (len / step).ceil().max(1.0) as usize;
        for k in 1..=n {
            let s = len * k as f64 / n as f64;
            let pos = seg.kind.config_at(s).position;
            points.push(PathPoint {
                position: LocalPoint::new(pos.x, pos.y, alt - s / g),
                bank_deg: seg.bank.degrees(),
                class,
            });
        }
        alt -= len / g;
    }

    GlidePath { segments, start_alt_ft, end_alt_ft: alt, points }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::performance::PerformanceModel;
    use glidepath_testkit::{csc_shortest, csc_word_lengths};
    use proptest::prelude::*;

    fn model() -> PerformanceModel {
        PerformanceModel::new(17.25, 225.0, []).unwrap()
    }

    fn bank(deg: f64) -> BankAngle {
        BankAngle::new(deg).unwrap()
    }

    #[test]
    fn collinear_aligned_poses_reduce_to_one_straight() {
        let start = Configuration2D::new(0.0, 0.0, 90.0);
        let goal = Configuration2D::new(10_000.0, 0.0, 90.0);
        let (word, segs) = shortest_csc(start, goal, 1000.0).unwrap();
        assert_eq!(word, PathWord::RSR, "tie with LSL resolves to RSR");
        assert_eq!(segs.len(), 1);
        assert!(matches!(segs[0].kind, SegmentKind::Straight { .. }));
        assert!((chain_length(&segs) - 10_000.0).abs() < 1e-9);
    }

    #[test]
    fn head_on_reversal_picks_inner_tangent_word() {
        let start = Configuration2D::new(0.0, 0.0, 0.0);
        let goal = Configuration2D::new(0.0, 4000.0, 180.0);
        let (word, segs) = shortest_csc(start, goal, 1000.0).unwrap();
        assert_eq!(word, PathWord::RSL);
        let expect = 1000.0 * (4.0 * std::f64::consts::PI / 3.0) + 2000.0 * 3.0f64.sqrt();
        assert!((chain_length(&segs) - expect).abs() < 1e-6);
        let arcs: Vec<f64> = segs
            .iter()
            .filter_map(|s| match s.kind {
                SegmentKind::Turn { arc_deg, .. } => Some(arc_deg),
                _ => None,
            })
            .collect();
        assert_eq!(arcs.len(), 2);
        assert!((arcs[0] - 30.0).abs() < 1e-9);
        assert!((arcs[1] - 210.0).abs() < 1e-9);
    }

    #[test]
    fn goal_straight_behind_needs_two_half_circles() {
        let start = Configuration2D::new(0.0, 0.0, 0.0);
        let goal = Configuration2D::new(0.0, -4000.0, 0.0);
        let (word, segs) = shortest_csc(start, goal, 1000.0).unwrap();
        assert_eq!(word, PathWord::RSR);
        let expect = std::f64::consts::TAU * 1000.0 + 4000.0;
        assert!((chain_length(&segs) - expect).abs() < 1e-6);
    }

    #[test]
    fn endpoints_match_requested_poses() {
        let start = Configuration2D::new(-3000.0, 7000.0, 213.0);
        let goal = Configuration2D::new(4000.0, -2000.0, 37.0);
        let (_, segs) = shortest_csc(start, goal, 1500.0).unwrap();
        let first = segs.first().unwrap().kind.entry_config();
        let last = segs.last().unwrap().kind.exit_config();
        assert!(first.position.dist(start.position) < 1e-6);
        assert!((first.heading_deg - start.heading_deg).abs() < 1e-6);
        assert!(last.position.dist(goal.position) < 1e-6);
        assert!((last.heading_deg - goal.heading_deg).abs() < 1e-6);
    }

    #[test]
    fn straight_glide_loses_length_over_ratio() {
        let segs = vec![Segment::geometric(SegmentKind::Straight {
            from: Point2::new(0.0, 0.0),
            to: Point2::new(0.0, 17_250.0),
        })];
        let path = lift_to_glide(segs, &model(), bank(45.0), &DragConfig::clean(), 5000.0, 100.0);
        assert!((path.end_alt_ft - 4000.0).abs() < 1e-9);
        for w in path.points.windows(2) {
            assert!(w[1].position.z_ft <= w[0].position.z_ft);
        }
    }

    #[test]
    fn one_spiral_turn_drops_circumference_over_banked_ratio() {
        let m = model();
        let b = bank(45.0);
        let r = m.turn_radius(b).unwrap();
        let spiral = make_spirals(Configuration2D::new(0.0, 0.0, 0.0), r, TurnDirection::Right, 1);
        let g = m.glide_ratio(b, &DragConfig::clean());
        let path = lift_to_glide(vec![spiral], &m, b, &DragConfig::clean(), 5000.0, 100.0);
        let loss = 5000.0 - path.end_alt_ft;
        assert!((loss - std::f64::consts::TAU * r / g).abs() < 1e-9);
        // hand check: 2π·(225²/11.29) / (17.25·√2/2)
        let by_hand = std::f64::consts::TAU * (225.0 * 225.0 / 11.29) / (17.25 * 0.5f64.sqrt());
        assert!((loss - by_hand).abs() < 1e-9, "loss {loss}");
        assert!((loss - 2309.8).abs() < 0.1, "loss {loss}");
    }

    #[test]
    fn empty_chain_lifts_to_zero_loss() {
        let path = lift_to_glide(Vec::new(), &model(), bank(30.0), &DragConfig::clean(), 3000.0, 100.0);
        assert_eq!(path.end_alt_ft, 3000.0);
        assert!(path.points.is_empty());
    }

    #[test]
    fn spiral_geometry() {
        let at = Configuration2D::new(100.0, -250.0, 77.0);
        let one = make_spirals(at, 4484.0, TurnDirection::Left, 1);
        assert!((one.kind.horizontal_length() - 28_173.0).abs() < 1.0);
        let exit = one.kind.exit_config();
        assert!(exit.position.dist(at.position) < 1e-6);
        assert!((exit.heading_deg - at.heading_deg).abs() < 1e-6);
        let three = make_spirals(at, 4484.0, TurnDirection::Left, 3);
        assert!((three.kind.horizontal_length() - 3.0 * one.kind.horizontal_length()).abs() < 1e-9);
    }

    #[test]
    fn extended_final_keeps_its_drag_when_lifted() {
        let m = PerformanceModel::new(17.25, 225.0, [DragConfig::new("dirty", 9.0 / 17.25).unwrap()]).unwrap();
        let dirty = m.drag("dirty").unwrap();
        let segs = vec![make_extended_final(Point2::new(0.0, 9000.0), Point2::new(0.0, 0.0), dirty.clone())];
        let path = lift_to_glide(segs, &m, bank(45.0), &DragConfig::clean(), 1000.0, 100.0);
        assert_eq!(path.segments[0].drag, dirty);
        assert!((path.end_alt_ft - 0.0).abs() < 1e-9, "9000 ft dirty at 9:1 drops 1000");
    }

    fn pose_strategy() -> impl Strategy<Value = Configuration2D> {
        (-50_000.0f64..50_000.0, -50_000.0f64..50_000.0, 0.0f64..360.0)
            .prop_map(|(x, y, h)| Configuration2D::new(x, y, h))
    }

    proptest! {
        #[test]
        fn matches_independent_word_oracle(
            start in pose_strategy(),
            goal in pose_strategy(),
            radius in 200.0f64..20_000.0,
        ) {
            prop_assume!(start.position.dist(goal.position) > radius * 1e-3);
            let (word, segs) = shortest_csc(start, goal, radius).unwrap();
            let got = chain_length(&segs);
            let (oracle_idx, oracle_len) = csc_shortest(
                (start.position.x, start.position.y, start.heading_deg),
                (goal.position.x, goal.position.y, goal.heading_deg),
                radius,
            );
            prop_assert!(
                (got - oracle_len).abs() <= 1e-6 * oracle_len.max(1.0),
                "{word}: got {got}, oracle {} {oracle_len}",
                glidepath_testkit::WORD_NAMES[oracle_idx]
            );
        }

        #[test]
        fn per_word_lengths_match_oracle(
            start in pose_strategy(),
            goal in pose_strategy(),
            radius in 200.0f64..20_000.0,
        ) {
            prop_assume!(start.position.dist(goal.position) > radius * 1e-3);
            let oracle = csc_word_lengths(
                (start.position.x, start.position.y, start.heading_deg),
                (goal.position.x, goal.position.y, goal.heading_deg),
                radius,
            );
            for (word, want) in PathWord::ALL.into_iter().zip(oracle) {
                let got = evaluate_word(word, start, goal, radius).map(|c| c.length);
                match (got, want) {
                    (Some(g), Some(w)) => {
                        prop_assert!((g - w).abs() <= 1e-6 * w.max(1.0), "{word}: {g} vs {w}")
                    }
                    (None, None) => {}
                    other => prop_assert!(false, "{word}: feasibility mismatch {other:?}"),
                }
            }
        }

        #[test]
        fn junctions_are_tangent_and_altitude_conserves(
            start in pose_strategy(),
            goal in pose_strategy(),
            radius in 200.0f64..20_000.0,
            bank_deg in 1.0f64..60.0,
            alt in 2_000.0f64..30_000.0,
        ) {
            prop_assume!(start.position.dist(goal.position) > radius * 1e-3);
            let m = model();
            let (_, segs) = shortest_csc(start, goal, radius).unwrap();
            let path = lift_to_glide(segs, &m, bank(bank_deg), &DragConfig::clean(), alt, 100.0);

            for pair in path.segments.windows(2) {
                let a = pair[0].kind.exit_config();
                let b = pair[1].kind.entry_config();
                prop_assert!(a.position.dist(b.position) < 1e-3);
                let dh = (a.heading_deg - b.heading_deg).abs();
                prop_assert!(dh.min(360.0 - dh) < 1e-3);
            }

            let expect_loss: f64 = path
                .segments
                .iter()
                .map(|s| s.kind.horizontal_length() / m.glide_ratio(s.bank, &s.drag))
                .sum();
            let loss = path.start_alt_ft - path.end_alt_ft;
            prop_assert!((loss - expect_loss).abs() <= 1e-6 * expect_loss.max(1e-9));

            for w in path.points.windows(2) {
                prop_assert!(w[1].position.z_ft <= w[0].position.z_ft + 1e-12);
                let dx = w[1].position.x_ft - w[0].position.x_ft;
                let dy = w[1].position.y_ft - w[0].position.y_ft;
                prop_assert!(dx.hypot(dy) <= 100.0 + 1e-6);
            }
        }

        #[test]
        fn polyline_chords_approach_analytic_length(
            start in pose_strategy(),
            goal in pose_strategy(),
            radius in 500.0f64..20_000.0,
        ) {
            prop_assume!(start.position.dist(goal.position) > radius * 1e-3);
            let m = model();
            let (_, segs) = shortest_csc(start, goal, radius).unwrap();
            let n_segs = segs.len() as f64;
            let analytic = chain_length(&segs);
            let path = lift_to_glide(segs, &m, bank(30.0), &DragConfig::clean(), 20_000.0, 100.0);
            let chords: f64 = path
                .points
                .windows(2)
                .map(|w| {
                    let dx = w[1].position.x_ft - w[0].position.x_ft;
                    let dy = w[1].position.y_ft - w[0].position.y_ft;
                    dx.hypot(dy)
                })
                .sum();
            prop_assert!(chords <= analytic + 1e-6);
            prop_assert!(chords >= analytic - 50.0 * n_segs);
        }
    }
}
