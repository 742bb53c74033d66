//! Safety scoring and ranking of candidate trajectories.
//!
//! Six raw figures are read off each trajectory's polyline and segment list,
//! normalized against the candidate set to [0, 1] with 1 always the safer
//! end, and averaged into a single utility. Candidates are ranked by utility
//! descending; exact ties fall back to runway id, then bank.

use crate::dubins::SegmentKind;
use crate::geodesy::{distance3d, LocalPoint};
use crate::planner::PlanResult;

/// Minimum height above field elevation used when weighting bank by height,
/// so the final points of a normal approach do not dominate the mean.
pub const BANK_HEIGHT_FLOOR_FT: f64 = 50.0;

/// Per-trajectory safety figures in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawMetrics {
    /// Mean altitude over the polyline (higher is safer).
    pub mean_altitude_ft: f64,
    /// Mean 3D distance from the polyline to the threshold (smaller is safer).
    pub mean_distance_ft: f64,
    /// Mean bank angle weighted by inverse height above the field
    /// (smaller is safer).
    pub mean_bank_over_height: f64,
    /// Number of turning maneuvers: turn segments plus full spiral circles
    /// (fewer is safer).
    pub turn_count: f64,
    /// Total polyline length (shorter is safer).
    pub path_length_ft: f64,
    /// Straight dirty final length (longer is safer).
    pub extended_final_ft: f64,
}

/// The same six figures normalized to [0, 1] against the candidate set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedMetrics {
    pub mean_altitude: f64,
    pub mean_distance: f64,
    pub mean_bank_over_height: f64,
    pub turn_count: f64,
    pub path_length: f64,
    pub extended_final: f64,
}

impl NormalizedMetrics {
    pub fn utility(&self) -> f64 {
        (self.mean_altitude
            + self.mean_distance
            + self.mean_bank_over_height
            + self.turn_count
            + self.path_length
            + self.extended_final)
            / 6.0
    }
}

/// One ranked candidate: the plan plus its scores.
#[derive(Debug, Clone)]
pub struct SafetyReport {
    pub plan: PlanResult,
    pub raw: RawMetrics,
    pub normalized: NormalizedMetrics,
    pub utility: f64,
    pub rank: usize,
}

/// All scored candidates, ordered by rank ascending (best first).
#[derive(Debug, Clone, Default)]
pub struct CandidateSet {
    pub reports: Vec<SafetyReport>,
}

impl CandidateSet {
    pub fn best(&self) -> Option<&SafetyReport> {
        self.reports.first()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }
}

/// Read the six raw figures off one plan.
pub fn compute_raw(plan: &PlanResult) -> RawMetrics {
    let points = &plan.trajectory.points;
    let elevation = plan.runway.elevation_ft;
    let threshold = LocalPoint { x_ft: 0.0, y_ft: 0.0, z_ft: elevation };
    let n_points = points.len().max(1) as f64;

    let mean_altitude_ft = points.iter().map(|p| p.position.z_ft).sum::<f64>() / n_points;
    let mean_distance_ft =
        points.iter().map(|p| distance3d(p.position, threshold)).sum::<f64>() / n_points;
    let mean_bank_over_height = points
        .iter()
        .map(|p| p.bank_deg / (p.position.z_ft - elevation).max(BANK_HEIGHT_FLOOR_FT))
        .sum::<f64>()
        / n_points;
    let path_length_ft = points
        .windows(2)
        .map(|w| distance3d(w[0].position, w[1].position))
        .sum::<f64>();

    let mut turn_count = 0.0;
    let mut extended_final_ft = 0.0;
    for seg in &plan.trajectory.segments {
        match &seg.kind {
            SegmentKind::Turn { .. } => turn_count += 1.0,
            SegmentKind::Spiral { turns, .. } => turn_count += *turns as f64,
            SegmentKind::ExtendedFinal { .. } => extended_final_ft += seg.kind.horizontal_length(),
            SegmentKind::Straight { .. } => {}
        }
    }

    RawMetrics {
        mean_altitude_ft,
        mean_distance_ft,
        mean_bank_over_height,
        turn_count,
        path_length_ft,
        extended_final_ft,
    }
}

// (x - worst) / (best - worst); a degenerate column (all equal) scores 1
fn norm_column(values: &[f64], higher_is_safer: bool) -> Vec<f64> {
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if max == min {
        return vec![1.0; values.len()];
    }
    values
        .iter()
        .map(|&x| if higher_is_safer { (x - min) / (max - min) } else { (x - max) / (min - max) })
        // The min-better branch produces -0.0 at the unsafe end; keep zeros positive.
        .map(|v| if v == 0.0 { 0.0 } else { v })
        .collect()
}

/// Normalize a set of raw figures against each other.
pub fn normalize(raws: &[RawMetrics]) -> Vec<NormalizedMetrics> {
    let col = |f: fn(&RawMetrics) -> f64| raws.iter().map(f).collect::<Vec<_>>();
    let alt = norm_column(&col(|r| r.mean_altitude_ft), true);
    let dist = norm_column(&col(|r| r.mean_distance_ft), false);
    let boh = norm_column(&col(|r| r.mean_bank_over_height), false);
    let turns = norm_column(&col(|r| r.turn_count), false);
    let len = norm_column(&col(|r| r.path_length_ft), false);
    let ext = norm_column(&col(|r| r.extended_final_ft), true);
    (0..raws.len())
        .map(|i| NormalizedMetrics {
            mean_altitude: alt[i],
            mean_distance: dist[i],
            mean_bank_over_height: boh[i],
            turn_count: turns[i],
            path_length: len[i],
            extended_final: ext[i],
        })
        .collect()
}

/// Score and rank a set of plans, best first.
pub fn rank(plans: Vec<PlanResult>) -> CandidateSet {
    let raws: Vec<RawMetrics> = plans.iter().map(compute_raw).collect();
    let norms = normalize(&raws);
    let mut reports: Vec<SafetyReport> = plans
        .into_iter()
        .zip(raws)
        .zip(norms)
        .map(|((plan, raw), normalized)| SafetyReport {
            utility: normalized.utility(),
            plan,
            raw,
            normalized,
            rank: 0,
        })
        .collect();
    reports.sort_by(|a, b| {
        b.utility
            .total_cmp(&a.utility)
            .then_with(|| a.plan.runway.id.cmp(&b.plan.runway.id))
            .then(a.plan.bank.degrees().total_cmp(&b.plan.bank.degrees()))
    });
    for (i, report) in reports.iter_mut().enumerate() {
        report.rank = i + 1;
    }
    CandidateSet { reports }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesy::{GeoPosition, FEET_PER_DEGREE_LAT};
    use crate::performance::{BankAngle, DragConfig, PerformanceModel};
    use crate::planner::{generate, PlanRequest, RunwaySpec};

    fn straight_in_plan(dist_ft: f64, extra_alt_ft: f64) -> PlanResult {
        let model =
            PerformanceModel::new(17.25, 225.0, [DragConfig::new("dirty", 9.0 / 17.25).unwrap()])
                .unwrap();
        let dirty = model.drag("dirty").unwrap();
        let runway = RunwaySpec::new("TST18", GeoPosition::new(40.0, -74.0, 0.0), 0.0, 10.0);
        let start = GeoPosition::new(
            40.0 - dist_ft / FEET_PER_DEGREE_LAT,
            -74.0,
            runway.elevation_ft + dist_ft / 17.25 + extra_alt_ft,
        );
        let req =
            PlanRequest::new(start, 0.0, runway, BankAngle::new(45.0).unwrap(), model, dirty)
                .unwrap();
        generate(&req).unwrap()
    }

    #[test]
    fn raw_figures_of_a_straight_glide_match_hand_derivation() {
        let dist = 20_000.0;
        let plan = straight_in_plan(dist, 0.0);
        let raw = compute_raw(&plan);
        let g = 17.25;
        let elev = 10.0;

        // uniform sampling of a linear descent: mean altitude is the midpoint
        let expect_alt = elev + dist / g / 2.0;
        assert!((raw.mean_altitude_ft - expect_alt).abs() < 1e-9);

        // every point sits (dist - s)·sqrt(1 + 1/g²) from the threshold
        let slope = (1.0 + 1.0 / (g * g)).sqrt();
        assert!((raw.mean_distance_ft - dist / 2.0 * slope).abs() < 1e-9);

        assert_eq!(raw.mean_bank_over_height, 0.0);
        assert_eq!(raw.turn_count, 0.0);
        assert!((raw.path_length_ft - dist * slope).abs() < 1e-6);
        assert_eq!(raw.extended_final_ft, 0.0);
    }

    #[test]
    fn bank_weighting_is_floored_near_the_ground() {
        let model =
            PerformanceModel::new(17.25, 225.0, [DragConfig::new("dirty", 9.0 / 17.25).unwrap()])
                .unwrap();
        let bank = BankAngle::new(45.0).unwrap();
        let radius = model.turn_radius(bank).unwrap();
        let spiral_loss =
            std::f64::consts::TAU * radius / model.glide_ratio(bank, &model.clean_config());
        let dist = 20_000.0;
        let plan = straight_in_plan(dist, 2.0 * spiral_loss);
        assert_eq!(plan.spirals, 2);
        let raw = compute_raw(&plan);
        // the spiral descends to the field, so without the floor this mean
        // would blow up; with it no point exceeds bank/floor
        assert!(raw.mean_bank_over_height.is_finite());
        assert!(raw.mean_bank_over_height > 0.0);
        assert!(raw.mean_bank_over_height <= 45.0 / BANK_HEIGHT_FLOOR_FT);
        assert!(raw.turn_count >= 2.0);
    }

    #[test]
    fn two_value_columns_normalize_to_the_unit_ends() {
        assert_eq!(norm_column(&[10.0, 20.0], true), vec![0.0, 1.0]);
        assert_eq!(norm_column(&[10.0, 20.0], false), vec![1.0, 0.0]);
        assert_eq!(norm_column(&[7.0, 7.0], true), vec![1.0, 1.0]);
        assert_eq!(norm_column(&[7.0, 7.0], false), vec![1.0, 1.0]);
    }

    #[test]
    fn losing_end_is_positive_zero_in_both_directions() {
        // (x - max) / (min - max) is -0.0 at x == max; it must print as "0.00".
        for &higher in &[true, false] {
            for v in norm_column(&[10.0, 20.0], higher) {
                if v == 0.0 {
                    assert_eq!(v.to_bits(), 0.0_f64.to_bits());
                }
            }
        }
    }

    #[test]
    fn mid_values_interpolate_linearly() {
        let up = norm_column(&[0.0, 5.0, 10.0], true);
        assert_eq!(up, vec![0.0, 0.5, 1.0]);
        let down = norm_column(&[0.0, 5.0, 10.0], false);
        assert_eq!(down, vec![1.0, 0.5, 0.0]);
    }

    #[test]
    fn two_candidates_split_the_utility_into_sixths() {
        let short = straight_in_plan(20_000.0, 0.0);
        let long = straight_in_plan(40_000.0, 0.0);
        let set = rank(vec![short, long]);
        assert_eq!(set.len(), 2);
        // shorter approach: lower mean altitude loses that column, wins
        // distance and length; bank, turns, and final tie at 1
        let best = set.best().unwrap();
        assert_eq!(best.rank, 1);
        assert!((best.utility - 5.0 / 6.0).abs() < 1e-12);
        assert!((set.reports[1].utility - 4.0 / 6.0).abs() < 1e-12);
        for report in &set.reports {
            for v in [
                report.normalized.mean_altitude,
                report.normalized.mean_distance,
                report.normalized.mean_bank_over_height,
                report.normalized.turn_count,
                report.normalized.path_length,
                report.normalized.extended_final,
            ] {
                assert!(v == 0.0 || v == 1.0);
            }
        }
    }

    #[test]
    fn singleton_scores_unit_everything() {
        let set = rank(vec![straight_in_plan(20_000.0, 0.0)]);
        let only = set.best().unwrap();
        assert_eq!(only.rank, 1);
        assert_eq!(only.utility, 1.0);
        assert_eq!(only.normalized.mean_altitude, 1.0);
        assert_eq!(only.normalized.extended_final, 1.0);
    }

    #[test]
    fn exact_ties_rank_by_runway_id_then_bank() {
        let a = straight_in_plan(20_000.0, 0.0);
        let mut b = a.clone();
        b.runway.id = "AAA18".to_string();
        let set = rank(vec![a, b]);
        assert_eq!(set.reports[0].plan.runway.id, "AAA18");
        assert_eq!(set.reports[0].rank, 1);
        assert_eq!(set.reports[1].plan.runway.id, "TST18");
        assert_eq!(set.reports[1].rank, 2);
        assert_eq!(set.reports[0].utility, set.reports[1].utility);
    }

    #[test]
    fn empty_set_ranks_to_empty() {
        let set = rank(Vec::new());
        assert!(set.is_empty());
        assert!(set.best().is_none());
    }
}
