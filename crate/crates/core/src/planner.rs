//! Glide trajectory planning to a runway threshold.
//!
//! Classifies the problem by altitude. If the shortest Dubins glide reaches
//! the threshold at field elevation (within tolerance) the path is flown as
//! is. Excess altitude is dumped with full banked spirals at the approach
//! point and, for the fraction smaller than one spiral, by retargeting the
//! Dubins path at a point before the threshold and flying a straight final
//! approach from there in the dirty configuration, whose steeper descent
//! absorbs the remainder. The retarget distance is searched upward in fixed
//! steps until the altitude closes.

use thiserror::Error;

use crate::dubins::{
    lift_to_glide, make_extended_final, make_spirals, shortest_csc, Configuration2D, DubinsError,
    GlidePath, PathWord, Point2, Segment, SegmentClass, DEFAULT_DISCRETIZATION_FT,
};
use crate::geodesy::{GeodesyError, GeoPosition, LocalFrame};
use crate::performance::{BankAngle, DragConfig, ModelError, PerformanceModel, PLANNER_BANKS_DEG};

/// Default extended-final search increment.
pub const DEFAULT_SEARCH_STEP_FT: f64 = 50.0;

#[derive(Debug, Error, PartialEq)]
pub enum PlanError {
    #[error("runway not reachable from this state")]
    Unreachable,
    #[error(transparent)]
    NoCscPath(#[from] DubinsError),
    #[error("extended-final search exhausted its bound without closing the altitude")]
    SearchExhausted,
    #[error(transparent)]
    Frame(#[from] GeodesyError),
    #[error("invalid plan request: {0}")]
    InvalidRequest(String),
}

impl From<ModelError> for PlanError {
    fn from(e: ModelError) -> Self {
        PlanError::InvalidRequest(e.to_string())
    }
}

/// Landing runway described by its threshold and landing course.
#[derive(Debug, Clone, PartialEq)]
pub struct RunwaySpec {
    pub id: String,
    pub threshold: GeoPosition,
    pub true_heading_deg: f64,
    pub elevation_ft: f64,
}

impl RunwaySpec {
    pub fn new(id: impl Into<String>, threshold: GeoPosition, true_heading_deg: f64, elevation_ft: f64) -> Self {
        Self {
            id: id.into(),
            threshold,
            true_heading_deg: crate::dubins::norm_heading(true_heading_deg),
            elevation_ft,
        }
    }
}

/// One planning problem: aircraft state, target runway, bank, model.
#[derive(Debug, Clone)]
pub struct PlanRequest {
    pub start: GeoPosition,
    pub start_heading_deg: f64,
    pub runway: RunwaySpec,
    pub bank: BankAngle,
    pub model: PerformanceModel,
    pub search_step_ft: f64,
    pub dirty: DragConfig,
}

impl PlanRequest {
    pub fn new(
        start: GeoPosition,
        start_heading_deg: f64,
        runway: RunwaySpec,
        bank: BankAngle,
        model: PerformanceModel,
        dirty: DragConfig,
    ) -> Result<Self, PlanError> {
        if !PLANNER_BANKS_DEG.iter().any(|&b| (b - bank.degrees()).abs() < 1e-9) {
            return Err(PlanError::InvalidRequest(format!(
                "bank {}° is not one of the planner set {PLANNER_BANKS_DEG:?}",
                bank.degrees()
            )));
        }
        Ok(Self {
            start,
            start_heading_deg: crate::dubins::norm_heading(start_heading_deg),
            runway,
            bank,
            model,
            search_step_ft: DEFAULT_SEARCH_STEP_FT,
            dirty,
        })
    }

    pub fn with_search_step(mut self, step_ft: f64) -> Result<Self, PlanError> {
        if !(step_ft > 0.0) {
            return Err(PlanError::InvalidRequest(format!("search step {step_ft} must be positive")));
        }
        self.search_step_ft = step_ft;
        Ok(self)
    }
}

/// Altitude regime the plan resolved to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Low,
    High,
}

/// A flyable plan to one runway at one bank angle.
#[derive(Debug, Clone)]
pub struct PlanResult {
    pub runway: RunwaySpec,
    pub bank: BankAngle,
    pub word: PathWord,
    pub spirals: u32,
    pub extended_final_ft: f64,
    pub classification: Classification,
    pub trajectory: GlidePath,
    pub frame: LocalFrame,
}

// glide ratio a segment is flown at, before lift_to_glide annotates it
fn segment_glide(seg: &Segment, model: &PerformanceModel, bank: BankAngle, drag: &DragConfig) -> f64 {
    match seg.kind.class() {
        SegmentClass::Turn | SegmentClass::Spiral => model.glide_ratio(bank, drag),
        SegmentClass::Straight => model.glide_ratio(BankAngle::level(), drag),
        SegmentClass::ExtendedFinal => model.glide_ratio(BankAngle::level(), &seg.drag),
    }
}

fn chain_altitude_loss(segs: &[Segment], model: &PerformanceModel, bank: BankAngle, drag: &DragConfig) -> f64 {
    segs.iter().map(|s| s.kind.horizontal_length() / segment_glide(s, model, bank, drag)).sum()
}

/// Plan one candidate trajectory.
pub fn generate(req: &PlanRequest) -> Result<PlanResult, PlanError> {
    let frame = LocalFrame::new(req.runway.threshold);
    let start_local = frame.project(req.start)?;
    let start_cfg = Configuration2D::new(start_local.x_ft, start_local.y_ft, req.start_heading_deg);
    let threshold_cfg = Configuration2D::new(0.0, 0.0, req.runway.true_heading_deg);

    let clean = req.model.clean_config();
    let radius = req.model.turn_radius(req.bank)?;
    let g_clean_banked = req.model.glide_ratio(req.bank, &clean);
    let g_dirty_level = req.model.glide_ratio(BankAngle::level(), &req.dirty);
    let tolerance = req.search_step_ft / (2.0 * g_dirty_level);
    let spiral_loss = std::f64::consts::TAU * radius / g_clean_banked;
    let start_alt = req.start.alt_ft;
    let elevation = req.runway.elevation_ft;

    let finish = |segs: Vec<Segment>, word, spirals, extended_final_ft, classification| {
        let trajectory = lift_to_glide(
            segs,
            &req.model,
            req.bank,
            &clean,
            start_alt,
            DEFAULT_DISCRETIZATION_FT,
        );
        PlanResult {
            runway: req.runway.clone(),
            bank: req.bank,
            word,
            spirals,
            extended_final_ft,
            classification,
            trajectory,
            frame: frame.clone(),
        }
    };

    let (word, dubins) = shortest_csc(start_cfg, threshold_cfg, radius)?;
    let excess = start_alt - chain_altitude_loss(&dubins, &req.model, req.bank, &clean) - elevation;

    if excess < -tolerance {
        return Err(PlanError::Unreachable);
    }
    if excess.abs() <= tolerance {
        return Ok(finish(dubins, word, 0, 0.0, Classification::Low));
    }

    let spiral_dir = word.turns().1;
    let spirals = (excess / spiral_loss).floor() as u32;
    if excess - spirals as f64 * spiral_loss <= tolerance {
        let mut segs = dubins;
        segs.push(make_spirals(threshold_cfg, radius, spiral_dir, spirals));
        return Ok(finish(segs, word, spirals, 0.0, Classification::High));
    }

    // search the extended-final length; its dirty-glide descent absorbs the
    // sub-spiral remainder
    let extended_max = spiral_loss * g_dirty_level;
    let reciprocal = crate::dubins::heading_unit(req.runway.true_heading_deg) * -1.0;
    for k in 1.. {
        let extended = k as f64 * req.search_step_ft;
        if extended >= extended_max {
            break;
        }
        let approach_point = Point2::new(reciprocal.x * extended, reciprocal.y * extended);
        let approach_cfg =
            Configuration2D { position: approach_point, heading_deg: req.runway.true_heading_deg };
        let Ok((word_e, dubins_e)) = shortest_csc(start_cfg, approach_cfg, radius) else {
            continue;
        };
        let excess_e =
            start_alt - chain_altitude_loss(&dubins_e, &req.model, req.bank, &clean) - elevation;
        if excess_e < -tolerance {
            continue;
        }
        let n = (excess_e / spiral_loss).floor().max(0.0) as u32;

        let mut segs = dubins_e;
        if n >= 1 {
            segs.push(make_spirals(approach_cfg, radius, word_e.turns().1, n));
        }
        segs.push(make_extended_final(approach_point, Point2::new(0.0, 0.0), req.dirty.clone()));
        let end_alt = start_alt - chain_altitude_loss(&segs, &req.model, req.bank, &clean);
        if (end_alt - elevation).abs() <= tolerance {
            return Ok(finish(segs, word_e, n, extended, Classification::High));
        }
    }
    Err(PlanError::SearchExhausted)
}

/// Plan the full runway × bank product, keeping only flyable candidates.
///
/// Results come back ordered by runway id, then bank ascending.
#[allow(clippy::too_many_arguments)]
pub fn generate_all(
    start: GeoPosition,
    start_heading_deg: f64,
    runways: &[RunwaySpec],
    banks: &[BankAngle],
    model: &PerformanceModel,
    dirty: &DragConfig,
    search_step_ft: f64,
) -> Vec<PlanResult> {
    let mut runways: Vec<&RunwaySpec> = runways.iter().collect();
    runways.sort_by(|a, b| a.id.cmp(&b.id));
    let mut banks: Vec<BankAngle> = banks.to_vec();
    banks.sort_by(|a, b| a.degrees().partial_cmp(&b.degrees()).unwrap());

    let mut out = Vec::new();
    for runway in runways {
        for &bank in &banks {
            let req = match PlanRequest::new(
                start,
                start_heading_deg,
                runway.clone(),
                bank,
                model.clone(),
                dirty.clone(),
            )
            .and_then(|r| r.with_search_step(search_step_ft))
            {
                Ok(req) => req,
                Err(_) => continue,
            };
            if let Ok(result) = generate(&req) {
                out.push(result);
            }
        }
    }
    out
}
