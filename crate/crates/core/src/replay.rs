//! Closed-loop replay: estimate, refine, replan.
//!
//! Drives the estimator over a recorded stream on the 1 Hz grid. Every
//! stable window yields an estimate; when the baseline implied by an
//! estimate drifts past the configured fraction of the current model, the
//! model is refined and all candidate trajectories are replanned from the
//! aircraft state at that instant. Refinement is debounced so the windows
//! feeding successive refinements never overlap.

use crate::estimation::{estimate_at, resample_1hz, EstimatorConfig, SensorSample};
use crate::geodesy::GeoPosition;
use crate::metrics::{rank, CandidateSet};
use crate::performance::{refine_baseline, BankAngle, DragConfig, PerformanceModel};
use crate::planner::{generate_all, RunwaySpec};

/// Everything the loop needs besides the stream itself.
#[derive(Debug, Clone)]
pub struct LoopConfig {
    pub estimator: EstimatorConfig,
    /// Relative baseline drift that triggers a refinement.
    pub replan_threshold: f64,
    pub runways: Vec<RunwaySpec>,
    pub banks: Vec<BankAngle>,
    /// Model the loop starts from; refinement replaces its baseline.
    pub model: PerformanceModel,
    pub dirty: DragConfig,
    pub search_step_ft: f64,
}

/// What happened at one instant of the replay.
#[derive(Debug, Clone)]
pub struct LoopEvent {
    pub t_s: f64,
    pub kind: LoopEventKind,
}

#[derive(Debug, Clone)]
pub enum LoopEventKind {
    /// A stable window ended here with this observed glide ratio.
    Estimate { glide_ratio: f64 },
    /// The observed ratio implied a new baseline far enough from the old.
    Refine { old_g0: f64, new_g0: f64 },
    /// Candidates replanned from the aircraft state at this instant.
    Replan { candidates: CandidateSet },
}

/// Run the loop over a recorded stream. Returns every event in time order
/// plus the model as refined by the end.
pub fn replay(samples: &[SensorSample], cfg: &LoopConfig) -> (Vec<LoopEvent>, PerformanceModel) {
    let grid = resample_1hz(samples);
    let mut model = cfg.model.clone();
    let mut events = Vec::new();
    let mut last_refine_t = f64::NEG_INFINITY;

    for i in cfg.estimator.window_s..grid.len() {
        let Some(est) = estimate_at(&grid, i, &cfg.estimator) else {
            continue;
        };
        let t = est.window_end_s;
        events.push(LoopEvent { t_s: t, kind: LoopEventKind::Estimate { glide_ratio: est.glide_ratio } });

        let drag = model.drag(&est.drag).unwrap_or_else(|| model.clean_config());
        let bank = match BankAngle::new(est.mean_bank_deg.max(0.0)) {
            Ok(b) => b,
            Err(_) => continue,
        };
        let new_g0 = refine_baseline(est.glide_ratio, bank, &drag);
        let drift = (new_g0 - model.g0()).abs() / model.g0();
        let windows_disjoint = t - cfg.estimator.window_s as f64 > last_refine_t;
        if drift > cfg.replan_threshold && windows_disjoint {
            events.push(LoopEvent {
                t_s: t,
                kind: LoopEventKind::Refine { old_g0: model.g0(), new_g0 },
            });
            model = model.with_g0(new_g0);
            last_refine_t = t;

            let state = &grid[i];
            let start = GeoPosition::new(state.lat_deg, state.lon_deg, state.true_alt_ft);
            let plans = generate_all(
                start,
                state.heading_deg,
                &cfg.runways,
                &cfg.banks,
                &model,
                &cfg.dirty,
                cfg.search_step_ft,
            );
            events.push(LoopEvent { t_s: t, kind: LoopEventKind::Replan { candidates: rank(plans) } });
        }
    }
    (events, model)
}
