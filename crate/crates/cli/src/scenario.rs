//! Scenario files: everything one command run needs, in one TOML.

use std::path::{Path, PathBuf};

use glidepath_core::estimation::SensorSample;
use glidepath_core::geodesy::GeoPosition;
use glidepath_core::performance::{BankAngle, DragConfig, PerformanceModel, PLANNER_BANKS_DEG};
use glidepath_core::planner::RunwaySpec;
use serde::Deserialize;

use crate::fdr::load_fdr;
use crate::profile::{load_profile, Profile};
use crate::runways::load_runways;
use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    aircraft: String,
    runway_db: String,
    runways: Option<Vec<String>>,
    banks_deg: Vec<f64>,
    start_lat_deg: Option<f64>,
    start_lon_deg: Option<f64>,
    start_alt_ft: Option<f64>,
    start_heading_deg: Option<f64>,
    fdr: Option<String>,
    g0_override: Option<f64>,
    dirty_ratio_override: Option<f64>,
    dirty_config: Option<String>,
    search_step_ft: Option<f64>,
    replan_threshold: Option<f64>,
}

/// Aircraft state a plan starts from.
#[derive(Debug, Clone, Copy)]
pub struct StartState {
    pub position: GeoPosition,
    pub heading_deg: f64,
}

/// A fully resolved scenario: profiles, runways, and streams loaded.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub profile: Profile,
    pub dirty: DragConfig,
    pub runways: Vec<RunwaySpec>,
    pub banks: Vec<BankAngle>,
    pub start: Option<StartState>,
    pub stream: Option<Vec<SensorSample>>,
    pub search_step_ft: f64,
    pub replan_threshold: f64,
}

fn rebuild_with_delta(
    model: &PerformanceModel,
    name: &str,
    delta: f64,
) -> Result<PerformanceModel, CliError> {
    let drags = model
        .drag_names()
        .filter(|&n| n != "clean")
        .map(|n| {
            let d = if n == name { delta } else { model.drag(n).expect("listed name").delta };
            DragConfig::new(n, d)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PerformanceModel::new(model.g0(), model.best_glide_speed_kn(), drags)?)
}

/// Resolve `path` against the data directory when it does not exist as given.
fn resolve(path: &str, data_dir: &Path) -> PathBuf {
    let direct = PathBuf::from(path);
    if direct.exists() {
        direct
    } else {
        data_dir.join(path)
    }
}

pub fn load_scenario(path: &Path, data_dir: &Path) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let file: ScenarioFile =
        toml::from_str(&text).map_err(|e| CliError::parse(path, e.to_string()))?;

    let profile_path = data_dir.join("aircraft").join(format!("{}.toml", file.aircraft));
    let mut profile = load_profile(&profile_path)?;

    if let Some(g0) = file.g0_override {
        if !(g0 > 0.0) {
            return Err(CliError::Scenario(format!("g0_override {g0} must be positive")));
        }
        profile.model = profile.model.with_g0(g0);
    }

    let dirty_name = file.dirty_config.as_deref().unwrap_or("dirty");
    if profile.model.drag(dirty_name).is_none() {
        return Err(CliError::Scenario(format!(
            "profile {:?} has no drag configuration {dirty_name:?}",
            profile.name
        )));
    }
    if let Some(ratio) = file.dirty_ratio_override {
        let delta = ratio / profile.model.g0();
        if !(delta > 0.0 && delta <= 1.0) {
            return Err(CliError::Scenario(format!(
                "dirty_ratio_override {ratio} is outside (0, {}]",
                profile.model.g0()
            )));
        }
        profile.model = rebuild_with_delta(&profile.model, dirty_name, delta)?;
    }
    let dirty = profile.model.drag(dirty_name).expect("checked above");

    let mut runways = load_runways(&resolve(&file.runway_db, data_dir))?;
    if let Some(filter) = &file.runways {
        for id in filter {
            if !runways.iter().any(|r| &r.id == id) {
                return Err(CliError::Scenario(format!("unknown runway id {id:?}")));
            }
        }
        runways.retain(|r| filter.contains(&r.id));
    }

    if file.banks_deg.is_empty() {
        return Err(CliError::Scenario("banks_deg must not be empty".to_string()));
    }
    let mut banks = Vec::new();
    for &deg in &file.banks_deg {
        if !PLANNER_BANKS_DEG.iter().any(|&b| (b - deg).abs() < 1e-9) {
            return Err(CliError::Scenario(format!(
                "bank {deg}° is not one of the supported set {PLANNER_BANKS_DEG:?}"
            )));
        }
        let bank = BankAngle::new(deg)?;
        if !banks.contains(&bank) {
            banks.push(bank);
        }
    }
    banks.sort_by(|a, b| a.degrees().total_cmp(&b.degrees()));

    let start_parts = [
        file.start_lat_deg,
        file.start_lon_deg,
        file.start_alt_ft,
        file.start_heading_deg,
    ];
    let start = match start_parts.iter().filter(|p| p.is_some()).count() {
        0 => None,
        4 => Some(StartState {
            position: GeoPosition::new(
                file.start_lat_deg.unwrap(),
                file.start_lon_deg.unwrap(),
                file.start_alt_ft.unwrap(),
            ),
            heading_deg: file.start_heading_deg.unwrap(),
        }),
        _ => {
            return Err(CliError::Scenario(
                "start_lat_deg, start_lon_deg, start_alt_ft, start_heading_deg must be given together"
                    .to_string(),
            ))
        }
    };

    let stream = match &file.fdr {
        Some(rel) => Some(load_fdr(&resolve(rel, data_dir))?),
        None => None,
    };

    let search_step_ft = file.search_step_ft.unwrap_or(50.0);
    if !(search_step_ft > 0.0) {
        return Err(CliError::Scenario(format!("search_step_ft {search_step_ft} must be positive")));
    }
    let replan_threshold = file.replan_threshold.unwrap_or(0.05);
    if !(replan_threshold > 0.0) {
        return Err(CliError::Scenario(format!(
            "replan_threshold {replan_threshold} must be positive"
        )));
    }

    Ok(Scenario {
        profile,
        dirty,
        runways,
        banks,
        start,
        stream,
        search_step_ft,
        replan_threshold,
    })
}
