//! Subcommand implementations.
//!
//! Every command builds its whole stdout text and returns it, so runs are
//! reproducible byte for byte; commands that can succeed without finding
//! anything also return the process exit code.

use std::fmt::Write as _;
use std::path::Path;

use glidepath_core::estimation::{estimate_at, resample_1hz, EstimatorConfig};
use glidepath_core::metrics::{rank, CandidateSet};
use glidepath_core::performance::{refine_baseline, BankAngle};
use glidepath_core::planner::generate_all;
use glidepath_core::replay::{replay, LoopConfig, LoopEventKind};

use crate::export::{classification_str, trajectory_csv, trajectory_geojson};
use crate::profile::load_profile;
use crate::scenario::{load_scenario, Scenario};
use crate::CliError;

/// Bank angles printed in the performance tables.
pub const TABLE_BANKS_DEG: [f64; 6] = [0.0, 10.0, 20.0, 30.0, 45.0, 60.0];

/// Truncate (not round) to hundredths, the convention the stored tables use.
pub fn trunc2(x: f64) -> f64 {
    (x * 100.0).trunc() / 100.0
}

pub fn cmd_tables(data_dir: &Path, filter: Option<&str>) -> Result<String, CliError> {
    let dir = data_dir.join("aircraft");
    let entries = std::fs::read_dir(&dir).map_err(|e| CliError::io(&dir, e))?;
    let mut paths: Vec<_> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    paths.sort();

    let mut out = String::new();
    let mut shown = 0;
    for path in &paths {
        let profile = load_profile(path)?;
        if let Some(want) = filter {
            let stem = path.file_stem().unwrap_or_default().to_string_lossy();
            if !want.eq_ignore_ascii_case(&profile.name) && !want.eq_ignore_ascii_case(&stem) {
                continue;
            }
        }
        if shown > 0 {
            out.push('\n');
        }
        writeln!(
            out,
            "{} baseline {}:1 at {} kn",
            profile.name,
            profile.model.g0(),
            profile.model.best_glide_speed_kn()
        )
        .unwrap();
        writeln!(out, "bank\tglide\tradius_ft").unwrap();
        let clean = profile.model.clean_config();
        for &deg in &TABLE_BANKS_DEG {
            let bank = BankAngle::new(deg).expect("table banks are valid");
            let glide = trunc2(profile.model.glide_ratio(bank, &clean));
            let radius = match profile.model.turn_radius(bank) {
                Ok(r) => format!("{:.0}", r.trunc()),
                Err(_) => "inf".to_string(),
            };
            writeln!(out, "{deg:.0}°\t{glide:.2}\t{radius}").unwrap();
        }
        shown += 1;
    }
    if shown == 0 {
        return Err(CliError::Schema(match filter {
            Some(want) => format!("no aircraft profile matching {want:?}"),
            None => format!("no aircraft profiles in {}", dir.display()),
        }));
    }
    Ok(out)
}

fn plan_candidates(s: &Scenario) -> Result<CandidateSet, CliError> {
    let start = s.start.as_ref().ok_or_else(|| {
        CliError::Scenario("scenario has no start state (start_* keys)".to_string())
    })?;
    let plans = generate_all(
        start.position,
        start.heading_deg,
        &s.runways,
        &s.banks,
        &s.profile.model,
        &s.dirty,
        s.search_step_ft,
    );
    Ok(rank(plans))
}

fn rank_table(set: &CandidateSet) -> String {
    let mut out = String::from(
        "runway\tbank\tnorm_dist\tnorm_alt\tnorm_len\tnorm_turns\tnorm_bank_height\tnorm_final\tutility\trank\n",
    );
    for r in &set.reports {
        writeln!(
            out,
            "{}\t{:.0}\t{:.2}\t{:.2}\t{:.2}\t{:.2}\t{:.2}\t{:.2}\t{:.2}\t{}",
            r.plan.runway.id,
            r.plan.bank.degrees(),
            r.normalized.mean_distance,
            r.normalized.mean_altitude,
            r.normalized.path_length,
            r.normalized.turn_count,
            r.normalized.mean_bank_over_height,
            r.normalized.extended_final,
            r.utility,
            r.rank
        )
        .unwrap();
    }
    out
}

pub fn cmd_rank(data_dir: &Path, scenario_path: &Path) -> Result<(String, i32), CliError> {
    let s = load_scenario(scenario_path, data_dir)?;
    let set = plan_candidates(&s)?;
    if set.is_empty() {
        return Ok(("no reachable runway\n".to_string(), 2));
    }
    Ok((rank_table(&set), 0))
}

pub fn cmd_plan(
    data_dir: &Path,
    scenario_path: &Path,
    out_dir: &Path,
) -> Result<(String, i32), CliError> {
    let s = load_scenario(scenario_path, data_dir)?;
    let set = plan_candidates(&s)?;
    if set.is_empty() {
        return Ok(("no reachable runway\n".to_string(), 2));
    }
    let mut out = rank_table(&set);
    let best = set.best().expect("non-empty set");
    writeln!(
        out,
        "best: {} bank {:.0}° word {} spirals {} final {:.0} ft class {}",
        best.plan.runway.id,
        best.plan.bank.degrees(),
        best.plan.word,
        best.plan.spirals,
        best.plan.extended_final_ft,
        classification_str(best.plan.classification)
    )
    .unwrap();

    std::fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
    let csv_path = out_dir.join("trajectory.csv");
    std::fs::write(&csv_path, trajectory_csv(&best.plan)?).map_err(|e| CliError::io(&csv_path, e))?;
    let geojson_path = out_dir.join("trajectory.geojson");
    std::fs::write(&geojson_path, trajectory_geojson(&best.plan)?)
        .map_err(|e| CliError::io(&geojson_path, e))?;
    writeln!(out, "wrote {}", csv_path.display()).unwrap();
    writeln!(out, "wrote {}", geojson_path.display()).unwrap();
    Ok((out, 0))
}

pub fn cmd_estimate(data_dir: &Path, scenario_path: &Path) -> Result<String, CliError> {
    let s = load_scenario(scenario_path, data_dir)?;
    let stream = s
        .stream
        .as_ref()
        .ok_or_else(|| CliError::Scenario("scenario has no fdr recording".to_string()))?;
    let cfg = EstimatorConfig::default();
    let grid = resample_1hz(stream);

    let mut out = String::new();
    let mut windows = 0;
    for i in cfg.window_s..grid.len() {
        let Some(est) = estimate_at(&grid, i, &cfg) else {
            continue;
        };
        let drag =
            s.profile.model.drag(&est.drag).unwrap_or_else(|| s.profile.model.clean_config());
        let bank =
            BankAngle::new(est.mean_bank_deg.max(0.0)).unwrap_or_else(|_| BankAngle::level());
        let baseline = refine_baseline(est.glide_ratio, bank, &drag);
        writeln!(
            out,
            "window {:.0}..{:.0}s glide {:.2} bank {:.1}° drag {} baseline {:.2}",
            est.window_start_s, est.window_end_s, est.glide_ratio, est.mean_bank_deg, est.drag, baseline
        )
        .unwrap();
        windows += 1;
    }
    if windows == 0 {
        out.push_str("no stable window\n");
    }
    Ok(out)
}

pub fn cmd_replay(data_dir: &Path, scenario_path: &Path) -> Result<String, CliError> {
    let s = load_scenario(scenario_path, data_dir)?;
    let stream = s
        .stream
        .as_ref()
        .ok_or_else(|| CliError::Scenario("scenario has no fdr recording".to_string()))?;
    let cfg = LoopConfig {
        estimator: EstimatorConfig::default(),
        replan_threshold: s.replan_threshold,
        runways: s.runways.clone(),
        banks: s.banks.clone(),
        model: s.profile.model.clone(),
        dirty: s.dirty.clone(),
        search_step_ft: s.search_step_ft,
    };
    let (events, final_model) = replay(stream, &cfg);

    let mut out = String::new();
    for e in &events {
        match &e.kind {
            LoopEventKind::Estimate { glide_ratio } => {
                writeln!(out, "t=+{:.0}s estimate {glide_ratio:.2}", e.t_s).unwrap();
            }
            LoopEventKind::Refine { old_g0, new_g0 } => {
                writeln!(out, "t=+{:.0}s refine {old_g0:.2} -> {new_g0:.2}", e.t_s).unwrap();
            }
            LoopEventKind::Replan { candidates } => {
                writeln!(out, "t=+{:.0}s replan {} candidates", e.t_s, candidates.len()).unwrap();
                for r in &candidates.reports {
                    writeln!(
                        out,
                        "  {}. {} bank {:.0}° utility {:.2}",
                        r.rank,
                        r.plan.runway.id,
                        r.plan.bank.degrees(),
                        r.utility
                    )
                    .unwrap();
                }
            }
        }
    }
    writeln!(out, "final baseline {:.2}", final_model.g0()).unwrap();
    Ok(out)
}
