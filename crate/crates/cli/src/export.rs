//! Trajectory exports: point table CSV and GeoJSON LineString.

use glidepath_core::planner::{Classification, PlanResult};
use serde_json::json;

use crate::CliError;

pub fn classification_str(c: Classification) -> &'static str {
    match c {
        Classification::Low => "low",
        Classification::High => "high",
    }
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

/// Point table: one row per polyline point, georeferenced.
pub fn trajectory_csv(plan: &PlanResult) -> Result<String, CliError> {
    if plan.trajectory.points.is_empty() {
        return Err(CliError::EmptyTrajectory);
    }
    let mut out = String::from("point_index,lat_deg,lon_deg,alt_ft,bank_deg,segment\n");
    for (i, p) in plan.trajectory.points.iter().enumerate() {
        let geo = plan.frame.unproject(p.position);
        out.push_str(&format!(
            "{i},{:.6},{:.6},{:.1},{:.1},{}\n",
            geo.lat_deg,
            geo.lon_deg,
            geo.alt_ft,
            p.bank_deg,
            p.class.as_str()
        ));
    }
    Ok(out)
}

/// One-feature GeoJSON LineString with 3D coordinates.
pub fn trajectory_geojson(plan: &PlanResult) -> Result<String, CliError> {
    if plan.trajectory.points.is_empty() {
        return Err(CliError::EmptyTrajectory);
    }
    let coordinates: Vec<_> = plan
        .trajectory
        .points
        .iter()
        .map(|p| {
            let geo = plan.frame.unproject(p.position);
            json!([round6(geo.lon_deg), round6(geo.lat_deg), round6(geo.alt_ft)])
        })
        .collect();
    let doc = json!({
        "type": "FeatureCollection",
        "features": [{
            "type": "Feature",
            "geometry": { "type": "LineString", "coordinates": coordinates },
            "properties": {
                "runway": plan.runway.id,
                "bank_deg": plan.bank.degrees(),
                "path_word": plan.word.as_str(),
                "spirals": plan.spirals,
                "extended_final_ft": round6(plan.extended_final_ft),
                "classification": classification_str(plan.classification),
            },
        }],
    });
    Ok(format!("{doc:#}\n"))
}
