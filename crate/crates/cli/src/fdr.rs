//! Flight-data-recorder CSV ingestion.
//!
//! The recorder has no bank or configuration channel, so samples come back
//! wings-level in the clean configuration; time accepts the recorder's
//! symbolic `t` / `t+K` form as well as absolute seconds.

use std::path::Path;

use glidepath_core::estimation::SensorSample;

use crate::CliError;

/// Column names, exactly as the recorder writes them.
pub const FDR_HEADERS: [&str; 7] = [
    "Time Delay",
    "Latitude(decimal)",
    "Longitude(decimal)",
    "Pressure Altitude(feet)",
    "true altitude(feet)",
    "magnetic heading(degrees)",
    "Airspeed(kts)",
];

fn parse_time(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if s == "t" {
        return Ok(0.0);
    }
    if let Some(rest) = s.strip_prefix("t+") {
        return rest.trim().parse::<f64>().map_err(|_| format!("bad time offset {s:?}"));
    }
    s.parse::<f64>().map_err(|_| format!("bad time {s:?}"))
}

pub fn load_fdr(path: &Path) -> Result<Vec<SensorSample>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::parse(path, e.to_string()))?;

    let headers = reader.headers().map_err(|e| CliError::parse(path, e.to_string()))?.clone();
    let mut idx = [0usize; 7];
    for (k, name) in FDR_HEADERS.iter().enumerate() {
        idx[k] = headers.iter().position(|h| h == *name).ok_or_else(|| {
            CliError::Schema(format!("{}: missing column {name:?}", path.display()))
        })?;
    }

    let mut rows = Vec::new();
    for (recno, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::parse(path, e.to_string()))?;
        let row = recno + 2; // 1-based, after the header line
        let cell = |k: usize| record.get(idx[k]).unwrap_or("");
        let value = |k: usize| -> Result<f64, CliError> {
            cell(k).parse::<f64>().map_err(|_| CliError::Value {
                path: path.display().to_string(),
                row,
                column: FDR_HEADERS[k].to_string(),
                message: format!("not a number: {:?}", cell(k)),
            })
        };
        let t_s = parse_time(cell(0)).map_err(|message| CliError::Value {
            path: path.display().to_string(),
            row,
            column: FDR_HEADERS[0].to_string(),
            message,
        })?;
        rows.push(SensorSample {
            t_s,
            lat_deg: value(1)?,
            lon_deg: value(2)?,
            pressure_alt_ft: value(3)?,
            true_alt_ft: value(4)?,
            heading_deg: value(5)?,
            airspeed_kn: value(6)?,
            bank_deg: 0.0,
            drag: "clean".to_string(),
        });
    }
    if rows.is_empty() {
        return Err(CliError::Schema(format!("{}: no data rows", path.display())));
    }
    if rows.windows(2).any(|w| w[1].t_s < w[0].t_s) {
        eprintln!("warning: {} rows out of order, sorting by time", path.display());
        rows.sort_by(|a, b| a.t_s.total_cmp(&b.t_s));
    }
    Ok(rows)
}
