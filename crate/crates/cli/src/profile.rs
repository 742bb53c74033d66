//! Aircraft performance profiles from TOML.

use std::collections::BTreeMap;
use std::path::Path;

use glidepath_core::performance::{DragConfig, PerformanceModel};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileFile {
    name: String,
    baseline_glide_ratio: f64,
    best_glide_speed_kn: f64,
    #[serde(default)]
    drags: BTreeMap<String, f64>,
}

/// A named aircraft with its performance model.
#[derive(Debug, Clone)]
pub struct Profile {
    pub name: String,
    pub model: PerformanceModel,
}

pub fn load_profile(path: &Path) -> Result<Profile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let file: ProfileFile =
        toml::from_str(&text).map_err(|e| CliError::parse(path, e.to_string()))?;
    let drags = file
        .drags
        .into_iter()
        .map(|(name, delta)| DragConfig::new(name, delta))
        .collect::<Result<Vec<_>, _>>()?;
    let model =
        PerformanceModel::new(file.baseline_glide_ratio, file.best_glide_speed_kn, drags)?;
    Ok(Profile { name: file.name, model })
}
