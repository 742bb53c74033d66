//! Online glide-ratio estimation from recorded sensor streams.
//!
//! The stream is resampled to 1 Hz, then each sample gets an instantaneous
//! glide ratio: distance covered over the last few seconds divided by the
//! pressure-altitude drop across them. A window is stable when pressure
//! altitude never rises, the instantaneous ratios agree tightly, and the
//! bank angle stays nearly constant; the estimate is the window's mean
//! ratio, which the caller projects back to a baseline via the performance
//! model.

use std::collections::BTreeMap;

use crate::dubins::GlidePath;
use crate::geodesy::{LocalFrame, LocalPoint};
use crate::performance::PerformanceModel;

/// International knot in feet per second.
pub const KNOTS_TO_FPS: f64 = 1.68781;

/// One fused sensor record.
#[derive(Debug, Clone, PartialEq)]
pub struct SensorSample {
    pub t_s: f64,
    pub lat_deg: f64,
    pub lon_deg: f64,
    pub pressure_alt_ft: f64,
    pub true_alt_ft: f64,
    pub heading_deg: f64,
    pub airspeed_kn: f64,
    pub bank_deg: f64,
    pub drag: String,
}

/// Stability thresholds and window geometry, in seconds on the 1 Hz grid.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimatorConfig {
    /// Seconds of travel summed into each instantaneous ratio.
    pub lookback_s: usize,
    /// Window length in seconds (the window holds `window_s + 1` samples).
    pub window_s: usize,
    /// Maximum population standard deviation of the ratios in a stable window.
    pub std_threshold: f64,
    /// Maximum bank spread within a stable window.
    pub bank_range_deg: f64,
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        Self { lookback_s: 4, window_s: 10, std_threshold: 5.0, bank_range_deg: 5.0 }
    }
}

/// Result of a stable window: what the aircraft actually achieved.
#[derive(Debug, Clone, PartialEq)]
pub struct GlideEstimate {
    /// Mean instantaneous glide ratio over the window.
    pub glide_ratio: f64,
    /// Mean bank over the window, for projecting back to a level baseline.
    pub mean_bank_deg: f64,
    /// Most frequent drag configuration name in the window.
    pub drag: String,
    pub window_start_s: f64,
    pub window_end_s: f64,
}

// shortest-path angular interpolation, result normalized to [0, 360)
fn lerp_heading(h0: f64, h1: f64, f: f64) -> f64 {
    let delta = (h1 - h0 + 540.0).rem_euclid(360.0) - 180.0;
    crate::dubins::norm_heading(h0 + f * delta)
}

/// Resample an ordered stream to a 1 Hz grid starting at the first sample.
///
/// Scalars interpolate linearly, headings along the shortest arc, and the
/// drag label carries over from the earlier sample.
pub fn resample_1hz(samples: &[SensorSample]) -> Vec<SensorSample> {
    if samples.len() < 2 {
        return samples.to_vec();
    }
    let t0 = samples[0].t_s;
    let t_end = samples[samples.len() - 1].t_s;
    let steps = (t_end - t0).floor() as usize;
    let mut out = Vec::with_capacity(steps + 1);
    let mut right = 1;
    for k in 0..=steps {
        let t = t0 + k as f64;
        while right + 1 < samples.len() && samples[right].t_s < t {
            right += 1;
        }
        let (a, b) = (&samples[right - 1], &samples[right]);
        let span = b.t_s - a.t_s;
        let f = if span > 0.0 { ((t - a.t_s) / span).clamp(0.0, 1.0) } else { 0.0 };
        let lerp = |x0: f64, x1: f64| x0 + f * (x1 - x0);
        out.push(SensorSample {
            t_s: t,
            lat_deg: lerp(a.lat_deg, b.lat_deg),
            lon_deg: lerp(a.lon_deg, b.lon_deg),
            pressure_alt_ft: lerp(a.pressure_alt_ft, b.pressure_alt_ft),
            true_alt_ft: lerp(a.true_alt_ft, b.true_alt_ft),
            heading_deg: lerp_heading(a.heading_deg, b.heading_deg, f),
            airspeed_kn: lerp(a.airspeed_kn, b.airspeed_kn),
            bank_deg: lerp(a.bank_deg, b.bank_deg),
            // the label holds from a row until the next row arrives
            drag: if t >= b.t_s - 1e-9 { b.drag.clone() } else { a.drag.clone() },
        });
    }
    out
}

/// Instantaneous glide ratio at index `i` of a 1 Hz stream: feet travelled
/// over the trailing `lookback_s` seconds divided by the pressure-altitude
/// drop across them. `None` while climbing, level, or too early.
pub fn instant_glide(samples: &[SensorSample], i: usize, lookback_s: usize) -> Option<f64> {
    if i < lookback_s || lookback_s == 0 {
        return None;
    }
    let drop = samples[i - lookback_s].pressure_alt_ft - samples[i].pressure_alt_ft;
    if drop <= 0.0 {
        return None;
    }
    let travelled: f64 =
        samples[i - lookback_s + 1..=i].iter().map(|s| s.airspeed_kn).sum::<f64>() * KNOTS_TO_FPS;
    Some(travelled / drop)
}

fn population_std(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n).sqrt()
}

/// Evaluate the window ending at index `i` of a 1 Hz stream.
///
/// Returns the estimate when the window is stable: pressure altitude
/// non-increasing, at least one ratio, ratio spread and bank spread within
/// the configured thresholds.
pub fn estimate_at(samples: &[SensorSample], i: usize, cfg: &EstimatorConfig) -> Option<GlideEstimate> {
    if i < cfg.window_s || i >= samples.len() {
        return None;
    }
    let window = &samples[i - cfg.window_s..=i];
    debug_assert!(window.windows(2).all(|w| (w[1].t_s - w[0].t_s - 1.0).abs() < 1e-6));

    if window.windows(2).any(|w| w[1].pressure_alt_ft > w[0].pressure_alt_ft + 1e-9) {
        return None;
    }
    let bank_min = window.iter().map(|s| s.bank_deg).fold(f64::INFINITY, f64::min);
    let bank_max = window.iter().map(|s| s.bank_deg).fold(f64::NEG_INFINITY, f64::max);
    if bank_max - bank_min > cfg.bank_range_deg {
        return None;
    }
    let ratios: Vec<f64> =
        (i - cfg.window_s..=i).filter_map(|j| instant_glide(samples, j, cfg.lookback_s)).collect();
    if ratios.is_empty() || population_std(&ratios) > cfg.std_threshold {
        return None;
    }

    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for s in window {
        *counts.entry(s.drag.as_str()).or_default() += 1;
    }
    let mut modal = ("", 0);
    for (name, count) in counts {
        if count > modal.1 {
            modal = (name, count);
        }
    }

    Some(GlideEstimate {
        glide_ratio: ratios.iter().sum::<f64>() / ratios.len() as f64,
        mean_bank_deg: window.iter().map(|s| s.bank_deg).sum::<f64>() / window.len() as f64,
        drag: modal.0.to_string(),
        window_start_s: window[0].t_s,
        window_end_s: window[window.len() - 1].t_s,
    })
}

/// Latest stable-window estimate in the stream, if any.
///
/// Resamples internally; input must be ordered by time.
pub fn estimate(samples: &[SensorSample], cfg: &EstimatorConfig) -> Option<GlideEstimate> {
    let grid = resample_1hz(samples);
    if grid.len() <= cfg.window_s {
        return None;
    }
    (cfg.window_s..grid.len()).rev().find_map(|i| estimate_at(&grid, i, cfg))
}

/// Fly a planned trajectory at the model's best-glide speed and emit the
/// 1 Hz sensor stream a recorder would have captured (pressure altitude
/// equals true altitude; headings and positions are exact).
pub fn synthesize_stream(
    path: &GlidePath,
    model: &PerformanceModel,
    frame: &LocalFrame,
    t0_s: f64,
) -> Vec<SensorSample> {
    let speed_kn = model.best_glide_speed_kn();
    let step_ft = speed_kn * KNOTS_TO_FPS;

    // per-segment entry altitude and glide ratio, in flight order
    let mut legs = Vec::with_capacity(path.segments.len());
    let mut alt = path.start_alt_ft;
    let mut total_len = 0.0;
    for seg in &path.segments {
        let g = model.glide_ratio(seg.bank, &seg.drag);
        let len = seg.kind.horizontal_length();
        legs.push((seg, alt, g, total_len));
        alt -= len / g;
        total_len += len;
    }

    let mut out = Vec::new();
    for k in 0.. {
        let s = k as f64 * step_ft;
        if s > total_len || legs.is_empty() {
            break;
        }
        let (seg, entry_alt, g, seg_start) = *legs
            .iter()
            .rev()
            .find(|(_, _, _, seg_start)| s >= *seg_start)
            .expect("s is within the path");
        let local = seg.kind.config_at((s - seg_start).min(seg.kind.horizontal_length()));
        let z = entry_alt - (s - seg_start) / g;
        let geo = frame.unproject(LocalPoint { x_ft: local.position.x, y_ft: local.position.y, z_ft: z });
        out.push(SensorSample {
            t_s: t0_s + k as f64,
            lat_deg: geo.lat_deg,
            lon_deg: geo.lon_deg,
            pressure_alt_ft: z,
            true_alt_ft: z,
            heading_deg: local.heading_deg,
            airspeed_kn: speed_kn,
            bank_deg: seg.bank.degrees(),
            drag: seg.drag.name.clone(),
        });
    }
    out
}
