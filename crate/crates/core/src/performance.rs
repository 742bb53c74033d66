//! One-parameter damaged-aircraft model.
//!
//! A single baseline glide ratio `g0` (clean configuration, wings level, best
//! glide speed) generates the whole performance envelope: banked glide ratios
//! scale by cos(bank), drag configurations scale by a multiplier delta, and
//! turn radii follow from airspeed and bank. Refinement inverts the bank/drag
//! scaling to recover a new baseline from an observed in-flight ratio.

use std::collections::BTreeMap;

use thiserror::Error;

/// Gravitational constant with the knots-to-feet conversion folded in, so
/// `radius_ft = speed_kn² / (G · tan(bank))` comes out directly in feet.
pub const G_KN2_PER_FT: f64 = 11.29;

/// Name every drag table must contain, with multiplier exactly 1.
pub const CLEAN_CONFIG: &str = "clean";

/// Bank angles the trajectory planner considers.
pub const PLANNER_BANKS_DEG: [f64; 3] = [20.0, 30.0, 45.0];

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("turn radius is infinite at zero bank")]
    InfiniteRadius,
    #[error("bank angle {0}° outside [0°, 90°)")]
    BankOutOfRange(f64),
    #[error("invalid performance model: {0}")]
    InvalidModel(String),
}

/// Roll angle in a turn, restricted to [0°, 90°).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BankAngle {
    degrees: f64,
}

impl BankAngle {
    pub fn new(degrees: f64) -> Result<Self, ModelError> {
        if !(0.0..90.0).contains(&degrees) {
            return Err(ModelError::BankOutOfRange(degrees));
        }
        Ok(Self { degrees })
    }

    pub const fn level() -> Self {
        Self { degrees: 0.0 }
    }

    pub fn degrees(self) -> f64 {
        self.degrees
    }

    pub fn radians(self) -> f64 {
        self.degrees.to_radians()
    }

    pub fn is_level(self) -> bool {
        self.degrees == 0.0
    }
}

/// Named drag configuration with its glide-ratio multiplier delta in (0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct DragConfig {
    pub name: String,
    pub delta: f64,
}

impl DragConfig {
    pub fn new(name: impl Into<String>, delta: f64) -> Result<Self, ModelError> {
        if !(delta > 0.0 && delta <= 1.0) {
            return Err(ModelError::InvalidModel(format!("drag multiplier {delta} outside (0, 1]")));
        }
        Ok(Self { name: name.into(), delta })
    }

    pub fn clean() -> Self {
        Self { name: CLEAN_CONFIG.to_string(), delta: 1.0 }
    }
}

/// Immutable aircraft performance model; refinement builds a new value.
#[derive(Debug, Clone)]
pub struct PerformanceModel {
    g0: f64,
    best_glide_speed_kn: f64,
    drag_table: BTreeMap<String, f64>,
}

impl PerformanceModel {
    pub fn new(
        g0: f64,
        best_glide_speed_kn: f64,
        drags: impl IntoIterator<Item = DragConfig>,
    ) -> Result<Self, ModelError> {
        if !(g0 > 0.0) {
            return Err(ModelError::InvalidModel(format!("baseline glide ratio {g0} must be positive")));
        }
        if !(best_glide_speed_kn > 0.0) {
            return Err(ModelError::InvalidModel(format!(
                "best glide speed {best_glide_speed_kn} kn must be positive"
            )));
        }
        let mut drag_table = BTreeMap::new();
        drag_table.insert(CLEAN_CONFIG.to_string(), 1.0);
        for d in drags {
            if !(d.delta > 0.0 && d.delta <= 1.0) {
                return Err(ModelError::InvalidModel(format!(
                    "drag multiplier {} for {:?} outside (0, 1]",
                    d.delta, d.name
                )));
            }
            if d.name == CLEAN_CONFIG && d.delta != 1.0 {
                return Err(ModelError::InvalidModel(format!(
                    "clean configuration must have multiplier 1, got {}",
                    d.delta
                )));
            }
            drag_table.insert(d.name, d.delta);
        }
        Ok(Self { g0, best_glide_speed_kn, drag_table })
    }

    pub fn g0(&self) -> f64 {
        self.g0
    }

    pub fn best_glide_speed_kn(&self) -> f64 {
        self.best_glide_speed_kn
    }

    pub fn drag(&self, name: &str) -> Option<DragConfig> {
        self.drag_table.get(name).map(|&delta| DragConfig { name: name.to_string(), delta })
    }

    pub fn clean_config(&self) -> DragConfig {
        DragConfig::clean()
    }

    pub fn drag_names(&self) -> impl Iterator<Item = &str> {
        self.drag_table.keys().map(String::as_str)
    }

    /// Same model with a refined baseline glide ratio.
    pub fn with_g0(&self, g0: f64) -> Self {
        assert!(g0 > 0.0, "baseline glide ratio must stay positive");
        Self { g0, best_glide_speed_kn: self.best_glide_speed_kn, drag_table: self.drag_table.clone() }
    }

    /// Effective glide ratio at the given bank and drag configuration:
    /// `g0 · delta · cos(bank)`. Strictly decreasing in bank on [0°, 90°).
    pub fn glide_ratio(&self, bank: BankAngle, cfg: &DragConfig) -> f64 {
        self.g0 * cfg.delta * bank.radians().cos()
    }

    /// Turn radius at the model's best glide speed.
    pub fn turn_radius(&self, bank: BankAngle) -> Result<f64, ModelError> {
        turn_radius(bank, self.best_glide_speed_kn)
    }
}

/// Turn radius in feet for a coordinated turn: `v² / (G · tan(bank))`.
pub fn turn_radius(bank: BankAngle, speed_kn: f64) -> Result<f64, ModelError> {
    if bank.is_level() {
        return Err(ModelError::InfiniteRadius);
    }
    Ok(speed_kn * speed_kn / (G_KN2_PER_FT * bank.radians().tan()))
}

/// Recover the baseline glide ratio from a ratio observed at the given bank
/// and drag configuration. Inverse of [`PerformanceModel::glide_ratio`].
pub fn refine_baseline(observed: f64, bank: BankAngle, cfg: &DragConfig) -> f64 {
    observed / (cfg.delta * bank.radians().cos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bank(deg: f64) -> BankAngle {
        BankAngle::new(deg).unwrap()
    }

    fn a320() -> PerformanceModel {
        PerformanceModel::new(17.25, 225.0, [DragConfig::new("dirty", 9.0 / 17.25).unwrap()]).unwrap()
    }

    fn c172() -> PerformanceModel {
        PerformanceModel::new(9.0, 65.0, []).unwrap()
    }

    // Published A320 and C172 envelopes at banks 0/10/20/30/45/60. The
    // reference tables truncate ratios to hundredths and radii to whole feet;
    // raw values here are asserted within half a unit of the truncation.
    const TABLE_BANKS: [f64; 6] = [0.0, 10.0, 20.0, 30.0, 45.0, 60.0];

    #[test]
    fn a320_glide_ratios_match_published_table() {
        let m = a320();
        let clean = m.clean_config();
        let expect = [17.25, 16.98, 16.21, 14.93, 12.19, 8.62];
        for (&b, &want) in TABLE_BANKS.iter().zip(&expect) {
            let got = m.glide_ratio(bank(b), &clean);
            assert!((got - want).abs() < 0.011, "bank {b}: got {got}, want {want}");
        }
    }

    #[test]
    fn a320_turn_radii_match_published_table() {
        let m = a320();
        let expect = [25430.0, 12319.0, 7766.0, 4484.0, 2588.0];
        for (&b, &want) in TABLE_BANKS[1..].iter().zip(&expect) {
            let got = m.turn_radius(bank(b)).unwrap();
            assert!((got - want).abs() < 1.0 + 1e-9, "bank {b}: got {got}, want {want}");
        }
    }

    #[test]
    fn c172_envelope_matches_published_table() {
        let m = c172();
        let clean = m.clean_config();
        let ratios = [9.0, 8.86, 8.45, 7.79, 6.36, 4.5];
        let radii = [2122.0, 1028.0, 648.0, 374.0, 216.0];
        for (&b, &want) in TABLE_BANKS.iter().zip(&ratios) {
            let got = m.glide_ratio(bank(b), &clean);
            assert!((got - want).abs() < 0.011, "ratio at {b}: got {got}, want {want}");
        }
        for (&b, &want) in TABLE_BANKS[1..].iter().zip(&radii) {
            let got = m.turn_radius(bank(b)).unwrap();
            assert!((got - want).abs() < 1.0 + 1e-9, "radius at {b}: got {got}, want {want}");
        }
    }

    #[test]
    fn level_bank_has_no_finite_radius() {
        assert_eq!(turn_radius(BankAngle::level(), 225.0), Err(ModelError::InfiniteRadius));
    }

    #[test]
    fn level_clean_ratio_is_baseline_exactly() {
        let m = a320();
        assert_eq!(m.glide_ratio(BankAngle::level(), &m.clean_config()), 17.25);
    }

    #[test]
    fn refine_inverts_observed_bank_ratio() {
        let clean = DragConfig::clean();
        assert!((refine_baseline(12.19, bank(45.0), &clean) - 17.24).abs() < 0.02);
        assert_eq!(refine_baseline(14.0, BankAngle::level(), &clean), 14.0);
        assert!((refine_baseline(4.5, bank(60.0), &clean) - 9.0).abs() < 1e-9);
    }

    #[test]
    fn dirty_config_halves_the_a320_ratio_to_nine() {
        let m = a320();
        let dirty = m.drag("dirty").unwrap();
        assert!((m.glide_ratio(BankAngle::level(), &dirty) - 9.0).abs() < 1e-12);
    }

    #[test]
    fn model_validation_rejects_bad_inputs() {
        assert!(PerformanceModel::new(0.0, 225.0, []).is_err());
        assert!(PerformanceModel::new(17.25, 0.0, []).is_err());
        assert!(PerformanceModel::new(17.25, 225.0, [DragConfig { name: "x".into(), delta: 1.5 }]).is_err());
        assert!(PerformanceModel::new(17.25, 225.0, [DragConfig { name: "clean".into(), delta: 0.5 }]).is_err());
        assert!(BankAngle::new(90.0).is_err());
        assert!(BankAngle::new(-1.0).is_err());
        assert!(DragConfig::new("x", 0.0).is_err());
    }

    proptest! {
        #[test]
        fn refine_round_trips_glide_ratio(
            g0 in 1.0f64..60.0,
            bank_deg in 0.0f64..80.0,
            delta in 0.01f64..=1.0,
        ) {
            let m = PerformanceModel::new(g0, 100.0, []).unwrap();
            let cfg = DragConfig { name: "d".into(), delta };
            let b = bank(bank_deg);
            let back = refine_baseline(m.glide_ratio(b, &cfg), b, &cfg);
            prop_assert!((back - g0).abs() <= 1e-9 * g0);
        }

        #[test]
        fn radius_monotone_in_bank_and_speed(
            b1 in 1.0f64..89.0,
            b2 in 1.0f64..89.0,
            v1 in 40.0f64..400.0,
            v2 in 40.0f64..400.0,
        ) {
            prop_assume!(b1 < b2 && v1 < v2);
            prop_assert!(turn_radius(bank(b2), v1).unwrap() < turn_radius(bank(b1), v1).unwrap());
            prop_assert!(turn_radius(bank(b1), v1).unwrap() < turn_radius(bank(b1), v2).unwrap());
        }

        #[test]
        fn ratio_strictly_decreasing_in_bank(
            b1 in 0.0f64..89.0,
            b2 in 0.0f64..89.0,
        ) {
            prop_assume!(b1 < b2);
            let m = a320();
            let clean = m.clean_config();
            prop_assert!(m.glide_ratio(bank(b2), &clean) < m.glide_ratio(bank(b1), &clean));
        }
    }
}
