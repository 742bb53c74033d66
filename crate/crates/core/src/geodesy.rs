//! Geographic coordinates and a local flat-earth Cartesian frame in feet.
//!
//! Planning happens in a `LocalFrame` centered on the target runway threshold,
//! so the runway heading is an exact frame constant. The projection is
//! equirectangular on a spherical earth; altitudes pass through unprojected.

use thiserror::Error;

/// Feet per degree of latitude (spherical earth, 60.04 NM per degree).
pub const FEET_PER_DEGREE_LAT: f64 = 364_000.0;

/// Half-width of the latitude band around the frame origin where the
/// flat-earth approximation is accepted.
pub const FRAME_VALIDITY_DEG: f64 = 2.0;

#[derive(Debug, Error, PartialEq)]
pub enum GeodesyError {
    #[error("latitude {lat}° is outside the ±{FRAME_VALIDITY_DEG}° flat-earth band around origin latitude {origin_lat}°")]
    OutOfFrameRange { lat: f64, origin_lat: f64 },
}

/// WGS-84 geographic position, altitude in feet above MSL.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeoPosition {
    pub lat_deg: f64,
    pub lon_deg: f64,
    pub alt_ft: f64,
}

impl GeoPosition {
    pub fn new(lat_deg: f64, lon_deg: f64, alt_ft: f64) -> Self {
        debug_assert!((-90.0..=90.0).contains(&lat_deg), "latitude out of range");
        debug_assert!((-180.0..=180.0).contains(&lon_deg), "longitude out of range");
        Self { lat_deg, lon_deg, alt_ft }
    }
}

/// Point in a local frame: x east, y north, z altitude above MSL, all feet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalPoint {
    pub x_ft: f64,
    pub y_ft: f64,
    pub z_ft: f64,
}

impl LocalPoint {
    pub fn new(x_ft: f64, y_ft: f64, z_ft: f64) -> Self {
        Self { x_ft, y_ft, z_ft }
    }
}

/// Flat-earth projection frame fixed at one origin for a planning problem.
#[derive(Debug, Clone)]
pub struct LocalFrame {
    origin: GeoPosition,
    cos_origin_lat: f64,
}

impl LocalFrame {
    pub fn new(origin: GeoPosition) -> Self {
        let cos_origin_lat = origin.lat_deg.to_radians().cos();
        Self { origin, cos_origin_lat }
    }

    pub fn origin(&self) -> GeoPosition {
        self.origin
    }

    /// Equirectangular projection into the frame.
    pub fn project(&self, p: GeoPosition) -> Result<LocalPoint, GeodesyError> {
        if (p.lat_deg - self.origin.lat_deg).abs() >= FRAME_VALIDITY_DEG {
            return Err(GeodesyError::OutOfFrameRange { lat: p.lat_deg, origin_lat: self.origin.lat_deg });
        }
        Ok(LocalPoint {
            x_ft: (p.lon_deg - self.origin.lon_deg) * self.cos_origin_lat * FEET_PER_DEGREE_LAT,
            y_ft: (p.lat_deg - self.origin.lat_deg) * FEET_PER_DEGREE_LAT,
            z_ft: p.alt_ft,
        })
    }

    /// Exact inverse of [`LocalFrame::project`].
    pub fn unproject(&self, p: LocalPoint) -> GeoPosition {
        GeoPosition {
            lat_deg: self.origin.lat_deg + p.y_ft / FEET_PER_DEGREE_LAT,
            lon_deg: self.origin.lon_deg + p.x_ft / (self.cos_origin_lat * FEET_PER_DEGREE_LAT),
            alt_ft: p.z_ft,
        }
    }
}

/// Euclidean distance in feet between two local points.
pub fn distance3d(a: LocalPoint, b: LocalPoint) -> f64 {
    let dx = a.x_ft - b.x_ft;
    let dy = a.y_ft - b.y_ft;
    let dz = a.z_ft - b.z_ft;
    (dx * dx + dy * dy + dz * dz).sqrt()
}
