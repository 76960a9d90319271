use std::f64::consts::{FRAC_PI_2, PI, TAU};

use super::AppError;
use crate::functions::make_inv_gudermannian;
use crate::solver::Method;

/// Mean Earth radius in metres.
pub const EARTH_RADIUS: f64 = 6_371_000.0;

/// Step for the meridional-parts quadrature.
const NAV_H: f64 = 1e-5;

/// Latitude and longitude in radians; the poles are excluded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeoPoint {
    lat: f64,
    lon: f64,
}

impl GeoPoint {
    pub fn new(lat: f64, lon: f64) -> Result<Self, AppError> {
        if !(lat.abs() < FRAC_PI_2) {
            return Err(AppError::Domain(format!(
                "latitude {lat} rad is at or beyond a pole"
            )));
        }
        if !lon.is_finite() {
            return Err(AppError::Parameter(format!("longitude {lon} is not finite")));
        }
        Ok(GeoPoint { lat, lon })
    }

    pub fn from_degrees(lat: f64, lon: f64) -> Result<Self, AppError> {
        GeoPoint::new(lat.to_radians(), lon.to_radians())
    }

    pub fn lat(&self) -> f64 {
        self.lat
    }

    pub fn lon(&self) -> f64 {
        self.lon
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rhumb {
    /// Constant course, radians clockwise from north in [0, 2π).
    pub bearing: f64,
    pub distance: f64,
}

/// ∫₀^φ sec t dt by integrating the inverse-Gudermannian ODE.
pub fn meridional_parts(phi: f64) -> Result<f64, AppError> {
    Ok(make_inv_gudermannian().eval_with(phi, Method::Rk4, NAV_H)?)
}

/// Longitude difference wrapped to (−π, π].
fn wrap_lon(d: f64) -> f64 {
    let w = d.rem_euclid(TAU);
    if w > PI {
        w - TAU
    } else {
        w
    }
}

/// Rhumb line from `from` to `to` on a sphere of the given radius.
///
/// The bearing is atan2(Δλ, ΔM) with M the meridional parts; the distance
/// is R|Δφ|/|cos β|, except along a parallel (Δφ = 0) where it is
/// R|Δλ|cos φ.
pub fn loxodrome(from: &GeoPoint, to: &GeoPoint, radius: f64) -> Result<Rhumb, AppError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(AppError::Parameter(format!("radius must be positive, got {radius}")));
    }
    let d_lon = wrap_lon(to.lon - from.lon);
    let d_lat = to.lat - from.lat;
    if d_lat == 0.0 {
        let bearing = match d_lon.partial_cmp(&0.0) {
            Some(std::cmp::Ordering::Greater) => FRAC_PI_2,
            Some(std::cmp::Ordering::Less) => 3.0 * FRAC_PI_2,
            _ => 0.0,
        };
        return Ok(Rhumb {
            bearing,
            distance: radius * d_lon.abs() * from.lat.cos(),
        });
    }
    let d_m = meridional_parts(to.lat)? - meridional_parts(from.lat)?;
    let course = d_lon.atan2(d_m);
    Ok(Rhumb {
        bearing: course.rem_euclid(TAU),
        distance: radius * d_lat.abs() / course.cos().abs(),
    })
}
