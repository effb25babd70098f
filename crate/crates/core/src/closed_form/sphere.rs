//! Geodesic spheres and the equal-area radius.

use std::f64::consts::PI;

use crate::error::{GeomError, Result};
use crate::space::{radial_volume_unchecked, SpaceKind};
use crate::surface::GeometricSummary;

/// (A(r), dA/dr, V(r)) of the geodesic sphere of radius `r`.
///
/// Areas are written as 4π·sn_K(r)², which equals 2π cosh 2r − 2π on H³ and
/// 2π − 2π cos 2r on S³ without their small-r cancellation.
pub fn sphere_geometry(space: SpaceKind, r: f64) -> Result<GeometricSummary> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(GeomError::input(format!("sphere radius must be positive, got {r}")));
    }
    if space == SpaceKind::Spherical && r > PI / 2.0 {
        return Err(GeomError::domain(format!("spherical sphere radius must be <= π/2, got {r}")));
    }
    let (area, rate) = match space {
        SpaceKind::Euclidean => (4.0 * PI * r * r, 8.0 * PI * r),
        SpaceKind::Hyperbolic => (4.0 * PI * r.sinh().powi(2), 4.0 * PI * (2.0 * r).sinh()),
        SpaceKind::Spherical => (4.0 * PI * r.sin().powi(2), 4.0 * PI * (2.0 * r).sin()),
    };
    Ok(GeometricSummary::new(area, rate, 4.0 * PI * radial_volume_unchecked(space, r)))
}

/// Volume of the geodesic ball of radius `r` (no range check beyond r ≥ 0).
pub fn sphere_volume(space: SpaceKind, r: f64) -> f64 {
    4.0 * PI * radial_volume_unchecked(space, r)
}

/// Radius of the geodesic sphere with area `area`.
pub fn equal_area_radius(space: SpaceKind, area: f64) -> Result<f64> {
    if !(area >= 0.0) || !area.is_finite() {
        return Err(GeomError::input(format!("area must be a finite value >= 0, got {area}")));
    }
    let y = area / (2.0 * PI);
    match space {
        SpaceKind::Euclidean => Ok((area / (4.0 * PI)).sqrt()),
        // ½·arccosh(1 + y), with arccosh(1 + y) = log1p(y + √(y(2 + y))).
        SpaceKind::Hyperbolic => Ok(0.5 * (y + (y * (2.0 + y)).max(0.0).sqrt()).ln_1p()),
        SpaceKind::Spherical => {
            if area > 4.0 * PI {
                return Err(GeomError::domain(format!("area {area} exceeds the great-sphere area 4π")));
            }
            // ½·arccos(1 − y) = asin(√(y/2)).
            Ok((0.5 * y).sqrt().min(1.0).asin())
        }
    }
}

/// dr/dt at t = 0 for the equal-area radius: Ȧ₀ divided by dA/dr of the
/// sphere with area A₀.
pub fn equal_area_radius_rate(space: SpaceKind, s: GeometricSummary) -> Result<f64> {
    if !(s.area > 0.0) {
        return Err(GeomError::input(format!("equal-area radius rate needs A0 > 0, got {}", s.area)));
    }
    let r0 = equal_area_radius(space, s.area)?;
    let sphere_rate = match space {
        SpaceKind::Euclidean => 8.0 * PI * r0,
        SpaceKind::Hyperbolic => 4.0 * PI * (2.0 * r0).sinh(),
        SpaceKind::Spherical => 4.0 * PI * (2.0 * r0).sin(),
    };
    if sphere_rate.abs() < 1e-12 {
        return Err(GeomError::Degenerate(format!(
            "sphere area is stationary at r0 = {r0}; dr/dt is undefined"
        )));
    }
    Ok(s.total_mean_curvature / sphere_rate)
}

/// lim_{t→∞} V(r(t)) − V(t) on H³: Ȧ₀/4 − V₀ − π·log(1 + A₀/2π + Ȧ₀/4π).
/// Non-negative for every closed convex surface in H³.
pub fn hyperbolic_asymptotic_deficit(s: GeometricSummary) -> f64 {
    let arg = s.area / (2.0 * PI) + s.total_mean_curvature / (4.0 * PI);
    s.total_mean_curvature / 4.0 - s.volume - PI * arg.ln_1p()
}
