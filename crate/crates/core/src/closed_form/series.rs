//! Area and volume of the parallel surfaces S_t as explicit functions of t.
//!
//! On a surface homeomorphic to S², the area A(t) = |S_t| obeys
//! A'' = −4K·A + 8π, and the enclosed volume obeys V' = A. The general
//! solutions are pinned down by (A₀, Ȧ₀, V₀):
//!
//! - K = 0: A = 4πt² + Ȧ₀t + A₀, V = 4πt³/3 + Ȧ₀t²/2 + A₀t + V₀.
//! - K = −1: A = 2πR e^{2t} + 2πT e^{−2t} − 2π with R + T = 1 + A₀/2π and
//!   R − T = Ȧ₀/4π.
//! - K = +1: A = 2π − 2πR cos(2t + θ) with R cos θ = 1 − A₀/2π and
//!   R sin θ = Ȧ₀/4π.

use std::f64::consts::PI;

use serde::Serialize;

use super::flow_series::{FlowSeries, Provenance};
use crate::error::{GeomError, Result};
use crate::flow::validity_window;
use crate::space::SpaceKind;
use crate::surface::GeometricSummary;

/// Curvature-specific constants of the closed-form solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SeriesShape {
    /// Polynomial coefficients are read directly off the summary.
    Euclidean,
    Hyperbolic { r_hyp: f64, t_hyp: f64 },
    /// `degenerate` marks R = 0 (A₀ = 2π, Ȧ₀ = 0), where θ is set to 0.
    Spherical { r_sph: f64, theta: f64, degenerate: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesCoefficients {
    pub space: SpaceKind,
    pub summary: GeometricSummary,
    pub shape: SeriesShape,
}

pub fn euclidean_series(s: GeometricSummary) -> SeriesCoefficients {
    SeriesCoefficients { space: SpaceKind::Euclidean, summary: s, shape: SeriesShape::Euclidean }
}

pub fn hyperbolic_series(s: GeometricSummary) -> SeriesCoefficients {
    let sum = 1.0 + s.area / (2.0 * PI);
    let diff = s.total_mean_curvature / (4.0 * PI);
    SeriesCoefficients {
        space: SpaceKind::Hyperbolic,
        summary: s,
        shape: SeriesShape::Hyperbolic { r_hyp: 0.5 * (sum + diff), t_hyp: 0.5 * (sum - diff) },
    }
}

pub fn spherical_series(s: GeometricSummary) -> SeriesCoefficients {
    let x = 1.0 - s.area / (2.0 * PI);
    // Normalise −0.0 so atan2 stays in [0, π] for Ȧ₀ = 0.
    let y = s.total_mean_curvature / (4.0 * PI) + 0.0;
    let r = x.hypot(y);
    let degenerate = r < 1e-15;
    let theta = if degenerate {
        0.0
    } else if y >= 0.0 {
        y.atan2(x).clamp(0.0, PI)
    } else {
        // Outside the convex regime; keep the boundary data reproducible.
        y.atan2(x)
    };
    SeriesCoefficients {
        space: SpaceKind::Spherical,
        summary: s,
        shape: SeriesShape::Spherical { r_sph: r, theta, degenerate },
    }
}

/// Closed-form series matching `space`.
pub fn series_for(space: SpaceKind, s: GeometricSummary) -> SeriesCoefficients {
    match space {
        SpaceKind::Euclidean => euclidean_series(s),
        SpaceKind::Hyperbolic => hyperbolic_series(s),
        SpaceKind::Spherical => spherical_series(s),
    }
}

impl SeriesCoefficients {
    /// A(t) = |S_t|.
    pub fn area(&self, t: f64) -> f64 {
        let s = &self.summary;
        match self.shape {
            SeriesShape::Euclidean => (4.0 * PI * t + s.total_mean_curvature) * t + s.area,
            SeriesShape::Hyperbolic { r_hyp, t_hyp } => {
                2.0 * PI * r_hyp * (2.0 * t).exp() + 2.0 * PI * t_hyp * (-2.0 * t).exp() - 2.0 * PI
            }
            SeriesShape::Spherical { r_sph, theta, .. } => 2.0 * PI - 2.0 * PI * r_sph * (2.0 * t + theta).cos(),
        }
    }

    /// A'(t) = ∫_{S_t} H.
    pub fn area_rate(&self, t: f64) -> f64 {
        match self.shape {
            SeriesShape::Euclidean => 8.0 * PI * t + self.summary.total_mean_curvature,
            SeriesShape::Hyperbolic { r_hyp, t_hyp } => {
                4.0 * PI * r_hyp * (2.0 * t).exp() - 4.0 * PI * t_hyp * (-2.0 * t).exp()
            }
            SeriesShape::Spherical { r_sph, theta, .. } => 4.0 * PI * r_sph * (2.0 * t + theta).sin(),
        }
    }

    /// A''(t), differentiated term by term from the closed form.
    pub fn area_accel(&self, t: f64) -> f64 {
        match self.shape {
            SeriesShape::Euclidean => 8.0 * PI,
            SeriesShape::Hyperbolic { r_hyp, t_hyp } => {
                8.0 * PI * r_hyp * (2.0 * t).exp() + 8.0 * PI * t_hyp * (-2.0 * t).exp()
            }
            SeriesShape::Spherical { r_sph, theta, .. } => 8.0 * PI * r_sph * (2.0 * t + theta).cos(),
        }
    }

    /// V(t), the volume enclosed by S_t.
    pub fn volume(&self, t: f64) -> f64 {
        let s = &self.summary;
        match self.shape {
            SeriesShape::Euclidean => {
                ((4.0 / 3.0 * PI * t + 0.5 * s.total_mean_curvature) * t + s.area) * t + s.volume
            }
            SeriesShape::Hyperbolic { r_hyp, t_hyp } => {
                PI * r_hyp * (2.0 * t).exp() - PI * t_hyp * (-2.0 * t).exp() - 2.0 * PI * t
                    + PI * (t_hyp - r_hyp)
                    + s.volume
            }
            SeriesShape::Spherical { r_sph, theta, .. } => {
                2.0 * PI * t - PI * r_sph * (2.0 * t + theta).sin() + PI * r_sph * theta.sin() + s.volume
            }
        }
    }

    /// Residual A'' + 4K·A − 8π of the evaluators at `t`.
    pub fn ode_residual_at(&self, t: f64) -> f64 {
        self.area_accel(t) + 4.0 * f64::from(self.space.curvature()) * self.area(t) - 8.0 * PI
    }

    /// Series of the surface S_{t0}: its evaluators are the time-shifted ones.
    pub fn rebase(&self, t0: f64) -> Result<SeriesCoefficients> {
        let window = validity_window(self.space);
        if !window.contains(t0) {
            return Err(GeomError::domain(format!("t0 = {t0} lies outside the flow window {window}")));
        }
        let s = GeometricSummary::new(self.area(t0), self.area_rate(t0), self.volume(t0));
        Ok(series_for(self.space, s))
    }

    /// Samples (A, V) on `t_grid`.
    pub fn sample(&self, t_grid: &[f64]) -> Result<FlowSeries> {
        FlowSeries::new(
            t_grid.to_vec(),
            t_grid.iter().map(|&t| self.area(t)).collect(),
            t_grid.iter().map(|&t| self.volume(t)).collect(),
            Provenance::Analytic,
        )
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.shape, SeriesShape::Spherical { degenerate: true, .. })
    }

    /// V(r(t)) − V(t) on H³: the volume of the sphere with the same area as
    /// S_t minus the volume S_t encloses. Evaluated without the cancellation
    /// of two e^{2t}-sized terms, so it stays accurate for large t.
    pub fn equal_area_volume_gap(&self, t: f64) -> Result<f64> {
        let SeriesShape::Hyperbolic { r_hyp: r, t_hyp: tt } = self.shape else {
            return Err(GeomError::input("equal-area volume gap is defined for the hyperbolic series"));
        };
        if r <= 0.0 {
            return Err(GeomError::domain("hyperbolic series needs R > 0"));
        }
        let decay = (-4.0 * t).exp();
        // cosh 2r = X = R e^{2t} + T e^{−2t}; with Y = R e^{2t} − T e^{−2t},
        // √(X² − 1) − Y = (4RT − 1)/(√(X² − 1) + Y).
        let x = r * (2.0 * t).exp() + tt * (-2.0 * t).exp();
        let y = r * (2.0 * t).exp() - tt * (-2.0 * t).exp();
        let sinh_2r = (x * x - 1.0).max(0.0).sqrt();
        let sinh_excess = (4.0 * r * tt - 1.0) / (sinh_2r + y);
        // 2r − 2t = log(e^{−2t}(X + √(X² − 1))).
        let scaled_x = r + tt * decay;
        let scaled_sinh = (scaled_x * scaled_x - decay).max(0.0).sqrt();
        let radius_excess = (scaled_x + scaled_sinh).ln();
        Ok(PI * sinh_excess - PI * radius_excess - PI * (tt - r) - self.summary.volume)
    }

    /// Time (π − θ)/2 at which the spherical area peaks.
    pub fn max_area_time(&self) -> Result<f64> {
        match self.shape {
            SeriesShape::Spherical { theta, .. } => Ok((PI - theta) / 2.0),
            _ => Err(GeomError::input("area maximum exists only for the spherical series")),
        }
    }

    /// Peak spherical area 2π(R + 1).
    pub fn max_area(&self) -> Result<f64> {
        match self.shape {
            SeriesShape::Spherical { r_sph, .. } => Ok(2.0 * PI * (r_sph + 1.0)),
            _ => Err(GeomError::input("area maximum exists only for the spherical series")),
        }
    }

    /// Closed-form V(π/2) = π² + 2πR sin θ + V₀ on S³.
    pub fn half_period_volume(&self) -> Result<f64> {
        match self.shape {
            SeriesShape::Spherical { r_sph, theta, .. } => {
                Ok(PI * PI + 2.0 * PI * r_sph * theta.sin() + self.summary.volume)
            }
            _ => Err(GeomError::input("V(π/2) is defined for the spherical series")),
        }
    }
}
