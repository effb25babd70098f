//! Radial-graph surface specifications.
//!
//! A surface is ρ(u) = r₀·(1 + Σ aᵢ fᵢ(u)) over directions u of the unit
//! parameter sphere, placed around the basepoint of the model space by the
//! exponential map.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::space::{Point, SpaceKind};

/// Number of perturbation basis functions.
pub const BASIS_LEN: usize = 9;

/// Labels of the perturbation basis, in index order.
pub const BASIS_LABELS: [&str; BASIS_LEN] = ["1", "x", "y", "z", "xy", "yz", "zx", "x^2-y^2", "3z^2-1"];

/// Evaluates basis function `index` at the unit direction `u`.
pub fn basis_value(index: usize, u: [f64; 3]) -> f64 {
    let [x, y, z] = u;
    match index {
        0 => 1.0,
        1 => x,
        2 => y,
        3 => z,
        4 => x * y,
        5 => y * z,
        6 => z * x,
        7 => x * x - y * y,
        8 => 3.0 * z * z - 1.0,
        _ => f64::NAN,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Perturbation {
    #[serde(rename = "basis")]
    pub basis_index: usize,
    pub amplitude: f64,
}

/// A star-shaped surface around the canonical basepoint of `space`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialGraphSpec {
    pub space: SpaceKind,
    pub base_radius: f64,
    #[serde(default)]
    pub perturbations: Vec<Perturbation>,
}

impl RadialGraphSpec {
    /// Geodesic sphere of radius `r` about the basepoint.
    pub fn sphere(space: SpaceKind, r: f64) -> Self {
        RadialGraphSpec { space, base_radius: r, perturbations: Vec::new() }
    }

    pub fn with_perturbation(mut self, basis_index: usize, amplitude: f64) -> Self {
        self.perturbations.push(Perturbation { basis_index, amplitude });
        self
    }

    pub fn center(&self) -> Point {
        self.space.basepoint()
    }

    pub fn is_sphere(&self) -> bool {
        self.perturbations.iter().all(|p| p.amplitude == 0.0)
    }

    /// Checks everything that can be checked without sampling.
    pub fn validate(&self) -> Result<()> {
        if !(self.base_radius > 0.0) || !self.base_radius.is_finite() {
            return Err(GeomError::Spec(format!("base_radius must be positive, got {}", self.base_radius)));
        }
        for p in &self.perturbations {
            if p.basis_index >= BASIS_LEN {
                return Err(GeomError::Spec(format!(
                    "basis index {} out of range 0..{}",
                    p.basis_index,
                    BASIS_LEN - 1
                )));
            }
            if !p.amplitude.is_finite() {
                return Err(GeomError::Spec("perturbation amplitude must be finite".into()));
            }
        }
        Ok(())
    }

    /// ρ(u) for a unit direction `u`.
    pub fn radius_at(&self, u: [f64; 3]) -> f64 {
        let bump: f64 = self.perturbations.iter().map(|p| p.amplitude * basis_value(p.basis_index, u)).sum();
        self.base_radius * (1.0 + bump)
    }

    /// Radius at `u`, rejecting values that leave the admissible range.
    pub(crate) fn checked_radius(&self, u: [f64; 3]) -> Result<f64> {
        let rho = self.radius_at(u);
        if !(rho > 0.0) {
            return Err(GeomError::Spec(format!("radius {rho} <= 0 at direction {u:?}")));
        }
        if self.space == SpaceKind::Spherical && rho >= PI / 2.0 {
            return Err(GeomError::Spec(format!(
                "spherical radius {rho} >= π/2 at direction {u:?} leaves the hemisphere"
            )));
        }
        Ok(rho)
    }
}

/// JSON document describing a surface and its sampling level.
///
/// ```json
/// {"space": "hyperbolic", "base_radius": 1.0,
///  "perturbations": [{"basis": 8, "amplitude": 0.05}], "subdivision": 5}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceDocument {
    #[serde(flatten)]
    pub spec: RadialGraphSpec,
    pub subdivision: u32,
}

impl SurfaceDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SurfaceDocument =
            serde_json::from_str(text).map_err(|e| GeomError::Input(format!("malformed surface JSON: {e}")))?;
        doc.spec.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("surface documents always serialise")
    }
}
