//! Exact normal flow of discrete surfaces and its comparison with the closed
//! forms.
//!
//! Geodesics are available in closed form, so S_t is built in one step per
//! target time: every vertex moves along the geodesic leaving it in the
//! direction of its outward normal.

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_form::{series_for, FlowSeries, Provenance};
use crate::error::{GeomError, Result};
use crate::space::SpaceKind;
use crate::surface::offset_vertices;
use crate::surface::{enclosed_volume, summarize, surface_area, GeometricSummary, SurfaceMesh};

/// Times t for which the parallel surface S_t is well defined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValidityWindow {
    pub t_min: f64,
    /// `f64::INFINITY` for K ≤ 0; the interval is open at `t_max`.
    pub t_max: f64,
}

impl ValidityWindow {
    pub fn contains(&self, t: f64) -> bool {
        t >= self.t_min && t < self.t_max
    }

    pub fn is_unbounded(&self) -> bool {
        self.t_max.is_infinite()
    }
}

impl fmt::Display for ValidityWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unbounded() {
            write!(f, "[{}, ∞)", self.t_min)
        } else {
            write!(f, "[{}, {})", self.t_min, self.t_max)
        }
    }
}

pub fn validity_window(space: SpaceKind) -> ValidityWindow {
    match space {
        SpaceKind::Euclidean | SpaceKind::Hyperbolic => ValidityWindow { t_min: 0.0, t_max: f64::INFINITY },
        SpaceKind::Spherical => ValidityWindow { t_min: 0.0, t_max: PI / 2.0 },
    }
}

fn check_in_window(space: SpaceKind, t: f64) -> Result<()> {
    let window = validity_window(space);
    if window.contains(t) {
        Ok(())
    } else {
        Err(GeomError::domain(format!("t = {t} lies outside the flow window {window} for {space}")))
    }
}

/// The parallel surface S_t. Faces are kept; normals, radii and solid-angle
/// weights are recomputed from the moved vertices.
pub fn flow_surface(mesh: &SurfaceMesh, t: f64) -> Result<SurfaceMesh> {
    check_in_window(mesh.space(), t)?;
    if t == 0.0 {
        return Ok(mesh.clone());
    }
    SurfaceMesh::from_vertices(
        mesh.space(),
        offset_vertices(mesh, t),
        mesh.faces().to_vec(),
        mesh.subdivision_level(),
    )
}

fn check_grid(space: SpaceKind, t_grid: &[f64]) -> Result<()> {
    if t_grid.is_empty() {
        return Err(GeomError::input("time grid is empty"));
    }
    if t_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(GeomError::input("time grid must be strictly increasing"));
    }
    t_grid.iter().try_for_each(|&t| check_in_window(space, t))
}

/// Discrete (A, V) of the flowed mesh at each grid time.
pub fn flow_series(mesh: &SurfaceMesh, t_grid: &[f64]) -> Result<FlowSeries> {
    check_grid(mesh.space(), t_grid)?;
    let samples: Vec<(f64, f64)> = t_grid
        .par_iter()
        .map(|&t| {
            let flowed = flow_surface(mesh, t)?;
            Ok((surface_area(&flowed)?, enclosed_volume(&flowed)?))
        })
        .collect::<Result<_>>()?;
    let (areas, volumes) = samples.into_iter().unzip();
    FlowSeries::new(t_grid.to_vec(), areas, volumes, Provenance::Discrete)
}

/// Relative tolerance on grid spacing when checking uniformity.
const UNIFORM_GRID_TOL: f64 = 1e-9;

/// Central second differences of the areas minus (−4K·A + 8π) at the interior
/// grid points.
pub fn ode_residual(series: &FlowSeries, space: SpaceKind) -> Result<Vec<f64>> {
    let t = &series.t_values;
    if t.len() < 3 {
        return Err(GeomError::input(format!("ODE residual needs at least 3 grid points, got {}", t.len())));
    }
    let step = (t[t.len() - 1] - t[0]) / (t.len() - 1) as f64;
    if !(step > 0.0) || t.windows(2).any(|w| ((w[1] - w[0]) - step).abs() > UNIFORM_GRID_TOL * step.max(1.0)) {
        return Err(GeomError::input("ODE residual needs a uniform increasing grid"));
    }
    let k = f64::from(space.curvature());
    let a = &series.areas;
    Ok((1..a.len() - 1)
        .map(|i| (a[i + 1] - 2.0 * a[i] + a[i - 1]) / (step * step) - (-4.0 * k * a[i] + 8.0 * PI))
        .collect())
}

/// One grid time of a [`ComparisonReport`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub t: f64,
    pub analytic_area: f64,
    pub discrete_area: f64,
    pub analytic_volume: f64,
    pub discrete_volume: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub space: SpaceKind,
    pub max_rel_area_err: f64,
    pub max_rel_vol_err: f64,
    pub summary: GeometricSummary,
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonReport {
    pub fn analytic(&self) -> Result<FlowSeries> {
        FlowSeries::new(
            self.rows.iter().map(|r| r.t).collect(),
            self.rows.iter().map(|r| r.analytic_area).collect(),
            self.rows.iter().map(|r| r.analytic_volume).collect(),
            Provenance::Analytic,
        )
    }

    pub fn discrete(&self) -> Result<FlowSeries> {
        FlowSeries::new(
            self.rows.iter().map(|r| r.t).collect(),
            self.rows.iter().map(|r| r.discrete_area).collect(),
            self.rows.iter().map(|r| r.discrete_volume).collect(),
            Provenance::Discrete,
        )
    }
}

fn rel_err(discrete: f64, analytic: f64) -> f64 {
    if analytic == 0.0 {
        discrete.abs()
    } else {
        ((discrete - analytic) / analytic).abs()
    }
}

/// Runs the discrete flow and the closed-form series seeded by the mesh's own
/// discrete summary, and reports their largest relative disagreement.
pub fn compare_analytic(mesh: &SurfaceMesh, t_grid: &[f64]) -> Result<ComparisonReport> {
    check_grid(mesh.space(), t_grid)?;
    let summary = summarize(mesh)?;
    let series = series_for(mesh.space(), summary);
    let discrete = flow_series(mesh, t_grid)?;
    let rows: Vec<ComparisonRow> = t_grid
        .iter()
        .enumerate()
        .map(|(i, &t)| ComparisonRow {
            t,
            analytic_area: series.area(t),
            discrete_area: discrete.areas[i],
            analytic_volume: series.volume(t),
            discrete_volume: discrete.volumes[i],
        })
        .collect();
    let max_rel_area_err = rows.iter().map(|r| rel_err(r.discrete_area, r.analytic_area)).fold(0.0, f64::max);
    let max_rel_vol_err = rows.iter().map(|r| rel_err(r.discrete_volume, r.analytic_volume)).fold(0.0, f64::max);
    Ok(ComparisonReport { space: mesh.space(), max_rel_area_err, max_rel_vol_err, summary, rows })
}

/// `count` evenly spaced times from `start` to `end` inclusive.
pub fn uniform_grid(start: f64, end: f64, count: usize) -> Result<Vec<f64>> {
    if count < 2 || !(end > start) || !start.is_finite() || !end.is_finite() {
        return Err(GeomError::input(format!("bad grid {start}:{end}:{count}")));
    }
    let step = (end - start) / (count - 1) as f64;
    Ok((0..count).map(|i| if i + 1 == count { end } else { start + i as f64 * step }).collect())
}

/// Nine points on [0, 2] for K ≤ 0, on [0, 0.9·π/2] for K = +1.
pub fn default_grid(space: SpaceKind) -> Vec<f64> {
    let end = match space {
        SpaceKind::Spherical => 0.9 * PI / 2.0,
        _ => 2.0,
    };
    uniform_grid(0.0, end, 9).expect("default grid parameters are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::sphere_geometry;
    use crate::space::geodesic_distance;
    use crate::surface::{build_radial_graph, RadialGraphSpec};
    use approx::assert_relative_eq;

    fn sphere(space: SpaceKind, r: f64, level: u32) -> SurfaceMesh {
        build_radial_graph(&RadialGraphSpec::sphere(space, r), level).unwrap()
    }

    fn max_distance_error(mesh: &SurfaceMesh, target: f64) -> f64 {
        let c = mesh.center();
        mesh.vertices().map(|p| (geodesic_distance(&c, &p).unwrap() - target).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn windows() {
        assert!(validity_window(SpaceKind::Euclidean).is_unbounded());
        assert!(validity_window(SpaceKind::Hyperbolic).is_unbounded());
        let s = validity_window(SpaceKind::Spherical);
        assert_eq!(s.t_max, PI / 2.0);
        assert!(s.contains(0.0) && !s.contains(PI / 2.0) && !s.contains(-0.1));
        assert_eq!(validity_window(SpaceKind::Euclidean).to_string(), "[0, ∞)");
    }

    #[test]
    fn flow_surface_examples() {
        let e = flow_surface(&sphere(SpaceKind::Euclidean, 1.0, 3), 1.0).unwrap();
        assert!(e.raw_vertices().iter().all(|v| (crate::space::euclid_sq(v).sqrt() - 2.0).abs() < 1e-12));
        let h = flow_surface(&sphere(SpaceKind::Hyperbolic, 1.0, 3), 1.0).unwrap();
        assert!(max_distance_error(&h, 2.0) < 1e-9);
        let s = flow_surface(&sphere(SpaceKind::Spherical, PI / 6.0, 3), PI / 4.0).unwrap();
        assert!(max_distance_error(&s, 5.0 * PI / 12.0) < 1e-9);
    }

    #[test]
    fn flow_outside_window_fails() {
        let s = sphere(SpaceKind::Spherical, 0.5, 1);
        assert!(matches!(flow_surface(&s, PI / 2.0), Err(GeomError::Domain(_))));
        assert!(matches!(flow_surface(&s, -0.1), Err(GeomError::Domain(_))));
    }

    #[test]
    fn flow_series_examples() {
        let e = flow_series(&sphere(SpaceKind::Euclidean, 1.0, 5), &[0.0, 1.0, 2.0]).unwrap();
        for (a, r) in e.areas.iter().zip([1.0, 2.0, 3.0]) {
            assert_relative_eq!(*a, 4.0 * PI * r * r, max_relative = 5e-3);
        }
        let h = flow_series(&sphere(SpaceKind::Hyperbolic, 0.1, 5), &[0.0, 1.0]).unwrap();
        assert_relative_eq!(h.areas[1], 2.0 * PI * 2.2f64.cosh() - 2.0 * PI, max_relative = 5e-3);
        let s = flow_series(&sphere(SpaceKind::Spherical, PI / 6.0, 5), &[0.0, PI / 6.0]).unwrap();
        assert_relative_eq!(s.areas[1], 2.0 * PI - 2.0 * PI * (2.0 * PI / 3.0).cos(), max_relative = 5e-3);
        assert!(flow_series(&sphere(SpaceKind::Euclidean, 1.0, 1), &[1.0, 0.5]).is_err());
    }

    #[test]
    fn ode_residual_of_analytic_series() {
        let grid = uniform_grid(0.0, 2.0, 21).unwrap();
        let e = series_for(SpaceKind::Euclidean, sphere_geometry(SpaceKind::Euclidean, 1.0).unwrap());
        let res = ode_residual(&e.sample(&grid).unwrap(), SpaceKind::Euclidean).unwrap();
        assert!(res.iter().all(|r| r.abs() < 1e-8), "{res:?}");

        // Truncation of the second difference is h²/12·A'''' = h²/12·16(A + 2π)
        // on H³, so it stays below 1e−5 at h = 1e−3 while A + 2π < 7.5.
        let grid = uniform_grid(0.0, 0.05, 51).unwrap();
        for r in [0.1, 0.5, 1.0] {
            let h = series_for(SpaceKind::Hyperbolic, sphere_geometry(SpaceKind::Hyperbolic, r).unwrap());
            let sampled = h.sample(&grid).unwrap();
            let res = ode_residual(&sampled, SpaceKind::Hyperbolic).unwrap();
            for (i, x) in res.iter().enumerate() {
                let bound = 1e-6 / 12.0 * 16.0 * (sampled.areas[i + 2] + 2.0 * PI);
                assert!(x.abs() <= 1.01 * bound + 1e-9, "r = {r}: {x} vs {bound}");
                if r == 0.1 {
                    assert!(x.abs() < 1e-5);
                }
            }
        }
    }

    #[test]
    fn ode_residual_rejects_bad_grids() {
        let s = FlowSeries::new(vec![0.0, 0.1, 0.3], vec![1.0; 3], vec![1.0; 3], Provenance::Analytic).unwrap();
        assert!(ode_residual(&s, SpaceKind::Euclidean).is_err());
        let s = FlowSeries::new(vec![0.0, 0.1], vec![1.0; 2], vec![1.0; 2], Provenance::Analytic).unwrap();
        assert!(ode_residual(&s, SpaceKind::Euclidean).is_err());
    }

    #[test]
    fn compare_unit_sphere() {
        let report = compare_analytic(&sphere(SpaceKind::Euclidean, 1.0, 4), &[0.0, 0.5, 1.0, 2.0]).unwrap();
        assert!(report.max_rel_area_err < 1e-2 && report.max_rel_vol_err < 1e-2, "{report:?}");
        assert_eq!(report.rows.len(), 4);
    }

    #[test]
    fn grids() {
        let g = default_grid(SpaceKind::Spherical);
        assert_eq!(g.len(), 9);
        assert_eq!(*g.last().unwrap(), 0.9 * PI / 2.0);
        assert_eq!(default_grid(SpaceKind::Hyperbolic)[8], 2.0);
        assert!(uniform_grid(1.0, 0.0, 3).is_err());
    }
}
