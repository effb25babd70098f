//! `minkflow sphere-table`: geodesic spheres, where every Minkowski deficit vanishes.

use std::f64::consts::PI;

use anyhow::Result;
use minkflow_core::closed_form::sphere_geometry;
use minkflow_core::inequalities::{
    minkowski_deficit_euclidean, minkowski_deficit_hyperbolic, minkowski_deficit_spherical,
    spherical_rigidity_indicator,
};
use minkflow_core::SpaceKind;

use crate::output::{Cell, OutDir};
use crate::Status;

/// Tolerance for "the deficit vanishes".
const EQUALITY_TOL: f64 = 1e-9;

fn radii(space: SpaceKind) -> Vec<f64> {
    match space {
        SpaceKind::Euclidean => vec![0.5, 1.0, 2.0],
        SpaceKind::Hyperbolic => vec![0.25, 0.5, 1.0, 2.0],
        SpaceKind::Spherical => vec![PI / 12.0, PI / 6.0, PI / 4.0, PI / 3.0, PI / 2.0],
    }
}

pub fn run(out: &OutDir) -> Result<Status> {
    let mut rows = Vec::new();
    let mut worst: f64 = 0.0;
    for space in SpaceKind::ALL {
        for r in radii(space) {
            let s = sphere_geometry(space, r)?;
            let report = match space {
                SpaceKind::Euclidean => minkowski_deficit_euclidean(s),
                SpaceKind::Hyperbolic => minkowski_deficit_hyperbolic(s),
                SpaceKind::Spherical => minkowski_deficit_spherical(s)?,
            };
            worst = worst.max(report.deficit.abs());
            let rigidity = (space == SpaceKind::Spherical).then(|| spherical_rigidity_indicator(s));
            rows.push(vec![
                Cell::from(space.name()),
                r.into(),
                s.area.into(),
                s.total_mean_curvature.into(),
                s.volume.into(),
                report.deficit.into(),
                rigidity.into(),
            ]);
        }
    }
    out.write_csv(
        "sphere_table.csv",
        &["space", "r", "area", "area_rate", "volume", "minkowski_deficit", "rigidity_indicator"],
        &rows,
    )?;
    println!("{} geodesic spheres, largest |deficit| {worst:.3e}", rows.len());
    Ok(if worst <= EQUALITY_TOL { Status::Success } else { Status::Violation })
}
