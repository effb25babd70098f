//! `minkflow flow`: discrete normal flow against the closed-form evolution.

use std::f64::consts::PI;

use anyhow::Result;
use minkflow_core::closed_form::{equal_area_radius, series_for, sphere_volume, SeriesCoefficients};
use minkflow_core::flow::{compare_analytic, default_grid, ode_residual};
use minkflow_core::surface::build_radial_graph;
use minkflow_core::SpaceKind;
use serde::Serialize;

use crate::input::{classify, load_surface, parse_grid};
use crate::output::{Cell, OutDir};
use crate::svg::{render, Line, Panel};
use crate::{FlowArgs, Status};

/// Isoperimetric gap of a surface with area `a` and volume `v`: A³ − 36πV²
/// in R³, otherwise the volume of the equal-area geodesic sphere minus `v`.
/// `None` once a spherical area passes the great-sphere area.
fn isoperimetric_gap(space: SpaceKind, a: f64, v: f64) -> Option<f64> {
    match space {
        SpaceKind::Euclidean => Some(a.powi(3) - 36.0 * PI * v * v),
        _ => equal_area_radius(space, a).ok().map(|r| sphere_volume(space, r) - v),
    }
}

fn analytic_gap(series: &SeriesCoefficients, space: SpaceKind, t: f64) -> Option<f64> {
    match space {
        SpaceKind::Hyperbolic => series.equal_area_volume_gap(t).ok(),
        _ => isoperimetric_gap(space, series.area(t), series.volume(t)),
    }
}

#[derive(Serialize)]
struct CompareSummary<'a> {
    subdivision: u32,
    report: &'a minkflow_core::flow::ComparisonReport,
}

pub fn run(args: &FlowArgs, out: &OutDir) -> Result<Status> {
    let (spec, subdivision) = load_surface(&args.input, args.subdivision)?;
    let space = spec.space;
    let grid = match &args.grid {
        Some(text) => parse_grid(text, space)?,
        None => default_grid(space),
    };
    let mesh = build_radial_graph(&spec, subdivision).map_err(classify)?;
    let report = compare_analytic(&mesh, &grid).map_err(classify)?;
    let analytic = report.analytic()?;
    let discrete = report.discrete()?;
    let series = series_for(space, report.summary);

    analytic.write_csv(std::fs::File::create(out.path("analytic.csv"))?)?;
    discrete.write_csv(std::fs::File::create(out.path("discrete.csv"))?)?;
    out.write_json("compare.json", &CompareSummary { subdivision, report: &report })?;

    if grid.len() >= 3 {
        let ra = ode_residual(&analytic, space)?;
        let rd = ode_residual(&discrete, space)?;
        let rows: Vec<Vec<Cell>> = (0..ra.len())
            .map(|i| vec![grid[i + 1].into(), ra[i].into(), rd[i].into()])
            .collect();
        out.write_csv("ode_residual.csv", &["t", "analytic_residual", "discrete_residual"], &rows)?;
    }

    let gap_rows: Vec<Vec<Cell>> = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.t.into(),
                analytic_gap(&series, space, r.t).into(),
                isoperimetric_gap(space, r.discrete_area, r.discrete_volume).into(),
            ]
        })
        .collect();
    out.write_csv("isoperimetric.csv", &["t", "analytic_gap", "discrete_gap"], &gap_rows)?;

    let panel = |title: &str, y: &str, a: &[f64], d: &[f64]| Panel {
        title: format!("{title} ({space})"),
        x_label: "t".into(),
        y_label: y.into(),
        lines: vec![
            Line::new("closed form", grid.iter().copied().zip(a.iter().copied()).collect()),
            Line::new("discrete flow", grid.iter().copied().zip(d.iter().copied()).collect()).dashed(),
        ],
        marker: None,
    };
    out.write_text(
        "flow.svg",
        &render(&[
            panel("Area", "A(t)", &analytic.areas, &discrete.areas),
            panel("Volume", "V(t)", &analytic.volumes, &discrete.volumes),
        ]),
    )?;

    println!("{space} flow, subdivision {subdivision}, {} grid points", grid.len());
    println!("  max relative area error   {:.3e}", report.max_rel_area_err);
    println!("  max relative volume error {:.3e}", report.max_rel_vol_err);
    Ok(Status::Success)
}
