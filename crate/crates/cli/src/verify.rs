//! `minkflow verify`: evaluate the inequalities of the surface's space on a mesh.

use anyhow::Result;
use log::info;
use minkflow_core::closed_form::sphere_geometry;
use minkflow_core::inequalities::{
    false_inequality_eval, is_asserted, minkowski_deficit_euclidean, minkowski_deficit_hyperbolic,
    minkowski_deficit_spherical, spherical_rigidity_indicator, weaker_inequalities_hyperbolic, DeficitReport,
};
use minkflow_core::surface::{build_radial_graph, convexity_report, summarize, ConvexityReport};
use minkflow_core::{GeometricSummary, RadialGraphSpec, SpaceKind};
use serde::Serialize;

use crate::input::{classify, load_surface};
use crate::output::OutDir;
use crate::{usage, Status, VerifyArgs};

/// Floor of the sphere-calibrated tolerance.
const TOL_FLOOR: f64 = 1e-9;
/// Safety factor on the discretisation error observed on the reference sphere.
const TOL_FACTOR: f64 = 10.0;

#[derive(Debug, Serialize)]
struct Assessed {
    #[serde(flatten)]
    report: DeficitReport,
    asserted: bool,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    spec: RadialGraphSpec,
    subdivision: u32,
    summary: GeometricSummary,
    convexity: ConvexityReport,
    /// Discrete summary of the unperturbed sphere at the same resolution.
    reference_sphere: GeometricSummary,
    deficits: Vec<Assessed>,
    rigidity_indicator: Option<f64>,
    status: &'static str,
}

/// All deficits evaluated for a space, asserted ones first.
fn deficits(space: SpaceKind, s: GeometricSummary) -> Result<Vec<DeficitReport>> {
    Ok(match space {
        SpaceKind::Euclidean => vec![minkowski_deficit_euclidean(s)],
        SpaceKind::Hyperbolic => {
            let mut v = vec![minkowski_deficit_hyperbolic(s)];
            v.extend(weaker_inequalities_hyperbolic(s));
            v.push(false_inequality_eval(s));
            v
        }
        SpaceKind::Spherical => vec![minkowski_deficit_spherical(s).map_err(classify)?],
    })
}

pub fn run(args: &VerifyArgs, out: &OutDir) -> Result<Status> {
    if let Some(tol) = args.tol {
        if !(tol >= 0.0 && tol.is_finite()) {
            return Err(usage(format!("--tol must be a non-negative number, got {tol}")));
        }
    }
    let (spec, subdivision) = load_surface(&args.input, args.subdivision)?;
    let space = spec.space;
    let mesh = build_radial_graph(&spec, subdivision).map_err(classify)?;
    let summary = summarize(&mesh)?;
    let convexity = convexity_report(&mesh);
    info!("{space} surface at subdivision {subdivision}: {summary:?}");

    let sphere = RadialGraphSpec::sphere(space, spec.base_radius);
    let reference = summarize(&build_radial_graph(&sphere, subdivision).map_err(classify)?)?;
    let exact = sphere_geometry(space, spec.base_radius).map_err(classify)?;

    let measured = deficits(space, summary)?;
    let on_reference = deficits(space, reference)?;
    let on_exact = deficits(space, exact)?;
    let assessed: Vec<Assessed> = measured
        .into_iter()
        .zip(on_reference.iter().zip(&on_exact))
        .map(|(report, (r, e))| {
            let tol = args
                .tol
                .unwrap_or_else(|| (TOL_FACTOR * (r.deficit - e.deficit).abs()).max(TOL_FLOOR));
            let asserted = is_asserted(&report.name);
            Assessed { report: report.with_tol(tol), asserted }
        })
        .collect();

    let rigidity_indicator = (space == SpaceKind::Spherical).then(|| spherical_rigidity_indicator(summary));
    let violated = assessed.iter().any(|a| a.asserted && !a.report.holds);
    let status = if !convexity.is_plausibly_convex {
        Status::NotConvex
    } else if violated {
        Status::Violation
    } else {
        Status::Success
    };

    println!("{space} surface, subdivision {subdivision}");
    println!(
        "  A = {:.12}  ∫H = {:.12}  V = {:.12}",
        summary.area, summary.total_mean_curvature, summary.volume
    );
    println!(
        "  convex: {} (min curvature estimate {:.3e})",
        convexity.is_plausibly_convex, convexity.min_principal_curvature_estimate
    );
    for a in &assessed {
        let role = if a.asserted { "asserted" } else { "informational" };
        println!(
            "  {:<40} deficit {:>+.6e}  tol {:.1e}  holds {:<5} [{role}]",
            a.report.name, a.report.deficit, a.report.tol, a.report.holds
        );
    }
    if let Some(r) = rigidity_indicator {
        println!("  rigidity indicator R = {r:.12}");
    }
    if status == Status::NotConvex {
        println!("  surface is not convex: deficits are reported but not asserted");
    }

    let report = VerifyReport {
        spec,
        subdivision,
        summary,
        convexity,
        reference_sphere: reference,
        deficits: assessed,
        rigidity_indicator,
        status: match status {
            Status::Success => "holds",
            Status::Violation => "violated",
            Status::NotConvex => "not_convex",
            Status::NoFinding => unreachable!(),
        },
    };
    out.write_json("verify_report.json", &report)?;
    Ok(status)
}
