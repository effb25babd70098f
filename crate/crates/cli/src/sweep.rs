//! `minkflow sweep`: the Euclidean-form deficit Ȧ₀² − 16πA₀ over H³ families.
//!
//! Family file:
//!
//! ```json
//! {"families": [
//!   {"id": "spheres", "kind": "spheres", "radii": [0.5, 1, 2]},
//!   {"id": "flat", "kind": "disks", "radii": [0.5, 1, 2]},
//!   {"id": "zonal", "kind": "perturbed", "base_radius": 1.0, "basis": 8,
//!    "amplitudes": [-0.05, 0.05], "subdivision": 4}
//! ]}
//! ```

use anyhow::Result;
use log::warn;
use minkflow_core::closed_form::sphere_geometry;
use minkflow_core::inequalities::{
    euclidean_form_sweep, geodesic_disk_limits, minkowski_deficit_hyperbolic, weaker_inequalities_hyperbolic,
    EuclideanFormSweep,
};
use minkflow_core::surface::{build_radial_graph, convexity_report, summarize};
use minkflow_core::{GeometricSummary, RadialGraphSpec, SpaceKind};
use serde::{Deserialize, Serialize};

use crate::input::{classify, read_text, DEFAULT_SUBDIVISION, SUBDIVISION_RANGE};
use crate::output::{Cell, OutDir};
use crate::{usage, Status, SweepArgs};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    families: Vec<Family>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum Family {
    Spheres { id: String, radii: Vec<f64> },
    Disks { id: String, radii: Vec<f64> },
    Perturbed {
        id: String,
        base_radius: f64,
        basis: usize,
        amplitudes: Vec<f64>,
        #[serde(default)]
        subdivision: Option<u32>,
    },
}

impl Family {
    fn id(&self) -> &str {
        match self {
            Family::Spheres { id, .. } | Family::Disks { id, .. } | Family::Perturbed { id, .. } => id,
        }
    }
}

struct Sample {
    params: String,
    summary: GeometricSummary,
}

#[derive(Serialize)]
struct FamilySummary {
    family_id: String,
    kind: &'static str,
    samples: usize,
    skipped_non_convex: usize,
    sweep: Option<EuclideanFormSweep>,
    /// Parameters of the sample attaining the minimum Euclidean-form deficit.
    argmin_params: Option<String>,
}

/// Samples a family; non-convex perturbed surfaces are skipped and counted.
fn sample(family: &Family) -> Result<(Vec<Sample>, usize)> {
    let mut skipped = 0;
    let samples = match family {
        Family::Spheres { radii, .. } => radii
            .iter()
            .map(|&r| {
                let summary = sphere_geometry(SpaceKind::Hyperbolic, r).map_err(classify)?;
                Ok(Sample { params: format!("r={r}"), summary })
            })
            .collect::<Result<Vec<_>>>()?,
        Family::Disks { radii, .. } => radii
            .iter()
            .map(|&r| {
                let summary = geodesic_disk_limits(r).map_err(classify)?;
                Ok(Sample { params: format!("disk_r={r}"), summary })
            })
            .collect::<Result<Vec<_>>>()?,
        Family::Perturbed { id, base_radius, basis, amplitudes, subdivision } => {
            let level = subdivision.unwrap_or(DEFAULT_SUBDIVISION);
            if !SUBDIVISION_RANGE.contains(&level) {
                return Err(usage(format!("family '{id}': subdivision {level} out of range")));
            }
            let mut out = Vec::new();
            for &amp in amplitudes {
                let spec = RadialGraphSpec::sphere(SpaceKind::Hyperbolic, *base_radius).with_perturbation(*basis, amp);
                spec.validate().map_err(|e| usage(format!("family '{id}': {e}")))?;
                let mesh = build_radial_graph(&spec, level).map_err(classify)?;
                let params = format!("base_radius={base_radius};basis={basis};amplitude={amp}");
                if !convexity_report(&mesh).is_plausibly_convex {
                    warn!("family '{id}': skipping non-convex sample {params}");
                    skipped += 1;
                    continue;
                }
                out.push(Sample { params, summary: summarize(&mesh)? });
            }
            out
        }
    };
    Ok((samples, skipped))
}

pub fn run(args: &SweepArgs, out: &OutDir) -> Result<Status> {
    let text = read_text(&args.family)?;
    let file: FamilyFile = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: not a family file: {e}", args.family.display())))?;
    if file.families.is_empty() {
        return Err(usage("family file lists no families"));
    }

    let mut rows = Vec::new();
    let mut summaries = Vec::new();
    for family in &file.families {
        let (samples, skipped) = sample(family)?;
        for s in &samples {
            rows.push(vec![
                Cell::from(family.id()),
                Cell::from(s.params.as_str()),
                minkowski_deficit_hyperbolic(s.summary).deficit.into(),
                weaker_inequalities_hyperbolic(s.summary)[2].deficit.into(),
            ]);
        }
        let sweep = euclidean_form_sweep(&samples.iter().map(|s| s.summary).collect::<Vec<_>>());
        let argmin_params = sweep.as_ref().map(|w| samples[w.argmin].params.clone());
        if let Some(w) = &sweep {
            println!(
                "{:<16} {:>4} samples  min Euclidean-form deficit {:+.6e} at {}",
                family.id(),
                w.samples,
                w.min_deficit,
                samples[w.argmin].params
            );
        }
        summaries.push(FamilySummary {
            family_id: family.id().to_string(),
            kind: match family {
                Family::Spheres { .. } => "spheres",
                Family::Disks { .. } => "disks",
                Family::Perturbed { .. } => "perturbed",
            },
            samples: samples.len(),
            skipped_non_convex: skipped,
            sweep,
            argmin_params,
        });
    }
    out.write_csv("sweep.csv", &["family_id", "params", "deficit_thm1", "deficit_euclidean_form"], &rows)?;
    out.write_json("sweep_summary.json", &summaries)?;
    Ok(Status::Success)
}
