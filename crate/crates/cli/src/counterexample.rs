//! `minkflow counterexample`: the false H³ inequality along geodesic-disk limits.

use anyhow::Result;
use minkflow_core::inequalities::{counterexample_scan, geodesic_disk_limits, CounterexampleScan};

use crate::input::classify;
use crate::output::{Cell, OutDir};
use crate::svg::{render, Line, Panel};
use crate::{CounterexampleArgs, Status};

const HEADER: [&str; 5] = [
    "radius",
    "false_deficit",
    "theorem_deficit",
    "mean_curvature_volume_deficit",
    "mean_curvature_area_deficit",
];

fn chart(scan: &CounterexampleScan) -> Result<String> {
    // Deficits grow like e^{2R}; dividing by the matching power of Ȧ₀ keeps
    // both curves readable on one axis.
    let mut false_rel = Vec::with_capacity(scan.rows.len());
    let mut theorem_rel = Vec::with_capacity(scan.rows.len());
    for row in &scan.rows {
        let rate = geodesic_disk_limits(row.radius)?.total_mean_curvature;
        false_rel.push((row.radius, row.false_deficit / (rate * rate)));
        theorem_rel.push((row.radius, row.theorem_deficit / rate));
    }
    let panel = Panel {
        title: "Geodesic-disk limits in H³".into(),
        x_label: "disk radius R".into(),
        y_label: "relative deficit".into(),
        lines: vec![
            Line::new("false inequality / Ȧ²", false_rel),
            Line::new("hyperbolic Minkowski / Ȧ", theorem_rel).dashed(),
        ],
        marker: scan.bisected_threshold.map(|r| (r, format!("R* = {r:.6}"))),
    };
    Ok(render(&[panel]))
}

pub fn run(args: &CounterexampleArgs, out: &OutDir) -> Result<Status> {
    let scan = counterexample_scan(args.rmin, args.rmax, args.step).map_err(classify)?;
    let rows: Vec<Vec<Cell>> = scan
        .rows
        .iter()
        .map(|r| {
            vec![
                r.radius.into(),
                r.false_deficit.into(),
                r.theorem_deficit.into(),
                r.mean_curvature_volume_deficit.into(),
                r.mean_curvature_area_deficit.into(),
            ]
        })
        .collect();
    out.write_csv("counterexample.csv", &HEADER, &rows)?;
    out.write_json("counterexample.json", &scan)?;
    out.write_text("counterexample.svg", &chart(&scan)?)?;

    println!("scanned {} disk radii in [{}, {}]", scan.rows.len(), args.rmin, args.rmax);
    match (scan.first_violation_r, scan.bisected_threshold) {
        (Some(r), Some(th)) => println!("  false inequality first fails at R = {r:.6}; sign change at R* = {th:.9}"),
        (Some(r), None) => println!("  false inequality already fails at the first radius R = {r:.6}"),
        _ => println!("  no violation of the false inequality in range"),
    }
    println!("  asserted inequalities hold on the whole scan: {}", scan.asserted_inequalities_hold);

    Ok(if !scan.asserted_inequalities_hold {
        Status::Violation
    } else if scan.first_violation_r.is_none() {
        Status::NoFinding
    } else {
        Status::Success
    })
}
