mod common;

use std::f64::consts::PI;

use common::{random_summary, rng};
use minkflow_core::closed_form::{hyperbolic_asymptotic_deficit, sphere_geometry};
use minkflow_core::inequalities::{
    counterexample_scan, euclidean_form_sweep, false_inequality_eval, geodesic_disk_limits, is_asserted,
    minkowski_deficit_euclidean, minkowski_deficit_hyperbolic, minkowski_deficit_spherical,
    small_surface_reduction, spherical_rigidity_indicator, weaker_inequalities_hyperbolic, DeficitReport,
};
use minkflow_core::{GeometricSummary, SpaceKind};
use proptest::prelude::*;

fn sphere_deficit(space: SpaceKind, r: f64) -> DeficitReport {
    let s = sphere_geometry(space, r).unwrap();
    match space {
        SpaceKind::Euclidean => minkowski_deficit_euclidean(s),
        SpaceKind::Hyperbolic => minkowski_deficit_hyperbolic(s),
        SpaceKind::Spherical => minkowski_deficit_spherical(s).unwrap(),
    }
}

#[test]
fn spheres_are_equality_cases() {
    let grids = [
        (SpaceKind::Euclidean, vec![0.5, 1.0, 2.0]),
        (SpaceKind::Hyperbolic, vec![0.25, 0.5, 1.0, 2.0]),
        (SpaceKind::Spherical, vec![PI / 12.0, PI / 6.0, PI / 4.0, PI / 3.0]),
    ];
    for (space, radii) in grids {
        for r in radii {
            let d = sphere_deficit(space, r);
            assert!(d.deficit.abs() <= 1e-9 && d.equality && d.holds, "{space} r={r}: {d:?}");
        }
    }
}

#[test]
fn hyperbolic_deficit_is_four_times_asymptotic_gap() {
    let mut r = rng(51);
    for _ in 0..1000 {
        let s = random_summary(&mut r, SpaceKind::Hyperbolic);
        let d = minkowski_deficit_hyperbolic(s).deficit;
        let scale = s.total_mean_curvature.abs() + 4.0 * s.volume.abs() + 1.0;
        assert!((d - 4.0 * hyperbolic_asymptotic_deficit(s)).abs() <= 1e-10 * scale);
    }
}

fn sign(x: f64, zero: f64) -> i32 {
    if x.abs() < zero {
        0
    } else if x > 0.0 {
        1
    } else {
        -1
    }
}

#[test]
fn rigidity_indicator_tracks_spherical_deficit_sign() {
    let mut r = rng(52);
    for _ in 0..1000 {
        let s = random_summary(&mut r, SpaceKind::Spherical);
        let d = minkowski_deficit_spherical(s).unwrap().deficit;
        let r_sph = spherical_rigidity_indicator(s);
        // R² − 1 = deficit / (16π²), so compare on that scale.
        assert_eq!(sign(r_sph - 1.0, 1e-12), sign(d / (16.0 * PI * PI), 1e-12), "{s:?}");
    }
    let sphere = sphere_geometry(SpaceKind::Spherical, 0.9).unwrap();
    assert_eq!(sign(spherical_rigidity_indicator(sphere) - 1.0, 1e-12), 0);
}

#[test]
fn spherical_deficit_exceeds_euclidean_by_four_area_squared() {
    // 16πA₀(1 − A₀/4π) ≤ 16πA₀, so the spherical right-hand side is the
    // smaller one and its deficit the larger, by exactly 4A₀².
    let mut r = rng(53);
    for _ in 0..1000 {
        let s = random_summary(&mut r, SpaceKind::Spherical);
        let euclidean = minkowski_deficit_euclidean(s).deficit;
        let spherical = minkowski_deficit_spherical(s).unwrap().deficit;
        assert!(spherical >= euclidean);
        let scale = s.total_mean_curvature.powi(2) + 16.0 * PI * s.area;
        assert!((spherical - euclidean - 4.0 * s.area * s.area).abs() <= 1e-12 * scale);
    }
}

#[test]
fn weaker_inequalities_hold_on_spheres_and_disks() {
    for r in (1..=50).map(|i| i as f64 * 0.1) {
        for s in [sphere_geometry(SpaceKind::Hyperbolic, r).unwrap(), geodesic_disk_limits(r).unwrap()] {
            let reports = weaker_inequalities_hyperbolic(s);
            assert!(reports.iter().filter(|d| is_asserted(&d.name)).all(|d| d.deficit >= -1e-9), "r={r}");
            assert!(minkowski_deficit_hyperbolic(s).deficit >= -1e-9 * s.total_mean_curvature.max(1.0), "r={r}");
        }
    }
}

/// π²/(16 − π²), the cosh R at which 4π⁴ sinh²R = 16πA(1 + A/4π) on disks.
fn threshold_oracle() -> f64 {
    (PI * PI / (16.0 - PI * PI)).acosh()
}

#[test]
fn counterexample_threshold_matches_closed_form() {
    let scan = counterexample_scan(0.1, 5.0, 0.05).unwrap();
    let threshold = scan.bisected_threshold.unwrap();
    assert!((threshold - threshold_oracle()).abs() < 1e-8, "{threshold} vs {}", threshold_oracle());
    assert!(scan.first_violation_r.unwrap() >= threshold);
    assert!(scan.first_violation_r.unwrap() - threshold <= 0.05 + 1e-12);
    assert!(scan.asserted_inequalities_hold);
    assert_eq!(scan.rows.len(), 99);
}

#[test]
fn false_inequality_is_sharp_on_spheres() {
    // On spheres Ȧ₀² = 64π² sinh²r cosh²r = 16πA₀(1 + A₀/4π) exactly.
    for r in (1..=40).map(|i| i as f64 * 0.1) {
        let d = false_inequality_eval(sphere_geometry(SpaceKind::Hyperbolic, r).unwrap());
        assert!(d.deficit.abs() <= 1e-12 * d.inputs.total_mean_curvature.powi(2), "r={r}: {d:?}");
    }
}

#[test]
fn small_surfaces_reduce_to_euclidean_form() {
    for x in [1e-2, 1e-3, 1e-4] {
        for excess in [0.0, 0.5, 2.0] {
            // Ȧ₀ = 4πx, and A₀ below the Euclidean equality value by `excess`·x³.
            let ad = 4.0 * PI * x;
            let area = ad * ad / (16.0 * PI) * (1.0 - excess * x);
            let red = small_surface_reduction(GeometricSummary::new(area, ad, 0.0));
            assert!(red.remainder_within_cubic_bound(), "x={x}: {red:?}");
        }
    }
}

#[test]
fn open_form_sweep_reports_without_asserting() {
    let family: Vec<_> = (1..=30).map(|i| geodesic_disk_limits(i as f64 * 0.1).unwrap()).collect();
    let sweep = euclidean_form_sweep(&family).unwrap();
    assert_eq!(sweep.samples, 30);
    assert!(sweep.min_theorem_deficit >= -1e-9);
    assert!(!is_asserted(&weaker_inequalities_hyperbolic(family[0])[2].name));
}

proptest! {
    #[test]
    fn reports_are_consistent(a in 0.0f64..100.0, h in 0.0f64..100.0, v in 0.0f64..50.0, tol in 1e-12f64..1.0) {
        let d = minkowski_deficit_euclidean(GeometricSummary::new(a, h, v)).with_tol(tol);
        prop_assert_eq!(d.holds, d.deficit >= -tol);
        prop_assert_eq!(d.equality, d.deficit.abs() <= tol);
        let back: DeficitReport = serde_json::from_str(&d.to_json()).unwrap();
        prop_assert_eq!(back, d);
    }
}
