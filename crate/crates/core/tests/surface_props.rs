mod common;

use std::f64::consts::PI;

use common::{rel, rng, unit_vector3};
use minkflow_core::closed_form::sphere_geometry;
use minkflow_core::space::inner;
use minkflow_core::surface::{
    build_radial_graph, convexity_report, enclosed_volume, summarize, surface_area, total_mean_curvature,
    Icosphere, DEFAULT_MEAN_CURVATURE_STEP,
};
use minkflow_core::{GeomError, RadialGraphSpec, SpaceKind, SurfaceMesh};
use rand::seq::SliceRandom;
use rand::Rng;

fn sphere_radius(space: SpaceKind) -> f64 {
    match space {
        SpaceKind::Spherical => 0.7,
        _ => 1.0,
    }
}

#[test]
fn sphere_errors_shrink_fourfold_per_level() {
    for space in SpaceKind::ALL {
        let r = sphere_radius(space);
        let exact = sphere_geometry(space, r).unwrap();
        let mut previous: Option<[f64; 3]> = None;
        for level in 2..=5 {
            let s = summarize(&build_radial_graph(&RadialGraphSpec::sphere(space, r), level).unwrap()).unwrap();
            let errs = [
                rel(s.area, exact.area),
                rel(s.total_mean_curvature, exact.total_mean_curvature),
                rel(s.volume, exact.volume),
            ];
            if let Some(prev) = previous {
                // Radial volume is exact per ray, so on spheres the volume error
                // is pure rounding.
                for (k, (e, p)) in errs.iter().zip(prev).enumerate() {
                    assert!(*e <= 0.3 * p || *e < 1e-13, "{space} level {level} quantity {k}: {e:e} vs {p:e}");
                }
            }
            previous = Some(errs);
        }
    }
}

fn random_spec(r: &mut impl Rng, space: SpaceKind, max_amp: f64) -> RadialGraphSpec {
    let base = match space {
        SpaceKind::Spherical => r.gen_range(0.3..1.2),
        _ => r.gen_range(0.3..2.0),
    };
    let mut spec = RadialGraphSpec::sphere(space, base);
    for _ in 0..r.gen_range(1..=3) {
        spec = spec.with_perturbation(r.gen_range(1..9), r.gen_range(-max_amp..max_amp));
    }
    spec
}

#[test]
fn normals_point_outward_on_perturbed_graphs() {
    let mut r = rng(31);
    for space in SpaceKind::ALL {
        for _ in 0..10 {
            let mesh = build_radial_graph(&random_spec(&mut r, space, 0.15), 3).unwrap();
            for i in 0..mesh.len() {
                let n = mesh.normal(i).dir;
                assert!(inner(space, &n, &mesh.radial_direction(i)) > 0.0, "{space} vertex {i}");
                assert!((inner(space, &n, &n) - 1.0).abs() < 1e-9);
            }
            let total: f64 = mesh.solid_angle_weights().iter().sum();
            assert!((total - 4.0 * PI).abs() < 1e-12);
        }
    }
}

fn rotation(axis: [f64; 3], angle: f64) -> [[f64; 3]; 3] {
    let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    let [x, y, z] = [axis[0] / n, axis[1] / n, axis[2] / n];
    let (s, c) = angle.sin_cos();
    let k = 1.0 - c;
    [
        [c + x * x * k, x * y * k - z * s, x * z * k + y * s],
        [y * x * k + z * s, c + y * y * k, y * z * k - x * s],
        [z * x * k - y * s, z * y * k + x * s, c + z * z * k],
    ]
}

/// σ with `rotated.directions[i] == base.directions[σ(i)]`.
fn matching_permutation(base: &Icosphere, rotated: &Icosphere) -> Option<Vec<usize>> {
    rotated
        .directions
        .iter()
        .map(|d| {
            base.directions.iter().position(|e| (0..3).all(|k| (d[k] - e[k]).abs() < 1e-9))
        })
        .collect()
}

#[test]
fn mean_curvature_is_invariant_under_icosahedral_symmetry() {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let ico = Icosphere::new(3);
    let symmetries = [
        rotation([-1.0, phi, 0.0], 2.0 * PI / 5.0),
        rotation([0.0, 0.0, 1.0], PI),
        rotation([1.0, 1.0, 1.0], 2.0 * PI / 3.0),
    ];
    for space in SpaceKind::ALL {
        let spec = RadialGraphSpec::sphere(space, sphere_radius(space));
        let mesh = SurfaceMesh::build_on(&spec, &ico).unwrap();
        let reference = total_mean_curvature(&mesh, DEFAULT_MEAN_CURVATURE_STEP).unwrap();
        for m in &symmetries {
            let turned = ico.rotated(m);
            let sigma = matching_permutation(&ico, &turned).expect("rotation is an icosahedral symmetry");
            let relabelled = SurfaceMesh::build_on(&spec, &turned).unwrap().permuted(&sigma).unwrap();
            let value = total_mean_curvature(&relabelled, DEFAULT_MEAN_CURVATURE_STEP).unwrap();
            assert!(rel(value, reference) < 1e-9, "{space}: {value} vs {reference}");
        }
    }
}

#[test]
fn summaries_ignore_vertex_labels() {
    let mut r = rng(32);
    for space in SpaceKind::ALL {
        let mesh = build_radial_graph(&random_spec(&mut r, space, 0.05), 3).unwrap();
        let mut perm: Vec<usize> = (0..mesh.len()).collect();
        perm.shuffle(&mut r);
        let shuffled = mesh.permuted(&perm).unwrap();
        let (a, b) = (summarize(&mesh).unwrap(), summarize(&shuffled).unwrap());
        assert!(rel(a.area, b.area) < 1e-12);
        assert!(rel(a.volume, b.volume) < 1e-12);
        assert!(rel(a.total_mean_curvature, b.total_mean_curvature) < 1e-9);
    }
    let mesh = build_radial_graph(&RadialGraphSpec::sphere(SpaceKind::Euclidean, 1.0), 1).unwrap();
    assert!(mesh.permuted(&[0; 42]).is_err());
}

#[test]
fn area_and_volume_are_rotation_stable() {
    // A generic rotation changes the sampling, so agreement is at the
    // discretisation level only.
    let mut r = rng(33);
    let spec = RadialGraphSpec::sphere(SpaceKind::Hyperbolic, 1.0).with_perturbation(8, 0.05);
    let base = summarize(&build_radial_graph(&spec, 5).unwrap()).unwrap();
    for _ in 0..3 {
        let m = rotation(unit_vector3(&mut r), r.gen_range(0.0..PI));
        let turned = summarize(&SurfaceMesh::build_on(&spec, &Icosphere::new(5).rotated(&m)).unwrap()).unwrap();
        assert!(rel(turned.area, base.area) < 1e-3);
        assert!(rel(turned.volume, base.volume) < 1e-3);
        assert!(rel(turned.total_mean_curvature, base.total_mean_curvature) < 1e-3);
    }
}

/// Minimum principal curvature of the Euclidean surface of revolution
/// ρ(θ) = 1 + a(3cos²θ − 1), by brute force over the polar angle.
fn revolution_min_curvature(a: f64) -> f64 {
    let rho = |t: f64| 1.0 + a * (3.0 * t.cos().powi(2) - 1.0);
    let d1 = |t: f64| -3.0 * a * (2.0 * t).sin();
    let d2 = |t: f64| -6.0 * a * (2.0 * t).cos();
    let mut min = f64::INFINITY;
    for i in 1..10000 {
        let t = PI * i as f64 / 10000.0;
        let (r, r1, r2) = (rho(t), d1(t), d2(t));
        let speed = (r * r + r1 * r1).sqrt();
        let meridian = (r * r + 2.0 * r1 * r1 - r * r2) / speed.powi(3);
        let parallel = (r * t.sin() - r1 * t.cos()) / (speed * r * t.sin());
        min = min.min(meridian).min(parallel);
    }
    min
}

#[test]
fn convexity_estimate_agrees_with_analytic_curvature() {
    for (amplitude, convex) in [(0.02, true), (0.9, false)] {
        let oracle = revolution_min_curvature(amplitude);
        assert_eq!(oracle > 0.0, convex, "oracle {oracle}");
        let spec = RadialGraphSpec::sphere(SpaceKind::Euclidean, 1.0).with_perturbation(8, amplitude);
        let report = convexity_report(&build_radial_graph(&spec, 5).unwrap());
        assert_eq!(report.is_plausibly_convex, convex, "{report:?}");
        if convex {
            assert!((report.min_principal_curvature_estimate - oracle).abs() < 0.05, "{report:?} vs {oracle}");
        }
    }
}

#[test]
fn convexity_flags_dented_surfaces_in_curved_spaces() {
    for space in [SpaceKind::Hyperbolic, SpaceKind::Spherical] {
        let base = 0.5;
        let bumpy = RadialGraphSpec::sphere(space, base).with_perturbation(8, 0.9);
        assert!(!convexity_report(&build_radial_graph(&bumpy, 4).unwrap()).is_plausibly_convex, "{space}");
        let mild = RadialGraphSpec::sphere(space, base).with_perturbation(8, 0.02);
        assert!(convexity_report(&build_radial_graph(&mild, 4).unwrap()).is_plausibly_convex, "{space}");
    }
}

#[test]
fn invalid_surfaces_are_rejected() {
    let neg = RadialGraphSpec::sphere(SpaceKind::Euclidean, 1.0).with_perturbation(0, -1.5);
    assert!(matches!(build_radial_graph(&neg, 2), Err(GeomError::Spec(_))));
    let wide = RadialGraphSpec::sphere(SpaceKind::Spherical, 1.5).with_perturbation(8, 0.1);
    assert!(matches!(build_radial_graph(&wide, 2), Err(GeomError::Spec(_))));
}

#[test]
fn estimators_handle_large_hyperbolic_spheres() {
    let exact = sphere_geometry(SpaceKind::Hyperbolic, 4.0).unwrap();
    let mesh = build_radial_graph(&RadialGraphSpec::sphere(SpaceKind::Hyperbolic, 4.0), 5).unwrap();
    assert!(rel(surface_area(&mesh).unwrap(), exact.area) < 1e-2);
    assert!(rel(enclosed_volume(&mesh).unwrap(), exact.volume) < 1e-2);
    let h = total_mean_curvature(&mesh, DEFAULT_MEAN_CURVATURE_STEP).unwrap();
    assert!(rel(h, exact.total_mean_curvature) < 1e-2, "{h} vs {}", exact.total_mean_curvature);
}
