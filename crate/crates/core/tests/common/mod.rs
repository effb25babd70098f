#![allow(dead_code)]

use std::f64::consts::PI;

use minkflow_core::space::{exp_map, inner, project_to_tangent};
use minkflow_core::{GeometricSummary, Point, SpaceKind, TangentVector, Vec4};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian4(r: &mut impl Rng) -> Vec4 {
    // Box–Muller is plenty for direction sampling.
    let mut out = [0.0; 4];
    for pair in out.chunks_mut(2) {
        let u1: f64 = r.gen_range(f64::EPSILON..1.0);
        let u2: f64 = r.gen_range(0.0..1.0);
        let m = (-2.0 * u1.ln()).sqrt();
        pair[0] = m * (2.0 * PI * u2).cos();
        pair[1] = m * (2.0 * PI * u2).sin();
    }
    out
}

pub fn unit_vector3(r: &mut impl Rng) -> [f64; 3] {
    loop {
        let g = gaussian4(r);
        let n = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
        if n > 1e-6 {
            return [g[0] / n, g[1] / n, g[2] / n];
        }
    }
}

/// Random unit tangent vector at `p`.
pub fn unit_tangent(r: &mut impl Rng, p: Point) -> TangentVector {
    let space = p.space();
    loop {
        let g = gaussian4(r);
        let w = project_to_tangent(&p, &g[..space.ambient_dim()]).unwrap();
        let mut v = [0.0; 4];
        v[..w.len()].copy_from_slice(&w);
        let n = inner(space, &v, &v);
        if n > 1e-6 {
            let v: Vec<f64> = w.iter().map(|x| x / n.sqrt()).collect();
            return TangentVector::new(p, &v).unwrap();
        }
    }
}

/// Random point at distance up to `spread` from the basepoint.
pub fn random_point(r: &mut impl Rng, space: SpaceKind, spread: f64) -> Point {
    let v = unit_tangent(r, space.basepoint());
    exp_map(&v, r.gen_range(0.0..spread)).unwrap()
}

/// Largest admissible time of the flow window, reduced by `margin`.
pub fn window_end(space: SpaceKind, fallback: f64) -> f64 {
    match space {
        SpaceKind::Spherical => PI / 2.0,
        _ => fallback,
    }
}

/// Random summary of a surface plausible for `space`: positive area and
/// total mean curvature, non-negative volume, A₀ < 4π on S³.
pub fn random_summary(r: &mut impl Rng, space: SpaceKind) -> GeometricSummary {
    match space {
        SpaceKind::Spherical => GeometricSummary::new(
            r.gen_range(0.01..4.0 * PI - 0.01),
            r.gen_range(0.0..60.0),
            r.gen_range(0.0..PI * PI),
        ),
        _ => GeometricSummary::new(r.gen_range(0.01..200.0), r.gen_range(0.01..300.0), r.gen_range(0.0..100.0)),
    }
}

pub fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Order estimates log₂(eᵢ / eᵢ₊₁) for errors at successively halved scales.
pub fn halving_orders(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}
