//! Per-vertex shape-operator estimates used to flag non-convex samples.

use log::warn;
use nalgebra::{DMatrix, DVector, Matrix2};
use rayon::prelude::*;
use serde::Serialize;

use super::mesh::SurfaceMesh;
use crate::space::{axpby, inner, log_raw, normalize_raw, project_raw, SpaceKind, Vec4};

/// Unknowns of the height fit z = a x² + b xy + c y² + d x + e y.
const FIT_UNKNOWNS: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct ConvexityReport {
    /// Smallest eigenvalue of the fitted shape operator over all vertices.
    pub min_principal_curvature_estimate: f64,
    pub is_plausibly_convex: bool,
    pub tolerance: f64,
    /// Vertex where the minimum occurs.
    pub argmin_vertex: usize,
    /// Vertices whose one-ring was too small for the fit.
    pub skipped_vertices: usize,
}

/// Tangent frame (e₁, e₂) completing the unit normal at `p` to an
/// orthonormal basis of the tangent space.
fn tangent_frame(space: SpaceKind, p: &Vec4, normal: &Vec4) -> Option<(Vec4, Vec4)> {
    let mut frame: Vec<Vec4> = Vec::with_capacity(2);
    for axis in 0..space.ambient_dim() {
        let mut e = [0.0; 4];
        e[axis] = 1.0;
        let mut v = project_raw(space, p, &e);
        for b in std::iter::once(normal).chain(frame.iter()) {
            v = axpby(1.0, &v, -inner(space, &v, b), b);
        }
        // Skip candidates nearly in the span already built.
        let n_sq = inner(space, &v, &v);
        if n_sq > 1e-3 * inner(space, &project_raw(space, p, &e), &project_raw(space, p, &e)).max(1e-300) {
            frame.push(normalize_raw(space, &v)?);
            if frame.len() == 2 {
                return Some((frame[0], frame[1]));
            }
        }
    }
    None
}

/// Least-squares quadratic height fit over the one-ring in geodesic normal
/// coordinates at vertex `i`; returns the smaller principal curvature, or
/// `None` when the ring is too small.
fn vertex_min_curvature(mesh: &SurfaceMesh, i: usize, neighbors: &[usize]) -> Option<f64> {
    if neighbors.len() < FIT_UNKNOWNS {
        return None;
    }
    let space = mesh.space();
    let p = mesh.vertex(i);
    let p = p.raw();
    let normal = mesh.normal(i).dir;
    let (e1, e2) = tangent_frame(space, p, &normal)?;
    let rows = neighbors.len();
    let mut a = DMatrix::<f64>::zeros(rows, FIT_UNKNOWNS);
    let mut z = DVector::<f64>::zeros(rows);
    for (r, &j) in neighbors.iter().enumerate() {
        let v = log_raw(space, p, mesh.vertex(j).raw());
        let (x, y) = (inner(space, &v, &e1), inner(space, &v, &e2));
        a[(r, 0)] = x * x;
        a[(r, 1)] = x * y;
        a[(r, 2)] = y * y;
        a[(r, 3)] = x;
        a[(r, 4)] = y;
        z[r] = inner(space, &v, &normal);
    }
    let coef = a.svd(true, true).solve(&z, 1e-14).ok()?;
    // Outward normal: a convex surface bends away from it, so the shape
    // operator is minus the Hessian of the height.
    let shape = Matrix2::new(-2.0 * coef[0], -coef[1], -coef[1], -2.0 * coef[2]);
    let eig = shape.symmetric_eigen();
    Some(eig.eigenvalues.min())
}

pub fn convexity_report(mesh: &SurfaceMesh) -> ConvexityReport {
    let mut neighbors: Vec<Vec<usize>> = mesh
        .vertex_rings()
        .into_iter()
        .map(|ring| ring.into_iter().flat_map(|(a, b)| [a, b]).collect())
        .collect();
    for n in &mut neighbors {
        n.sort_unstable();
        n.dedup();
    }

    let estimates: Vec<Option<f64>> =
        (0..mesh.len()).into_par_iter().map(|i| vertex_min_curvature(mesh, i, &neighbors[i])).collect();

    let mut skipped = 0;
    let mut min = f64::INFINITY;
    let mut argmin = 0;
    for (i, e) in estimates.iter().enumerate() {
        match e {
            Some(k) if *k < min => {
                min = *k;
                argmin = i;
            }
            Some(_) => {}
            None => {
                warn!("convexity fit skipped at vertex {i} (valence {})", neighbors[i].len());
                skipped += 1;
            }
        }
    }

    let tolerance = 10.0 * 4f64.powi(-(mesh.subdivision_level() as i32));
    ConvexityReport {
        min_principal_curvature_estimate: min,
        is_plausibly_convex: min >= -tolerance,
        tolerance,
        argmin_vertex: argmin,
        skipped_vertices: skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_radial_graph, RadialGraphSpec};

    #[test]
    fn unit_sphere_has_unit_curvature() {
        let mesh = build_radial_graph(&RadialGraphSpec::sphere(SpaceKind::Euclidean, 1.0), 4).unwrap();
        let report = convexity_report(&mesh);
        assert!((report.min_principal_curvature_estimate - 1.0).abs() < 1e-2, "{report:?}");
        assert!(report.is_plausibly_convex);
        assert_eq!(report.skipped_vertices, 0);
    }

    #[test]
    fn geodesic_spheres_have_model_curvature() {
        // Principal curvature of a geodesic sphere: coth r on H³, cot r on S³.
        let h = build_radial_graph(&RadialGraphSpec::sphere(SpaceKind::Hyperbolic, 1.0), 4).unwrap();
        let k = convexity_report(&h).min_principal_curvature_estimate;
        assert!((k - 1.0 / 1f64.tanh()).abs() < 2e-2, "{k}");
        let s = build_radial_graph(&RadialGraphSpec::sphere(SpaceKind::Spherical, 0.6), 4).unwrap();
        let k = convexity_report(&s).min_principal_curvature_estimate;
        assert!((k - 1.0 / 0.6f64.tan()).abs() < 2e-2, "{k}");
    }
}
