//! Triangle meshes of radial-graph surfaces.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::graph::RadialGraphSpec;
use super::icosphere::{edge_count, normalize3, triangle_solid_angle, Icosphere, Vec3};
use crate::error::{GeomError, Result};
use crate::space::{
    exp_raw, inner, metric_cross, normalize_raw, project_raw, radial_direction_raw, scale, sub, distance_raw,
    Point, SpaceKind, TangentVector, Vec4,
};

/// A sampled closed surface, star-shaped about the basepoint of its space.
///
/// Vertex `i` sits at geodesic distance `radii[i]` from the center in the
/// parameter direction `directions[i]`. `normals[i]` is the outward unit
/// normal at vertex `i`, and `solid_angle_weights` is a quadrature on the
/// parameter sphere summing to 4π.
#[derive(Debug, Clone)]
pub struct SurfaceMesh {
    space: SpaceKind,
    vertices: Vec<Vec4>,
    directions: Vec<Vec3>,
    radii: Vec<f64>,
    faces: Vec<[usize; 3]>,
    normals: Vec<Vec4>,
    solid_angle_weights: Vec<f64>,
    subdivision_level: u32,
}

/// Samples `spec` on a level-`subdivision` icosphere.
pub fn build_radial_graph(spec: &RadialGraphSpec, subdivision: u32) -> Result<SurfaceMesh> {
    SurfaceMesh::build_on(spec, &Icosphere::new(subdivision))
}

impl SurfaceMesh {
    /// Samples `spec` at the directions of a prepared icosphere.
    pub fn build_on(spec: &RadialGraphSpec, ico: &Icosphere) -> Result<Self> {
        spec.validate()?;
        let space = spec.space;
        let center = *spec.center().raw();
        let radii = ico.directions.iter().map(|&u| spec.checked_radius(u)).collect::<Result<Vec<f64>>>()?;
        let vertices: Vec<Vec4> = ico
            .directions
            .iter()
            .zip(&radii)
            .map(|(&u, &rho)| exp_raw(space, &center, &space.lift_direction(u), rho))
            .collect();
        let chi = ico.directions.len() as i64 - edge_count(&ico.faces) as i64 + ico.faces.len() as i64;
        if chi != 2 {
            return Err(GeomError::Construction(format!("Euler characteristic {chi} != 2")));
        }
        Self::assemble(space, vertices, ico.directions.clone(), radii, ico.faces.clone(), ico.level)
    }

    /// Rebuilds a mesh from moved vertices: directions, radii, weights and
    /// normals are recomputed from the positions relative to the center.
    pub(crate) fn from_vertices(space: SpaceKind, vertices: Vec<Vec4>, faces: Vec<[usize; 3]>, level: u32) -> Result<Self> {
        let center = *space.basepoint().raw();
        let mut directions = Vec::with_capacity(vertices.len());
        let mut radii = Vec::with_capacity(vertices.len());
        for v in &vertices {
            let s = space.spatial(&sub(v, &center));
            let len = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
            if !(len > 0.0) {
                return Err(GeomError::Construction("vertex collapsed onto the center".into()));
            }
            directions.push(normalize3(&s));
            radii.push(distance_raw(space, &center, v));
        }
        Self::assemble(space, vertices, directions, radii, faces, level)
    }

    fn assemble(
        space: SpaceKind,
        vertices: Vec<Vec4>,
        directions: Vec<Vec3>,
        radii: Vec<f64>,
        faces: Vec<[usize; 3]>,
        subdivision_level: u32,
    ) -> Result<Self> {
        let solid_angle_weights = solid_angle_weights(&directions, &faces);
        let normals = vertex_normals(space, &vertices, &faces)?;
        Ok(SurfaceMesh { space, vertices, directions, radii, faces, normals, solid_angle_weights, subdivision_level })
    }

    pub fn space(&self) -> SpaceKind {
        self.space
    }

    pub fn center(&self) -> Point {
        self.space.basepoint()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Point {
        Point::from_raw(self.space, self.vertices[i])
    }

    pub fn vertices(&self) -> impl Iterator<Item = Point> + '_ {
        self.vertices.iter().map(move |&v| Point::from_raw(self.space, v))
    }

    pub(crate) fn raw_vertices(&self) -> &[Vec4] {
        &self.vertices
    }

    pub fn directions(&self) -> &[Vec3] {
        &self.directions
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn normal(&self, i: usize) -> TangentVector {
        TangentVector::from_raw(self.vertex(i), self.normals[i])
    }

    pub(crate) fn raw_normals(&self) -> &[Vec4] {
        &self.normals
    }

    pub fn solid_angle_weights(&self) -> &[f64] {
        &self.solid_angle_weights
    }

    pub fn subdivision_level(&self) -> u32 {
        self.subdivision_level
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - edge_count(&self.faces) as i64 + self.faces.len() as i64
    }

    /// Unit tangent at vertex `i` pointing away from the center.
    pub fn radial_direction(&self, i: usize) -> Vec4 {
        radial_direction_raw(self.space, self.center().raw(), &self.vertices[i])
    }

    /// Relabels vertices so that old vertex `i` becomes vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&j| j >= n || std::mem::replace(&mut seen[j], true)) {
            return Err(GeomError::input("not a permutation of the vertex set"));
        }
        let mut out = self.clone();
        for (i, &j) in perm.iter().enumerate() {
            out.vertices[j] = self.vertices[i];
            out.directions[j] = self.directions[i];
            out.radii[j] = self.radii[i];
            out.normals[j] = self.normals[i];
            out.solid_angle_weights[j] = self.solid_angle_weights[i];
        }
        out.faces = self.faces.iter().map(|f| [perm[f[0]], perm[f[1]], perm[f[2]]]).collect();
        Ok(out)
    }

    /// Incident faces of every vertex, each as the (next, previous) pair in
    /// counter-clockwise order around the vertex.
    pub(crate) fn vertex_rings(&self) -> Vec<Vec<(usize, usize)>> {
        vertex_rings(self.vertices.len(), &self.faces)
    }
}

pub(crate) fn vertex_rings(n: usize, faces: &[[usize; 3]]) -> Vec<Vec<(usize, usize)>> {
    let mut rings = vec![Vec::with_capacity(6); n];
    for &[a, b, c] in faces {
        rings[a].push((b, c));
        rings[b].push((c, a));
        rings[c].push((a, b));
    }
    rings
}

/// One third of each incident face's solid angle, rescaled to total 4π.
fn solid_angle_weights(directions: &[Vec3], faces: &[[usize; 3]]) -> Vec<f64> {
    let mut w = vec![0.0; directions.len()];
    for &[a, b, c] in faces {
        let omega = triangle_solid_angle(&directions[a], &directions[b], &directions[c]) / 3.0;
        w[a] += omega;
        w[b] += omega;
        w[c] += omega;
    }
    let total = crate::sum::pairwise_sum(&w);
    let k = 4.0 * PI / total;
    w.iter_mut().for_each(|x| *x *= k);
    w
}

/// Stereographic chart centred at `p` (the Poincaré ball on H³), written in
/// the tangent space at `p`. Geodesic spheres through `p` map to round
/// spheres through the origin and the differential at `p` is conformal.
#[inline]
fn chart(space: SpaceKind, p: &Vec4, q: &Vec4) -> Vec4 {
    let w = project_raw(space, p, &sub(q, p));
    match space {
        SpaceKind::Euclidean => w,
        SpaceKind::Spherical => scale(1.0 / (1.0 + inner(space, q, p)), &w),
        SpaceKind::Hyperbolic => scale(1.0 / (1.0 - inner(space, q, p)), &w),
    }
}

/// Vertex normals from face normals with Max's weights (sin α / (|e₁||e₂|))
/// evaluated in the stereographic chart at each vertex. The weights make the
/// normal exact whenever the one-ring lies on a round sphere, which in the
/// chart includes every geodesic sphere of the model space.
fn vertex_normals(space: SpaceKind, vertices: &[Vec4], faces: &[[usize; 3]]) -> Result<Vec<Vec4>> {
    let rings = vertex_rings(vertices.len(), faces);
    let center = *space.basepoint().raw();
    (0..vertices.len())
        .into_par_iter()
        .map(|i| {
            let p = &vertices[i];
            let mut acc = [0.0; 4];
            for &(a, b) in &rings[i] {
                let wa = chart(space, p, &vertices[a]);
                let wb = chart(space, p, &vertices[b]);
                let (la, lb, lab) = (inner(space, &wa, &wa), inner(space, &wb, &wb), inner(space, &wa, &wb));
                let gram = la * lb - lab * lab;
                let face_normal = normalize_raw(space, &metric_cross(space, p, &wa, &wb));
                let face_normal = match face_normal {
                    Some(n) if gram > 0.0 => n,
                    _ => {
                        return Err(GeomError::Construction(format!(
                            "degenerate face normal at vertex {i} (face with {a}, {b})"
                        )))
                    }
                };
                let weight = gram.sqrt() / (la * lb);
                for k in 0..4 {
                    acc[k] += weight * face_normal[k];
                }
            }
            let acc = project_raw(space, p, &acc);
            let n = normalize_raw(space, &acc)
                .ok_or_else(|| GeomError::Construction(format!("vanishing vertex normal at {i}")))?;
            let radial = radial_direction_raw(space, &center, p);
            Ok(if inner(space, &n, &radial) < 0.0 { scale(-1.0, &n) } else { n })
        })
        .collect()
}
