//! Subdivided icosahedron on the unit parameter sphere.

use std::collections::HashMap;

pub type Vec3 = [f64; 3];

#[inline]
pub(crate) fn dot3(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub(crate) fn cross3(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

#[inline]
pub(crate) fn normalize3(a: &Vec3) -> Vec3 {
    let n = dot3(a, a).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

/// Vertex directions and outward-oriented triangles of a level-`n` icosphere:
/// 10·4ⁿ + 2 vertices, 20·4ⁿ faces.
#[derive(Debug, Clone)]
pub struct Icosphere {
    pub level: u32,
    pub directions: Vec<Vec3>,
    pub faces: Vec<[usize; 3]>,
}

impl Icosphere {
    pub fn new(level: u32) -> Self {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let raw: [Vec3; 12] = [
            [-1.0, phi, 0.0],
            [1.0, phi, 0.0],
            [-1.0, -phi, 0.0],
            [1.0, -phi, 0.0],
            [0.0, -1.0, phi],
            [0.0, 1.0, phi],
            [0.0, -1.0, -phi],
            [0.0, 1.0, -phi],
            [phi, 0.0, -1.0],
            [phi, 0.0, 1.0],
            [-phi, 0.0, -1.0],
            [-phi, 0.0, 1.0],
        ];
        let mut directions: Vec<Vec3> = raw.iter().map(normalize3).collect();
        let mut faces: Vec<[usize; 3]> = vec![
            [0, 11, 5],
            [0, 5, 1],
            [0, 1, 7],
            [0, 7, 10],
            [0, 10, 11],
            [1, 5, 9],
            [5, 11, 4],
            [11, 10, 2],
            [10, 7, 6],
            [7, 1, 8],
            [3, 9, 4],
            [3, 4, 2],
            [3, 2, 6],
            [3, 6, 8],
            [3, 8, 9],
            [4, 9, 5],
            [2, 4, 11],
            [6, 2, 10],
            [8, 6, 7],
            [9, 8, 1],
        ];

        for _ in 0..level {
            let mut midpoint: HashMap<(usize, usize), usize> = HashMap::with_capacity(faces.len() * 2);
            let mut next = Vec::with_capacity(faces.len() * 4);
            let mut mid = |a: usize, b: usize, dirs: &mut Vec<Vec3>| -> usize {
                let key = if a < b { (a, b) } else { (b, a) };
                *midpoint.entry(key).or_insert_with(|| {
                    let (pa, pb) = (dirs[a], dirs[b]);
                    dirs.push(normalize3(&[pa[0] + pb[0], pa[1] + pb[1], pa[2] + pb[2]]));
                    dirs.len() - 1
                })
            };
            for &[a, b, c] in &faces {
                let ab = mid(a, b, &mut directions);
                let bc = mid(b, c, &mut directions);
                let ca = mid(c, a, &mut directions);
                next.push([a, ab, ca]);
                next.push([b, bc, ab]);
                next.push([c, ca, bc]);
                next.push([ab, bc, ca]);
            }
            faces = next;
        }

        Icosphere { level, directions, faces }
    }

    /// Applies an orthogonal matrix to every direction (combinatorics unchanged).
    pub fn rotated(&self, m: &[[f64; 3]; 3]) -> Self {
        let directions = self
            .directions
            .iter()
            .map(|d| {
                [
                    m[0][0] * d[0] + m[0][1] * d[1] + m[0][2] * d[2],
                    m[1][0] * d[0] + m[1][1] * d[1] + m[1][2] * d[2],
                    m[2][0] * d[0] + m[2][1] * d[1] + m[2][2] * d[2],
                ]
            })
            .collect();
        Icosphere { level: self.level, directions, faces: self.faces.clone() }
    }
}

pub(crate) fn edge_count(faces: &[[usize; 3]]) -> usize {
    let mut edges = std::collections::HashSet::with_capacity(faces.len() * 2);
    for &[a, b, c] in faces {
        for (i, j) in [(a, b), (b, c), (c, a)] {
            edges.insert(if i < j { (i, j) } else { (j, i) });
        }
    }
    edges.len()
}

/// Solid angle subtended at the origin by the flat triangle (a, b, c) of unit
/// vectors (Van Oosterom–Strackee). Positive for counter-clockwise faces seen
/// from outside.
pub(crate) fn triangle_solid_angle(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    let triple = dot3(a, &cross3(b, c));
    let denom = 1.0 + dot3(a, b) + dot3(b, c) + dot3(c, a);
    2.0 * triple.atan2(denom)
}
