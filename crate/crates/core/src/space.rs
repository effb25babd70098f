//! Exact geometry of the three model spaces.
//!
//! Every space is realised inside a flat ambient space so that geodesics are
//! closed-form linear combinations:
//!
//! | curvature | model | ambient | inner product |
//! |-----------|-------|---------|---------------|
//! | 0  | R³                       | R³      | Euclidean |
//! | +1 | unit sphere ⟨p,p⟩ = 1    | R⁴      | Euclidean |
//! | −1 | hyperboloid ⟨p,p⟩ = −1, p₀ > 0 | R^{1,3} | −a₀b₀ + a₁b₁ + a₂b₂ + a₃b₃ |
//!
//! Coordinates are stored as `[f64; 4]` in every space; the Euclidean model
//! keeps its fourth slot at zero. Public entry points that accept slices check
//! the ambient dimension.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

pub type Vec4 = [f64; 4];

/// Residual tolerance for the manifold constraint on points.
pub const POINT_TOL: f64 = 1e-12;
/// Tolerance on unit length and tangency of exp-map directions.
pub const TANGENT_TOL: f64 = 1e-9;

/// One of the three simply connected constant-curvature 3-spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Euclidean,
    Hyperbolic,
    Spherical,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 3] = [SpaceKind::Euclidean, SpaceKind::Hyperbolic, SpaceKind::Spherical];

    pub fn curvature(self) -> i32 {
        match self {
            SpaceKind::Euclidean => 0,
            SpaceKind::Hyperbolic => -1,
            SpaceKind::Spherical => 1,
        }
    }

    pub fn from_curvature(k: i32) -> Result<Self> {
        match k {
            0 => Ok(SpaceKind::Euclidean),
            -1 => Ok(SpaceKind::Hyperbolic),
            1 => Ok(SpaceKind::Spherical),
            _ => Err(GeomError::input(format!("curvature must be -1, 0 or +1, got {k}"))),
        }
    }

    pub fn ambient_dim(self) -> usize {
        match self {
            SpaceKind::Euclidean => 3,
            _ => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Euclidean => "euclidean",
            SpaceKind::Hyperbolic => "hyperbolic",
            SpaceKind::Spherical => "spherical",
        }
    }

    /// Canonical basepoint: the origin of R³, or (1,0,0,0) on S³ and H³.
    pub fn basepoint(self) -> Point {
        let coords = match self {
            SpaceKind::Euclidean => [0.0; 4],
            _ => [1.0, 0.0, 0.0, 0.0],
        };
        Point { space: self, coords }
    }

    /// Embeds a direction of the parameter sphere S² into the tangent space
    /// at [`SpaceKind::basepoint`].
    pub fn lift_direction(self, u: [f64; 3]) -> Vec4 {
        match self {
            SpaceKind::Euclidean => [u[0], u[1], u[2], 0.0],
            _ => [0.0, u[0], u[1], u[2]],
        }
    }

    /// Spatial part of ambient coordinates (the slots that carry parameter
    /// directions in [`SpaceKind::lift_direction`]).
    pub fn spatial(self, v: &Vec4) -> [f64; 3] {
        match self {
            SpaceKind::Euclidean => [v[0], v[1], v[2]],
            _ => [v[1], v[2], v[3]],
        }
    }

    /// Value of ⟨p,p⟩ on the model: 1 on S³, −1 on H³ (unused for R³).
    fn norm_sq_target(self) -> f64 {
        match self {
            SpaceKind::Euclidean => 0.0,
            SpaceKind::Hyperbolic => -1.0,
            SpaceKind::Spherical => 1.0,
        }
    }
}

impl std::fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SpaceKind {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euclidean" | "0" => Ok(SpaceKind::Euclidean),
            "hyperbolic" | "-1" => Ok(SpaceKind::Hyperbolic),
            "spherical" | "1" | "+1" => Ok(SpaceKind::Spherical),
            other => Err(GeomError::input(format!("unknown space '{other}'"))),
        }
    }
}

/// A point of the model space, stored in ambient coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    space: SpaceKind,
    coords: Vec4,
}

impl Point {
    /// Validates the manifold constraint (within [`POINT_TOL`], scaled by the
    /// coordinate magnitude) before accepting the coordinates.
    pub fn new(space: SpaceKind, coords: &[f64]) -> Result<Self> {
        let c = to_vec4(space, coords)?;
        let residual = constraint_residual(space, &c);
        if residual > POINT_TOL {
            return Err(GeomError::input(format!(
                "point violates the {space} constraint (residual {residual:e})"
            )));
        }
        if space == SpaceKind::Hyperbolic && c[0] <= 0.0 {
            return Err(GeomError::input("hyperboloid point must lie on the upper sheet"));
        }
        Ok(Point { space, coords: c })
    }

    pub(crate) fn from_raw(space: SpaceKind, coords: Vec4) -> Self {
        Point { space, coords }
    }

    pub fn space(&self) -> SpaceKind {
        self.space
    }

    /// Ambient coordinates, `ambient_dim` long.
    pub fn coords(&self) -> &[f64] {
        &self.coords[..self.space.ambient_dim()]
    }

    pub fn raw(&self) -> &Vec4 {
        &self.coords
    }
}

/// A tangent vector `dir` attached at `base`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector {
    pub base: Point,
    pub dir: Vec4,
}

impl TangentVector {
    pub fn new(base: Point, dir: &[f64]) -> Result<Self> {
        let space = base.space;
        let d = to_vec4(space, dir)?;
        let tangency = tangency_residual(space, &base.coords, &d);
        if tangency > TANGENT_TOL {
            return Err(GeomError::input(format!(
                "vector is not tangent at its base point (residual {tangency:e})"
            )));
        }
        Ok(TangentVector { base, dir: d })
    }

    pub(crate) fn from_raw(base: Point, dir: Vec4) -> Self {
        TangentVector { base, dir }
    }

    pub fn dir(&self) -> &[f64] {
        &self.dir[..self.base.space.ambient_dim()]
    }
}

fn to_vec4(space: SpaceKind, v: &[f64]) -> Result<Vec4> {
    let dim = space.ambient_dim();
    if v.len() != dim {
        return Err(GeomError::input(format!(
            "{space} ambient vectors have dimension {dim}, got {}",
            v.len()
        )));
    }
    let mut out = [0.0; 4];
    out[..dim].copy_from_slice(v);
    Ok(out)
}

/// Ambient inner product on raw coordinates (no dimension checks).
#[inline]
pub fn inner(space: SpaceKind, a: &Vec4, b: &Vec4) -> f64 {
    let spatial = a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
    match space {
        SpaceKind::Hyperbolic => -a[0] * b[0] + spatial,
        _ => a[0] * b[0] + spatial,
    }
}

/// Ambient inner product: Euclidean for K ∈ {0, +1}, Minkowski for K = −1.
pub fn ambient_inner(space: SpaceKind, a: &[f64], b: &[f64]) -> Result<f64> {
    let a = to_vec4(space, a)?;
    let b = to_vec4(space, b)?;
    Ok(inner(space, &a, &b))
}

/// Plain Euclidean squared length of the coordinates.
#[inline]
pub(crate) fn euclid_sq(v: &Vec4) -> f64 {
    v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]
}

#[inline]
pub(crate) fn sub(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

#[inline]
pub(crate) fn scale(s: f64, a: &Vec4) -> Vec4 {
    [s * a[0], s * a[1], s * a[2], s * a[3]]
}

#[inline]
pub(crate) fn axpby(a: f64, x: &Vec4, b: f64, y: &Vec4) -> Vec4 {
    [
        a * x[0] + b * y[0],
        a * x[1] + b * y[1],
        a * x[2] + b * y[2],
        a * x[3] + b * y[3],
    ]
}

/// Manifold-constraint residual |⟨p,p⟩ − κ| relative to the Euclidean size of
/// the coordinates. On H³ the coordinates grow like cosh of the distance, so
/// an absolute residual cannot be resolved below ~ulp(‖p‖²).
pub fn constraint_residual(space: SpaceKind, p: &Vec4) -> f64 {
    match space {
        SpaceKind::Euclidean => p[3].abs(),
        _ => (inner(space, p, p) - space.norm_sq_target()).abs() / euclid_sq(p).max(1.0),
    }
}

/// Relative tangency residual |⟨base, dir⟩| / (‖base‖ ‖dir‖).
pub fn tangency_residual(space: SpaceKind, base: &Vec4, dir: &Vec4) -> f64 {
    match space {
        SpaceKind::Euclidean => dir[3].abs(),
        _ => {
            let denom = (euclid_sq(base) * euclid_sq(dir)).sqrt().max(f64::MIN_POSITIVE);
            inner(space, base, dir).abs() / denom
        }
    }
}

/// Pushes ambient coordinates back onto the model by rescaling with
/// √|⟨p,p⟩| (and forcing the upper sheet on H³).
pub(crate) fn reproject(space: SpaceKind, p: Vec4) -> Vec4 {
    match space {
        SpaceKind::Euclidean => [p[0], p[1], p[2], 0.0],
        SpaceKind::Spherical => scale(1.0 / inner(space, &p, &p).sqrt(), &p),
        SpaceKind::Hyperbolic => {
            let n = (-inner(space, &p, &p)).sqrt();
            let q = scale(1.0 / n, &p);
            if q[0] < 0.0 {
                scale(-1.0, &q)
            } else {
                q
            }
        }
    }
}

/// Unit-speed geodesic from `base` with velocity `dir`, evaluated at `t`.
/// No validation; the caller guarantees `dir` is unit and tangent.
#[inline]
pub(crate) fn exp_raw(space: SpaceKind, base: &Vec4, dir: &Vec4, t: f64) -> Vec4 {
    match space {
        SpaceKind::Euclidean => axpby(1.0, base, t, dir),
        SpaceKind::Spherical => reproject(space, axpby(t.cos(), base, t.sin(), dir)),
        SpaceKind::Hyperbolic => reproject(space, axpby(t.cosh(), base, t.sinh(), dir)),
    }
}

/// Velocity of the geodesic [`exp_raw`] at time `t`.
#[inline]
pub(crate) fn exp_velocity_raw(space: SpaceKind, base: &Vec4, dir: &Vec4, t: f64) -> Vec4 {
    match space {
        SpaceKind::Euclidean => *dir,
        SpaceKind::Spherical => axpby(-t.sin(), base, t.cos(), dir),
        SpaceKind::Hyperbolic => axpby(t.sinh(), base, t.cosh(), dir),
    }
}

/// Geodesic exponential map: the point reached after time `t` along the
/// unit-speed geodesic with initial velocity `v`.
pub fn exp_map(v: &TangentVector, t: f64) -> Result<Point> {
    let space = v.base.space;
    if !t.is_finite() {
        return Err(GeomError::input("geodesic time must be finite"));
    }
    let norm_sq = inner(space, &v.dir, &v.dir);
    if (norm_sq - 1.0).abs() > TANGENT_TOL {
        return Err(GeomError::input(format!(
            "exp_map direction must be unit length (|v|² = {norm_sq})"
        )));
    }
    let tangency = tangency_residual(space, &v.base.coords, &v.dir);
    if tangency > TANGENT_TOL {
        return Err(GeomError::input(format!(
            "exp_map direction is not tangent (residual {tangency:e})"
        )));
    }
    Ok(Point::from_raw(space, exp_raw(space, &v.base.coords, &v.dir, t)))
}

/// Velocity of the geodesic of [`exp_map`] at time `t`: the radial
/// recombination (sin/cos or sinh/cosh) of base and direction.
pub fn transported_velocity(v: &TangentVector, t: f64) -> TangentVector {
    let space = v.base.space;
    let base = exp_raw(space, &v.base.coords, &v.dir, t);
    let dir = exp_velocity_raw(space, &v.base.coords, &v.dir, t);
    TangentVector::from_raw(Point::from_raw(space, base), dir)
}

#[inline]
pub(crate) fn project_raw(space: SpaceKind, p: &Vec4, w: &Vec4) -> Vec4 {
    match space {
        SpaceKind::Euclidean => *w,
        _ => {
            let coef = inner(space, w, p) / inner(space, p, p);
            axpby(1.0, w, -coef, p)
        }
    }
}

/// Removes the component of `w` along `p` (metric-orthogonal projection onto
/// the tangent space at `p`); identity on R³.
pub fn project_to_tangent(p: &Point, w: &[f64]) -> Result<Vec<f64>> {
    let space = p.space;
    let w = to_vec4(space, w)?;
    let out = project_raw(space, &p.coords, &w);
    Ok(out[..space.ambient_dim()].to_vec())
}

/// Geodesic distance, computed from the chord length for stability at short
/// range: d = 2·asin(c/2) on S³ and d = 2·asinh(c/2) on H³.
#[inline]
pub(crate) fn distance_raw(space: SpaceKind, p: &Vec4, q: &Vec4) -> f64 {
    let d = sub(q, p);
    let chord_sq = inner(space, &d, &d).max(0.0);
    let half = 0.5 * chord_sq.sqrt();
    match space {
        SpaceKind::Euclidean => chord_sq.sqrt(),
        SpaceKind::Spherical => 2.0 * half.min(1.0).asin(),
        SpaceKind::Hyperbolic => 2.0 * half.asinh(),
    }
}

pub fn geodesic_distance(p: &Point, q: &Point) -> Result<f64> {
    if p.space != q.space {
        return Err(GeomError::input("points belong to different spaces"));
    }
    Ok(distance_raw(p.space, &p.coords, &q.coords))
}

/// Logarithm map: tangent vector at `p` pointing to `q` whose length is the
/// geodesic distance.
#[inline]
pub(crate) fn log_raw(space: SpaceKind, p: &Vec4, q: &Vec4) -> Vec4 {
    let w = project_raw(space, p, &sub(q, p));
    let len_sq = inner(space, &w, &w);
    if len_sq <= 0.0 {
        return [0.0; 4];
    }
    let dist = distance_raw(space, p, q);
    scale(dist / len_sq.sqrt(), &w)
}

/// Unit tangent at `p` pointing away from `center` along the radial geodesic.
pub(crate) fn radial_direction_raw(space: SpaceKind, center: &Vec4, p: &Vec4) -> Vec4 {
    let back = project_raw(space, p, &sub(center, p));
    let n = inner(space, &back, &back).max(0.0).sqrt();
    if n == 0.0 {
        return [0.0; 4];
    }
    scale(-1.0 / n, &back)
}

/// Normalises a tangent vector under the ambient metric.
#[inline]
pub(crate) fn normalize_raw(space: SpaceKind, v: &Vec4) -> Option<Vec4> {
    let n_sq = inner(space, v, v);
    if !(n_sq > 0.0) || !n_sq.is_finite() {
        return None;
    }
    Some(scale(1.0 / n_sq.sqrt(), v))
}

/// Per-solid-angle radial volume F_K(ρ) = ∫₀^ρ sn_K(s)² ds, so that a geodesic
/// ball of radius r has volume 4π·F_K(r).
pub fn radial_volume_primitive(space: SpaceKind, rho: f64) -> Result<f64> {
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(GeomError::input(format!("radius must be a finite value >= 0, got {rho}")));
    }
    if space == SpaceKind::Spherical && rho >= PI {
        return Err(GeomError::domain(format!("spherical radius must be < π, got {rho}")));
    }
    Ok(radial_volume_unchecked(space, rho))
}

pub(crate) fn radial_volume_unchecked(space: SpaceKind, rho: f64) -> f64 {
    let x = 2.0 * rho;
    match space {
        SpaceKind::Euclidean => rho * rho * rho / 3.0,
        // (sinh x − x)/4 and (x − sin x)/4 lose digits for small x.
        SpaceKind::Hyperbolic if x < 0.1 => odd_series_tail(x, 1.0) / 4.0,
        SpaceKind::Spherical if x < 0.1 => odd_series_tail(x, -1.0) / 4.0,
        SpaceKind::Hyperbolic => (x.sinh() - x) / 4.0,
        SpaceKind::Spherical => (x - x.sin()) / 4.0,
    }
}

/// x³/3! + s·x⁵/5! + x⁷/7! + s·x⁹/9!: the tail of sinh (s = +1) or of
/// x − sin x (s = −1, with alternating signs flipped so the result is positive).
fn odd_series_tail(x: f64, s: f64) -> f64 {
    let x2 = x * x;
    let x3 = x2 * x;
    x3 / 6.0 * (1.0 + s * x2 / 20.0 * (1.0 + s * x2 / 42.0 * (1.0 + s * x2 / 72.0)))
}

/// Generalised cross product in four dimensions: the Euclidean vector c with
/// c·x = det(a, b, d, x) for all x.
pub(crate) fn cross4(a: &Vec4, b: &Vec4, d: &Vec4) -> Vec4 {
    let m = |i: usize, j: usize| a[i] * b[j] - a[j] * b[i];
    let (m01, m02, m03, m12, m13, m23) = (m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3));
    [
        -(d[1] * m23 - d[2] * m13 + d[3] * m12),
        d[0] * m23 - d[2] * m03 + d[3] * m02,
        -(d[0] * m13 - d[1] * m03 + d[3] * m01),
        d[0] * m12 - d[1] * m02 + d[2] * m01,
    ]
}

/// Vector metric-orthogonal to `a`, `b` and `d` (Minkowski dual on H³).
pub(crate) fn metric_cross(space: SpaceKind, a: &Vec4, b: &Vec4, d: &Vec4) -> Vec4 {
    match space {
        SpaceKind::Euclidean => {
            // Tangent space is R³ itself; `a` (the position) plays no role.
            [b[1] * d[2] - b[2] * d[1], b[2] * d[0] - b[0] * d[2], b[0] * d[1] - b[1] * d[0], 0.0]
        }
        SpaceKind::Spherical => cross4(a, b, d),
        SpaceKind::Hyperbolic => {
            let c = cross4(a, b, d);
            [-c[0], c[1], c[2], c[3]]
        }
    }
}
