//! Parallel-surface (normal) flow of closed convex surfaces in the three
//! simply connected constant-curvature 3-spaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`space`]: ambient models (R³, the unit sphere S³ ⊂ R⁴, the hyperboloid
//!   H³ ⊂ R^{1,3}), geodesics and radial volume primitives.
//! - [`surface`]: radial-graph surfaces sampled on icosphere meshes, and the
//!   discrete estimators of area, enclosed volume and total mean curvature.
//! - [`closed_form`]: analytic area/volume evolution under the normal flow.
//! - [`inequalities`]: Minkowski-type inequalities as signed deficits.
//! - [`flow`]: discrete normal flow and its comparison with the closed forms.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod closed_form;
pub mod error;
pub mod flow;
pub mod inequalities;
pub mod space;
pub mod sum;
pub mod surface;

pub use closed_form::{FlowSeries, Provenance, SeriesCoefficients, SeriesShape};
pub use error::{GeomError, Result};
pub use space::{Point, SpaceKind, TangentVector, Vec4};
pub use surface::{GeometricSummary, RadialGraphSpec, SurfaceMesh};
