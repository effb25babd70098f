//! Closed convex surfaces as radial graphs over the basepoint of a space
//! form, sampled on icosphere meshes.

mod convexity;
mod graph;
mod icosphere;
mod integrals;
mod mesh;

pub use convexity::{convexity_report, ConvexityReport};
pub use graph::{basis_value, Perturbation, RadialGraphSpec, SurfaceDocument, BASIS_LABELS, BASIS_LEN};
pub use icosphere::Icosphere;
pub use integrals::{
    enclosed_volume, summarize, surface_area, total_mean_curvature, GeometricSummary, DEFAULT_MEAN_CURVATURE_STEP,
};
pub use mesh::{build_radial_graph, SurfaceMesh};

pub(crate) use integrals::offset_vertices;
