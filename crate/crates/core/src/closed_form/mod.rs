//! Closed-form evolution of area and volume under the normal flow, and the
//! sphere formulas derived from it.

mod flow_series;
mod polynomial;
mod series;
mod sphere;

pub use flow_series::{format_float, FlowSeries, Provenance, FLOW_CSV_HEADER};
pub use polynomial::{
    exact_isoperimetric_deficit, isoperimetric_deficit_polynomial, symbolic_isoperimetric_deficit, SymPoly, Symbol,
};
pub use series::{
    euclidean_series, hyperbolic_series, series_for, spherical_series, SeriesCoefficients, SeriesShape,
};
pub use sphere::{
    equal_area_radius, equal_area_radius_rate, hyperbolic_asymptotic_deficit, sphere_geometry, sphere_volume,
};

/// Alias matching the operation name used throughout the docs.
pub fn rebase_series(c: &SeriesCoefficients, t0: f64) -> crate::Result<SeriesCoefficients> {
    c.rebase(t0)
}
