//! Minkowski-type inequalities as signed deficits (LHS − RHS).
//!
//! A non-negative deficit means the inequality holds. Reports carry their own
//! tolerance so that the equality case (geodesic spheres) can be told apart
//! from a violation.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::{hyperbolic_asymptotic_deficit, spherical_series, SeriesShape};
use crate::error::{GeomError, Result};
use crate::surface::GeometricSummary;

/// Default tolerance for deficits computed from exact (analytic) data.
pub const ANALYTIC_TOL: f64 = 1e-9;

pub const EUCLIDEAN_MINKOWSKI: &str = "minkowski_euclidean";
pub const HYPERBOLIC_MINKOWSKI: &str = "minkowski_hyperbolic";
pub const SPHERICAL_MINKOWSKI: &str = "minkowski_spherical";
pub const HYPERBOLIC_MEAN_CURVATURE_VOLUME: &str = "hyperbolic_mean_curvature_vs_volume";
pub const HYPERBOLIC_MEAN_CURVATURE_AREA: &str = "hyperbolic_mean_curvature_vs_area";
/// Euclidean-form inequality in H³; whether it holds is open, so it is
/// reported but never asserted.
pub const HYPERBOLIC_EUCLIDEAN_FORM_OPEN: &str = "hyperbolic_euclidean_form_open";
pub const FALSE_HYPERBOLIC: &str = "hyperbolic_false_strengthening";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeficitReport {
    pub name: String,
    pub deficit: f64,
    pub holds: bool,
    pub equality: bool,
    pub tol: f64,
    pub inputs: GeometricSummary,
}

impl DeficitReport {
    pub fn new(name: &str, deficit: f64, tol: f64, inputs: GeometricSummary) -> Self {
        DeficitReport {
            name: name.to_string(),
            deficit,
            holds: deficit >= -tol,
            equality: deficit.abs() <= tol,
            tol,
            inputs,
        }
    }

    /// Same report re-judged under a different tolerance.
    pub fn with_tol(&self, tol: f64) -> Self {
        DeficitReport::new(&self.name, self.deficit, tol, self.inputs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("deficit reports always serialise")
    }
}

/// Ȧ₀² − 16π·A₀ (squared form of ∫H ≥ √(16π|S|)).
pub fn minkowski_deficit_euclidean(s: GeometricSummary) -> DeficitReport {
    let d = s.total_mean_curvature.powi(2) - 16.0 * PI * s.area;
    DeficitReport::new(EUCLIDEAN_MINKOWSKI, d, ANALYTIC_TOL, s)
}

/// Ȧ₀ − 4V₀ − 4π·log(1 + A₀/2π + Ȧ₀/4π).
pub fn minkowski_deficit_hyperbolic(s: GeometricSummary) -> DeficitReport {
    let log_term = (s.area / (2.0 * PI) + s.total_mean_curvature / (4.0 * PI)).ln_1p();
    let d = s.total_mean_curvature - 4.0 * s.volume - 4.0 * PI * log_term;
    DeficitReport::new(HYPERBOLIC_MINKOWSKI, d, ANALYTIC_TOL, s)
}

/// Ȧ₀² − 16π·A₀·(1 − A₀/4π), defined for A₀ ≤ 4π.
pub fn minkowski_deficit_spherical(s: GeometricSummary) -> Result<DeficitReport> {
    if s.area > 4.0 * PI {
        return Err(GeomError::Domain(format!(
            "spherical Minkowski deficit needs A0 <= 4π, got {}",
            s.area
        )));
    }
    let d = s.total_mean_curvature.powi(2) - 16.0 * PI * s.area * (1.0 - s.area / (4.0 * PI));
    Ok(DeficitReport::new(SPHERICAL_MINKOWSKI, d, ANALYTIC_TOL, s))
}

/// R of the spherical series; R ≥ 1 exactly when the spherical deficit is
/// non-negative, and R = 1 at geodesic spheres.
pub fn spherical_rigidity_indicator(s: GeometricSummary) -> f64 {
    match spherical_series(s).shape {
        SeriesShape::Spherical { r_sph, .. } => r_sph,
        _ => unreachable!("spherical_series always yields a spherical shape"),
    }
}

/// Reports (a) Ȧ₀ − 4V₀, (b) Ȧ₀² − A₀², both known to hold for convex
/// surfaces in H³, and (c) the Euclidean form Ȧ₀² − 16πA₀, whose validity in
/// H³ is open (informational only).
pub fn weaker_inequalities_hyperbolic(s: GeometricSummary) -> Vec<DeficitReport> {
    vec![
        DeficitReport::new(HYPERBOLIC_MEAN_CURVATURE_VOLUME, s.total_mean_curvature - 4.0 * s.volume, ANALYTIC_TOL, s),
        DeficitReport::new(
            HYPERBOLIC_MEAN_CURVATURE_AREA,
            s.total_mean_curvature.powi(2) - s.area.powi(2),
            ANALYTIC_TOL,
            s,
        ),
        DeficitReport::new(
            HYPERBOLIC_EUCLIDEAN_FORM_OPEN,
            s.total_mean_curvature.powi(2) - 16.0 * PI * s.area,
            ANALYTIC_TOL,
            s,
        ),
    ]
}

/// Whether a report names an inequality that is asserted (proved), as opposed
/// to the open or known-false ones.
pub fn is_asserted(name: &str) -> bool {
    !matches!(name, HYPERBOLIC_EUCLIDEAN_FORM_OPEN | FALSE_HYPERBOLIC)
}

/// Ȧ₀² − 16πA₀(1 + A₀/4π): the tempting hyperbolic analogue of the
/// spherical inequality. It fails for large convex surfaces; the report is
/// informational.
pub fn false_inequality_eval(s: GeometricSummary) -> DeficitReport {
    let d = s.total_mean_curvature.powi(2) - 16.0 * PI * s.area * (1.0 + s.area / (4.0 * PI));
    DeficitReport::new(FALSE_HYPERBOLIC, d, ANALYTIC_TOL, s)
}

/// Limits of (A₀, Ȧ₀, V₀) for convex surfaces collapsing onto a geodesic disk
/// of radius `r` in H³; the enclosed volume tends to 0.
pub fn geodesic_disk_limits(r: f64) -> Result<GeometricSummary> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(GeomError::input(format!("disk radius must be positive, got {r}")));
    }
    // 4π(cosh r − 1) = 8π sinh²(r/2), which keeps digits as r → 0.
    Ok(GeometricSummary::new(8.0 * PI * (0.5 * r).sinh().powi(2), 2.0 * PI * PI * r.sinh(), 0.0))
}

/// One grid row of [`counterexample_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiskScanRow {
    pub radius: f64,
    pub false_deficit: f64,
    pub theorem_deficit: f64,
    pub mean_curvature_volume_deficit: f64,
    pub mean_curvature_area_deficit: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounterexampleScan {
    pub first_violation_r: Option<f64>,
    pub bisected_threshold: Option<f64>,
    /// Hyperbolic Minkowski and both weaker inequalities stayed ≥ −1e−9 on
    /// the whole grid.
    pub asserted_inequalities_hold: bool,
    pub rows: Vec<DiskScanRow>,
}

/// Tolerance on the asserted inequalities along a disk scan.
pub const SCAN_TOL: f64 = 1e-9;
/// Bisection width for the sign change of the false inequality.
pub const BISECTION_TOL: f64 = 1e-9;

fn false_deficit_at(r: f64) -> Result<f64> {
    Ok(false_inequality_eval(geodesic_disk_limits(r)?).deficit)
}

/// Scans disk limits over `r_min, r_min + step, … ≤ r_max`, locating the first
/// violation of [`false_inequality_eval`] and bisecting its sign change.
pub fn counterexample_scan(r_min: f64, r_max: f64, step: f64) -> Result<CounterexampleScan> {
    if !(r_min > 0.0 && r_max > r_min && step > 0.0) {
        return Err(GeomError::input(format!(
            "scan needs 0 < r_min < r_max and step > 0, got ({r_min}, {r_max}, {step})"
        )));
    }
    let count = ((r_max - r_min) / step + 1e-9).floor() as usize + 1;
    let rows: Vec<DiskScanRow> = (0..count)
        .into_par_iter()
        .map(|i| {
            let r = r_min + i as f64 * step;
            let s = geodesic_disk_limits(r)?;
            let weaker = weaker_inequalities_hyperbolic(s);
            Ok(DiskScanRow {
                radius: r,
                false_deficit: false_inequality_eval(s).deficit,
                theorem_deficit: minkowski_deficit_hyperbolic(s).deficit,
                mean_curvature_volume_deficit: weaker[0].deficit,
                mean_curvature_area_deficit: weaker[1].deficit,
            })
        })
        .collect::<Result<_>>()?;

    let asserted_inequalities_hold = rows.iter().all(|row| {
        row.theorem_deficit >= -SCAN_TOL
            && row.mean_curvature_volume_deficit >= -SCAN_TOL
            && row.mean_curvature_area_deficit >= -SCAN_TOL
    });

    let first = rows.iter().position(|row| row.false_deficit < 0.0);
    let (first_violation_r, bisected_threshold) = match first {
        None => (None, None),
        Some(i) => {
            let hi_start = rows[i].radius;
            let lo_start = if i == 0 { r_min / 2.0 } else { rows[i - 1].radius };
            let threshold = if false_deficit_at(lo_start)? > 0.0 {
                let (mut lo, mut hi) = (lo_start, hi_start);
                while hi - lo > BISECTION_TOL {
                    let mid = 0.5 * (lo + hi);
                    if false_deficit_at(mid)? > 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                Some(0.5 * (lo + hi))
            } else {
                None
            };
            (Some(hi_start), threshold)
        }
    };

    Ok(CounterexampleScan { first_violation_r, bisected_threshold, asserted_inequalities_hold, rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SmallSurfaceReduction {
    /// e^x − x − 1 with x = Ȧ₀/4π.
    pub exact_lhs: f64,
    /// A₀/2π.
    pub exact_rhs: f64,
    /// Ȧ₀² − 16πA₀.
    pub second_order_deficit: f64,
    /// |(lhs − rhs) − second_order/(32π²)|; bounded by x³ for small x.
    pub remainder: f64,
    pub x: f64,
}

impl SmallSurfaceReduction {
    pub fn exact_deficit(&self) -> f64 {
        self.exact_lhs - self.exact_rhs
    }

    pub fn remainder_within_cubic_bound(&self) -> bool {
        self.remainder <= self.x.powi(3)
    }
}

/// Compares the log form of the hyperbolic inequality (dropping V₀) with its
/// second-order truncation, the Euclidean Minkowski inequality.
pub fn small_surface_reduction(s: GeometricSummary) -> SmallSurfaceReduction {
    let x = s.total_mean_curvature / (4.0 * PI);
    let exact_lhs = x.exp_m1() - x;
    let exact_rhs = s.area / (2.0 * PI);
    let second_order_deficit = s.total_mean_curvature.powi(2) - 16.0 * PI * s.area;
    let remainder = ((exact_lhs - exact_rhs) - second_order_deficit / (32.0 * PI * PI)).abs();
    SmallSurfaceReduction { exact_lhs, exact_rhs, second_order_deficit, remainder, x }
}

/// Result of sweeping the open Euclidean-form inequality over a family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EuclideanFormSweep {
    pub min_deficit: f64,
    pub argmin: usize,
    pub min_theorem_deficit: f64,
    pub samples: usize,
}

/// Records the minimum of Ȧ₀² − 16πA₀ (and of the hyperbolic Minkowski
/// deficit) over summaries of H³ surfaces. No assertion either way.
pub fn euclidean_form_sweep(summaries: &[GeometricSummary]) -> Option<EuclideanFormSweep> {
    let first = summaries.first()?;
    let mut out = EuclideanFormSweep {
        min_deficit: weaker_inequalities_hyperbolic(*first)[2].deficit,
        argmin: 0,
        min_theorem_deficit: minkowski_deficit_hyperbolic(*first).deficit,
        samples: summaries.len(),
    };
    for (i, s) in summaries.iter().enumerate().skip(1) {
        let d = weaker_inequalities_hyperbolic(*s)[2].deficit;
        if d < out.min_deficit {
            out.min_deficit = d;
            out.argmin = i;
        }
        out.min_theorem_deficit = out.min_theorem_deficit.min(minkowski_deficit_hyperbolic(*s).deficit);
    }
    Some(out)
}

/// Consistency helper: 4× the asymptotic isoperimetric gap.
pub fn hyperbolic_deficit_from_asymptotics(s: GeometricSummary) -> f64 {
    4.0 * hyperbolic_asymptotic_deficit(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::sphere_geometry;
    use crate::space::SpaceKind;
    use approx::assert_relative_eq;

    #[test]
    fn euclidean_examples() {
        let unit = sphere_geometry(SpaceKind::Euclidean, 1.0).unwrap();
        let r = minkowski_deficit_euclidean(unit);
        assert!(r.equality && r.holds);
        let r = minkowski_deficit_euclidean(GeometricSummary::new(4.0 * PI, 16.0 * PI, 0.0));
        assert_relative_eq!(r.deficit, 192.0 * PI * PI, max_relative = 1e-14);
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn hyperbolic_examples() {
        let s = sphere_geometry(SpaceKind::Hyperbolic, 1.0).unwrap();
        assert!(minkowski_deficit_hyperbolic(s).equality);
        assert_eq!(minkowski_deficit_hyperbolic(GeometricSummary::POINT).deficit, 0.0);
        let probe = GeometricSummary::new(3.0, 11.0, 0.4);
        assert_relative_eq!(
            minkowski_deficit_hyperbolic(probe).deficit,
            hyperbolic_deficit_from_asymptotics(probe),
            max_relative = 1e-12
        );
    }

    #[test]
    fn spherical_examples() {
        let s = sphere_geometry(SpaceKind::Spherical, PI / 4.0).unwrap();
        let r = minkowski_deficit_spherical(s).unwrap();
        assert!(r.equality);
        assert!(minkowski_deficit_spherical(GeometricSummary::POINT).unwrap().equality);
        assert!(matches!(
            minkowski_deficit_spherical(GeometricSummary::new(4.0 * PI + 1.0, 1.0, 0.0)),
            Err(GeomError::Domain(_))
        ));
    }

    #[test]
    fn rigidity_indicator_examples() {
        let s = sphere_geometry(SpaceKind::Spherical, PI / 4.0).unwrap();
        assert_relative_eq!(spherical_rigidity_indicator(s), 1.0, max_relative = 1e-14);
        assert_eq!(spherical_rigidity_indicator(GeometricSummary::POINT), 1.0);
        let r = spherical_rigidity_indicator(GeometricSummary::new(2.0 * PI, 8.0 * PI, 0.0));
        assert_relative_eq!(r, 2.0, max_relative = 1e-15);
    }

    #[test]
    fn weaker_inequality_examples() {
        let s = sphere_geometry(SpaceKind::Hyperbolic, 1.0).unwrap();
        let w = weaker_inequalities_hyperbolic(s);
        assert_relative_eq!(w[0].deficit, 8.0 * PI, max_relative = 1e-13);
        assert!(w[1].deficit > 0.0);
        assert!(weaker_inequalities_hyperbolic(GeometricSummary::POINT).iter().all(|r| r.deficit == 0.0));
        let disk = geodesic_disk_limits(2.0).unwrap();
        let w = weaker_inequalities_hyperbolic(disk);
        let expected = (2.0 * PI * PI * 2f64.sinh()).powi(2) - (4.0 * PI * (2f64.cosh() - 1.0)).powi(2);
        assert_relative_eq!(w[1].deficit, expected, max_relative = 1e-12);
        assert!(w[1].deficit > 0.0);
        assert!(!is_asserted(&w[2].name));
        assert!(is_asserted(&w[0].name));
    }

    #[test]
    fn false_inequality_examples() {
        assert_eq!(false_inequality_eval(GeometricSummary::POINT).deficit, 0.0);
        // Spheres satisfy it, with equality.
        let s = sphere_geometry(SpaceKind::Hyperbolic, 1.0).unwrap();
        let d = false_inequality_eval(s);
        assert!(d.holds && d.deficit.abs() < 1e-12 * s.total_mean_curvature.powi(2));
        let d = false_inequality_eval(geodesic_disk_limits(2.0).unwrap());
        assert!(!d.holds);
        assert_relative_eq!(d.inputs.total_mean_curvature.powi(2), 5125.3, max_relative = 1e-4);
        assert_relative_eq!(d.deficit, 5125.3 - 6564.2, max_relative = 1e-3);
    }

    #[test]
    fn disk_limit_examples() {
        let d = geodesic_disk_limits(2.0).unwrap();
        assert_relative_eq!(d.area, 34.711, max_relative = 1e-4);
        assert_relative_eq!(d.total_mean_curvature, 71.591, max_relative = 1e-4);
        assert_eq!(d.volume, 0.0);
        let d = geodesic_disk_limits(1.0).unwrap();
        assert_relative_eq!(d.area, 6.825, max_relative = 1e-3);
        assert_relative_eq!(d.total_mean_curvature, 23.198, max_relative = 1e-4);
        let tiny = geodesic_disk_limits(1e-9).unwrap();
        assert!(tiny.area < 1e-15 && tiny.total_mean_curvature < 1e-7);
        assert!(geodesic_disk_limits(0.0).is_err());
    }

    #[test]
    fn scan_finds_violation_and_threshold() {
        let scan = counterexample_scan(0.1, 2.0, 0.1).unwrap();
        let first = scan.first_violation_r.unwrap();
        assert!(first <= 2.0);
        let t = scan.bisected_threshold.unwrap();
        assert!(false_deficit_at(t - 1e-6).unwrap() > 0.0);
        assert!(false_deficit_at(t + 1e-6).unwrap() < 0.0);
        assert!(scan.asserted_inequalities_hold);
        assert!(counterexample_scan(0.1, 0.5, 0.1).unwrap().first_violation_r.is_none());
    }

    #[test]
    fn scan_rejects_bad_ranges() {
        assert!(counterexample_scan(0.0, 1.0, 0.1).is_err());
        assert!(counterexample_scan(1.0, 0.5, 0.1).is_err());
        assert!(counterexample_scan(0.1, 1.0, 0.0).is_err());
    }

    #[test]
    fn small_surface_examples() {
        let r = small_surface_reduction(GeometricSummary::POINT);
        assert_eq!((r.exact_lhs, r.exact_rhs, r.second_order_deficit), (0.0, 0.0, 0.0));
        let x = 1e-3;
        let ad = 4.0 * PI * x;
        let r = small_surface_reduction(GeometricSummary::new(ad * ad / (16.0 * PI), ad, 0.0));
        assert_relative_eq!(r.exact_deficit(), x.powi(3) / 6.0, max_relative = 1e-3);
        assert!(r.remainder_within_cubic_bound());
    }

    #[test]
    fn deficit_report_json_schema() {
        let r = minkowski_deficit_euclidean(GeometricSummary::new(1.0, 2.0, 3.0));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 6);
        for k in ["name", "deficit", "holds", "equality", "tol", "inputs"] {
            assert!(v.get(k).is_some(), "{k}");
        }
        assert_eq!(v["inputs"]["total_mean_curvature"], 2.0);
        let back: DeficitReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn sweep_records_minimum() {
        let spheres: Vec<_> = [0.2, 0.5, 1.0].iter().map(|&r| sphere_geometry(SpaceKind::Hyperbolic, r).unwrap()).collect();
        let sweep = euclidean_form_sweep(&spheres).unwrap();
        assert_eq!(sweep.samples, 3);
        assert!(sweep.min_deficit > 0.0);
        assert!(sweep.min_theorem_deficit.abs() < 1e-10);
        assert!(euclidean_form_sweep(&[]).is_none());
    }
}
