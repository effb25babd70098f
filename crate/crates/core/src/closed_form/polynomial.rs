//! The Euclidean isoperimetric polynomial A(t)³ − 36π·V(t)².
//!
//! Two routes: a floating-point expansion for given data, and an exact one
//! over rational polynomials in the symbols π, A₀, Ȧ₀, V₀ and t, in which the
//! vanishing of the t⁶ and t⁵ coefficients and the form of the t⁴ coefficient
//! are identities rather than numerical coincidences.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::surface::GeometricSummary;

/// Coefficients c₀..c₆ of A(t)³ − 36π V(t)² (index = power of t) for the
/// Euclidean series of `s`.
pub fn isoperimetric_deficit_polynomial(s: GeometricSummary) -> [f64; 7] {
    let area = [s.area, s.total_mean_curvature, 4.0 * PI];
    let volume = [s.volume, s.area, 0.5 * s.total_mean_curvature, 4.0 / 3.0 * PI];
    let area_sq = poly_mul(&area, &area);
    let area_cube = poly_mul(&area_sq, &area);
    let volume_sq = poly_mul(&volume, &volume);
    let mut out = [0.0; 7];
    for (k, c) in out.iter_mut().enumerate() {
        *c = area_cube.get(k).copied().unwrap_or(0.0) - 36.0 * PI * volume_sq.get(k).copied().unwrap_or(0.0);
    }
    out
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Symbols of the exact polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Symbol {
    Pi = 0,
    Area = 1,
    MeanCurvature = 2,
    Volume = 3,
    Time = 4,
}

const SYMBOLS: usize = 5;
type Exponents = [u32; SYMBOLS];

/// Sparse polynomial in [`Symbol`]s with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn constant(q: BigRational) -> Self {
        let mut p = SymPoly::zero();
        p.insert([0; SYMBOLS], q);
        p
    }

    pub fn integer(n: i64) -> Self {
        SymPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        SymPoly::constant(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut e = [0; SYMBOLS];
        e[s as usize] = 1;
        let mut p = SymPoly::zero();
        p.insert(e, BigRational::one());
        p
    }

    /// q·πᵏ, the form exact inputs take.
    pub fn pi_multiple(q: BigRational, power: u32) -> Self {
        let mut e = [0; SYMBOLS];
        e[Symbol::Pi as usize] = power;
        let mut p = SymPoly::zero();
        p.insert(e, q);
        p
    }

    fn insert(&mut self, e: Exponents, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(SymPoly::integer(1), |acc, _| &acc * self)
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|e| e[s as usize]).max().unwrap_or(0)
    }

    /// Coefficient of sᵏ, as a polynomial in the remaining symbols.
    pub fn coefficient(&self, s: Symbol, k: u32) -> Self {
        let mut out = SymPoly::zero();
        for (e, q) in &self.terms {
            if e[s as usize] == k {
                let mut e2 = *e;
                e2[s as usize] = 0;
                out.insert(e2, q.clone());
            }
        }
        out
    }

    /// Replaces symbol `s` by the polynomial `value`.
    pub fn substitute(&self, s: Symbol, value: &SymPoly) -> Self {
        let mut out = SymPoly::zero();
        for (e, q) in &self.terms {
            let mut rest = *e;
            rest[s as usize] = 0;
            let mut mono = SymPoly::zero();
            mono.insert(rest, q.clone());
            out = &out + &(&mono * &value.pow(e[s as usize]));
        }
        out
    }

    /// Floating-point evaluation with the given symbol values (π is always
    /// taken from `std`).
    pub fn eval(&self, area: f64, mean_curvature: f64, volume: f64, time: f64) -> f64 {
        let vals = [PI, area, mean_curvature, volume, time];
        self.terms
            .iter()
            .map(|(e, q)| {
                let mono: f64 = e.iter().zip(vals).map(|(&k, v)| v.powi(k as i32)).product();
                q.to_f64().unwrap_or(f64::NAN) * mono
            })
            .sum()
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (e, q) in &rhs.terms {
            out.insert(*e, q.clone());
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly { terms: self.terms.iter().map(|(e, q)| (*e, -q)).collect() }
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (ea, qa) in &self.terms {
            for (eb, qb) in &rhs.terms {
                let mut e = [0; SYMBOLS];
                for i in 0..SYMBOLS {
                    e[i] = ea[i] + eb[i];
                }
                out.insert(e, qa * qb);
            }
        }
        out
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        const NAMES: [&str; SYMBOLS] = ["π", "A0", "Ad0", "V0", "t"];
        for (i, (e, q)) in self.terms.iter().enumerate() {
            let sign = if q.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                f.write_str(sign)?;
            }
            write!(f, "{}", q.abs())?;
            for (k, name) in e.iter().zip(NAMES) {
                match k {
                    0 => {}
                    1 => write!(f, "·{name}")?,
                    _ => write!(f, "·{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Exact A(t)³ − 36π V(t)² in the symbols π, A₀, Ȧ₀, V₀, t.
pub fn symbolic_isoperimetric_deficit() -> SymPoly {
    let pi = SymPoly::symbol(Symbol::Pi);
    let a0 = SymPoly::symbol(Symbol::Area);
    let ad0 = SymPoly::symbol(Symbol::MeanCurvature);
    let v0 = SymPoly::symbol(Symbol::Volume);
    let t = SymPoly::symbol(Symbol::Time);

    let area = &(&(&(&SymPoly::integer(4) * &pi) * &t.pow(2)) + &(&ad0 * &t)) + &a0;
    let volume = &(&(&(&(&SymPoly::ratio(4, 3) * &pi) * &t.pow(3)) + &(&(&SymPoly::ratio(1, 2) * &ad0) * &t.pow(2)))
        + &(&a0 * &t))
        + &v0;
    &area.pow(3) - &(&(&SymPoly::integer(36) * &pi) * &volume.pow(2))
}

/// Exact coefficients c₀..c₆ (by power of t) of A³ − 36πV² for exact inputs,
/// each a polynomial in π with rational coefficients.
pub fn exact_isoperimetric_deficit(area: &SymPoly, mean_curvature: &SymPoly, volume: &SymPoly) -> Vec<SymPoly> {
    let general = symbolic_isoperimetric_deficit()
        .substitute(Symbol::Area, area)
        .substitute(Symbol::MeanCurvature, mean_curvature)
        .substitute(Symbol::Volume, volume);
    (0..7).map(|k| general.coefficient(Symbol::Time, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_sphere_leading_coefficients_vanish() {
        let c = isoperimetric_deficit_polynomial(GeometricSummary::new(4.0 * PI, 8.0 * PI, 4.0 * PI / 3.0));
        let scale = 64.0 * PI.powi(3);
        for (k, ck) in c.iter().enumerate().skip(4) {
            assert!(ck.abs() < 1e-12 * scale, "t^{k}: {ck}");
        }
    }

    #[test]
    fn quartic_coefficient_example() {
        let c = isoperimetric_deficit_polynomial(GeometricSummary::new(4.0 * PI, 0.0, 0.0));
        assert!((c[4] + 192.0 * PI.powi(3)).abs() < 1e-10);
    }

    #[test]
    fn point_limit_is_zero_polynomial() {
        let c = isoperimetric_deficit_polynomial(GeometricSummary::POINT);
        assert!(c.iter().all(|x| x.abs() < 1e-10));
        let exact = exact_isoperimetric_deficit(&SymPoly::zero(), &SymPoly::zero(), &SymPoly::zero());
        assert!(exact.iter().all(SymPoly::is_zero));
    }

    #[test]
    fn exact_unit_sphere() {
        let q = |n, d| BigRational::new(BigInt::from(n), BigInt::from(d));
        let coeffs = exact_isoperimetric_deficit(
            &SymPoly::pi_multiple(q(4, 1), 1),
            &SymPoly::pi_multiple(q(8, 1), 1),
            &SymPoly::pi_multiple(q(4, 3), 1),
        );
        // A unit sphere flows through round spheres: A³ = 36πV² for all t.
        assert!(coeffs.iter().all(SymPoly::is_zero), "{coeffs:?}");
    }

    #[test]
    fn exact_and_float_routes_agree() {
        let general = symbolic_isoperimetric_deficit();
        let s = GeometricSummary::new(3.1, 7.4, 0.9);
        let c = isoperimetric_deficit_polynomial(s);
        for (k, ck) in (0u32..).zip(c) {
            let exact = general.coefficient(Symbol::Time, k).eval(s.area, s.total_mean_curvature, s.volume, 0.0);
            assert!((exact - ck).abs() < 1e-9 * (1.0 + ck.abs()), "t^{k}");
        }
    }

    #[test]
    fn display_is_readable() {
        let p = &SymPoly::symbol(Symbol::Pi) - &SymPoly::ratio(1, 2);
        assert_eq!(p.to_string(), "-1/2 + 1·π");
    }
}
