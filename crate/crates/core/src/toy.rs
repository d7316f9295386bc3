//! Rotating energy distributions whose total energy is `ω₀` and whose
//! angular momentum is `1` (ħ = c = 1) for every rotation frequency `ω₀`.
//!
//! A planar distribution `ε(r)` rotates with angular velocity `ω₀` at its
//! center. Tangential speeds are composed relativistically outwards, which
//! gives the profile
//!
//! ```text
//! ω(r) = ω₀ / √((ω₀r)² + 1),     v(r) = r ω(r) < 1,
//! ```
//!
//! a solution of `dω/dr = −ω³ r`. Each area element carries momentum density
//! `ε ω₀ r`, so
//!
//! ```text
//! E = ∫ 2πr ε(r) dr,     S = ω₀ ∫ 2πr³ ε(r) dr.
//! ```
//!
//! For a rotating string the measures become `dx` and `x² dx`.
//!
//! These are mechanical toy models. They show that a constant angular
//! momentum is compatible with an energy linear in the rotation frequency;
//! they are not a description of what a photon is made of.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::quadrature::{integrate, QuadratureOptions};
use crate::{Error, Result};

/// Relative tolerance used for every energy and spin quadrature.
pub const QUADRATURE_REL_TOL: f64 = 1e-10;

fn ensure_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositive { name, value })
    }
}

/// Local angular velocity `ω(r)` of the rotating distribution.
pub fn omega_profile(r: f64, omega0: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::NegativeRadius(r));
    }
    ensure_positive("omega0", omega0)?;
    Ok(omega0 / (omega0 * r).hypot(1.0))
}

/// Tangential speed `v(r) = r ω(r)`.
pub fn velocity_profile(r: f64, omega0: f64) -> Result<f64> {
    Ok(r * omega_profile(r, omega0)?)
}

/// Relativistic velocity addition `(v + dv) / (1 + v dv)`.
pub fn relativistic_step(v: f64, dv: f64) -> Result<f64> {
    if !(v.abs() < 1.0) {
        return Err(Error::Superluminal { beta: v.abs() });
    }
    Ok((v + dv) / (1.0 + v * dv))
}

/// Builds `v(r)` by composing `steps` relativistic increments `ω(r) dr`
/// outwards from the center, where `ω = v/r` (and `ω₀` at the center).
///
/// Converges to [`velocity_profile`] at first order in `dr`.
pub fn velocity_by_composition(r: f64, omega0: f64, steps: usize) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::NegativeRadius(r));
    }
    ensure_positive("omega0", omega0)?;
    if steps == 0 {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    let dr = r / steps as f64;
    let mut v = 0.0;
    for i in 0..steps {
        let radius = i as f64 * dr;
        let omega = if i == 0 { omega0 } else { v / radius };
        v = relativistic_step(v, omega * dr)?;
    }
    Ok(v)
}

/// An energy profile as a function of radius or position.
pub type Profile = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Planar energy density `ε(r)` on `[r_min, r_max]`, rotating at `ω₀`.
#[derive(Clone)]
pub struct RadialDistribution {
    pub label: String,
    pub epsilon: Profile,
    pub r_min: f64,
    pub r_max: f64,
    /// Interior radii where `ε` is not smooth.
    pub breakpoints: Vec<f64>,
    pub omega0: f64,
    pub params: BTreeMap<String, f64>,
}

/// Linear energy density `ε(x)` on `[−L, L]`, rotating at `ω₀`.
#[derive(Clone)]
pub struct LinearDistribution {
    pub label: String,
    pub epsilon: Profile,
    pub half_length: f64,
    pub omega0: f64,
    pub params: BTreeMap<String, f64>,
}

impl fmt::Debug for RadialDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialDistribution")
            .field("label", &self.label)
            .field("support", &(self.r_min, self.r_max))
            .field("breakpoints", &self.breakpoints)
            .field("omega0", &self.omega0)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

impl fmt::Debug for LinearDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearDistribution")
            .field("label", &self.label)
            .field("half_length", &self.half_length)
            .field("omega0", &self.omega0)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

impl RadialDistribution {
    pub fn new(
        label: impl Into<String>,
        epsilon: Profile,
        support: (f64, f64),
        breakpoints: Vec<f64>,
        omega0: f64,
    ) -> Result<Self> {
        let (r_min, r_max) = support;
        if !(r_min >= 0.0) {
            return Err(Error::NegativeRadius(r_min));
        }
        if !(r_max > r_min) || !r_max.is_finite() {
            return Err(Error::NotIntegrable(format!("empty or unbounded support [{r_min}, {r_max}]")));
        }
        ensure_positive("omega0", omega0)?;
        let mut breakpoints: Vec<f64> =
            breakpoints.into_iter().filter(|&r| r > r_min && r < r_max).collect();
        breakpoints.sort_by(f64::total_cmp);
        Ok(RadialDistribution {
            label: label.into(),
            epsilon,
            r_min,
            r_max,
            breakpoints,
            omega0,
            params: BTreeMap::new(),
        })
    }

    /// A unit-scale shape for [`calibrate_scale`]; its `omega0` is 1.
    pub fn shape(
        label: impl Into<String>,
        epsilon: Profile,
        support: (f64, f64),
        breakpoints: Vec<f64>,
    ) -> Result<Self> {
        Self::new(label, epsilon, support, breakpoints, 1.0)
    }

    /// `ε(r)`, zero outside the support.
    pub fn density(&self, r: f64) -> f64 {
        if r < self.r_min || r > self.r_max {
            0.0
        } else {
            (self.epsilon)(r)
        }
    }

    fn panels(&self) -> Vec<f64> {
        let mut points = vec![self.r_min];
        points.extend_from_slice(&self.breakpoints);
        points.push(self.r_max);
        points
    }

    /// `∫ 2π rⁿ ε(r) dr` over the support.
    pub fn moment(&self, power: i32) -> Result<f64> {
        let opts = QuadratureOptions { rel_tol: QUADRATURE_REL_TOL, ..Default::default() };
        let eps = &self.epsilon;
        let estimate = integrate(|r| 2.0 * PI * r.powi(power) * eps(r), &self.panels(), &opts)?;
        Ok(estimate.value)
    }

    /// Area of the support, `π(r_max² − r_min²)`.
    pub fn support_measure(&self) -> f64 {
        PI * (self.r_max * self.r_max - self.r_min * self.r_min)
    }

    pub fn energy_and_spin(&self) -> Result<(f64, f64)> {
        let energy = self.moment(1)?;
        let spin = self.omega0 * self.moment(3)?;
        Ok((energy, spin))
    }
}

impl LinearDistribution {
    pub fn new(label: impl Into<String>, epsilon: Profile, half_length: f64, omega0: f64) -> Result<Self> {
        ensure_positive("half_length", half_length)?;
        ensure_positive("omega0", omega0)?;
        Ok(LinearDistribution {
            label: label.into(),
            epsilon,
            half_length,
            omega0,
            params: BTreeMap::new(),
        })
    }

    pub fn density(&self, x: f64) -> f64 {
        if x.abs() > self.half_length {
            0.0
        } else {
            (self.epsilon)(x)
        }
    }

    /// Length of the support, `2L`.
    pub fn support_measure(&self) -> f64 {
        2.0 * self.half_length
    }

    pub fn energy_and_spin(&self) -> Result<(f64, f64)> {
        let opts = QuadratureOptions { rel_tol: QUADRATURE_REL_TOL, ..Default::default() };
        let limits = [-self.half_length, 0.0, self.half_length];
        let eps = &self.epsilon;
        let energy = integrate(|x| eps(x), &limits, &opts)?.value;
        let second = integrate(|x| x * x * eps(x), &limits, &opts)?.value;
        Ok((energy, self.omega0 * second))
    }
}

/// Either kind of toy model.
#[derive(Clone, Debug)]
pub enum Distribution {
    Radial(RadialDistribution),
    Linear(LinearDistribution),
}

impl Distribution {
    pub fn label(&self) -> &str {
        match self {
            Distribution::Radial(d) => &d.label,
            Distribution::Linear(d) => &d.label,
        }
    }

    pub fn omega0(&self) -> f64 {
        match self {
            Distribution::Radial(d) => d.omega0,
            Distribution::Linear(d) => d.omega0,
        }
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        match self {
            Distribution::Radial(d) => &d.params,
            Distribution::Linear(d) => &d.params,
        }
    }

    /// Area for planar models, length for the string.
    pub fn support_measure(&self) -> f64 {
        match self {
            Distribution::Radial(d) => d.support_measure(),
            Distribution::Linear(d) => d.support_measure(),
        }
    }

    /// Radial extent `[r_min, r_max]` swept by the rotating model.
    pub fn radial_extent(&self) -> (f64, f64) {
        match self {
            Distribution::Radial(d) => (d.r_min, d.r_max),
            Distribution::Linear(d) => (0.0, d.half_length),
        }
    }

    pub fn energy_and_spin(&self) -> Result<(f64, f64)> {
        match self {
            Distribution::Radial(d) => d.energy_and_spin(),
            Distribution::Linear(d) => d.energy_and_spin(),
        }
    }

    pub fn report(&self) -> Result<ToyModelReport> {
        let (energy, spin) = self.energy_and_spin()?;
        let omega0 = self.omega0();
        Ok(ToyModelReport {
            model: self.label().to_string(),
            omega0,
            params: self.params().clone(),
            energy,
            spin,
            sigma_t: self.support_measure(),
            rel_err_energy: (energy / omega0 - 1.0).abs(),
            rel_err_spin: (spin - 1.0).abs(),
        })
    }
}

impl From<RadialDistribution> for Distribution {
    fn from(d: RadialDistribution) -> Self {
        Distribution::Radial(d)
    }
}

impl From<LinearDistribution> for Distribution {
    fn from(d: LinearDistribution) -> Self {
        Distribution::Linear(d)
    }
}

/// Free-function form of [`Distribution::energy_and_spin`].
pub fn energy_and_spin(dist: &Distribution) -> Result<(f64, f64)> {
    dist.energy_and_spin()
}

/// Energy, spin and cross section of one toy model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToyModelReport {
    pub model: String,
    pub omega0: f64,
    pub params: BTreeMap<String, f64>,
    #[serde(rename = "E")]
    pub energy: f64,
    #[serde(rename = "S")]
    pub spin: f64,
    #[serde(rename = "sigma_T")]
    pub sigma_t: f64,
    #[serde(rename = "rel_err_E")]
    pub rel_err_energy: f64,
    #[serde(rename = "rel_err_S")]
    pub rel_err_spin: f64,
}

/// Uniform disk of radius `√2/ω₀` with density `ω₀³/2π`.
pub fn make_disk(omega0: f64) -> Result<RadialDistribution> {
    ensure_positive("omega0", omega0)?;
    let density = omega0.powi(3) / (2.0 * PI);
    let radius = 2f64.sqrt() / omega0;
    let mut d = RadialDistribution::new("disk", Arc::new(move |_| density), (0.0, radius), vec![], omega0)?;
    d.params.insert("epsilon".into(), density);
    d.params.insert("R".into(), radius);
    Ok(d)
}

/// Annulus `R₁ ≤ r ≤ R₂` with density `K/r³`, where
/// `R₁ = (√(k²+1) − k)/ω₀`, `R₂ − R₁ = 2k/ω₀` and `K = 1/(4πk)`.
///
/// As `k → 0` the annulus shrinks onto the circle `r = 1/ω₀` while `K`
/// diverges, so `k = 0` itself is rejected.
pub fn make_ring(omega0: f64, k: f64) -> Result<RadialDistribution> {
    ensure_positive("omega0", omega0)?;
    ensure_positive("k", k)?;
    let (r1, r2) = ring_radii(omega0, k);
    let amplitude = 1.0 / (4.0 * PI * k);
    let mut d = RadialDistribution::new(
        "ring",
        Arc::new(move |r: f64| amplitude / (r * r * r)),
        (r1, r2),
        vec![],
        omega0,
    )?;
    d.params.insert("k".into(), k);
    d.params.insert("K".into(), amplitude);
    d.params.insert("R1".into(), r1);
    d.params.insert("R2".into(), r2);
    Ok(d)
}

/// Inner and outer radius of the ring model.
pub fn ring_radii(omega0: f64, k: f64) -> (f64, f64) {
    let root = k.hypot(1.0);
    // √(k²+1) − k written without cancellation
    let r1 = 1.0 / (omega0 * (root + k));
    (r1, r1 + 2.0 * k / omega0)
}

/// Uniform string `|x| ≤ √3/ω₀` with density `ω₀²/(2√3)`.
pub fn make_string(omega0: f64) -> Result<LinearDistribution> {
    ensure_positive("omega0", omega0)?;
    let density = omega0 * omega0 / (2.0 * 3f64.sqrt());
    let half_length = 3f64.sqrt() / omega0;
    let mut d = LinearDistribution::new("string", Arc::new(move |_| density), half_length, omega0)?;
    d.params.insert("epsilon".into(), density);
    d.params.insert("L".into(), half_length);
    Ok(d)
}

/// The built-in toy model families.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum ModelFamily {
    Disk,
    Ring { k: f64 },
    String,
}

impl ModelFamily {
    pub fn build(&self, omega0: f64) -> Result<Distribution> {
        Ok(match *self {
            ModelFamily::Disk => make_disk(omega0)?.into(),
            ModelFamily::Ring { k } => make_ring(omega0, k)?.into(),
            ModelFamily::String => make_string(omega0)?.into(),
        })
    }
}

/// Cross sections of one model family over a set of frequencies.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingReport {
    /// `(E, σ_T)` pairs in input order.
    pub points: Vec<(f64, f64)>,
    /// Least-squares slope of `ln σ_T` against `ln E`.
    pub slope: f64,
}

/// `σ_T` against `E` for `family` at each `ω₀`, and the log–log slope.
///
/// Planar models give slope −2. The string's support is a length, so it
/// gives −1.
pub fn cross_section_scaling(family: ModelFamily, omegas: &[f64]) -> Result<ScalingReport> {
    if omegas.len() < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: omegas.len() });
    }
    let mut points = Vec::with_capacity(omegas.len());
    for &omega0 in omegas {
        let model = family.build(omega0)?;
        let (energy, _) = model.energy_and_spin()?;
        points.push((energy, model.support_measure()));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|(e, s)| (e.ln(), s.ln())).collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if !(sxx > 0.0) {
        return Err(Error::TooFewPoints { needed: 2, got: 1 });
    }
    Ok(ScalingReport { points, slope: sxy / sxx })
}

/// Result of fitting a unit shape to a given rotation frequency.
#[derive(Clone, Debug)]
pub struct Calibration {
    pub amplitude: f64,
    pub radius_scale: f64,
    /// `A s(r/ρ)` on the rescaled support.
    pub distribution: RadialDistribution,
}

/// Scales a unit shape `s(r)` to `ε(r) = A s(r/ρ)` with `E = ω₀`, `S = 1`.
///
/// With `m₁ = ∫2πr s dr` and `m₃ = ∫2πr³ s dr` the conditions read
/// `A ρ² m₁ = ω₀` and `A ω₀ ρ⁴ m₃ = 1`, so `ρ = √(m₁/m₃)/ω₀` and
/// `A = ω₀³ m₃/m₁²`.
pub fn calibrate_scale(shape: &RadialDistribution, omega0: f64) -> Result<Calibration> {
    ensure_positive("omega0", omega0)?;
    let m1 = shape.moment(1)?;
    let m3 = shape.moment(3)?;
    if !(m1 > 0.0 && m3 > 0.0) || !m1.is_finite() || !m3.is_finite() {
        return Err(Error::DegenerateShape);
    }
    let radius_scale = (m1 / m3).sqrt() / omega0;
    let amplitude = omega0.powi(3) * m3 / (m1 * m1);
    let profile = shape.epsilon.clone();
    let epsilon: Profile = Arc::new(move |r| amplitude * profile(r / radius_scale));
    let mut distribution = RadialDistribution::new(
        shape.label.clone(),
        epsilon,
        (shape.r_min * radius_scale, shape.r_max * radius_scale),
        shape.breakpoints.iter().map(|b| b * radius_scale).collect(),
        omega0,
    )?;
    distribution.params = shape.params.clone();
    distribution.params.insert("amplitude".into(), amplitude);
    distribution.params.insert("radius_scale".into(), radius_scale);
    Ok(Calibration { amplitude, radius_scale, distribution })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_examples() {
        assert_eq!(omega_profile(0.0, 3.0).unwrap(), 3.0);
        assert!((omega_profile(0.5, 2.0).unwrap() - 2.0 / 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(velocity_profile(0.0, 1.0).unwrap(), 0.0);
        assert!((velocity_profile(0.25, 4.0).unwrap() - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!(velocity_profile(1e3, 1.0).unwrap() > 0.999999);
        assert!(velocity_profile(1e300, 1.0).unwrap() <= 1.0);
        assert!(omega_profile(-1.0, 1.0).is_err());
        assert!(velocity_profile(-0.1, 1.0).is_err());
        assert!(omega_profile(1.0, 0.0).is_err());
    }

    #[test]
    fn step_examples() {
        assert_eq!(relativistic_step(0.0, 0.5).unwrap(), 0.5);
        assert!((relativistic_step(0.5, 0.5).unwrap() - 0.8).abs() < 1e-15);
        assert!(relativistic_step(1.0, 0.1).is_err());
        assert!(relativistic_step(-1.5, 0.1).is_err());
    }

    #[test]
    fn disk_parameters() {
        let d = make_disk(1.0).unwrap();
        assert_eq!((d.r_min, d.r_max), (0.0, 2f64.sqrt()));
        assert!((d.density(0.3) - 1.0 / (2.0 * PI)).abs() < 1e-16);
        assert_eq!(d.density(2.0), 0.0);
        for w in [0.5, 1.0, 2.0] {
            let d = make_disk(w).unwrap();
            assert!((d.support_measure() - 2.0 * PI / (w * w)).abs() < 1e-13);
        }
    }

    #[test]
    fn ring_parameters() {
        let d = make_ring(1.0, 1.0).unwrap();
        assert!((d.r_min - (2f64.sqrt() - 1.0)).abs() < 1e-15);
        assert!((d.r_max - (2f64.sqrt() + 1.0)).abs() < 1e-15);
        assert!((d.params["K"] - 1.0 / (4.0 * PI)).abs() < 1e-16);
        // closed form: 2πK(1/R₁ − 1/R₂) = ω₀
        let closed = 2.0 * PI * d.params["K"] * (1.0 / d.r_min - 1.0 / d.r_max);
        assert!((closed - 1.0).abs() < 1e-14);
        assert!(make_ring(1.0, 0.0).is_err());
        assert!(make_ring(1.0, -1.0).is_err());
    }

    #[test]
    fn ring_collapses_to_circle() {
        for w in [0.5, 1.0, 3.0] {
            let (r1, r2) = ring_radii(w, 1e-9);
            assert!((r1 - 1.0 / w).abs() < 1e-8 / w);
            assert!((r2 - 1.0 / w).abs() < 1e-8 / w);
        }
    }

    #[test]
    fn string_parameters() {
        let d = make_string(1.0).unwrap();
        assert!((d.density(0.0) - 1.0 / (2.0 * 3f64.sqrt())).abs() < 1e-16);
        assert!((d.half_length - 3f64.sqrt()).abs() < 1e-16);
        let (e, s) = make_string(2.0).unwrap().energy_and_spin().unwrap();
        assert!((e - 2.0).abs() < 1e-10);
        assert!((s - 1.0).abs() < 1e-10);
    }

    #[test]
    fn scaling_errors() {
        assert!(cross_section_scaling(ModelFamily::Disk, &[1.0]).is_err());
        assert!(cross_section_scaling(ModelFamily::Disk, &[1.0, 1.0]).is_err());
    }

    #[test]
    fn degenerate_shape() {
        let zero = RadialDistribution::shape("zero", Arc::new(|_| 0.0), (0.0, 1.0), vec![]).unwrap();
        assert!(matches!(calibrate_scale(&zero, 1.0), Err(Error::DegenerateShape)));
    }

    #[test]
    fn invalid_supports() {
        let f: Profile = Arc::new(|_| 1.0);
        assert!(RadialDistribution::new("x", f.clone(), (-1.0, 1.0), vec![], 1.0).is_err());
        assert!(RadialDistribution::new("x", f.clone(), (1.0, 1.0), vec![], 1.0).is_err());
        assert!(RadialDistribution::new("x", f.clone(), (0.0, f64::INFINITY), vec![], 1.0).is_err());
        assert!(LinearDistribution::new("x", f, 0.0, 1.0).is_err());
    }

    #[test]
    fn report_json_keys() {
        let report = ModelFamily::Disk.build(1.0).unwrap().report().unwrap();
        let v = serde_json::to_value(&report).unwrap();
        for key in ["model", "omega0", "params", "E", "S", "sigma_T", "rel_err_E", "rel_err_S"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }
}
