//! Numerical exhibit of the formal resemblance between the photon
//! Schrödinger equation and the source-free Maxwell equations.
//!
//! Writing a position-space state as `Ψ = E + iB` and splitting
//! `i∂ₜΨ = ∇×Ψ` into real and imaginary parts gives `∂ₜE = ∇×B` and
//! `∂ₜB = −∇×E`; the transversality condition `p·Ψ = 0`, read with `p → −i∇`,
//! gives `∇·E = ∇·B = 0`. [`maxwell_residual`] measures how well these hold.
//!
//! This is not a derivation of Maxwell's equations and must not be read as
//! one. It identifies the three-dimensional spin space of the state with
//! physical space, and replaces the numbers `p_k` in `p·Ψ = 0` by derivative
//! operators. `Ψ` is a probability amplitude, not a field carrying energy and
//! momentum; the agreement checked here is a property of the equations'
//! shape, nothing more.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::dynamics::{observables, propagate_for};
use super::{MomentumGrid, Representation, SpinorField};
use crate::spin::CVec3;
use crate::{Error, Result};

/// Largest transversality defect accepted by [`maxwell_residual`].
pub const TRANSVERSE_LIMIT: f64 = 1e-6;

/// Relative residuals of the four equations.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaxwellResiduals {
    /// `‖∇×E + ∂ₜB‖ / ‖∂ₜB‖`
    pub curl_e_residual: f64,
    /// `‖∇×B − ∂ₜE‖ / ‖∂ₜE‖`
    pub curl_b_residual: f64,
    /// `‖∇·E‖ / ‖∇×E‖`
    pub div_e: f64,
    /// `‖∇·B‖ / ‖∇×B‖`
    pub div_b: f64,
    pub dt: f64,
    pub transversality_defect: f64,
}

type RealField = Vec<[f64; 3]>;

fn split(state: &SpinorField) -> (RealField, RealField) {
    state
        .values()
        .iter()
        .map(|v| ([v.x.re, v.y.re, v.z.re], [v.x.im, v.y.im, v.z.im]))
        .unzip()
}

fn spectrum(grid: &MomentumGrid, field: &RealField) -> SpinorField {
    let values = field
        .iter()
        .map(|f| CVec3::new(f[0].into(), f[1].into(), f[2].into()))
        .collect();
    SpinorField::from_values(*grid, Representation::Position, values)
        .and_then(|s| s.to_momentum())
        .expect("finite position field")
}

/// Spectral curl (`i p ×`) and divergence (`i p ·`) of a real field.
fn curl_and_div(grid: &MomentumGrid, field: &RealField) -> (RealField, Vec<f64>) {
    let hat = spectrum(grid, field);
    let i = Complex64::new(0.0, 1.0);
    let mut curl = Vec::with_capacity(grid.len());
    let mut div = Vec::with_capacity(grid.len());
    for (n, v) in hat.values().iter().enumerate() {
        let p = grid.momentum(n).map(Complex64::from);
        curl.push(p.cross(v) * i);
        div.push(CVec3::new(p.dot(v) * i, 0.0.into(), 0.0.into()));
    }
    let curl = SpinorField::from_values(*grid, Representation::Momentum, curl)
        .and_then(|s| s.to_position())
        .expect("finite spectrum");
    let div = SpinorField::from_values(*grid, Representation::Momentum, div)
        .and_then(|s| s.to_position())
        .expect("finite spectrum");
    (
        curl.values().iter().map(|v| [v.x.re, v.y.re, v.z.re]).collect(),
        div.values().iter().map(|v| v.x.re).collect(),
    )
}

fn norm(field: &RealField) -> f64 {
    field.iter().map(|f| f[0] * f[0] + f[1] * f[1] + f[2] * f[2]).sum::<f64>().sqrt()
}

fn combination(a: &RealField, sa: f64, b: &RealField, sb: f64) -> RealField {
    a.iter()
        .zip(b)
        .map(|(x, y)| [sa * x[0] + sb * y[0], sa * x[1] + sb * y[1], sa * x[2] + sb * y[2]])
        .collect()
}

/// Residuals of the four Maxwell-like equations for `E = Re Ψ`, `B = Im Ψ`.
///
/// Space derivatives are spectral. Time derivatives are central differences
/// of exactly evolved states at `±dt`, so the curl residuals fall as `dt²`.
/// The state must be in the position representation and transverse.
pub fn maxwell_residual(state: &SpinorField, dt: f64) -> Result<MaxwellResiduals> {
    state.expect(Representation::Position)?;
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::NonPositive { name: "dt", value: dt });
    }
    let grid = *state.grid();
    let momentum = state.to_momentum()?;
    let defect = observables(&momentum)?.transversality_defect;
    if defect > TRANSVERSE_LIMIT {
        return Err(Error::NotTransverse { defect, limit: TRANSVERSE_LIMIT });
    }

    let forward = propagate_for(&momentum, dt).to_position()?;
    let backward = propagate_for(&momentum, -dt).to_position()?;
    let (e_fwd, b_fwd) = split(&forward);
    let (e_bwd, b_bwd) = split(&backward);
    let scale = 0.5 / dt;
    let de_dt = combination(&e_fwd, scale, &e_bwd, -scale);
    let db_dt = combination(&b_fwd, scale, &b_bwd, -scale);

    let (e, b) = split(state);
    let (curl_e, div_e) = curl_and_div(&grid, &e);
    let (curl_b, div_b) = curl_and_div(&grid, &b);

    let faraday = combination(&curl_e, 1.0, &db_dt, 1.0);
    let ampere = combination(&curl_b, 1.0, &de_dt, -1.0);
    let scalar_norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    Ok(MaxwellResiduals {
        curl_e_residual: norm(&faraday) / norm(&db_dt),
        curl_b_residual: norm(&ampere) / norm(&de_dt),
        div_e: scalar_norm(&div_e) / norm(&curl_e),
        div_b: scalar_norm(&div_b) / norm(&curl_b),
        dt,
        transversality_defect: defect,
    })
}

/// Adds `amount · g(p) χ₀(p̂)` to a momentum-space state, where `g` is the
/// modulus of the state at each node. Used to probe how the divergence
/// equations respond to a longitudinal admixture.
pub fn contaminate(state: &SpinorField, amount: f64) -> Result<SpinorField> {
    state.expect(Representation::Momentum)?;
    let grid = *state.grid();
    let values = state
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let p = grid.momentum(i);
            let magnitude = p.norm();
            if magnitude == 0.0 {
                return *v;
            }
            let chi0 = (p / magnitude).map(Complex64::from);
            v + chi0 * Complex64::from(amount * v.norm())
        })
        .collect();
    let mut out = SpinorField::from_values(grid, Representation::Momentum, values)?;
    out.normalize()?;
    Ok(out)
}
