use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::dynamics::apply_hamiltonian;
use super::{MomentumGrid, Representation, SpinorField};
use crate::helicity::Helicity;
use crate::spin::{helicity_basis_unchecked, CVec3};
use crate::vector::Vec3;
use crate::{Error, Result};

/// `Ψ(p) = C(p) (α(p) χ₊(p̂) + β(p) χ₋(p̂))`, normalized.
///
/// Every node carries the helicity vectors of its own direction, so spin and
/// momentum are entangled in any state that is not a single plane wave. The
/// `p = 0` node is left empty since it has no direction.
pub fn general_state<C, A, B>(grid: &MomentumGrid, c: C, alpha: A, beta: B) -> Result<SpinorField>
where
    C: Fn(&Vec3) -> Complex64,
    A: Fn(&Vec3) -> Complex64,
    B: Fn(&Vec3) -> Complex64,
{
    let origin = grid.origin_index();
    let mut values = vec![CVec3::zeros(); grid.len()];
    for (i, slot) in values.iter_mut().enumerate() {
        if i == origin {
            continue;
        }
        let p = grid.momentum(i);
        let amplitude = c(&p);
        if amplitude == Complex64::new(0.0, 0.0) {
            continue;
        }
        let basis = helicity_basis_unchecked(&p.normalize());
        *slot = (basis.chi_plus * alpha(&p) + basis.chi_minus * beta(&p)) * amplitude;
    }
    let mut state = SpinorField::from_values(*grid, Representation::Momentum, values)?;
    state.normalize()?;
    Ok(state)
}

/// Gaussian wave packet `Ψ(p) ∝ exp(−|p − p₀|²/4σ²) χ_h(p̂)` of unit norm.
///
/// The momentum density `|Ψ|²` has standard deviation `σ` per axis. Requires
/// `|p₀| > 3σ` so that the packet stays clear of the origin.
pub fn gaussian_packet(
    grid: &MomentumGrid,
    p0: &Vec3,
    sigma: f64,
    helicity: Helicity,
) -> Result<SpinorField> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::NonPositive { name: "sigma", value: sigma });
    }
    if !p0.iter().all(|c| c.is_finite()) || !grid.contains(p0) {
        return Err(Error::InvalidPacket(format!("center {p0:?} lies outside the grid")));
    }
    if p0.norm() <= 3.0 * sigma {
        return Err(Error::InvalidPacket(format!(
            "|p0| = {} must exceed 3σ = {}",
            p0.norm(),
            3.0 * sigma
        )));
    }
    let envelope = gaussian_envelope(*p0, sigma);
    let (a, b) = helicity_weights(helicity);
    general_state(grid, envelope, move |_| a, move |_| b)
}

pub(crate) fn gaussian_envelope(p0: Vec3, sigma: f64) -> impl Fn(&Vec3) -> Complex64 {
    let inv = 1.0 / (4.0 * sigma * sigma);
    move |p: &Vec3| Complex64::from((-(p - p0).norm_squared() * inv).exp())
}

fn helicity_weights(helicity: Helicity) -> (Complex64, Complex64) {
    match helicity {
        Helicity::Positive => (Complex64::from(1.0), Complex64::from(0.0)),
        Helicity::Negative => (Complex64::from(0.0), Complex64::from(1.0)),
    }
}

/// Finite-width realization of the energy eigenstate `χ_h ⊗ δ(|p| − E)`:
/// radial profile `exp(−(|p| − E)²/4w²)`, so the shell has rms width `≈ w`.
pub fn shell_state(
    grid: &MomentumGrid,
    energy: f64,
    helicity: Helicity,
    width: f64,
) -> Result<SpinorField> {
    if !(width > 0.0) || !width.is_finite() {
        return Err(Error::NonPositive { name: "width", value: width });
    }
    if !(energy > 0.0 && energy < grid.p_max()) {
        return Err(Error::EnergyOutsideGrid { energy, limit: grid.p_max() });
    }
    let inv = 1.0 / (4.0 * width * width);
    let (a, b) = helicity_weights(helicity);
    general_state(
        grid,
        move |p| Complex64::from((-(p.norm() - energy).powi(2) * inv).exp()),
        move |_| a,
        move |_| b,
    )
}

/// Eigen-equation defect of a shell state, with the width that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StationaryResidual {
    pub energy: f64,
    pub width: f64,
    /// `‖(H − hE)Ψ‖ / ‖Ψ‖`
    pub residual: f64,
}

/// How far a shell state of energy `E` and helicity `h` is from solving
/// `HΨ = hEΨ`. The residual equals the rms spread of `|p|` about `E`, so it
/// vanishes with the shell width.
pub fn stationary_residual(
    grid: &MomentumGrid,
    energy: f64,
    helicity: Helicity,
    width: f64,
) -> Result<StationaryResidual> {
    let state = shell_state(grid, energy, helicity, width)?;
    let h_state = apply_hamiltonian(&state)?;
    let shift = Complex64::from(helicity.value() * energy);
    let defect: f64 = h_state
        .values()
        .iter()
        .zip(state.values())
        .map(|(hv, v)| (hv - v * shift).norm_squared())
        .sum::<f64>()
        * grid.cell_volume(Representation::Momentum);
    Ok(StationaryResidual { energy, width, residual: defect.sqrt() / state.norm() })
}
