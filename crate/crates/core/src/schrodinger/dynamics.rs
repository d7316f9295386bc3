use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Representation, SpinorField};
use crate::spin::{apply_spin_dot, apply_transverse_projector, longitudinal_amplitude, CVec3};
use crate::vector::Vec3;
use crate::{Error, Result};

/// `HΨ(p) = |p|(p̂·S)Ψ(p) = i p × Ψ(p)` on a momentum-space state.
pub fn apply_hamiltonian(state: &SpinorField) -> Result<SpinorField> {
    state.expect(Representation::Momentum)?;
    let grid = *state.grid();
    let values = state
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| apply_spin_dot(&grid.momentum(i), v))
        .collect();
    SpinorField::from_values(grid, Representation::Momentum, values)
}

/// Time step, number of steps and optional projection for [`evolve`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvolutionConfig {
    pub dt: f64,
    pub steps: usize,
    #[serde(default)]
    pub project_transverse: bool,
    /// Record observables every this many steps; `None` records only the
    /// first and last step.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observables_every: Option<usize>,
}

impl EvolutionConfig {
    pub fn new(dt: f64, steps: usize) -> Result<Self> {
        let config = EvolutionConfig { dt, steps, project_transverse: false, observables_every: None };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(Error::NonPositive { name: "dt", value: self.dt });
        }
        if self.steps == 0 {
            return Err(Error::NonPositive { name: "steps", value: 0.0 });
        }
        if self.observables_every == Some(0) {
            return Err(Error::NonPositive { name: "observables_every", value: 0.0 });
        }
        Ok(())
    }
}

/// Per-node propagator `exp(−iθM) = I − i sinθ M − (1 − cosθ) M²` with
/// `M = p̂·S` and `θ = |p| dt`, applied `steps` times.
fn propagate_node(p: &Vec3, v: &CVec3, dt: f64, steps: usize, project: bool) -> CVec3 {
    let magnitude = p.norm();
    if magnitude == 0.0 {
        return *v;
    }
    let k = p / magnitude;
    let (sin, cos) = (magnitude * dt).sin_cos();
    let a = Complex64::new(0.0, -sin);
    let b = Complex64::from(1.0 - cos);
    let mut v = *v;
    for _ in 0..steps {
        let m = apply_spin_dot(&k, &v);
        let m2 = apply_spin_dot(&k, &m);
        v = v + m * a - m2 * b;
        if project {
            v = apply_transverse_projector(&k, &v);
        }
    }
    v
}

fn propagate(state: &SpinorField, dt: f64, steps: usize, project: bool) -> SpinorField {
    let grid = *state.grid();
    let values = state
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| propagate_node(&grid.momentum(i), v, dt, steps, project))
        .collect();
    SpinorField::from_values(grid, Representation::Momentum, values)
        .expect("unitary propagation keeps values finite")
}

/// One exact step of signed length `dt`; negative `dt` runs backwards.
pub(super) fn propagate_for(state: &SpinorField, dt: f64) -> SpinorField {
    propagate(state, dt, 1, false)
}

/// Exact evolution of a momentum-space state under `i∂ₜΨ = HΨ`.
///
/// Nodes are independent, so each node is carried through all steps in turn;
/// the result is identical to stepping the whole grid `steps` times.
pub fn evolve(state: &SpinorField, config: &EvolutionConfig) -> Result<SpinorField> {
    state.expect(Representation::Momentum)?;
    config.validate()?;
    Ok(propagate(state, config.dt, config.steps, config.project_transverse))
}

/// Evolves a position-space state with the spectral form of `H = −i S·∇`:
/// every step goes to momentum space, applies the exact propagator and comes
/// back.
pub fn evolve_position(state: &SpinorField, config: &EvolutionConfig) -> Result<SpinorField> {
    state.expect(Representation::Position)?;
    config.validate()?;
    let mut current = state.clone();
    for _ in 0..config.steps {
        let momentum = current.to_momentum()?;
        current = propagate(&momentum, config.dt, 1, config.project_transverse).to_position()?;
    }
    Ok(current)
}

/// Expectation values of a momentum-space state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Observables {
    pub norm: f64,
    /// `⟨|H|⟩`: both helicities count as positive energy.
    pub energy: f64,
    /// `⟨H⟩`, negative for helicity −1.
    pub signed_energy: f64,
    /// `⟨p̂·S⟩`
    pub helicity: f64,
    pub mean_momentum: Vec3,
    /// `‖χ₀ component‖ / ‖Ψ‖`
    pub transversality_defect: f64,
}

/// Computes the [`Observables`] of a momentum-space state. Sums run in node
/// order, so repeated calls agree bitwise.
pub fn observables(state: &SpinorField) -> Result<Observables> {
    state.expect(Representation::Momentum)?;
    let grid = state.grid();
    let mut norm2 = 0.0;
    let mut energy = 0.0;
    let mut signed = 0.0;
    let mut helicity = 0.0;
    let mut longitudinal = 0.0;
    let mut momentum = Vec3::zeros();
    for (i, v) in state.values().iter().enumerate() {
        let weight = v.norm_squared();
        norm2 += weight;
        let p = grid.momentum(i);
        let magnitude = p.norm();
        if magnitude == 0.0 {
            continue;
        }
        let k = p / magnitude;
        let along = longitudinal_amplitude(&k, v).norm_sqr();
        let h = v.dotc(&apply_spin_dot(&k, v)).re;
        energy += magnitude * (weight - along);
        signed += magnitude * h;
        helicity += h;
        longitudinal += along;
        momentum += p * weight;
    }
    if !(norm2 > 0.0) {
        return Err(Error::NullState);
    }
    let cell = grid.cell_volume(Representation::Momentum);
    Ok(Observables {
        norm: (norm2 * cell).sqrt(),
        energy: energy / norm2,
        signed_energy: signed / norm2,
        helicity: helicity / norm2,
        mean_momentum: momentum / norm2,
        transversality_defect: (longitudinal / norm2).sqrt(),
    })
}

/// One CSV row of an evolution run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObservableRow {
    pub step: usize,
    pub time: f64,
    pub norm: f64,
    pub energy: f64,
    pub helicity: f64,
    pub defect: f64,
}

impl ObservableRow {
    fn new(step: usize, dt: f64, obs: &Observables) -> Self {
        ObservableRow {
            step,
            time: step as f64 * dt,
            norm: obs.norm,
            energy: obs.energy,
            helicity: obs.helicity,
            defect: obs.transversality_defect,
        }
    }
}

/// Evolves like [`evolve`], recording observables at step 0, every
/// `observables_every` steps and at the final step.
pub fn evolve_observed(
    state: &SpinorField,
    config: &EvolutionConfig,
) -> Result<(SpinorField, Vec<ObservableRow>)> {
    state.expect(Representation::Momentum)?;
    config.validate()?;
    let every = config.observables_every.unwrap_or(config.steps);
    let mut rows = vec![ObservableRow::new(0, config.dt, &observables(state)?)];
    let mut current = state.clone();
    let mut done = 0;
    while done < config.steps {
        let chunk = every.min(config.steps - done);
        current = propagate(&current, config.dt, chunk, config.project_transverse);
        done += chunk;
        rows.push(ObservableRow::new(done, config.dt, &observables(&current)?));
    }
    Ok((current, rows))
}
