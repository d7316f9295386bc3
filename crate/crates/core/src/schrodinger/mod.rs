//! Single-photon states on a Cartesian momentum grid.
//!
//! A state is a three-component spinor `Ψ_j(p)`. The Hamiltonian is
//! `H = S·P`, which in the momentum representation acts node by node as
//! `HΨ(p) = |p| (p̂·S) Ψ(p) = i p × Ψ(p)`. Because `H` is block diagonal in
//! `p`, evolution is done exactly, node by node, with no time-stepping
//! error.
//!
//! The position representation is reached by a discrete Fourier transform
//! with kernel `e^{+ip·r}`, so that `P = −i∇` and the position-space equation
//! reads `i ∂ₜΨ = ∇ × Ψ`.

mod dynamics;
mod fft;
pub mod io;
mod maxwell;
mod states;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::spin::CVec3;
use crate::vector::Vec3;
use crate::{Error, Result};

pub use dynamics::{
    apply_hamiltonian, evolve, evolve_observed, evolve_position, observables, EvolutionConfig,
    ObservableRow, Observables,
};
pub use maxwell::{contaminate, maxwell_residual, MaxwellResiduals, TRANSVERSE_LIMIT};
pub use states::{gaussian_packet, general_state, shell_state, stationary_residual, StationaryResidual};

/// Which variable a [`SpinorField`] is sampled in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Momentum,
    Position,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representation::Momentum => "momentum",
            Representation::Position => "position",
        })
    }
}

/// A cube of `n³` momentum nodes `p = −p_max + jΔp`, `Δp = 2p_max/n`.
///
/// The matching position grid has spacing `Δr = π/p_max` and nodes
/// `r = (m − n/2)Δr`. Nodes are stored row-major with `z` fastest.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentumGrid {
    n: usize,
    p_max: f64,
}

impl MomentumGrid {
    pub const MAX_NODES_PER_AXIS: usize = 512;

    pub fn new(n: usize, p_max: f64) -> Result<Self> {
        if n < 8 || n % 2 != 0 || n > Self::MAX_NODES_PER_AXIS {
            return Err(Error::InvalidGrid(format!(
                "nodes per axis must be even and between 8 and {} (got {n})",
                Self::MAX_NODES_PER_AXIS
            )));
        }
        if !(p_max > 0.0) || !p_max.is_finite() {
            return Err(Error::InvalidGrid(format!("p_max must be positive (got {p_max})")));
        }
        Ok(MomentumGrid { n, p_max })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    pub fn len(&self) -> usize {
        self.n * self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `Δp`
    pub fn spacing(&self) -> f64 {
        2.0 * self.p_max / self.n as f64
    }

    /// `Δr = 2π/(nΔp)`
    pub fn position_spacing(&self) -> f64 {
        std::f64::consts::PI / self.p_max
    }

    /// Volume element of the given representation.
    pub fn cell_volume(&self, representation: Representation) -> f64 {
        match representation {
            Representation::Momentum => self.spacing().powi(3),
            Representation::Position => self.position_spacing().powi(3),
        }
    }

    pub fn coordinate(&self, j: usize) -> f64 {
        -self.p_max + j as f64 * self.spacing()
    }

    pub fn position_coordinate(&self, m: usize) -> f64 {
        (m as f64 - (self.n / 2) as f64) * self.position_spacing()
    }

    pub fn index(&self, ix: usize, iy: usize, iz: usize) -> usize {
        (ix * self.n + iy) * self.n + iz
    }

    pub fn unravel(&self, index: usize) -> (usize, usize, usize) {
        let n = self.n;
        (index / (n * n), (index / n) % n, index % n)
    }

    pub fn momentum(&self, index: usize) -> Vec3 {
        let (ix, iy, iz) = self.unravel(index);
        Vec3::new(self.coordinate(ix), self.coordinate(iy), self.coordinate(iz))
    }

    pub fn position(&self, index: usize) -> Vec3 {
        let (ix, iy, iz) = self.unravel(index);
        Vec3::new(
            self.position_coordinate(ix),
            self.position_coordinate(iy),
            self.position_coordinate(iz),
        )
    }

    /// Index of the `p = 0` node.
    pub fn origin_index(&self) -> usize {
        let h = self.n / 2;
        self.index(h, h, h)
    }

    /// Whether `p` lies inside the sampled cube `[−p_max, p_max − Δp]³`.
    pub fn contains(&self, p: &Vec3) -> bool {
        let hi = self.p_max - self.spacing();
        p.iter().all(|c| *c >= -self.p_max && *c <= hi)
    }

    pub fn momenta(&self) -> impl Iterator<Item = Vec3> + '_ {
        (0..self.len()).map(move |i| self.momentum(i))
    }
}

/// A three-component complex field on a [`MomentumGrid`].
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorField {
    grid: MomentumGrid,
    values: Vec<CVec3>,
    representation: Representation,
}

impl SpinorField {
    pub fn zeros(grid: MomentumGrid, representation: Representation) -> Self {
        SpinorField { grid, values: vec![CVec3::zeros(); grid.len()], representation }
    }

    pub fn from_values(
        grid: MomentumGrid,
        representation: Representation,
        values: Vec<CVec3>,
    ) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "expected {} nodes, got {}",
                grid.len(),
                values.len()
            )));
        }
        if values.iter().flat_map(|v| v.iter()).any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite { name: "state values" });
        }
        Ok(SpinorField { grid, values, representation })
    }

    pub fn grid(&self) -> &MomentumGrid {
        &self.grid
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    pub fn values(&self) -> &[CVec3] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [CVec3] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<CVec3> {
        self.values
    }

    pub(crate) fn expect(&self, representation: Representation) -> Result<()> {
        if self.representation == representation {
            Ok(())
        } else {
            Err(Error::WrongRepresentation { expected: representation, found: self.representation })
        }
    }

    /// `Σ |Ψ_j|² ΔV`, with `ΔV` the cell volume of the representation.
    pub fn norm_squared(&self) -> f64 {
        let sum: f64 = self.values.iter().map(|v| v.norm_squared()).sum();
        sum * self.grid.cell_volume(self.representation)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Rescales to unit norm.
    pub fn normalize(&mut self) -> Result<()> {
        let norm = self.norm();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::NullState);
        }
        let scale = 1.0 / norm;
        for v in &mut self.values {
            *v *= num_complex::Complex64::from(scale);
        }
        Ok(())
    }

    /// `⟨self, other⟩` with the grid measure.
    pub fn inner(&self, other: &SpinorField) -> num_complex::Complex64 {
        let sum: num_complex::Complex64 =
            self.values.iter().zip(&other.values).map(|(a, b)| a.dotc(b)).sum();
        sum * self.grid.cell_volume(self.representation)
    }

    /// Largest nodewise difference `max |Ψ_j − Φ_j|`.
    pub fn max_abs_diff(&self, other: &SpinorField) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .flat_map(|(a, b)| (0..3).map(move |j| (a[j] - b[j]).norm()))
            .fold(0.0, f64::max)
    }

    /// Transforms a momentum-space state to position space.
    pub fn to_position(&self) -> Result<SpinorField> {
        self.expect(Representation::Momentum)?;
        Ok(fft::transform(self, Representation::Position))
    }

    /// Transforms a position-space state to momentum space.
    pub fn to_momentum(&self) -> Result<SpinorField> {
        self.expect(Representation::Position)?;
        Ok(fft::transform(self, Representation::Momentum))
    }

    /// Expectation of the position, `Σ r |Ψ|² ΔV / ‖Ψ‖²`, for a position-space
    /// state. Coordinates are taken in the centered cell `[−L/2, L/2)`.
    pub fn centroid(&self) -> Result<Vec3> {
        self.expect(Representation::Position)?;
        let mut weighted = Vec3::zeros();
        let mut total = 0.0;
        for (i, v) in self.values.iter().enumerate() {
            let w = v.norm_squared();
            weighted += self.grid.position(i) * w;
            total += w;
        }
        if !(total > 0.0) {
            return Err(Error::NullState);
        }
        Ok(weighted / total)
    }
}

pub fn to_position(state: &SpinorField) -> Result<SpinorField> {
    state.to_position()
}

pub fn to_momentum(state: &SpinorField) -> Result<SpinorField> {
    state.to_momentum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(MomentumGrid::new(7, 1.0).is_err());
        assert!(MomentumGrid::new(6, 1.0).is_err());
        assert!(MomentumGrid::new(9, 1.0).is_err());
        assert!(MomentumGrid::new(8, 0.0).is_err());
        assert!(MomentumGrid::new(8, f64::NAN).is_err());
        let g = MomentumGrid::new(8, 2.0).unwrap();
        assert_eq!(g.spacing(), 0.5);
        assert_eq!(g.coordinate(0), -2.0);
        assert_eq!(g.momentum(g.origin_index()), Vec3::zeros());
        assert_eq!(g.position(g.origin_index()), Vec3::zeros());
        assert_eq!(g.unravel(g.index(1, 2, 3)), (1, 2, 3));
        assert!(g.contains(&Vec3::new(1.5, -2.0, 0.0)));
        assert!(!g.contains(&Vec3::new(2.0, 0.0, 0.0)));
    }

    #[test]
    fn representation_tag_checked() {
        let g = MomentumGrid::new(8, 1.0).unwrap();
        let s = SpinorField::zeros(g, Representation::Position);
        assert!(matches!(s.to_position(), Err(Error::WrongRepresentation { .. })));
        let m = SpinorField::zeros(g, Representation::Momentum);
        assert!(m.to_momentum().is_err());
        let mut z = m.clone();
        assert!(matches!(z.normalize(), Err(Error::NullState)));
    }

    #[test]
    fn from_values_checks_length_and_finiteness() {
        let g = MomentumGrid::new(8, 1.0).unwrap();
        assert!(SpinorField::from_values(g, Representation::Momentum, vec![CVec3::zeros(); 3]).is_err());
        let mut values = vec![CVec3::zeros(); g.len()];
        values[5].x.re = f64::INFINITY;
        assert!(SpinorField::from_values(g, Representation::Momentum, values).is_err());
    }
}
