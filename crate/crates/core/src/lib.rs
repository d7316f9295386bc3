//! Photon-tensor algebra, spin-1 helicity states, exact single-photon
//! evolution on momentum grids, and rotating toy models with `E = ħω₀`,
//! `S = ħ`.
//!
//! All quantities use natural units `ħ = c = 1`.
//!
//! * [`tensor`]: the antisymmetric tensor `f^{μν}` of a photon, its dual,
//!   invariants, boosts, rotations and the discrete transformations P, T, C, D.
//! * [`spin`]: spin-1 matrices and the helicity eigenbasis of `k·S`.
//! * [`schrodinger`]: states on a momentum grid, `H = S·P`, evolution,
//!   observables, and the Maxwell-equation comparison.
//! * [`toy`]: rotating energy distributions and their energy and spin.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration used by [`toy`].

mod error;
mod helicity;
pub mod quadrature;
pub mod schrodinger;
pub mod spin;
pub mod tensor;
pub mod toy;
mod vector;

pub use error::{Error, Result};
pub use helicity::Helicity;
pub use vector::{parse_triple, reference_axis, Vec3, PARALLEL_THRESHOLD, UNIT_TOLERANCE};

pub use nalgebra;
pub use num_complex::Complex64;
