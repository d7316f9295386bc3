//! Discrete transformations of the photon tensor.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AntisymTensor;
use crate::Error;

/// Space inversion, inversion of the direction of motion, charge conjugation
/// and duality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiscreteSymmetry {
    /// `(e, b) → (−e, b)`
    P,
    /// `(e, b) → (e, −b)`
    T,
    /// `(e, b) → (−e, −b)`
    C,
    /// `(e, b) → (−b, e)`
    D,
}

impl DiscreteSymmetry {
    pub const ALL: [DiscreteSymmetry; 4] =
        [DiscreteSymmetry::P, DiscreteSymmetry::T, DiscreteSymmetry::C, DiscreteSymmetry::D];

    pub fn apply(self, f: &AntisymTensor) -> AntisymTensor {
        let (e, b) = (f.e, f.b);
        match self {
            DiscreteSymmetry::P => AntisymTensor::new(-e, b),
            DiscreteSymmetry::T => AntisymTensor::new(e, -b),
            DiscreteSymmetry::C => AntisymTensor::new(-e, -b),
            DiscreteSymmetry::D => AntisymTensor::new(-b, e),
        }
    }
}

impl fmt::Display for DiscreteSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            DiscreteSymmetry::P => "P",
            DiscreteSymmetry::T => "T",
            DiscreteSymmetry::C => "C",
            DiscreteSymmetry::D => "D",
        };
        f.write_str(name)
    }
}

impl FromStr for DiscreteSymmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "P" => Ok(DiscreteSymmetry::P),
            "T" => Ok(DiscreteSymmetry::T),
            "C" => Ok(DiscreteSymmetry::C),
            "D" => Ok(DiscreteSymmetry::D),
            other => Err(Error::UnknownSymmetry(other.to_string())),
        }
    }
}

pub fn discrete_symmetry(f: &AntisymTensor, op: DiscreteSymmetry) -> AntisymTensor {
    op.apply(f)
}
