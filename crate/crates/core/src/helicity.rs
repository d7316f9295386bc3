use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Photon helicity, the eigenvalue of `k̂·S` in units of ħ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Helicity {
    Positive,
    Negative,
}

impl Helicity {
    pub fn from_sign(sign: i32) -> Result<Self> {
        match sign {
            1 => Ok(Helicity::Positive),
            -1 => Ok(Helicity::Negative),
            other => Err(Error::InvalidHelicity(other)),
        }
    }

    pub fn sign(self) -> i32 {
        match self {
            Helicity::Positive => 1,
            Helicity::Negative => -1,
        }
    }

    pub fn value(self) -> f64 {
        f64::from(self.sign())
    }

    pub fn flipped(self) -> Self {
        match self {
            Helicity::Positive => Helicity::Negative,
            Helicity::Negative => Helicity::Positive,
        }
    }
}

impl fmt::Display for Helicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Helicity::Positive => "+1",
            Helicity::Negative => "-1",
        })
    }
}

impl std::str::FromStr for Helicity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" | "plus" => Ok(Helicity::Positive),
            "-1" | "-" | "minus" => Ok(Helicity::Negative),
            other => Err(Error::InvalidHelicity(other.parse().unwrap_or(0))),
        }
    }
}

impl Serialize for Helicity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i32(self.sign())
    }
}

impl<'de> Deserialize<'de> for Helicity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let sign = i32::deserialize(deserializer)?;
        Helicity::from_sign(sign).map_err(serde::de::Error::custom)
    }
}
