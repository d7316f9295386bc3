//! Three-vectors and the fixed conventions used to pick transverse axes.

use nalgebra::Vector3;

use crate::{Error, Result};

/// Real three-vector. Directions, `e`, `b` and momenta all use this type.
pub type Vec3 = Vector3<f64>;

/// Tolerance on `|k| - 1` accepted at API boundaries.
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// Below this value of `|k × ẑ|` the z-axis is considered parallel to `k`.
pub const PARALLEL_THRESHOLD: f64 = 1e-6;

pub(crate) fn ensure_unit(k: &Vec3) -> Result<()> {
    let norm = k.norm();
    if !norm.is_finite() || (norm - 1.0).abs() > UNIT_TOLERANCE {
        return Err(Error::NonUnitDirection { norm });
    }
    Ok(())
}

pub(crate) fn ensure_finite(v: &Vec3, name: &'static str) -> Result<()> {
    if v.iter().all(|c| c.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite { name })
    }
}

/// The reference transverse axis for a propagation direction `k`.
///
/// This is the normalized projection of `ẑ` onto the plane orthogonal to `k`,
/// or of `x̂` when `k` is (nearly) parallel to `ẑ`. The result is a unit
/// vector orthogonal to `k`.
pub fn reference_axis(k: &Vec3) -> Vec3 {
    let axis = if k.cross(&Vec3::z()).norm() < PARALLEL_THRESHOLD {
        Vec3::x()
    } else {
        Vec3::z()
    };
    (axis - k * k.dot(&axis)).normalize()
}

/// Parses a comma separated triple such as `1,0,0`.
pub fn parse_triple(text: &str) -> Option<Vec3> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .ok()?;
    match parts.as_slice() {
        [x, y, z] => Some(Vec3::new(*x, *y, *z)),
        _ => None,
    }
}
