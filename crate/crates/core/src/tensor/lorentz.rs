//! Boosts and rotations of photon tensors.
//!
//! A boost along `x̂` with speed `β` acts on the components as
//!
//! ```text
//! e₁' = e₁        e₂' = γ(e₂ − βb₃)    e₃' = γ(e₃ + βb₂)
//! b₁' = b₁        b₂' = γ(b₂ + βe₃)    b₃' = γ(b₃ − βe₂)
//! ```
//!
//! Boosts in other directions are reduced to this one by rotating `β` onto
//! `x̂`, boosting, and rotating back.

use nalgebra::Matrix3;

use super::AntisymTensor;
use crate::vector::{ensure_finite, ensure_unit, reference_axis, Vec3};
use crate::{Error, Result};

/// A pure boost into a frame moving with velocity `β` (units of `c`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzBoost {
    beta: Vec3,
}

impl LorentzBoost {
    pub fn new(beta: Vec3) -> Result<Self> {
        ensure_finite(&beta, "beta")?;
        let speed = beta.norm();
        if speed >= 1.0 {
            return Err(Error::Superluminal { beta: speed });
        }
        Ok(LorentzBoost { beta })
    }

    /// Boost with signed speed `beta` along the unit vector `direction`.
    pub fn along(direction: &Vec3, beta: f64) -> Result<Self> {
        ensure_unit(direction)?;
        Self::new(direction * beta)
    }

    pub fn identity() -> Self {
        LorentzBoost { beta: Vec3::zeros() }
    }

    pub fn beta(&self) -> Vec3 {
        self.beta
    }

    pub fn speed(&self) -> f64 {
        self.beta.norm()
    }

    pub fn gamma(&self) -> f64 {
        1.0 / (1.0 - self.beta.norm_squared()).sqrt()
    }

    pub fn inverse(&self) -> Self {
        LorentzBoost { beta: -self.beta }
    }

    /// Transforms a contravariant four-vector `(t, x)`.
    pub fn apply_four_vector(&self, t: f64, x: &Vec3) -> (f64, Vec3) {
        let speed = self.speed();
        if speed == 0.0 {
            return (t, *x);
        }
        let gamma = self.gamma();
        let n = self.beta / speed;
        let x_par = n.dot(x);
        let t_new = gamma * (t - speed * x_par);
        let x_new = x + n * ((gamma - 1.0) * x_par - gamma * speed * t);
        (t_new, x_new)
    }

    /// Aberrated propagation direction: the space part of the boosted null
    /// vector `(1, k)`, renormalized.
    pub fn aberrate(&self, k: &Vec3) -> Vec3 {
        let (_, k_new) = self.apply_four_vector(1.0, k);
        k_new.normalize()
    }
}

/// Boost of `f` along `x̂` with signed speed `beta`, `|beta| < 1`.
pub(crate) fn boost_along_x(f: &AntisymTensor, beta: f64) -> AntisymTensor {
    let gamma = 1.0 / (1.0 - beta * beta).sqrt();
    let (e, b) = (&f.e, &f.b);
    AntisymTensor::new(
        Vec3::new(e.x, gamma * (e.y - beta * b.z), gamma * (e.z + beta * b.y)),
        Vec3::new(b.x, gamma * (b.y + beta * e.z), gamma * (b.z - beta * e.y)),
    )
}

/// Transforms `f` and its propagation direction `k` into the frame moving
/// with velocity `boost`.
///
/// Returns the transformed tensor and the aberrated unit direction.
pub fn boost(f: &AntisymTensor, k: &Vec3, boost: &LorentzBoost) -> Result<(AntisymTensor, Vec3)> {
    ensure_unit(k)?;
    let speed = boost.speed();
    if speed == 0.0 {
        return Ok((*f, *k));
    }
    let to_x = Rotation::aligning(&(boost.beta / speed), &Vec3::x());
    let boosted = boost_along_x(&to_x.apply_tensor(f), speed);
    let tensor = to_x.inverse().apply_tensor(&boosted);
    Ok((tensor, boost.aberrate(k)))
}

/// Doppler factor applied to an energy or frequency: `E γ(1 − β)`.
///
/// Positive `beta` means the observer recedes along the propagation
/// direction.
pub fn doppler_shift(energy: f64, beta: f64) -> Result<f64> {
    if !(energy > 0.0) || !energy.is_finite() {
        return Err(Error::NonPositive { name: "energy", value: energy });
    }
    if !(beta.abs() < 1.0) {
        return Err(Error::Superluminal { beta: beta.abs() });
    }
    Ok(energy * ((1.0 - beta) / (1.0 + beta)).sqrt())
}

/// A proper rotation of three-space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation {
    matrix: Matrix3<f64>,
}

impl Rotation {
    const TOLERANCE: f64 = 1e-12;

    /// Checks `RᵀR = I` and `det R = +1` to within `1e-12`.
    pub fn from_matrix(matrix: Matrix3<f64>) -> Result<Self> {
        if !matrix.iter().all(|c| c.is_finite()) {
            return Err(Error::InvalidRotation("non-finite entries".into()));
        }
        let defect = (matrix.transpose() * matrix - Matrix3::identity()).amax();
        if defect > Self::TOLERANCE {
            return Err(Error::InvalidRotation(format!("RᵀR deviates from I by {defect:e}")));
        }
        let det = matrix.determinant();
        if (det - 1.0).abs() > Self::TOLERANCE {
            return Err(Error::InvalidRotation(format!("det R = {det}")));
        }
        Ok(Rotation { matrix })
    }

    pub fn identity() -> Self {
        Rotation { matrix: Matrix3::identity() }
    }

    /// Rodrigues' formula `R = I + sinθ K + (1 − cosθ) K²`, with `K` the
    /// cross-product matrix of the normalized axis.
    pub fn from_axis_angle(axis: &Vec3, angle: f64) -> Self {
        let n = axis.normalize();
        let k = n.cross_matrix();
        let (s, c) = angle.sin_cos();
        Rotation { matrix: Matrix3::identity() + k * s + k * k * (1.0 - c) }
    }

    /// The smallest rotation taking unit vector `from` onto unit vector `to`.
    /// Antiparallel pairs turn by π about the reference axis of `from`.
    pub fn aligning(from: &Vec3, to: &Vec3) -> Self {
        let axis = from.cross(to);
        let sin = axis.norm();
        let cos = from.dot(to);
        if sin < 1e-15 {
            if cos > 0.0 {
                return Rotation::identity();
            }
            return Rotation::from_axis_angle(&reference_axis(from), std::f64::consts::PI);
        }
        Rotation::from_axis_angle(&axis, sin.atan2(cos))
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.matrix
    }

    pub fn inverse(&self) -> Self {
        Rotation { matrix: self.matrix.transpose() }
    }

    pub fn compose(&self, then: &Rotation) -> Self {
        Rotation { matrix: then.matrix * self.matrix }
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        self.matrix * v
    }

    /// `e` and `b` both turn as ordinary vectors under proper rotations.
    pub fn apply_tensor(&self, f: &AntisymTensor) -> AntisymTensor {
        AntisymTensor::new(self.apply(&f.e), self.apply(&f.b))
    }
}
