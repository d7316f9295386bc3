//! The photon tensor: an antisymmetric rank-2 Lorentz tensor `f^{μν}` whose six
//! independent components are packed into two three-vectors `e` and `b`.
//!
//! ```text
//!            ⎛  0    e₁   e₂   e₃ ⎞
//!   f^{μν} = ⎜ -e₁   0    b₃  -b₂ ⎟
//!            ⎜ -e₂  -b₃   0    b₁ ⎟
//!            ⎝ -e₃   b₂  -b₁   0  ⎠
//! ```
//!
//! `e` and `b` are a notation for these components, not the space parts of
//! four-vectors. They transform as three-vectors under rotations only; under
//! boosts they mix (see [`lorentz`]).
//!
//! A [`PhotonTensor`] is an [`AntisymTensor`] constrained by transversality to
//! a propagation direction `k`: `e ⊥ b`, `|e| = |b| = ω`, and `(ê, b̂, k)` a
//! right-handed orthogonal triad.

pub mod lorentz;
pub mod symmetry;

use std::f64::consts::PI;

use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};

use crate::helicity::Helicity;
use crate::vector::{ensure_finite, ensure_unit, reference_axis, Vec3};
use crate::{Error, Result};

pub use lorentz::{boost, doppler_shift, LorentzBoost, Rotation};
pub use symmetry::{discrete_symmetry, DiscreteSymmetry};

/// Tolerance for the photon constraints on freshly constructed tensors,
/// relative to `ω` (or `ω²` for products).
pub const CONSTRUCTION_TOLERANCE: f64 = 1e-12;

/// Tolerance for the photon constraints after chained transformations.
pub const TRANSFORM_TOLERANCE: f64 = 1e-9;

/// A general antisymmetric tensor, stored as its `(e, b)` components.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AntisymTensor {
    pub e: Vec3,
    pub b: Vec3,
}

/// The three scalars of an antisymmetric tensor: `f^μ_μ`, `f^{μν}f_{μν}` and
/// `f^{μν}f*_{μν}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Invariants {
    pub trace: f64,
    pub ff: f64,
    pub ffstar: f64,
}

impl Invariants {
    pub fn max_abs(&self) -> f64 {
        self.trace.abs().max(self.ff.abs()).max(self.ffstar.abs())
    }
}

impl AntisymTensor {
    pub fn new(e: Vec3, b: Vec3) -> Self {
        AntisymTensor { e, b }
    }

    pub fn zero() -> Self {
        AntisymTensor::new(Vec3::zeros(), Vec3::zeros())
    }

    /// The contravariant components `f^{μν}` as a 4×4 matrix.
    pub fn to_matrix(&self) -> Matrix4<f64> {
        let (e, b) = (&self.e, &self.b);
        Matrix4::new(
            0.0, e.x, e.y, e.z, //
            -e.x, 0.0, b.z, -b.y, //
            -e.y, -b.z, 0.0, b.x, //
            -e.z, b.y, -b.x, 0.0,
        )
    }

    /// Reads `(e, b)` back from a contravariant 4×4 matrix. Only the upper
    /// triangle is inspected.
    pub fn from_matrix(m: &Matrix4<f64>) -> Self {
        AntisymTensor::new(
            Vec3::new(m[(0, 1)], m[(0, 2)], m[(0, 3)]),
            Vec3::new(m[(2, 3)], -m[(1, 3)], m[(1, 2)]),
        )
    }

    /// The dual tensor `f*^{μν} = ½ ε^{μνσρ} f_{σρ}`, i.e. `(e, b) → (-b, e)`.
    pub fn dual(&self) -> Self {
        AntisymTensor::new(-self.b, self.e)
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            trace: 0.0,
            ff: 2.0 * (self.e.norm_squared() - self.b.norm_squared()),
            ffstar: -4.0 * self.e.dot(&self.b),
        }
    }

    /// Norms of the two constraint four-vectors `k_μ f^{μν}` and
    /// `k_μ f*^{μν}` for the null vector `k^μ = (1, k)`.
    ///
    /// Both vanish exactly when `f` is transverse to `k`.
    pub fn transversality_residual(&self, k: &Vec3) -> Result<(f64, f64)> {
        ensure_unit(k)?;
        Ok(self.transversality_residual_unchecked(k))
    }

    pub(crate) fn transversality_residual_unchecked(&self, k: &Vec3) -> (f64, f64) {
        let (e, b) = (&self.e, &self.b);
        let first = (k.dot(e).powi(2) + (e + k.cross(b)).norm_squared()).sqrt();
        let second = (k.dot(b).powi(2) + (-b + k.cross(e)).norm_squared()).sqrt();
        (first, second)
    }

    pub fn is_finite(&self) -> bool {
        self.e.iter().chain(self.b.iter()).all(|c| c.is_finite())
    }

    /// Largest absolute difference over the six components.
    pub fn max_abs_diff(&self, other: &AntisymTensor) -> f64 {
        (self.e - other.e).amax().max((self.b - other.b).amax())
    }
}

impl std::ops::Neg for AntisymTensor {
    type Output = AntisymTensor;

    fn neg(self) -> AntisymTensor {
        AntisymTensor::new(-self.e, -self.b)
    }
}

/// Free-function form of [`AntisymTensor::dual`].
pub fn dual(f: &AntisymTensor) -> AntisymTensor {
    f.dual()
}

/// Free-function form of [`AntisymTensor::invariants`].
pub fn invariants(f: &AntisymTensor) -> Invariants {
    f.invariants()
}

/// Free-function form of [`AntisymTensor::transversality_residual`].
pub fn transversality_residual(f: &AntisymTensor, k: &Vec3) -> Result<(f64, f64)> {
    f.transversality_residual(k)
}

/// Pitch of the helix traced by `ê` along the propagation direction,
/// `λ = 2πc/ω` with `c = 1`.
pub fn helix_length(omega: f64) -> Result<f64> {
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::NonPositive { name: "omega", value: omega });
    }
    Ok(2.0 * PI / omega)
}

/// A photon tensor together with its propagation direction and helicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhotonTensor {
    tensor: AntisymTensor,
    k: Vec3,
    helicity: Helicity,
}

impl PhotonTensor {
    /// Validates `tensor` against the photon constraints for direction `k`
    /// at [`CONSTRUCTION_TOLERANCE`].
    pub fn new(tensor: AntisymTensor, k: Vec3, helicity: Helicity) -> Result<Self> {
        Self::with_tolerance(tensor, k, helicity, CONSTRUCTION_TOLERANCE)
    }

    /// As [`PhotonTensor::new`] with an explicit relative tolerance.
    pub fn with_tolerance(
        tensor: AntisymTensor,
        k: Vec3,
        helicity: Helicity,
        tol: f64,
    ) -> Result<Self> {
        ensure_finite(&tensor.e, "e")?;
        ensure_finite(&tensor.b, "b")?;
        ensure_unit(&k)?;
        let e = &tensor.e;
        let b = &tensor.b;
        let omega = e.norm();
        if !(omega > 0.0) {
            return Err(Error::NotAPhoton("e vanishes".into()));
        }
        let checks = [
            ("|e| = |b|", (omega - b.norm()).abs() / omega),
            ("e·b = 0", e.dot(b).abs() / (omega * omega)),
            ("k·e = 0", k.dot(e).abs() / omega),
            ("k·b = 0", k.dot(b).abs() / omega),
            ("k = ê×b̂", (k - e.cross(b) / (omega * b.norm())).norm()),
        ];
        for (name, defect) in checks {
            if !(defect <= tol) {
                return Err(Error::NotAPhoton(format!(
                    "{name} violated by {defect:e} (tolerance {tol:e})"
                )));
            }
        }
        Ok(PhotonTensor { tensor, k, helicity })
    }

    pub fn tensor(&self) -> &AntisymTensor {
        &self.tensor
    }

    pub fn e(&self) -> Vec3 {
        self.tensor.e
    }

    pub fn b(&self) -> Vec3 {
        self.tensor.b
    }

    pub fn k(&self) -> Vec3 {
        self.k
    }

    pub fn helicity(&self) -> Helicity {
        self.helicity
    }

    /// Rotation frequency `ω = |e| = |b|`.
    pub fn omega(&self) -> f64 {
        self.tensor.e.norm()
    }

    /// `E = ħω` with `ħ = 1`.
    pub fn energy(&self) -> f64 {
        self.omega()
    }

    pub fn helix_length(&self) -> f64 {
        2.0 * PI / self.omega()
    }

    /// The photon seen in a frame moving with velocity `boost` relative to
    /// the current one. The direction is aberrated along with the tensor.
    pub fn boosted(&self, boost: &LorentzBoost) -> Result<Self> {
        let (tensor, k) = lorentz::boost(&self.tensor, &self.k, boost)?;
        Self::with_tolerance(tensor, k, self.helicity, TRANSFORM_TOLERANCE)
    }

    pub fn rotated(&self, rotation: &Rotation) -> Result<Self> {
        Self::with_tolerance(
            rotation.apply_tensor(&self.tensor),
            rotation.apply(&self.k),
            self.helicity,
            TRANSFORM_TOLERANCE,
        )
    }

    /// The tensor a time `t` later: `ê` and `b̂` turned about `k` by `∓ωt`
    /// for helicity `±1`.
    pub fn at_time(&self, t: f64) -> Self {
        let angle = -self.helicity.value() * self.omega() * t;
        let rotation = Rotation::from_axis_angle(&self.k, angle);
        PhotonTensor {
            tensor: rotation.apply_tensor(&self.tensor),
            k: self.k,
            helicity: self.helicity,
        }
    }

    pub fn to_document(&self) -> TensorDocument {
        TensorDocument {
            e: self.tensor.e,
            b: self.tensor.b,
            k: Some(self.k),
            helicity: Some(self.helicity),
            omega: Some(self.omega()),
        }
    }
}

/// Builds the photon tensor of frequency `omega` propagating along `k`.
///
/// At `phase = 0`, `b̂` is the reference transverse axis (see
/// [`reference_axis`]) and `ê = b̂ × k`; a nonzero phase turns the pair about
/// `k` by `phase`. For `k = x̂` this gives `e = ω ŷ`, `b = ω ẑ`.
pub fn make_photon_tensor(
    k: &Vec3,
    helicity: Helicity,
    omega: f64,
    phase: f64,
) -> Result<PhotonTensor> {
    ensure_unit(k)?;
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::NonPositive { name: "omega", value: omega });
    }
    if !phase.is_finite() {
        return Err(Error::NonFinite { name: "phase" });
    }
    let k = k.normalize();
    let b0 = reference_axis(&k);
    let e0 = b0.cross(&k);
    let (s, c) = phase.sin_cos();
    let e_hat = e0 * c + k.cross(&e0) * s;
    let b_hat = k.cross(&e_hat);
    PhotonTensor::new(AntisymTensor::new(e_hat * omega, b_hat * omega), k, helicity)
}

/// JSON form shared by general and photon tensors.
///
/// `k`, `helicity` and `omega` are present only for photon tensors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDocument {
    pub e: Vec3,
    pub b: Vec3,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub helicity: Option<Helicity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
}

impl TensorDocument {
    pub fn from_tensor(f: &AntisymTensor) -> Self {
        TensorDocument { e: f.e, b: f.b, k: None, helicity: None, omega: None }
    }

    pub fn tensor(&self) -> AntisymTensor {
        AntisymTensor::new(self.e, self.b)
    }

    /// Interprets the document as a photon tensor. Requires `k` and
    /// `helicity`; `omega`, when present, must agree with `|e|`.
    pub fn photon(&self) -> Result<PhotonTensor> {
        let k = self.k.ok_or_else(|| Error::NotAPhoton("missing field `k`".into()))?;
        let helicity = self
            .helicity
            .ok_or_else(|| Error::NotAPhoton("missing field `helicity`".into()))?;
        let photon = PhotonTensor::with_tolerance(self.tensor(), k, helicity, TRANSFORM_TOLERANCE)?;
        if let Some(omega) = self.omega {
            if (omega - photon.omega()).abs() > TRANSFORM_TOLERANCE * omega.abs().max(1.0) {
                return Err(Error::NotAPhoton(format!(
                    "omega {omega} disagrees with |e| = {}",
                    photon.omega()
                )));
            }
        }
        Ok(photon)
    }
}

impl From<&PhotonTensor> for TensorDocument {
    fn from(p: &PhotonTensor) -> Self {
        p.to_document()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn reference_photon_along_x() {
        let p = make_photon_tensor(&Vec3::x(), Helicity::Positive, 1.0, 0.0).unwrap();
        assert_abs_diff_eq!(p.e(), Vec3::y(), epsilon = 1e-15);
        assert_abs_diff_eq!(p.b(), Vec3::z(), epsilon = 1e-15);
        let (r1, r2) = p.tensor().transversality_residual(&Vec3::x()).unwrap();
        assert_eq!((r1, r2), (0.0, 0.0));
    }

    #[test]
    fn photon_along_z_with_phase() {
        let p = make_photon_tensor(&Vec3::z(), Helicity::Negative, 2.0, PI / 2.0).unwrap();
        assert!((p.e().norm() - 2.0).abs() < 1e-14);
        assert!((p.b().norm() - 2.0).abs() < 1e-14);
        assert!(p.e().dot(&p.b()).abs() < 1e-14);
        let inv = p.tensor().invariants();
        assert!(inv.max_abs() < 1e-12);
        assert_abs_diff_eq!(p.e().cross(&p.b()) / 4.0, Vec3::z(), epsilon = 1e-15);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            make_photon_tensor(&Vec3::new(1.0, 1.0, 0.0), Helicity::Positive, 1.0, 0.0),
            Err(Error::NonUnitDirection { .. })
        ));
        assert!(matches!(
            make_photon_tensor(&Vec3::x(), Helicity::Positive, 0.0, 0.0),
            Err(Error::NonPositive { .. })
        ));
        assert!(make_photon_tensor(&Vec3::x(), Helicity::Positive, -1.0, 0.0).is_err());
        let bad = AntisymTensor::new(Vec3::x(), Vec3::y());
        assert!(matches!(
            PhotonTensor::new(bad, Vec3::x(), Helicity::Positive),
            Err(Error::NotAPhoton(_))
        ));
    }

    #[test]
    fn dual_examples() {
        let f = AntisymTensor::new(Vec3::x(), Vec3::y());
        let d = f.dual();
        assert_eq!(d.e, Vec3::new(0.0, -1.0, 0.0));
        assert_eq!(d.b, Vec3::x());
        assert_eq!(d.dual(), -f);
        assert_eq!(d.dual().dual().dual(), f);
    }

    #[test]
    fn invariant_examples() {
        let f = AntisymTensor::new(Vec3::x(), Vec3::y());
        assert_eq!(f.invariants(), Invariants { trace: 0.0, ff: 0.0, ffstar: 0.0 });
        let g = AntisymTensor::new(Vec3::new(2.0, 0.0, 0.0), Vec3::y());
        assert_eq!(g.invariants(), Invariants { trace: 0.0, ff: 6.0, ffstar: 0.0 });
    }

    #[test]
    fn transversality_examples() {
        let f = AntisymTensor::new(Vec3::y(), Vec3::z());
        assert_eq!(f.transversality_residual(&Vec3::x()).unwrap(), (0.0, 0.0));
        let g = AntisymTensor::new(Vec3::x(), Vec3::y());
        let (r1, _) = g.transversality_residual(&Vec3::x()).unwrap();
        assert!(r1 >= 1.0);
        assert!(g.transversality_residual(&Vec3::new(2.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn helix_lengths() {
        assert!((helix_length(2.0 * PI).unwrap() - 1.0).abs() < 1e-15);
        assert!((helix_length(1.0).unwrap() - 2.0 * PI).abs() < 1e-15);
        assert!((helix_length(4.0).unwrap() * 2.0 - helix_length(2.0).unwrap()).abs() < 1e-15);
        assert!(helix_length(0.0).is_err());
        assert!(helix_length(-3.0).is_err());
    }

    #[test]
    fn matrix_layout_round_trip() {
        let f = AntisymTensor::new(Vec3::new(1.0, 2.0, 3.0), Vec3::new(4.0, 5.0, 6.0));
        let m = f.to_matrix();
        assert_eq!(m, -m.transpose());
        assert_eq!(m[(1, 2)], 6.0);
        assert_eq!(m[(1, 3)], -5.0);
        assert_eq!(m[(2, 3)], 4.0);
        assert_eq!(AntisymTensor::from_matrix(&m), f);
    }

    #[test]
    fn time_evolution_keeps_photon() {
        let p = make_photon_tensor(&Vec3::new(0.0, 0.6, 0.8), Helicity::Positive, 3.0, 0.4).unwrap();
        let q = p.at_time(0.7);
        assert!((q.omega() - 3.0).abs() < 1e-13);
        PhotonTensor::new(*q.tensor(), q.k(), q.helicity()).unwrap();
        // a full period returns the starting tensor
        let full = p.at_time(p.helix_length());
        assert!(full.tensor().max_abs_diff(p.tensor()) < 1e-12);
    }

    #[test]
    fn document_requires_b() {
        let err = serde_json::from_str::<TensorDocument>(r#"{"e":[0,1,0]}"#).unwrap_err();
        assert!(err.to_string().contains("`b`"));
    }
}
