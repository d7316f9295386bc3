//! Spin-1 matrices in the Cartesian representation `(S_j)_{kl} = −i ε_{jkl}`
//! (ħ = 1) and the helicity eigenbasis for an arbitrary direction.
//!
//! In this representation `(k·S) v = i k × v`, so the zero-helicity
//! eigenvector `χ₀` has the same components as `k`. That is a coincidence of
//! representations: `χ₀` lives in spin space, `k` in physical space.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::helicity::Helicity;
use crate::vector::{ensure_unit, reference_axis, Vec3};
use crate::Result;

pub type CVec3 = Vector3<Complex64>;
pub type CMat3 = Matrix3<Complex64>;

/// Below this value of `1 − kₓk_y − k_yk_z − k_zkₓ` the closed-form helicity
/// vectors are replaced by the Gram–Schmidt construction.
pub const SINGULAR_THRESHOLD: f64 = 1e-6;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// The three spin-1 matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinMatrices {
    pub s: [CMat3; 3],
}

impl SpinMatrices {
    pub fn x(&self) -> &CMat3 {
        &self.s[0]
    }

    pub fn y(&self) -> &CMat3 {
        &self.s[1]
    }

    pub fn z(&self) -> &CMat3 {
        &self.s[2]
    }

    /// `Σ_j v_j S_j` for a real vector `v`.
    pub fn dot(&self, v: &Vec3) -> CMat3 {
        self.s[0] * Complex64::from(v.x) + self.s[1] * Complex64::from(v.y) + self.s[2] * Complex64::from(v.z)
    }
}

pub fn spin_matrices() -> SpinMatrices {
    let s = [0, 1, 2].map(|j| CMat3::from_fn(|k, l| -I * levi_civita(j, k, l)));
    SpinMatrices { s }
}

/// `k·S` for a unit direction `k`. Its eigenvalues are `+1, 0, −1`.
pub fn spin_dot(k: &Vec3) -> Result<CMat3> {
    ensure_unit(k)?;
    Ok(spin_matrices().dot(k))
}

/// Projector onto the helicity `±1` subspace: `P⊥ = I − χ₀χ₀†`.
pub fn transverse_projector(k: &Vec3) -> Result<CMat3> {
    ensure_unit(k)?;
    let chi0 = to_complex(&k.normalize());
    Ok(CMat3::identity() - chi0 * chi0.adjoint())
}

/// `(k·S) v`, computed as `i k × v`.
#[inline]
pub fn apply_spin_dot(k: &Vec3, v: &CVec3) -> CVec3 {
    let (kx, ky, kz) = (k.x, k.y, k.z);
    CVec3::new(
        I * (v.z * ky - v.y * kz),
        I * (v.x * kz - v.z * kx),
        I * (v.y * kx - v.x * ky),
    )
}

/// `⟨χ₀, v⟩ = k·v` for real `k`.
#[inline]
pub fn longitudinal_amplitude(k: &Vec3, v: &CVec3) -> Complex64 {
    v.x * k.x + v.y * k.y + v.z * k.z
}

/// `P⊥ v = v − k (k·v)`.
#[inline]
pub fn apply_transverse_projector(k: &Vec3, v: &CVec3) -> CVec3 {
    let a = longitudinal_amplitude(k, v);
    CVec3::new(v.x - a * k.x, v.y - a * k.y, v.z - a * k.z)
}

pub fn to_complex(v: &Vec3) -> CVec3 {
    v.map(Complex64::from)
}

/// How the helicity vectors of a basis were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    ClosedForm,
    Fallback,
}

/// Eigenvectors of `k·S` for eigenvalues `+1`, `−1` and `0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HelicityBasis {
    pub k: Vec3,
    pub chi_plus: CVec3,
    pub chi_minus: CVec3,
    pub chi_zero: CVec3,
    #[serde(skip, default = "default_branch")]
    pub branch: Branch,
}

fn default_branch() -> Branch {
    Branch::ClosedForm
}

impl HelicityBasis {
    pub fn chi(&self, helicity: Helicity) -> &CVec3 {
        match helicity {
            Helicity::Positive => &self.chi_plus,
            Helicity::Negative => &self.chi_minus,
        }
    }
}

/// The helicity basis for the unit direction `k`.
///
/// Uses the closed form
///
/// ```text
/// χ± = [1 − k_j(kₓ+k_y+k_z) ± i(k_{j+1} − k_{j+2})]_j / (2√(1 − kₓk_y − k_yk_z − k_zkₓ))
/// ```
///
/// except near `k ∝ (1,1,1)` where the denominator vanishes; there
/// `χ± = (u ± i k×u)/√2` with `u` the reference transverse axis. The two
/// branches differ by a phase per helicity.
pub fn helicity_basis(k: &Vec3) -> Result<HelicityBasis> {
    ensure_unit(k)?;
    Ok(helicity_basis_unchecked(&k.normalize()))
}

pub(crate) fn helicity_basis_unchecked(k: &Vec3) -> HelicityBasis {
    let denom = 1.0 - k.x * k.y - k.y * k.z - k.z * k.x;
    let (chi_plus, chi_minus, branch) = if denom > SINGULAR_THRESHOLD {
        let (p, m) = closed_form(k, denom);
        (p, m, Branch::ClosedForm)
    } else {
        let (p, m) = gram_schmidt(k);
        (p, m, Branch::Fallback)
    };
    HelicityBasis { k: *k, chi_plus, chi_minus, chi_zero: to_complex(k), branch }
}

fn closed_form(k: &Vec3, denom: f64) -> (CVec3, CVec3) {
    let sum = k.x + k.y + k.z;
    let re = Vec3::new(1.0 - k.x * sum, 1.0 - k.y * sum, 1.0 - k.z * sum);
    let im = Vec3::new(k.y - k.z, k.z - k.x, k.x - k.y);
    let scale = 1.0 / (2.0 * denom.sqrt());
    let plus = CVec3::from_fn(|j, _| Complex64::new(re[j], im[j]) * scale);
    let minus = CVec3::from_fn(|j, _| Complex64::new(re[j], -im[j]) * scale);
    (plus, minus)
}

/// Closed-form helicity vectors; `None` on the singular set.
pub fn closed_form_pair(k: &Vec3) -> Option<(CVec3, CVec3)> {
    let denom = 1.0 - k.x * k.y - k.y * k.z - k.z * k.x;
    (denom > SINGULAR_THRESHOLD).then(|| closed_form(k, denom))
}

/// Helicity vectors built from the reference transverse pair `(u, k×u)`.
pub fn gram_schmidt(k: &Vec3) -> (CVec3, CVec3) {
    let u = reference_axis(k);
    let v = k.cross(&u);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let plus = CVec3::from_fn(|j, _| Complex64::new(u[j], v[j]) * s);
    let minus = CVec3::from_fn(|j, _| Complex64::new(u[j], -v[j]) * s);
    (plus, minus)
}
