use photon::spin::{
    closed_form_pair, gram_schmidt, helicity_basis, spin_dot, spin_matrices, transverse_projector, Branch,
    CMat3, CVec3, HelicityBasis,
};
use photon::{Complex64, Error, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn random_unit(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

fn eps(j: usize, k: usize, l: usize) -> f64 {
    ((j as f64 - k as f64) * (k as f64 - l as f64) * (l as f64 - j as f64)) / 2.0
}

fn residual(m: &CMat3, v: &CVec3, lambda: f64) -> f64 {
    (m * v - v * Complex64::from(lambda)).norm()
}

#[test]
fn commutators_exact() {
    let s = spin_matrices();
    for j in 0..3 {
        for k in 0..3 {
            let lhs = s.s[j] * s.s[k] - s.s[k] * s.s[j];
            let mut rhs = CMat3::zeros();
            for l in 0..3 {
                rhs += s.s[l] * (I * eps(j, k, l));
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn printed_matrices_and_casimir() {
    let s = spin_matrices();
    assert_eq!(s.z()[(0, 1)], -I);
    assert_eq!(s.z()[(1, 0)], I);
    assert_eq!(s.x()[(1, 2)], -I);
    assert_eq!(s.y()[(2, 0)], -I);
    let casimir = s.x() * s.x() + s.y() * s.y() + s.z() * s.z();
    assert_eq!(casimir, CMat3::identity() * Complex64::from(2.0));
    for m in &s.s {
        assert_eq!(m.adjoint(), *m);
    }
}

#[test]
fn spin_dot_spectrum_by_hermitian_eigensolver() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let k = random_unit(&mut rng);
        let m = spin_dot(&k).unwrap();
        // Embed the Hermitian matrix as a real symmetric 6×6 block.
        let re = m.map(|c| c.re);
        let im = m.map(|c| c.im);
        let mut big = nalgebra::Matrix6::<f64>::zeros();
        big.fixed_view_mut::<3, 3>(0, 0).copy_from(&re);
        big.fixed_view_mut::<3, 3>(3, 3).copy_from(&re);
        big.fixed_view_mut::<3, 3>(0, 3).copy_from(&-im);
        big.fixed_view_mut::<3, 3>(3, 0).copy_from(&im);
        let mut values: Vec<f64> = big.symmetric_eigenvalues().iter().copied().collect();
        values.sort_by(f64::total_cmp);
        for (got, want) in values.iter().zip([-1.0, -1.0, 0.0, 0.0, 1.0, 1.0]) {
            assert!((got - want).abs() < 1e-12, "{values:?}");
        }
        assert!((m * m * m - m).norm() < 1e-12);
    }
    assert_eq!(spin_dot(&Vec3::z()).unwrap(), *spin_matrices().z());
    assert!(matches!(spin_dot(&Vec3::new(0.0, 0.0, 2.0)), Err(Error::NonUnitDirection { .. })));
}

#[test]
fn basis_along_z() {
    let b = helicity_basis(&Vec3::z()).unwrap();
    assert_eq!(b.branch, Branch::ClosedForm);
    let half = |re: f64, im: f64| Complex64::new(re / 2.0, im / 2.0);
    let plus = CVec3::new(half(1.0, -1.0), half(1.0, 1.0), Complex64::from(0.0));
    let minus = CVec3::new(half(1.0, 1.0), half(1.0, -1.0), Complex64::from(0.0));
    assert!((b.chi_plus - plus).norm() < 1e-15);
    assert!((b.chi_minus - minus).norm() < 1e-15);
    assert_eq!(b.chi_zero, CVec3::new(0.0.into(), 0.0.into(), 1.0.into()));
    let sz = spin_matrices().z().clone();
    assert!(residual(&sz, &b.chi_plus, 1.0) < 1e-15);
    assert!(residual(&sz, &b.chi_minus, -1.0) < 1e-15);
}

#[test]
fn singular_direction_uses_fallback() {
    let k = Vec3::new(1.0, 1.0, 1.0).normalize();
    assert!(closed_form_pair(&k).is_none());
    let b = helicity_basis(&k).unwrap();
    assert_eq!(b.branch, Branch::Fallback);
    let m = spin_dot(&k).unwrap();
    assert!(residual(&m, &b.chi_plus, 1.0) < 1e-12);
    assert!(residual(&m, &b.chi_minus, -1.0) < 1e-12);
    assert!(residual(&m, &b.chi_zero, 0.0) < 1e-12);
}

fn check_basis(b: &HelicityBasis) {
    let m = spin_dot(&b.k).unwrap();
    assert!(residual(&m, &b.chi_plus, 1.0) < 1e-12);
    assert!(residual(&m, &b.chi_minus, -1.0) < 1e-12);
    assert!(residual(&m, &b.chi_zero, 0.0) < 1e-12);
    let vs = [b.chi_plus, b.chi_minus, b.chi_zero];
    for (i, a) in vs.iter().enumerate() {
        for (j, c) in vs.iter().enumerate() {
            let expected = if i == j { 1.0 } else { 0.0 };
            assert!((a.dotc(c) - Complex64::from(expected)).norm() < 1e-12);
        }
    }
    let completeness: CMat3 = vs.iter().map(|v| v * v.adjoint()).sum();
    assert!((completeness - CMat3::identity()).norm() < 1e-12);
    for j in 0..3 {
        assert_eq!(b.chi_zero[j], Complex64::from(b.k[j]));
    }
}

#[test]
fn random_and_near_singular_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..500 {
        check_basis(&helicity_basis(&random_unit(&mut rng)).unwrap());
    }
    let diagonal = Vec3::new(1.0, 1.0, 1.0).normalize();
    for _ in 0..50 {
        let offset = Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let k = (diagonal + offset * (rng.gen_range(0.0..1e-4) / offset.norm())).normalize();
        check_basis(&helicity_basis(&k).unwrap());
    }
}

#[test]
fn branches_agree_up_to_phase() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let k = random_unit(&mut rng);
        let Some((p, m)) = closed_form_pair(&k) else { continue };
        let (gp, gm) = gram_schmidt(&k);
        assert!((p.dotc(&gp).norm() - 1.0).abs() < 1e-10);
        assert!((m.dotc(&gm).norm() - 1.0).abs() < 1e-10);
    }
}

#[test]
fn closed_form_is_continuous() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..200 {
        let k = random_unit(&mut rng);
        let k2 = (k + Vec3::new(3e-7, -2e-7, 4e-7)).normalize();
        let (Some((p, _)), Some((p2, _))) = (closed_form_pair(&k), closed_form_pair(&k2)) else { continue };
        let phase = p.dotc(&p2);
        let aligned = p2 * (phase.conj() / phase.norm());
        assert!((p - aligned).norm() < 1e-4);
    }
}

#[test]
fn projector_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..100 {
        let k = random_unit(&mut rng);
        let p = transverse_projector(&k).unwrap();
        let b = helicity_basis(&k).unwrap();
        assert!((p * b.chi_zero).norm() < 1e-12);
        assert!((p * b.chi_plus - b.chi_plus).norm() < 1e-12);
        assert!((p * b.chi_minus - b.chi_minus).norm() < 1e-12);
        assert!((p * p - p).norm() < 1e-12);
        let m = spin_dot(&k).unwrap();
        assert!((m * m - p).norm() < 1e-12);
        let sum = b.chi_plus * b.chi_plus.adjoint() + b.chi_minus * b.chi_minus.adjoint();
        assert!((sum - p).norm() < 1e-12);
    }
}

#[test]
fn basis_json_layout() {
    let b = helicity_basis(&Vec3::z()).unwrap();
    let v: serde_json::Value = serde_json::to_value(&b).unwrap();
    assert_eq!(v["k"], serde_json::json!([0.0, 0.0, 1.0]));
    assert_eq!(v["chi_zero"], serde_json::json!([[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]));
    assert_eq!(v["chi_plus"][0], serde_json::json!([0.5, -0.5]));
}
