//! Unitary three-dimensional Fourier transforms between the momentum and
//! position grids.
//!
//! With `p_j = (j − n/2)Δp`, `r_m = (m − n/2)Δr` and `ΔpΔr = 2π/n`, the kernel
//! factorizes per axis as `e^{ip_j r_m} = (−1)^{j+m+n/2} e^{2πi jm/n}`, so each
//! axis is a plain DFT between two sign flips. The overall scale
//! `(Δp/Δr)^{3/2} n^{−3/2}` reproduces the continuum transform
//! `(2π)^{−3/2}∫ d³p` and keeps `Σ|Ψ|²ΔV` unchanged.

use num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

use super::{Representation, SpinorField};
use crate::spin::CVec3;

pub(super) fn transform(state: &SpinorField, target: Representation) -> SpinorField {
    let grid = *state.grid();
    let n = grid.n();
    let ratio = grid.spacing() / grid.position_spacing();
    let (direction, scale) = match target {
        Representation::Position => (FftDirection::Inverse, ratio.powf(1.5)),
        Representation::Momentum => (FftDirection::Forward, ratio.powf(-1.5)),
    };
    let scale = scale / (n as f64).powf(1.5);
    // (−1)^{n/2} on each axis
    let half_sign: f64 = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let axis_sign = |j: usize| if j % 2 == 0 { 1.0 } else { -1.0 };
    let node_sign = |index: usize| {
        let (a, b, c) = grid.unravel(index);
        axis_sign(a) * axis_sign(b) * axis_sign(c)
    };
    let post = scale * half_sign.powi(3);

    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft(n, direction);
    let mut out = vec![CVec3::zeros(); grid.len()];
    let mut buffer = vec![Complex64::new(0.0, 0.0); grid.len()];
    let mut line = vec![Complex64::new(0.0, 0.0); n];
    let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];

    for component in 0..3 {
        for (i, (slot, v)) in buffer.iter_mut().zip(state.values()).enumerate() {
            *slot = v[component] * node_sign(i);
        }
        // z: contiguous lines
        fft.process_with_scratch(&mut buffer, &mut scratch);
        // y
        for ix in 0..n {
            for iz in 0..n {
                for iy in 0..n {
                    line[iy] = buffer[grid.index(ix, iy, iz)];
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for iy in 0..n {
                    buffer[grid.index(ix, iy, iz)] = line[iy];
                }
            }
        }
        // x
        for iy in 0..n {
            for iz in 0..n {
                for ix in 0..n {
                    line[ix] = buffer[grid.index(ix, iy, iz)];
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for ix in 0..n {
                    buffer[grid.index(ix, iy, iz)] = line[ix];
                }
            }
        }
        for (i, (v, b)) in out.iter_mut().zip(&buffer).enumerate() {
            v[component] = b * (post * node_sign(i));
        }
    }
    SpinorField::from_values(grid, target, out).expect("transform preserves grid and finiteness")
}
