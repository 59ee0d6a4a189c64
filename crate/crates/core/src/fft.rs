//! Two-dimensional FFT plumbing on row-major buffers.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

/// Smallest `n >= min` whose only prime factors are 2, 3 and 5.
pub fn fast_len(min: usize) -> usize {
    let mut n = min.max(1);
    loop {
        let mut m = n;
        for p in [2, 3, 5] {
            while m % p == 0 {
                m /= p;
            }
        }
        if m == 1 {
            return n;
        }
        n += 1;
    }
}

/// A planned 2D transform of a fixed `nx` (columns) by `ny` (rows) shape.
pub struct Fft2 {
    nx: usize,
    ny: usize,
    row: Arc<dyn Fft<f64>>,
    col: Arc<dyn Fft<f64>>,
    direction: FftDirection,
}

impl Fft2 {
    pub fn new(nx: usize, ny: usize, direction: FftDirection) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            nx,
            ny,
            row: planner.plan_fft(nx, direction),
            col: planner.plan_fft(ny, direction),
            direction,
        }
    }

    /// Unnormalized in-place transform. The inverse direction does not divide
    /// by `nx * ny`; see [`inverse_normalized`].
    pub fn process(&self, data: &mut [Complex64]) {
        assert_eq!(data.len(), self.nx * self.ny);
        self.row.process(data);
        let mut t = transpose(data, self.nx, self.ny);
        self.col.process(&mut t);
        let back = transpose(&t, self.ny, self.nx);
        data.copy_from_slice(&back);
    }

    pub fn direction(&self) -> FftDirection {
        self.direction
    }
}

fn transpose(src: &[Complex64], nx: usize, ny: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); nx * ny];
    const TILE: usize = 32;
    for jb in (0..ny).step_by(TILE) {
        for ib in (0..nx).step_by(TILE) {
            for j in jb..(jb + TILE).min(ny) {
                for i in ib..(ib + TILE).min(nx) {
                    out[i * ny + j] = src[j * nx + i];
                }
            }
        }
    }
    out
}

pub fn forward(data: &mut [Complex64], nx: usize, ny: usize) {
    Fft2::new(nx, ny, FftDirection::Forward).process(data);
}

pub fn inverse_normalized(data: &mut [Complex64], nx: usize, ny: usize) {
    Fft2::new(nx, ny, FftDirection::Inverse).process(data);
    let scale = 1.0 / (nx * ny) as f64;
    for v in data.iter_mut() {
        *v *= scale;
    }
}

/// Signed integer frequency index of DFT bin `k` in a length-`n` transform.
#[inline]
pub fn signed_index(k: usize, n: usize) -> f64 {
    if k <= n / 2 {
        k as f64
    } else {
        k as f64 - n as f64
    }
}

/// Copies an `nx` by `ny` block into the top-left corner of a zeroed
/// `mx` by `my` buffer.
pub fn zero_pad(src: &[Complex64], nx: usize, ny: usize, mx: usize, my: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); mx * my];
    for j in 0..ny {
        out[j * mx..j * mx + nx].copy_from_slice(&src[j * nx..(j + 1) * nx]);
    }
    out
}

/// Exact discrete linear convolution `out[n] = sum_j data[j] * kernel(n - j)`
/// for all `n` on the data's own `nx` by `ny` lattice, where `kernel` is
/// evaluated at integer offsets in `(-nx, nx) x (-ny, ny)`. Realized as a
/// circular convolution on a buffer large enough that no offsets alias.
pub fn linear_convolve_same<K>(data: &[Complex64], nx: usize, ny: usize, kernel: K) -> Vec<Complex64>
where
    K: Fn(isize, isize) -> Complex64,
{
    let reach_x = nx - 1;
    let reach_y = ny - 1;
    convolve_with_reach(data, nx, ny, reach_x, reach_y, kernel)
}

/// Like [`linear_convolve_same`] but the kernel is only evaluated for
/// offsets with `|dx| <= reach_x`, `|dy| <= reach_y` (zero beyond).
pub fn convolve_with_reach<K>(
    data: &[Complex64],
    nx: usize,
    ny: usize,
    reach_x: usize,
    reach_y: usize,
    kernel: K,
) -> Vec<Complex64>
where
    K: Fn(isize, isize) -> Complex64,
{
    let rx = reach_x.min(nx - 1);
    let ry = reach_y.min(ny - 1);
    let mx = fast_len(nx + rx);
    let my = fast_len(ny + ry);
    let mut a = zero_pad(data, nx, ny, mx, my);
    let mut k = vec![Complex64::new(0.0, 0.0); mx * my];
    for dy in -(ry as isize)..=(ry as isize) {
        let jy = dy.rem_euclid(my as isize) as usize;
        for dx in -(rx as isize)..=(rx as isize) {
            let ix = dx.rem_euclid(mx as isize) as usize;
            k[jy * mx + ix] = kernel(dx, dy);
        }
    }
    let fwd = Fft2::new(mx, my, FftDirection::Forward);
    fwd.process(&mut a);
    fwd.process(&mut k);
    for (x, y) in a.iter_mut().zip(&k) {
        *x *= y;
    }
    inverse_normalized(&mut a, mx, my);
    let mut out = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        out.extend_from_slice(&a[j * mx..j * mx + nx]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_len_is_smooth_and_minimal() {
        assert_eq!(fast_len(1), 1);
        assert_eq!(fast_len(7), 8);
        assert_eq!(fast_len(1594), 1600);
        assert_eq!(fast_len(4096), 4096);
    }

    #[test]
    fn forward_inverse_round_trip() {
        let (nx, ny) = (12, 10);
        let orig: Vec<Complex64> = (0..nx * ny)
            .map(|i| Complex64::new((i as f64).sin(), (i as f64 * 0.3).cos()))
            .collect();
        let mut d = orig.clone();
        forward(&mut d, nx, ny);
        inverse_normalized(&mut d, nx, ny);
        for (a, b) in d.iter().zip(&orig) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn linear_convolution_matches_direct_sum() {
        let (nx, ny) = (9, 7);
        let data: Vec<Complex64> = (0..nx * ny)
            .map(|i| Complex64::new((i as f64 * 0.7).sin(), (i % 5) as f64))
            .collect();
        let kernel = |dx: isize, dy: isize| Complex64::new((dx * dx) as f64 * 0.1, dy as f64).exp();
        let fast = linear_convolve_same(&data, nx, ny, kernel);
        for n in 0..ny {
            for m in 0..nx {
                let mut s = Complex64::new(0.0, 0.0);
                for j in 0..ny {
                    for i in 0..nx {
                        s += data[j * nx + i] * kernel(m as isize - i as isize, n as isize - j as isize);
                    }
                }
                let d = (fast[n * nx + m] - s).norm() / s.norm().max(1.0);
                assert!(d < 1e-11, "({m},{n}): {d}");
            }
        }
    }
}
