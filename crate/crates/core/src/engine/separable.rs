use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::field::{Grid2, ScalarField};
use crate::summation::{pairwise_sum_by, sequential_sum_by};

/// `e^{i lambda phi}` factors as a row chirp times a column chirp when the
/// output nodes are input nodes: both depend only on integer offsets.
pub(crate) fn separable_grid(q: &ScalarField, lambda: f64, out: &Grid2, pairwise: bool) -> Result<ScalarField> {
    let g = *q.grid();
    let nest = out.nesting_in(&g).ok_or_else(|| {
        Error::NotNested("separable engine needs output nodes on the input lattice".into())
    })?;
    let (nx, ny, h) = (g.nx(), g.ny(), g.spacing());
    let reach = nx.max(ny);
    let e1: Vec<Complex64> = (0..reach).map(|d| Complex64::from_polar(1.0, lambda * (d as f64 * h).powi(2))).collect();
    let e2: Vec<Complex64> = e1.iter().map(|z| z.conj()).collect();
    let sum = |n: usize, f: &dyn Fn(usize) -> Complex64| {
        if pairwise { pairwise_sum_by(n, f) } else { sequential_sum_by(n, f) }
    };
    let wx = |i: usize| if i == 0 || i + 1 == nx { 0.5 } else { 1.0 };
    let wy = |j: usize| if j == 0 || j + 1 == ny { 0.5 } else { 1.0 };
    let samples = q.samples();

    // r[j * onx + a]: weighted row sums against the x-chirp centered at output column a.
    let onx = out.nx();
    let mut r = vec![Complex64::new(0.0, 0.0); ny * onx];
    r.par_chunks_mut(onx).enumerate().for_each(|(j, row)| {
        let src = &samples[j * nx..(j + 1) * nx];
        for (a, v) in row.iter_mut().enumerate() {
            let ia = nest.offset[0] + nest.stride * a;
            *v = sum(nx, &|i| src[i] * wx(i) * e1[i.abs_diff(ia)]);
        }
    });

    let scale = lambda / PI * h * h;
    let values: Vec<Complex64> = (0..out.len())
        .into_par_iter()
        .map(|n| {
            let (a, b) = (n % onx, n / onx);
            let jb = nest.offset[1] + nest.stride * b;
            sum(ny, &|j| r[j * onx + a] * wy(j) * e2[j.abs_diff(jb)]) * scale
        })
        .collect();
    ScalarField::new(*out, values)
}
