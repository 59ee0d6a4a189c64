use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use super::PhaseContext;
use crate::error::Result;
use crate::field::{Grid2, ScalarField};
use crate::summation::{pairwise_sum_by, sequential_sum_by};

/// Trapezoid quadrature of `(lambda/pi) sum w q e^{i lambda phi_x} h^2` at one point.
pub(crate) fn quadrature_point(q: &ScalarField, ctx: &PhaseContext, pairwise: bool) -> Complex64 {
    let g = q.grid();
    let (nx, h) = (g.nx(), g.spacing());
    let o = g.origin();
    let lambda = ctx.lambda;
    let samples = q.samples();
    let term = |n: usize| {
        let v = samples[n];
        if v.re == 0.0 && v.im == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let (i, j) = (n % nx, n / nx);
        let a = o[0] + i as f64 * h - ctx.x[0];
        let b = o[1] + j as f64 * h - ctx.x[1];
        let (s, c) = (lambda * (a * a - b * b)).sin_cos();
        v * Complex64::new(c, s) * g.trapezoid_weight(i, j)
    };
    let sum = if pairwise { pairwise_sum_by(g.len(), term) } else { sequential_sum_by(g.len(), term) };
    sum * (lambda / PI * h * h)
}

pub(crate) fn naive_grid(q: &ScalarField, lambda: f64, out: &Grid2, pairwise: bool) -> Result<ScalarField> {
    let values: Vec<Complex64> = (0..out.len())
        .into_par_iter()
        .map(|n| {
            let x = out.node(n % out.nx(), n / out.nx());
            quadrature_point(q, &PhaseContext { x, lambda }, pairwise)
        })
        .collect();
    ScalarField::new(*out, values)
}
