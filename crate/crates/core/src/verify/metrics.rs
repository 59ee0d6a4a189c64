use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::ScalarField;
use crate::summation::pairwise_sum_real;

/// Region over which L1 errors are summed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Domain {
    /// Every node of the grid.
    Frame,
    /// Nodes in the closed square `[-half_width, half_width]^2`.
    Omega { half_width: f64 },
}

impl Domain {
    pub fn name(&self) -> &'static str {
        match self {
            Domain::Frame => "frame",
            Domain::Omega { .. } => "omega",
        }
    }

    fn includes(&self, z: [f64; 2]) -> bool {
        match *self {
            Domain::Frame => true,
            Domain::Omega { half_width } => {
                let tol = 1e-12 * half_width.max(1.0);
                z[0].abs() <= half_width + tol && z[1].abs() <= half_width + tol
            }
        }
    }
}

/// `sum |recon - truth| h^2` over the nodes of `domain`.
pub fn l1_error(recon: &ScalarField, truth: &ScalarField, domain: Domain) -> Result<f64> {
    recon.check_same_grid(truth)?;
    let g = recon.grid();
    let h = g.spacing();
    let terms: Vec<f64> = recon
        .samples()
        .iter()
        .zip(truth.samples())
        .enumerate()
        .map(|(n, (a, b))| {
            if domain.includes(g.node(n % g.nx(), n / g.nx())) {
                (a - b).norm()
            } else {
                0.0
            }
        })
        .collect();
    Ok(pairwise_sum_real(&terms) * h * h)
}

/// `100 (1 - error / standard)`; zero when the standard error vanishes.
pub fn reduction_pct(error: f64, standard: f64) -> f64 {
    if standard > 0.0 {
        100.0 * (1.0 - error / standard)
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Grid2;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn field(g: Grid2, f: impl Fn([f64; 2]) -> Complex64 + Sync) -> ScalarField {
        ScalarField::from_fn(g, f).unwrap()
    }

    #[test]
    fn identical_fields_have_zero_error() {
        let g = Grid2::centered_square(1.0, 33).unwrap();
        let f = field(g, |z| Complex64::new(z[0], z[1]));
        assert_eq!(l1_error(&f, &f, Domain::Frame).unwrap(), 0.0);
    }

    #[test]
    fn constant_offset_gives_area() {
        let g = Grid2::new([0.0, 0.0], 0.5, 4, 4).unwrap();
        let t = field(g, |_| Complex64::new(0.0, 0.0));
        let r = field(g, |_| Complex64::new(0.3, 0.4));
        // 16 nodes of cell area 0.25.
        assert!((l1_error(&r, &t, Domain::Frame).unwrap() - 0.5 * 16.0 * 0.25).abs() < 1e-12);
        let inner = l1_error(&r, &t, Domain::Omega { half_width: 1.0 }).unwrap();
        assert!((inner - 0.5 * 9.0 * 0.25).abs() < 1e-12);
    }

    #[test]
    fn mismatched_grids_are_rejected() {
        let a = ScalarField::zeros(Grid2::centered_square(1.0, 9).unwrap());
        let b = ScalarField::zeros(Grid2::centered_square(1.0, 11).unwrap());
        assert!(l1_error(&a, &b, Domain::Frame).is_err());
    }

    proptest! {
        #[test]
        fn scaling_both_scales_error(vals in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 81),
                                     re in -3.0f64..3.0, im in -3.0f64..3.0) {
            prop_assume!(re.hypot(im) > 1e-3);
            let g = Grid2::centered_square(1.0, 9).unwrap();
            let r = ScalarField::new(g, vals.iter().map(|&(a, b)| Complex64::new(a, b)).collect()).unwrap();
            let t = field(g, |z| Complex64::new(z[0] * z[1], 1.0));
            let s = Complex64::new(re, im);
            let e1 = l1_error(&r, &t, Domain::Frame).unwrap();
            let e2 = l1_error(&r.scaled(s), &t.scaled(s), Domain::Frame).unwrap();
            prop_assert!((e2 - s.norm() * e1).abs() <= 1e-10 * (1.0 + e2));
            let two = l1_error(&r.scaled(Complex64::new(2.0, 0.0)), &t.scaled(Complex64::new(2.0, 0.0)), Domain::Frame).unwrap();
            prop_assert!(two == 2.0 * e1);
        }
    
        #[test]
        fn reduction_is_scale_invariant(re in -3.0f64..3.0, im in -3.0f64..3.0, shift in 0.01f64..0.5) {
            prop_assume!(re.hypot(im) > 1e-3);
            let g = Grid2::centered_square(1.0, 17).unwrap();
            let t = field(g, |z| Complex64::new((-(z[0] * z[0] + z[1] * z[1])).exp(), 0.0));
            let std = field(g, |z| t.sample_at(z) + Complex64::new(0.3 * z[0], 0.1));
            let rec = field(g, |z| t.sample_at(z) + Complex64::new(shift * z[1], 0.0));
            let s = Complex64::new(re, im);
            let base = reduction_pct(l1_error(&rec, &t, Domain::Frame).unwrap(), l1_error(&std, &t, Domain::Frame).unwrap());
            let scaled = reduction_pct(
                l1_error(&rec.scaled(s), &t.scaled(s), Domain::Frame).unwrap(),
                l1_error(&std.scaled(s), &t.scaled(s), Domain::Frame).unwrap(),
            );
            prop_assert!((base - scaled).abs() <= 1e-9 * (1.0 + base.abs()));
        }
    }
}
