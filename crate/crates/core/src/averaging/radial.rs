use num_complex::Complex64;

use super::AveragingParams;
use crate::error::Result;
use crate::field::RadialProfile;
use crate::summation::pairwise_sum_by;

/// `S_rad[f](r) = integral over s in [0, 1] of f(r / sqrt(1 + s))`, by the
/// trapezoid rule with `n_srad` intervals. Output shares `f`'s radial lattice.
pub fn radial_smooth(f: &RadialProfile, p: &AveragingParams) -> Result<RadialProfile> {
    radial_smooth_with(f, p.n_srad)
}

pub fn radial_smooth_with(f: &RadialProfile, n_srad: usize) -> Result<RadialProfile> {
    let n = n_srad.max(1);
    let ds = 1.0 / n as f64;
    let scales: Vec<f64> = (0..=n).map(|k| 1.0 / (1.0 + k as f64 * ds).sqrt()).collect();
    let values = (0..f.nr())
        .map(|k| {
            let r = f.radius(k);
            let sum = pairwise_sum_by(n + 1, |m| {
                let w = if m == 0 || m == n { 0.5 } else { 1.0 };
                f.value_at(r * scales[m]) * w
            });
            sum * ds
        })
        .collect::<Vec<Complex64>>();
    RadialProfile::new(f.r_max(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn constant_is_fixed() {
        let f = RadialProfile::from_fn(2.0, 101, |_| Complex64::new(0.7, -0.2)).unwrap();
        let g = radial_smooth(&f, &AveragingParams::default()).unwrap();
        for k in 0..g.nr() {
            assert!((g.values()[k] - f.values()[k]).norm() < 1e-14);
        }
    }

    #[test]
    fn quadratic_gains_ln2() {
        let f = RadialProfile::from_fn(2.0, 2001, |r| c(r * r)).unwrap();
        let p = AveragingParams { n_srad: 256, ..Default::default() };
        let g = radial_smooth(&f, &p).unwrap();
        for k in (100..g.nr()).step_by(100) {
            let r = g.radius(k);
            let exact = r * r * std::f64::consts::LN_2;
            assert!((g.values()[k].re - exact).abs() <= 1e-4 * exact, "r={r}");
        }
    }

    #[test]
    fn support_grows_by_sqrt2() {
        let f = RadialProfile::from_fn(2.0, 401, |r| {
            if r > 0.5 && r < 1.0 { c(((r - 0.5) * (1.0 - r)).powi(2)) } else { c(0.0) }
        })
        .unwrap();
        let g = radial_smooth(&f, &AveragingParams::default()).unwrap();
        let cell = g.step();
        assert!(g.support_start(0.0).unwrap() >= 0.5 - cell);
        assert!(g.support_end(0.0).unwrap() <= 2f64.sqrt() + cell);
    }

    #[test]
    fn value_at_origin_is_fixed() {
        let f = RadialProfile::from_fn(1.0, 65, |r| c((-r).exp())).unwrap();
        let g = radial_smooth(&f, &AveragingParams::default()).unwrap();
        assert_eq!(g.values()[0], f.values()[0]);
    }

    proptest! {
        #[test]
        fn linear_and_positive(a in prop::collection::vec(0.0f64..1.0, 33),
                               b in prop::collection::vec(-1.0f64..1.0, 33),
                               alpha in -3.0f64..3.0) {
            let p = AveragingParams { n_srad: 16, ..Default::default() };
            let fa = RadialProfile::new(1.0, a.iter().map(|&v| c(v)).collect()).unwrap();
            let fb = RadialProfile::new(1.0, b.iter().map(|&v| c(v)).collect()).unwrap();
            let sum = RadialProfile::new(
                1.0,
                a.iter().zip(&b).map(|(x, y)| c(alpha * x + y)).collect(),
            ).unwrap();
            let (ga, gb, gs) = (radial_smooth(&fa, &p).unwrap(), radial_smooth(&fb, &p).unwrap(), radial_smooth(&sum, &p).unwrap());
            for k in 0..33 {
                prop_assert!(ga.values()[k].re >= 0.0);
                let d = gs.values()[k] - (ga.values()[k] * alpha + gb.values()[k]);
                prop_assert!(d.norm() <= 1e-12);
            }
        }
    }
}
