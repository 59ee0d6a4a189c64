use super::{l1_error, Domain};
use crate::averaging::{mollify, MollifierSpec};
use crate::error::{Error, Result};
use crate::field::ScalarField;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaChoice {
    pub sigma: f64,
    pub l1_error: f64,
}

/// Mollifies `base` with every sigma of the grid and keeps the smallest L1
/// error against `truth`. Ties go to the smaller sigma.
pub fn best_sigma(base: &ScalarField, truth: &ScalarField, sigma_grid: &[f64], domain: Domain) -> Result<SigmaChoice> {
    if sigma_grid.is_empty() {
        return Err(Error::InvalidParam("sigma grid is empty".into()));
    }
    let mut sorted = sigma_grid.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut best: Option<SigmaChoice> = None;
    for sigma in sorted {
        let smoothed = mollify(base, &MollifierSpec::new(sigma)?)?;
        let err = l1_error(&smoothed, truth, domain)?;
        if best.is_none_or(|b| err < b.l1_error) {
            best = Some(SigmaChoice { sigma, l1_error: err });
        }
    }
    Ok(best.expect("nonempty grid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Grid2;
    use crate::phantom::{render_phantom, PhantomKind, PhantomSpec};
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn truth() -> ScalarField {
        let g = Grid2::centered_square(1.0, 65).unwrap();
        render_phantom(&PhantomSpec::preset(PhantomKind::Ovals), &g).unwrap()
    }

    #[test]
    fn singleton_grid_returns_its_sigma() {
        let t = truth();
        let s = 3.0 * t.grid().spacing();
        assert_eq!(best_sigma(&t, &t, &[s], Domain::Frame).unwrap().sigma, s);
    }

    #[test]
    fn exact_input_prefers_smallest_sigma() {
        let t = truth();
        let h = t.grid().spacing();
        let grid = [h, 2.0 * h, 4.0 * h, 8.0 * h];
        let choice = best_sigma(&t, &t, &grid, Domain::Frame).unwrap();
        assert_eq!(choice.sigma, h);
        assert_eq!(choice.l1_error, 0.0);
        let mut last = 0.0;
        for &s in &grid[1..] {
            let e = l1_error(&mollify(&t, &MollifierSpec::new(s).unwrap()).unwrap(), &t, Domain::Frame).unwrap();
            assert!(e > last);
            last = e;
        }
    }

    #[test]
    fn noisy_input_benefits_from_smoothing() {
        let t = truth();
        let noisy = ScalarField::from_fn(*t.grid(), |z| {
            let n = ((z[0] * 91.7).sin() * (z[1] * 57.3).cos()) * 0.3;
            t.sample_at(z) + Complex64::new(n, 0.0)
        })
        .unwrap();
        let h = t.grid().spacing();
        let choice = best_sigma(&noisy, &t, &[h, 2.0 * h, 3.0 * h, 5.0 * h], Domain::Frame).unwrap();
        assert!(choice.sigma > h);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn enlarging_the_grid_never_hurts(k in prop::collection::vec(1.0f64..10.0, 1..5),
                                          extra in prop::collection::vec(1.0f64..10.0, 1..4)) {
            let t = truth();
            let h = t.grid().spacing();
            let base = ScalarField::from_fn(*t.grid(), |z| {
                t.sample_at(z) + Complex64::new(0.2 * (z[0] * 40.0).sin(), 0.0)
            }).unwrap();
            let small: Vec<f64> = k.iter().map(|m| m * h).collect();
            let mut big = small.clone();
            big.extend(extra.iter().map(|m| m * h));
            let a = best_sigma(&base, &t, &small, Domain::Frame).unwrap();
            let b = best_sigma(&base, &t, &big, Domain::Frame).unwrap();
            prop_assert!(b.l1_error <= a.l1_error);
            let again = best_sigma(&base, &t, &big, Domain::Frame).unwrap();
            prop_assert_eq!(b, again);
        }
    }
}
