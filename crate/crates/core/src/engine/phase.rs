use num_complex::Complex64;

use crate::error::{Error, Result};

/// Reconstruction point and frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseContext {
    pub x: [f64; 2],
    pub lambda: f64,
}

impl PhaseContext {
    pub fn new(x: [f64; 2], lambda: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::InvalidParam(format!("lambda must be positive, got {lambda}")));
        }
        Ok(Self { x, lambda })
    }
}

/// `psi_x(z) = ((z1 - x1) + i (z2 - x2))^2 / 2`.
pub fn complex_phase(ctx: &PhaseContext, z: [f64; 2]) -> Complex64 {
    let w = Complex64::new(z[0] - ctx.x[0], z[1] - ctx.x[1]);
    0.5 * w * w
}

/// `phi_x(z) = (z1 - x1)^2 - (z2 - x2)^2`, twice the real part of `psi_x`.
pub fn real_phase(ctx: &PhaseContext, z: [f64; 2]) -> f64 {
    let (a, b) = (z[0] - ctx.x[0], z[1] - ctx.x[1]);
    a * a - b * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn at(x: [f64; 2]) -> PhaseContext {
        PhaseContext::new(x, 1.0).unwrap()
    }

    #[test]
    fn complex_phase_examples() {
        assert_eq!(complex_phase(&at([0.0, 0.0]), [1.0, 0.0]), Complex64::new(0.5, 0.0));
        assert_eq!(complex_phase(&at([0.0, 0.0]), [0.0, 1.0]), Complex64::new(-0.5, 0.0));
        assert_eq!(complex_phase(&at([0.3, -2.0]), [0.3, -2.0]), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn real_phase_examples() {
        assert_eq!(real_phase(&at([0.0, 0.0]), [1.0, 0.0]), 1.0);
        assert_eq!(real_phase(&at([0.0, 0.0]), [1.0, 1.0]), 0.0);
        assert_eq!(real_phase(&at([1.0, 0.0]), [0.0, 1.0]), 0.0);
    }

    #[test]
    fn rejects_non_positive_lambda() {
        assert!(PhaseContext::new([0.0, 0.0], 0.0).is_err());
        assert!(PhaseContext::new([0.0, 0.0], -3.0).is_err());
    }

    proptest! {
        #[test]
        fn real_phase_is_twice_real_part(x1 in -10.0f64..10.0, x2 in -10.0f64..10.0,
                                         z1 in -10.0f64..10.0, z2 in -10.0f64..10.0) {
            let ctx = at([x1, x2]);
            let d = real_phase(&ctx, [z1, z2]) - 2.0 * complex_phase(&ctx, [z1, z2]).re;
            prop_assert!(d.abs() <= 1e-12);
        }
    }
}
