//! Versioned parameter sets (v1) for the built-in phantom kinds. All
//! composite presets live in the open square of half width 1; the JSON
//! run-spec fragments under `suite/` spell out the same primitives.

use num_complex::Complex64;

use super::{PhantomKind, PhantomSpec, Primitive};

pub const PRESET_VERSION: &str = "v1";

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ellipse(center: [f64; 2], semi_axes: [f64; 2], angle_deg: f64, intensity: Complex64) -> Primitive {
    Primitive::Ellipse { center, semi_axes, angle_deg, intensity }
}

fn rect(center: [f64; 2], half_sizes: [f64; 2], angle_deg: f64, intensity: Complex64) -> Primitive {
    Primitive::Rectangle { center, half_sizes, angle_deg, intensity }
}

fn disc(center: [f64; 2], r: f64, intensity: Complex64) -> Primitive {
    ellipse(center, [r, r], 0.0, intensity)
}

pub fn primitives(kind: PhantomKind) -> Vec<Primitive> {
    match kind {
        PhantomKind::Rectangles => vec![
            rect([-0.45, 0.35], [0.3, 0.2], 0.0, c(1.0, 0.0)),
            rect([0.4, 0.4], [0.15, 0.35], 20.0, c(0.6, 0.0)),
            rect([0.1, -0.45], [0.5, 0.15], -10.0, c(0.8, 0.0)),
            rect([-0.55, -0.3], [0.12, 0.12], 45.0, c(0.4, 0.2)),
        ],
        PhantomKind::Ovals => vec![
            ellipse([-0.4, 0.3], [0.35, 0.2], 30.0, c(1.0, 0.0)),
            ellipse([0.4, 0.35], [0.25, 0.15], -20.0, c(0.7, 0.3)),
            ellipse([0.0, -0.3], [0.5, 0.2], 0.0, c(0.5, 0.0)),
            ellipse([0.55, -0.55], [0.12, 0.25], 60.0, c(0.9, 0.0)),
            ellipse([-0.55, -0.6], [0.15, 0.1], 0.0, c(0.6, 0.0)),
        ],
        PhantomKind::CirclesSpiral => (0..10)
            .map(|k| {
                let k = k as f64;
                let (theta, r) = (0.9 * k, 0.15 + 0.065 * k);
                let intensity = if (k as usize) % 2 == 0 { c(1.0, 0.0) } else { c(0.6, 0.0) };
                disc([r * theta.cos(), r * theta.sin()], 0.04 + 0.007 * k, intensity)
            })
            .collect(),
        PhantomKind::GeometricFigures => {
            let hexagon = (0..6)
                .map(|k| {
                    let a = std::f64::consts::PI / 3.0 * k as f64;
                    [0.15 * a.cos(), 0.05 + 0.15 * a.sin()]
                })
                .collect();
            vec![
                Primitive::Polygon {
                    vertices: vec![[-0.7, -0.6], [-0.1, -0.6], [-0.4, -0.05]],
                    intensity: c(1.0, 0.0),
                },
                rect([0.45, 0.45], [0.2, 0.2], 30.0, c(0.8, 0.0)),
                disc([-0.45, 0.45], 0.25, c(0.6, 0.0)),
                disc([0.4, -0.4], 0.3, c(0.7, 0.0)),
                disc([0.4, -0.4], 0.15, c(-0.7, 0.0)),
                Primitive::Polygon { vertices: hexagon, intensity: c(0.0, 0.5) },
            ]
        }
        PhantomKind::SheppLogan => shepp_logan(),
        PhantomKind::Gaussian => vec![Primitive::Gaussian { center: [0.0, 0.0], width: 0.25, intensity: c(1.0, 0.0) }],
        PhantomKind::Disc => vec![disc([0.0, 0.0], 0.5, c(1.0, 0.0))],
    }
}

/// The ten-ellipse modified Shepp-Logan head phantom (Toft's intensities)
/// on `[-1, 1]^2`: (intensity, a, b, x0, y0, angle in degrees).
pub const SHEPP_LOGAN: [(f64, f64, f64, f64, f64, f64); 10] = [
    (1.0, 0.69, 0.92, 0.0, 0.0, 0.0),
    (-0.8, 0.6624, 0.8740, 0.0, -0.0184, 0.0),
    (-0.2, 0.1100, 0.3100, 0.22, 0.0, -18.0),
    (-0.2, 0.1600, 0.4100, -0.22, 0.0, 18.0),
    (0.1, 0.2100, 0.2500, 0.0, 0.35, 0.0),
    (0.1, 0.0460, 0.0460, 0.0, 0.1, 0.0),
    (0.1, 0.0460, 0.0460, 0.0, -0.1, 0.0),
    (0.1, 0.0460, 0.0230, -0.08, -0.605, 0.0),
    (0.1, 0.0230, 0.0230, 0.0, -0.606, 0.0),
    (0.1, 0.0230, 0.0460, 0.06, -0.605, 0.0),
];

fn shepp_logan() -> Vec<Primitive> {
    SHEPP_LOGAN
        .iter()
        .map(|&(i, a, b, x0, y0, phi)| ellipse([x0, y0], [a, b], phi, c(i, 0.0)))
        .collect()
}

impl PhantomSpec {
    /// The built-in spec for `kind` with explicit primitives.
    pub fn preset(kind: PhantomKind) -> Self {
        Self {
            kind,
            id: None,
            amplitude: c(1.0, 0.0),
            half_width: 1.0,
            primitives: primitives(kind),
        }
    }

    /// `amplitude * exp(-|z - center|^2 / width^2)` on the square of the given half width.
    pub fn gaussian(center: [f64; 2], width: f64, half_width: f64) -> Self {
        Self {
            kind: PhantomKind::Gaussian,
            id: None,
            amplitude: c(1.0, 0.0),
            half_width,
            primitives: vec![Primitive::Gaussian { center, width, intensity: c(1.0, 0.0) }],
        }
    }

    pub fn disc(center: [f64; 2], radius: f64, half_width: f64) -> Self {
        Self {
            kind: PhantomKind::Disc,
            id: None,
            amplitude: c(1.0, 0.0),
            half_width,
            primitives: vec![disc(center, radius, c(1.0, 0.0))],
        }
    }
}
