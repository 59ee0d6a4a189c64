use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhantomKind {
    Rectangles,
    Ovals,
    CirclesSpiral,
    GeometricFigures,
    SheppLogan,
    Gaussian,
    Disc,
}

impl PhantomKind {
    pub const SUITE: [PhantomKind; 5] = [
        PhantomKind::Rectangles,
        PhantomKind::Ovals,
        PhantomKind::CirclesSpiral,
        PhantomKind::GeometricFigures,
        PhantomKind::SheppLogan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PhantomKind::Rectangles => "rectangles",
            PhantomKind::Ovals => "ovals",
            PhantomKind::CirclesSpiral => "circles_spiral",
            PhantomKind::GeometricFigures => "geometric_figures",
            PhantomKind::SheppLogan => "shepp_logan",
            PhantomKind::Gaussian => "gaussian",
            PhantomKind::Disc => "disc",
        }
    }

    pub fn is_composite(self) -> bool {
        !matches!(self, PhantomKind::Gaussian | PhantomKind::Disc)
    }
}

/// One building block of a phantom. Angles are in degrees, counter-clockwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Primitive {
    /// Indicator of `((u/a)^2 + (v/b)^2 < 1)` in the frame rotated by `angle_deg`.
    Ellipse {
        center: [f64; 2],
        semi_axes: [f64; 2],
        #[serde(default)]
        angle_deg: f64,
        intensity: Complex64,
    },
    /// Indicator of `|u| < hx, |v| < hy` in the rotated frame.
    Rectangle {
        center: [f64; 2],
        half_sizes: [f64; 2],
        #[serde(default)]
        angle_deg: f64,
        intensity: Complex64,
    },
    /// Indicator of the polygon interior (even-odd rule).
    Polygon { vertices: Vec<[f64; 2]>, intensity: Complex64 },
    /// `intensity * exp(-|z - center|^2 / width^2)`; not compactly supported,
    /// only its center is checked against the domain.
    Gaussian { center: [f64; 2], width: f64, intensity: Complex64 },
}

impl Primitive {
    pub fn intensity(&self) -> Complex64 {
        match self {
            Primitive::Ellipse { intensity, .. }
            | Primitive::Rectangle { intensity, .. }
            | Primitive::Polygon { intensity, .. }
            | Primitive::Gaussian { intensity, .. } => *intensity,
        }
    }

    /// Axis-aligned bounding box `[xmin, ymin, xmax, ymax]`.
    pub fn bounding_box(&self) -> [f64; 4] {
        match self {
            Primitive::Ellipse { center, semi_axes, angle_deg, .. } => {
                let (s, c) = angle_deg.to_radians().sin_cos();
                let [a, b] = *semi_axes;
                let ex = ((a * c).powi(2) + (b * s).powi(2)).sqrt();
                let ey = ((a * s).powi(2) + (b * c).powi(2)).sqrt();
                [center[0] - ex, center[1] - ey, center[0] + ex, center[1] + ey]
            }
            Primitive::Rectangle { center, half_sizes, angle_deg, .. } => {
                let (s, c) = angle_deg.to_radians().sin_cos();
                let [a, b] = *half_sizes;
                let ex = a * c.abs() + b * s.abs();
                let ey = a * s.abs() + b * c.abs();
                [center[0] - ex, center[1] - ey, center[0] + ex, center[1] + ey]
            }
            Primitive::Polygon { vertices, .. } => vertices.iter().fold(
                [f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY],
                |b, v| [b[0].min(v[0]), b[1].min(v[1]), b[2].max(v[0]), b[3].max(v[1])],
            ),
            Primitive::Gaussian { center, .. } => [center[0], center[1], center[0], center[1]],
        }
    }

    /// Value at `z` before the phantom-wide amplitude scale.
    pub fn eval(&self, z: [f64; 2]) -> Complex64 {
        let zero = Complex64::new(0.0, 0.0);
        match self {
            Primitive::Ellipse { center, semi_axes, angle_deg, intensity } => {
                let (u, v) = to_local(z, *center, *angle_deg);
                let t = (u / semi_axes[0]).powi(2) + (v / semi_axes[1]).powi(2);
                if t < 1.0 {
                    *intensity
                } else {
                    zero
                }
            }
            Primitive::Rectangle { center, half_sizes, angle_deg, intensity } => {
                let (u, v) = to_local(z, *center, *angle_deg);
                if u.abs() < half_sizes[0] && v.abs() < half_sizes[1] {
                    *intensity
                } else {
                    zero
                }
            }
            Primitive::Polygon { vertices, intensity } => {
                if point_in_polygon(z, vertices) {
                    *intensity
                } else {
                    zero
                }
            }
            Primitive::Gaussian { center, width, intensity } => {
                let d2 = (z[0] - center[0]).powi(2) + (z[1] - center[1]).powi(2);
                intensity * (-d2 / (width * width)).exp()
            }
        }
    }

    /// Exact integral of the primitive over the plane.
    pub fn integral(&self) -> Complex64 {
        use std::f64::consts::PI;
        match self {
            Primitive::Ellipse { semi_axes, intensity, .. } => intensity * (PI * semi_axes[0] * semi_axes[1]),
            Primitive::Rectangle { half_sizes, intensity, .. } => intensity * (4.0 * half_sizes[0] * half_sizes[1]),
            Primitive::Polygon { vertices, intensity } => {
                let n = vertices.len();
                let twice: f64 = (0..n)
                    .map(|i| {
                        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                        a[0] * b[1] - b[0] * a[1]
                    })
                    .sum();
                intensity * (0.5 * twice.abs())
            }
            Primitive::Gaussian { width, intensity, .. } => intensity * (PI * width * width),
        }
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if !(self.intensity().re.is_finite() && self.intensity().im.is_finite()) {
            return Err("non-finite intensity".into());
        }
        let positive = |v: &[f64]| v.iter().all(|x| x.is_finite() && *x > 0.0);
        match self {
            Primitive::Ellipse { semi_axes, .. } if !positive(semi_axes) => Err("semi-axes must be positive".into()),
            Primitive::Rectangle { half_sizes, .. } if !positive(half_sizes) => Err("half sizes must be positive".into()),
            Primitive::Polygon { vertices, .. } if vertices.len() < 3 => Err("polygon needs 3 vertices".into()),
            Primitive::Gaussian { width, .. } if !positive(&[*width]) => Err("gaussian width must be positive".into()),
            _ => Ok(()),
        }
    }
}

fn to_local(z: [f64; 2], center: [f64; 2], angle_deg: f64) -> (f64, f64) {
    let (s, c) = angle_deg.to_radians().sin_cos();
    let (dx, dy) = (z[0] - center[0], z[1] - center[1]);
    (dx * c + dy * s, -dx * s + dy * c)
}

fn point_in_polygon(p: [f64; 2], vs: &[[f64; 2]]) -> bool {
    let mut inside = false;
    let n = vs.len();
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (vs[i], vs[j]);
        if (a[1] > p[1]) != (b[1] > p[1]) {
            let x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
            if p[0] < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Declarative description of a test potential supported in the open square
/// `(-half_width, half_width)^2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhantomSpec {
    pub kind: PhantomKind,
    /// Report label; defaults to the kind's name.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(default = "one")]
    pub amplitude: Complex64,
    pub half_width: f64,
    /// Empty means "use the built-in preset for this kind".
    #[serde(default)]
    pub primitives: Vec<Primitive>,
}

impl PhantomSpec {
    pub fn label(&self) -> String {
        self.id.clone().unwrap_or_else(|| self.kind.name().to_string())
    }

    /// Primitives after preset substitution.
    pub fn resolved_primitives(&self) -> Vec<Primitive> {
        if self.primitives.is_empty() {
            super::presets::primitives(self.kind)
        } else {
            self.primitives.clone()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let err = |reason: String| Error::Phantom { kind: self.kind.name().into(), reason };
        if !(self.half_width.is_finite() && self.half_width > 0.0) {
            return Err(err(format!("half width must be positive, got {}", self.half_width)));
        }
        if !(self.amplitude.re.is_finite() && self.amplitude.im.is_finite()) {
            return Err(err("non-finite amplitude".into()));
        }
        let prims = self.resolved_primitives();
        if prims.is_empty() {
            return Err(err("no primitives".into()));
        }
        let hw = self.half_width;
        for (k, p) in prims.iter().enumerate() {
            p.validate().map_err(|r| err(format!("primitive {k}: {r}")))?;
            let b = p.bounding_box();
            let inside = b[0] > -hw && b[1] > -hw && b[2] < hw && b[3] < hw;
            if !inside {
                return Err(err(format!(
                    "primitive {k} with bounding box {b:?} leaves the open square of half width {hw}"
                )));
            }
        }
        Ok(())
    }

    /// Exact integral of the phantom over the plane.
    pub fn integral(&self) -> Complex64 {
        self.resolved_primitives().iter().map(Primitive::integral).sum::<Complex64>() * self.amplitude
    }
}
