use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform rectangular lattice with equal spacing on both axes.
///
/// Node `(i, j)` sits at `origin + spacing * (i, j)`; samples on the grid
/// are stored row-major with `i` (the x index) running fastest.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid2 {
    origin: [f64; 2],
    spacing: f64,
    nx: usize,
    ny: usize,
}

impl Grid2 {
    pub fn new(origin: [f64; 2], spacing: f64, nx: usize, ny: usize) -> Result<Self> {
        if !(spacing.is_finite() && spacing > 0.0) {
            return Err(Error::InvalidGrid(format!("spacing must be positive, got {spacing}")));
        }
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidGrid(format!("need at least 2x2 nodes, got {nx}x{ny}")));
        }
        if !(origin[0].is_finite() && origin[1].is_finite()) {
            return Err(Error::InvalidGrid("origin must be finite".into()));
        }
        Ok(Self { origin, spacing, nx, ny })
    }

    /// Square grid of `n` by `n` nodes spanning `[-half_width, half_width]^2`.
    pub fn centered_square(half_width: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid(format!("need at least 2 nodes per axis, got {n}")));
        }
        let spacing = 2.0 * half_width / (n - 1) as f64;
        Self::new([-half_width, -half_width], spacing, n, n)
    }

    pub fn origin(&self) -> [f64; 2] {
        self.origin
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Physical extent `(spacing (nx - 1), spacing (ny - 1))`.
    pub fn extent(&self) -> [f64; 2] {
        [
            self.spacing * (self.nx - 1) as f64,
            self.spacing * (self.ny - 1) as f64,
        ]
    }

    /// Far corner of the grid.
    pub fn end(&self) -> [f64; 2] {
        let e = self.extent();
        [self.origin[0] + e[0], self.origin[1] + e[1]]
    }

    pub fn center(&self) -> [f64; 2] {
        let e = self.extent();
        [self.origin[0] + 0.5 * e[0], self.origin[1] + 0.5 * e[1]]
    }

    /// Half of the larger side length.
    pub fn half_width(&self) -> f64 {
        let e = self.extent();
        0.5 * e[0].max(e[1])
    }

    /// Largest distance from `p` to any grid corner.
    pub fn max_corner_distance(&self, p: [f64; 2]) -> f64 {
        let e = self.end();
        let mut d: f64 = 0.0;
        for cx in [self.origin[0], e[0]] {
            for cy in [self.origin[1], e[1]] {
                d = d.max((cx - p[0]).hypot(cy - p[1]));
            }
        }
        d
    }

    #[inline]
    pub fn node(&self, i: usize, j: usize) -> [f64; 2] {
        [
            self.origin[0] + self.spacing * i as f64,
            self.origin[1] + self.spacing * j as f64,
        ]
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    /// Node coordinates in storage order.
    pub fn nodes(&self) -> impl Iterator<Item = [f64; 2]> + '_ {
        (0..self.ny).flat_map(move |j| (0..self.nx).map(move |i| self.node(i, j)))
    }

    /// Whether `p` lies in the closed bounding box of the nodes.
    pub fn contains(&self, p: [f64; 2]) -> bool {
        let e = self.end();
        p[0] >= self.origin[0] && p[0] <= e[0] && p[1] >= self.origin[1] && p[1] <= e[1]
    }

    /// Whether every node of `self` lies inside `other`'s hull.
    pub fn inside(&self, other: &Grid2) -> bool {
        let tol = 1e-9 * other.spacing;
        let e = self.end();
        let oe = other.end();
        self.origin[0] >= other.origin[0] - tol
            && self.origin[1] >= other.origin[1] - tol
            && e[0] <= oe[0] + tol
            && e[1] <= oe[1] + tol
    }

    /// If every node of `self` coincides with a node of `fine`, returns the
    /// index offset of `self`'s origin in `fine` and the integer stride.
    pub fn nesting_in(&self, fine: &Grid2) -> Option<Nesting> {
        let ratio = self.spacing / fine.spacing;
        let stride = ratio.round();
        if stride < 1.0 || (ratio - stride).abs() > 1e-9 * ratio {
            return None;
        }
        let ox = (self.origin[0] - fine.origin[0]) / fine.spacing;
        let oy = (self.origin[1] - fine.origin[1]) / fine.spacing;
        let (rx, ry) = (ox.round(), oy.round());
        if (ox - rx).abs() > 1e-6 || (oy - ry).abs() > 1e-6 || rx < 0.0 || ry < 0.0 {
            return None;
        }
        let nest = Nesting {
            offset: [rx as usize, ry as usize],
            stride: stride as usize,
        };
        let last_i = nest.offset[0] + nest.stride * (self.nx - 1);
        let last_j = nest.offset[1] + nest.stride * (self.ny - 1);
        if last_i >= fine.nx || last_j >= fine.ny {
            return None;
        }
        Some(nest)
    }

    /// Grid with `factor` times finer spacing covering the same hull.
    pub fn refined(&self, factor: usize) -> Result<Self> {
        if factor == 0 {
            return Err(Error::InvalidGrid("refinement factor must be positive".into()));
        }
        Self::new(
            self.origin,
            self.spacing / factor as f64,
            (self.nx - 1) * factor + 1,
            (self.ny - 1) * factor + 1,
        )
    }

    /// Trapezoid weight of node `(i, j)` (1, 1/2 on edges, 1/4 at corners).
    #[inline]
    pub fn trapezoid_weight(&self, i: usize, j: usize) -> f64 {
        let wx = if i == 0 || i + 1 == self.nx { 0.5 } else { 1.0 };
        let wy = if j == 0 || j + 1 == self.ny { 0.5 } else { 1.0 };
        wx * wy
    }
}

/// Location of a coarse grid's nodes inside a finer grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Nesting {
    pub offset: [usize; 2],
    pub stride: usize,
}

impl Nesting {
    #[inline]
    pub fn fine_index(&self, i: usize, j: usize) -> (usize, usize) {
        (self.offset[0] + self.stride * i, self.offset[1] + self.stride * j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_grids() {
        assert!(Grid2::new([0.0, 0.0], 0.0, 4, 4).is_err());
        assert!(Grid2::new([0.0, 0.0], -1.0, 4, 4).is_err());
        assert!(Grid2::new([0.0, 0.0], 1.0, 1, 4).is_err());
        assert!(Grid2::new([0.0, f64::NAN], 1.0, 4, 4).is_err());
    }

    #[test]
    fn extent_and_center() {
        let g = Grid2::new([1.0, -2.0], 0.5, 5, 3).unwrap();
        assert_eq!(g.extent(), [2.0, 1.0]);
        assert_eq!(g.center(), [2.0, -1.5]);
        assert_eq!(g.half_width(), 1.0);
    }

    #[test]
    fn nesting_detects_strided_subgrid() {
        let fine = Grid2::centered_square(1.0, 257).unwrap();
        let coarse = Grid2::new(fine.node(2, 2), fine.spacing() * 4.0, 64, 64).unwrap();
        let n = coarse.nesting_in(&fine).unwrap();
        assert_eq!(n, Nesting { offset: [2, 2], stride: 4 });
        let shifted = Grid2::new([coarse.origin()[0] + 0.3 * fine.spacing(), 0.0], coarse.spacing(), 4, 4).unwrap();
        assert!(shifted.nesting_in(&fine).is_none());
        assert!(fine.refined(3).unwrap().nesting_in(&fine).is_none());
        assert_eq!(fine.nesting_in(&fine.refined(3).unwrap()).unwrap().stride, 3);
    }
}
