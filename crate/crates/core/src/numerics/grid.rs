use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform grid on `[-L, L]` with `Nx` nodes, endpoints included.
///
/// Every node carries an unknown; the Dirichlet condition is imposed on the
/// ghost nodes one spacing beyond each end.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid1D {
    half_width: f64,
    points: usize,
}

impl Grid1D {
    pub const DEFAULT_HALF_WIDTH: f64 = 40.0;
    pub const DEFAULT_POINTS: usize = 401;

    pub fn new(half_width: f64, points: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "grid half-width must be positive and finite, got {half_width}"
            )));
        }
        if points < 3 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 3 points, got {points}"
            )));
        }
        Ok(Self { half_width, points })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points - 1) as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        // Mirror the upper half so that odd grids are exactly symmetric.
        let h = self.spacing();
        let from_left = -self.half_width + j as f64 * h;
        let from_right = self.half_width - (self.points - 1 - j) as f64 * h;
        if 2 * j + 1 >= self.points {
            from_right
        } else {
            from_left
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.points).map(|j| self.node(j)).collect()
    }

    /// Index of the node mirrored through the origin.
    pub fn mirror(&self, j: usize) -> usize {
        self.points - 1 - j
    }

    /// Fraction of `sum |v|^2` carried by nodes with `|x| <= L/2`.
    pub fn central_fraction<T: Copy>(&self, values: &[T], abs2: impl Fn(T) -> f64) -> f64 {
        let mut inner = 0.0;
        let mut total = 0.0;
        for (j, &v) in values.iter().enumerate() {
            let p = abs2(v);
            total += p;
            if self.node(j).abs() <= 0.5 * self.half_width + 1e-12 * self.half_width {
                inner += p;
            }
        }
        if total > 0.0 {
            inner / total
        } else {
            0.0
        }
    }
}
