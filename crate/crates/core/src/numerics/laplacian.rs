use num_complex::Complex64;

use super::grid::Grid1D;
use super::matrix::ComplexMatrix;

/// Symmetric tridiagonal form of `-1/2 d^2/dx^2`: constant diagonal and off-diagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticStencil {
    pub diagonal: f64,
    pub off_diagonal: f64,
    pub dim: usize,
}

impl KineticStencil {
    pub fn new(grid: &Grid1D) -> Self {
        let h = grid.spacing();
        Self {
            diagonal: 1.0 / (h * h),
            off_diagonal: -0.5 / (h * h),
            dim: grid.points(),
        }
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        let n = self.dim;
        (0..n)
            .map(|j| {
                let left = if j > 0 {
                    v[j - 1]
                } else {
                    Complex64::new(0.0, 0.0)
                };
                let right = if j + 1 < n {
                    v[j + 1]
                } else {
                    Complex64::new(0.0, 0.0)
                };
                v[j] * self.diagonal + (left + right) * self.off_diagonal
            })
            .collect()
    }

    /// Exact eigenvalues of the discrete operator, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.dim as f64;
        let h2 = -0.5 / self.off_diagonal;
        (1..=self.dim)
            .map(|m| {
                let s = (m as f64 * std::f64::consts::PI / (2.0 * (n + 1.0))).sin();
                2.0 * s * s / h2
            })
            .collect()
    }
}

/// Dense matrix of `-1/2 d^2/dx^2` with the three-point stencil and Dirichlet ghost nodes.
pub fn build_laplacian(grid: &Grid1D) -> ComplexMatrix {
    let stencil = KineticStencil::new(grid);
    let n = grid.points();
    let mut m = ComplexMatrix::zeros(n);
    for j in 0..n {
        m[(j, j)] = Complex64::new(stencil.diagonal, 0.0);
        if j + 1 < n {
            m[(j, j + 1)] = Complex64::new(stencil.off_diagonal, 0.0);
            m[(j + 1, j)] = Complex64::new(stencil.off_diagonal, 0.0);
        }
    }
    m
}

/// Central-difference first derivative with zero ghost values.
pub fn central_derivative(v: &[Complex64], h: f64) -> Vec<Complex64> {
    let n = v.len();
    (0..n)
        .map(|j| {
            let left = if j > 0 {
                v[j - 1]
            } else {
                Complex64::new(0.0, 0.0)
            };
            let right = if j + 1 < n {
                v[j + 1]
            } else {
                Complex64::new(0.0, 0.0)
            };
            (right - left) / (2.0 * h)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::eigen::eig_hermitian;
    use std::f64::consts::PI;

    #[test]
    fn three_point_grid_matches_stencil() {
        let g = Grid1D::new(1.0, 3).unwrap();
        let m = build_laplacian(&g);
        let expected = [[1.0, -0.5, 0.0], [-0.5, 1.0, -0.5], [0.0, -0.5, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m[(i, j)], Complex64::new(expected[i][j], 0.0));
            }
        }
    }

    #[test]
    fn matrix_is_exactly_symmetric() {
        let m = build_laplacian(&Grid1D::new(3.0, 40).unwrap());
        assert_eq!(m, m.transpose());
    }

    #[test]
    fn constant_maps_to_zero_in_the_interior() {
        let g = Grid1D::new(10.0, 201).unwrap();
        let m = build_laplacian(&g);
        let ones = vec![Complex64::new(1.0, 0.0); 201];
        let out = m.apply(&ones);
        for z in &out[1..200] {
            assert!(z.norm() < 1e-12);
        }
        assert_eq!(out, KineticStencil::new(&g).apply(&ones));
    }

    #[test]
    fn low_eigenvalues_approach_particle_in_a_box() {
        // Ghost nodes sit at -L - h and L + h, so the box width is (Nx + 1) h.
        let g = Grid1D::new(5.0, 201).unwrap();
        let width = (g.points() + 1) as f64 * g.spacing();
        let pairs = eig_hermitian(&build_laplacian(&g)).unwrap();
        let analytic = KineticStencil::new(&g).eigenvalues();
        for n in 1..=4 {
            let exact = 0.5 * (n as f64 * PI / width).powi(2);
            let numeric = pairs[n - 1].value.re;
            assert!((numeric - analytic[n - 1]).abs() < 1e-12);
            // O(h^2) error with a modest constant.
            assert!(
                (numeric - exact).abs() / exact < (n as f64 * PI * g.spacing() / width).powi(2)
            );
        }
    }

    #[test]
    fn observed_order_is_two_away_from_the_ghosts() {
        let err = |nx: usize| {
            let g = Grid1D::new(1.0, nx).unwrap();
            let v: Vec<Complex64> = g
                .nodes()
                .iter()
                .map(|&x| Complex64::new(x.sin().exp(), 0.0))
                .collect();
            let kv = KineticStencil::new(&g).apply(&v);
            (1..nx - 1)
                .map(|j| {
                    let x = g.node(j);
                    let exact = -0.5 * x.sin().exp() * (x.cos().powi(2) - x.sin());
                    (kv[j].re - exact).abs()
                })
                .fold(0.0, f64::max)
        };
        for w in [21, 41, 81, 161].windows(2) {
            let order = (err(w[0]) / err(w[1])).log2();
            assert!(order >= 1.9, "order {order} at nx = {}", w[1]);
        }
    }
}
