//! Discretization and dense linear algebra shared by the physics modules.

pub mod eigen;
pub mod expm;
pub mod grid;
pub mod laplacian;
pub mod matrix;
pub mod ode;
pub mod quadrature;
pub mod tridiag;

pub use eigen::{eig_dense, eig_dense_with_limit, eig_hermitian, eigvals_dense, EigenPair};
pub use expm::expm;
pub use grid::Grid1D;
pub use laplacian::{build_laplacian, KineticStencil};
pub use matrix::ComplexMatrix;
pub use ode::rk4_step;
pub use quadrature::integrate_trapezoid;
