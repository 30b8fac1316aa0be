use std::cmp::Ordering;

use faer::Side;
use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_DIM: usize = 4096;

/// Relative residual bound every returned eigenpair must satisfy.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: Complex64,
    /// Unit Euclidean norm.
    pub vector: Vec<Complex64>,
    /// `||A v - lambda v||_2`.
    pub residual_norm: f64,
}

/// Real part ascending, ties broken by imaginary part ascending.
pub fn spectral_order(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

fn check_input(m: &ComplexMatrix, max_dim: usize) -> Result<()> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::InvalidParameter("empty matrix".into()));
    }
    if n > max_dim {
        return Err(Error::DimensionTooLarge {
            dim: n,
            max: max_dim,
        });
    }
    if !m.is_finite() {
        return Err(Error::InvalidParameter(
            "matrix has non-finite entries".into(),
        ));
    }
    Ok(())
}

/// All eigenpairs of a general complex matrix, sorted by [`spectral_order`].
pub fn eig_dense(m: &ComplexMatrix) -> Result<Vec<EigenPair>> {
    eig_dense_with_limit(m, DEFAULT_MAX_DIM)
}

pub fn eig_dense_with_limit(m: &ComplexMatrix, max_dim: usize) -> Result<Vec<EigenPair>> {
    check_input(m, max_dim)?;
    let evd = m
        .as_faer()
        .eigen()
        .map_err(|e| Error::NonConvergence(format!("{e:?}")))?;
    let values: Vec<Complex64> = (0..m.dim()).map(|j| evd.S()[j]).collect();
    finish_pairs(m, values, evd.U().to_owned())
}

/// Eigenpairs of a Hermitian matrix; only the lower triangle is read.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<Vec<EigenPair>> {
    check_input(m, DEFAULT_MAX_DIM)?;
    let evd = m
        .as_faer()
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::NonConvergence(format!("{e:?}")))?;
    let values: Vec<Complex64> = (0..m.dim()).map(|j| evd.S()[j]).collect();
    finish_pairs(m, values, evd.U().to_owned())
}

/// Eigenvalues only, sorted by [`spectral_order`].
pub fn eigvals_dense(m: &ComplexMatrix) -> Result<Vec<Complex64>> {
    check_input(m, DEFAULT_MAX_DIM)?;
    let mut values = m
        .as_faer()
        .eigenvalues()
        .map_err(|e| Error::NonConvergence(format!("{e:?}")))?;
    values.sort_by(spectral_order);
    Ok(values)
}

fn finish_pairs(
    m: &ComplexMatrix,
    values: Vec<Complex64>,
    mut vectors: faer::Mat<Complex64>,
) -> Result<Vec<EigenPair>> {
    let n = m.dim();
    for j in 0..n {
        let norm = vectors.col(j).norm_l2();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NonConvergence(format!(
                "eigenvector {j} has norm {norm}"
            )));
        }
        for i in 0..n {
            vectors[(i, j)] /= norm;
        }
    }
    let av = m.as_faer() * &vectors;
    let bound = RESIDUAL_TOLERANCE * m.frobenius_norm().max(f64::MIN_POSITIVE);
    let mut pairs = Vec::with_capacity(n);
    for (j, &value) in values.iter().enumerate() {
        let residual_norm = (0..n)
            .map(|i| (av[(i, j)] - value * vectors[(i, j)]).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if !(residual_norm <= bound) {
            return Err(Error::NonConvergence(format!(
                "eigenpair {j} residual {residual_norm:e} exceeds {bound:e}"
            )));
        }
        pairs.push(EigenPair {
            value,
            vector: vectors.col(j).iter().copied().collect(),
            residual_norm,
        });
    }
    pairs.sort_by(|a, b| spectral_order(&a.value, &b.value));
    Ok(pairs)
}
