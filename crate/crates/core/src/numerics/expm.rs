//! Matrix exponential by scaling and squaring with a truncated Taylor series.

use num_complex::Complex64;

use super::matrix::{norm2, ComplexMatrix};
use crate::error::{Error, Result};

const SCALED_NORM_TARGET: f64 = 0.5;
const MAX_TERMS: usize = 40;

pub fn expm(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_finite() {
        return Err(Error::InvalidParameter(
            "matrix exponential of non-finite input".into(),
        ));
    }
    let n = a.dim();
    let norm = a.one_norm();
    let squarings = if norm > SCALED_NORM_TARGET {
        (norm / SCALED_NORM_TARGET).log2().ceil() as u32
    } else {
        0
    };
    let b = a.scale(Complex64::new(0.5f64.powi(squarings as i32), 0.0));

    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    let mut converged = false;
    for k in 1..=MAX_TERMS {
        term = term.matmul(&b).scale(Complex64::new(1.0 / k as f64, 0.0));
        sum = sum.add(&term);
        if term.one_norm() <= 1e-18 * sum.one_norm() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence(
            "Taylor series for the matrix exponential".into(),
        ));
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum);
    }
    if !sum.is_finite() {
        return Err(Error::NonConvergence(
            "matrix exponential overflowed".into(),
        ));
    }
    Ok(sum)
}

/// `exp(A) v` evaluated directly on the vector: `substeps` Taylor sweeps of `exp(A / substeps)`.
///
/// Independent of [`expm`]; used to check it.
pub fn expm_action_series(a: &ComplexMatrix, v: &[Complex64], substeps: usize) -> Vec<Complex64> {
    let inv = Complex64::new(1.0 / substeps as f64, 0.0);
    let mut x = v.to_vec();
    for _ in 0..substeps {
        let mut sum = x.clone();
        let mut term = x.clone();
        for k in 1..=200 {
            term = a
                .apply(&term)
                .into_iter()
                .map(|z| z * inv / k as f64)
                .collect();
            for (s, t) in sum.iter_mut().zip(&term) {
                *s += t;
            }
            if norm2(&term) <= 1e-20 * norm2(&sum) {
                break;
            }
        }
        x = sum;
    }
    x
}
