use num_complex::Complex64;

use crate::error::{Error, Result};

/// Solves `T x = rhs` for tridiagonal `T` (Thomas algorithm, no pivoting).
///
/// `lower[i]` is `T[i+1][i]`, `upper[i]` is `T[i][i+1]`.
pub fn solve_tridiagonal(
    lower: &[Complex64],
    diag: &[Complex64],
    upper: &[Complex64],
    rhs: &[Complex64],
) -> Result<Vec<Complex64>> {
    let n = diag.len();
    if rhs.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: rhs.len(),
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if lower.len() + 1 != n || upper.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n - 1,
            got: lower.len().min(upper.len()),
        });
    }
    let mut c = vec![Complex64::new(0.0, 0.0); n];
    let mut d = vec![Complex64::new(0.0, 0.0); n];
    let mut pivot = diag[0];
    for i in 0..n {
        if i > 0 {
            pivot = diag[i] - lower[i - 1] * c[i - 1];
        }
        if pivot.norm() < 1e-300 {
            return Err(Error::NonConvergence(format!(
                "zero pivot in tridiagonal solve at row {i}"
            )));
        }
        if i + 1 < n {
            c[i] = upper[i] / pivot;
        }
        let prev = if i > 0 {
            lower[i - 1] * d[i - 1]
        } else {
            Complex64::new(0.0, 0.0)
        };
        d[i] = (rhs[i] - prev) / pivot;
    }
    for i in (0..n - 1).rev() {
        let next = d[i + 1];
        d[i] -= c[i] * next;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let lower = [c(1.0, 0.0), c(0.0, 1.0)];
        let diag = [c(4.0, 0.0), c(4.0, 1.0), c(3.0, 0.0)];
        let upper = [c(1.0, -1.0), c(2.0, 0.0)];
        let x = [c(1.0, 2.0), c(-1.0, 0.5), c(0.0, 3.0)];
        let rhs = [
            diag[0] * x[0] + upper[0] * x[1],
            lower[0] * x[0] + diag[1] * x[1] + upper[1] * x[2],
            lower[1] * x[1] + diag[2] * x[2],
        ];
        let got = solve_tridiagonal(&lower, &diag, &upper, &rhs).unwrap();
        for (g, e) in got.iter().zip(&x) {
            assert!((g - e).norm() < 1e-14);
        }
    }
}
