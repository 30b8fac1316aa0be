use std::ops::{Index, IndexMut, Mul};

use faer::Mat;
use num_complex::Complex64;

/// Dense square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix(Mat<Complex64>);

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        Self(Mat::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        Self(Mat::identity(n, n))
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self(Mat::from_fn(n, n, f))
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (j, &d) in diag.iter().enumerate() {
            m[(j, j)] = d;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "rows must form a square matrix"
        );
        Self::from_fn(n, |i, j| rows[i][j])
    }

    pub(crate) fn as_faer(&self) -> &Mat<Complex64> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.norm_l2()
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        (0..self.dim())
            .map(|j| self.0.col(j).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        let n = self.dim();
        (0..n).all(|j| {
            self.0
                .col(j)
                .iter()
                .all(|z| z.re.is_finite() && z.im.is_finite())
        })
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint().to_owned())
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose().to_owned())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let n = self.dim();
        Self::from_fn(n, |i, j| self[(i, j)] * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    pub fn matmul(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        assert_eq!(v.len(), n);
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for j in 0..n {
            let vj = v[j];
            if vj == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (i, a) in self.0.col(j).iter().enumerate() {
                out[i] += a * vj;
            }
        }
        out
    }

    /// Left-multiplies by `diag(d)`.
    pub fn scale_rows(&self, d: &[Complex64]) -> Self {
        let n = self.dim();
        assert_eq!(d.len(), n);
        Self::from_fn(n, |i, j| d[i] * self[(i, j)])
    }

    /// Right-multiplies by `diag(d)`.
    pub fn scale_cols(&self, d: &[Complex64]) -> Self {
        let n = self.dim();
        assert_eq!(d.len(), n);
        Self::from_fn(n, |i, j| self[(i, j)] * d[j])
    }

    /// `max |a_ij - conj(a_ji)|`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst: f64 = 0.0;
        for j in 0..n {
            for i in 0..=j {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `||M^H M - I||_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.dim();
        let g = self.adjoint().matmul(self);
        g.sub(&Self::identity(n)).frobenius_norm()
    }

    pub fn count_nonzero(&self) -> usize {
        let n = self.dim();
        (0..n)
            .flat_map(|j| (0..n).map(move |i| (i, j)))
            .filter(|&(i, j)| self[(i, j)] != Complex64::new(0.0, 0.0))
            .count()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[(i, j)]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[(i, j)]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: Self) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

pub fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn dot_conj(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}
