//! Quasi-energies of `i psi_t = (-1/2 psi_xx + W(x) cos(w t)) psi` from the truncated
//! harmonic expansion `psi = exp(-i eps t) sum_n u_n(x) exp(i n w t)`, `|n| <= N`.

use std::ops::RangeInclusive;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::effective::{Drive, PotentialSpec, BOUND_LOCALIZATION};
use crate::error::{Error, Result};
use crate::numerics::eigen::DEFAULT_MAX_DIM;
use crate::numerics::{build_laplacian, eig_dense, ComplexMatrix, Grid1D};

pub const DEFAULT_CUTOFF: usize = 2;

/// Scan threshold on `max |Im eps|` for calling a spectrum real.
pub const REALITY_THRESHOLD: f64 = 1e-3;

/// `|Im eps| <= BOUND_IMAG_FRACTION * w` for a bound entry.
pub const BOUND_IMAG_FRACTION: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct FloquetProblem {
    pub spec: PotentialSpec,
    pub grid: Grid1D,
    pub cutoff: usize,
}

impl FloquetProblem {
    pub fn new(spec: PotentialSpec, grid: Grid1D, cutoff: usize) -> Result<Self> {
        let p = Self { spec, grid, cutoff };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        self.spec.validate()?;
        if !matches!(self.spec.drive, Drive::Sinusoidal { .. }) {
            return Err(Error::InvalidParameter(
                "harmonic expansion needs a sinusoidal drive".into(),
            ));
        }
        if self.cutoff < 1 {
            return Err(Error::InvalidParameter(
                "harmonic cutoff must be at least 1".into(),
            ));
        }
        if self.dim() > DEFAULT_MAX_DIM {
            return Err(Error::DimensionTooLarge {
                dim: self.dim(),
                max: DEFAULT_MAX_DIM,
            });
        }
        Ok(())
    }

    pub fn omega(&self) -> f64 {
        self.spec.drive.omega()
    }

    pub fn harmonic_count(&self) -> usize {
        2 * self.cutoff + 1
    }

    pub fn dim(&self) -> usize {
        self.harmonic_count() * self.grid.points()
    }

    pub fn harmonics(&self) -> RangeInclusive<i64> {
        -(self.cutoff as i64)..=self.cutoff as i64
    }
}

/// Block matrix in harmonic order `n = -N..N`: `-1/2 d^2/dx^2 + n w` on the diagonal, `W / 2` between neighbours.
pub fn build_floquet_matrix(p: &FloquetProblem) -> Result<ComplexMatrix> {
    p.validate()?;
    let nx = p.grid.points();
    let kinetic = build_laplacian(&p.grid);
    let half_w: Vec<Complex64> = p.spec.w_on(&p.grid).into_iter().map(|w| w * 0.5).collect();
    let omega = p.omega();
    let mut m = ComplexMatrix::zeros(p.dim());
    for (b, n) in p.harmonics().enumerate() {
        let off = b * nx;
        for i in 0..nx {
            for j in i.saturating_sub(1)..(i + 2).min(nx) {
                m[(off + i, off + j)] = kinetic[(i, j)];
            }
            m[(off + i, off + i)] += n as f64 * omega;
            if b + 1 < p.harmonic_count() {
                m[(off + i, off + nx + i)] = half_w[i];
                m[(off + nx + i, off + i)] = half_w[i];
            }
        }
    }
    Ok(m)
}

/// Reduces `Re eps` into `(-w/2, w/2]`.
pub fn fold(eps: Complex64, omega: f64) -> Complex64 {
    let shift = (eps.re / omega - 0.5).ceil();
    let mut re = eps.re - shift * omega;
    if re <= -0.5 * omega {
        re += omega;
    } else if re > 0.5 * omega {
        re -= omega;
    }
    Complex64::new(re, eps.im)
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuasiEnergyEntry {
    pub epsilon: Complex64,
    pub epsilon_folded: Complex64,
    /// `u_n` for `n = -N..N`, jointly normalized to `sum_n ||u_n||^2 h = 1`.
    pub harmonics: Vec<Vec<Complex64>>,
    /// Share of the total weight carried by `|u_0|^2` inside `|x| <= L/2`.
    pub localization: f64,
    pub is_bound: bool,
}

impl QuasiEnergyEntry {
    pub fn zeroth(&self) -> &[Complex64] {
        &self.harmonics[self.harmonics.len() / 2]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuasiEnergySpectrum {
    pub omega: f64,
    pub cutoff: usize,
    pub matrix_norm: f64,
    /// Ascending real part of the unfolded quasi-energy.
    pub entries: Vec<QuasiEnergyEntry>,
}

impl QuasiEnergySpectrum {
    pub fn bound(&self) -> impl Iterator<Item = &QuasiEnergyEntry> {
        self.entries.iter().filter(|e| e.is_bound)
    }

    pub fn max_abs_im(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.epsilon.im.abs())
            .fold(0.0, f64::max)
    }
}

fn make_entry(p: &FloquetProblem, epsilon: Complex64, vector: &[Complex64]) -> QuasiEnergyEntry {
    let nx = p.grid.points();
    let h = p.grid.spacing();
    let mid = p.cutoff;
    let u0 = &vector[mid * nx..(mid + 1) * nx];
    let peak = u0
        .iter()
        .copied()
        .max_by(|a, b| a.norm_sqr().total_cmp(&b.norm_sqr()))
        .unwrap_or(Complex64::new(1.0, 0.0));
    let total: f64 = vector.iter().map(|z| z.norm_sqr()).sum();
    let phase = if peak.norm() > 0.0 {
        peak.conj() / peak.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    let scale = phase / (total * h).sqrt();
    let harmonics: Vec<Vec<Complex64>> = vector
        .chunks(nx)
        .map(|c| c.iter().map(|z| z * scale).collect())
        .collect();
    let inner = p.grid.central_fraction(u0, |z| z.norm_sqr())
        * u0.iter().map(|z| z.norm_sqr()).sum::<f64>();
    let localization = if total > 0.0 { inner / total } else { 0.0 };
    let omega = p.omega();
    let is_bound = epsilon.im.abs() <= BOUND_IMAG_FRACTION * omega
        && epsilon.re < 0.0
        && localization > BOUND_LOCALIZATION;
    QuasiEnergyEntry {
        epsilon,
        epsilon_folded: fold(epsilon, omega),
        harmonics,
        localization,
        is_bound,
    }
}

/// Full diagonalization of the truncated block matrix.
pub fn solve_spectrum(p: &FloquetProblem) -> Result<QuasiEnergySpectrum> {
    let m = build_floquet_matrix(p)?;
    let pairs = eig_dense(&m)?;
    let entries = pairs
        .iter()
        .map(|pair| make_entry(p, pair.value, &pair.vector))
        .collect();
    Ok(QuasiEnergySpectrum {
        omega: p.omega(),
        cutoff: p.cutoff,
        matrix_norm: m.frobenius_norm(),
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub omega: f64,
    pub max_abs_im: f64,
    pub bound_count: usize,
    pub matrix_norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionScan {
    pub points: Vec<ScanPoint>,
    /// Smallest scanned `w` from which every spectrum stays below [`REALITY_THRESHOLD`].
    pub omega_th: f64,
}

/// `w_lo, w_lo + step, ...` up to `w_hi` (inclusive within a small tolerance).
pub fn omega_grid(omega_lo: f64, omega_hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(omega_lo > 0.0 && step > 0.0 && omega_hi >= omega_lo && omega_hi.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "scan needs 0 < omega_lo <= omega_hi and step > 0, got [{omega_lo}, {omega_hi}] step {step}"
        )));
    }
    let count = ((omega_hi - omega_lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| omega_lo + k as f64 * step).collect())
}

/// Per-frequency diagnostics in ascending `w`; the spectra are solved in parallel.
pub fn scan_points(
    spec: &PotentialSpec,
    grid: &Grid1D,
    cutoff: usize,
    omegas: &[f64],
) -> Result<Vec<ScanPoint>> {
    omegas
        .par_iter()
        .map(|&omega| {
            let p = FloquetProblem::new(
                spec.with_drive(Drive::Sinusoidal { omega }),
                grid.clone(),
                cutoff,
            )?;
            let s = solve_spectrum(&p)?;
            Ok(ScanPoint {
                omega,
                max_abs_im: s.max_abs_im(),
                bound_count: s.bound().count(),
                matrix_norm: s.matrix_norm,
            })
        })
        .collect()
}

/// Persistence rule: the threshold is the first point of the trailing run below [`REALITY_THRESHOLD`].
pub fn threshold_frequency(points: &[ScanPoint]) -> Result<f64> {
    let start = points
        .iter()
        .rposition(|pt| pt.max_abs_im > REALITY_THRESHOLD)
        .map_or(0, |k| k + 1);
    points
        .get(start)
        .map(|pt| pt.omega)
        .ok_or(Error::NoTransitionFound)
}

pub fn scan_transition(
    spec: &PotentialSpec,
    grid: &Grid1D,
    cutoff: usize,
    omega_range: [f64; 2],
    step: f64,
) -> Result<TransitionScan> {
    let omegas = omega_grid(omega_range[0], omega_range[1], step)?;
    let points = scan_points(spec, grid, cutoff, &omegas)?;
    let omega_th = threshold_frequency(&points)?;
    Ok(TransitionScan { points, omega_th })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::eigvals_dense;
    use crate::numerics::laplacian::KineticStencil;
    use crate::Kind;
    use proptest::prelude::*;

    fn problem(
        v0: f64,
        beta: f64,
        kind: Kind,
        omega: f64,
        grid: Grid1D,
        cutoff: usize,
    ) -> FloquetProblem {
        FloquetProblem::new(
            PotentialSpec::sinusoidal(v0, beta, kind, omega).unwrap(),
            grid,
            cutoff,
        )
        .unwrap()
    }

    /// A narrow, strong profile whose effective well binds on a small box.
    fn compact(kind: Kind, cutoff: usize) -> FloquetProblem {
        problem(
            9.0,
            0.5,
            kind,
            10.0,
            Grid1D::new(20.0, 161).unwrap(),
            cutoff,
        )
    }

    #[test]
    fn fold_examples() {
        assert!((fold(Complex64::new(7.3, 0.0), 10.0) - Complex64::new(-2.7, 0.0)).norm() < 1e-12);
        assert_eq!(
            fold(Complex64::new(-5.0, 0.0), 10.0),
            Complex64::new(5.0, 0.0)
        );
        assert_eq!(
            fold(Complex64::new(5.0, 1.0), 10.0),
            Complex64::new(5.0, 1.0)
        );
        assert_eq!(
            fold(Complex64::new(0.2, 0.3), 10.0),
            Complex64::new(0.2, 0.3)
        );
        assert!(
            (fold(Complex64::new(-23.0, -1.0), 10.0) - Complex64::new(-3.0, -1.0)).norm() < 1e-12
        );
    }

    #[test]
    fn coupling_structure() {
        let p = problem(
            2.0,
            0.3,
            Kind::Imaginary,
            4.0,
            Grid1D::new(1.0, 3).unwrap(),
            1,
        );
        let m = build_floquet_matrix(&p).unwrap();
        assert_eq!(m.dim(), 9);
        let mut couplings = 0;
        for i in 0..9 {
            for j in 0..9 {
                if i / 3 != j / 3 && m[(i, j)].norm() > 0.0 {
                    couplings += 1;
                    assert_eq!(i % 3, j % 3);
                    assert_eq!((i / 3).abs_diff(j / 3), 1);
                    assert_eq!(m[(i, j)], p.spec.w(p.grid.node(i % 3)) * 0.5);
                }
            }
        }
        assert_eq!(couplings, 12);
        assert_eq!(m[(0, 0)], Complex64::new(1.0 - 4.0, 0.0));
        assert_eq!(m[(4, 4)], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn real_profile_gives_hermitian_matrix() {
        let p = problem(3.7, 0.11, Kind::Real, 6.3, Grid1D::new(7.0, 41).unwrap(), 2);
        assert_eq!(build_floquet_matrix(&p).unwrap().hermitian_defect(), 0.0);
        let q = problem(
            3.7,
            0.11,
            Kind::Imaginary,
            6.3,
            Grid1D::new(7.0, 41).unwrap(),
            2,
        );
        assert!(build_floquet_matrix(&q).unwrap().hermitian_defect() > 1.0);
    }

    #[test]
    fn undriven_spectrum_is_shifted_box_levels() {
        let grid = Grid1D::new(10.0, 31).unwrap();
        let p = problem(0.0, 0.02, Kind::Imaginary, 10.0, grid.clone(), 2);
        let s = solve_spectrum(&p).unwrap();
        let mut expected: Vec<f64> = KineticStencil::new(&grid)
            .eigenvalues()
            .into_iter()
            .flat_map(|e| (-2..=2).map(move |n| e + n as f64 * 10.0))
            .collect();
        expected.sort_by(f64::total_cmp);
        for (e, x) in s.entries.iter().zip(&expected) {
            assert!((e.epsilon.re - x).abs() < 1e-10 && e.epsilon.im.abs() < 1e-10);
        }
        assert_eq!(s.bound().count(), 0);
        for e in &s.entries {
            assert!(e.epsilon_folded.re > -5.0 && e.epsilon_folded.re <= 5.0);
            assert_eq!(e.epsilon_folded.im, e.epsilon.im);
        }
    }

    #[test]
    fn real_profile_has_real_spectrum_and_no_bound_state() {
        let s = solve_spectrum(&compact(Kind::Real, 2)).unwrap();
        assert!(s.max_abs_im() <= 1e-9 * s.omega);
        assert!(s.max_abs_im() <= 1e-9 * s.matrix_norm);
        assert_eq!(s.bound().count(), 0);
        assert_eq!(s.entries.len(), 5 * 161);
    }

    #[test]
    fn imaginary_profile_binds_one_state_with_definite_parity() {
        let p = compact(Kind::Imaginary, 2);
        let s = solve_spectrum(&p).unwrap();
        let bound: Vec<_> = s.bound().collect();
        assert_eq!(
            bound.len(),
            1,
            "{:?}",
            bound.iter().map(|e| e.epsilon).collect::<Vec<_>>()
        );
        let e = bound[0];
        assert!(e.epsilon.re < 0.0 && e.epsilon.re > -0.1);
        let norm: f64 = e
            .harmonics
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            * p.grid.spacing();
        assert!((norm - 1.0).abs() < 1e-10);
        for u in &e.harmonics {
            let nx = u.len();
            let even: f64 = (0..nx)
                .map(|j| (u[j] - u[nx - 1 - j]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            let odd: f64 = (0..nx)
                .map(|j| (u[j] + u[nx - 1 - j]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(even.min(odd) <= 1e-6, "parity defect {}", even.min(odd));
        }
    }

    #[test]
    fn bound_state_is_stable_under_cutoff_increase() {
        let e2 = solve_spectrum(&compact(Kind::Imaginary, 2))
            .unwrap()
            .bound()
            .next()
            .unwrap()
            .epsilon_folded;
        let e3 = solve_spectrum(&compact(Kind::Imaginary, 3))
            .unwrap()
            .bound()
            .next()
            .unwrap()
            .epsilon_folded;
        assert!((e3 - e2).norm() < 0.1 * e2.norm(), "{e2} vs {e3}");
    }

    #[test]
    fn threshold_uses_the_trailing_run() {
        let pt = |omega: f64, max_abs_im: f64| ScanPoint {
            omega,
            max_abs_im,
            bound_count: 0,
            matrix_norm: 1.0,
        };
        let pts = [
            pt(1.0, 1.0),
            pt(2.0, 1e-4),
            pt(3.0, 5e-3),
            pt(4.0, 1e-3),
            pt(5.0, 0.0),
        ];
        assert_eq!(threshold_frequency(&pts), Ok(4.0));
        assert_eq!(
            threshold_frequency(&pts[..3]),
            Err(Error::NoTransitionFound)
        );
        assert_eq!(threshold_frequency(&pts[1..2]), Ok(2.0));
        assert_eq!(omega_grid(2.0, 14.0, 0.25).unwrap().len(), 49);
        assert!(omega_grid(2.0, 14.0, 0.0).is_err());
    }

    #[test]
    fn real_and_vanishing_profiles_are_real_from_the_start() {
        let grid = Grid1D::new(10.0, 41).unwrap();
        for spec in [
            PotentialSpec::sinusoidal(9.0, 0.3, Kind::Real, 1.0).unwrap(),
            PotentialSpec::sinusoidal(1e-6, 0.3, Kind::Imaginary, 1.0).unwrap(),
        ] {
            let scan = scan_transition(&spec, &grid, 2, [2.0, 5.0], 1.0).unwrap();
            assert_eq!(scan.omega_th, 2.0);
            assert_eq!(scan.points.len(), 4);
            assert!(scan.points.windows(2).all(|w| w[0].omega < w[1].omega));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]

        #[test]
        fn imaginary_spectrum_is_closed_under_conjugation(
            v0 in 0.5f64..12.0, beta in 0.05f64..1.0, omega in 1.0f64..12.0,
        ) {
            let p = problem(v0, beta, Kind::Imaginary, omega, Grid1D::new(8.0, 25).unwrap(), 2);
            let values = eigvals_dense(&build_floquet_matrix(&p).unwrap()).unwrap();
            let mut used = vec![false; values.len()];
            for v in &values {
                let target = v.conj();
                let k = (0..values.len())
                    .filter(|&k| !used[k])
                    .min_by(|&a, &b| (values[a] - target).norm().total_cmp(&(values[b] - target).norm()))
                    .unwrap();
                prop_assert!((values[k] - target).norm() <= 1e-8, "{} has no partner", v);
                used[k] = true;
            }
        }
    }
}
