//! Time-domain evolution and one-period propagators.
//!
//! For a square-wave drive the period map is exactly
//! `U = exp(-i H2 T/2) exp(-i H1 T/2)` with `H1,2 = -1/2 d^2/dx^2 +- W`, and its
//! eigenvalues are `exp(-i eps T)`. For a sinusoidal drive the period map is
//! composed from Crank-Nicolson steps.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::effective::{normalize_with_phase, Drive, PotentialSpec, BOUND_LOCALIZATION};
use crate::error::{Error, Result};
use crate::floquet::{fold, BOUND_IMAG_FRACTION};
use crate::numerics::laplacian::KineticStencil;
use crate::numerics::tridiag::solve_tridiagonal;
use crate::numerics::{build_laplacian, eig_dense, expm, ComplexMatrix, Grid1D};

/// Norms above this abort an evolution.
pub const NORM_DIVERGENCE_BOUND: f64 = 1e6;

/// Smallest allowed number of steps per drive period.
pub const MIN_STEPS_PER_PERIOD: f64 = 200.0;

/// Eigenvalues below this modulus have no usable logarithm.
pub const EIGENVALUE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Monodromy {
    pub u: ComplexMatrix,
    pub period: f64,
}

/// `exp(-i h T / 2)`.
pub fn half_period_propagator(h: &ComplexMatrix, period: f64) -> Result<ComplexMatrix> {
    if !(period > 0.0 && period.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "period must be positive, got {period}"
        )));
    }
    expm(&h.scale(Complex64::new(0.0, -0.5 * period)))
}

fn shifted_hamiltonian(grid: &Grid1D, potential: &[Complex64], sign: f64) -> ComplexMatrix {
    let mut h = build_laplacian(grid);
    for (j, &w) in potential.iter().enumerate() {
        h[(j, j)] += w * sign;
    }
    h
}

pub fn monodromy_square_wave(spec: &PotentialSpec, grid: &Grid1D) -> Result<Monodromy> {
    spec.validate()?;
    let Drive::SquareWave { period } = spec.drive else {
        return Err(Error::InvalidParameter(
            "the two-factor monodromy needs a square-wave drive".into(),
        ));
    };
    let w = spec.w_on(grid);
    let first = half_period_propagator(&shifted_hamiltonian(grid, &w, 1.0), period)?;
    let second = half_period_propagator(&shifted_hamiltonian(grid, &w, -1.0), period)?;
    Ok(Monodromy {
        u: second.matmul(&first),
        period,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonodromyMode {
    pub eigenvalue: Complex64,
    /// `i ln(lambda) / T`, principal branch, folded into `(-w/2, w/2]`.
    pub epsilon: Complex64,
    /// Unit norm with the grid measure; largest component real positive.
    pub wavefunction: Vec<Complex64>,
    pub localization: f64,
    pub is_bound: bool,
}

/// Eigen-decomposes the period map; modes are ordered by ascending `Re eps`.
pub fn quasi_energies_from_monodromy(m: &Monodromy, grid: &Grid1D) -> Result<Vec<MonodromyMode>> {
    if m.u.dim() != grid.points() {
        return Err(Error::LengthMismatch {
            expected: grid.points(),
            got: m.u.dim(),
        });
    }
    let omega = 2.0 * PI / m.period;
    let pairs = eig_dense(&m.u)?;
    let mut modes = Vec::with_capacity(pairs.len());
    for (index, pair) in pairs.into_iter().enumerate() {
        let modulus = pair.value.norm();
        if modulus < EIGENVALUE_FLOOR {
            return Err(Error::EigenvalueAtZero { index, modulus });
        }
        let epsilon = fold(Complex64::new(0.0, 1.0) * pair.value.ln() / m.period, omega);
        let localization = grid.central_fraction(&pair.vector, |z| z.norm_sqr());
        modes.push(MonodromyMode {
            eigenvalue: pair.value,
            epsilon,
            wavefunction: normalize_with_phase(&pair.vector, grid),
            localization,
            is_bound: epsilon.im.abs() <= BOUND_IMAG_FRACTION * omega
                && epsilon.re < 0.0
                && localization > BOUND_LOCALIZATION,
        });
    }
    modes.sort_by(|a, b| {
        a.epsilon
            .re
            .total_cmp(&b.epsilon.re)
            .then(a.epsilon.im.total_cmp(&b.epsilon.im))
    });
    Ok(modes)
}

/// Index and magnitude of the largest normalized overlap `|<reference|mode>|`.
pub fn best_overlap(
    modes: &[MonodromyMode],
    reference: &[Complex64],
    grid: &Grid1D,
) -> Option<(usize, f64)> {
    let h = grid.spacing();
    let rn = (reference.iter().map(|z| z.norm_sqr()).sum::<f64>() * h).sqrt();
    modes
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let o: Complex64 = reference
                .iter()
                .zip(&m.wavefunction)
                .map(|(a, b)| a.conj() * b)
                .sum::<Complex64>()
                * h;
            (k, o.norm() / rn)
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
}

/// Value of the time profile multiplying `W(x)` at time `t`.
pub fn drive_factor(drive: &Drive, t: f64) -> f64 {
    match *drive {
        Drive::Sinusoidal { omega } => (omega * t).cos(),
        Drive::SquareWave { period } => {
            if (t / period).rem_euclid(1.0) < 0.5 {
                1.0
            } else {
                -1.0
            }
        }
    }
}

/// Crank-Nicolson stepper with the potential frozen at the midpoint of each step.
struct CrankNicolson {
    stencil: KineticStencil,
    w: Vec<Complex64>,
    drive: Drive,
    dt: f64,
}

impl CrankNicolson {
    fn new(spec: &PotentialSpec, grid: &Grid1D, dt: f64) -> Self {
        Self {
            stencil: KineticStencil::new(grid),
            w: spec.w_on(grid),
            drive: spec.drive,
            dt,
        }
    }

    /// `(1 + i dt/2 H) psi' = (1 - i dt/2 H) psi` with `H = H(t + dt/2)`.
    fn step(&self, psi: &[Complex64], t: f64) -> Result<Vec<Complex64>> {
        let n = psi.len();
        let f = drive_factor(&self.drive, t + 0.5 * self.dt);
        let a = Complex64::new(0.0, 0.5 * self.dt);
        let hpsi: Vec<Complex64> = self
            .stencil
            .apply(psi)
            .into_iter()
            .zip(psi.iter().zip(&self.w))
            .map(|(k, (p, w))| k + w * f * p)
            .collect();
        let rhs: Vec<Complex64> = psi.iter().zip(&hpsi).map(|(p, hp)| p - a * hp).collect();
        let off = vec![a * self.stencil.off_diagonal; n - 1];
        let diag: Vec<Complex64> = self
            .w
            .iter()
            .map(|w| 1.0 + a * (self.stencil.diagonal + w * f))
            .collect();
        solve_tridiagonal(&off, &diag, &off, &rhs)
    }
}

/// Whole number of steps per period, at least [`MIN_STEPS_PER_PERIOD`].
fn steps_per_period(period: f64, dt: f64) -> Result<usize> {
    let ratio = period / dt;
    let steps = ratio.round();
    if !(dt > 0.0)
        || ratio < MIN_STEPS_PER_PERIOD * (1.0 - 1e-12)
        || (ratio - steps).abs() > 1e-6 * ratio
    {
        return Err(Error::InvalidParameter(format!(
            "dt = {dt} must divide the period {period} into at least {MIN_STEPS_PER_PERIOD} steps"
        )));
    }
    Ok(steps as usize)
}

/// One-period map built column by column from Crank-Nicolson steps.
pub fn crank_nicolson_monodromy(
    spec: &PotentialSpec,
    grid: &Grid1D,
    steps: usize,
) -> Result<Monodromy> {
    spec.validate()?;
    let period = spec.drive.period();
    let dt = period / steps as f64;
    steps_per_period(period, dt)?;
    let cn = CrankNicolson::new(spec, grid, dt);
    let n = grid.points();
    let mut u = ComplexMatrix::zeros(n);
    for col in 0..n {
        let mut psi = vec![Complex64::new(0.0, 0.0); n];
        psi[col] = Complex64::new(1.0, 0.0);
        for k in 0..steps {
            psi = cn.step(&psi, k as f64 * dt)?;
        }
        for (row, z) in psi.into_iter().enumerate() {
            u[(row, col)] = z;
        }
    }
    Ok(Monodromy { u, period })
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionTrace {
    /// Whole periods `0, T, 2T, ...`.
    pub times: Vec<f64>,
    pub snapshots: Vec<Vec<Complex64>>,
    /// `<psi0|psi(t)>` with `psi0` normalized.
    pub survival: Vec<Complex64>,
    pub norms: Vec<f64>,
}

fn grid_norm(v: &[Complex64], h: f64) -> f64 {
    (v.iter().map(|z| z.norm_sqr()).sum::<f64>() * h).sqrt()
}

/// Crank-Nicolson evolution of the driven equation from the normalized `psi0`.
///
/// `dt` must divide the drive period into at least 200 steps; snapshots are taken once per period.
pub fn evolve(
    spec: &PotentialSpec,
    grid: &Grid1D,
    psi0: &[Complex64],
    t_end: f64,
    dt: f64,
) -> Result<EvolutionTrace> {
    spec.validate()?;
    if psi0.len() != grid.points() {
        return Err(Error::LengthMismatch {
            expected: grid.points(),
            got: psi0.len(),
        });
    }
    if !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "t_end must be non-negative, got {t_end}"
        )));
    }
    let period = spec.drive.period();
    let per = steps_per_period(period, dt)?;
    let h = grid.spacing();
    let n0 = grid_norm(psi0, h);
    if !(n0 > 0.0 && n0.is_finite()) {
        return Err(Error::InvalidParameter(
            "initial state has zero or non-finite norm".into(),
        ));
    }
    let reference: Vec<Complex64> = psi0.iter().map(|z| z / n0).collect();
    let survival_of = |psi: &[Complex64]| -> Complex64 {
        reference
            .iter()
            .zip(psi)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            * h
    };

    let cn = CrankNicolson::new(spec, grid, dt);
    let total = (t_end / dt).round() as usize;
    let mut psi = reference.clone();
    let mut trace = EvolutionTrace {
        times: vec![0.0],
        snapshots: vec![psi.clone()],
        survival: vec![survival_of(&psi)],
        norms: vec![1.0],
    };
    for k in 0..total {
        let t = k as f64 * dt;
        psi = cn.step(&psi, t)?;
        let norm = grid_norm(&psi, h);
        if !(norm <= NORM_DIVERGENCE_BOUND) {
            return Err(Error::DivergedNorm { t: t + dt, norm });
        }
        if (k + 1) % per == 0 {
            trace.times.push(((k + 1) / per) as f64 * period);
            trace.survival.push(survival_of(&psi));
            trace.norms.push(norm);
            trace.snapshots.push(psi.clone());
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effective::{
        bound_states_static, delta_approximation, veff_sinusoidal, veff_square_wave,
    };
    use crate::effective::{gauge_transform, GaugeDirection};
    use crate::numerics::expm::expm_action_series;
    use crate::numerics::matrix::norm2;
    use crate::Kind;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn gaussian(grid: &Grid1D, center: f64, width: f64, k0: f64) -> Vec<Complex64> {
        grid.nodes()
            .into_iter()
            .map(|x| {
                (-(x - center).powi(2) / (2.0 * width * width)).exp()
                    * Complex64::from_polar(1.0, k0 * x)
            })
            .collect()
    }

    #[test]
    fn half_period_examples() {
        assert_eq!(
            half_period_propagator(&ComplexMatrix::zeros(3), 1.0).unwrap(),
            ComplexMatrix::identity(3)
        );
        let h = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(2.0, 0.0)]);
        let u = half_period_propagator(&h, PI).unwrap();
        assert!((u[(0, 0)] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((u[(1, 1)] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!(half_period_propagator(&h, 0.0).is_err());
    }

    #[test]
    fn hermitian_exponential_is_unitary_and_accurate() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 30;
        let b = ComplexMatrix::from_fn(n, |_, _| {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let h = b.add(&b.adjoint());
        let u = half_period_propagator(&h, 0.7).unwrap();
        assert!(u.unitarity_defect() <= 1e-9);
        let v: Vec<Complex64> = (0..n).map(|_| c(rng.gen_range(-1.0..1.0), 0.0)).collect();
        let series = expm_action_series(&h.scale(c(0.0, -0.35)), &v, 64);
        let diff: Vec<Complex64> = u
            .apply(&v)
            .iter()
            .zip(&series)
            .map(|(a, b)| a - b)
            .collect();
        assert!(norm2(&diff) <= 1e-9 * norm2(&v));
    }

    #[test]
    fn undriven_monodromy_is_the_free_propagator() {
        let grid = Grid1D::new(5.0, 41).unwrap();
        let spec = PotentialSpec::square_wave(0.0, 1.0, Kind::Real, 0.4).unwrap();
        let m = monodromy_square_wave(&spec, &grid).unwrap();
        let free = expm(&build_laplacian(&grid).scale(c(0.0, -0.4))).unwrap();
        assert!(m.u.sub(&free).frobenius_norm() < 1e-12);
    }

    #[test]
    fn monodromy_unitarity_and_determinant() {
        let grid = Grid1D::new(10.0, 101).unwrap();
        let real = PotentialSpec::square_wave(9.0, 0.3, Kind::Real, 0.6).unwrap();
        let m = monodromy_square_wave(&real, &grid).unwrap();
        assert!(m.u.unitarity_defect() <= 1e-8 * (grid.points() as f64).sqrt());
        for mode in quasi_energies_from_monodromy(&m, &grid).unwrap() {
            assert!((mode.eigenvalue.norm() - 1.0).abs() < 1e-8);
        }

        let imag = PotentialSpec::square_wave(9.0, 0.3, Kind::Imaginary, 0.6).unwrap();
        let m = monodromy_square_wave(&imag, &grid).unwrap();
        let log_det: f64 = quasi_energies_from_monodromy(&m, &grid)
            .unwrap()
            .iter()
            .map(|mode| mode.eigenvalue.norm().ln())
            .sum();
        assert!(log_det.abs() < 1e-6, "ln |det U| = {log_det}");
    }

    #[test]
    fn quasi_energy_from_eigenvalue() {
        let period = 2.0 * PI / 10.0;
        let grid = Grid1D::new(1.0, 3).unwrap();
        let m = Monodromy {
            u: ComplexMatrix::from_diagonal(&[
                c(1.0, 0.0),
                Complex64::from_polar(1.0, -0.3),
                c(-1.0, 0.0),
            ]),
            period,
        };
        let modes = quasi_energies_from_monodromy(&m, &grid).unwrap();
        let eps: Vec<f64> = modes.iter().map(|m| m.epsilon.re).collect();
        assert!(eps[0].abs() < 1e-15);
        assert!((eps[1] - 0.3 / period).abs() < 1e-12 && (0.3 / period - 0.4775).abs() < 1e-4);
        assert!((eps[2] - 5.0).abs() < 1e-12);

        let singular = Monodromy {
            u: ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]),
            period,
        };
        assert!(matches!(
            quasi_energies_from_monodromy(&singular, &grid),
            Err(Error::EigenvalueAtZero { .. })
        ));
    }

    #[test]
    fn monodromy_modes_lie_in_the_zone() {
        let grid = Grid1D::new(10.0, 81).unwrap();
        let spec = PotentialSpec::square_wave(9.0, 0.3, Kind::Imaginary, 2.0 * PI / 10.0).unwrap();
        let modes =
            quasi_energies_from_monodromy(&monodromy_square_wave(&spec, &grid).unwrap(), &grid)
                .unwrap();
        for m in &modes {
            assert!(m.epsilon.re > -5.0 && m.epsilon.re <= 5.0);
            assert!((fold(m.epsilon, 10.0) - m.epsilon).norm() == 0.0);
        }
    }

    #[test]
    fn free_wavepacket_keeps_its_norm() {
        let grid = Grid1D::new(40.0, 401).unwrap();
        let spec = PotentialSpec::sinusoidal(0.0, 0.02, Kind::Real, 10.0).unwrap();
        let psi0 = gaussian(&grid, 0.0, 3.0, 0.5);
        let period = 2.0 * PI / 10.0;
        let trace = evolve(&spec, &grid, &psi0, 100.0 * period, period / 200.0).unwrap();
        assert_eq!(trace.times.len(), 101);
        assert!(trace.norms.iter().all(|n| (n - 1.0).abs() < 1e-8));
        assert!(trace.times.windows(2).all(|w| w[0] < w[1]));
        assert!((trace.survival[0] - 1.0).norm() < 1e-12);
    }

    #[test]
    fn real_drive_conserves_norm() {
        let grid = Grid1D::new(40.0, 401).unwrap();
        let spec = PotentialSpec::sinusoidal(9.0, 0.02, Kind::Real, 10.0).unwrap();
        let psi0 = gaussian(&grid, 0.0, 4.0, 0.0);
        let period = spec.drive.period();
        let trace = evolve(&spec, &grid, &psi0, 100.0 * period, period / 200.0).unwrap();
        assert!(trace.norms.iter().all(|n| (n - 1.0).abs() <= 1e-6));
    }

    #[test]
    fn coarse_or_incommensurate_steps_are_rejected() {
        let grid = Grid1D::new(5.0, 21).unwrap();
        let spec = PotentialSpec::sinusoidal(1.0, 1.0, Kind::Real, 10.0).unwrap();
        let psi0 = gaussian(&grid, 0.0, 1.0, 0.0);
        let period = spec.drive.period();
        assert!(evolve(&spec, &grid, &psi0, 1.0, period / 100.0).is_err());
        assert!(evolve(&spec, &grid, &psi0, 1.0, period / 200.5).is_err());
        assert!(evolve(&spec, &grid, &psi0[1..], 1.0, period / 200.0).is_err());
    }

    #[test]
    fn strong_gain_is_reported_as_divergence() {
        let grid = Grid1D::new(5.0, 51).unwrap();
        let spec = PotentialSpec::sinusoidal(400.0, 1.0, Kind::Imaginary, 0.5).unwrap();
        let psi0 = gaussian(&grid, 0.5, 1.0, 0.0);
        let period = spec.drive.period();
        let r = evolve(&spec, &grid, &psi0, 10.0 * period, period / 200.0);
        assert!(matches!(r, Err(Error::DivergedNorm { .. })), "{r:?}");
    }

    #[test]
    fn exact_monodromy_matches_stepped_square_wave() {
        let grid = Grid1D::new(40.0, 401).unwrap();
        let period = 2.0 * PI / 10.0;
        for kind in [Kind::Real, Kind::Imaginary] {
            let spec = PotentialSpec::square_wave(9.0, 0.02, kind, period).unwrap();
            let psi0 = normalize_with_phase(&gaussian(&grid, 1.0, 3.0, 0.3), &grid);
            let exact = monodromy_square_wave(&spec, &grid).unwrap().u.apply(&psi0);
            let trace = evolve(&spec, &grid, &psi0, period, period / 500.0).unwrap();
            let diff: Vec<Complex64> = exact
                .iter()
                .zip(&trace.snapshots[1])
                .map(|(a, b)| a - b)
                .collect();
            let l2 = norm2(&diff) * grid.spacing().sqrt();
            assert!(l2 <= 1e-4, "{kind:?}: {l2}");
        }
    }

    #[test]
    fn stepped_and_composed_period_maps_agree() {
        let grid = Grid1D::new(8.0, 41).unwrap();
        let spec = PotentialSpec::sinusoidal(3.0, 0.5, Kind::Imaginary, 6.0).unwrap();
        let period = spec.drive.period();
        let m = crank_nicolson_monodromy(&spec, &grid, 400).unwrap();
        let psi0 = gaussian(&grid, 0.3, 1.5, 0.0);
        let trace = evolve(&spec, &grid, &psi0, period, period / 400.0).unwrap();
        let n0 = norm2(&psi0) * grid.spacing().sqrt();
        let via_matrix: Vec<Complex64> = m.u.apply(&psi0).iter().map(|z| z / n0).collect();
        let diff: Vec<Complex64> = via_matrix
            .iter()
            .zip(&trace.snapshots[1])
            .map(|(a, b)| a - b)
            .collect();
        assert!(norm2(&diff) < 1e-12);
    }

    #[test]
    fn sinusoidal_period_map_reproduces_the_floquet_bound_state() {
        let grid = Grid1D::new(20.0, 161).unwrap();
        let spec = PotentialSpec::sinusoidal(9.0, 0.5, Kind::Imaginary, 10.0).unwrap();
        let floquet = crate::floquet::solve_spectrum(
            &crate::floquet::FloquetProblem::new(spec, grid.clone(), 3).unwrap(),
        )
        .unwrap();
        let target = floquet.bound().next().unwrap().epsilon_folded;
        let m = crank_nicolson_monodromy(&spec, &grid, 800).unwrap();
        let modes = quasi_energies_from_monodromy(&m, &grid).unwrap();
        let bound: Vec<_> = modes.iter().filter(|m| m.is_bound).collect();
        assert_eq!(bound.len(), 1);
        assert!(
            (bound[0].epsilon - target).norm() < 0.05 * target.norm(),
            "{} vs {target}",
            bound[0].epsilon
        );
    }

    #[test]
    fn imaginary_drive_sustains_the_delta_profile() {
        let grid = Grid1D::new(40.0, 401).unwrap();
        let imag = PotentialSpec::sinusoidal(9.0, 0.02, Kind::Imaginary, 10.0).unwrap();
        let well = delta_approximation(&veff_sinusoidal(&imag, &grid).unwrap()).unwrap();
        let psi0: Vec<Complex64> = well.profile(&grid).into_iter().map(|v| c(v, 0.0)).collect();
        let period = imag.drive.period();
        let trace = evolve(&imag, &grid, &psi0, 200.0 * period, period / 200.0).unwrap();
        // Regression floor from the calibration run (0.98523 at 50 periods).
        let at50 = trace.survival[50].norm();
        assert!(at50 >= 0.98, "|s(50T)| = {at50}");

        let real = PotentialSpec {
            kind: Kind::Real,
            ..imag
        };
        let leaky = evolve(&real, &grid, &psi0, 200.0 * period, period / 200.0).unwrap();
        let (si, sr) = (trace.survival[200].norm(), leaky.survival[200].norm());
        assert!(sr < si - 0.01, "real {sr} vs imaginary {si}");
    }

    #[test]
    fn square_wave_monodromy_tracks_the_effective_well() {
        let grid = Grid1D::new(40.0, 401).unwrap();
        let period = 2.0 * PI / 10.0;
        let spec = PotentialSpec::square_wave(9.0, 0.02, Kind::Imaginary, period).unwrap();
        let veff = veff_square_wave(&spec, &grid).unwrap();
        let ground = &bound_states_static(&veff).unwrap()[0];
        let reference =
            gauge_transform(&ground.wavefunction, &spec, &grid, GaugeDirection::Inverse).unwrap();
        let modes =
            quasi_energies_from_monodromy(&monodromy_square_wave(&spec, &grid).unwrap(), &grid)
                .unwrap();
        let bound: Vec<_> = modes.iter().filter(|m| m.is_bound).collect();
        assert_eq!(bound.len(), 1);
        let (k, overlap) = best_overlap(&modes, &reference, &grid).unwrap();
        assert!(modes[k].is_bound && overlap > 0.99, "overlap {overlap}");
        let gap = (modes[k].epsilon.re - ground.energy).abs();
        assert!(gap <= 0.5 * ground.energy.abs());
    }
}
