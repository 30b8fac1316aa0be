//! High-frequency effective potentials for a Gaussian drive profile and their
//! static bound states.
//!
//! For `W(x) = V0 exp(-beta x^2)` (times `i` for the imaginary kind) the averaged
//! dynamics see `V_eff = c (dW/dx)^2`, with `c = 1 / (4 w^2)` for a sinusoidal drive
//! and `c = T^2 / 96` for a square wave. Squaring an imaginary derivative flips the
//! sign, so an imaginary drive produces a well where a real drive produces a barrier.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::laplacian::central_derivative;
use crate::numerics::{build_laplacian, eig_hermitian, integrate_trapezoid, ComplexMatrix, Grid1D};
use crate::Kind;

/// Minimum fraction of `|psi|^2` inside `|x| <= L/2` for a state to count as bound.
pub const BOUND_LOCALIZATION: f64 = 0.65;

/// Time dependence of the oscillating potential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "shape")]
pub enum Drive {
    /// `W(x) cos(w t)`.
    Sinusoidal { omega: f64 },
    /// `+W(x)` for the first half period, `-W(x)` for the second.
    SquareWave { period: f64 },
}

impl Drive {
    pub fn period(&self) -> f64 {
        match *self {
            Drive::Sinusoidal { omega } => 2.0 * PI / omega,
            Drive::SquareWave { period } => period,
        }
    }

    pub fn omega(&self) -> f64 {
        2.0 * PI / self.period()
    }
}

/// Gaussian profile `W(x) = u V0 exp(-beta x^2)` with `u = 1` or `i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub v0: f64,
    pub beta: f64,
    pub kind: Kind,
    pub drive: Drive,
}

impl PotentialSpec {
    pub fn new(v0: f64, beta: f64, kind: Kind, drive: Drive) -> Result<Self> {
        let s = Self {
            v0,
            beta,
            kind,
            drive,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn sinusoidal(v0: f64, beta: f64, kind: Kind, omega: f64) -> Result<Self> {
        Self::new(v0, beta, kind, Drive::Sinusoidal { omega })
    }

    pub fn square_wave(v0: f64, beta: f64, kind: Kind, period: f64) -> Result<Self> {
        Self::new(v0, beta, kind, Drive::SquareWave { period })
    }

    /// `V0 = 0` is accepted as the undriven limit.
    pub fn validate(&self) -> Result<()> {
        if !(self.v0.is_finite() && self.v0 >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "v0 must be non-negative, got {}",
                self.v0
            )));
        }
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "beta must be positive, got {}",
                self.beta
            )));
        }
        let (name, value) = match self.drive {
            Drive::Sinusoidal { omega } => ("omega", omega),
            Drive::SquareWave { period } => ("period", period),
        };
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "{name} must be positive, got {value}"
            )));
        }
        Ok(())
    }

    pub fn w(&self, x: f64) -> Complex64 {
        self.kind.unit() * (self.v0 * (-self.beta * x * x).exp())
    }

    pub fn dw_dx(&self, x: f64) -> Complex64 {
        self.w(x) * (-2.0 * self.beta * x)
    }

    pub fn d2w_dx2(&self, x: f64) -> Complex64 {
        self.w(x) * (4.0 * self.beta * self.beta * x * x - 2.0 * self.beta)
    }

    pub fn w_on(&self, grid: &Grid1D) -> Vec<Complex64> {
        grid.nodes().into_iter().map(|x| self.w(x)).collect()
    }

    /// Same profile with the other drive shape.
    pub fn with_drive(&self, drive: Drive) -> Self {
        Self { drive, ..*self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    SinusoidalAvg,
    SquareWaveAvg,
    ResonatorPhase,
    ResonatorReflectivity,
    DeltaApprox,
    /// Tabulated by the caller.
    Custom,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EffectivePotential {
    pub grid: Grid1D,
    pub values: Vec<f64>,
    pub provenance: Provenance,
}

impl EffectivePotential {
    pub fn new(grid: Grid1D, values: Vec<f64>, provenance: Provenance) -> Result<Self> {
        if values.len() != grid.points() {
            return Err(Error::LengthMismatch {
                expected: grid.points(),
                got: values.len(),
            });
        }
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "effective potential is not finite at x = {}",
                grid.node(j)
            )));
        }
        Ok(Self {
            grid,
            values,
            provenance,
        })
    }

    pub fn from_fn(grid: Grid1D, provenance: Provenance, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.nodes().into_iter().map(f).collect();
        Self::new(grid, values, provenance)
    }

    /// `-1/2 d^2/dx^2 + V_eff` on the grid.
    pub fn hamiltonian(&self) -> ComplexMatrix {
        let mut h = build_laplacian(&self.grid);
        for (j, &v) in self.values.iter().enumerate() {
            h[(j, j)] += v;
        }
        h
    }
}

/// `c (dW/dx)^2` at each node; the square is taken in the complex sense and must be real.
fn averaged(
    spec: &PotentialSpec,
    grid: &Grid1D,
    c: f64,
    provenance: Provenance,
) -> Result<EffectivePotential> {
    let values = grid
        .nodes()
        .into_iter()
        .map(|x| {
            let d = spec.dw_dx(x);
            (d * d).re * c
        })
        .collect();
    EffectivePotential::new(grid.clone(), values, provenance)
}

/// `(1 / (4 w^2)) (dW/dx)^2`.
pub fn veff_sinusoidal(spec: &PotentialSpec, grid: &Grid1D) -> Result<EffectivePotential> {
    spec.validate()?;
    let Drive::Sinusoidal { omega } = spec.drive else {
        return Err(Error::InvalidParameter(
            "sinusoidal average needs a sinusoidal drive".into(),
        ));
    };
    averaged(
        spec,
        grid,
        1.0 / (4.0 * omega * omega),
        Provenance::SinusoidalAvg,
    )
}

/// `(T^2 / 96) (dW/dx)^2`.
pub fn veff_square_wave(spec: &PotentialSpec, grid: &Grid1D) -> Result<EffectivePotential> {
    spec.validate()?;
    let Drive::SquareWave { period } = spec.drive else {
        return Err(Error::InvalidParameter(
            "square-wave average needs a square-wave drive".into(),
        ));
    };
    averaged(
        spec,
        grid,
        period * period / 96.0,
        Provenance::SquareWaveAvg,
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub energy: f64,
    /// Normalized so that `sum |psi_j|^2 h = 1`; largest component real positive.
    pub wavefunction: Vec<Complex64>,
    pub localization: f64,
}

/// Scales `v` to unit norm with the grid measure and rotates its largest component onto the positive real axis.
pub fn normalize_with_phase(v: &[Complex64], grid: &Grid1D) -> Vec<Complex64> {
    let norm = (v.iter().map(|z| z.norm_sqr()).sum::<f64>() * grid.spacing()).sqrt();
    let peak = v
        .iter()
        .copied()
        .max_by(|a, b| a.norm_sqr().total_cmp(&b.norm_sqr()))
        .unwrap_or(Complex64::new(1.0, 0.0));
    let phase = if peak.norm() > 0.0 {
        peak.conj() / peak.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    v.iter().map(|z| z * phase / norm).collect()
}

/// All eigenstates of `-1/2 d^2/dx^2 + V_eff`, ascending in energy.
pub fn static_spectrum(veff: &EffectivePotential) -> Result<Vec<BoundState>> {
    let pairs = eig_hermitian(&veff.hamiltonian())?;
    Ok(pairs
        .into_iter()
        .map(|p| {
            let localization = veff.grid.central_fraction(&p.vector, |z| z.norm_sqr());
            BoundState {
                energy: p.value.re,
                wavefunction: normalize_with_phase(&p.vector, &veff.grid),
                localization,
            }
        })
        .collect())
}

/// Negative-energy, localized eigenstates of `-1/2 d^2/dx^2 + V_eff`, ascending in energy.
pub fn bound_states_static(veff: &EffectivePotential) -> Result<Vec<BoundState>> {
    Ok(static_spectrum(veff)?
        .into_iter()
        .filter(|s| s.energy < 0.0 && s.localization > BOUND_LOCALIZATION)
        .collect())
}

/// Zero-range approximation `alpha delta(x)` of a shallow well.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaWell {
    pub alpha: f64,
    pub mu: f64,
    pub energy: f64,
}

impl DeltaWell {
    pub fn from_alpha(alpha: f64) -> Result<Self> {
        if !(alpha < 0.0) {
            return Err(Error::NoBoundState { alpha });
        }
        let mu = -alpha;
        Ok(Self {
            alpha,
            mu,
            energy: -0.5 * mu * mu,
        })
    }

    /// `sqrt(mu) exp(-mu |x|)`, unit norm on the whole line.
    pub fn profile(&self, grid: &Grid1D) -> Vec<f64> {
        grid.nodes()
            .into_iter()
            .map(|x| self.mu.sqrt() * (-self.mu * x.abs()).exp())
            .collect()
    }
}

/// Well strength `alpha = integral of V_eff` by the trapezoidal rule.
pub fn delta_approximation(veff: &EffectivePotential) -> Result<DeltaWell> {
    DeltaWell::from_alpha(integrate_trapezoid(&veff.values, &veff.grid)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GaugeDirection {
    /// `y = u exp(-i (T/4) W)`.
    Forward,
    /// `u = y exp(+i (T/4) W)`.
    Inverse,
}

/// Pointwise gauge factor linking the first-order square-wave equation to the Schrodinger form.
pub fn gauge_transform(
    u: &[Complex64],
    spec: &PotentialSpec,
    grid: &Grid1D,
    direction: GaugeDirection,
) -> Result<Vec<Complex64>> {
    let Drive::SquareWave { period } = spec.drive else {
        return Err(Error::InvalidParameter(
            "gauge transform needs a square-wave drive".into(),
        ));
    };
    if u.len() != grid.points() {
        return Err(Error::LengthMismatch {
            expected: grid.points(),
            got: u.len(),
        });
    }
    let sign = match direction {
        GaugeDirection::Forward => -1.0,
        GaugeDirection::Inverse => 1.0,
    };
    let i = Complex64::new(0.0, 1.0);
    Ok(u.iter()
        .zip(grid.nodes())
        .map(|(z, x)| z * (i * sign * period / 4.0 * spec.w(x)).exp())
        .collect())
}

/// `-1/2 u'' + i (T/8) (W'' u + 2 W' u') + (T^2/24) W'^2 u` applied to `u`.
///
/// This is the square-wave quasi-energy equation to second order in `T`, before the gauge change.
pub fn apply_high_frequency_operator(
    u: &[Complex64],
    spec: &PotentialSpec,
    grid: &Grid1D,
) -> Result<Vec<Complex64>> {
    let Drive::SquareWave { period } = spec.drive else {
        return Err(Error::InvalidParameter(
            "operator needs a square-wave drive".into(),
        ));
    };
    if u.len() != grid.points() {
        return Err(Error::LengthMismatch {
            expected: grid.points(),
            got: u.len(),
        });
    }
    let kinetic = build_laplacian(grid).apply(u);
    let du = central_derivative(u, grid.spacing());
    let i = Complex64::new(0.0, 1.0);
    Ok(grid
        .nodes()
        .into_iter()
        .enumerate()
        .map(|(j, x)| {
            let w1 = spec.dw_dx(x);
            let w2 = spec.d2w_dx2(x);
            kinetic[j]
                + i * (period / 8.0) * (w2 * u[j] + 2.0 * w1 * du[j])
                + period * period / 24.0 * w1 * w1 * u[j]
        })
        .collect())
}

/// `|| |a| - |b| ||` after normalizing both to unit norm with the grid measure.
pub fn amplitude_distance(a: &[Complex64], b: &[Complex64], grid: &Grid1D) -> f64 {
    let h = grid.spacing();
    let norm = |v: &[Complex64]| (v.iter().map(|z| z.norm_sqr()).sum::<f64>() * h).sqrt();
    let (na, nb) = (norm(a), norm(b));
    (a.iter()
        .zip(b)
        .map(|(x, y)| (x.norm() / na - y.norm() / nb).powi(2))
        .sum::<f64>()
        * h)
        .sqrt()
}
