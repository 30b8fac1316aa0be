//! Paraxial Fabry-Perot round trips in one transverse dimension.
//!
//! A round trip alternates the one-way diffraction `exp(D)`, `D = i (d / 2k) d^2/dx^2`,
//! with the mirror actions. Aspherical phase mirrors `exp(i k Delta(x))` reproduce the
//! real square-wave drive; variable-reflectivity mirrors with `R1 R2 = exp(-2 g d)` and
//! uniform gain reproduce the imaginary one.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::effective::{normalize_with_phase, EffectivePotential, Provenance};
use crate::error::{Error, Result};
use crate::numerics::laplacian::KineticStencil;
use crate::numerics::{build_laplacian, eig_dense, expm, ComplexMatrix, Grid1D};

/// Minimum fraction of `|u|^2` inside `|x| <= L/2` for a confined mode.
pub const CONFINED_LOCALIZATION: f64 = 0.99;

/// Confined modes may lose at most this fraction of amplitude per round trip.
pub const MODULUS_TOLERANCE: f64 = 1e-6;

/// Confined modes must keep `<K>` below this fraction of the top of the discrete kinetic band.
///
/// The staggered partner `(-1)^j u(x_j)` of every mode is an exact eigenvector of the
/// discretized round trip; it sits near the top of the band and is a lattice artifact.
pub const RESOLVED_BAND_FRACTION: f64 = 0.5;

/// `amplitude * exp(-beta x^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussianProfile {
    pub amplitude: f64,
    pub beta: f64,
}

impl GaussianProfile {
    pub fn flat() -> Self {
        Self {
            amplitude: 0.0,
            beta: 1.0,
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        self.amplitude * (-self.beta * x * x).exp()
    }

    pub fn derivative(&self, x: f64) -> f64 {
        -2.0 * self.beta * x * self.value(x)
    }

    fn validate(&self, name: &str) -> Result<()> {
        if !self.amplitude.is_finite() || !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "{name}: amplitude must be finite and beta positive, got {self:?}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "model", deny_unknown_fields)]
pub enum MirrorModel {
    /// Perfect reflectors whose surfaces deviate by `Delta_1,2(x)` from flat.
    Phase {
        delta1: GaussianProfile,
        delta2: GaussianProfile,
    },
    /// `ln sqrt(R1(x)) = background - well(x)`; `R2` follows from `R1 R2 = exp(-2 g d)`.
    Reflectivity {
        background: f64,
        well: GaussianProfile,
        gain_length: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResonatorSpec {
    /// Mirror spacing.
    pub d: f64,
    /// Optical wavenumber `2 pi / lambda`.
    pub k: f64,
    pub mirror: MirrorModel,
    pub grid: Grid1D,
}

impl ResonatorSpec {
    pub fn new(d: f64, k: f64, mirror: MirrorModel, grid: Grid1D) -> Result<Self> {
        let s = Self { d, k, mirror, grid };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("d", self.d), ("k", self.k)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        match self.mirror {
            MirrorModel::Phase { delta1, delta2 } => {
                delta1.validate("delta1")?;
                delta2.validate("delta2")
            }
            MirrorModel::Reflectivity {
                background,
                well,
                gain_length,
            } => {
                well.validate("well")?;
                if !background.is_finite() || !gain_length.is_finite() {
                    return Err(Error::InvalidParameter(
                        "reflectivity parameters must be finite".into(),
                    ));
                }
                self.reflectances().map(|_| ())
            }
        }
    }

    /// `d / (2k)`, the coefficient of `i d^2/dx^2` in one pass.
    pub fn diffraction_length(&self) -> f64 {
        self.d / (2.0 * self.k)
    }

    /// Phase delays `W_1,2 = k Delta_1,2` at the nodes.
    pub fn phase_delays(&self) -> Result<(Vec<f64>, Vec<f64>)> {
        let MirrorModel::Phase { delta1, delta2 } = self.mirror else {
            return Err(Error::InvalidParameter(
                "phase delays need the phase mirror model".into(),
            ));
        };
        let nodes = self.grid.nodes();
        Ok((
            nodes.iter().map(|&x| self.k * delta1.value(x)).collect(),
            nodes.iter().map(|&x| self.k * delta2.value(x)).collect(),
        ))
    }

    /// `ln sqrt(R1(x))` at `x`.
    pub fn log_sqrt_r1(&self, x: f64) -> Result<f64> {
        let MirrorModel::Reflectivity {
            background, well, ..
        } = self.mirror
        else {
            return Err(Error::InvalidParameter(
                "reflectances need the reflectivity mirror model".into(),
            ));
        };
        Ok(background - well.value(x))
    }

    /// `(R1, R2)` at the nodes, with `R2 = exp(-2 g d) / R1`.
    pub fn reflectances(&self) -> Result<(Vec<f64>, Vec<f64>)> {
        let MirrorModel::Reflectivity { gain_length, .. } = self.mirror else {
            return Err(Error::InvalidParameter(
                "reflectances need the reflectivity mirror model".into(),
            ));
        };
        let mut r1 = Vec::with_capacity(self.grid.points());
        let mut r2 = Vec::with_capacity(self.grid.points());
        for x in self.grid.nodes() {
            let l1 = self.log_sqrt_r1(x)?;
            let (a, b) = ((2.0 * l1).exp(), (-2.0 * gain_length - 2.0 * l1).exp());
            for value in [a, b] {
                if !(value > 0.0 && value <= 1.0) {
                    return Err(Error::ReflectanceOutOfRange { x, value });
                }
            }
            r1.push(a);
            r2.push(b);
        }
        Ok((r1, r2))
    }
}

/// `exp(D)` with `D = i (d / 2k) d^2/dx^2 = -2 i (d / 2k) K`, `K = -1/2 d^2/dx^2`.
pub fn diffraction_operator(spec: &ResonatorSpec) -> Result<ComplexMatrix> {
    let kappa = spec.diffraction_length();
    expm(&build_laplacian(&spec.grid).scale(Complex64::new(0.0, -2.0 * kappa)))
}

fn phase_diag(w: &[f64], sign: f64) -> Vec<Complex64> {
    w.iter()
        .map(|&v| Complex64::from_polar(1.0, sign * v))
        .collect()
}

/// `exp(D) diag(exp(i W1)) exp(D) diag(exp(i W2))`.
pub fn round_trip_phase(spec: &ResonatorSpec) -> Result<ComplexMatrix> {
    let (w1, w2) = spec.phase_delays()?;
    let e = diffraction_operator(spec)?;
    Ok(e.scale_cols(&phase_diag(&w1, 1.0))
        .matmul(&e.scale_cols(&phase_diag(&w2, 1.0))))
}

/// `exp(D) diag(sqrt R1) exp(D) diag(sqrt R2) exp(g d)`.
pub fn round_trip_reflectivity(spec: &ResonatorSpec) -> Result<ComplexMatrix> {
    let MirrorModel::Reflectivity { gain_length, .. } = spec.mirror else {
        return Err(Error::InvalidParameter(
            "round trip needs the reflectivity mirror model".into(),
        ));
    };
    let (r1, r2) = spec.reflectances()?;
    let e = diffraction_operator(spec)?;
    let s1: Vec<Complex64> = r1.iter().map(|r| Complex64::new(r.sqrt(), 0.0)).collect();
    let s2: Vec<Complex64> = r2
        .iter()
        .map(|r| Complex64::new(r.sqrt() * gain_length.exp(), 0.0))
        .collect();
    Ok(e.scale_cols(&s1).matmul(&e.scale_cols(&s2)))
}

/// `exp(D) diag(exp(i W)) exp(D) diag(exp(-i W))` for a complex `W`.
pub fn round_trip_antisymmetric(spec: &ResonatorSpec, w: &[Complex64]) -> Result<ComplexMatrix> {
    if w.len() != spec.grid.points() {
        return Err(Error::LengthMismatch {
            expected: spec.grid.points(),
            got: w.len(),
        });
    }
    let i = Complex64::new(0.0, 1.0);
    let plus: Vec<Complex64> = w.iter().map(|z| (i * z).exp()).collect();
    let minus: Vec<Complex64> = w.iter().map(|z| (-i * z).exp()).collect();
    let e = diffraction_operator(spec)?;
    Ok(e.scale_cols(&plus).matmul(&e.scale_cols(&minus)))
}

/// The mode seen halfway through the first mirror of the round trip.
///
/// Multiplies `u` by the square root of that mirror's diagonal, which makes the round trip
/// symmetric and puts the profile in the frame of the effective potential.
pub fn mid_mirror_profile(spec: &ResonatorSpec, u: &[Complex64]) -> Result<Vec<Complex64>> {
    if u.len() != spec.grid.points() {
        return Err(Error::LengthMismatch {
            expected: spec.grid.points(),
            got: u.len(),
        });
    }
    let half: Vec<Complex64> = match spec.mirror {
        MirrorModel::Phase { .. } => {
            let (_, w2) = spec.phase_delays()?;
            w2.iter()
                .map(|&v| Complex64::from_polar(1.0, 0.5 * v))
                .collect()
        }
        MirrorModel::Reflectivity { .. } => spec
            .grid
            .nodes()
            .into_iter()
            .map(|x| {
                spec.log_sqrt_r1(x)
                    .map(|l| Complex64::new((-0.5 * l).exp(), 0.0))
            })
            .collect::<Result<_>>()?,
    };
    Ok(u.iter().zip(&half).map(|(a, b)| a * b).collect())
}

/// Round trip of whichever mirror model the spec carries.
pub fn round_trip(spec: &ResonatorSpec) -> Result<ComplexMatrix> {
    match spec.mirror {
        MirrorModel::Phase { .. } => round_trip_phase(spec),
        MirrorModel::Reflectivity { .. } => round_trip_reflectivity(spec),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeClass {
    Confined,
    Leaky,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CavityMode {
    /// `exp(-i mu)`.
    pub eigenvalue: Complex64,
    /// `i ln(eigenvalue)`, principal branch.
    pub mu: Complex64,
    /// Mapped Schrodinger energy `k mu / (2 d)`.
    pub epsilon: Complex64,
    pub profile: Vec<Complex64>,
    pub localization: f64,
    pub class: ModeClass,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CavityModeSet {
    /// Ascending `Re mu`.
    pub modes: Vec<CavityMode>,
}

impl CavityModeSet {
    pub fn confined(&self) -> impl Iterator<Item = &CavityMode> {
        self.modes.iter().filter(|m| m.class == ModeClass::Confined)
    }

    /// Mode with the largest localization.
    pub fn best_localized(&self) -> Option<&CavityMode> {
        self.modes
            .iter()
            .max_by(|a, b| a.localization.total_cmp(&b.localization))
    }
}

pub fn cavity_modes(rt: &ComplexMatrix, spec: &ResonatorSpec) -> Result<CavityModeSet> {
    if rt.dim() != spec.grid.points() {
        return Err(Error::LengthMismatch {
            expected: spec.grid.points(),
            got: rt.dim(),
        });
    }
    let scale = spec.k / (2.0 * spec.d);
    let kinetic = KineticStencil::new(&spec.grid);
    let band_top = 2.0 * kinetic.diagonal;
    let mut modes = Vec::with_capacity(rt.dim());
    for (index, pair) in eig_dense(rt)?.into_iter().enumerate() {
        let modulus = pair.value.norm();
        if modulus < 1e-12 {
            return Err(Error::EigenvalueAtZero { index, modulus });
        }
        let mu = Complex64::new(0.0, 1.0) * pair.value.ln();
        let localization = spec.grid.central_fraction(&pair.vector, |z| z.norm_sqr());
        let kinetic = kinetic.apply(&pair.vector);
        let mean_kinetic = pair
            .vector
            .iter()
            .zip(&kinetic)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            .re;
        let confined = localization > CONFINED_LOCALIZATION
            && modulus >= 1.0 - MODULUS_TOLERANCE
            && mean_kinetic < RESOLVED_BAND_FRACTION * band_top;
        modes.push(CavityMode {
            eigenvalue: pair.value,
            mu,
            epsilon: mu * scale,
            profile: normalize_with_phase(&pair.vector, &spec.grid),
            localization,
            class: if confined {
                ModeClass::Confined
            } else {
                ModeClass::Leaky
            },
        });
    }
    modes.sort_by(|a, b| {
        a.mu.re
            .total_cmp(&b.mu.re)
            .then(a.mu.im.total_cmp(&b.mu.im))
    });
    Ok(CavityModeSet { modes })
}

/// `+(1/8) (W')^2` for phase mirrors (`W = k Delta_1`), `-(1/8) ((ln sqrt R1)')^2` for reflectivity mirrors.
pub fn short_cavity_effective_potential(spec: &ResonatorSpec) -> Result<EffectivePotential> {
    match spec.mirror {
        MirrorModel::Phase { delta1, .. } => {
            EffectivePotential::from_fn(spec.grid.clone(), Provenance::ResonatorPhase, |x| {
                0.125 * (spec.k * delta1.derivative(x)).powi(2)
            })
        }
        MirrorModel::Reflectivity { well, .. } => {
            // d/dx ln sqrt(R1) = -well'(x); the background drops out.
            EffectivePotential::from_fn(spec.grid.clone(), Provenance::ResonatorReflectivity, |x| {
                -0.125 * well.derivative(x).powi(2)
            })
        }
    }
}

/// `d ||u''|| / (2 k ||u||)`: the per-pass diffraction change of `u`.
pub fn short_cavity_parameter(spec: &ResonatorSpec, u: &[Complex64]) -> Result<f64> {
    if u.len() != spec.grid.points() {
        return Err(Error::LengthMismatch {
            expected: spec.grid.points(),
            got: u.len(),
        });
    }
    let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    // K = -1/2 d^2/dx^2, so ||u''|| = 2 ||K u||.
    let uxx = build_laplacian(&spec.grid).apply(u);
    Ok(spec.diffraction_length() * 2.0 * norm(&uxx) / norm(u))
}
