//! Rigid pendulum with a vertically vibrating pivot `y0 = A cos(wt)`.
//!
//! The amplitude `A` may be purely real or purely imaginary. In the imaginary
//! case the angle moves in the complex plane while its cycle average stays on
//! the real axis, trapped near `+-arccos(2gl / (A^2 w^2))`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::rk4_step;
use crate::Kind;

/// Angles beyond this magnitude count as an escaped trajectory.
pub const DIVERGENCE_BOUND: f64 = 1e3;

/// Minimum number of integration steps per drive period.
pub const MIN_STEPS_PER_PERIOD: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PendulumParams {
    pub g: f64,
    pub l: f64,
    /// Complex pivot amplitude; purely real or purely imaginary according to `kind`.
    pub amplitude: Complex64,
    pub kind: Kind,
    pub omega: f64,
}

impl PendulumParams {
    /// `amplitude` is the signed magnitude; the kind supplies the factor `1` or `i`.
    pub fn new(g: f64, l: f64, amplitude: f64, kind: Kind, omega: f64) -> Result<Self> {
        let p = Self {
            g,
            l,
            amplitude: kind.unit() * amplitude,
            kind,
            omega,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )))
            }
        };
        positive("g", self.g)?;
        positive("l", self.l)?;
        positive("omega", self.omega)?;
        let consistent = match self.kind {
            Kind::Real => self.amplitude.im == 0.0,
            Kind::Imaginary => self.amplitude.re == 0.0,
        };
        if !consistent || !self.amplitude.re.is_finite() || !self.amplitude.im.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "amplitude {} is not purely {}",
                self.amplitude,
                self.kind.as_str()
            )));
        }
        Ok(())
    }

    /// `A^2 w^2 / (g l)`; negative for an imaginary drive.
    pub fn drive_strength(&self) -> Complex64 {
        self.amplitude * self.amplitude * self.omega * self.omega / (self.g * self.l)
    }

    pub fn period(&self) -> f64 {
        2.0 * PI / self.omega
    }

    fn is_supercritical(&self) -> bool {
        self.drive_strength().norm() > 2.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalState {
    pub theta: Complex64,
    pub theta_dot: Complex64,
    pub t: f64,
}

impl ClassicalState {
    pub fn at_rest(theta: f64) -> Self {
        Self {
            theta: Complex64::new(theta, 0.0),
            theta_dot: Complex64::new(0.0, 0.0),
            t: 0.0,
        }
    }

    /// Rest state at `t = 0` whose slow component is the real angle `theta_slow`.
    ///
    /// Adds the fast displacement `xi(0) = (A / l) sin(theta_slow)`, so for an
    /// imaginary drive the returned angle is complex.
    pub fn slow_start(theta_slow: f64, p: &PendulumParams) -> Self {
        let xi = p.amplitude / p.l * theta_slow.sin();
        Self {
            theta: Complex64::new(theta_slow, 0.0) + xi,
            ..Self::at_rest(theta_slow)
        }
    }
}

/// `(theta_dot, theta_ddot)` with `theta_ddot = sin(theta) / l * (g - A w^2 cos wt)`.
pub fn eom_rhs(state: &ClassicalState, p: &PendulumParams) -> (Complex64, Complex64) {
    let forcing = p.g - p.amplitude * p.omega * p.omega * (p.omega * state.t).cos();
    (state.theta_dot, state.theta.sin() / p.l * forcing)
}

/// Averaged potential in units of `m g l`: `cos(theta) + A^2 w^2 / (4 g l) sin^2(theta)`.
pub fn effective_potential_classical(theta: f64, p: &PendulumParams) -> Result<f64> {
    let v = Complex64::new(theta.cos(), 0.0) + p.drive_strength() / 4.0 * theta.sin().powi(2);
    if v.im.abs() > 1e-12 {
        return Err(Error::NonRealEffectivePotential { imag: v.im });
    }
    Ok(v.re)
}

/// `dV/dtheta = -sin(theta) (1 + A^2 w^2 / (2 g l) cos(theta))`.
pub fn effective_force_classical(theta: f64, p: &PendulumParams) -> f64 {
    let s = p.drive_strength().re;
    -theta.sin() * (1.0 + 0.5 * s * theta.cos())
}

/// Minima of the averaged potential in `(-pi, pi]`, ascending.
pub fn stable_points(p: &PendulumParams) -> Vec<f64> {
    if !p.is_supercritical() {
        return vec![PI];
    }
    match p.kind {
        Kind::Real => vec![0.0, PI],
        Kind::Imaginary => {
            let theta = (2.0 / p.drive_strength().re).acos();
            vec![-theta, theta]
        }
    }
}

/// RK4 integration of the equation of motion; returns every step including the initial state.
pub fn simulate_trajectory(
    p: &PendulumParams,
    init: ClassicalState,
    t_end: f64,
    dt: f64,
) -> Result<Vec<ClassicalState>> {
    p.validate()?;
    let max_dt = p.period() / MIN_STEPS_PER_PERIOD;
    if !(dt > 0.0 && dt <= max_dt * (1.0 + 1e-12)) {
        return Err(Error::InvalidParameter(format!(
            "dt = {dt} does not resolve the drive; need 0 < dt <= {max_dt}"
        )));
    }
    if !(t_end >= init.t) {
        return Err(Error::InvalidParameter(format!(
            "t_end = {t_end} precedes the initial time"
        )));
    }
    let steps = ((t_end - init.t) / dt).round() as usize;
    let rhs = |t: f64, y: &[Complex64]| {
        let (d0, d1) = eom_rhs(
            &ClassicalState {
                theta: y[0],
                theta_dot: y[1],
                t,
            },
            p,
        );
        vec![d0, d1]
    };
    let mut out = Vec::with_capacity(steps + 1);
    out.push(init);
    let mut y = vec![init.theta, init.theta_dot];
    for k in 0..steps {
        let t = init.t + k as f64 * dt;
        y = rk4_step(&y, t, dt, rhs)?;
        let t_next = init.t + (k + 1) as f64 * dt;
        if y[0].norm() > DIVERGENCE_BOUND {
            return Err(Error::DivergedTrajectory { t: t_next });
        }
        out.push(ClassicalState {
            theta: y[0],
            theta_dot: y[1],
            t: t_next,
        });
    }
    Ok(out)
}

/// Average of `Re theta` over a window of one drive period centred on each sample.
///
/// The samples must be uniform with an even number of steps per period. Only samples
/// whose full window fits are returned, as `(t, average)`.
pub fn cycle_average(trajectory: &[ClassicalState], period: f64) -> Result<Vec<(f64, f64)>> {
    if trajectory.len() < 2 {
        return Ok(Vec::new());
    }
    let dt = trajectory[1].t - trajectory[0].t;
    let ratio = period / dt;
    let m = ratio.round() as usize;
    if m < 2 || m % 2 != 0 || (ratio - m as f64).abs() > 1e-6 * ratio {
        return Err(Error::InvalidParameter(format!(
            "cycle averaging needs an even number of steps per period, got {ratio}"
        )));
    }
    if trajectory.len() <= m {
        return Ok(Vec::new());
    }
    let half = m / 2;
    Ok((half..trajectory.len() - half)
        .map(|c| {
            let w = &trajectory[c - half..=c + half];
            let inner: f64 = w[1..m].iter().map(|s| s.theta.re).sum();
            let avg = (inner + 0.5 * (w[0].theta.re + w[m].theta.re)) / m as f64;
            (trajectory[c].t, avg)
        })
        .collect())
}

/// Points on either side of the minimum `center` where the averaged potential reaches `level`.
pub fn turning_points(p: &PendulumParams, center: f64, level: f64) -> Option<(f64, f64)> {
    let v = |th: f64| effective_potential_classical(th, p).ok().map(|x| x - level);
    let search = |direction: f64| -> Option<f64> {
        let step = 1e-3 * direction;
        let mut a = center;
        if v(a)? > 0.0 {
            return None;
        }
        while (a - center).abs() < PI {
            let b = a + step;
            let fb = v(b)?;
            if fb >= 0.0 {
                let (mut lo, mut hi) = (a, b);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if v(mid)? < 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                return Some(0.5 * (lo + hi));
            }
            a = b;
        }
        None
    };
    Some((search(-1.0)?, search(1.0)?))
}
