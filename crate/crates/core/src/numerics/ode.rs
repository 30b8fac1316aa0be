use num_complex::Complex64;

use crate::error::{Error, Result};

/// One classical Runge-Kutta step for `y' = rhs(t, y)` with complex state.
pub fn rk4_step<F>(state: &[Complex64], t: f64, dt: f64, rhs: F) -> Result<Vec<Complex64>>
where
    F: Fn(f64, &[Complex64]) -> Vec<Complex64>,
{
    if !(dt > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "step must be positive, got {dt}"
        )));
    }
    if !all_finite(state) {
        return Err(Error::DivergedTrajectory { t });
    }
    let shifted = |k: &[Complex64], s: f64| -> Vec<Complex64> {
        state.iter().zip(k).map(|(y, k)| y + k * s).collect()
    };
    let k1 = rhs(t, state);
    let k2 = rhs(t + 0.5 * dt, &shifted(&k1, 0.5 * dt));
    let k3 = rhs(t + 0.5 * dt, &shifted(&k2, 0.5 * dt));
    let k4 = rhs(t + dt, &shifted(&k3, dt));
    let next: Vec<Complex64> = (0..state.len())
        .map(|i| state[i] + (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (dt / 6.0))
        .collect();
    if !all_finite(&next) {
        return Err(Error::DivergedTrajectory { t: t + dt });
    }
    Ok(next)
}

fn all_finite(v: &[Complex64]) -> bool {
    v.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}
