use std::collections::BTreeMap;
use std::time::Instant;

use num_complex::Complex64;
use serde_json::{json, Value};

use super::output::{
    pretty, write_file, Cell, Provenance, RunManifest, Table, Timings, SCHEMA_VERSION,
};
use super::{ClassicalStart, CliError, Command, InitialState, RunConfig};
use crate::classical::{
    cycle_average, effective_potential_classical, simulate_trajectory, stable_points,
    turning_points, ClassicalState,
};
use crate::effective::{
    bound_states_static, delta_approximation, veff_sinusoidal, veff_square_wave, Drive,
    EffectivePotential, PotentialSpec,
};
use crate::floquet::{
    omega_grid, scan_points, solve_spectrum, threshold_frequency, FloquetProblem,
};
use crate::numerics::Grid1D;
use crate::propagator::evolve;
use crate::resonator::{cavity_modes, round_trip, short_cavity_effective_potential, ModeClass};
use crate::{Error, Kind};

type Results = BTreeMap<String, Value>;

fn numerical(e: Error) -> CliError {
    CliError::Numerical(e)
}

fn effective_for(spec: &PotentialSpec, grid: &Grid1D) -> crate::Result<EffectivePotential> {
    match spec.drive {
        Drive::Sinusoidal { .. } => veff_sinusoidal(spec, grid),
        Drive::SquareWave { .. } => veff_square_wave(spec, grid),
    }
}

fn classical(config: &RunConfig) -> Result<(Vec<Table>, Results), CliError> {
    let c = config.classical.expect("validated");
    let p = config.pendulum()?;
    let init = match c.start {
        ClassicalStart::Rest => ClassicalState::at_rest(c.theta0),
        ClassicalStart::Slow => ClassicalState::slow_start(c.theta0, &p),
    };
    let period = p.period();
    let dt = period / c.steps_per_period as f64;
    let traj = simulate_trajectory(&p, init, c.periods * period, dt).map_err(numerical)?;

    let mut table = Table::new(
        "trajectory",
        &["t", "re_theta", "im_theta", "re_theta_dot", "im_theta_dot"],
    );
    for s in &traj {
        table.push(vec![
            s.t.into(),
            s.theta.re.into(),
            s.theta.im.into(),
            s.theta_dot.re.into(),
            s.theta_dot.im.into(),
        ]);
    }

    let mut results = Results::new();
    let minima = stable_points(&p);
    results.insert("stable_points".into(), json!(minima));
    let tail = &traj[traj.len() / 2..];
    let mean = tail.iter().map(|s| s.theta.re).sum::<f64>() / tail.len() as f64;
    results.insert("final_half_mean_re_theta".into(), json!(mean));
    let averages = cycle_average(&traj, period).map_err(numerical)?;
    if !averages.is_empty() {
        let lo = averages.iter().map(|a| a.1).fold(f64::INFINITY, f64::min);
        let hi = averages
            .iter()
            .map(|a| a.1)
            .fold(f64::NEG_INFINITY, f64::max);
        results.insert("cycle_average_range".into(), json!([lo, hi]));
    }
    let center = minima
        .iter()
        .copied()
        .min_by(|a, b| (a - c.theta0).abs().total_cmp(&(b - c.theta0).abs()));
    let turning = center.and_then(|m| {
        let level = effective_potential_classical(c.theta0, &p).ok()?;
        turning_points(&p, m, level)
    });
    results.insert(
        "turning_points".into(),
        turning.map_or(Value::Null, |(lo, hi)| json!([lo, hi])),
    );
    Ok((vec![table], results))
}

fn veff(config: &RunConfig) -> Result<(Vec<Table>, Results), CliError> {
    let spec = config.potential_spec()?;
    let grid = config.grid()?;
    let v = effective_for(&spec, &grid).map_err(numerical)?;
    let mut table = Table::new("veff", &["x", "v_eff"]);
    for (x, y) in grid.nodes().into_iter().zip(&v.values) {
        table.push(vec![x.into(), (*y).into()]);
    }
    let bound = bound_states_static(&v).map_err(numerical)?;
    let mut results = Results::new();
    results.insert(
        "bound_energies".into(),
        json!(bound.iter().map(|b| b.energy).collect::<Vec<_>>()),
    );
    results.insert(
        "min_v_eff".into(),
        json!(v.values.iter().copied().fold(f64::INFINITY, f64::min)),
    );
    Ok((vec![table], results))
}

fn floquet(config: &RunConfig) -> Result<(Vec<Table>, Results), CliError> {
    let p = FloquetProblem::new(
        config.potential_spec()?,
        config.grid()?,
        config.floquet.cutoff,
    )
    .map_err(numerical)?;
    let s = solve_spectrum(&p).map_err(numerical)?;
    let mut table = Table::new(
        "spectrum",
        &[
            "omega",
            "index",
            "re_eps_folded",
            "im_eps",
            "localization",
            "is_bound",
        ],
    );
    for (k, e) in s.entries.iter().enumerate() {
        table.push(vec![
            s.omega.into(),
            k.into(),
            e.epsilon_folded.re.into(),
            e.epsilon.im.into(),
            e.localization.into(),
            e.is_bound.into(),
        ]);
    }
    let mut results = Results::new();
    results.insert("bound_count".into(), json!(s.bound().count()));
    results.insert(
        "bound_epsilon".into(),
        json!(s
            .bound()
            .map(|e| [e.epsilon_folded.re, e.epsilon_folded.im])
            .collect::<Vec<_>>()),
    );
    results.insert("max_abs_im_eps".into(), json!(s.max_abs_im()));
    results.insert("matrix_norm".into(), json!(s.matrix_norm));
    Ok((vec![table], results))
}

fn scan(config: &RunConfig) -> Result<(Vec<Table>, Results), CliError> {
    let spec = config.potential_spec()?;
    let sc = config.scan.unwrap_or_default();
    let omegas = omega_grid(sc.omega_min, sc.omega_max, sc.step).map_err(numerical)?;
    let points =
        scan_points(&spec, &config.grid()?, config.floquet.cutoff, &omegas).map_err(numerical)?;
    let mut table = Table::new("spectrum_scan", &["omega", "max_abs_im_eps", "bound_count"]);
    for pt in &points {
        table.push(vec![
            pt.omega.into(),
            pt.max_abs_im.into(),
            pt.bound_count.into(),
        ]);
    }
    let omega_th = match threshold_frequency(&points) {
        Ok(w) => json!(w),
        Err(Error::NoTransitionFound) => Value::Null,
        Err(e) => return Err(numerical(e)),
    };
    let mut results = Results::new();
    results.insert("omega_th".into(), omega_th);
    results.insert("points".into(), json!(points.len()));
    Ok((vec![table], results))
}

/// The delta-well profile uses the magnitude of the well strength, so a real drive
/// (repulsive average) starts from the same profile as its imaginary counterpart.
fn initial_state(
    spec: &PotentialSpec,
    grid: &Grid1D,
    initial: InitialState,
) -> crate::Result<Vec<Complex64>> {
    match initial {
        InitialState::DeltaWell => {
            let attractive = PotentialSpec {
                kind: Kind::Imaginary,
                ..*spec
            };
            let well = delta_approximation(&effective_for(&attractive, grid)?)?;
            Ok(well
                .profile(grid)
                .into_iter()
                .map(|v| Complex64::new(v, 0.0))
                .collect())
        }
        InitialState::EffectiveGround => {
            let v = effective_for(spec, grid)?;
            let ground =
                bound_states_static(&v)?
                    .into_iter()
                    .next()
                    .ok_or(Error::InvalidParameter(
                        "effective potential has no bound state".into(),
                    ))?;
            Ok(ground.wavefunction)
        }
    }
}

fn evolution(config: &RunConfig) -> Result<(Vec<Table>, Results), CliError> {
    let spec = config.potential_spec()?;
    let grid = config.grid()?;
    let e = config.evolve.unwrap_or_default();
    let psi0 = initial_state(&spec, &grid, e.initial).map_err(numerical)?;
    let period = spec.drive.period();
    let dt = period / e.steps_per_period as f64;
    let trace = evolve(&spec, &grid, &psi0, e.periods as f64 * period, dt).map_err(numerical)?;
    let mut table = Table::new(
        "evolution",
        &["t", "re_survival", "im_survival", "abs_survival", "norm"],
    );
    for ((t, s), n) in trace.times.iter().zip(&trace.survival).zip(&trace.norms) {
        table.push(vec![
            (*t).into(),
            s.re.into(),
            s.im.into(),
            s.norm().into(),
            (*n).into(),
        ]);
    }
    let mut results = Results::new();
    if let (Some(s), Some(n)) = (trace.survival.last(), trace.norms.last()) {
        results.insert("final_abs_survival".into(), json!(s.norm()));
        results.insert("final_norm".into(), json!(n));
    }
    Ok((vec![table], results))
}

fn resonator(config: &RunConfig) -> Result<(Vec<Table>, Results), CliError> {
    let spec = config.resonator_spec()?;
    let set = cavity_modes(&round_trip(&spec).map_err(numerical)?, &spec).map_err(numerical)?;
    let mut table = Table::new(
        "modes",
        &[
            "index",
            "re_mu",
            "im_mu",
            "abs_eigenvalue",
            "localization",
            "classification",
        ],
    );
    for (k, m) in set.modes.iter().enumerate() {
        let class = match m.class {
            ModeClass::Confined => "confined",
            ModeClass::Leaky => "leaky",
        };
        table.push(vec![
            k.into(),
            m.mu.re.into(),
            m.mu.im.into(),
            m.eigenvalue.norm().into(),
            m.localization.into(),
            Cell::Text(class),
        ]);
    }
    let veff = short_cavity_effective_potential(&spec).map_err(numerical)?;
    let ground = bound_states_static(&veff)
        .map_err(numerical)?
        .first()
        .map(|b| b.energy);
    let mut v = Table::new("veff", &["x", "v_eff"]);
    for (x, y) in spec.grid.nodes().into_iter().zip(&veff.values) {
        v.push(vec![x.into(), (*y).into()]);
    }
    let mut results = Results::new();
    results.insert("confined_count".into(), json!(set.confined().count()));
    results.insert(
        "confined_epsilon".into(),
        json!(set
            .confined()
            .map(|m| [m.epsilon.re, m.epsilon.im])
            .collect::<Vec<_>>()),
    );
    results.insert("effective_ground_energy".into(), json!(ground));
    Ok((vec![table, v], results))
}

/// Runs the configured command and writes its artifacts plus `manifest.json` into `out_dir`.
pub fn run(config: &RunConfig) -> Result<RunManifest, CliError> {
    let start = Instant::now();
    config.validate()?;
    let command = config.command()?;
    let (tables, results) = match command {
        Command::Classical => classical(config)?,
        Command::Veff => veff(config)?,
        Command::Floquet => floquet(config)?,
        Command::Scan => scan(config)?,
        Command::Evolve => evolution(config)?,
        Command::Resonator => resonator(config)?,
    };
    let compute_seconds = start.elapsed().as_secs_f64();

    let dir = &config.out_dir;
    std::fs::create_dir_all(dir).map_err(|e| CliError::Output {
        path: dir.clone(),
        message: e.to_string(),
    })?;
    let mut files = Vec::with_capacity(tables.len());
    for t in &tables {
        let name = t.file_name(config.format);
        write_file(dir, &name, &t.render(config.format))?;
        files.push(name);
    }
    let mut manifest = RunManifest {
        schema_version: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION"),
        command: command.to_string(),
        config: serde_json::to_value(config).expect("run config serializes"),
        files,
        provenance: Provenance {
            l: config.grid.l,
            nx: config.grid.nx,
            cutoff: config.floquet.cutoff,
        },
        results,
        timings: Timings {
            compute_seconds,
            total_seconds: 0.0,
        },
    };
    manifest.timings.total_seconds = start.elapsed().as_secs_f64();
    write_file(dir, RunManifest::FILE_NAME, &pretty(&manifest))?;
    Ok(manifest)
}
