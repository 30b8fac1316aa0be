use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::classical::PendulumParams;
use crate::effective::{Drive, PotentialSpec};
use crate::floquet::{omega_grid, FloquetProblem, DEFAULT_CUTOFF};
use crate::numerics::Grid1D;
use crate::resonator::{MirrorModel, ResonatorSpec};
use crate::Kind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Classical,
    Veff,
    Floquet,
    Scan,
    Evolve,
    Resonator,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Classical => "classical",
            Command::Veff => "veff",
            Command::Floquet => "floquet",
            Command::Scan => "scan",
            Command::Evolve => "evolve",
            Command::Resonator => "resonator",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    /// Half-width: nodes span `[-l, l]`.
    #[serde(default = "default_l")]
    pub l: f64,
    #[serde(default = "default_nx")]
    pub nx: usize,
}

fn default_l() -> f64 {
    Grid1D::DEFAULT_HALF_WIDTH
}

fn default_nx() -> usize {
    Grid1D::DEFAULT_POINTS
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            l: default_l(),
            nx: default_nx(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FloquetConfig {
    #[serde(default = "default_cutoff")]
    pub cutoff: usize,
}

fn default_cutoff() -> usize {
    DEFAULT_CUTOFF
}

impl Default for FloquetConfig {
    fn default() -> Self {
        Self {
            cutoff: default_cutoff(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DriveShape {
    #[default]
    Sinusoidal,
    /// Square wave of period `2 pi / omega`.
    SquareWave,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialConfig {
    pub v0: f64,
    pub beta: f64,
    pub kind: Kind,
    pub omega: f64,
    #[serde(default)]
    pub drive: DriveShape,
}

impl PotentialConfig {
    pub fn spec(&self) -> crate::Result<PotentialSpec> {
        let drive = match self.drive {
            DriveShape::Sinusoidal => Drive::Sinusoidal { omega: self.omega },
            DriveShape::SquareWave => Drive::SquareWave {
                period: 2.0 * std::f64::consts::PI / self.omega,
            },
        };
        PotentialSpec::new(self.v0, self.beta, self.kind, drive)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalStart {
    /// `theta(0) = theta0`, taken literally.
    #[default]
    Rest,
    /// `theta0` is the slow component; the fast displacement is added.
    Slow,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassicalConfig {
    pub g: f64,
    pub l: f64,
    /// Signed magnitude; `kind` decides whether it multiplies `1` or `i`.
    pub amplitude: f64,
    pub kind: Kind,
    pub omega: f64,
    pub theta0: f64,
    #[serde(default)]
    pub start: ClassicalStart,
    #[serde(default = "default_classical_periods")]
    pub periods: f64,
    #[serde(default = "default_classical_steps")]
    pub steps_per_period: usize,
}

fn default_classical_periods() -> f64 {
    200.0
}

fn default_classical_steps() -> usize {
    100
}

impl ClassicalConfig {
    pub fn params(&self) -> crate::Result<PendulumParams> {
        PendulumParams::new(self.g, self.l, self.amplitude, self.kind, self.omega)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    #[serde(default = "default_omega_min")]
    pub omega_min: f64,
    #[serde(default = "default_omega_max")]
    pub omega_max: f64,
    #[serde(default = "default_omega_step")]
    pub step: f64,
}

fn default_omega_min() -> f64 {
    2.0
}

fn default_omega_max() -> f64 {
    14.0
}

fn default_omega_step() -> f64 {
    0.25
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            omega_min: default_omega_min(),
            omega_max: default_omega_max(),
            step: default_omega_step(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitialState {
    #[default]
    DeltaWell,
    EffectiveGround,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvolveConfig {
    #[serde(default = "default_evolve_periods")]
    pub periods: usize,
    #[serde(default = "default_evolve_steps")]
    pub steps_per_period: usize,
    #[serde(default)]
    pub initial: InitialState,
}

fn default_evolve_periods() -> usize {
    50
}

fn default_evolve_steps() -> usize {
    200
}

impl Default for EvolveConfig {
    fn default() -> Self {
        Self {
            periods: default_evolve_periods(),
            steps_per_period: default_evolve_steps(),
            initial: InitialState::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResonatorConfig {
    pub d: f64,
    pub k: f64,
    pub mirror: MirrorModel,
}

/// One batch run. Sections a command does not use may still be present; they are validated anyway.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
    #[serde(default = "default_out_dir")]
    pub out_dir: PathBuf,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub floquet: FloquetConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub potential: Option<PotentialConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classical: Option<ClassicalConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evolve: Option<EvolveConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resonator: Option<ResonatorConfig>,
}

fn default_out_dir() -> PathBuf {
    PathBuf::from("out")
}

fn invalid(e: crate::Error) -> CliError {
    CliError::Validation(e.to_string())
}

impl RunConfig {
    pub fn grid(&self) -> Result<Grid1D, CliError> {
        Grid1D::new(self.grid.l, self.grid.nx).map_err(invalid)
    }

    pub fn command(&self) -> Result<Command, CliError> {
        self.command
            .ok_or_else(|| CliError::Validation("no command given".into()))
    }

    pub fn potential_spec(&self) -> Result<PotentialSpec, CliError> {
        self.potential
            .as_ref()
            .ok_or_else(|| CliError::Validation("missing [potential] section".into()))?
            .spec()
            .map_err(invalid)
    }

    pub fn resonator_spec(&self) -> Result<ResonatorSpec, CliError> {
        let r = self
            .resonator
            .as_ref()
            .ok_or_else(|| CliError::Validation("missing [resonator] section".into()))?;
        ResonatorSpec::new(r.d, r.k, r.mirror, self.grid()?).map_err(invalid)
    }

    pub fn pendulum(&self) -> Result<PendulumParams, CliError> {
        self.classical
            .as_ref()
            .ok_or_else(|| CliError::Validation("missing [classical] section".into()))?
            .params()
            .map_err(invalid)
    }

    /// Checks every present section, then the sections the command needs.
    pub fn validate(&self) -> Result<(), CliError> {
        let grid = self.grid()?;
        if self.floquet.cutoff < 1 {
            return Err(CliError::Validation(
                "harmonic cutoff must be at least 1".into(),
            ));
        }
        if self.potential.is_some() {
            self.potential_spec()?;
        }
        if let Some(c) = &self.classical {
            self.pendulum()?;
            if !(c.periods.is_finite() && c.periods > 0.0) {
                return Err(CliError::Validation(format!(
                    "classical periods must be positive, got {}",
                    c.periods
                )));
            }
            if c.steps_per_period < 50 || c.steps_per_period % 2 != 0 {
                return Err(CliError::Validation(format!(
                    "classical steps_per_period must be even and at least 50, got {}",
                    c.steps_per_period
                )));
            }
            if !c.theta0.is_finite() {
                return Err(CliError::Validation("theta0 must be finite".into()));
            }
        }
        if let Some(s) = &self.scan {
            omega_grid(s.omega_min, s.omega_max, s.step).map_err(invalid)?;
        }
        if let Some(e) = &self.evolve {
            if e.steps_per_period < 200 {
                return Err(CliError::Validation(format!(
                    "evolve steps_per_period must be at least 200, got {}",
                    e.steps_per_period
                )));
            }
        }
        if self.resonator.is_some() {
            self.resonator_spec()?;
        }
        let Some(command) = self.command else {
            return Ok(());
        };
        match command {
            Command::Classical => {
                self.pendulum()?;
            }
            Command::Veff | Command::Evolve => {
                self.potential_spec()?;
            }
            Command::Floquet => {
                FloquetProblem::new(self.potential_spec()?, grid, self.floquet.cutoff)
                    .map_err(invalid)?;
            }
            Command::Scan => {
                let spec = self.potential_spec()?;
                let drive = Drive::Sinusoidal {
                    omega: spec.drive.omega(),
                };
                FloquetProblem::new(spec.with_drive(drive), grid, self.floquet.cutoff)
                    .map_err(invalid)?;
            }
            Command::Resonator => {
                self.resonator_spec()?;
            }
        }
        Ok(())
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("run config serializes to TOML")
    }
}

/// Deserializes and validates; defaults are filled in so that [`RunConfig::to_toml`] echoes them.
pub fn parse_config_str(text: &str) -> Result<RunConfig, CliError> {
    let config: RunConfig = toml::from_str(text).map_err(|e| parse_error(text, &e))?;
    config.validate()?;
    Ok(config)
}

pub fn parse_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::ConfigRead {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_config_str(&text)
}

fn parse_error(text: &str, e: &toml::de::Error) -> CliError {
    let (line, column) = match e.span() {
        Some(span) => {
            let before = &text[..span.start.min(text.len())];
            let line = before.matches('\n').count() + 1;
            let column = before.len() - before.rfind('\n').map_or(0, |k| k + 1) + 1;
            (Some(line), Some(column))
        }
        None => (None, None),
    };
    let message = e.message().to_string();
    let key = message
        .split('`')
        .nth(1)
        .filter(|_| message.contains("field"))
        .map(str::to_string);
    CliError::Parse {
        line,
        column,
        key,
        message,
    }
}
