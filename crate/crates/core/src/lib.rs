//! Dynamical (Kapitza) stabilization by rapidly oscillating real and imaginary
//! potentials.
//!
//! - [`classical`]: the vibrating-pivot pendulum with real or imaginary drive.
//! - [`effective`]: high-frequency effective potentials and their static bound states.
//! - [`floquet`]: truncated harmonic expansion and quasi-energy spectra.
//! - [`propagator`]: time-domain evolution and square-wave monodromy.
//! - [`resonator`]: Fabry-Perot round-trip operators with phase or reflectivity mirrors.
//! - [`cli`]: config-driven batch runs that write CSV/JSON artifacts.

pub mod classical;
pub mod cli;
pub mod effective;
pub mod error;
pub mod floquet;
mod kind;
pub mod numerics;
pub mod propagator;
pub mod resonator;

pub use error::{Error, Result};
pub use kind::Kind;
pub use num_complex::Complex64;
