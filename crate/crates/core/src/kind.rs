use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Whether an oscillating amplitude is purely real or purely imaginary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Real,
    Imaginary,
}

impl Kind {
    /// `1` or `i`.
    pub fn unit(self) -> Complex64 {
        match self {
            Kind::Real => Complex64::new(1.0, 0.0),
            Kind::Imaginary => Complex64::new(0.0, 1.0),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Real => "real",
            Kind::Imaginary => "imaginary",
        }
    }
}
