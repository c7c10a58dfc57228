//! Physical constants in SI units.
//!
//! Constants are passed around as a value rather than read from globals so
//! callers (and tests) can swap in synthetic values.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative tolerance for the `h = 2*pi*hbar` consistency check.
const PLANCK_REL_TOL: f64 = 1e-12;

/// Elementary charge, exact in the 2019 SI (C).
pub const CODATA_E: f64 = 1.602_176_634e-19;
/// Planck constant, exact in the 2019 SI (J s).
pub const CODATA_H: f64 = 6.626_070_15e-34;
/// Speed of light in vacuum, exact (m/s).
pub const CODATA_C: f64 = 299_792_458.0;
/// Electron rest mass, CODATA 2018 recommended value (kg).
pub const CODATA_M0: f64 = 9.109_383_701_5e-31;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    /// Elementary charge (C).
    pub e: f64,
    /// Reduced Planck constant (J s).
    pub hbar: f64,
    /// Planck constant (J s).
    pub h: f64,
    /// Electron rest mass (kg).
    pub m0: f64,
    /// Speed of light (m/s).
    pub c: f64,
}

fn positive(quantity: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositive { quantity, value })
    }
}

impl PhysicalConstants {
    /// Validates a full set of constants. `h` must equal `2*pi*hbar` to 1e-12
    /// relative.
    pub fn new(e: f64, hbar: f64, h: f64, m0: f64, c: f64) -> Result<Self> {
        let k = Self {
            e: positive("e", e)?,
            hbar: positive("hbar", hbar)?,
            h: positive("h", h)?,
            m0: positive("m0", m0)?,
            c: positive("c", c)?,
        };
        let two_pi_hbar = 2.0 * PI * hbar;
        if ((h - two_pi_hbar) / h).abs() > PLANCK_REL_TOL {
            return Err(Error::InconsistentPlanck { h, two_pi_hbar });
        }
        Ok(k)
    }

    /// Builds constants from `hbar`, deriving `h = 2*pi*hbar`.
    pub fn from_hbar(e: f64, hbar: f64, m0: f64, c: f64) -> Result<Self> {
        Self::new(e, hbar, 2.0 * PI * hbar, m0, c)
    }

    /// Builds constants from `h`, deriving `hbar = h / (2*pi)`.
    pub fn from_h(e: f64, h: f64, m0: f64, c: f64) -> Result<Self> {
        Self::new(e, h / (2.0 * PI), h, m0, c)
    }

    /// CODATA 2018 values.
    pub fn codata2018() -> Self {
        Self {
            e: CODATA_E,
            hbar: CODATA_H / (2.0 * PI),
            h: CODATA_H,
            m0: CODATA_M0,
            c: CODATA_C,
        }
    }

    /// Bohr magneton `e*hbar / (2*m0)` (J/T).
    pub fn mu_bohr(&self) -> f64 {
        self.e * self.hbar / (2.0 * self.m0)
    }

    /// Magnetic flux quantum `h / e` (T m^2).
    pub fn flux_quantum(&self) -> f64 {
        self.h / self.e
    }

    /// Electron rest energy `m0*c^2` (J).
    pub fn rest_energy(&self) -> f64 {
        self.m0 * self.c * self.c
    }

    /// Angular frequency `E / hbar` of a quantum of energy `energy` (J).
    pub fn omega_from_energy(&self, energy: f64) -> Result<f64> {
        Ok(positive("energy", energy)? / self.hbar)
    }

    /// Energy `hbar*omega` (J) of a quantum of angular frequency `omega`.
    pub fn energy_from_omega(&self, omega: f64) -> Result<f64> {
        Ok(positive("omega", omega)? * self.hbar)
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::codata2018()
    }
}

/// Joules per kiloelectronvolt for the given elementary charge.
pub fn joules_per_kev(k: &PhysicalConstants) -> f64 {
    1e3 * k.e
}
