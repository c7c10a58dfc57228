//! Intrinsic properties of a photon of given angular frequency and circular
//! helicity: magnetic moment `+/- e c^2 / omega`, quantum flux `+/- h/e` and
//! zero spin z-component.
//!
//! The moment formula comes from rewriting the post-annihilation pair moment
//! `+/- e hbar / m0` with `m0 c^2 = hbar omega`. Applying it at other
//! frequencies is an extrapolation from the annihilation case.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Helicity {
    #[serde(rename = "rh")]
    Right,
    #[serde(rename = "lh")]
    Left,
}

impl Helicity {
    pub const BOTH: [Helicity; 2] = [Helicity::Right, Helicity::Left];

    /// +1 for right-hand, -1 for left-hand.
    pub fn sign(self) -> f64 {
        match self {
            Helicity::Right => 1.0,
            Helicity::Left => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Helicity::Right => Helicity::Left,
            Helicity::Left => Helicity::Right,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Helicity::Right => "rh",
            Helicity::Left => "lh",
        }
    }
}

impl fmt::Display for Helicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Helicity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "rh" => Ok(Helicity::Right),
            "lh" => Ok(Helicity::Left),
            other => Err(format!("unknown helicity '{other}', expected rh or lh")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Photon {
    omega: f64,
    helicity: Helicity,
}

impl Photon {
    pub fn new(omega: f64, helicity: Helicity) -> Result<Self> {
        if omega.is_finite() && omega > 0.0 {
            Ok(Self { omega, helicity })
        } else {
            Err(Error::NonPositive { quantity: "omega", value: omega })
        }
    }

    pub fn from_energy(energy: f64, helicity: Helicity, k: &PhysicalConstants) -> Result<Self> {
        Self::new(k.omega_from_energy(energy)?, helicity)
    }

    /// One of the two photons from pair annihilation at rest, `hbar omega = m0 c^2`.
    pub fn annihilation(helicity: Helicity, k: &PhysicalConstants) -> Self {
        Self { omega: k.rest_energy() / k.hbar, helicity }
    }

    /// Angular frequency (rad/s).
    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn helicity(&self) -> Helicity {
        self.helicity
    }

    pub fn with_helicity(self, helicity: Helicity) -> Self {
        Self { helicity, ..self }
    }

    /// `hbar omega` (J).
    pub fn energy(&self, k: &PhysicalConstants) -> f64 {
        k.hbar * self.omega
    }

    /// `omega / c` (1/m).
    pub fn wavenumber(&self, k: &PhysicalConstants) -> f64 {
        self.omega / k.c
    }

    /// `2 pi c / omega` (m).
    pub fn wavelength(&self, k: &PhysicalConstants) -> f64 {
        2.0 * std::f64::consts::PI * k.c / self.omega
    }

    /// `+e c^2 / omega` for right-hand, `-e c^2 / omega` for left-hand (J/T).
    pub fn magnetic_moment(&self, k: &PhysicalConstants) -> f64 {
        self.helicity.sign() * k.e * k.c * k.c / self.omega
    }

    /// Spin z-component in units of hbar; zero for either helicity.
    pub fn spin_z(&self) -> f64 {
        0.0
    }

    /// `+h/e` for right-hand, `-h/e` for left-hand (T m^2).
    pub fn quantum_flux(&self, k: &PhysicalConstants) -> f64 {
        self.helicity.sign() * k.flux_quantum()
    }
}

pub fn annihilation_photon(helicity: Helicity, k: &PhysicalConstants) -> Photon {
    Photon::annihilation(helicity, k)
}
