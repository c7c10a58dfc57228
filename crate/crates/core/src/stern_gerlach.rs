//! Stern-Gerlach deflection of a photon beam.
//!
//! Model assumptions (none of these come from a derived equation of motion
//! for photons; they are the minimal kinematics consistent with
//! `E = hbar omega`):
//!
//! * the photon carries an effective inertia `m_eff = hbar omega / c^2`;
//! * it crosses the magnet of length `L` at speed `c`, feeling the constant
//!   force `F = mu_z dBz/dz` for `t = L / c`;
//! * it then drifts in a straight line over `D` to the detector plane;
//! * the gradient is uniform over the beam and deflections are small enough
//!   not to change the longitudinal speed.
//!
//! This gives a transverse displacement at the detector of
//! `(e c^2 G / (hbar omega^2)) (L^2/2 + L D)`, positive for right-hand and
//! negative for left-hand helicity. The `omega^-2` scaling is what makes the
//! splitting larger for low-energy photons.

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::photon::{Helicity, Photon};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SgeConfig {
    gradient: f64,
    magnet_length: f64,
    drift_length: f64,
}

impl SgeConfig {
    /// `gradient` is dBz/dz in T/m (any sign), lengths in m.
    pub fn new(gradient: f64, magnet_length: f64, drift_length: f64) -> Result<Self> {
        if !gradient.is_finite() {
            return Err(Error::NonFinite { quantity: "gradient", value: gradient });
        }
        if !(magnet_length.is_finite() && magnet_length > 0.0) {
            return Err(Error::NonPositive { quantity: "magnet_length", value: magnet_length });
        }
        if !(drift_length.is_finite() && drift_length >= 0.0) {
            return Err(Error::NonFinite { quantity: "drift_length", value: drift_length });
        }
        Ok(Self { gradient, magnet_length, drift_length })
    }

    pub fn gradient(&self) -> f64 {
        self.gradient
    }

    pub fn magnet_length(&self) -> f64 {
        self.magnet_length
    }

    pub fn drift_length(&self) -> f64 {
        self.drift_length
    }

    pub fn with_gradient(self, gradient: f64) -> Result<Self> {
        Self::new(gradient, self.magnet_length, self.drift_length)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Deflection {
    pub photon: Photon,
    /// Transverse force inside the magnet (N).
    pub force: f64,
    /// Transverse momentum picked up in the magnet (kg m/s).
    pub transverse_kick: f64,
    /// Signed transverse offset at the detector plane (m).
    pub displacement: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BeamResult {
    pub deflections: Vec<Deflection>,
    /// Spread between the highest and lowest sub-beam at the detector (m).
    pub separation: f64,
}

/// `mu_z dBz/dz` (N).
pub fn force_on(p: &Photon, cfg: &SgeConfig, k: &PhysicalConstants) -> f64 {
    p.magnetic_moment(k) * cfg.gradient
}

pub fn deflect(p: &Photon, cfg: &SgeConfig, k: &PhysicalConstants) -> Deflection {
    let force = force_on(p, cfg, k);
    let (l, d, w) = (cfg.magnet_length, cfg.drift_length, p.omega());
    let lever = 0.5 * l * l + l * d;
    let displacement =
        p.helicity().sign() * k.e * k.c * k.c * cfg.gradient / (k.hbar * w * w) * lever;
    Deflection {
        photon: *p,
        force,
        transverse_kick: force * l / k.c,
        displacement,
    }
}

pub fn simulate_beam(photons: &[Photon], cfg: &SgeConfig, k: &PhysicalConstants) -> Result<BeamResult> {
    if photons.is_empty() {
        return Err(Error::EmptyBeam);
    }
    let deflections: Vec<Deflection> = photons.iter().map(|p| deflect(p, cfg, k)).collect();
    let (lo, hi) = deflections
        .iter()
        .map(|d| d.displacement)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
    Ok(BeamResult { deflections, separation: hi - lo })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub omega: f64,
    pub separation: f64,
}

/// `steps` logarithmically spaced frequencies from `omega_min` to
/// `omega_max` inclusive.
pub fn log_space(omega_min: f64, omega_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(omega_min > 0.0 && omega_min < omega_max && omega_max.is_finite()) {
        return Err(Error::InvalidRange { min: omega_min, max: omega_max });
    }
    if steps < 2 {
        return Err(Error::TooFewSteps(steps));
    }
    let (a, b) = (omega_min.ln(), omega_max.ln());
    let last = steps - 1;
    Ok((0..steps)
        .map(|i| match i {
            0 => omega_min,
            i if i == last => omega_max,
            i => (a + (b - a) * i as f64 / last as f64).exp(),
        })
        .collect())
}

/// Beam separation as a function of frequency.
///
/// With `paired` the beam holds one photon of each helicity and the
/// separation is the gap between the two sub-beams. Without it the beam is
/// right-hand only and the column holds its offset from the undeflected
/// axis. For a non-zero gradient the column is strictly decreasing in
/// `omega`.
pub fn sweep_omega(
    omega_min: f64,
    omega_max: f64,
    steps: usize,
    paired: bool,
    cfg: &SgeConfig,
    k: &PhysicalConstants,
) -> Result<Vec<SweepRow>> {
    log_space(omega_min, omega_max, steps)?
        .into_iter()
        .map(|omega| {
            let rh = Photon::new(omega, Helicity::Right)?;
            let separation = if paired {
                simulate_beam(&[rh, rh.with_helicity(Helicity::Left)], cfg, k)?.separation
            } else {
                deflect(&rh, cfg, k).displacement.abs()
            };
            Ok(SweepRow { omega, separation })
        })
        .collect()
}
