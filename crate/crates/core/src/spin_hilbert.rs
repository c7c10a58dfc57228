//! The spin space of an (electron, positron) pair.
//!
//! Kets are complex 4-vectors over the product basis ordered electron-major:
//!
//! | index | electron | positron |
//! |-------|----------|----------|
//! | 0     | down     | down     |
//! | 1     | down     | up       |
//! | 2     | up       | down     |
//! | 3     | up       | up       |
//!
//! Spin operators are dimensionless (units of hbar, or hbar^2 for
//! `S1.S2`); magnetic-moment operators are in J/T.

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

/// Allowed deviation of a state's squared norm from 1.
pub const NORM_TOL: f64 = 1e-12;
/// Hermiticity tolerance, relative to the largest matrix element.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Largest tolerated imaginary part of an expectation value, relative to the
/// largest matrix element.
pub const IMAG_TOL: f64 = 1e-9;

/// Landé g-factor of a free electron or positron.
pub const G_FACTOR: f64 = 2.0;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinZ {
    Down,
    Up,
}

impl SpinZ {
    pub const ALL: [SpinZ; 2] = [SpinZ::Down, SpinZ::Up];

    /// Eigenvalue of `S_z` in units of hbar.
    pub fn value(self) -> f64 {
        match self {
            SpinZ::Down => -0.5,
            SpinZ::Up => 0.5,
        }
    }

    fn bit(self) -> usize {
        match self {
            SpinZ::Down => 0,
            SpinZ::Up => 1,
        }
    }

    /// Action of `S+` (raise) or `S-` (lower): the resulting state, whose
    /// coefficient is 1 for spin one-half, or `None` if annihilated.
    fn ladder(self, raise: bool) -> Option<SpinZ> {
        match (self, raise) {
            (SpinZ::Down, true) => Some(SpinZ::Up),
            (SpinZ::Up, false) => Some(SpinZ::Down),
            _ => None,
        }
    }
}

/// Position of `|electron, positron>` in the amplitude vector.
pub fn basis_index(electron: SpinZ, positron: SpinZ) -> usize {
    2 * electron.bit() + positron.bit()
}

fn basis_pairs() -> impl Iterator<Item = (SpinZ, SpinZ)> {
    SpinZ::ALL
        .into_iter()
        .flat_map(|e| SpinZ::ALL.into_iter().map(move |p| (e, p)))
}

/// A normalized two-spin ket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinState {
    amps: Vector4<Complex64>,
}

impl TwoSpinState {
    /// Wraps amplitudes that are already normalized to within [`NORM_TOL`].
    pub fn new(amplitudes: [Complex64; 4]) -> Result<Self> {
        let amps = Vector4::from(amplitudes);
        let norm_sqr = amps.norm_squared();
        if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amps })
    }

    /// The product state `|electron>|positron>`.
    pub fn basis(electron: SpinZ, positron: SpinZ) -> Self {
        let mut amps = Vector4::repeat(ZERO);
        amps[basis_index(electron, positron)] = ONE;
        Self { amps }
    }

    /// Normalized linear combination of `terms`.
    ///
    /// If the combination already has unit norm (within [`NORM_TOL`]) the
    /// amplitudes are returned untouched; otherwise they are rescaled.
    pub fn superpose(terms: &[(Complex64, TwoSpinState)]) -> Result<Self> {
        let amps = terms
            .iter()
            .fold(Vector4::repeat(ZERO), |acc, (coeff, state)| acc + state.amps * *coeff);
        let norm_sqr = amps.norm_squared();
        if !(norm_sqr.is_finite() && norm_sqr > 0.0) {
            return Err(Error::DegenerateState);
        }
        if (norm_sqr - 1.0).abs() <= NORM_TOL {
            Ok(Self { amps })
        } else {
            Ok(Self { amps: amps.unscale(norm_sqr.sqrt()) })
        }
    }

    pub fn amplitudes(&self) -> [Complex64; 4] {
        self.amps.into()
    }

    pub fn amplitude(&self, electron: SpinZ, positron: SpinZ) -> Complex64 {
        self.amps[basis_index(electron, positron)]
    }

    /// `<self|ket>`, conjugate-linear in `self`.
    pub fn inner_product(&self, ket: &TwoSpinState) -> Complex64 {
        self.amps.dotc(&ket.amps)
    }

    pub(crate) fn vector(&self) -> &Vector4<Complex64> {
        &self.amps
    }
}

fn max_abs(m: &Matrix4<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// A Hermitian operator on the two-spin space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinOperator {
    matrix: Matrix4<Complex64>,
}

impl SpinOperator {
    /// Accepts `matrix` if it equals its conjugate transpose to within
    /// [`HERMITIAN_TOL`] of its largest element.
    pub fn new(matrix: Matrix4<Complex64>) -> Result<Self> {
        let deviation = max_abs(&(matrix - matrix.adjoint()));
        if !deviation.is_finite() || deviation > HERMITIAN_TOL * max_abs(&matrix) {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self { matrix })
    }

    #[cfg(test)]
    pub(crate) fn new_unchecked(matrix: Matrix4<Complex64>) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.matrix
    }

    /// `<state|op|state>`.
    pub fn expectation(&self, state: &TwoSpinState) -> Result<f64> {
        let value = state.vector().dotc(&(self.matrix * state.vector()));
        if value.im.abs() > IMAG_TOL * max_abs(&self.matrix) {
            return Err(Error::BrokenHermiticity { imag: value.im });
        }
        Ok(value.re)
    }

    /// Frobenius norm of `[self, other]`.
    pub fn commutator_norm(&self, other: &SpinOperator) -> f64 {
        (self.matrix * other.matrix - other.matrix * self.matrix).norm()
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    fn diagonal(f: impl Fn(SpinZ, SpinZ) -> f64) -> Self {
        let mut matrix = Matrix4::repeat(ZERO);
        for (e, p) in basis_pairs() {
            let i = basis_index(e, p);
            matrix[(i, i)] = Complex64::from(f(e, p));
        }
        Self { matrix }
    }

    /// `(S1)_z + (S2)_z`, in units of hbar.
    pub fn total_sz() -> Self {
        Self::diagonal(|e, p| e.value() + p.value())
    }

    /// Total z magnetic moment with g = 2 (J/T).
    pub fn total_mu_z(k: &PhysicalConstants) -> Self {
        Self::total_mu_z_with_g(k, G_FACTOR)
    }

    /// Total z magnetic moment `-g*mu_B*(S1)_z + g*mu_B*(S2)_z` (J/T).
    ///
    /// The electron moment is antiparallel to its spin, the positron moment
    /// parallel.
    pub fn total_mu_z_with_g(k: &PhysicalConstants, g: f64) -> Self {
        let mu_b = k.mu_bohr();
        Self::diagonal(|e, p| -g * mu_b * e.value() + g * mu_b * p.value())
    }

    /// `S1.S2 = S1z S2z + (S1+ S2- + S1- S2+)/2`, in units of hbar^2.
    pub fn s1_dot_s2() -> Self {
        let mut matrix = Matrix4::repeat(ZERO);
        for (e, p) in basis_pairs() {
            let col = basis_index(e, p);
            matrix[(col, col)] += Complex64::from(e.value() * p.value());
            for raise_electron in [true, false] {
                if let (Some(e2), Some(p2)) = (e.ladder(raise_electron), p.ladder(!raise_electron)) {
                    matrix[(basis_index(e2, p2), col)] += Complex64::from(0.5);
                }
            }
        }
        Self { matrix }
    }
}
