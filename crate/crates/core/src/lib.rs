//! Two-spin quantum calculations for electron-positron annihilation.
//!
//! * [`constants`]: SI physical constants, Bohr magneton and flux quantum.
//! * [`spin_hilbert`]: kets and Hermitian operators on the (e-, e+) spin space.
//! * [`annihilation`]: entangled pair states, expectation values and the
//!   conservation audit across annihilation.
//! * [`photon`]: magnetic moment, flux and spin of a circularly polarized photon.
//! * [`stern_gerlach`]: deflection of a photon beam in a field gradient.
//! * [`cli`] and [`output`]: the `gammaspin` command-line tool.

pub mod annihilation;
pub mod cli;
pub mod constants;
pub mod error;
pub mod output;
pub mod photon;
pub mod spin_hilbert;
pub mod stern_gerlach;

pub use annihilation::{
    annihilate, build_pair, exchange_energy, moment_expectation, named_state, spin_expectation,
    ConservationReport, EntangledPair, NamedState, RelativeSign, Stage,
};
pub use constants::PhysicalConstants;
pub use error::{Error, Result};
pub use photon::{annihilation_photon, Helicity, Photon};
pub use spin_hilbert::{basis_index, SpinOperator, SpinZ, TwoSpinState};
pub use stern_gerlach::{deflect, force_on, simulate_beam, sweep_omega, BeamResult, Deflection, SgeConfig, SweepRow};
