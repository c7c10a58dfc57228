//! Entangled (electron, positron) spin states before and after
//! annihilation, their spin and magnetic-moment expectation values, and the
//! conservation audit across the transition.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::Result;
use crate::photon::Helicity;
use crate::spin_hilbert::{SpinOperator, SpinZ, TwoSpinState};

/// Default absolute tolerance (hbar) for spin conservation; moment
/// conservation uses the same number relative to `2*mu_B`.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// The product eigenstates of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedState {
    /// `|e- down>|e+ down>`
    PhiA,
    /// `|e- up>|e+ up>`
    PhiB,
    /// `|e- down>|e+ up>`, the right-hand photon.
    PhiAPrime,
    /// `|e- up>|e+ down>`, the left-hand photon.
    PhiBPrime,
}

impl NamedState {
    pub const ALL: [NamedState; 4] = [
        NamedState::PhiA,
        NamedState::PhiB,
        NamedState::PhiAPrime,
        NamedState::PhiBPrime,
    ];

    pub fn spins(self) -> (SpinZ, SpinZ) {
        match self {
            NamedState::PhiA => (SpinZ::Down, SpinZ::Down),
            NamedState::PhiB => (SpinZ::Up, SpinZ::Up),
            NamedState::PhiAPrime => (SpinZ::Down, SpinZ::Up),
            NamedState::PhiBPrime => (SpinZ::Up, SpinZ::Down),
        }
    }

    pub fn state(self) -> TwoSpinState {
        let (e, p) = self.spins();
        TwoSpinState::basis(e, p)
    }

    /// Photon helicity carried by the post-annihilation eigenstates. This is
    /// an assignment, not something derived from the spin algebra.
    pub fn helicity(self) -> Option<Helicity> {
        match self {
            NamedState::PhiAPrime => Some(Helicity::Right),
            NamedState::PhiBPrime => Some(Helicity::Left),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedState::PhiA => "phi_a",
            NamedState::PhiB => "phi_b",
            NamedState::PhiAPrime => "phi_a_prime",
            NamedState::PhiBPrime => "phi_b_prime",
        }
    }
}

pub fn named_state(name: NamedState) -> TwoSpinState {
    name.state()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Initial,
    Final,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelativeSign {
    #[default]
    Plus,
    Minus,
}

impl RelativeSign {
    pub fn factor(self) -> f64 {
        match self {
            RelativeSign::Plus => 1.0,
            RelativeSign::Minus => -1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RelativeSign::Plus => "plus",
            RelativeSign::Minus => "minus",
        }
    }
}

impl fmt::Display for RelativeSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelativeSign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(RelativeSign::Plus),
            "minus" | "-" => Ok(RelativeSign::Minus),
            other => Err(format!("unknown sign '{other}', expected plus or minus")),
        }
    }
}

/// An equal-weight entangled pair at one stage of the annihilation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntangledPair {
    pub state: TwoSpinState,
    pub stage: Stage,
    pub relative_sign: RelativeSign,
}

/// Builds `(|a> +/- |b>)/sqrt(2)` where `(a, b)` is `(phi_a, phi_b)` before
/// the collision and `(phi_a', phi_b')` after it.
pub fn build_pair(stage: Stage, relative_sign: RelativeSign) -> EntangledPair {
    let (a, b) = match stage {
        Stage::Initial => (NamedState::PhiA, NamedState::PhiB),
        Stage::Final => (NamedState::PhiAPrime, NamedState::PhiBPrime),
    };
    let h = FRAC_1_SQRT_2;
    let state = TwoSpinState::superpose(&[
        (Complex64::from(h), a.state()),
        (Complex64::from(h * relative_sign.factor()), b.state()),
    ])
    .expect("orthogonal basis states cannot cancel");
    EntangledPair { state, stage, relative_sign }
}

/// `<state| (S1)_z + (S2)_z |state>` in units of hbar.
pub fn spin_expectation(state: &TwoSpinState) -> Result<f64> {
    SpinOperator::total_sz().expectation(state)
}

/// `<state| total mu_z |state>` in J/T.
pub fn moment_expectation(state: &TwoSpinState, k: &PhysicalConstants) -> Result<f64> {
    SpinOperator::total_mu_z(k).expectation(state)
}

/// Heisenberg exchange energy `-2 J <S1.S2>` (J). Positive `exchange` favors
/// parallel spins.
pub fn exchange_energy(exchange: f64, state: &TwoSpinState) -> Result<f64> {
    Ok(-2.0 * exchange * SpinOperator::s1_dot_s2().expectation(state)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConservationReport {
    pub sz_initial: f64,
    pub sz_final: f64,
    pub mu_initial: f64,
    pub mu_final: f64,
    pub spin_conserved: bool,
    pub moment_conserved: bool,
    pub tolerance: f64,
}

/// Runs the transition `Psi_i -> Psi_f` for the chosen signs and checks that
/// total spin and total moment are unchanged.
///
/// Spin is compared with `tolerance` as an absolute bound in hbar; moments
/// with `tolerance * 2 * mu_B`.
pub fn annihilate(
    sign_initial: RelativeSign,
    sign_final: RelativeSign,
    k: &PhysicalConstants,
    tolerance: f64,
) -> Result<ConservationReport> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(crate::error::Error::NonPositive { quantity: "tolerance", value: tolerance });
    }
    let initial = build_pair(Stage::Initial, sign_initial);
    let fin = build_pair(Stage::Final, sign_final);
    let sz_initial = spin_expectation(&initial.state)?;
    let sz_final = spin_expectation(&fin.state)?;
    let mu_initial = moment_expectation(&initial.state, k)?;
    let mu_final = moment_expectation(&fin.state, k)?;
    Ok(ConservationReport {
        sz_initial,
        sz_final,
        mu_initial,
        mu_final,
        spin_conserved: (sz_initial - sz_final).abs() <= tolerance,
        moment_conserved: (mu_initial - mu_final).abs() <= tolerance * 2.0 * k.mu_bohr(),
        tolerance,
    })
}
